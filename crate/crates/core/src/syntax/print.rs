use std::cmp::Ordering;
use std::fmt::{self, Write};

use super::formula::{Formula, Kind};

// Binding strength: & binds tightest, then |, then ->.
fn precedence(f: Formula) -> u8 {
    match f.kind() {
        Kind::Imp(..) => 1,
        Kind::Or(..) => 2,
        Kind::And(..) => 3,
        _ => 4,
    }
}

fn write_formula(f: Formula, out: &mut impl Write) -> fmt::Result {
    match f.kind() {
        Kind::Var(name) => out.write_str(name),
        Kind::Top => out.write_str("top"),
        Kind::Bot => out.write_str("bot"),
        // -> is right-associative: only a left operand that is itself an
        // implication needs parentheses.
        Kind::Imp(a, b) => {
            write_operand(a, precedence(a) <= 1, out)?;
            out.write_str(" -> ")?;
            write_operand(b, false, out)
        }
        // | and & chains are left-associative.
        Kind::Or(a, b) => {
            write_operand(a, precedence(a) < 2, out)?;
            out.write_str(" | ")?;
            write_operand(b, precedence(b) <= 2, out)
        }
        Kind::And(a, b) => {
            write_operand(a, precedence(a) < 3, out)?;
            out.write_str(" & ")?;
            write_operand(b, precedence(b) <= 3, out)
        }
    }
}

fn write_operand(f: Formula, parens: bool, out: &mut impl Write) -> fmt::Result {
    if parens {
        out.write_char('(')?;
        write_formula(f, out)?;
        out.write_char(')')
    } else {
        write_formula(f, out)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(*self, f)
    }
}

/// Run-independent total order: printed form first, interned id as tiebreak.
pub fn canonical_cmp(a: Formula, b: Formula) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    a.to_string()
        .cmp(&b.to_string())
        .then_with(|| a.id().cmp(&b.id()))
}

/// Sorts formulas in canonical order, computing each printed form once.
pub fn sort_canonical(formulas: &mut [Formula]) {
    let mut keyed: Vec<(String, Formula)> = formulas.iter().map(|f| (f.to_string(), *f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.id().cmp(&b.1.id())));
    for (slot, (_, f)) in formulas.iter_mut().zip(keyed) {
        *slot = f;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    #[test]
    fn minimal_parentheses() {
        let (a, b, c) = (v("a"), v("b"), v("c"));
        assert_eq!(
            Formula::imp(a, Formula::imp(b, c)).to_string(),
            "a -> b -> c"
        );
        assert_eq!(
            Formula::imp(Formula::imp(a, b), c).to_string(),
            "(a -> b) -> c"
        );
        assert_eq!(Formula::and(Formula::and(a, b), c).to_string(), "a & b & c");
        assert_eq!(
            Formula::and(a, Formula::and(b, c)).to_string(),
            "a & (b & c)"
        );
        assert_eq!(Formula::or(Formula::and(a, b), c).to_string(), "a & b | c");
        assert_eq!(
            Formula::and(Formula::or(a, b), c).to_string(),
            "(a | b) & c"
        );
        assert_eq!(
            Formula::imp(Formula::or(a, b), Formula::and(b, c)).to_string(),
            "a | b -> b & c"
        );
        assert_eq!(
            Formula::or(a, Formula::imp(b, c)).to_string(),
            "a | (b -> c)"
        );
        assert_eq!(
            Formula::and(Formula::top(), Formula::bot()).to_string(),
            "top & bot"
        );
    }

    #[test]
    fn canonical_sort_is_by_text() {
        let mut fs = vec![
            v("b"),
            Formula::imp(Formula::bot(), v("x")),
            Formula::bot(),
            v("a"),
        ];
        sort_canonical(&mut fs);
        let printed: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
        assert_eq!(printed, ["a", "b", "bot", "bot -> x"]);
    }
}
