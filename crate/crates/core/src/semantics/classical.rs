//! Classical truth tables for sequents, with `∨`.

use thiserror::Error;

use super::bits::{blocks, row_mask, BlockEval, ImpReading};
use crate::syntax::Sequent;

pub const DEFAULT_VAR_CAP: usize = 20;

/// Hard limit for explicit tables.
pub const TABLE_VAR_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{found} variables exceed the truth-table cap of {cap}")]
pub struct TooManyVariables {
    pub found: usize,
    pub cap: usize,
}

/// Variables of a sequent in sorted order; the column order of its tables.
pub fn table_variables(sequent: &Sequent) -> Vec<&'static str> {
    let mut v = sequent.variables();
    v.sort_unstable();
    v
}

/// The truth table of `∧Γ → φ` over `vars` (which must cover the sequent),
/// packed 64 rows per word. Rows beyond `2^k` are zero.
pub fn sequent_truth_table(
    sequent: &Sequent,
    vars: &[&'static str],
) -> Result<Vec<u64>, TooManyVariables> {
    if vars.len() > TABLE_VAR_CAP {
        return Err(TooManyVariables {
            found: vars.len(),
            cap: TABLE_VAR_CAP,
        });
    }
    let mask = row_mask(vars.len());
    Ok((0..blocks(vars.len()))
        .map(|b| {
            BlockEval::new(vars, b, ImpReading::Classical)
                .sequent(sequent.antecedents(), sequent.consequent())
                & mask
        })
        .collect())
}

/// Classical validity with the default variable cap.
pub fn decide_cl_truthtable(sequent: &Sequent) -> Result<bool, TooManyVariables> {
    decide_cl_truthtable_capped(sequent, DEFAULT_VAR_CAP)
}

pub fn decide_cl_truthtable_capped(
    sequent: &Sequent,
    cap: usize,
) -> Result<bool, TooManyVariables> {
    let vars = table_variables(sequent);
    if vars.len() > cap {
        return Err(TooManyVariables {
            found: vars.len(),
            cap,
        });
    }
    let mask = row_mask(vars.len());
    Ok((0..blocks(vars.len())).all(|b| {
        BlockEval::new(&vars, b, ImpReading::Classical)
            .sequent(sequent.antecedents(), sequent.consequent())
            & mask
            == mask
    }))
}

/// The first row (in table order) falsifying the sequent, as variable
/// values, or `None` if the sequent is classically valid.
pub fn cl_falsifying_assignment(
    sequent: &Sequent,
) -> Result<Option<Vec<(&'static str, bool)>>, TooManyVariables> {
    let vars = table_variables(sequent);
    if vars.len() > DEFAULT_VAR_CAP {
        return Err(TooManyVariables {
            found: vars.len(),
            cap: DEFAULT_VAR_CAP,
        });
    }
    let table = sequent_truth_table(sequent, &vars)?;
    let mask = row_mask(vars.len());
    for (b, word) in table.iter().enumerate() {
        let missing = !word & mask;
        if missing != 0 {
            let row = b * 64 + missing.trailing_zeros() as usize;
            return Ok(Some(
                vars.iter()
                    .enumerate()
                    .map(|(i, &v)| (v, row >> i & 1 == 1))
                    .collect(),
            ));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    fn cl(s: &str) -> bool {
        decide_cl_truthtable(&parse_sequent(s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(!cl("x1 -> x2 |- x2"));
        assert!(cl("bot |- y"));
        assert!(cl("|- x | (x -> bot)"));
        assert!(cl("|- ((x -> y) -> x) -> x"));
        assert!(!cl("|- x"));
        assert!(cl("|- top"));
        assert!(!cl("|- bot"));
    }

    #[test]
    fn falsifying_rows() {
        let s = parse_sequent("x1 -> x2 |- x2").unwrap();
        assert_eq!(
            cl_falsifying_assignment(&s).unwrap(),
            Some(vec![("x1", false), ("x2", false)])
        );
        let s = parse_sequent("x & y -> z, x |- y -> z").unwrap();
        assert_eq!(cl_falsifying_assignment(&s).unwrap(), None);
        let s = parse_sequent("|- x | y -> x").unwrap();
        assert_eq!(
            cl_falsifying_assignment(&s).unwrap(),
            Some(vec![("x", false), ("y", true)])
        );
    }

    #[test]
    fn many_variables() {
        let vars: Vec<String> = (0..9).map(|i| format!("v{i}")).collect();
        let conj = vars.join(" & ");
        assert!(cl(&format!("{conj} |- v8 & v0")));
        assert!(!cl(&format!("v0 | v1 |- {conj}")));
        let big: Vec<String> = (0..21).map(|i| format!("w{i}")).collect();
        assert!(
            decide_cl_truthtable(&parse_sequent(&format!("|- {}", big.join(" & "))).unwrap())
                .is_err()
        );
    }

    #[test]
    fn tables_compare_rows() {
        let a = parse_sequent("|- x | y").unwrap();
        let b = parse_sequent("|- (x -> bot) -> (y -> bot) -> bot").unwrap();
        let vars = table_variables(&a);
        assert_eq!(
            sequent_truth_table(&a, &vars).unwrap(),
            sequent_truth_table(&b, &vars).unwrap()
        );
        assert_eq!(sequent_truth_table(&a, &vars).unwrap(), vec![0b1110]);
    }
}
