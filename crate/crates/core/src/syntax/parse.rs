//! Recursive-descent parser for the text grammar
//!
//! ```text
//! formula := orExpr ('->' formula)?
//! orExpr  := andExpr ('|' andExpr)*
//! andExpr := atom ('&' atom)*
//! atom    := IDENT | 'top' | 'bot' | '(' formula ')'
//! sequent := (formula (',' formula)*)? '|-' formula
//! ```

use thiserror::Error;

use super::formula::Formula;
use super::sequent::Sequent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {pos}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Top,
    Bot,
    LParen,
    RParen,
    Arrow,
    Bar,
    Amp,
    Comma,
    Turnstile,
    End,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'&' => {
                i += 1;
                Tok::Amp
            }
            b',' => {
                i += 1;
                Tok::Comma
            }
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                i += 2;
                Tok::Turnstile
            }
            b'|' => {
                i += 1;
                Tok::Bar
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                match &text[start..i] {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    ident => Tok::Ident(ident),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    pos: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Tok<'a> {
        self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok<'a> {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            pos: self.pos(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.or_expr()?;
        if self.peek() == Tok::Arrow {
            self.bump();
            let right = self.formula()?;
            Ok(Formula::imp(left, right))
        } else {
            Ok(left)
        }
    }

    fn or_expr(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and_expr()?;
        while self.peek() == Tok::Bar {
            self.bump();
            let rhs = self.and_expr()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and_expr(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.atom()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::var(name))
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::bot())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a formula")),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let toks = tokenize(text)?;
    if !toks.iter().any(|(_, t)| *t == Tok::Turnstile) {
        return Err(ParseError {
            pos: text.len(),
            message: "missing turnstile `|-`".into(),
        });
    }
    let mut p = Parser { toks, at: 0 };
    let mut antecedents = Vec::new();
    if p.peek() != Tok::Turnstile {
        antecedents.push(p.formula()?);
        while p.peek() == Tok::Comma {
            p.bump();
            antecedents.push(p.formula()?);
        }
    }
    if p.peek() != Tok::Turnstile {
        return Err(p.error("`,` or `|-`"));
    }
    p.bump();
    let consequent = p.formula()?;
    p.expect_end()?;
    Ok(Sequent::new(antecedents, consequent))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    #[test]
    fn implication() {
        assert_eq!(
            parse_formula("x1 -> x2").unwrap(),
            Formula::imp(v("x1"), v("x2"))
        );
    }

    #[test]
    fn conjunction_under_implication() {
        let x = v("x");
        assert_eq!(
            parse_formula("(x & x) -> x").unwrap(),
            Formula::imp(Formula::and(x, x), x)
        );
        // & binds tighter than ->, so the parentheses are optional.
        assert_eq!(
            parse_formula("x & x -> x").unwrap(),
            Formula::imp(Formula::and(x, x), x)
        );
    }

    #[test]
    fn arrow_is_right_associative() {
        let (a, b, c) = (v("a"), v("b"), v("c"));
        assert_eq!(
            parse_formula("a -> b -> c").unwrap(),
            Formula::imp(a, Formula::imp(b, c))
        );
    }

    #[test]
    fn precedence_and_over_or_over_imp() {
        let (a, b, c) = (v("a"), v("b"), v("c"));
        assert_eq!(
            parse_formula("a | b & c -> a").unwrap(),
            Formula::imp(Formula::or(a, Formula::and(b, c)), a)
        );
        assert_eq!(
            parse_formula("a & b & c").unwrap(),
            Formula::and(Formula::and(a, b), c)
        );
    }

    #[test]
    fn constants_and_identifiers() {
        assert_eq!(parse_formula("top").unwrap(), Formula::top());
        assert_eq!(parse_formula("bot").unwrap(), Formula::bot());
        assert_eq!(parse_formula("top_1").unwrap(), v("top_1"));
        assert_eq!(parse_formula("_x9").unwrap(), v("_x9"));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_formula("x -> ").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_formula("(x & y").unwrap_err();
        assert_eq!(e.pos, 6);
        let e = parse_formula("x $ y").unwrap_err();
        assert_eq!(e.pos, 2);
        let e = parse_formula("x y").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse_formula("").is_err());
        assert!(parse_formula("x |- y").is_err());
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("|- top").unwrap();
        assert!(s.antecedents().is_empty());
        assert_eq!(s.consequent(), Formula::top());

        let s = parse_sequent("x -> x |- (x & x) -> x").unwrap();
        assert_eq!(s.antecedents().len(), 1);

        let s = parse_sequent("p, p |- p").unwrap();
        assert_eq!(s.antecedents(), &[v("p")]);
        assert_eq!(s.consequent(), v("p"));
    }

    #[test]
    fn sequent_errors() {
        let e = parse_sequent("x, y").unwrap_err();
        assert!(e.message.contains("turnstile"));
        assert!(parse_sequent("x, |- y").is_err());
        assert!(parse_sequent("x |-").is_err());
        assert!(parse_sequent("x |- y |- z").is_err());
    }
}
