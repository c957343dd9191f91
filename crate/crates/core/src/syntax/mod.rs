//! Formulas, sequents, the text grammar, and subformula machinery.

mod formula;
mod parse;
mod print;
mod sequent;

pub use formula::{interned_count, Connective, Formula, Kind};
pub use parse::{parse_formula, parse_sequent, ParseError};
pub use print::{canonical_cmp, sort_canonical};
pub use sequent::{proper_subformulas, subformulas, subformulas_of_all, Sequent};

use thiserror::Error;

/// Raised by procedures that are only defined on the `∨`-free fragment.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("disjunction is not supported here: {0}")]
pub struct DisjunctionError(pub String);

pub(crate) fn reject_or<'a>(
    fs: impl IntoIterator<Item = &'a Formula>,
) -> Result<(), DisjunctionError> {
    for f in fs {
        if f.has_or() {
            return Err(DisjunctionError(f.to_string()));
        }
    }
    Ok(())
}
