//! Two-valued valuations for PL + →ED, where `φ → ψ` takes the value of `ψ`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::bits::{blocks, row_mask, BlockEval, ImpReading};
use crate::calculi::{check_proof, CheckError, LogicId, Proof};
use crate::syntax::{reject_or, DisjunctionError, Formula, Kind, Sequent};

/// Truth values of variables. Unlisted variables are false.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    values: BTreeMap<String, bool>,
}

impl Valuation {
    pub fn all_false() -> Valuation {
        Valuation::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, bool)>) -> Valuation {
        Valuation {
            values: pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn set(&mut self, var: &str, value: bool) {
        self.values.insert(var.to_string(), value);
    }

    pub fn get(&self, var: &str) -> bool {
        self.values.get(var).copied().unwrap_or(false)
    }

    /// `V(⊢ φ)`.
    pub fn formula(&self, f: Formula) -> Result<bool, DisjunctionError> {
        reject_or([&f])?;
        Ok(self.value(f))
    }

    fn value(&self, f: Formula) -> bool {
        match f.kind() {
            Kind::Top => true,
            Kind::Bot => false,
            Kind::Var(name) => self.get(name),
            Kind::And(a, b) => self.value(a) && self.value(b),
            Kind::Imp(_, b) => self.value(b),
            Kind::Or(..) => unreachable!("rejected above"),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.values {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{k}={}", if *v { "T" } else { "F" })?;
        }
        Ok(())
    }
}

/// `V(Γ ⊢ φ)`: some antecedent is false or the consequent is true.
pub fn evaluate_valuation(
    valuation: &Valuation,
    sequent: &Sequent,
) -> Result<bool, DisjunctionError> {
    for f in sequent.formulas() {
        reject_or([&f])?;
    }
    Ok(sequent.antecedents().iter().any(|&a| !valuation.value(a))
        || valuation.value(sequent.consequent()))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SoundnessError {
    #[error("not a PL_ED proof: {0}")]
    Invalid(#[from] CheckError),
    #[error("{found} variables exceed the cap of {cap}")]
    TooManyVariables { found: usize, cap: usize },
    #[error("step {step} is false under {valuation}")]
    Counterexample { step: usize, valuation: Valuation },
}

/// Largest variable count `soundness_check` enumerates.
pub const SOUNDNESS_VAR_CAP: usize = 24;

/// Checks every line of a PL_ED proof under every assignment to its
/// variables. An error other than `Invalid` means the checker or the
/// evaluator is wrong.
pub fn soundness_check(proof: &Proof) -> Result<(), SoundnessError> {
    check_proof(proof, LogicId::PL_ED)?;
    let mut vars: Vec<&'static str> = Vec::new();
    for step in &proof.steps {
        for v in step.conclusion.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    vars.sort_unstable();
    if vars.len() > SOUNDNESS_VAR_CAP {
        return Err(SoundnessError::TooManyVariables {
            found: vars.len(),
            cap: SOUNDNESS_VAR_CAP,
        });
    }
    let mask = row_mask(vars.len());
    for block in 0..blocks(vars.len()) {
        let mut eval = BlockEval::new(&vars, block, ImpReading::Degenerate);
        for (i, step) in proof.steps.iter().enumerate() {
            let s = &step.conclusion;
            let bad = !eval.sequent(s.antecedents(), s.consequent()) & mask;
            if bad != 0 {
                let row = block * 64 + bad.trailing_zeros() as usize;
                let valuation = Valuation::from_pairs(
                    vars.iter()
                        .enumerate()
                        .map(|(j, v)| (*v, (row >> j) & 1 == 1)),
                );
                return Err(SoundnessError::Counterexample {
                    step: i + 1,
                    valuation,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    #[test]
    fn paper_examples() {
        let v = Valuation::all_false();
        assert!(!evaluate_valuation(&v, &parse_sequent("|- x1").unwrap()).unwrap());
        assert!(evaluate_valuation(&v, &parse_sequent("|- top").unwrap()).unwrap());
        for a in [false, true] {
            for b in [false, true] {
                let v = Valuation::from_pairs([("x1", a), ("x2", b)]);
                assert!(evaluate_valuation(&v, &parse_sequent("x1 -> x2 |- x2").unwrap()).unwrap());
            }
        }
        let v = Valuation::from_pairs([("y", true)]);
        assert!(v
            .formula(crate::syntax::parse_formula("x -> y").unwrap())
            .unwrap());
        assert!(evaluate_valuation(&v, &parse_sequent("|- x | y").unwrap()).is_err());
    }

    #[test]
    fn proofs_are_sound() {
        let p = Proof::parse(
            "1. x1 -> x2 |- x1 -> x2 ; rule=X2X ; premises=\n\
             2. x1 -> x2 |- x2 ; rule=ImpED ; premises=1\n",
        )
        .unwrap();
        soundness_check(&p).unwrap();
        let p = Proof::parse("1. x |- y ; rule=X2X ; premises=\n").unwrap();
        assert!(matches!(
            soundness_check(&p),
            Err(SoundnessError::Invalid(_))
        ));
    }
}
