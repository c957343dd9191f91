//! Theoremhood-preserving sequent mappings between logics.
//!
//! - `clor-to-cl` rewrites every `φ ∨ ψ` as `(φ → ⊥) → (ψ → ⊥) → ⊥`.
//! - `il-to-ml` adds `⊥ → x` for every variable `x`.
//! - `ml-to-pel1` adds `(ψ ∧ ω) → (ψ ∧ ω)` and `(ψ → ψ ∧ ω) → (ψ → ω)` for
//!   every ordered pair of subformulas of the input.
//! - `ml-to-pel2` adds `ψ → ψ` for every subformula and
//!   `(ψ → ψ ∧ ω) → (ψ → ω)` for every ordered pair.
//!
//! Pairs include `ψ = ω`. Helpers are generated in canonical order, so the
//! image is deterministic.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::syntax::{reject_or, sort_canonical, DisjunctionError, Formula, Kind, Sequent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionId {
    ClOrToCl,
    IlToMl,
    MlToPel1,
    MlToPel2,
}

impl ReductionId {
    pub const ALL: [ReductionId; 4] = [
        ReductionId::ClOrToCl,
        ReductionId::IlToMl,
        ReductionId::MlToPel1,
        ReductionId::MlToPel2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionId::ClOrToCl => "clor-to-cl",
            ReductionId::IlToMl => "il-to-ml",
            ReductionId::MlToPel1 => "ml-to-pel1",
            ReductionId::MlToPel2 => "ml-to-pel2",
        }
    }

    pub fn apply(self, sequent: &Sequent) -> Result<Sequent, DisjunctionError> {
        match self {
            ReductionId::ClOrToCl => Ok(reduce_clor_to_cl(sequent)),
            ReductionId::IlToMl => Ok(reduce_il_to_ml(sequent)),
            ReductionId::MlToPel1 => reduce_ml_to_pel1(sequent),
            ReductionId::MlToPel2 => reduce_ml_to_pel2(sequent),
        }
    }
}

impl fmt::Display for ReductionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown reduction `{0}` (expected clor-to-cl, il-to-ml, ml-to-pel1 or ml-to-pel2)")]
pub struct UnknownReduction(pub String);

impl FromStr for ReductionId {
    type Err = UnknownReduction;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        ReductionId::ALL
            .into_iter()
            .find(|r| r.name() == key)
            .ok_or_else(|| UnknownReduction(s.to_string()))
    }
}

/// `t(φ ∨ ψ) = (t(φ) → ⊥) → (t(ψ) → ⊥) → ⊥`, homomorphic elsewhere.
pub fn translate_or(f: Formula) -> Formula {
    fn go(f: Formula, memo: &mut FxHashMap<Formula, Formula>) -> Formula {
        if !f.has_or() {
            return f;
        }
        if let Some(&g) = memo.get(&f) {
            return g;
        }
        let g = match f.kind() {
            Kind::And(a, b) => Formula::and(go(a, memo), go(b, memo)),
            Kind::Imp(a, b) => Formula::imp(go(a, memo), go(b, memo)),
            Kind::Or(a, b) => {
                let bot = Formula::bot();
                let na = Formula::imp(go(a, memo), bot);
                let nb = Formula::imp(go(b, memo), bot);
                Formula::imp(na, Formula::imp(nb, bot))
            }
            _ => f,
        };
        memo.insert(f, g);
        g
    }
    go(f, &mut FxHashMap::default())
}

pub fn reduce_clor_to_cl(sequent: &Sequent) -> Sequent {
    Sequent::new(
        sequent.antecedents().iter().map(|&a| translate_or(a)),
        translate_or(sequent.consequent()),
    )
}

/// Maps everything `∨`-free to itself and everything else to `⊢ ⊥`.
pub fn cl_to_clor(sequent: &Sequent) -> Sequent {
    if sequent.has_or() {
        Sequent::axiom(Formula::bot())
    } else {
        sequent.clone()
    }
}

pub fn il_to_ml_helpers(sequent: &Sequent) -> Vec<Formula> {
    let mut out: Vec<Formula> = sequent
        .variables()
        .into_iter()
        .map(|x| Formula::imp(Formula::bot(), Formula::var(x)))
        .collect();
    sort_canonical(&mut out);
    out
}

pub fn reduce_il_to_ml(sequent: &Sequent) -> Sequent {
    sequent.with_antecedents(il_to_ml_helpers(sequent))
}

fn canonical_subformulas(sequent: &Sequent) -> Vec<Formula> {
    let mut s = sequent.subformulas();
    sort_canonical(&mut s);
    s
}

/// Helpers added by `ml-to-pel1`, in generation order, without duplicates.
pub fn ml_to_pel1_helpers(sequent: &Sequent) -> Result<Vec<Formula>, DisjunctionError> {
    reject_or(sequent.formulas().collect::<Vec<_>>().iter())?;
    let s = canonical_subformulas(sequent);
    let mut out = Vec::with_capacity(2 * s.len() * s.len());
    for &psi in &s {
        for &omega in &s {
            let conj = Formula::and(psi, omega);
            out.push(Formula::imp(conj, conj));
            out.push(detour(psi, omega));
        }
    }
    Ok(dedup(out))
}

/// Helpers added by `ml-to-pel2`, in generation order, without duplicates.
pub fn ml_to_pel2_helpers(sequent: &Sequent) -> Result<Vec<Formula>, DisjunctionError> {
    reject_or(sequent.formulas().collect::<Vec<_>>().iter())?;
    let s = canonical_subformulas(sequent);
    let mut out = Vec::with_capacity(s.len() + s.len() * s.len());
    out.extend(s.iter().map(|&psi| Formula::imp(psi, psi)));
    for &psi in &s {
        for &omega in &s {
            out.push(detour(psi, omega));
        }
    }
    Ok(dedup(out))
}

/// `(ψ → ψ ∧ ω) → (ψ → ω)`.
fn detour(psi: Formula, omega: Formula) -> Formula {
    Formula::imp(
        Formula::imp(psi, Formula::and(psi, omega)),
        Formula::imp(psi, omega),
    )
}

fn dedup(fs: Vec<Formula>) -> Vec<Formula> {
    let mut seen = rustc_hash::FxHashSet::default();
    fs.into_iter().filter(|f| seen.insert(*f)).collect()
}

pub fn reduce_ml_to_pel1(sequent: &Sequent) -> Result<Sequent, DisjunctionError> {
    Ok(sequent.with_antecedents(ml_to_pel1_helpers(sequent)?))
}

pub fn reduce_ml_to_pel2(sequent: &Sequent) -> Result<Sequent, DisjunctionError> {
    Ok(sequent.with_antecedents(ml_to_pel2_helpers(sequent)?))
}
