use std::fmt;

use rustc_hash::FxHashSet;

use super::formula::Formula;
use super::print::sort_canonical;

/// `Γ ⊢ φ` with `Γ` a finite set.
///
/// Antecedents are kept sorted by interned id and duplicate-free, so two
/// sequents that differ only in antecedent order or multiplicity compare
/// equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    antecedents: Vec<Formula>,
    consequent: Formula,
}

impl Sequent {
    pub fn new(antecedents: impl IntoIterator<Item = Formula>, consequent: Formula) -> Sequent {
        let mut antecedents: Vec<Formula> = antecedents.into_iter().collect();
        antecedents.sort_unstable();
        antecedents.dedup();
        Sequent {
            antecedents,
            consequent,
        }
    }

    /// `⊢ φ`
    pub fn axiom(consequent: Formula) -> Sequent {
        Sequent {
            antecedents: Vec::new(),
            consequent,
        }
    }

    pub fn antecedents(&self) -> &[Formula] {
        &self.antecedents
    }

    pub fn consequent(&self) -> Formula {
        self.consequent
    }

    pub fn has_antecedent(&self, f: Formula) -> bool {
        self.antecedents.binary_search(&f).is_ok()
    }

    /// Same antecedents, different consequent.
    pub fn with_consequent(&self, consequent: Formula) -> Sequent {
        Sequent {
            antecedents: self.antecedents.clone(),
            consequent,
        }
    }

    /// `Γ, φ ⊢ ψ` from `Γ ⊢ ψ`.
    pub fn with_antecedent(&self, f: Formula) -> Sequent {
        let mut s = self.clone();
        if let Err(at) = s.antecedents.binary_search(&f) {
            s.antecedents.insert(at, f);
        }
        s
    }

    pub fn with_antecedents(&self, fs: impl IntoIterator<Item = Formula>) -> Sequent {
        Sequent::new(self.antecedents.iter().copied().chain(fs), self.consequent)
    }

    /// Whether every antecedent of `self` is an antecedent of `other`.
    pub fn antecedents_subset_of(&self, other: &Sequent) -> bool {
        self.antecedents.iter().all(|f| other.has_antecedent(*f))
    }

    /// Antecedents followed by the consequent.
    pub fn formulas(&self) -> impl Iterator<Item = Formula> + '_ {
        self.antecedents
            .iter()
            .copied()
            .chain(std::iter::once(self.consequent))
    }

    pub fn has_or(&self) -> bool {
        self.formulas().any(Formula::has_or)
    }

    /// Combined node count of all member formulas.
    pub fn length(&self) -> u64 {
        self.formulas().map(Formula::length).sum()
    }

    pub fn subformulas(&self) -> Vec<Formula> {
        subformulas_of_all(self.formulas())
    }

    /// Distinct variable names, in order of first occurrence.
    pub fn variables(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for f in self.formulas() {
            for v in f.variables() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Antecedents in canonical (printed) order.
    pub fn antecedents_canonical(&self) -> Vec<Formula> {
        let mut ants = self.antecedents.clone();
        sort_canonical(&mut ants);
        ants
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ants = self.antecedents_canonical();
        for (i, a) in ants.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        if !ants.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.consequent)
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequent({self})")
    }
}

/// All subformulas of `f`, including `f`, children before parents.
pub fn subformulas(f: Formula) -> Vec<Formula> {
    subformulas_of_all(std::iter::once(f))
}

/// Union of the subformula sets, children before parents, no duplicates.
pub fn subformulas_of_all(fs: impl IntoIterator<Item = Formula>) -> Vec<Formula> {
    let mut seen = FxHashSet::default();
    let mut out = Vec::new();
    for f in fs {
        push_subformulas(f, &mut seen, &mut out);
    }
    out
}

fn push_subformulas(f: Formula, seen: &mut FxHashSet<Formula>, out: &mut Vec<Formula>) {
    if seen.contains(&f) {
        return;
    }
    if let Some((_, a, b)) = f.split() {
        push_subformulas(a, seen, out);
        push_subformulas(b, seen, out);
    }
    seen.insert(f);
    out.push(f);
}

/// Subformulas of `sequent` that occur at some position outside every
/// occurrence of a member of `helpers`. With no helpers this is
/// [`Sequent::subformulas`].
pub fn proper_subformulas(sequent: &Sequent, helpers: &[Formula]) -> Vec<Formula> {
    let helpers: FxHashSet<Formula> = helpers.iter().copied().collect();
    let mut seen = FxHashSet::default();
    let mut out = Vec::new();
    for f in sequent.formulas() {
        push_outside(f, &helpers, &mut seen, &mut out);
    }
    out
}

fn push_outside(
    f: Formula,
    helpers: &FxHashSet<Formula>,
    seen: &mut FxHashSet<Formula>,
    out: &mut Vec<Formula>,
) {
    if helpers.contains(&f) || seen.contains(&f) {
        return;
    }
    if let Some((_, a, b)) = f.split() {
        push_outside(a, helpers, seen, out);
        push_outside(b, helpers, seen, out);
    }
    seen.insert(f);
    out.push(f);
}
