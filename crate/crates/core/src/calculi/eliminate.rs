//! Erasing insignificant implications from PEL0 derivations.
//!
//! The significant implications of a derivation of `σ` are the least set
//! that contains the implication subformulas of `σ`, is closed under
//! implication subformulas, and contains both sides of an `E0`-style step
//! (`E0`, `E1_0`, `E2_0`) as soon as it contains one. The map `t_F` replaces
//! every implication outside that set by its consequent; applied to each
//! line of the derivation it yields a derivation of the same `σ`.

use rustc_hash::{FxHashMap, FxHashSet};
use thiserror::Error;

use super::check::{check_proof, CheckError};
use super::proof::{Proof, ProofBuilder};
use super::rules::{LogicId, RuleTag};
use crate::syntax::{subformulas, Formula, Kind, Sequent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminateError {
    #[error("input is not a PEL0 proof: {0}")]
    Invalid(#[from] CheckError),
    #[error("proof concludes `{found}`, expected `{expected}`")]
    WrongConclusion { expected: String, found: String },
}

fn implication_subformulas(f: Formula) -> impl Iterator<Item = Formula> {
    subformulas(f).into_iter().filter(|g| g.is_imp())
}

fn is_e_step(rule: RuleTag) -> bool {
    matches!(rule, RuleTag::E0 | RuleTag::E1_0 | RuleTag::E2_0)
}

/// The significant implications of `proof` as a derivation of `sigma`.
pub fn significant_implications(proof: &Proof, sigma: &Sequent) -> FxHashSet<Formula> {
    let mut links: FxHashMap<Formula, Vec<Formula>> = FxHashMap::default();
    for step in &proof.steps {
        if is_e_step(step.rule) {
            let a = step.conclusion.antecedents()[0];
            let c = step.conclusion.consequent();
            links.entry(a).or_default().push(c);
            links.entry(c).or_default().push(a);
        }
    }
    let mut set = FxHashSet::default();
    let mut work: Vec<Formula> = sigma.formulas().flat_map(implication_subformulas).collect();
    while let Some(f) = work.pop() {
        if !set.insert(f) {
            continue;
        }
        work.extend(implication_subformulas(f));
        if let Some(partners) = links.get(&f) {
            work.extend(partners.iter().copied());
        }
    }
    set
}

struct Translate<'a> {
    keep: &'a FxHashSet<Formula>,
    memo: FxHashMap<Formula, Formula>,
}

impl Translate<'_> {
    fn formula(&mut self, f: Formula) -> Formula {
        if let Some(&g) = self.memo.get(&f) {
            return g;
        }
        let g = match f.kind() {
            Kind::Var(_) | Kind::Top | Kind::Bot => f,
            Kind::And(a, b) => Formula::and(self.formula(a), self.formula(b)),
            Kind::Or(a, b) => Formula::or(self.formula(a), self.formula(b)),
            Kind::Imp(_, b) if !self.keep.contains(&f) => self.formula(b),
            // Significant implications are closed under implication
            // subformulas, so their components are fixed points.
            Kind::Imp(..) => f,
        };
        self.memo.insert(f, g);
        g
    }

    fn sequent(&mut self, s: &Sequent) -> Sequent {
        let ants: Vec<Formula> = s.antecedents().iter().map(|&a| self.formula(a)).collect();
        Sequent::new(ants, self.formula(s.consequent()))
    }
}

/// Rewrites a PEL0 proof of `sigma` so that every implication occurring in it
/// is significant. Lines that `t_F` makes identical are merged.
pub fn eliminate_insignificant(proof: &Proof, sigma: &Sequent) -> Result<Proof, EliminateError> {
    check_proof(proof, LogicId::PEL0)?;
    let found = proof.conclusion().expect("checked proofs are non-empty");
    if found != sigma {
        return Err(EliminateError::WrongConclusion {
            expected: sigma.to_string(),
            found: found.to_string(),
        });
    }
    let keep = significant_implications(proof, sigma);
    let mut t = Translate {
        keep: &keep,
        memo: FxHashMap::default(),
    };

    let mut b = ProofBuilder::new();
    let mut map: Vec<usize> = Vec::with_capacity(proof.steps.len());
    for step in &proof.steps {
        let image = t.sequent(&step.conclusion);
        let premises: Vec<usize> = step.premises.iter().map(|&p| map[p]).collect();
        // Steps whose principal implication is erased become copies of one
        // of their premises (or, for E1_0, of an axiom).
        let collapse_to = match step.rule {
            RuleTag::ImpE => {
                let imp = proof.steps[step.premises[1]].conclusion.consequent();
                (!keep.contains(&imp)).then_some(Collapse::Premise(1))
            }
            RuleTag::ImpIW => {
                (!keep.contains(&step.conclusion.consequent())).then_some(Collapse::Premise(0))
            }
            RuleTag::E0 | RuleTag::E1_0 | RuleTag::E2_0 => {
                let ant = step.conclusion.antecedents()[0];
                (!keep.contains(&ant)).then_some(match step.rule {
                    RuleTag::E0 => Collapse::Premise(2),
                    RuleTag::E2_0 => Collapse::Premise(0),
                    _ => Collapse::Axiom,
                })
            }
            _ => None,
        };
        let index = match collapse_to {
            Some(Collapse::Premise(k)) => {
                debug_assert_eq!(b.sequent(premises[k]), &image);
                premises[k]
            }
            Some(Collapse::Axiom) => {
                debug_assert_eq!(image.antecedents(), &[image.consequent()]);
                b.add(image, RuleTag::X2X, vec![])
            }
            None => b.add(image, step.rule, premises),
        };
        map.push(index);
    }
    let out = b.finish(*map.last().expect("non-empty"));
    debug_assert!(check_proof(&out, LogicId::PEL0).is_ok());
    debug_assert_eq!(out.conclusion(), Some(sigma));
    Ok(out)
}

enum Collapse {
    Premise(usize),
    Axiom,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    fn s(t: &str) -> Sequent {
        parse_sequent(t).unwrap()
    }

    fn imps_in(p: &Proof) -> FxHashSet<Formula> {
        p.steps
            .iter()
            .flat_map(|st| st.conclusion.subformulas())
            .filter(|f| f.is_imp())
            .collect()
    }

    #[test]
    fn detour_through_insignificant_implication_is_erased() {
        // y |- x -> y, with pointless excursions through (a -> b) -> y
        // and y -> y. Lines 4 and 6 repeat line 1.
        let p = Proof::parse(
            "1. y |- y ; rule=X2X ; premises=\n\
             2. y |- (a -> b) -> y ; rule=ImpIW ; premises=1\n\
             3. y, (a -> b) -> y |- y ; rule=PremiseInflation ; premises=1\n\
             4. y |- y ; rule=Cut ; premises=2,3\n\
             5. y |- y -> y ; rule=ImpIW ; premises=4\n\
             6. y |- y ; rule=ImpE ; premises=4,5\n\
             7. y |- x -> y ; rule=ImpIW ; premises=6\n",
        )
        .unwrap();
        let sigma = s("y |- x -> y");
        check_proof(&p, LogicId::PEL0).unwrap();
        let out = eliminate_insignificant(&p, &sigma).unwrap();
        check_proof(&out, LogicId::PEL0).unwrap();
        assert_eq!(out.conclusion(), Some(&sigma));
        let keep = significant_implications(&out, &sigma);
        assert!(imps_in(&out).is_subset(&keep));
        assert!(!out.to_string().contains("a -> b"));
    }

    #[test]
    fn significant_e0_step_is_preserved() {
        let p = Proof::parse(
            "1. x |- x ; rule=X2X ; premises=\n\
             2. x |- x & x ; rule=AndI ; premises=1,1\n\
             3. x & x |- x & x ; rule=X2X ; premises=\n\
             4. x & x |- x ; rule=AndEl ; premises=3\n\
             5. x -> x |- x & x -> x ; rule=E0 ; premises=2,4,1,1\n",
        )
        .unwrap();
        let sigma = s("x -> x |- x & x -> x");
        let out = eliminate_insignificant(&p, &sigma).unwrap();
        assert_eq!(out, p);
    }

    #[test]
    fn insignificant_e_steps_collapse() {
        // z |- z via a detour through an E1_0 step on implications that
        // never reach the conclusion.
        let p = Proof::parse(
            "1. x |- x ; rule=X2X ; premises=\n\
             2. x |- x & x ; rule=AndI ; premises=1,1\n\
             3. x & x |- x & x ; rule=X2X ; premises=\n\
             4. x & x |- x ; rule=AndEl ; premises=3\n\
             5. x -> z |- x & x -> z ; rule=E1_0 ; premises=2,4\n\
             6. z |- z ; rule=X2X ; premises=\n\
             7. z, x -> z |- x & x -> z ; rule=PremiseInflation ; premises=5\n\
             8. z, x -> z |- z ; rule=PremiseInflation ; premises=6\n\
             9. z |- x -> z ; rule=ImpIW ; premises=6\n\
             10. z |- z ; rule=Cut ; premises=9,8\n",
        )
        .unwrap();
        let sigma = s("z |- z");
        check_proof(&p, LogicId::PEL0).unwrap();
        let out = eliminate_insignificant(&p, &sigma).unwrap();
        check_proof(&out, LogicId::PEL0).unwrap();
        assert!(imps_in(&out).is_empty());
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn rejects_invalid_input() {
        let p = Proof::parse("1. x |- x -> x ; rule=ImpI ; premises=\n").unwrap();
        assert!(matches!(
            eliminate_insignificant(&p, &s("x |- x -> x")),
            Err(EliminateError::Invalid(_))
        ));
        let p = Proof::parse("1. x |- x ; rule=X2X ; premises=\n").unwrap();
        assert!(matches!(
            eliminate_insignificant(&p, &s("y |- y")),
            Err(EliminateError::WrongConclusion { .. })
        ));
    }
}
