//! Syntactic matching of proof steps against the rule schemas.

use thiserror::Error;

use super::proof::{Proof, ProofStep};
use super::rules::{LogicId, RuleTag};
use crate::syntax::{Formula, Kind, Sequent};

/// Why a step is not an instance of its rule.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct Mismatch(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("empty proof")]
    Empty,
    #[error("step {index}: rule {rule} is not admitted in {logic}")]
    NotAdmitted {
        index: usize,
        rule: RuleTag,
        logic: LogicId,
    },
    #[error("step {index}: premise reference {premise} is not an earlier step")]
    BadReference { index: usize, premise: usize },
    #[error("step {index} ({rule}): {reason}")]
    Invalid {
        index: usize,
        rule: RuleTag,
        reason: String,
    },
}

impl CheckError {
    /// 1-based index of the offending step, if any.
    pub fn step(&self) -> Option<usize> {
        match self {
            CheckError::Empty => None,
            CheckError::NotAdmitted { index, .. }
            | CheckError::BadReference { index, .. }
            | CheckError::Invalid { index, .. } => Some(*index),
        }
    }
}

/// Checks every step of `proof` against its schema and against the rules of
/// `logic`. Step indices in errors are 1-based, matching the file format.
pub fn check_proof(proof: &Proof, logic: LogicId) -> Result<(), CheckError> {
    if proof.steps.is_empty() {
        return Err(CheckError::Empty);
    }
    let rules = logic.rules();
    for (i, step) in proof.steps.iter().enumerate() {
        let index = i + 1;
        if !rules.contains(step.rule) {
            return Err(CheckError::NotAdmitted {
                index,
                rule: step.rule,
                logic,
            });
        }
        let mut premises = Vec::with_capacity(step.premises.len());
        for &p in &step.premises {
            if p >= i {
                return Err(CheckError::BadReference {
                    index,
                    premise: p + 1,
                });
            }
            premises.push(&proof.steps[p].conclusion);
        }
        check_step(step, &premises).map_err(|m| CheckError::Invalid {
            index,
            rule: step.rule,
            reason: m.0,
        })?;
    }
    Ok(())
}

fn fail<T>(msg: impl Into<String>) -> Result<T, Mismatch> {
    Err(Mismatch(msg.into()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Mismatch> {
    if cond {
        Ok(())
    } else {
        Err(Mismatch(msg()))
    }
}

fn split_and(f: Formula) -> Option<(Formula, Formula)> {
    match f.kind() {
        Kind::And(a, b) => Some((a, b)),
        _ => None,
    }
}

fn split_imp(f: Formula) -> Option<(Formula, Formula)> {
    match f.kind() {
        Kind::Imp(a, b) => Some((a, b)),
        _ => None,
    }
}

fn split_or(f: Formula) -> Option<(Formula, Formula)> {
    match f.kind() {
        Kind::Or(a, b) => Some((a, b)),
        _ => None,
    }
}

/// Whether `set == base ∪ {extra}`. All slices are sorted by id.
fn is_extension(set: &[Formula], base: &[Formula], extra: Formula) -> bool {
    let with = base.binary_search(&extra).is_ok();
    if with {
        set == base
    } else {
        set.len() == base.len() + 1
            && set.binary_search(&extra).is_ok()
            && base.iter().all(|f| set.binary_search(f).is_ok())
    }
}

/// Candidates for `Γ` with `Γ ∪ {f} = set`: `set` itself if `f ∈ set`, and
/// `set \ {f}`.
fn bases(set: &[Formula], f: Formula) -> Vec<Vec<Formula>> {
    match set.binary_search(&f) {
        Ok(at) => {
            let mut without = set.to_vec();
            without.remove(at);
            vec![set.to_vec(), without]
        }
        Err(_) => vec![],
    }
}

fn same_antecedents(a: &Sequent, b: &Sequent) -> bool {
    a.antecedents() == b.antecedents()
}

fn arity(step: &ProofStep, premises: &[&Sequent]) -> Result<(), Mismatch> {
    let want = step.rule.arity();
    ensure(premises.len() == want, || {
        format!("expects {want} premise(s), found {}", premises.len())
    })
}

/// Checks that `step.conclusion` follows from `premises` by `step.rule`.
/// The premises are given in the order of the rule table.
pub fn check_step(step: &ProofStep, premises: &[&Sequent]) -> Result<(), Mismatch> {
    arity(step, premises)?;
    let c = &step.conclusion;
    let cons = c.consequent();
    let ants = c.antecedents();
    match step.rule {
        RuleTag::Top => ensure(ants.is_empty() && cons == Formula::top(), || {
            "conclusion must be `|- top`".into()
        }),
        RuleTag::X2X => ensure(ants.len() == 1 && ants[0] == cons, || {
            "conclusion must have the form `φ |- φ`".into()
        }),
        RuleTag::BotAx => ensure(ants.len() == 1 && ants[0] == Formula::bot(), || {
            "conclusion must have the form `bot |- φ`".into()
        }),
        RuleTag::PremiseInflation => {
            let p = premises[0];
            ensure(p.consequent() == cons, || {
                "consequent differs from premise".into()
            })?;
            ensure(p.antecedents_subset_of(c), || {
                "premise antecedents are not contained in the conclusion's".into()
            })
        }
        RuleTag::Cut => {
            let (p1, p2) = (premises[0], premises[1]);
            ensure(same_antecedents(p1, c), || {
                "first premise must have the conclusion's antecedents".into()
            })?;
            ensure(p2.consequent() == cons, || {
                "second premise must have the conclusion's consequent".into()
            })?;
            ensure(
                is_extension(p2.antecedents(), ants, p1.consequent()),
                || {
                    "second premise antecedents must be the conclusion's plus the cut formula"
                        .into()
                },
            )
        }
        RuleTag::AndEl | RuleTag::AndEr => {
            let p = premises[0];
            ensure(same_antecedents(p, c), || {
                "antecedents differ from premise".into()
            })?;
            let Some((l, r)) = split_and(p.consequent()) else {
                return fail("premise consequent is not a conjunction");
            };
            let want = if step.rule == RuleTag::AndEl { l } else { r };
            ensure(cons == want, || {
                "conclusion is not the selected conjunct".into()
            })
        }
        RuleTag::AndI => {
            let (p1, p2) = (premises[0], premises[1]);
            ensure(same_antecedents(p1, c) && same_antecedents(p2, c), || {
                "premise antecedents differ from conclusion".into()
            })?;
            ensure(
                cons == Formula::and(p1.consequent(), p2.consequent()),
                || "conclusion is not the conjunction of the premises".into(),
            )
        }
        RuleTag::ImpE => {
            let (p1, p2) = (premises[0], premises[1]);
            ensure(same_antecedents(p1, c) && same_antecedents(p2, c), || {
                "premise antecedents differ from conclusion".into()
            })?;
            ensure(
                p2.consequent() == Formula::imp(p1.consequent(), cons),
                || "second premise is not `φ -> ψ` for the first premise φ and conclusion ψ".into(),
            )
        }
        RuleTag::ImpIW => {
            let p = premises[0];
            ensure(same_antecedents(p, c), || {
                "antecedents differ from premise".into()
            })?;
            let Some((_, b)) = split_imp(cons) else {
                return fail("conclusion is not an implication");
            };
            ensure(b == p.consequent(), || {
                "conclusion's consequent part is not the premise consequent".into()
            })
        }
        RuleTag::ImpI => {
            let p = premises[0];
            let Some((a, b)) = split_imp(cons) else {
                return fail("conclusion is not an implication");
            };
            ensure(b == p.consequent(), || {
                "conclusion's consequent part is not the premise consequent".into()
            })?;
            ensure(is_extension(p.antecedents(), ants, a), || {
                "premise antecedents must be the conclusion's plus the discharged formula".into()
            })
        }
        RuleTag::ImpED => {
            let p = premises[0];
            ensure(same_antecedents(p, c), || {
                "antecedents differ from premise".into()
            })?;
            let Some((_, b)) = split_imp(p.consequent()) else {
                return fail("premise consequent is not an implication");
            };
            ensure(b == cons, || {
                "conclusion is not the premise's consequent part".into()
            })
        }
        RuleTag::DFExcludedMiddle => {
            let (p1, p2) = (premises[0], premises[1]);
            ensure(p1.consequent() == cons && p2.consequent() == cons, || {
                "premise consequents differ from conclusion".into()
            })?;
            let bot = Formula::bot();
            let ok = p1.antecedents().iter().any(|&phi| {
                is_extension(p1.antecedents(), ants, phi)
                    && is_extension(p2.antecedents(), ants, Formula::imp(phi, bot))
            });
            ensure(ok, || {
                "premises are not `Γ, φ |- ψ` and `Γ, φ -> bot |- ψ` for the conclusion's Γ".into()
            })
        }
        RuleTag::OrE => {
            let (p1, p2, p3) = (premises[0], premises[1], premises[2]);
            ensure(same_antecedents(p3, c), || {
                "third premise must have the conclusion's antecedents".into()
            })?;
            let Some((a, b)) = split_or(p3.consequent()) else {
                return fail("third premise consequent is not a disjunction");
            };
            ensure(p1.consequent() == cons && p2.consequent() == cons, || {
                "case premises must have the conclusion's consequent".into()
            })?;
            ensure(
                is_extension(p1.antecedents(), ants, a) && is_extension(p2.antecedents(), ants, b),
                || "case premises must extend the conclusion's antecedents by each disjunct".into(),
            )
        }
        RuleTag::OrIl | RuleTag::OrIr => {
            let p = premises[0];
            ensure(same_antecedents(p, c), || {
                "antecedents differ from premise".into()
            })?;
            let Some((a, b)) = split_or(cons) else {
                return fail("conclusion is not a disjunction");
            };
            let want = if step.rule == RuleTag::OrIl { a } else { b };
            ensure(want == p.consequent(), || {
                "premise consequent is not the selected disjunct".into()
            })
        }
        RuleTag::E1 | RuleTag::E2 => check_strong_e(step.rule, c, premises[0], premises[1]),
        RuleTag::E1_0 | RuleTag::E2_0 => check_weak_e(step.rule, c, premises[0], premises[1]),
        RuleTag::E0 => check_e0(c, premises),
    }
}

/// `Γ, φ |- ψ` and `Γ, ψ |- φ` give `Γ, φ -> χ |- ψ -> χ` (E1) or
/// `Γ, χ -> φ |- χ -> ψ` (E2).
fn check_strong_e(rule: RuleTag, c: &Sequent, p1: &Sequent, p2: &Sequent) -> Result<(), Mismatch> {
    let (phi, psi) = (p2.consequent(), p1.consequent());
    let Some((l, r)) = split_imp(c.consequent()) else {
        return fail("conclusion is not an implication");
    };
    let added = if rule == RuleTag::E1 {
        ensure(l == psi, || {
            "conclusion must be `ψ -> χ` for the first premise's ψ".into()
        })?;
        Formula::imp(phi, r)
    } else {
        ensure(r == psi, || {
            "conclusion must be `χ -> ψ` for the first premise's ψ".into()
        })?;
        Formula::imp(l, phi)
    };
    let ok = bases(c.antecedents(), added).iter().any(|gamma| {
        is_extension(p1.antecedents(), gamma, phi) && is_extension(p2.antecedents(), gamma, psi)
    });
    ensure(ok, || {
        format!("antecedents do not fit `Γ, φ |- ψ`, `Γ, ψ |- φ` / `Γ, {added} |- ...`")
    })
}

fn single(s: &Sequent) -> Option<Formula> {
    match s.antecedents() {
        [a] => Some(*a),
        _ => None,
    }
}

/// `φ |- ψ` and `ψ |- φ` give `φ -> χ |- ψ -> χ` (E1_0) or `χ -> φ |- χ -> ψ` (E2_0).
fn check_weak_e(rule: RuleTag, c: &Sequent, p1: &Sequent, p2: &Sequent) -> Result<(), Mismatch> {
    let (Some(phi), Some(phi2)) = (single(p1), single(p2)) else {
        return fail("premises must each have exactly one antecedent");
    };
    let psi = p1.consequent();
    ensure(p2.consequent() == phi && phi2 == psi, || {
        "premises must be `φ |- ψ` and `ψ |- φ`".into()
    })?;
    let Some(ant) = single(c) else {
        return fail("conclusion must have exactly one antecedent");
    };
    let (Some((al, ar)), Some((cl, cr))) = (split_imp(ant), split_imp(c.consequent())) else {
        return fail("conclusion must relate two implications");
    };
    let ok = if rule == RuleTag::E1_0 {
        al == phi && cl == psi && ar == cr
    } else {
        ar == phi && cr == psi && al == cl
    };
    ensure(ok, || {
        "conclusion does not substitute ψ for φ in the required position".into()
    })
}

/// `φ₁ |- φ₂`, `φ₂ |- φ₁`, `ψ₁ |- ψ₂`, `ψ₂ |- ψ₁` give `φ₁ -> ψ₁ |- φ₂ -> ψ₂`.
fn check_e0(c: &Sequent, premises: &[&Sequent]) -> Result<(), Mismatch> {
    let Some(ant) = single(c) else {
        return fail("conclusion must have exactly one antecedent");
    };
    let (Some((phi1, psi1)), Some((phi2, psi2))) = (split_imp(ant), split_imp(c.consequent()))
    else {
        return fail("conclusion must relate two implications");
    };
    let want = [(phi1, phi2), (phi2, phi1), (psi1, psi2), (psi2, psi1)];
    for (k, (p, (a, b))) in premises.iter().zip(want).enumerate() {
        ensure(single(p) == Some(a) && p.consequent() == b, || {
            format!("premise {} must be `{a} |- {b}`", k + 1)
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_sequent};

    fn s(t: &str) -> Sequent {
        parse_sequent(t).unwrap()
    }

    fn step(c: &str, rule: RuleTag) -> ProofStep {
        ProofStep::new(s(c), rule, vec![])
    }

    fn ok(c: &str, rule: RuleTag, ps: &[&str]) -> bool {
        let ps: Vec<Sequent> = ps.iter().map(|p| s(p)).collect();
        let refs: Vec<&Sequent> = ps.iter().collect();
        check_step(&step(c, rule), &refs).is_ok()
    }

    #[test]
    fn axioms() {
        assert!(ok("|- top", RuleTag::Top, &[]));
        assert!(!ok("x |- top", RuleTag::Top, &[]));
        assert!(ok("x -> y & z |- x -> y & z", RuleTag::X2X, &[]));
        assert!(!ok("x, y |- x", RuleTag::X2X, &[]));
        assert!(ok("bot |- x -> y", RuleTag::BotAx, &[]));
        assert!(!ok("x |- x", RuleTag::BotAx, &[]));
    }

    #[test]
    fn arity_is_enforced() {
        assert!(!ok("x -> y |- z -> y", RuleTag::E1_0, &["x |- z"]));
        assert!(!ok("|- top", RuleTag::Top, &["|- top"]));
    }

    #[test]
    fn structural_rules() {
        assert!(ok("x, y |- x", RuleTag::PremiseInflation, &["x |- x"]));
        assert!(ok("x |- x", RuleTag::PremiseInflation, &["x |- x"]));
        assert!(!ok("y |- x", RuleTag::PremiseInflation, &["x |- x"]));
        assert!(ok("x |- y", RuleTag::Cut, &["x |- z", "x, z |- y"]));
        // The cut formula may already be among the antecedents.
        assert!(ok("x |- y", RuleTag::Cut, &["x |- x", "x |- y"]));
        assert!(!ok("x |- y", RuleTag::Cut, &["x, z |- y", "x |- z"]));
    }

    #[test]
    fn conjunction_rules() {
        assert!(ok("g |- a", RuleTag::AndEl, &["g |- a & b"]));
        assert!(ok("g |- b", RuleTag::AndEr, &["g |- a & b"]));
        assert!(!ok("g |- b", RuleTag::AndEl, &["g |- a & b"]));
        assert!(ok("g |- a & b", RuleTag::AndI, &["g |- a", "g |- b"]));
        assert!(!ok("g |- a & b", RuleTag::AndI, &["g |- b", "g |- a"]));
    }

    #[test]
    fn implication_rules() {
        assert!(ok("g |- b", RuleTag::ImpE, &["g |- a", "g |- a -> b"]));
        assert!(!ok("g |- b", RuleTag::ImpE, &["g |- a -> b", "g |- a"]));
        assert!(ok("g |- a -> b", RuleTag::ImpIW, &["g |- b"]));
        assert!(ok("g |- a -> b", RuleTag::ImpI, &["g, a |- b"]));
        assert!(ok("a |- a -> a", RuleTag::ImpI, &["a |- a"]));
        assert!(!ok("g |- a -> b", RuleTag::ImpI, &["g |- a"]));
        assert!(ok(
            "x1 -> x2 |- x2",
            RuleTag::ImpED,
            &["x1 -> x2 |- x1 -> x2"]
        ));
    }

    #[test]
    fn classical_and_disjunction_rules() {
        assert!(ok(
            "g |- c",
            RuleTag::DFExcludedMiddle,
            &["g, p |- c", "g, p -> bot |- c"]
        ));
        assert!(!ok(
            "g |- c",
            RuleTag::DFExcludedMiddle,
            &["g, p -> bot |- c", "g, p |- c"]
        ));
        assert!(ok(
            "g |- c",
            RuleTag::OrE,
            &["g, a |- c", "g, b |- c", "g |- a | b"]
        ));
        assert!(!ok(
            "g |- c",
            RuleTag::OrE,
            &["g, b |- c", "g, a |- c", "g |- a | b"]
        ));
        assert!(ok("g |- a | b", RuleTag::OrIl, &["g |- a"]));
        assert!(ok("g |- a | b", RuleTag::OrIr, &["g |- b"]));
    }

    #[test]
    fn substitution_rules() {
        assert!(ok(
            "g, a -> c |- b -> c",
            RuleTag::E1,
            &["g, a |- b", "g, b |- a"]
        ));
        assert!(ok("a -> c |- b -> c", RuleTag::E1, &["a |- b", "b |- a"]));
        assert!(ok(
            "g, c -> a |- c -> b",
            RuleTag::E2,
            &["g, a |- b", "g, b |- a"]
        ));
        assert!(!ok(
            "g, a -> c |- b -> c",
            RuleTag::E2,
            &["g, a |- b", "g, b |- a"]
        ));
        assert!(ok("a -> c |- b -> c", RuleTag::E1_0, &["a |- b", "b |- a"]));
        assert!(!ok(
            "g, a -> c |- b -> c",
            RuleTag::E1_0,
            &["g, a |- b", "g, b |- a"]
        ));
        assert!(ok("c -> a |- c -> b", RuleTag::E2_0, &["a |- b", "b |- a"]));
        assert!(ok(
            "x -> x |- x & x -> x",
            RuleTag::E0,
            &["x |- x & x", "x & x |- x", "x |- x", "x |- x"]
        ));
        assert!(!ok(
            "x -> x |- x & x -> x",
            RuleTag::E0,
            &["x |- x & x", "x |- x", "x |- x", "x |- x"]
        ));
    }

    #[test]
    fn proof_level_checks() {
        let p = Proof::parse(
            "1. x1 -> x2 |- x1 -> x2 ; rule=X2X ; premises=\n2. x1 -> x2 |- x2 ; rule=ImpED ; premises=1\n",
        )
        .unwrap();
        assert!(check_proof(&p, LogicId::PL_ED).is_ok());
        let e = check_proof(&p, LogicId::PL).unwrap_err();
        assert_eq!(e.step(), Some(2));
        assert!(matches!(e, CheckError::NotAdmitted { .. }));

        let x = parse_formula("x").unwrap();
        let bad = Proof::new(vec![ProofStep::new(
            Sequent::new([x], x),
            RuleTag::X2X,
            vec![0],
        )]);
        assert!(matches!(
            check_proof(&bad, LogicId::PL),
            Err(CheckError::BadReference { .. })
        ));
        assert_eq!(
            check_proof(&Proof::default(), LogicId::PL),
            Err(CheckError::Empty)
        );
    }
}
