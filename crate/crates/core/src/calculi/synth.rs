//! Derivations of the substitution rules `E_F` from `E1`/`E2` (or
//! `E1_0`/`E2_0` without side assumptions), by induction on the context `F`.

use thiserror::Error;

use super::proof::{Proof, ProofBuilder};
use super::rules::RuleTag;
use crate::syntax::{Formula, Kind, Sequent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("input proof for the {which} direction concludes `{found}`, expected `{expected}`")]
    WrongConclusion {
        which: &'static str,
        expected: String,
        found: String,
    },
    #[error("the weak form needs an empty Γ")]
    NonEmptyContext,
}

/// Which family of substitution rules the synthesized proof may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EfForm {
    /// `E1`, `E2`: valid under PEL.
    Strong,
    /// `E1_0`, `E2_0` with `Γ = ∅`: valid under PEL0.
    Weak,
}

/// Builds a proof of `Γ, F[hole:=φ] |- F[hole:=ψ]` from proofs of
/// `Γ, φ |- ψ` and `Γ, ψ |- φ`, using `E1`/`E2` for implication contexts.
pub fn synthesize_ef_proof(
    context: Formula,
    hole: Formula,
    phi: Formula,
    psi: Formula,
    gamma: &[Formula],
    forward: &Proof,
    backward: &Proof,
) -> Result<Proof, SynthError> {
    synthesize(
        EfForm::Strong,
        context,
        hole,
        phi,
        psi,
        gamma,
        forward,
        backward,
    )
}

/// The weak form: proves `F[hole:=φ] |- F[hole:=ψ]` from proofs of
/// `φ |- ψ` and `ψ |- φ` with `E1_0`/`E2_0`, so the result is a PEL0 proof.
pub fn synthesize_e0f_proof(
    context: Formula,
    hole: Formula,
    phi: Formula,
    psi: Formula,
    forward: &Proof,
    backward: &Proof,
) -> Result<Proof, SynthError> {
    synthesize(
        EfForm::Weak,
        context,
        hole,
        phi,
        psi,
        &[],
        forward,
        backward,
    )
}

#[allow(clippy::too_many_arguments)]
fn synthesize(
    form: EfForm,
    context: Formula,
    hole: Formula,
    phi: Formula,
    psi: Formula,
    gamma: &[Formula],
    forward: &Proof,
    backward: &Proof,
) -> Result<Proof, SynthError> {
    if form == EfForm::Weak && !gamma.is_empty() {
        return Err(SynthError::NonEmptyContext);
    }
    let gamma = Sequent::new(gamma.iter().copied(), Formula::top());
    let expect = |which, proof: &Proof, from: Formula, to: Formula| {
        let want = gamma.with_antecedent(from).with_consequent(to);
        match proof.conclusion() {
            Some(c) if *c == want => Ok(()),
            found => Err(SynthError::WrongConclusion {
                which,
                expected: want.to_string(),
                found: found.map_or_else(|| "nothing".into(), |c| c.to_string()),
            }),
        }
    };
    expect("forward", forward, phi, psi)?;
    expect("backward", backward, psi, phi)?;

    let mut b = ProofBuilder::new();
    let fwd = b.import(forward).expect("checked non-empty");
    let bwd = b.import(backward).expect("checked non-empty");
    let mut syn = Synth {
        b,
        form,
        hole,
        gamma,
        base: [(phi, psi, fwd), (psi, phi, bwd)],
    };
    let goal = syn.prove(context, 0);
    Ok(syn.b.finish(goal))
}

struct Synth {
    b: ProofBuilder,
    form: EfForm,
    hole: Formula,
    /// Side assumptions, as the antecedents of a dummy sequent.
    gamma: Sequent,
    /// `(from, to, step of Γ, from |- to)` for both directions.
    base: [(Formula, Formula, usize); 2],
}

impl Synth {
    fn seq(&self, extra: &[Formula], cons: Formula) -> Sequent {
        self.gamma
            .with_antecedents(extra.iter().copied())
            .with_consequent(cons)
    }

    /// `Γ, G |- G`.
    fn reflexive(&mut self, g: Formula) -> usize {
        let ax = self.b.x2x(g);
        let target = self.seq(&[g], g);
        self.b.inflate(ax, target)
    }

    /// Proves `Γ, F[from] |- F[to]` where direction `dir` selects the
    /// (from, to) pair.
    fn prove(&mut self, f: Formula, dir: usize) -> usize {
        let (from, to, base) = self.base[dir];
        if f == self.hole {
            return base;
        }
        let f_from = f.substitute(self.hole, from);
        let f_to = f.substitute(self.hole, to);
        if f_from == f_to {
            return self.reflexive(f_from);
        }
        match f.kind() {
            Kind::And(g, h) => {
                let (g_from, g_to) = (g.substitute(self.hole, from), g.substitute(self.hole, to));
                let (h_from, h_to) = (h.substitute(self.hole, from), h.substitute(self.hole, to));
                let left = self.conjunct(f_from, g_from, g_to, g, dir, RuleTag::AndEl);
                let right = self.conjunct(f_from, h_from, h_to, h, dir, RuleTag::AndEr);
                self.b
                    .add(self.seq(&[f_from], f_to), RuleTag::AndI, vec![left, right])
            }
            Kind::Imp(g, h) => {
                let (g_from, g_to) = (g.substitute(self.hole, from), g.substitute(self.hole, to));
                let h_from = h.substitute(self.hole, from);
                let h_to = h.substitute(self.hole, to);
                let mid = Formula::imp(g_to, h_from);
                // Γ, G[from] -> H[from] |- G[to] -> H[from]
                let first = if g_from == g_to {
                    None
                } else {
                    let p1 = self.prove(g, dir);
                    let p2 = self.prove(g, 1 - dir);
                    let rule = self.rule(RuleTag::E1, RuleTag::E1_0);
                    Some(self.b.add(self.seq(&[f_from], mid), rule, vec![p1, p2]))
                };
                // Γ, G[to] -> H[from] |- G[to] -> H[to]
                let second = if h_from == h_to {
                    None
                } else {
                    let p1 = self.prove(h, dir);
                    let p2 = self.prove(h, 1 - dir);
                    let rule = self.rule(RuleTag::E2, RuleTag::E2_0);
                    Some(self.b.add(self.seq(&[mid], f_to), rule, vec![p1, p2]))
                };
                match (first, second) {
                    (Some(s), None) | (None, Some(s)) => s,
                    (Some(first), Some(second)) => {
                        let wide = self.seq(&[f_from, mid], f_to);
                        let second = self.b.inflate(second, wide);
                        self.b
                            .add(self.seq(&[f_from], f_to), RuleTag::Cut, vec![first, second])
                    }
                    (None, None) => unreachable!("F[from] != F[to] needs a side to differ"),
                }
            }
            Kind::Or(g, h) => {
                let (g_from, g_to) = (g.substitute(self.hole, from), g.substitute(self.hole, to));
                let (h_from, h_to) = (h.substitute(self.hole, from), h.substitute(self.hole, to));
                let left = self.disjunct(f_from, f_to, g_from, g_to, g, dir, RuleTag::OrIl);
                let right = self.disjunct(f_from, f_to, h_from, h_to, h, dir, RuleTag::OrIr);
                let whole = self.reflexive(f_from);
                self.b.add(
                    self.seq(&[f_from], f_to),
                    RuleTag::OrE,
                    vec![left, right, whole],
                )
            }
            Kind::Var(_) | Kind::Top | Kind::Bot => {
                unreachable!("atoms other than the hole are fixed")
            }
        }
    }

    fn rule(&self, strong: RuleTag, weak: RuleTag) -> RuleTag {
        match self.form {
            EfForm::Strong => strong,
            EfForm::Weak => weak,
        }
    }

    /// `Γ, F[from] |- G[to]` for a conjunct `G` of `F`.
    fn conjunct(
        &mut self,
        f_from: Formula,
        g_from: Formula,
        g_to: Formula,
        g: Formula,
        dir: usize,
        elim: RuleTag,
    ) -> usize {
        let ax = self.b.x2x(f_from);
        let proj = self.b.add(Sequent::new([f_from], g_from), elim, vec![ax]);
        let proj = self.b.inflate(proj, self.seq(&[f_from], g_from));
        if g_from == g_to {
            return proj;
        }
        let ih = self.prove(g, dir);
        let ih = self.b.inflate(ih, self.seq(&[f_from, g_from], g_to));
        self.b
            .add(self.seq(&[f_from], g_to), RuleTag::Cut, vec![proj, ih])
    }

    /// `Γ, F[from], G[from] |- F[to]` for a disjunct `G` of `F`.
    #[allow(clippy::too_many_arguments)]
    fn disjunct(
        &mut self,
        f_from: Formula,
        f_to: Formula,
        g_from: Formula,
        g_to: Formula,
        g: Formula,
        dir: usize,
        intro: RuleTag,
    ) -> usize {
        let ih = if g_from == g_to {
            self.reflexive(g_from)
        } else {
            self.prove(g, dir)
        };
        let ih = self.b.inflate(ih, self.seq(&[f_from, g_from], g_to));
        self.b
            .add(self.seq(&[f_from, g_from], f_to), intro, vec![ih])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculi::{check_proof, LogicId};
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    /// `x |- x & x` and `x & x |- x` in PL.
    fn x_and_xx() -> (Proof, Proof) {
        let fwd = Proof::parse(
            "1. x |- x ; rule=X2X ; premises=\n2. x |- x & x ; rule=AndI ; premises=1,1\n",
        )
        .unwrap();
        let bwd = Proof::parse(
            "1. x & x |- x & x ; rule=X2X ; premises=\n2. x & x |- x ; rule=AndEl ; premises=1\n",
        )
        .unwrap();
        (fwd, bwd)
    }

    #[test]
    fn hole_context_returns_input() {
        let (fwd, bwd) = x_and_xx();
        let p = synthesize_ef_proof(f("x0"), f("x0"), f("x"), f("x & x"), &[], &fwd, &bwd).unwrap();
        assert_eq!(p.conclusion().unwrap().to_string(), "x |- x & x");
        check_proof(&p, LogicId::PL).unwrap();
    }

    #[test]
    fn constant_context_is_reflexive() {
        let (fwd, bwd) = x_and_xx();
        let p = synthesize_ef_proof(f("c"), f("x0"), f("x"), f("x & x"), &[], &fwd, &bwd).unwrap();
        assert_eq!(p.conclusion().unwrap().to_string(), "c |- c");
        assert_eq!(p.rules_used().collect::<Vec<_>>(), vec![RuleTag::X2X]);
    }

    #[test]
    fn conjunction_context() {
        let (fwd, bwd) = x_and_xx();
        let p =
            synthesize_ef_proof(f("x0 & c"), f("x0"), f("x"), f("x & x"), &[], &fwd, &bwd).unwrap();
        assert_eq!(p.conclusion().unwrap().to_string(), "x & c |- x & x & c");
        check_proof(&p, LogicId::PEL).unwrap();
        check_proof(&p, LogicId::PL).unwrap();
    }

    #[test]
    fn implication_context_both_forms() {
        let (fwd, bwd) = x_and_xx();
        let ctx = f("(x0 -> c) -> x0");
        let p = synthesize_ef_proof(ctx, f("x0"), f("x"), f("x & x"), &[], &fwd, &bwd).unwrap();
        assert_eq!(
            p.conclusion().unwrap(),
            &Sequent::new([f("(x -> c) -> x")], f("(x & x -> c) -> x & x"))
        );
        check_proof(&p, LogicId::PEL).unwrap();
        assert!(check_proof(&p, LogicId::PEL0).is_err());

        let w = synthesize_e0f_proof(ctx, f("x0"), f("x"), f("x & x"), &fwd, &bwd).unwrap();
        assert_eq!(w.conclusion(), p.conclusion());
        check_proof(&w, LogicId::PEL0).unwrap();
    }

    #[test]
    fn side_assumptions() {
        // a -> b, b -> a |- a -> b ... as Γ-relative equivalence of a and b.
        let g = [f("a -> b"), f("b -> a")];
        let fwd = Proof::parse(
            "1. a |- a ; rule=X2X ; premises=\n\
             2. a, a -> b, b -> a |- a ; rule=PremiseInflation ; premises=1\n\
             3. a -> b |- a -> b ; rule=X2X ; premises=\n\
             4. a, a -> b, b -> a |- a -> b ; rule=PremiseInflation ; premises=3\n\
             5. a, a -> b, b -> a |- b ; rule=ImpE ; premises=2,4\n",
        )
        .unwrap();
        let bwd = Proof::parse(
            "1. b |- b ; rule=X2X ; premises=\n\
             2. b, a -> b, b -> a |- b ; rule=PremiseInflation ; premises=1\n\
             3. b -> a |- b -> a ; rule=X2X ; premises=\n\
             4. b, a -> b, b -> a |- b -> a ; rule=PremiseInflation ; premises=3\n\
             5. b, a -> b, b -> a |- a ; rule=ImpE ; premises=2,4\n",
        )
        .unwrap();
        let p = synthesize_ef_proof(f("(x0 -> c) & x0"), f("x0"), f("a"), f("b"), &g, &fwd, &bwd)
            .unwrap();
        check_proof(&p, LogicId::PEL).unwrap();
        assert_eq!(
            p.conclusion().unwrap(),
            &Sequent::new([g[0], g[1], f("(a -> c) & a")], f("(b -> c) & b"))
        );
        assert_eq!(
            synthesize_e0f_proof(f("x0"), f("x0"), f("a"), f("b"), &fwd, &bwd),
            Err(SynthError::WrongConclusion {
                which: "forward",
                expected: "a |- b".into(),
                found: "a, a -> b, b -> a |- b".into()
            })
        );
    }

    #[test]
    fn disjunctive_context() {
        let (fwd, bwd) = x_and_xx();
        let p =
            synthesize_ef_proof(f("x0 | c"), f("x0"), f("x"), f("x & x"), &[], &fwd, &bwd).unwrap();
        check_proof(&p, LogicId::PL.with_or()).unwrap();
        assert_eq!(p.conclusion().unwrap().to_string(), "x | c |- x & x | c");
    }
}
