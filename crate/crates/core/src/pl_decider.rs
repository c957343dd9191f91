//! Multiple derivability for disjunction-free PL by forward chaining.
//!
//! Every formula of a fixed universe (closed under subformulas) gets a dense
//! index. Saturation starts from the hypotheses (and `⊤`, when it is in the
//! universe) and applies
//!
//! ```text
//! ∧E   α∧β derived                 ⇒ α, β derived
//! ∧I   α, β derived, α∧β ∈ U       ⇒ α∧β derived
//! →E   α, α→β derived              ⇒ β derived
//! →IW  β derived, α→β ∈ U          ⇒ α→β derived
//! ```
//!
//! through a worklist. Each formula is pushed at most once and each watch
//! edge is inspected a constant number of times, so a run is linear in the
//! size of the universe.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::calculi::{Proof, ProofBuilder, RuleTag};
use crate::syntax::{reject_or, subformulas_of_all, DisjunctionError, Formula, Kind, Sequent};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
enum Shape {
    Atom,
    And(u32, u32),
    Imp(u32, u32),
}

/// A compressed adjacency list: `targets[offsets[i]..offsets[i + 1]]`.
#[derive(Clone, Debug, Default)]
struct Csr {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    fn build(n: usize, edges: &[(u32, u32)]) -> Csr {
        let mut offsets = vec![0u32; n + 1];
        for &(from, _) in edges {
            offsets[from as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; edges.len()];
        for &(from, to) in edges {
            targets[fill[from as usize] as usize] = to;
            fill[from as usize] += 1;
        }
        Csr { offsets, targets }
    }

    #[inline]
    fn get(&self, i: u32) -> &[u32] {
        let i = i as usize;
        &self.targets[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }
}

/// A prepared universe for repeated PL saturations.
#[derive(Clone, Debug)]
pub struct PlClosure {
    formulas: Vec<Formula>,
    index: FxHashMap<Formula, u32>,
    shape: Vec<Shape>,
    /// Conjunctions having the formula as a conjunct.
    in_and: Csr,
    /// Implications having the formula as antecedent.
    imp_from: Csr,
    /// Implications having the formula as consequent.
    imp_to: Csr,
    top: u32,
}

/// Why a formula was derived, in terms of universe indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    Hypothesis,
    Top,
    AndEl(u32),
    AndEr(u32),
    AndI(u32, u32),
    /// `(antecedent, implication)`
    ImpE(u32, u32),
    ImpIW(u32),
}

/// Scratch space for [`PlClosure::saturate`], reusable across calls.
#[derive(Clone, Debug, Default)]
pub struct Saturation {
    derived: Vec<u64>,
    list: Vec<u32>,
    reasons: Option<Vec<Reason>>,
}

impl Saturation {
    pub fn new() -> Saturation {
        Saturation::default()
    }

    /// Records a [`Reason`] per derived formula on the next runs.
    pub fn with_reasons() -> Saturation {
        Saturation {
            reasons: Some(Vec::new()),
            ..Saturation::default()
        }
    }

    #[inline]
    pub fn contains_index(&self, i: u32) -> bool {
        self.derived[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    /// Derived universe indices in derivation order.
    pub fn derived_indices(&self) -> &[u32] {
        &self.list
    }

    pub fn reason(&self, i: u32) -> Option<Reason> {
        self.reasons
            .as_ref()
            .filter(|_| self.contains_index(i))
            .map(|r| r[i as usize])
    }

    /// The raw bit words of the derived set.
    pub fn bits(&self) -> &[u64] {
        &self.derived
    }
}

impl PlClosure {
    /// Indexes the subformula closure of `formulas`.
    pub fn prepare<I: IntoIterator<Item = Formula>>(
        formulas: I,
    ) -> Result<PlClosure, DisjunctionError> {
        let all = subformulas_of_all(formulas);
        reject_or(&all)?;
        let n = all.len();
        let index: FxHashMap<Formula, u32> = all
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i as u32))
            .collect();
        let mut shape = Vec::with_capacity(n);
        let (mut in_and, mut imp_from, mut imp_to) = (Vec::new(), Vec::new(), Vec::new());
        for (i, f) in all.iter().enumerate() {
            let i = i as u32;
            shape.push(match f.kind() {
                Kind::And(a, b) => {
                    let (a, b) = (index[&a], index[&b]);
                    in_and.push((a, i));
                    if a != b {
                        in_and.push((b, i));
                    }
                    Shape::And(a, b)
                }
                Kind::Imp(a, b) => {
                    let (a, b) = (index[&a], index[&b]);
                    imp_from.push((a, i));
                    imp_to.push((b, i));
                    Shape::Imp(a, b)
                }
                _ => Shape::Atom,
            });
        }
        let top = index.get(&Formula::top()).copied().unwrap_or(NONE);
        Ok(PlClosure {
            in_and: Csr::build(n, &in_and),
            imp_from: Csr::build(n, &imp_from),
            imp_to: Csr::build(n, &imp_to),
            formulas: all,
            index,
            shape,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    /// Universe members, children before parents.
    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn index_of(&self, f: Formula) -> Option<u32> {
        self.index.get(&f).copied()
    }

    pub fn formula(&self, i: u32) -> Formula {
        self.formulas[i as usize]
    }

    /// Saturates from the given hypothesis indices into `state`.
    pub fn saturate(&self, hyps: &[u32], state: &mut Saturation) {
        let words = self.formulas.len().div_ceil(64);
        state.derived.clear();
        state.derived.resize(words, 0);
        state.list.clear();
        if let Some(r) = state.reasons.as_mut() {
            r.clear();
            r.resize(self.formulas.len(), Reason::Hypothesis);
        }
        let Saturation {
            derived,
            list,
            reasons,
        } = state;

        let mut add = |i: u32, why: Reason, derived: &mut Vec<u64>, list: &mut Vec<u32>| {
            let (w, b) = ((i >> 6) as usize, i & 63);
            if derived[w] >> b & 1 == 0 {
                derived[w] |= 1 << b;
                list.push(i);
                if let Some(r) = reasons.as_mut() {
                    r[i as usize] = why;
                }
            }
        };
        for &h in hyps {
            add(h, Reason::Hypothesis, derived, list);
        }
        if self.top != NONE {
            add(self.top, Reason::Top, derived, list);
        }

        let mut next = 0;
        while next < list.len() {
            let f = list[next];
            next += 1;
            match self.shape[f as usize] {
                Shape::And(a, b) => {
                    add(a, Reason::AndEl(f), derived, list);
                    add(b, Reason::AndEr(f), derived, list);
                }
                Shape::Imp(a, b) => {
                    if bit(derived, a) {
                        add(b, Reason::ImpE(a, f), derived, list);
                    }
                }
                Shape::Atom => {}
            }
            for &p in self.in_and.get(f) {
                if let Shape::And(a, b) = self.shape[p as usize] {
                    if bit(derived, a) && bit(derived, b) {
                        add(p, Reason::AndI(a, b), derived, list);
                    }
                }
            }
            for &p in self.imp_to.get(f) {
                add(p, Reason::ImpIW(f), derived, list);
            }
            for &p in self.imp_from.get(f) {
                if bit(derived, p) {
                    if let Shape::Imp(_, b) = self.shape[p as usize] {
                        add(b, Reason::ImpE(f, p), derived, list);
                    }
                }
            }
        }
    }

    /// Saturates from formulas, which must all be universe members.
    pub fn saturate_formulas(&self, hyps: &[Formula], state: &mut Saturation) {
        let idx: Vec<u32> = hyps
            .iter()
            .map(|h| {
                self.index_of(*h)
                    .expect("hypothesis outside the prepared universe")
            })
            .collect();
        self.saturate(&idx, state);
    }

    /// Whether `f` is in the universe and derived in `state`.
    pub fn is_derived(&self, state: &Saturation, f: Formula) -> bool {
        self.index_of(f).is_some_and(|i| state.contains_index(i))
    }

    /// A PL proof of `hyps |- goal` from a saturation recorded with reasons.
    pub fn extract_proof(
        &self,
        hyps: &[Formula],
        state: &Saturation,
        goal: Formula,
    ) -> Option<Proof> {
        let g = self.index_of(goal)?;
        if !state.contains_index(g) {
            return None;
        }
        state.reasons.as_ref()?;
        let gamma = Sequent::new(hyps.iter().copied(), Formula::top());
        let mut b = ProofBuilder::new();
        let mut done: FxHashMap<u32, usize> = FxHashMap::default();
        let goal = self.prove(g, &gamma, state, &mut b, &mut done);
        Some(b.finish(goal))
    }

    fn prove(
        &self,
        i: u32,
        gamma: &Sequent,
        state: &Saturation,
        b: &mut ProofBuilder,
        done: &mut FxHashMap<u32, usize>,
    ) -> usize {
        if let Some(&s) = done.get(&i) {
            return s;
        }
        let f = self.formula(i);
        let conclusion = gamma.with_consequent(f);
        let step = match state.reason(i).expect("derived") {
            Reason::Hypothesis => {
                let ax = b.x2x(f);
                b.inflate(ax, conclusion)
            }
            Reason::Top => {
                let ax = b.add(Sequent::axiom(f), RuleTag::Top, vec![]);
                b.inflate(ax, conclusion)
            }
            Reason::AndEl(c) | Reason::AndEr(c) => {
                let rule = if matches!(state.reason(i), Some(Reason::AndEl(_))) {
                    RuleTag::AndEl
                } else {
                    RuleTag::AndEr
                };
                let p = self.prove(c, gamma, state, b, done);
                b.add(conclusion, rule, vec![p])
            }
            Reason::AndI(l, r) => {
                let pl = self.prove(l, gamma, state, b, done);
                let pr = self.prove(r, gamma, state, b, done);
                b.add(conclusion, RuleTag::AndI, vec![pl, pr])
            }
            Reason::ImpE(a, imp) => {
                let pa = self.prove(a, gamma, state, b, done);
                let pi = self.prove(imp, gamma, state, b, done);
                b.add(conclusion, RuleTag::ImpE, vec![pa, pi])
            }
            Reason::ImpIW(c) => {
                let p = self.prove(c, gamma, state, b, done);
                b.add(conclusion, RuleTag::ImpIW, vec![p])
            }
        };
        done.insert(i, step);
        step
    }

    /// Trace events in derivation order.
    pub fn trace(&self, state: &Saturation) -> Vec<TraceEvent> {
        let Some(_) = state.reasons else {
            return Vec::new();
        };
        state
            .list
            .iter()
            .map(|&i| {
                let f = self.formula(i);
                let (rule, from) = match state.reason(i).expect("derived") {
                    Reason::Hypothesis => (RuleTag::X2X, vec![f]),
                    Reason::Top => (RuleTag::Top, vec![]),
                    Reason::AndEl(c) => (RuleTag::AndEl, vec![self.formula(c)]),
                    Reason::AndEr(c) => (RuleTag::AndEr, vec![self.formula(c)]),
                    Reason::AndI(l, r) => (RuleTag::AndI, vec![self.formula(l), self.formula(r)]),
                    Reason::ImpE(a, imp) => {
                        (RuleTag::ImpE, vec![self.formula(a), self.formula(imp)])
                    }
                    Reason::ImpIW(c) => (RuleTag::ImpIW, vec![self.formula(c)]),
                };
                TraceEvent {
                    derived: f,
                    rule,
                    from,
                }
            })
            .collect()
    }
}

#[inline]
fn bit(words: &[u64], i: u32) -> bool {
    words[(i >> 6) as usize] >> (i & 63) & 1 == 1
}

/// One closure event: `derived <formula> by <rule> from <formulas>`.
/// Hypotheses are reported as `X2X` from themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub derived: Formula,
    pub rule: RuleTag,
    pub from: Vec<Formula>,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "derived {} by {}", self.derived, self.rule)?;
        if !self.from.is_empty() {
            f.write_str(" from ")?;
            for (k, g) in self.from.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{g}")?;
            }
        }
        Ok(())
    }
}

/// For each query, whether it is PL-derivable from the hypotheses. The
/// result is aligned with `queries`.
pub fn decide_pl_multi(
    hypotheses: &[Formula],
    queries: &[Formula],
) -> Result<Vec<bool>, DisjunctionError> {
    let closure = PlClosure::prepare(hypotheses.iter().chain(queries).copied())?;
    let mut state = Saturation::new();
    closure.saturate_formulas(hypotheses, &mut state);
    Ok(queries
        .iter()
        .map(|q| closure.is_derived(&state, *q))
        .collect())
}

pub fn decide_pl(sequent: &Sequent) -> Result<bool, DisjunctionError> {
    Ok(decide_pl_multi(sequent.antecedents(), &[sequent.consequent()])?[0])
}

/// Decides `sequent`, returning the closure events and, for theorems, a
/// proof that checks under PL.
pub fn decide_pl_traced(
    sequent: &Sequent,
) -> Result<(bool, Vec<TraceEvent>, Option<Proof>), DisjunctionError> {
    let closure = PlClosure::prepare(sequent.formulas())?;
    let mut state = Saturation::with_reasons();
    closure.saturate_formulas(sequent.antecedents(), &mut state);
    let goal = sequent.consequent();
    let proof = closure.extract_proof(sequent.antecedents(), &state, goal);
    Ok((
        closure.is_derived(&state, goal),
        closure.trace(&state),
        proof,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculi::{check_proof, LogicId};
    use crate::syntax::{parse_formula, parse_sequent};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn pl(s: &str) -> bool {
        decide_pl(&parse_sequent(s).unwrap()).unwrap()
    }

    #[test]
    fn separating_examples() {
        assert!(!pl("x -> x |- (x & x) -> x"));
        assert!(!pl("x -> x |- x -> (x & x)"));
        assert!(pl("x |- x & x"));
        assert!(pl("x & x |- x"));
        assert!(pl("x -> x |- x -> x"));
        assert!(!pl("bot |- x"));
        assert!(pl("|- top"));
        assert!(!pl("|- x -> x"));
        assert!(pl("|- x -> top"));
    }

    #[test]
    fn multiple_queries() {
        let got = decide_pl_multi(&[f("x"), f("x -> y")], &[f("y"), f("y -> x"), f("z")]).unwrap();
        assert_eq!(got, vec![true, true, false]);
    }

    #[test]
    fn disjunction_is_rejected() {
        assert!(decide_pl(&parse_sequent("x | y |- x").unwrap()).is_err());
    }

    #[test]
    fn trace_and_proof() {
        let s = parse_sequent("x, x -> y |- (z -> y) & x").unwrap();
        let (ok, trace, proof) = decide_pl_traced(&s).unwrap();
        assert!(ok);
        let lines: Vec<String> = trace.iter().map(|e| e.to_string()).collect();
        assert!(lines.contains(&"derived y by ImpE from x, x -> y".to_string()));
        assert!(lines.contains(&"derived z -> y by ImpIW from y".to_string()));
        let proof = proof.unwrap();
        check_proof(&proof, LogicId::PL).unwrap();
        assert_eq!(proof.conclusion(), Some(&s));

        let (ok, _, proof) = decide_pl_traced(&parse_sequent("x -> y |- y").unwrap()).unwrap();
        assert!(!ok && proof.is_none());
    }

    #[test]
    fn prepared_closure_reuse() {
        let c = PlClosure::prepare([f("x & y -> z"), f("x"), f("y"), f("z")]).unwrap();
        let mut st = Saturation::new();
        c.saturate_formulas(&[f("x"), f("y"), f("x & y -> z")], &mut st);
        assert!(c.is_derived(&st, f("z")));
        c.saturate_formulas(&[f("x"), f("x & y -> z")], &mut st);
        assert!(!c.is_derived(&st, f("z")));
    }
}
