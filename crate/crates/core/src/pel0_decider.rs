//! PEL0 derivability by free-of-equivalents normalization.
//!
//! The distinct subformulas of the input are processed shortest first. Each
//! one is rebuilt from the representatives of its children and then either
//! replaced by an equivalent, already marked formula or marked itself. Once
//! every node is marked, no two distinct subformulas of the result are
//! PEL0-equivalent, and on such formulas PEL0 and PL derive the same
//! sequents. Equivalence tests inside the loop are therefore two PL
//! decisions.
//!
//! Candidates are bucketed by a semantic fingerprint before any PL call:
//! the value vector under 64 pseudo-random degenerate-implication
//! valuations (where `φ → ψ` takes the value of `ψ`) and under 64 classical
//! assignments. PEL0 is contained in both PL + →ED and CL, so equivalent
//! formulas always share a fingerprint.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::pl_decider::{decide_pl_multi, PlClosure, Saturation};
use crate::syntax::{reject_or, subformulas_of_all, DisjunctionError, Formula, Kind};

/// Whether `φ` and `ψ` are PEL0-equivalent, computed as PL mutual
/// derivability. Exact when the proper subformulas of both are jointly free
/// of equivalents, which the normalization loop guarantees.
pub fn pel0_equivalent(phi: Formula, psi: Formula) -> bool {
    if phi == psi {
        return true;
    }
    let Ok(closure) = PlClosure::prepare([phi, psi]) else {
        return false;
    };
    let (a, b) = (
        closure.index_of(phi).unwrap(),
        closure.index_of(psi).unwrap(),
    );
    let mut st = Saturation::new();
    closure.saturate(&[a], &mut st);
    if !st.contains_index(b) {
        return false;
    }
    closure.saturate(&[b], &mut st);
    st.contains_index(a)
}

#[derive(Clone, Copy, Debug)]
pub struct NormalizeOptions {
    /// Skip PL checks between formulas with different fingerprints.
    pub prefilter: bool,
    /// Re-verify the loop invariants after every step (quadratic extra
    /// work; panics on violation).
    pub check_invariants: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            prefilter: true,
            check_invariants: false,
        }
    }
}

/// Counters from one normalization run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizeStats {
    /// Distinct input subformulas.
    pub nodes: usize,
    pub marked: usize,
    pub replaced: usize,
    /// `pel0_equivalent` calls made by the loop.
    pub equivalence_checks: usize,
    /// Steps at which the processed node was shorter than some already
    /// marked formula (a replacement below it had shrunk it).
    pub order_inversions: usize,
}

/// Result of normalizing a list of formulas.
#[derive(Clone, Debug)]
pub struct Normalization {
    /// Normalized counterpart of each input, in input order.
    pub output: Vec<Formula>,
    /// Representative of every subformula of the input.
    reps: FxHashMap<Formula, Formula>,
    /// Marked formulas in marking order.
    pub marked: Vec<Formula>,
    pub stats: NormalizeStats,
}

impl Normalization {
    /// Normalized form of any subformula of the input.
    pub fn representative(&self, f: Formula) -> Option<Formula> {
        self.reps.get(&f).copied()
    }
}

/// Equivalent formulas, no longer than the inputs, whose subformulas are
/// jointly free of PEL0-equivalents.
pub fn normalize_free_of_equivalents(
    formulas: &[Formula],
) -> Result<Vec<Formula>, DisjunctionError> {
    Ok(normalize_with(formulas, NormalizeOptions::default())?.output)
}

type Fingerprint = (u64, u64);

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// 64 pseudo-random truth values for a variable, fixed by its name.
fn var_bits(name: &str, salt: u64) -> u64 {
    name.bytes().fold(salt, |h, c| splitmix(h ^ u64::from(c)))
}

fn atom_fingerprint(f: Formula) -> Fingerprint {
    match f.kind() {
        Kind::Top => (!0, !0),
        Kind::Bot => (0, 0),
        Kind::Var(name) => (var_bits(name, 0x5EED_0001), var_bits(name, 0x5EED_0002)),
        _ => unreachable!("not an atom"),
    }
}

fn combine(f: Formula, a: Fingerprint, b: Fingerprint) -> Fingerprint {
    match f.kind() {
        Kind::And(..) => (a.0 & b.0, a.1 & b.1),
        Kind::Imp(..) => (b.0, !a.1 | b.1),
        Kind::Or(..) => (a.0 | b.0, a.1 | b.1),
        _ => unreachable!("not a binary node"),
    }
}

pub fn normalize_with(
    formulas: &[Formula],
    options: NormalizeOptions,
) -> Result<Normalization, DisjunctionError> {
    reject_or(formulas)?;
    let nodes = subformulas_of_all(formulas.iter().copied());
    let n = nodes.len();
    let index: FxHashMap<Formula, usize> = nodes.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let children: Vec<Option<(usize, usize)>> = nodes
        .iter()
        .map(|f| f.split().map(|(_, a, b)| (index[&a], index[&b])))
        .collect();
    let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in children.iter().enumerate() {
        if let Some((a, b)) = *c {
            parents[a].push(i);
            if b != a {
                parents[b].push(i);
            }
        }
    }
    let names: Vec<String> = nodes.iter().map(|f| f.to_string()).collect();

    let mut cur_len: Vec<u64> = nodes.iter().map(|f| f.length()).collect();
    let mut rep: Vec<Option<Formula>> = vec![None; n];
    let mut fp: Vec<Fingerprint> = vec![(0, 0); n];
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    // Ties are broken by printed form; `order` ranks nodes by it.
    let mut by_name: Vec<usize> = (0..n).collect();
    by_name.sort_by(|&a, &b| names[a].cmp(&names[b]));
    let mut order = vec![0usize; n];
    for (rank, &i) in by_name.iter().enumerate() {
        order[i] = rank;
    }
    for i in 0..n {
        heap.push(Reverse((cur_len[i], order[i])));
    }

    let mut marked: Vec<Formula> = Vec::new();
    let mut marked_set: FxHashSet<Formula> = FxHashSet::default();
    let mut buckets: FxHashMap<Fingerprint, Vec<Formula>> = FxHashMap::default();
    let mut stats = NormalizeStats {
        nodes: n,
        ..NormalizeStats::default()
    };
    let mut longest_marked = 0u64;

    while let Some(Reverse((len, rank))) = heap.pop() {
        let i = by_name[rank];
        if rep[i].is_some() || len != cur_len[i] {
            continue;
        }
        let g = match children[i] {
            None => nodes[i],
            Some((a, b)) => {
                let (ra, rb) = (
                    rep[a].expect("children are processed first"),
                    rep[b].expect("children are processed first"),
                );
                let (op, _, _) = nodes[i].split().unwrap();
                Formula::binary(op, ra, rb)
            }
        };
        debug_assert_eq!(g.length(), len);
        fp[i] = match children[i] {
            None => atom_fingerprint(g),
            Some((a, b)) => combine(g, fp[a], fp[b]),
        };
        if len < longest_marked {
            stats.order_inversions += 1;
        }

        let chosen = if marked_set.contains(&g) {
            g
        } else {
            let candidates: &[Formula] = if options.prefilter {
                buckets.get(&fp[i]).map_or(&[], |v| v.as_slice())
            } else {
                &marked
            };
            let mut found = None;
            for &m in candidates {
                stats.equivalence_checks += 1;
                if pel0_equivalent(g, m) {
                    found = Some(m);
                    break;
                }
            }
            match found {
                Some(m) => {
                    stats.replaced += 1;
                    m
                }
                None => {
                    if options.check_invariants {
                        check_new_mark(g, &marked, &marked_set);
                    }
                    marked.push(g);
                    marked_set.insert(g);
                    buckets.entry(fp[i]).or_default().push(g);
                    longest_marked = longest_marked.max(g.length());
                    stats.marked += 1;
                    g
                }
            }
        };
        rep[i] = Some(chosen);

        if options.check_invariants {
            assert!(
                chosen.length() <= nodes[i].length(),
                "representative {chosen} is longer than the original node {}",
                nodes[i]
            );
            let shortest_open = (0..n)
                .filter(|&j| rep[j].is_none())
                .map(|j| nodes[j].length())
                .min();
            if let Some(s) = shortest_open {
                assert!(
                    longest_marked <= s,
                    "a marked formula is longer than the original of an unmarked node"
                );
            }
        }

        // A replacement changes the length of every open ancestor. It may
        // grow past the shrunken form, but never past the original.
        if cur_len[i] != chosen.length() {
            cur_len[i] = chosen.length();
            let mut stack: Vec<usize> = parents[i].clone();
            while let Some(p) = stack.pop() {
                if rep[p].is_some() {
                    continue;
                }
                let (a, b) = children[p].unwrap();
                let new_len = 1 + cur_len[a] + cur_len[b];
                if new_len != cur_len[p] {
                    cur_len[p] = new_len;
                    heap.push(Reverse((new_len, order[p])));
                    stack.extend(parents[p].iter().copied());
                }
            }
        }
    }

    let reps: FxHashMap<Formula, Formula> = nodes
        .iter()
        .zip(&rep)
        .map(|(f, r)| (*f, r.expect("every node is processed")))
        .collect();
    let output = formulas.iter().map(|f| reps[f]).collect();
    Ok(Normalization {
        output,
        reps,
        marked,
        stats,
    })
}

/// Invariants for a formula about to be marked: its children are marked,
/// and it is equivalent to no marked formula.
fn check_new_mark(g: Formula, marked: &[Formula], marked_set: &FxHashSet<Formula>) {
    if let Some((_, a, b)) = g.split() {
        assert!(
            marked_set.contains(&a) && marked_set.contains(&b),
            "{g} is marked before its subformulas"
        );
    }
    for &m in marked {
        assert!(!pel0_equivalent(g, m), "{g} and marked {m} are equivalent");
    }
}

/// For each query, whether it is PEL0-derivable from the hypotheses.
/// Hypotheses and queries are normalized together, then decided in PL.
pub fn decide_pel0_multi(
    hypotheses: &[Formula],
    queries: &[Formula],
) -> Result<Vec<bool>, DisjunctionError> {
    let all: Vec<Formula> = hypotheses.iter().chain(queries).copied().collect();
    let norm = normalize_free_of_equivalents(&all)?;
    let (h, q) = norm.split_at(hypotheses.len());
    decide_pl_multi(h, q)
}

pub fn decide_pel0(sequent: &crate::syntax::Sequent) -> Result<bool, DisjunctionError> {
    Ok(decide_pel0_multi(sequent.antecedents(), &[sequent.consequent()])?[0])
}

/// A normalization of a fixed formula set, reused across many decisions
/// whose hypotheses and queries are drawn from that set.
///
/// Normalizing a superset is as good as normalizing the formulas of one
/// query: the result is free of equivalents either way.
pub struct Pel0Context {
    norm: Normalization,
    closure: PlClosure,
}

impl Pel0Context {
    pub fn prepare(formulas: &[Formula]) -> Result<Pel0Context, DisjunctionError> {
        let norm = normalize_with(formulas, NormalizeOptions::default())?;
        let closure = PlClosure::prepare(norm.output.iter().copied())?;
        Ok(Pel0Context { norm, closure })
    }

    pub fn normalization(&self) -> &Normalization {
        &self.norm
    }

    pub fn closure(&self) -> &PlClosure {
        &self.closure
    }

    /// Universe index of the normal form of `f`, for use with
    /// [`PlClosure::saturate`].
    pub fn index_of(&self, f: Formula) -> Option<u32> {
        self.closure.index_of(self.norm.representative(f)?)
    }

    /// Saturates from hypotheses drawn from the prepared set.
    pub fn saturate(&self, hypotheses: &[Formula], state: &mut Saturation) {
        let idx: Vec<u32> = hypotheses
            .iter()
            .map(|h| {
                self.index_of(*h)
                    .expect("hypothesis outside the prepared set")
            })
            .collect();
        self.closure.saturate(&idx, state);
    }

    pub fn decide(&self, hypotheses: &[Formula], queries: &[Formula]) -> Vec<bool> {
        let mut st = Saturation::new();
        self.saturate(hypotheses, &mut st);
        queries
            .iter()
            .map(|q| {
                let i = self.index_of(*q).expect("query outside the prepared set");
                st.contains_index(i)
            })
            .collect()
    }
}
