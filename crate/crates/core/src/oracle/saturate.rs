//! Bounded saturation: the rule schemas of a logic applied exhaustively to
//! sequents over a finite universe.
//!
//! Tracked antecedent sets are the hypotheses `H` plus every extension
//! `H ∪ E` by at most `max_extra` pool formulas, where the pool holds the
//! formulas some rule may want to add to an antecedent set (discharged
//! implication antecedents, the sides of `E1`/`E2` premises, disjuncts,
//! excluded-middle cases). Each tracked set carries the bitset of universe
//! formulas derived from it; passes over all rules repeat until nothing
//! changes.
//!
//! The antecedent-free premises of `E1_0`, `E2_0` and `E0` are resolved by a
//! recursive saturation over the subformulas of the two sides, memoized per
//! pair. Each implication then belongs to a class of implications it can be
//! rewritten into, and a derived member puts the whole class in the
//! derived set (the E-rule followed by `Cut`).

use std::cell::RefCell;
use std::collections::hash_map::Entry;

use rustc_hash::FxHashMap;

use crate::calculi::{LogicId, RuleSet, RuleTag};
use crate::syntax::{subformulas_of_all, Formula, Kind, Sequent};

#[derive(Clone, Copy, Debug)]
enum Node {
    Top,
    Bot,
    Var,
    And(u32, u32),
    Imp(u32, u32),
    Or(u32, u32),
}

/// A subformula-closed formula set with dense indices, children first.
#[derive(Clone, Debug)]
pub struct Universe {
    formulas: Vec<Formula>,
    index: FxHashMap<Formula, u32>,
    nodes: Vec<Node>,
}

impl Universe {
    /// The subformula closure of `formulas`.
    pub fn new(formulas: impl IntoIterator<Item = Formula>) -> Universe {
        let formulas = subformulas_of_all(formulas);
        let index: FxHashMap<Formula, u32> = formulas
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i as u32))
            .collect();
        let nodes = formulas
            .iter()
            .map(|f| match f.kind() {
                Kind::Top => Node::Top,
                Kind::Bot => Node::Bot,
                Kind::Var(_) => Node::Var,
                Kind::And(a, b) => Node::And(index[&a], index[&b]),
                Kind::Imp(a, b) => Node::Imp(index[&a], index[&b]),
                Kind::Or(a, b) => Node::Or(index[&a], index[&b]),
            })
            .collect();
        Universe {
            formulas,
            index,
            nodes,
        }
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn index_of(&self, f: Formula) -> Option<u32> {
        self.index.get(&f).copied()
    }

    pub fn contains(&self, f: Formula) -> bool {
        self.index.contains_key(&f)
    }
}

/// Bounds for a saturation run.
#[derive(Clone, Copy, Debug)]
pub struct SaturationConfig {
    pub logic: LogicId,
    /// Most pool formulas added to the hypotheses in a tracked set.
    pub max_extra: usize,
    /// Most derived facts (across all tracked sets) before giving up.
    pub step_bound: usize,
}

impl SaturationConfig {
    pub fn new(logic: LogicId) -> SaturationConfig {
        SaturationConfig {
            logic,
            max_extra: 0,
            step_bound: 1_000_000,
        }
    }

    pub fn with_max_extra(self, max_extra: usize) -> SaturationConfig {
        SaturationConfig { max_extra, ..self }
    }

    pub fn with_step_bound(self, step_bound: usize) -> SaturationConfig {
        SaturationConfig { step_bound, ..self }
    }
}

/// Outcome of a query against a saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Derived,
    /// The fixpoint was reached without deriving the query.
    NotDerived,
    /// The step bound ran out first.
    Partial,
}

/// Memo of antecedent-free equivalences `φ ⊣⊢ ψ` per logic, shared by the
/// recursive saturations behind the weak E-rules.
#[derive(Debug, Default)]
pub struct EquivalenceMemo {
    table: RefCell<FxHashMap<(LogicId, Formula, Formula), Option<bool>>>,
}

impl EquivalenceMemo {
    pub fn new() -> EquivalenceMemo {
        EquivalenceMemo::default()
    }

    /// Whether `a ⊢ b` and `b ⊢ a`, each saturated over the subformulas of
    /// `a` and `b`. `None` if a step bound ran out.
    pub fn equivalent(&self, config: SaturationConfig, a: Formula, b: Formula) -> Option<bool> {
        if a == b {
            return Some(true);
        }
        let key = if a.id() <= b.id() {
            (config.logic, a, b)
        } else {
            (config.logic, b, a)
        };
        if let Some(v) = self.table.borrow().get(&key) {
            return *v;
        }
        let universe = Universe::new([a, b]);
        let prepared = Prepared::new(config, &universe, self);
        let one_way = |h: Formula, g: Formula| -> Option<bool> {
            let run = prepared.saturate(&[h]);
            match run.verdict(g) {
                OracleVerdict::Derived => Some(true),
                OracleVerdict::NotDerived => Some(false),
                OracleVerdict::Partial => None,
            }
        };
        let v = match one_way(a, b) {
            Some(true) => one_way(b, a),
            other => other,
        };
        self.table.borrow_mut().insert(key, v);
        v
    }
}

/// A universe prepared for one logic: pool, implication classes for the
/// weak E-rules, and pair tables for the strong ones.
pub struct Prepared<'u> {
    config: SaturationConfig,
    universe: &'u Universe,
    pool: Vec<u32>,
    /// For the weak E-rules: implications grouped by rewritability.
    classes: Vec<Vec<u32>>,
    /// `(p, q)` pairs of implications for `E1` (same consequent) and `E2`
    /// (same antecedent), `p != q`.
    strong_pairs: Vec<(u32, u32, RuleTag)>,
    flags: Flags,
    /// Some premise of a weak E-rule hit its step bound.
    classes_partial: bool,
}

impl<'u> Prepared<'u> {
    pub fn new(
        config: SaturationConfig,
        universe: &'u Universe,
        memo: &EquivalenceMemo,
    ) -> Prepared<'u> {
        let rules = config.logic.rules();
        let imps: Vec<u32> = (0..universe.len() as u32)
            .filter(|&i| matches!(universe.nodes[i as usize], Node::Imp(..)))
            .collect();
        let parts = |i: u32| match universe.nodes[i as usize] {
            Node::Imp(a, b) => (a, b),
            _ => unreachable!(),
        };

        let mut pool: Vec<u32> = Vec::new();
        let want = |i: u32, pool: &mut Vec<u32>| {
            if !pool.contains(&i) {
                pool.push(i);
            }
        };
        for (i, node) in universe.nodes.iter().enumerate() {
            match *node {
                Node::Imp(a, b) => {
                    if rules.contains(RuleTag::ImpI) || rules.contains(RuleTag::E1) {
                        want(a, &mut pool);
                    }
                    if rules.contains(RuleTag::E2) {
                        want(b, &mut pool);
                    }
                    if rules.contains(RuleTag::DFExcludedMiddle)
                        && universe.formulas[b as usize] == Formula::bot()
                    {
                        want(a, &mut pool);
                        want(i as u32, &mut pool);
                    }
                }
                Node::Or(a, b) if rules.contains(RuleTag::OrE) => {
                    want(a, &mut pool);
                    want(b, &mut pool);
                }
                _ => {}
            }
        }
        pool.sort_unstable();

        let mut strong_pairs = Vec::new();
        for &p in &imps {
            for &q in &imps {
                if p == q {
                    continue;
                }
                let ((pa, pb), (qa, qb)) = (parts(p), parts(q));
                if rules.contains(RuleTag::E1) && pb == qb {
                    strong_pairs.push((p, q, RuleTag::E1));
                }
                if rules.contains(RuleTag::E2) && pa == qa {
                    strong_pairs.push((p, q, RuleTag::E2));
                }
            }
        }

        // Weak E-rules. The antecedent may vary (up to equivalence) under
        // E1_0 and E0, the consequent under E2_0 and E0.
        let e0 = rules.contains(RuleTag::E0);
        let vary_ant = e0 || rules.contains(RuleTag::E1_0);
        let vary_cons = e0 || rules.contains(RuleTag::E2_0);
        let mut classes = Vec::new();
        let mut classes_partial = false;
        if vary_ant || vary_cons {
            let mut comp: Vec<u32> = Vec::new();
            for &p in &imps {
                let (a, b) = parts(p);
                if vary_ant && !comp.contains(&a) {
                    comp.push(a);
                }
                if vary_cons && !comp.contains(&b) {
                    comp.push(b);
                }
            }
            // Union-find over components by equivalence.
            let mut parent: FxHashMap<u32, u32> = comp.iter().map(|&c| (c, c)).collect();
            fn find(parent: &mut FxHashMap<u32, u32>, x: u32) -> u32 {
                let p = parent[&x];
                if p == x {
                    return x;
                }
                let r = find(parent, p);
                parent.insert(x, r);
                r
            }
            for (i, &c) in comp.iter().enumerate() {
                for &d in &comp[i + 1..] {
                    if find(&mut parent, c) == find(&mut parent, d) {
                        continue;
                    }
                    match memo.equivalent(
                        config,
                        universe.formulas[c as usize],
                        universe.formulas[d as usize],
                    ) {
                        Some(true) => {
                            let (rc, rd) = (find(&mut parent, c), find(&mut parent, d));
                            parent.insert(rc, rd);
                        }
                        Some(false) => {}
                        None => classes_partial = true,
                    }
                }
            }
            let mut groups: FxHashMap<(u32, u32), Vec<u32>> = FxHashMap::default();
            let mut order = Vec::new();
            for &p in &imps {
                let (a, b) = parts(p);
                let ka = if vary_ant { find(&mut parent, a) } else { a };
                let kb = if vary_cons { find(&mut parent, b) } else { b };
                match groups.entry((ka, kb)) {
                    Entry::Occupied(mut e) => e.get_mut().push(p),
                    Entry::Vacant(e) => {
                        order.push((ka, kb));
                        e.insert(vec![p]);
                    }
                }
            }
            classes = order
                .into_iter()
                .map(|k| groups.remove(&k).unwrap())
                .filter(|g| g.len() > 1)
                .collect();
        }

        Prepared {
            config,
            universe,
            pool,
            classes,
            strong_pairs,
            flags: Flags::of(rules),
            classes_partial,
        }
    }

    pub fn universe(&self) -> &Universe {
        self.universe
    }

    /// Classes of implications identified by the weak E-rules, each with
    /// at least two members.
    pub fn classes(&self) -> impl Iterator<Item = Vec<Formula>> + '_ {
        self.classes.iter().map(|c| {
            c.iter()
                .map(|&i| self.universe.formulas[i as usize])
                .collect()
        })
    }

    /// Saturates from `hypotheses`, which must lie in the universe.
    pub fn saturate(&self, hypotheses: &[Formula]) -> SaturationRun<'_, 'u> {
        let u = self.universe;
        let words = u.len().div_ceil(64);
        let mut hyp_idx: Vec<u32> = hypotheses
            .iter()
            .map(|h| u.index_of(*h).expect("hypothesis outside the universe"))
            .collect();
        hyp_idx.sort_unstable();
        hyp_idx.dedup();

        // Tracked sets: extensions of H by pool formulas not in H.
        let candidates: Vec<u32> = self
            .pool
            .iter()
            .copied()
            .filter(|p| !hyp_idx.contains(p))
            .collect();
        let mut extras: Vec<Vec<u32>> = vec![Vec::new()];
        let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..self.config.max_extra {
            let mut next = Vec::new();
            for e in &frontier {
                let start = e
                    .last()
                    .map_or(0, |&l| candidates.iter().position(|&c| c == l).unwrap() + 1);
                for &c in &candidates[start..] {
                    let mut g = e.clone();
                    g.push(c);
                    next.push(g);
                }
            }
            extras.extend(next.iter().cloned());
            frontier = next;
        }
        let set_of: FxHashMap<Vec<u32>, usize> = extras
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let members: Vec<Vec<u32>> = extras
            .iter()
            .map(|e| {
                let mut m = hyp_idx.clone();
                m.extend(e);
                m
            })
            .collect();
        // extend[s][k]: the tracked set `s ∪ {candidates[k]}`, or `s` itself
        // when it already has that formula.
        let cand_pos: FxHashMap<u32, usize> = candidates
            .iter()
            .enumerate()
            .map(|(k, &c)| (c, k))
            .collect();
        let extend: Vec<Vec<Option<usize>>> = extras
            .iter()
            .enumerate()
            .map(|(s, e)| {
                candidates
                    .iter()
                    .map(|&c| {
                        if e.contains(&c) {
                            return Some(s);
                        }
                        let mut g = e.clone();
                        g.push(c);
                        g.sort_unstable();
                        set_of.get(&g).copied()
                    })
                    .collect()
            })
            .collect();
        // Proper subsets one formula smaller, for premise inflation.
        let shrink: Vec<Vec<usize>> = extras
            .iter()
            .map(|e| {
                (0..e.len())
                    .map(|k| {
                        let mut g = e.clone();
                        g.remove(k);
                        set_of[&g]
                    })
                    .collect()
            })
            .collect();

        let mut run = SaturationRun {
            prepared: self,
            members,
            derived: vec![vec![0u64; words]; extras.len()],
            steps: 0,
            partial: self.classes_partial,
        };
        run.fixpoint(&extend, &shrink, &hyp_idx, &cand_pos);
        run
    }
}

/// The derived sets of one saturation.
pub struct SaturationRun<'p, 'u> {
    prepared: &'p Prepared<'u>,
    members: Vec<Vec<u32>>,
    derived: Vec<Vec<u64>>,
    steps: usize,
    partial: bool,
}

#[inline]
fn get(bits: &[u64], i: u32) -> bool {
    bits[(i / 64) as usize] >> (i % 64) & 1 == 1
}

/// Rule membership looked up once per preparation.
#[derive(Clone, Copy)]
struct Flags {
    top: bool,
    and_l: bool,
    and_r: bool,
    and_i: bool,
    imp_iw: bool,
    imp_e: bool,
    imp_ed: bool,
    imp_i: bool,
    bot_ax: bool,
    dfem: bool,
    or_il: bool,
    or_ir: bool,
    or_e: bool,
    cut: bool,
}

impl Flags {
    fn of(r: RuleSet) -> Flags {
        use RuleTag::*;
        Flags {
            top: r.contains(Top),
            and_l: r.contains(AndEl),
            and_r: r.contains(AndEr),
            and_i: r.contains(AndI),
            imp_iw: r.contains(ImpIW),
            imp_e: r.contains(ImpE),
            imp_ed: r.contains(ImpED),
            imp_i: r.contains(ImpI),
            bot_ax: r.contains(BotAx),
            dfem: r.contains(DFExcludedMiddle),
            or_il: r.contains(OrIl),
            or_ir: r.contains(OrIr),
            or_e: r.contains(OrE),
            cut: r.contains(Cut),
        }
    }
}

/// Bit `i` of tracked set `c`, where set `s` is held out as `d`.
#[inline]
fn bit_of(derived: &[Vec<u64>], d: &[u64], s: usize, c: usize, i: u32) -> bool {
    if c == s {
        get(d, i)
    } else {
        get(&derived[c], i)
    }
}

/// Ors `a ∧ b` (rows of tracked sets, `s` held out as `d`) into `d`,
/// returning the number of new bits.
fn or_rows(derived: &[Vec<u64>], d: &mut [u64], s: usize, a: usize, b: Option<usize>) -> usize {
    let mut new = 0;
    for w in 0..d.len() {
        let ra = if a == s { d[w] } else { derived[a][w] };
        let rb = match b {
            None => !0,
            Some(b) if b == s => d[w],
            Some(b) => derived[b][w],
        };
        let add = ra & rb & !d[w];
        new += add.count_ones() as usize;
        d[w] |= add;
    }
    new
}

impl SaturationRun<'_, '_> {
    /// Naive passes over every rule instance until nothing changes. Facts
    /// are recorded as soon as they are found.
    fn fixpoint(
        &mut self,
        extend: &[Vec<Option<usize>>],
        shrink: &[Vec<usize>],
        hyps: &[u32],
        cand_pos: &FxHashMap<u32, usize>,
    ) {
        let p = self.prepared;
        let u = p.universe;
        let fl = p.flags;
        let bound = p.config.step_bound;
        let top = u.index_of(Formula::top());
        let bot = u.index_of(Formula::bot());
        let ext = |s: usize, f: u32| -> Option<usize> {
            if hyps.contains(&f) {
                Some(s)
            } else {
                cand_pos.get(&f).and_then(|&k| extend[s][k])
            }
        };
        let sets = self.derived.len();
        let n = u.len();
        loop {
            let before = self.steps;
            for s in 0..sets {
                let mut d = std::mem::take(&mut self.derived[s]);
                let all = &self.derived;
                let mut new = 0usize;
                macro_rules! set {
                    ($i:expr) => {{
                        let i: u32 = $i;
                        let (w, b) = ((i / 64) as usize, i % 64);
                        if d[w] >> b & 1 == 0 {
                            d[w] |= 1 << b;
                            new += 1;
                        }
                    }};
                }
                if let (Some(t), true) = (top, fl.top) {
                    set!(t);
                }
                // X2X then inflation.
                for &m in &self.members[s] {
                    set!(m);
                }
                // BotAx, then Cut on a derived ⊥.
                if let (Some(b), true) = (bot, fl.bot_ax) {
                    if get(&d, b) {
                        for i in 0..n as u32 {
                            set!(i);
                        }
                    }
                }
                for (i, node) in u.nodes.iter().enumerate() {
                    let i = i as u32;
                    match *node {
                        Node::And(a, b) => {
                            if get(&d, i) {
                                if fl.and_l {
                                    set!(a);
                                }
                                if fl.and_r {
                                    set!(b);
                                }
                            } else if fl.and_i && get(&d, a) && get(&d, b) {
                                set!(i);
                            }
                        }
                        Node::Imp(a, b) => {
                            if get(&d, i) {
                                if fl.imp_ed || (fl.imp_e && get(&d, a)) {
                                    set!(b);
                                }
                                continue;
                            }
                            if fl.imp_iw && get(&d, b) {
                                set!(i);
                                continue;
                            }
                            if fl.imp_i {
                                if let Some(c) = ext(s, a) {
                                    if bit_of(all, &d, s, c, b) {
                                        set!(i);
                                        continue;
                                    }
                                }
                            }
                            if fl.dfem && Some(b) == bot {
                                if let (Some(c1), Some(c2)) = (ext(s, a), ext(s, i)) {
                                    new += or_rows(all, &mut d, s, c1, Some(c2));
                                }
                            }
                        }
                        Node::Or(a, b) => {
                            if (fl.or_il && get(&d, a)) || (fl.or_ir && get(&d, b)) {
                                set!(i);
                            }
                            if fl.or_e && get(&d, i) {
                                if let (Some(c1), Some(c2)) = (ext(s, a), ext(s, b)) {
                                    new += or_rows(all, &mut d, s, c1, Some(c2));
                                }
                            }
                        }
                        Node::Top | Node::Bot | Node::Var => {}
                    }
                }
                // Inflation from tracked subsets.
                for &b in &shrink[s] {
                    new += or_rows(all, &mut d, s, b, None);
                }
                // Cut: s ⊢ φ and s ∪ {φ} ⊢ ψ.
                if fl.cut {
                    for (&f, &k) in cand_pos {
                        if get(&d, f) {
                            if let Some(c) = extend[s][k] {
                                if c != s {
                                    new += or_rows(all, &mut d, s, c, None);
                                }
                            }
                        }
                    }
                }
                // E1 / E2 with Γ = s, then Cut: from s ⊢ p conclude s ⊢ q.
                for &(pi, qi, rule) in &p.strong_pairs {
                    if !get(&d, pi) || get(&d, qi) {
                        continue;
                    }
                    let (Node::Imp(pa, pb), Node::Imp(qa, qb)) =
                        (u.nodes[pi as usize], u.nodes[qi as usize])
                    else {
                        unreachable!()
                    };
                    let (phi, psi) = if rule == RuleTag::E1 {
                        (pa, qa)
                    } else {
                        (pb, qb)
                    };
                    if let (Some(c1), Some(c2)) = (ext(s, phi), ext(s, psi)) {
                        if bit_of(all, &d, s, c1, psi) && bit_of(all, &d, s, c2, phi) {
                            set!(qi);
                        }
                    }
                }
                // Weak E-rules then Cut.
                for class in &p.classes {
                    if class.iter().any(|&m| get(&d, m)) {
                        for &m in class {
                            set!(m);
                        }
                    }
                }
                self.derived[s] = d;
                self.steps += new;
                if self.steps > bound {
                    self.partial = true;
                    return;
                }
            }
            if self.steps == before {
                return;
            }
        }
    }

    /// Formulas derived from the hypotheses themselves.
    pub fn derived(&self) -> Vec<Formula> {
        let u = self.prepared.universe;
        (0..u.len() as u32)
            .filter(|&i| get(&self.derived[0], i))
            .map(|i| u.formulas[i as usize])
            .collect()
    }

    /// Bitset over the universe of formulas derived from the hypotheses.
    pub fn derived_bits(&self) -> &[u64] {
        &self.derived[0]
    }

    pub fn is_derived(&self, f: Formula) -> bool {
        self.prepared
            .universe
            .index_of(f)
            .is_some_and(|i| get(&self.derived[0], i))
    }

    pub fn verdict(&self, goal: Formula) -> OracleVerdict {
        if self.is_derived(goal) {
            OracleVerdict::Derived
        } else if self.partial {
            OracleVerdict::Partial
        } else {
            OracleVerdict::NotDerived
        }
    }

    pub fn is_partial(&self) -> bool {
        self.partial
    }

    /// Facts derived across all tracked sets.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn tracked_sets(&self) -> usize {
        self.members.len()
    }
}

/// Saturates `σ`'s antecedents over the subformulas of `σ` plus `padding`
/// and reports whether its consequent was reached.
pub fn oracle_decide(
    config: SaturationConfig,
    sequent: &Sequent,
    padding: &[Formula],
) -> OracleVerdict {
    let universe = Universe::new(sequent.formulas().chain(padding.iter().copied()));
    let memo = EquivalenceMemo::new();
    let prepared = Prepared::new(config, &universe, &memo);
    prepared
        .saturate(sequent.antecedents())
        .verdict(sequent.consequent())
}
