//! Kripke models for PL, where implications are valued freely subject to
//! two local conditions, and the intuitionistic models used for ML and IL.
//!
//! `Γ ⊢ ψ` holds at `a` iff `ψ` holds at every `b ≥ a` where all of `Γ`
//! hold. In a PL model, `φ → ψ` is read from the model's implication
//! valuation, which must make `φ → ψ` true wherever `ψ` is true and must
//! make `ψ` true wherever `φ` and `φ → ψ` are. Both atoms and implications
//! are required to persist upwards.

use std::fmt;

use rustc_hash::{FxHashMap, FxHashSet};
use thiserror::Error;

use crate::syntax::{
    reject_or, sort_canonical, subformulas_of_all, DisjunctionError, Formula, Kind, Sequent,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a model needs at least one world")]
    NoWorlds,
    #[error("world {0} does not exist")]
    NoSuchWorld(usize),
    #[error("the order is not antisymmetric between worlds {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("`{0}` is not an atom")]
    NotAtom(String),
    #[error("implication `{0}` is not in the declared universe")]
    Undeclared(String),
    #[error("`{formula}` is true at w{lower} but not at w{upper} above it")]
    NotMonotone {
        formula: String,
        lower: usize,
        upper: usize,
    },
    #[error("condition 1 fails at w{world}: the consequent of `{imp}` is true but it is not")]
    Condition1 { world: usize, imp: String },
    #[error("condition 2 fails at w{world}: `{imp}` and its antecedent are true but its consequent is not")]
    Condition2 { world: usize, imp: String },
    #[error(transparent)]
    Disjunction(#[from] DisjunctionError),
}

/// A finite Kripke model with an explicit implication valuation over a
/// declared universe of implications.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    /// `above[w]` lists every `v ≥ w`, including `w`.
    above: Vec<Vec<usize>>,
    atoms: Vec<FxHashSet<Formula>>,
    universe: Vec<Formula>,
    imps: Vec<FxHashSet<Formula>>,
}

fn closure_of(worlds: usize, order: &[(usize, usize)]) -> Result<Vec<Vec<bool>>, ModelError> {
    if worlds == 0 {
        return Err(ModelError::NoWorlds);
    }
    let mut le = vec![vec![false; worlds]; worlds];
    for (w, row) in le.iter_mut().enumerate() {
        row[w] = true;
    }
    for &(a, b) in order {
        for w in [a, b] {
            if w >= worlds {
                return Err(ModelError::NoSuchWorld(w));
            }
        }
        le[a][b] = true;
    }
    for k in 0..worlds {
        for i in 0..worlds {
            if le[i][k] {
                for j in 0..worlds {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..worlds {
        for j in i + 1..worlds {
            if le[i][j] && le[j][i] {
                return Err(ModelError::NotAntisymmetric(i, j));
            }
        }
    }
    Ok(le)
}

/// The implication subformulas of `formulas`, children first.
fn implications_of(formulas: impl IntoIterator<Item = Formula>) -> Vec<Formula> {
    subformulas_of_all(formulas)
        .into_iter()
        .filter(|f| f.is_imp())
        .collect()
}

impl KripkeModel {
    /// Builds and validates a PL model. `order` lists pairs `(a, b)` with
    /// `a ≤ b`; its reflexive-transitive closure is used.
    pub fn new(
        worlds: usize,
        order: &[(usize, usize)],
        true_atoms: Vec<Vec<Formula>>,
        universe: Vec<Formula>,
        true_imps: Vec<Vec<Formula>>,
    ) -> Result<KripkeModel, ModelError> {
        let le = closure_of(worlds, order)?;
        if true_atoms.len() != worlds || true_imps.len() != worlds {
            return Err(ModelError::NoSuchWorld(
                true_atoms.len().max(true_imps.len()).max(worlds),
            ));
        }
        reject_or(universe.iter())?;
        for f in true_atoms.iter().flatten() {
            if !matches!(f.kind(), Kind::Var(_) | Kind::Bot) {
                return Err(ModelError::NotAtom(f.to_string()));
            }
        }
        // The universe must contain the implications of its own members.
        let mut universe_sorted = implications_of(universe.iter().copied());
        let declared: FxHashSet<Formula> = universe.iter().copied().collect();
        for f in &universe_sorted {
            if !declared.contains(f) {
                return Err(ModelError::Undeclared(f.to_string()));
            }
        }
        for f in true_imps.iter().flatten() {
            if !declared.contains(f) {
                return Err(ModelError::Undeclared(f.to_string()));
            }
        }
        universe_sorted.dedup();
        let model = KripkeModel {
            above: le
                .iter()
                .map(|row| (0..worlds).filter(|&j| row[j]).collect())
                .collect(),
            atoms: true_atoms
                .into_iter()
                .map(|v| v.into_iter().collect())
                .collect(),
            universe: universe_sorted,
            imps: true_imps
                .into_iter()
                .map(|v| v.into_iter().collect())
                .collect(),
        };
        model.validate()?;
        Ok(model)
    }

    /// Builds an intuitionistic model: `φ → ψ` is true at `w` iff `ψ` is
    /// true at every `v ≥ w` where `φ` is. The implications of `universe`
    /// are valued accordingly, so the result is also a valid PL model.
    pub fn intuitionistic(
        worlds: usize,
        order: &[(usize, usize)],
        true_atoms: Vec<Vec<Formula>>,
        universe: &[Formula],
    ) -> Result<KripkeModel, ModelError> {
        let le = closure_of(worlds, order)?;
        reject_or(universe.iter())?;
        let imps_sorted = implications_of(universe.iter().copied());
        let mut model = KripkeModel {
            above: le
                .iter()
                .map(|row| (0..worlds).filter(|&j| row[j]).collect())
                .collect(),
            atoms: true_atoms
                .into_iter()
                .map(|v| v.into_iter().collect())
                .collect(),
            universe: imps_sorted.clone(),
            imps: vec![FxHashSet::default(); worlds],
        };
        if model.atoms.len() != worlds {
            return Err(ModelError::NoSuchWorld(model.atoms.len().max(worlds)));
        }
        for imp in imps_sorted {
            let (_, a, b) = imp.split().unwrap();
            for w in 0..worlds {
                if model.above[w]
                    .iter()
                    .all(|&v| !model.holds(v, a) || model.holds(v, b))
                {
                    model.imps[w].insert(imp);
                }
            }
        }
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<(), ModelError> {
        let n = self.worlds();
        for w in 0..n {
            for &v in &self.above[w] {
                for set in [&self.atoms, &self.imps] {
                    if let Some(f) = set[w].iter().find(|f| !set[v].contains(f)) {
                        return Err(ModelError::NotMonotone {
                            formula: f.to_string(),
                            lower: w,
                            upper: v,
                        });
                    }
                }
            }
            for &imp in &self.universe {
                let (_, a, b) = imp.split().unwrap();
                let on = self.imps[w].contains(&imp);
                if self.holds(w, b) && !on {
                    return Err(ModelError::Condition1 {
                        world: w,
                        imp: imp.to_string(),
                    });
                }
                if on && self.holds(w, a) && !self.holds(w, b) {
                    return Err(ModelError::Condition2 {
                        world: w,
                        imp: imp.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn worlds(&self) -> usize {
        self.above.len()
    }

    /// Whether `a ≤ b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(&b)
    }

    /// Declared implications, children first.
    pub fn universe(&self) -> &[Formula] {
        &self.universe
    }

    /// Whether `f` is true at `w`. Implications outside the universe read
    /// as false; use [`model_check`] for checked evaluation.
    pub fn holds(&self, w: usize, f: Formula) -> bool {
        match f.kind() {
            Kind::Top => true,
            Kind::Var(_) | Kind::Bot => self.atoms[w].contains(&f),
            Kind::And(a, b) => self.holds(w, a) && self.holds(w, b),
            Kind::Imp(..) => self.imps[w].contains(&f),
            Kind::Or(a, b) => self.holds(w, a) || self.holds(w, b),
        }
    }

    /// True atoms at `w`, canonical order.
    pub fn true_atoms(&self, w: usize) -> Vec<Formula> {
        let mut v: Vec<Formula> = self.atoms[w].iter().copied().collect();
        sort_canonical(&mut v);
        v
    }

    /// True declared implications at `w`, canonical order.
    pub fn true_implications(&self, w: usize) -> Vec<Formula> {
        let mut v: Vec<Formula> = self.imps[w].iter().copied().collect();
        sort_canonical(&mut v);
        v
    }

    /// Strict order pairs `(a, b)` with `a < b`.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.worlds() {
            for &b in &self.above[a] {
                if a != b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Human-readable listing.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let names: Vec<String> = (0..self.worlds()).map(|w| format!("w{w}")).collect();
        s.push_str(&format!("worlds: {}\n", names.join(" ")));
        let order: Vec<String> = self
            .order_pairs()
            .iter()
            .map(|(a, b)| format!("w{a} < w{b}"))
            .collect();
        s.push_str(&format!(
            "order: {}\n",
            if order.is_empty() {
                "(none)".into()
            } else {
                order.join(", ")
            }
        ));
        for w in 0..self.worlds() {
            s.push_str(&format!("w{w} atoms: {}\n", list(&self.true_atoms(w))));
            s.push_str(&format!(
                "w{w} implications: {}\n",
                list(&self.true_implications(w))
            ));
        }
        s
    }

    /// Flat `key=value` listing.
    pub fn to_key_values(&self) -> String {
        let mut s = format!("worlds={}\n", self.worlds());
        let order: Vec<String> = self
            .order_pairs()
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect();
        s.push_str(&format!("order={}\n", order.join(",")));
        for w in 0..self.worlds() {
            s.push_str(&format!("world.{w}.atoms={}\n", join(&self.true_atoms(w))));
            s.push_str(&format!(
                "world.{w}.implications={}\n",
                join(&self.true_implications(w))
            ));
        }
        s
    }
}

fn join(fs: &[Formula]) -> String {
    fs.iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn list(fs: &[Formula]) -> String {
    if fs.is_empty() {
        "(none)".into()
    } else {
        join(fs)
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Whether `σ` is true at `w`.
pub fn model_check(model: &KripkeModel, w: usize, sequent: &Sequent) -> Result<bool, ModelError> {
    if w >= model.worlds() {
        return Err(ModelError::NoSuchWorld(w));
    }
    reject_or(sequent.formulas().collect::<Vec<_>>().iter())?;
    let declared: FxHashSet<Formula> = model.universe.iter().copied().collect();
    for imp in implications_of(sequent.formulas()) {
        if !declared.contains(&imp) {
            return Err(ModelError::Undeclared(imp.to_string()));
        }
    }
    Ok(model.above[w].iter().all(|&b| {
        !sequent.antecedents().iter().all(|&g| model.holds(b, g))
            || model.holds(b, sequent.consequent())
    }))
}

/// Which models a search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KripkeSemantics {
    /// PL: implications valued freely under the two conditions.
    Primal,
    /// ML: intuitionistic implication, `⊥` an ordinary atom.
    Minimal,
    /// IL: intuitionistic implication, `⊥` false everywhere.
    Intuitionistic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{requested} worlds exceed the hard cap of {cap}")]
    TooLarge { requested: usize, cap: usize },
    #[error(transparent)]
    Disjunction(#[from] DisjunctionError),
}

/// A model and a world of it where the searched sequent is false.
#[derive(Clone, Debug)]
pub struct Countermodel {
    pub model: KripkeModel,
    pub world: usize,
}

/// Default world cap for searches.
pub const DEFAULT_WORLD_CAP: usize = 4;

/// Searches PL models with at most `max_worlds` worlds for one refuting
/// `σ` at its root. `None` is not a proof of theoremhood.
pub fn countermodel_search(
    sequent: &Sequent,
    max_worlds: usize,
) -> Result<Option<Countermodel>, SearchError> {
    countermodel_search_in(
        sequent,
        max_worlds,
        KripkeSemantics::Primal,
        crate::hard_cap(DEFAULT_WORLD_CAP),
    )
}

/// Rooted partial orders on `k` worlds with world 0 least and labels
/// topologically sorted, chains first. Each entry is an up-set table.
fn rooted_orders(k: usize) -> Vec<Vec<Vec<bool>>> {
    let mut pairs = Vec::new();
    for i in 1..k {
        for j in i + 1..k {
            pairs.push((i, j));
        }
    }
    let mut seen = FxHashSet::default();
    let mut out: Vec<Vec<Vec<bool>>> = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut order: Vec<(usize, usize)> = (1..k).map(|j| (0, j)).collect();
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                order.push((i, j));
            }
        }
        let le = closure_of(k, &order).expect("labels are sorted");
        if seen.insert(le.clone()) {
            out.push(le);
        }
    }
    let is_chain = |le: &Vec<Vec<bool>>| (0..k).all(|i| (0..k).all(|j| le[i][j] || le[j][i]));
    out.sort_by_key(|le| !is_chain(le));
    out
}

struct Search<'a> {
    semantics: KripkeSemantics,
    nodes: &'a [Formula],
    index: FxHashMap<Formula, usize>,
    children: Vec<Option<(usize, usize)>>,
    ants: Vec<usize>,
    goal: usize,
    le: Vec<Vec<bool>>,
    /// Worlds in processing order: upper worlds first, root last.
    order: Vec<usize>,
    val: Vec<Vec<bool>>,
    failed_above: bool,
}

impl Search<'_> {
    fn above(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.le.len()).filter(move |&v| v != w && self.le[w][v])
    }

    fn run(&mut self, pos: usize, fi: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let w = self.order[pos];
        if fi == self.nodes.len() {
            let fails = self.ants.iter().all(|&a| self.val[w][a]) && !self.val[w][self.goal];
            let saved = self.failed_above;
            self.failed_above |= fails;
            let root = pos + 1 == self.order.len();
            if root && !self.failed_above {
                self.failed_above = saved;
                return false;
            }
            if self.run(pos + 1, 0) {
                return true;
            }
            self.failed_above = saved;
            return false;
        }
        let root = pos + 1 == self.order.len();
        let upper_false = self.above(w).any(|v| !self.val[v][fi]);
        let f = self.nodes[fi];
        let options: Vec<bool> = match (f.kind(), self.children[fi]) {
            (Kind::Top, _) => vec![true],
            (Kind::Bot, _) if self.semantics == KripkeSemantics::Intuitionistic => vec![false],
            (Kind::Var(_) | Kind::Bot, _) => free(root, upper_false),
            (Kind::And(..), Some((a, b))) => vec![self.val[w][a] && self.val[w][b]],
            (Kind::Imp(..), Some((a, b))) => match self.semantics {
                KripkeSemantics::Primal => {
                    if self.val[w][b] {
                        vec![true]
                    } else if self.val[w][a] {
                        vec![false]
                    } else {
                        free(root, upper_false)
                    }
                }
                _ => {
                    let here = !self.val[w][a] || self.val[w][b];
                    vec![here && !upper_false]
                }
            },
            _ => unreachable!("disjunction rejected"),
        };
        for v in options {
            // At the root, with nothing refuted above, the root itself must
            // refute: every antecedent true, the goal false.
            if root
                && !self.failed_above
                && ((self.ants.contains(&fi) && !v) || (fi == self.goal && v))
            {
                continue;
            }
            self.val[w][fi] = v;
            if self.run(pos, fi + 1) {
                return true;
            }
        }
        false
    }
}

fn free(root: bool, upper_false: bool) -> Vec<bool> {
    if upper_false {
        vec![false]
    } else if root {
        vec![false, true]
    } else {
        vec![true, false]
    }
}

/// Countermodel search under a chosen semantics. Shapes are tried from the
/// largest world count down, chains before other orders.
pub fn countermodel_search_in(
    sequent: &Sequent,
    max_worlds: usize,
    semantics: KripkeSemantics,
    cap: usize,
) -> Result<Option<Countermodel>, SearchError> {
    if max_worlds > cap {
        return Err(SearchError::TooLarge {
            requested: max_worlds,
            cap,
        });
    }
    reject_or(sequent.formulas().collect::<Vec<_>>().iter())?;
    let nodes = sequent.subformulas();
    let index: FxHashMap<Formula, usize> = nodes.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let children = nodes
        .iter()
        .map(|f| f.split().map(|(_, a, b)| (index[&a], index[&b])))
        .collect();
    let ants: Vec<usize> = sequent.antecedents().iter().map(|a| index[a]).collect();
    let goal = index[&sequent.consequent()];
    let mut search = Search {
        semantics,
        nodes: &nodes,
        index,
        children,
        ants,
        goal,
        le: Vec::new(),
        order: Vec::new(),
        val: Vec::new(),
        failed_above: false,
    };
    for k in (1..=max_worlds).rev() {
        for le in rooted_orders(k) {
            search.order = (0..k).rev().collect();
            search.val = vec![vec![false; nodes.len()]; k];
            search.le = le;
            search.failed_above = false;
            if search.run(0, 0) {
                return Ok(Some(build(&search, sequent)));
            }
        }
    }
    Ok(None)
}

fn build(search: &Search<'_>, sequent: &Sequent) -> Countermodel {
    let k = search.le.len();
    let mut order = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a != b && search.le[a][b] {
                order.push((a, b));
            }
        }
    }
    let atoms: Vec<Vec<Formula>> = (0..k)
        .map(|w| {
            search
                .nodes
                .iter()
                .enumerate()
                .filter(|(i, f)| matches!(f.kind(), Kind::Var(_) | Kind::Bot) && search.val[w][*i])
                .map(|(_, f)| *f)
                .collect()
        })
        .collect();
    let universe = implications_of(sequent.formulas());
    let imps: Vec<Vec<Formula>> = (0..k)
        .map(|w| {
            universe
                .iter()
                .copied()
                .filter(|f| search.val[w][search.index[f]])
                .collect()
        })
        .collect();
    let model =
        KripkeModel::new(k, &order, atoms, universe, imps).expect("search produces valid models");
    debug_assert_eq!(model_check(&model, 0, sequent), Ok(false));
    Countermodel { model, world: 0 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_sequent};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn section5_model() -> KripkeModel {
        KripkeModel::new(
            2,
            &[(0, 1)],
            vec![vec![], vec![f("x")]],
            vec![f("x -> x"), f("x & x -> x"), f("x -> x & x")],
            vec![
                vec![f("x -> x")],
                vec![f("x -> x"), f("x & x -> x"), f("x -> x & x")],
            ],
        )
        .unwrap()
    }

    #[test]
    fn paper_model() {
        let m = section5_model();
        let s1 = parse_sequent("x -> x |- x & x -> x").unwrap();
        let s2 = parse_sequent("x -> x |- x -> x & x").unwrap();
        assert!(!model_check(&m, 0, &s1).unwrap());
        assert!(!model_check(&m, 0, &s2).unwrap());
        assert!(model_check(&m, 1, &parse_sequent("|- x").unwrap()).unwrap());
        assert!(!model_check(&m, 0, &parse_sequent("|- x").unwrap()).unwrap());
        assert!(model_check(&m, 0, &parse_sequent("x -> x |- x -> x").unwrap()).unwrap());
        assert!(matches!(
            model_check(&m, 0, &parse_sequent("|- y -> x").unwrap()),
            Err(ModelError::Undeclared(_))
        ));
    }

    #[test]
    fn invalid_models_are_rejected() {
        let u = vec![f("x -> y")];
        let c1 = KripkeModel::new(1, &[], vec![vec![f("y")]], u.clone(), vec![vec![]]);
        assert!(matches!(c1, Err(ModelError::Condition1 { .. })));
        let c2 = KripkeModel::new(
            1,
            &[],
            vec![vec![f("x")]],
            u.clone(),
            vec![vec![f("x -> y")]],
        );
        assert!(matches!(c2, Err(ModelError::Condition2 { .. })));
        let mono = KripkeModel::new(
            2,
            &[(0, 1)],
            vec![vec![f("x")], vec![]],
            u.clone(),
            vec![vec![], vec![]],
        );
        assert!(matches!(mono, Err(ModelError::NotMonotone { .. })));
        let mono_imp = KripkeModel::new(
            2,
            &[(0, 1)],
            vec![vec![], vec![]],
            u.clone(),
            vec![vec![f("x -> y")], vec![]],
        );
        assert!(matches!(mono_imp, Err(ModelError::NotMonotone { .. })));
        let cyc = KripkeModel::new(
            2,
            &[(0, 1), (1, 0)],
            vec![vec![], vec![]],
            vec![],
            vec![vec![], vec![]],
        );
        assert!(matches!(cyc, Err(ModelError::NotAntisymmetric(0, 1))));
        let open = KripkeModel::new(
            1,
            &[],
            vec![vec![]],
            vec![f("(x -> y) & z -> z")],
            vec![vec![]],
        );
        assert!(matches!(open, Err(ModelError::Undeclared(_))));
    }

    #[test]
    fn search_reconstructs_the_paper_model() {
        let s = parse_sequent("x -> x |- x & x -> x").unwrap();
        let found = countermodel_search(&s, 2).unwrap().unwrap();
        assert_eq!(found.model, section5_model_restricted(&s));
        assert!(!model_check(&found.model, found.world, &s).unwrap());
    }

    fn section5_model_restricted(s: &Sequent) -> KripkeModel {
        let u = implications_of(s.formulas());
        let full = section5_model();
        let imps = (0..2)
            .map(|w| u.iter().copied().filter(|i| full.holds(w, *i)).collect())
            .collect();
        KripkeModel::new(2, &[(0, 1)], vec![vec![], vec![f("x")]], u, imps).unwrap()
    }

    #[test]
    fn theorems_have_no_countermodels() {
        for s in [
            "|- top",
            "x |- x & x",
            "x & y |- y & x",
            "y |- x -> y",
            "x, x -> y |- y",
        ] {
            let s = parse_sequent(s).unwrap();
            for k in 1..=3 {
                assert!(countermodel_search(&s, k).unwrap().is_none(), "{s}");
            }
        }
        assert!(countermodel_search(&parse_sequent("|- x").unwrap(), 9).is_err());
    }

    #[test]
    fn intuitionistic_search() {
        let search =
            |s: &str, sem| countermodel_search_in(&parse_sequent(s).unwrap(), 3, sem, 4).unwrap();
        // Peirce's law fails intuitionistically; weakening does not.
        assert!(search("|- ((x -> y) -> x) -> x", KripkeSemantics::Intuitionistic).is_some());
        assert!(search("|- x -> y -> x", KripkeSemantics::Minimal).is_none());
        assert!(search("|- x -> y -> x", KripkeSemantics::Primal).is_some());
        // Explosion holds in IL only.
        assert!(search("bot |- x", KripkeSemantics::Intuitionistic).is_none());
        assert!(search("bot |- x", KripkeSemantics::Minimal).is_some());
        assert!(search("bot, bot -> x |- x", KripkeSemantics::Minimal).is_none());
        assert!(search("x |- y -> x", KripkeSemantics::Minimal).is_none());
        let m = search("x |- y", KripkeSemantics::Minimal).unwrap();
        assert!(!model_check(&m.model, 0, &parse_sequent("x |- y").unwrap()).unwrap());
    }
}
