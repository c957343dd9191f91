//! Shared generators for the integration tests.

#![allow(dead_code)]

use primal_deduct::syntax::{Connective, Formula, Sequent};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn atoms(names: &[&str], constants: bool) -> Vec<Formula> {
    let mut v: Vec<Formula> = names.iter().map(|n| Formula::var(n)).collect();
    if constants {
        v.push(Formula::top());
        v.push(Formula::bot());
    }
    v
}

/// A random formula of at most `max_nodes` nodes. Some subtrees are
/// planted as `g ∧ g` or `g ∧ (g ∧ g)` so equivalent pairs are common.
pub fn random_formula(
    rng: &mut ChaCha8Rng,
    max_nodes: u64,
    atoms: &[Formula],
    with_or: bool,
) -> Formula {
    if max_nodes < 3 || rng.gen_bool(0.2) {
        return atoms[rng.gen_range(0..atoms.len())];
    }
    if max_nodes >= 7 && rng.gen_bool(0.12) {
        let g = random_formula(rng, (max_nodes - 1) / 2, atoms, with_or);
        return Formula::and(g, g);
    }
    let left_budget = rng.gen_range(1..=max_nodes - 2);
    let a = random_formula(rng, left_budget, atoms, with_or);
    let b = random_formula(rng, max_nodes - 1 - a.length(), atoms, with_or);
    let op = match rng.gen_range(0..if with_or { 5 } else { 4 }) {
        0 | 1 => Connective::Imp,
        2 | 3 => Connective::And,
        _ => Connective::Or,
    };
    Formula::binary(op, a, b)
}

pub fn random_sequent(
    rng: &mut ChaCha8Rng,
    max_ants: usize,
    max_nodes: u64,
    atoms: &[Formula],
) -> Sequent {
    let k = rng.gen_range(0..=max_ants);
    let ants: Vec<Formula> = (0..k)
        .map(|_| random_formula(rng, max_nodes, atoms, false))
        .collect();
    Sequent::new(ants, random_formula(rng, max_nodes, atoms, false))
}

/// Proptest strategy for disjunction-free formulas over `x, y, z, ⊤, ⊥`.
pub fn formula_strategy(depth: u32) -> impl Strategy<Value = Formula> {
    formula_strategy_with(depth, false)
}

pub fn formula_strategy_with(depth: u32, with_or: bool) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => prop::sample::select(vec!["x", "y", "z"]).prop_map(Formula::var),
        1 => Just(Formula::top()),
        1 => Just(Formula::bot()),
    ];
    leaf.prop_recursive(depth, 24, 2, move |inner| {
        let ops = if with_or {
            vec![Connective::And, Connective::Imp, Connective::Or]
        } else {
            vec![Connective::And, Connective::Imp]
        };
        prop_oneof![
            (prop::sample::select(ops), inner.clone(), inner.clone())
                .prop_map(|(op, a, b)| Formula::binary(op, a, b)),
            inner.prop_map(|g| Formula::and(g, g)),
        ]
    })
}

pub fn sequent_strategy(depth: u32, max_ants: usize) -> impl Strategy<Value = Sequent> {
    (
        prop::collection::vec(formula_strategy(depth), 0..=max_ants),
        formula_strategy(depth),
    )
        .prop_map(|(ants, c)| Sequent::new(ants, c))
}
