//! Kripke models: building, checking and searching for countermodels.

use primal_deduct::semantics::{
    countermodel_search, countermodel_search_in, model_check, KripkeModel, KripkeSemantics,
};
use primal_deduct::syntax::{parse_formula, parse_sequent};

fn main() {
    // One world where x -> x holds but x & x -> x does not: allowed in
    // primal semantics, since x is false and x & x -> x is unrelated.
    let f = |t: &str| parse_formula(t).unwrap();
    let model = KripkeModel::new(
        1,
        &[],
        vec![vec![]],
        vec![f("x -> x"), f("x & x -> x")],
        vec![vec![f("x -> x")]],
    )
    .unwrap();
    print!("{model}");
    let s = parse_sequent("x -> x |- x & x -> x").unwrap();
    println!("{s} at w0: {}", model_check(&model, 0, &s).unwrap());

    let cm = countermodel_search(&s, 2)
        .unwrap()
        .expect("not a PL theorem");
    print!("found:\n{}", cm.model.to_key_values());

    // Peirce's law fails intuitionistically on a two-world chain.
    let peirce = parse_sequent("|- ((x -> y) -> x) -> x").unwrap();
    let cm = countermodel_search_in(&peirce, 2, KripkeSemantics::Intuitionistic, 4)
        .unwrap()
        .unwrap();
    print!("Peirce:\n{}", cm.model.to_text());
    println!(
        "x -> x: {:?}",
        countermodel_search(&parse_sequent("|- x -> x").unwrap(), 2)
            .unwrap()
            .map(|c| c.world)
    );
}
