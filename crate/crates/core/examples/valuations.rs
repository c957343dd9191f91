//! Two-valued valuations where an implication takes its consequent's value.

use primal_deduct::calculi::Proof;
use primal_deduct::semantics::{evaluate_valuation, soundness_check, Valuation};
use primal_deduct::syntax::parse_sequent;

fn main() {
    let v = Valuation::all_false();
    println!(
        "all false on |- x1: {}",
        evaluate_valuation(&v, &parse_sequent("|- x1").unwrap()).unwrap()
    );

    let v = Valuation::from_pairs([("x", true), ("y", false)]);
    for text in ["|- x -> y", "|- y -> x", "x -> y |- y"] {
        println!(
            "{v} on {text}: {}",
            evaluate_valuation(&v, &parse_sequent(text).unwrap()).unwrap()
        );
    }

    // Every line of a valid PL + degenerate-implication proof is true under
    // every valuation.
    let proof = Proof::parse(
        "1. x1 -> x2 |- x1 -> x2 ; rule=X2X ; premises=\n\
         2. x1 -> x2 |- x2 ; rule=ImpED ; premises=1\n",
    )
    .unwrap();
    println!("soundness check: {:?}", soundness_check(&proof));
}
