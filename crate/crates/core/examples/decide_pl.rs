//! Deciding primal logic, with the closure trace and an extracted proof.

use primal_deduct::calculi::{check_proof, LogicId};
use primal_deduct::pl_decider::{decide_pl, decide_pl_multi, decide_pl_traced};
use primal_deduct::syntax::{parse_formula, parse_sequent};

fn main() {
    let s = parse_sequent("x, x -> y, y -> z |- z & (w -> y)").unwrap();
    let (theorem, trace, proof) = decide_pl_traced(&s).unwrap();
    println!("{s}: {}", if theorem { "THEOREM" } else { "NON-THEOREM" });
    for event in &trace {
        println!("  {event}");
    }
    let proof = proof.expect("theorems come with a proof");
    check_proof(&proof, LogicId::PL).unwrap();
    println!(
        "extracted proof ({} steps) checks under PL:\n{proof}",
        proof.len()
    );

    // Primal implication introduction needs the consequent itself.
    for text in ["|- x -> x", "x -> x |- x & x -> x", "y |- x -> y"] {
        println!(
            "{text:<24} {}",
            decide_pl(&parse_sequent(text).unwrap()).unwrap()
        );
    }

    // One saturation answers many queries.
    let hyps = [
        parse_formula("x").unwrap(),
        parse_formula("x -> y").unwrap(),
    ];
    let queries = ["y", "x & y", "z -> y", "y -> z"].map(|q| parse_formula(q).unwrap());
    println!("{:?}", decide_pl_multi(&hyps, &queries).unwrap());
}
