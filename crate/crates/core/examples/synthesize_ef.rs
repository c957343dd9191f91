//! Substitution of equivalents inside a context, as an explicit proof.

use primal_deduct::calculi::{
    check_proof, synthesize_e0f_proof, synthesize_ef_proof, LogicId, Proof,
};
use primal_deduct::syntax::parse_formula;

fn main() {
    let f = |t: &str| parse_formula(t).unwrap();
    // x |- x & x and x & x |- x.
    let forward = Proof::parse(
        "1. x |- x ; rule=X2X ; premises=\n2. x |- x & x ; rule=AndI ; premises=1,1\n",
    )
    .unwrap();
    let backward = Proof::parse(
        "1. x & x |- x & x ; rule=X2X ; premises=\n2. x & x |- x ; rule=AndEl ; premises=1\n",
    )
    .unwrap();

    // Replace the hole `h` in F = (h -> c) & (c -> h).
    let context = f("(h -> c) & (c -> h)");
    let strong = synthesize_ef_proof(
        context,
        f("h"),
        f("x"),
        f("x & x"),
        &[],
        &forward,
        &backward,
    )
    .unwrap();
    println!(
        "strong: {} in {} steps",
        strong.conclusion().unwrap(),
        strong.len()
    );
    println!("  PEL  {:?}", check_proof(&strong, LogicId::PEL).is_ok());

    let weak =
        synthesize_e0f_proof(context, f("h"), f("x"), f("x & x"), &forward, &backward).unwrap();
    println!(
        "weak:   {} in {} steps",
        weak.conclusion().unwrap(),
        weak.len()
    );
    println!("  PEL0 {:?}", check_proof(&weak, LogicId::PEL0).is_ok());
    print!("{weak}");
}
