//! Removing implications that do not matter to a PEL0 derivation.

use primal_deduct::calculi::{
    check_proof, eliminate_insignificant, significant_implications, LogicId, Proof,
};
use primal_deduct::syntax::parse_sequent;

fn main() {
    // y |- x -> y, with a detour through (a -> b) -> y.
    let proof = Proof::parse(
        "1. y |- y ; rule=X2X ; premises=\n\
         2. y |- (a -> b) -> y ; rule=ImpIW ; premises=1\n\
         3. y, (a -> b) -> y |- y ; rule=PremiseInflation ; premises=1\n\
         4. y |- y ; rule=Cut ; premises=2,3\n\
         5. y |- x -> y ; rule=ImpIW ; premises=4\n",
    )
    .unwrap();
    let sigma = parse_sequent("y |- x -> y").unwrap();
    let keep: Vec<String> = significant_implications(&proof, &sigma)
        .iter()
        .map(|f| f.to_string())
        .collect();
    println!("significant: {}", keep.join(", "));

    let out = eliminate_insignificant(&proof, &sigma).unwrap();
    check_proof(&out, LogicId::PEL0).unwrap();
    println!(
        "before ({} steps):\n{proof}after ({} steps):\n{out}",
        proof.len(),
        out.len()
    );
}
