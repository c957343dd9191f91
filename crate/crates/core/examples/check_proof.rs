//! Checking proof files against the rules of each logic.

use primal_deduct::calculi::{check_proof, LogicId, Proof};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for name in [
        "x1_imp_x2_pl_ed",
        "negations_to_or_clor",
        "or_to_negations_clor",
        "forward_reference",
    ] {
        let text = std::fs::read_to_string(format!("{dir}/{name}.proof")).unwrap();
        let proof = match Proof::parse(&text) {
            Ok(p) => p,
            Err(e) => {
                println!("{name}: malformed: {e}");
                continue;
            }
        };
        println!("{name}: concludes {}", proof.conclusion().unwrap());
        for logic in ["PL", "PL_ED", "CL", "CL+or"] {
            let id: LogicId = logic.parse().unwrap();
            match check_proof(&proof, id) {
                Ok(()) => println!("  {logic:<6} valid"),
                Err(e) => println!("  {logic:<6} {e}"),
            }
        }
    }

    // Proofs print back in the file format.
    let p = Proof::parse(
        "1. x |- x ; rule=X2X ; premises=\n2. x |- x & x ; rule=AndI ; premises=1,1\n",
    )
    .unwrap();
    print!("{p}");
}
