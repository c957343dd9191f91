//! The four theoremhood-preserving reductions.

use primal_deduct::reductions::{il_to_ml_helpers, ml_to_pel1_helpers, translate_or, ReductionId};
use primal_deduct::syntax::{parse_formula, parse_sequent};

fn main() {
    println!("{}", translate_or(parse_formula("x | (y & z)").unwrap()));

    let s = parse_sequent("bot |- x & y").unwrap();
    let helpers: Vec<String> = il_to_ml_helpers(&s).iter().map(|h| h.to_string()).collect();
    println!("il-to-ml helpers for {s}: {}", helpers.join(", "));
    println!(
        "ml-to-pel1 helpers for |- x -> y: {}",
        ml_to_pel1_helpers(&parse_sequent("|- x -> y").unwrap())
            .unwrap()
            .len()
    );

    let inputs = [
        "x | y |- y | x",
        "bot |- x",
        "|- x -> x",
        "x -> y |- (z -> x) -> z -> y",
    ];
    for r in ReductionId::ALL {
        for text in inputs {
            let s = parse_sequent(text).unwrap();
            match r.apply(&s) {
                Ok(image) => println!(
                    "{r:<11} {text:<28} length {:>3} -> {:>5}",
                    s.length(),
                    image.length()
                ),
                Err(e) => println!("{r:<11} {text:<28} {e}"),
            }
        }
    }
}
