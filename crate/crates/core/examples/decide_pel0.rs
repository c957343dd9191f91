//! PEL0 by normalization to a set free of equivalents, then PL.

use primal_deduct::pel0_decider::{
    decide_pel0, normalize_with, pel0_equivalent, NormalizeOptions, Pel0Context,
};
use primal_deduct::pl_decider::decide_pl;
use primal_deduct::syntax::{parse_formula, parse_sequent, Formula};

fn main() {
    for text in [
        "x -> x |- (x & x) -> x",
        "x -> x |- x -> (x & x)",
        "x -> y |- (x & x) -> (y & y)",
    ] {
        let s = parse_sequent(text).unwrap();
        println!(
            "{text:<32} PL {:<5} PEL0 {}",
            decide_pl(&s).unwrap(),
            decide_pel0(&s).unwrap()
        );
    }

    let f = |t: &str| parse_formula(t).unwrap();
    println!("x & x ~ x: {}", pel0_equivalent(f("x & x"), f("x")));
    println!("x & y ~ y & x: {}", pel0_equivalent(f("x & y"), f("y & x")));

    let input: Vec<Formula> = ["(x & x) -> y", "x -> (y & y)", "(x & (x & x)) & z"]
        .map(f)
        .to_vec();
    let options = NormalizeOptions {
        check_invariants: true,
        ..NormalizeOptions::default()
    };
    let norm = normalize_with(&input, options).unwrap();
    for (a, b) in input.iter().zip(&norm.output) {
        println!("{a:<22} => {b}");
    }
    println!("stats: {:?}", norm.stats);

    // Prepare once over a fixed pool, then decide many sequents cheaply.
    let ctx = Pel0Context::prepare(&input).unwrap();
    println!("{:?}", ctx.decide(&input[..1], &input[1..]));
}
