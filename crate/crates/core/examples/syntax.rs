//! Parsing, printing, interning and subformulas.

use primal_deduct::syntax::{parse_formula, parse_sequent, subformulas, Formula};

fn main() {
    let f = parse_formula("(x & y) -> (z -> x & y)").unwrap();
    println!("printed:     {f}");
    println!("length:      {}", f.length());
    println!("depth:       {}", f.depth());
    println!("variables:   {:?}", f.variables());

    // Equal formulas share one interned node.
    let g = Formula::imp(
        Formula::and(Formula::var("x"), Formula::var("y")),
        parse_formula("z -> x & y").unwrap(),
    );
    println!("interned:    {} (ids {} and {})", f == g, f.id(), g.id());

    let subs: Vec<String> = subformulas(f).iter().map(|s| s.to_string()).collect();
    println!("subformulas: {}", subs.join(" ; "));

    // Antecedents are a set: order and repeats do not matter.
    let a = parse_sequent("y, x, y |- x & y").unwrap();
    let b = parse_sequent("x, y |- x & y").unwrap();
    println!("sequent:     {a} (same as `{b}`: {})", a == b);

    match parse_formula("x -> & y") {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
}
