//! Classical validity by truth tables, with and without disjunction.

use primal_deduct::semantics::{
    cl_falsifying_assignment, decide_cl_truthtable, sequent_truth_table, table_variables,
};
use primal_deduct::syntax::parse_sequent;

fn main() {
    for text in [
        "x1 -> x2 |- x2",
        "|- ((x -> y) -> x) -> x",
        "|- x | (x -> bot)",
        "x | y |- x",
    ] {
        let s = parse_sequent(text).unwrap();
        let valid = decide_cl_truthtable(&s).unwrap();
        print!(
            "{text:<26} {}",
            if valid { "THEOREM" } else { "NON-THEOREM" }
        );
        if let Some(row) = cl_falsifying_assignment(&s).unwrap() {
            print!("  falsified by {row:?}");
        }
        println!();
    }

    // Tables are bit-packed, one row per assignment.
    let s = parse_sequent("|- x | y").unwrap();
    let vars = table_variables(&s);
    println!(
        "{vars:?}: {:04b}",
        sequent_truth_table(&s, &vars).unwrap()[0]
    );
}
