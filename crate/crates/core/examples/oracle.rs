//! Bounded saturation for any catalogued logic, and exhaustive families.

use primal_deduct::calculi::LogicId;
use primal_deduct::oracle::{oracle_decide, Connectives, SaturationConfig, SequentFamily};
use primal_deduct::syntax::{parse_formula, parse_sequent};

fn main() {
    let cases = [
        ("PL", 0, "x -> x |- x & x -> x"),
        ("PEL0", 0, "x -> x |- x & x -> x"),
        ("ML", 1, "|- x -> x"),
        ("ML", 2, "x -> y, y -> z |- x -> z"),
        ("IL", 1, "bot |- x"),
        ("CL+or", 2, "|- x | (x -> bot)"),
    ];
    for (logic, extra, text) in cases {
        let config = SaturationConfig::new(logic.parse::<LogicId>().unwrap()).with_max_extra(extra);
        println!(
            "{logic:<6} {text:<28} {:?}",
            oracle_decide(config, &parse_sequent(text).unwrap(), &[])
        );
    }

    // The universe can be padded with formulas the proof needs.
    let config = SaturationConfig::new(LogicId::CL).with_max_extra(3);
    let peirce = parse_sequent("|- ((x -> y) -> x) -> x").unwrap();
    println!(
        "Peirce in CL, padded: {:?}",
        oracle_decide(config, &peirce, &[parse_formula("x -> bot").unwrap()])
    );

    let family = SequentFamily::new(2, 2, 2, Connectives::AND_IMP_TOP_BOT);
    println!(
        "family: {} formulas, {} antecedent sets, {} sequents",
        family.formulas.len(),
        family.antecedent_set_count(),
        family.count()
    );
}
