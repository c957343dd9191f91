//! Property tests tying the deciders to each other, to the oracle and to
//! the semantics.

mod common;

use common::{formula_strategy, formula_strategy_with, sequent_strategy};
use primal_deduct::calculi::{check_proof, LogicId};
use primal_deduct::oracle::{oracle_decide, OracleVerdict, SaturationConfig};
use primal_deduct::pel0_decider::{
    decide_pel0, normalize_free_of_equivalents, normalize_with, NormalizeOptions,
};
use primal_deduct::pl_decider::{decide_pl, decide_pl_traced};
use primal_deduct::reductions::{reduce_clor_to_cl, translate_or};
use primal_deduct::semantics::{
    countermodel_search, decide_cl_truthtable, model_check, sequent_truth_table, table_variables,
};
use primal_deduct::syntax::{parse_formula, parse_sequent, Formula, Sequent};
use proptest::prelude::*;

fn oracle(logic: LogicId, s: &Sequent) -> bool {
    match oracle_decide(SaturationConfig::new(logic), s, &[]) {
        OracleVerdict::Derived => true,
        OracleVerdict::NotDerived => false,
        OracleVerdict::Partial => panic!("oracle hit its step bound on {s}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn printing_round_trips(f in formula_strategy_with(5, true), s in sequent_strategy(4, 3)) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
        prop_assert_eq!(parse_sequent(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn pl_matches_oracle(s in sequent_strategy(3, 3)) {
        prop_assert_eq!(decide_pl(&s).unwrap(), oracle(LogicId::PL, &s));
    }

    #[test]
    fn pel0_matches_oracle(s in sequent_strategy(3, 2)) {
        prop_assert_eq!(decide_pel0(&s).unwrap(), oracle(LogicId::PEL0, &s));
    }

    #[test]
    fn pl_cut_is_admissible(s in sequent_strategy(3, 2), phi in formula_strategy(3), psi in formula_strategy(3)) {
        let g = s.antecedents();
        let first = decide_pl(&Sequent::new(g.iter().copied(), phi)).unwrap();
        let second = decide_pl(&Sequent::new(g.iter().copied().chain([phi]), psi)).unwrap();
        if first && second {
            prop_assert!(decide_pl(&Sequent::new(g.iter().copied(), psi)).unwrap());
        }
    }

    #[test]
    fn deciders_are_monotone(s in sequent_strategy(3, 2), extra in formula_strategy(3)) {
        let bigger = s.with_antecedent(extra);
        if decide_pl(&s).unwrap() {
            prop_assert!(decide_pl(&bigger).unwrap());
        }
        if decide_pel0(&s).unwrap() {
            prop_assert!(decide_pel0(&bigger).unwrap());
        }
    }

    #[test]
    fn logics_are_nested(s in sequent_strategy(3, 3)) {
        let pl = decide_pl(&s).unwrap();
        let pel0 = decide_pel0(&s).unwrap();
        let cl = decide_cl_truthtable(&s).unwrap();
        prop_assert!(!pl || pel0, "PL theorem not in PEL0");
        prop_assert!(!pel0 || cl, "PEL0 theorem not classical");
    }

    #[test]
    fn pl_theorems_have_checked_proofs(s in sequent_strategy(3, 3)) {
        let (theorem, _, proof) = decide_pl_traced(&s).unwrap();
        prop_assert_eq!(theorem, proof.is_some());
        if let Some(p) = proof {
            check_proof(&p, LogicId::PL).unwrap();
            prop_assert_eq!(p.conclusion(), Some(&s));
        }
    }

    #[test]
    fn pl_non_theorems_have_one_world_countermodels(s in sequent_strategy(3, 3)) {
        let theorem = decide_pl(&s).unwrap();
        let cm = countermodel_search(&s, 1).unwrap();
        prop_assert_eq!(theorem, cm.is_none());
        if let Some(cm) = cm {
            prop_assert!(!model_check(&cm.model, cm.world, &s).unwrap());
        }
    }

    #[test]
    fn normalization_properties(fs in prop::collection::vec(formula_strategy(4), 1..5)) {
        let options = NormalizeOptions { check_invariants: true, ..NormalizeOptions::default() };
        let norm = normalize_with(&fs, options).unwrap();
        prop_assert_eq!(normalize_free_of_equivalents(&norm.output).unwrap(), norm.output.clone());
        for (a, b) in fs.iter().zip(&norm.output) {
            prop_assert!(b.length() <= a.length());
        }
        let plain = NormalizeOptions { prefilter: false, ..options };
        prop_assert_eq!(normalize_with(&fs, plain).unwrap().output, norm.output);
    }

    #[test]
    fn pel0_verdict_survives_normalization(s in sequent_strategy(3, 2)) {
        let all: Vec<Formula> = s.formulas().collect();
        let norm = normalize_free_of_equivalents(&all).unwrap();
        let (ants, cons) = norm.split_at(norm.len() - 1);
        let t = Sequent::new(ants.iter().copied(), cons[0]);
        prop_assert_eq!(decide_pel0(&s).unwrap(), decide_pel0(&t).unwrap());
        prop_assert_eq!(decide_pel0(&s).unwrap(), decide_pl(&t).unwrap());
    }

    #[test]
    fn or_translation_preserves_tables(a in formula_strategy_with(3, true), c in formula_strategy_with(3, true)) {
        let s = Sequent::new([a], c);
        let t = reduce_clor_to_cl(&s);
        prop_assert!(!t.has_or());
        prop_assert_eq!(reduce_clor_to_cl(&t), t.clone());
        let mut vars = table_variables(&s);
        for v in ["x", "y", "z"] {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        prop_assert_eq!(sequent_truth_table(&s, &vars).unwrap(), sequent_truth_table(&t, &vars).unwrap());
        prop_assert_eq!(translate_or(translate_or(a)), translate_or(a));
    }
}
