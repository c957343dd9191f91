//! Countermodels: valuations for PL + →ED, Kripke models for PL and its
//! intuitionistic relatives, and classical truth tables.

mod bits;
mod classical;
mod kripke;
mod valuation;

pub use classical::{
    cl_falsifying_assignment, decide_cl_truthtable, decide_cl_truthtable_capped,
    sequent_truth_table, table_variables, TooManyVariables, DEFAULT_VAR_CAP, TABLE_VAR_CAP,
};
pub use kripke::{
    countermodel_search, countermodel_search_in, model_check, Countermodel, KripkeModel,
    KripkeSemantics, ModelError, SearchError, DEFAULT_WORLD_CAP,
};
pub use valuation::{
    evaluate_valuation, soundness_check, SoundnessError, Valuation, SOUNDNESS_VAR_CAP,
};
