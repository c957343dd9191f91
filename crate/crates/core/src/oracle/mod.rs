//! Brute-force ground truth: bounded saturation for any catalogued logic
//! and exhaustive families of small sequents.

mod enumerate;
mod saturate;

pub use enumerate::{
    enumerate_formulas, enumerate_small_sequents, variable_name, Connectives, FamilyTooLarge,
    SequentFamily, DEFAULT_FAMILY_CAP,
};
pub use saturate::{
    oracle_decide, EquivalenceMemo, OracleVerdict, Prepared, SaturationConfig, SaturationRun,
    Universe,
};
