//! Rule schemas, the logic catalogue, proof objects and the proof checker.

mod check;
mod eliminate;
mod proof;
mod rules;
mod synth;

pub use check::{check_proof, check_step, CheckError, Mismatch};
pub use eliminate::{eliminate_insignificant, significant_implications, EliminateError};
pub use proof::{Proof, ProofBuilder, ProofFormatError, ProofStep};
pub use rules::{LogicId, LogicName, RuleSet, RuleTag, UnknownLogic, UnknownRule};
pub use synth::{synthesize_e0f_proof, synthesize_ef_proof, EfForm, SynthError};
