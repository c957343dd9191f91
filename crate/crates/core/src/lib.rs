pub mod bench;
pub mod calculi;
pub mod cli;
pub mod oracle;
pub mod pel0_decider;
pub mod pl_decider;
pub mod reductions;
pub mod semantics;
pub mod syntax;

/// Environment variable that overrides the size caps of searches.
pub const HARD_CAP_ENV: &str = "PRIMAL_DEDUCT_HARD_CAP";

/// The cap from `PRIMAL_DEDUCT_HARD_CAP`, or `default` if it is unset or
/// not a number.
pub fn hard_cap(default: usize) -> usize {
    std::env::var(HARD_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}
