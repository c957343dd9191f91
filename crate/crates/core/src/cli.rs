//! Command-line front end. Every subcommand exits 0 on a positive outcome,
//! 1 on a negative one and 2 on errors or inconclusive results.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bench::{pel0_scaling, reduction_blowup, BenchReport};
use crate::calculi::{check_proof, CheckError, LogicId, LogicName, Proof};
use crate::oracle::{oracle_decide, OracleVerdict, SaturationConfig};
use crate::pel0_decider::{decide_pel0, normalize_free_of_equivalents, NormalizeOptions};
use crate::pl_decider::{decide_pl, decide_pl_traced};
use crate::reductions::{cl_to_clor, ReductionId};
use crate::semantics::{
    cl_falsifying_assignment, countermodel_search_in, decide_cl_truthtable, KripkeSemantics,
    DEFAULT_WORLD_CAP,
};
use crate::syntax::{parse_formula, parse_sequent, Formula, Sequent};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Default cap on `oracle --max-extra`, overridable through the hard-cap
/// environment variable.
pub const DEFAULT_EXTRA_CAP: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "primal-deduct",
    version,
    about = "Decide, check and refute sequents of primal logic and its relatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a sequent in PL, PEL0, CL or CL with disjunction.
    Decide(DecideArgs),
    /// Apply a reduction to a sequent.
    Transform(TransformArgs),
    /// Check a proof file under a logic.
    CheckProof(CheckProofArgs),
    /// Search for a Kripke countermodel.
    Countermodel(CountermodelArgs),
    /// Decide a sequent in any catalogued logic by bounded saturation.
    Oracle(OracleArgs),
    /// Run a benchmark suite.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct DecideArgs {
    /// pl, pel0, cl or cl-or.
    #[arg(long)]
    logic: String,
    /// Print closure events before the verdict.
    #[arg(long)]
    trace: bool,
    /// Print a refuting model for non-theorems.
    #[arg(long)]
    countermodel: bool,
    /// Print the normalized sequent (pel0).
    #[arg(long)]
    emit_normalized: bool,
    /// Read one sequent per line from stdin and print one verdict per line.
    #[arg(long)]
    stdin_batch: bool,
    sequent: Option<String>,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// clor-to-cl, il-to-ml, ml-to-pel1, ml-to-pel2, or the cl-to-clor utility.
    #[arg(long)]
    reduction: String,
    sequent: String,
}

#[derive(Args, Debug)]
struct CheckProofArgs {
    #[arg(long)]
    logic: String,
    file: std::path::PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    Primal,
    Minimal,
    Intuitionistic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelFormat {
    Text,
    Kv,
}

#[derive(Args, Debug)]
struct CountermodelArgs {
    #[arg(long, value_enum, default_value = "primal")]
    semantics: SemanticsArg,
    #[arg(long, default_value_t = 2)]
    max_worlds: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ModelFormat,
    sequent: String,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    logic: String,
    /// Extra antecedents tracked beyond the hypotheses.
    #[arg(long, default_value_t = 1)]
    max_extra: usize,
    #[arg(long, default_value_t = 1_000_000)]
    step_bound: usize,
    /// Formulas added to the saturation universe.
    #[arg(long = "pad")]
    pad: Vec<String>,
    sequent: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Pel0Scaling,
    ReductionBlowup,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Ascending input lengths, at least three.
    #[arg(long, value_delimiter = ',', default_value = "100,200,400,800,1600")]
    sizes: Vec<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Per-size timeout; timed-out sizes are excluded from the fit.
    #[arg(long, default_value_t = 60.0)]
    timeout_secs: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: ModelFormat,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_POSITIVE
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Decide(a) => cmd_decide(a, stdin, out),
        Command::Transform(a) => cmd_transform(a, out),
        Command::CheckProof(a) => cmd_check_proof(a, out),
        Command::Countermodel(a) => cmd_countermodel(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut err = std::io::stderr();
    let code = run(std::env::args_os(), &mut input, &mut out, &mut err);
    let _ = out.flush();
    code
}

type CmdResult = Result<i32, String>;

fn verdict_code(positive: bool) -> i32 {
    if positive {
        EXIT_POSITIVE
    } else {
        EXIT_NEGATIVE
    }
}

fn parse_seq(text: &str) -> Result<Sequent, String> {
    parse_sequent(text).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DecideLogic {
    Pl,
    Pel0,
    Cl,
    ClOr,
}

fn decide_logic(text: &str) -> Result<DecideLogic, String> {
    let logic: LogicId = text
        .parse()
        .map_err(|e: crate::calculi::UnknownLogic| e.to_string())?;
    match (logic.name, logic.with_disjunction) {
        (LogicName::PL, false) => Ok(DecideLogic::Pl),
        (LogicName::PEL0, false) => Ok(DecideLogic::Pel0),
        (LogicName::CL, false) => Ok(DecideLogic::Cl),
        (LogicName::CL, true) => Ok(DecideLogic::ClOr),
        _ => Err(format!(
            "decide supports pl, pel0, cl and cl-or; use `oracle --logic {}` for {logic}",
            text.trim()
        )),
    }
}

fn decide_one(logic: DecideLogic, s: &Sequent) -> Result<bool, String> {
    match logic {
        DecideLogic::Pl => decide_pl(s).map_err(|e| e.to_string()),
        DecideLogic::Pel0 => decide_pel0(s).map_err(|e| e.to_string()),
        DecideLogic::Cl if s.has_or() => {
            Err("disjunction is not part of cl; use --logic cl-or".into())
        }
        DecideLogic::Cl | DecideLogic::ClOr => decide_cl_truthtable(s).map_err(|e| e.to_string()),
    }
}

fn verdict_word(theorem: bool) -> &'static str {
    if theorem {
        "THEOREM"
    } else {
        "NON-THEOREM"
    }
}

fn cmd_decide(a: DecideArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    let logic = decide_logic(&a.logic)?;
    if a.stdin_batch {
        if a.trace || a.countermodel || a.emit_normalized || a.sequent.is_some() {
            return Err("--stdin-batch prints one verdict per input line and takes no sequent or other flags".into());
        }
        return decide_batch(logic, stdin, out);
    }
    let text = a.sequent.ok_or("missing sequent argument")?;
    let s = parse_seq(&text)?;
    let w = |out: &mut dyn Write, line: String| writeln!(out, "{line}").map_err(|e| e.to_string());

    let theorem = match logic {
        DecideLogic::Pl => {
            if a.emit_normalized {
                return Err("--emit-normalized applies to pel0".into());
            }
            let (theorem, events, _) = decide_pl_traced(&s).map_err(|e| e.to_string())?;
            if a.trace {
                for e in events {
                    w(out, e.to_string())?;
                }
            }
            theorem
        }
        DecideLogic::Pel0 => {
            let all: Vec<Formula> = s.formulas().collect();
            let norm = normalize_free_of_equivalents(&all).map_err(|e| e.to_string())?;
            let (ants, cons) = norm.split_at(norm.len() - 1);
            let normalized = Sequent::new(ants.iter().copied(), cons[0]);
            if a.emit_normalized {
                w(out, normalized.to_string())?;
            }
            let (theorem, events, _) = decide_pl_traced(&normalized).map_err(|e| e.to_string())?;
            if a.trace {
                for e in events {
                    w(out, e.to_string())?;
                }
            }
            theorem
        }
        DecideLogic::Cl | DecideLogic::ClOr => {
            if a.trace || a.emit_normalized {
                return Err("--trace and --emit-normalized apply to pl and pel0".into());
            }
            decide_one(logic, &s)?
        }
    };

    if a.countermodel && !theorem {
        match logic {
            DecideLogic::Pl => {
                // A PL countermodel, if any, restricts to its root world.
                if let Some(cm) = countermodel_search_in(&s, 1, KripkeSemantics::Primal, 1)
                    .map_err(|e| e.to_string())?
                {
                    out.write_all(cm.model.to_text().as_bytes())
                        .map_err(|e| e.to_string())?;
                    w(out, format!("refuted at w{}", cm.world))?;
                }
            }
            DecideLogic::Cl | DecideLogic::ClOr => {
                if let Some(row) = cl_falsifying_assignment(&s).map_err(|e| e.to_string())? {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|(v, b)| format!("{v}={}", if *b { "T" } else { "F" }))
                        .collect();
                    w(out, format!("falsified by {}", cells.join(", ")))?;
                }
            }
            DecideLogic::Pel0 => {}
        }
    }
    w(out, verdict_word(theorem).to_string())?;
    Ok(verdict_code(theorem))
}

fn decide_batch(logic: DecideLogic, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    let mut lines = Vec::new();
    for line in stdin.lines() {
        let line = line.map_err(|e| e.to_string())?;
        let t = line.trim();
        if !t.is_empty() && !t.starts_with('#') {
            lines.push(t.to_string());
        }
    }
    let results: Vec<Result<bool, String>> = lines
        .par_iter()
        .map(|l| parse_seq(l).and_then(|s| decide_one(logic, &s)))
        .collect();
    let mut code = EXIT_POSITIVE;
    for r in results {
        let line = match r {
            Ok(t) => {
                if !t && code == EXIT_POSITIVE {
                    code = EXIT_NEGATIVE;
                }
                verdict_word(t).to_string()
            }
            Err(e) => {
                code = EXIT_ERROR;
                format!("ERROR {e}")
            }
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(code)
}

fn cmd_transform(a: TransformArgs, out: &mut dyn Write) -> CmdResult {
    let s = parse_seq(&a.sequent)?;
    let image = if a.reduction.trim().eq_ignore_ascii_case("cl-to-clor") {
        cl_to_clor(&s)
    } else {
        let r: ReductionId = a
            .reduction
            .parse()
            .map_err(|e: crate::reductions::UnknownReduction| e.to_string())?;
        r.apply(&s).map_err(|e| e.to_string())?
    };
    writeln!(out, "{image}").map_err(|e| e.to_string())?;
    Ok(EXIT_POSITIVE)
}

fn cmd_check_proof(a: CheckProofArgs, out: &mut dyn Write) -> CmdResult {
    let logic: LogicId = a
        .logic
        .parse()
        .map_err(|e: crate::calculi::UnknownLogic| e.to_string())?;
    let text =
        std::fs::read_to_string(&a.file).map_err(|e| format!("{}: {e}", a.file.display()))?;
    let proof = Proof::parse(&text).map_err(|e| format!("{}: {e}", a.file.display()))?;
    match check_proof(&proof, logic) {
        Ok(()) => {
            writeln!(out, "VALID {logic}").map_err(|e| e.to_string())?;
            writeln!(
                out,
                "{}",
                proof.conclusion().expect("checked proofs are non-empty")
            )
            .map_err(|e| e.to_string())?;
            Ok(EXIT_POSITIVE)
        }
        // A dangling reference is malformed input, not a rule violation.
        Err(e @ (CheckError::BadReference { .. } | CheckError::Empty)) => Err(e.to_string()),
        Err(e) => {
            writeln!(out, "INVALID {logic}").map_err(|e| e.to_string())?;
            writeln!(out, "{e}").map_err(|e| e.to_string())?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_countermodel(a: CountermodelArgs, out: &mut dyn Write) -> CmdResult {
    let s = parse_seq(&a.sequent)?;
    let semantics = match a.semantics {
        SemanticsArg::Primal => KripkeSemantics::Primal,
        SemanticsArg::Minimal => KripkeSemantics::Minimal,
        SemanticsArg::Intuitionistic => KripkeSemantics::Intuitionistic,
    };
    let cap = crate::hard_cap(DEFAULT_WORLD_CAP);
    let found =
        countermodel_search_in(&s, a.max_worlds, semantics, cap).map_err(|e| e.to_string())?;
    let text = match (&found, a.format) {
        (Some(cm), ModelFormat::Text) => {
            format!("{}refuted at w{}\n", cm.model.to_text(), cm.world)
        }
        (Some(cm), ModelFormat::Kv) => format!(
            "found=true\n{}refuted=w{}\n",
            cm.model.to_key_values(),
            cm.world
        ),
        (None, ModelFormat::Text) => {
            format!("no countermodel with at most {} worlds\n", a.max_worlds)
        }
        (None, ModelFormat::Kv) => format!("found=false\nmax_worlds={}\n", a.max_worlds),
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(verdict_code(found.is_some()))
}

fn cmd_oracle(a: OracleArgs, out: &mut dyn Write) -> CmdResult {
    let logic: LogicId = a
        .logic
        .parse()
        .map_err(|e: crate::calculi::UnknownLogic| e.to_string())?;
    let cap = crate::hard_cap(DEFAULT_EXTRA_CAP);
    if a.max_extra > cap {
        return Err(format!(
            "--max-extra {} exceeds the hard cap of {cap}",
            a.max_extra
        ));
    }
    let s = parse_seq(&a.sequent)?;
    if s.has_or() && !logic.with_disjunction {
        return Err(format!(
            "{logic} has no disjunction rules; use the +or variant"
        ));
    }
    let pad = a
        .pad
        .iter()
        .map(|p| parse_formula(p).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let config = SaturationConfig::new(logic)
        .with_max_extra(a.max_extra)
        .with_step_bound(a.step_bound);
    let (word, code) = match oracle_decide(config, &s, &pad) {
        OracleVerdict::Derived => ("DERIVED", EXIT_POSITIVE),
        OracleVerdict::NotDerived => ("NOT-DERIVED", EXIT_NEGATIVE),
        OracleVerdict::Partial => ("PARTIAL", EXIT_ERROR),
    };
    writeln!(out, "{word}").map_err(|e| e.to_string())?;
    Ok(code)
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> CmdResult {
    if a.sizes.len() < 3 {
        return Err("bench needs at least three sizes".into());
    }
    if a.sizes.windows(2).any(|w| w[0] >= w[1]) || a.sizes[0] == 0 {
        return Err("sizes must be positive and strictly ascending".into());
    }
    if !(a.timeout_secs > 0.0) {
        return Err("--timeout-secs must be positive".into());
    }
    let report: BenchReport = match a.suite {
        Suite::Pel0Scaling => pel0_scaling(
            &a.sizes,
            a.seed,
            Duration::from_secs_f64(a.timeout_secs),
            NormalizeOptions::default(),
        ),
        Suite::ReductionBlowup => reduction_blowup(&a.sizes, a.seed),
    };
    let text = match a.format {
        ModelFormat::Text => report.to_text(),
        ModelFormat::Kv => report.to_key_values(),
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    let complete = report
        .scaling
        .iter()
        .all(|r| r.normalize.is_some() && r.decide.is_some());
    Ok(verdict_code(complete))
}
