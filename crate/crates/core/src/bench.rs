//! Benchmark suites: normalization scaling and reduction output sizes.
//!
//! Scaling inputs are right-leaning towers `l1 ∘ (l2 ∘ (... ∘ lk))` with
//! `∘` drawn from `∧, →` over three variables. Leaves are variables or
//! planted copies such as `v ∧ v`, `v ∧ (v ∧ v)` and `(v ∧ v) → w`, so
//! normalization has equivalent subformulas to merge. Generation is a pure
//! function of the seed.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pel0_decider::{decide_pel0_multi, normalize_with, NormalizeOptions};
use crate::reductions::ReductionId;
use crate::syntax::{Formula, Sequent};

const VARS: [&str; 3] = ["x", "y", "z"];

fn leaf(rng: &mut ChaCha8Rng) -> Formula {
    let v = Formula::var(VARS[rng.gen_range(0..VARS.len())]);
    let w = Formula::var(VARS[rng.gen_range(0..VARS.len())]);
    match rng.gen_range(0..6) {
        0 | 1 => v,
        2 => Formula::and(v, v),
        3 => Formula::and(v, Formula::and(v, v)),
        4 => Formula::imp(Formula::and(v, v), w),
        _ => Formula::imp(v, w),
    }
}

/// A right-leaning tower of about `target` nodes.
fn tower(rng: &mut ChaCha8Rng, target: u64) -> Formula {
    let mut leaves = vec![leaf(rng)];
    let mut len = leaves[0].length();
    while len < target {
        let l = leaf(rng);
        len += l.length() + 1;
        leaves.push(l);
    }
    let mut f = leaves.pop().unwrap();
    while let Some(l) = leaves.pop() {
        f = if rng.gen_bool(0.5) {
            Formula::and(l, f)
        } else {
            Formula::imp(l, f)
        };
    }
    f
}

/// Formulas of combined length at least `n` (and below `n + 40`).
pub fn scaling_input(n: u64, seed: u64) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n.wrapping_mul(0x9E37_79B9));
    let mut out = Vec::new();
    let mut total = 0;
    while total < n {
        let target = (n - total).min(rng.gen_range(12..40));
        let f = tower(&mut rng, target);
        total += f.length();
        out.push(f);
    }
    out
}

/// A random disjunction-free sequent of length about `n`, for reductions.
pub fn reduction_input(n: u64, seed: u64) -> Sequent {
    let fs = scaling_input(n, seed);
    let (last, rest) = fs.split_last().unwrap();
    Sequent::new(rest.iter().copied(), *last)
}

/// Like [`reduction_input`] with some conjunctions turned into disjunctions.
pub fn disjunctive_input(n: u64, seed: u64) -> Sequent {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n));
    fn flip(f: Formula, rng: &mut ChaCha8Rng) -> Formula {
        match f.split() {
            None => f,
            Some((op, a, b)) => {
                let (a, b) = (flip(a, rng), flip(b, rng));
                if op == crate::syntax::Connective::And && rng.gen_bool(0.3) {
                    Formula::or(a, b)
                } else {
                    Formula::binary(op, a, b)
                }
            }
        }
    }
    let s = reduction_input(n, seed);
    let ants: Vec<Formula> = s.antecedents().iter().map(|&a| flip(a, &mut rng)).collect();
    Sequent::new(ants, flip(s.consequent(), &mut rng))
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// One size of the scaling suite.
#[derive(Clone, Debug)]
pub struct ScalingRow {
    pub n: u64,
    pub formulas: usize,
    /// Best of several runs; `None` if the size timed out.
    pub normalize: Option<Duration>,
    pub decide: Option<Duration>,
    pub equivalence_checks: usize,
}

#[derive(Clone, Debug)]
pub struct BlowupRow {
    pub reduction: ReductionId,
    pub input_length: u64,
    pub output_length: u64,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub suite: String,
    pub seed: u64,
    pub scaling: Vec<ScalingRow>,
    /// Fitted exponent of normalization time against `n`.
    pub exponent: Option<f64>,
    pub blowup: Vec<BlowupRow>,
    /// Fitted exponent of output length against input length, per reduction.
    pub blowup_exponents: Vec<(ReductionId, Option<f64>)>,
}

/// Runs `f` repeatedly for at least `min_total` (and at least 3 times),
/// returning the fastest run, or `None` once one run exceeds `timeout`.
fn best_time<T>(
    mut f: impl FnMut() -> T,
    min_total: Duration,
    timeout: Duration,
) -> (Option<Duration>, T) {
    let mut best = Duration::MAX;
    let mut spent = Duration::ZERO;
    let mut runs = 0;
    loop {
        let t = Instant::now();
        let out = f();
        let d = t.elapsed();
        best = best.min(d);
        spent += d;
        runs += 1;
        if d > timeout {
            return (None, out);
        }
        if runs >= 3 && spent >= min_total {
            return (Some(best), out);
        }
    }
}

pub fn pel0_scaling(
    sizes: &[u64],
    seed: u64,
    timeout: Duration,
    options: NormalizeOptions,
) -> BenchReport {
    let mut rows = Vec::new();
    for &n in sizes {
        let input = scaling_input(n, seed);
        let (normalize, norm) = best_time(
            || normalize_with(&input, options).expect("generated inputs are disjunction-free"),
            Duration::from_millis(200),
            timeout,
        );
        let (hyps, query) = input.split_at(input.len() - 1);
        let (decide, _) = best_time(
            || decide_pel0_multi(hyps, query).unwrap(),
            Duration::from_millis(100),
            timeout,
        );
        rows.push(ScalingRow {
            n: input.iter().map(|f| f.length()).sum(),
            formulas: input.len(),
            normalize,
            decide,
            equivalence_checks: norm.stats.equivalence_checks,
        });
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.normalize.map(|t| (r.n as f64, t.as_secs_f64())))
        .collect();
    BenchReport {
        suite: "pel0-scaling".into(),
        seed,
        exponent: if pts.len() >= 3 {
            fit_exponent(&pts)
        } else {
            None
        },
        scaling: rows,
        ..BenchReport::default()
    }
}

pub fn reduction_blowup(sizes: &[u64], seed: u64) -> BenchReport {
    let mut rows = Vec::new();
    for &n in sizes {
        for r in ReductionId::ALL {
            let input = if r == ReductionId::ClOrToCl {
                disjunctive_input(n, seed)
            } else {
                reduction_input(n, seed)
            };
            let out = r.apply(&input).expect("inputs fit the reduction");
            rows.push(BlowupRow {
                reduction: r,
                input_length: input.length(),
                output_length: out.length(),
            });
        }
    }
    let blowup_exponents = ReductionId::ALL
        .into_iter()
        .map(|r| {
            let pts: Vec<(f64, f64)> = rows
                .iter()
                .filter(|row| row.reduction == r)
                .map(|row| (row.input_length as f64, row.output_length as f64))
                .collect();
            (r, fit_exponent(&pts))
        })
        .collect();
    BenchReport {
        suite: "reduction-blowup".into(),
        seed,
        blowup: rows,
        blowup_exponents,
        ..BenchReport::default()
    }
}

fn opt_secs(d: Option<Duration>) -> String {
    d.map_or("timeout".into(), |d| format!("{:.6}", d.as_secs_f64()))
}

fn opt_f(x: Option<f64>) -> String {
    x.map_or("none".into(), |x| format!("{x:.3}"))
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("suite {} (seed {})\n", self.suite, self.seed);
        if !self.scaling.is_empty() {
            s.push_str("       n  formulas  normalize_s     decide_s  equiv_checks\n");
            for r in &self.scaling {
                s.push_str(&format!(
                    "{:>8}  {:>8}  {:>11}  {:>11}  {:>12}\n",
                    r.n,
                    r.formulas,
                    opt_secs(r.normalize),
                    opt_secs(r.decide),
                    r.equivalence_checks
                ));
            }
            s.push_str(&format!("fitted exponent: {}\n", opt_f(self.exponent)));
        }
        if !self.blowup.is_empty() {
            s.push_str("reduction       input  output   ratio\n");
            for r in &self.blowup {
                s.push_str(&format!(
                    "{:<12} {:>8} {:>7} {:>7.2}\n",
                    r.reduction.name(),
                    r.input_length,
                    r.output_length,
                    r.output_length as f64 / r.input_length as f64
                ));
            }
            for (r, e) in &self.blowup_exponents {
                s.push_str(&format!("{} exponent: {}\n", r.name(), opt_f(*e)));
            }
        }
        s
    }

    pub fn to_key_values(&self) -> String {
        let mut s = format!("suite={}\nseed={}\n", self.suite, self.seed);
        for (i, r) in self.scaling.iter().enumerate() {
            s.push_str(&format!("row.{i}.n={}\n", r.n));
            s.push_str(&format!("row.{i}.formulas={}\n", r.formulas));
            s.push_str(&format!(
                "row.{i}.normalize_seconds={}\n",
                opt_secs(r.normalize)
            ));
            s.push_str(&format!("row.{i}.decide_seconds={}\n", opt_secs(r.decide)));
            s.push_str(&format!(
                "row.{i}.equivalence_checks={}\n",
                r.equivalence_checks
            ));
        }
        if !self.scaling.is_empty() {
            s.push_str(&format!("exponent={}\n", opt_f(self.exponent)));
        }
        for (i, r) in self.blowup.iter().enumerate() {
            s.push_str(&format!("blowup.{i}.reduction={}\n", r.reduction.name()));
            s.push_str(&format!("blowup.{i}.input_length={}\n", r.input_length));
            s.push_str(&format!("blowup.{i}.output_length={}\n", r.output_length));
        }
        for (r, e) in &self.blowup_exponents {
            s.push_str(&format!("exponent.{}={}\n", r.name(), opt_f(*e)));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(scaling_input(200, 7), scaling_input(200, 7));
        assert_ne!(scaling_input(200, 7), scaling_input(200, 8));
        let total: u64 = scaling_input(400, 1).iter().map(|f| f.length()).sum();
        assert!((400..440).contains(&total));
        assert!(disjunctive_input(100, 3).has_or());
    }

    #[test]
    fn exponent_fit() {
        let pts: Vec<(f64, f64)> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&x: &f64| (x, 3.0 * x.powi(3)))
            .collect();
        assert!((fit_exponent(&pts).unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(fit_exponent(&[(1.0, 1.0)]), None);
    }

    #[test]
    fn blowup_report() {
        let r = reduction_blowup(&[20, 40, 80], 5);
        assert_eq!(r.blowup.len(), 12);
        for row in &r.blowup {
            assert!(
                row.output_length >= row.input_length || row.reduction == ReductionId::ClOrToCl
            );
        }
        assert!(r.to_key_values().contains("exponent.il-to-ml="));
    }
}
