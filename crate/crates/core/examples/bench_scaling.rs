//! Timing normalization across sizes and fitting the growth exponent.

use std::time::Duration;

use primal_deduct::bench::{pel0_scaling, reduction_blowup, scaling_input};
use primal_deduct::pel0_decider::NormalizeOptions;

fn main() {
    let sample: Vec<String> = scaling_input(60, 7).iter().map(|f| f.to_string()).collect();
    println!("generated input of length 60:\n  {}", sample.join("\n  "));

    let report = pel0_scaling(
        &[100, 200, 400, 800],
        7,
        Duration::from_secs(30),
        NormalizeOptions::default(),
    );
    print!("{}", report.to_text());
    print!("{}", reduction_blowup(&[50, 100, 200], 7).to_key_values());
}
