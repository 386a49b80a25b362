//! Monte Carlo fluctuation analysis: the centered height-function moments of
//! the corner-growth ensemble against the conditioned-field predictions.
//!
//! Run with: `cargo run --release --example fluctuation_mc`
//! (a couple of thousand exact-arithmetic paths; takes a minute)

use ygrowth::cli::fluctuation_report;
use ygrowth::harness::predicted_pcov;
use ygrowth::{ratio, Rat};
use num_traits::{One, ToPrimitive};

fn main() {
    let n = 196u64;
    let paths = 2000u64;
    let alphas = vec![Rat::one(), ratio(1, 2)];
    let ks = vec![1u32, 2];

    println!("sampling {paths} Plancherel growth paths of {n} boxes...");
    let report = fluctuation_report("plancherel", n, paths, 2024, &alphas, &ks)
        .expect("sampling");
    println!("\nempirical vs predicted covariances (pi-multiples in the prediction):");
    for e in &report.entries {
        println!(
            "  (a={}, k={}) x (a={}, k={}): emp {:+.4} +- {:.4}   pred {:+.4}",
            e.alpha, e.k, e.alpha2, e.k2, e.empirical, e.std_error, e.predicted
        );
    }

    let target = predicted_pcov(1, 1, &Rat::one(), &Rat::one())
        .to_f64()
        .unwrap()
        * std::f64::consts::PI;
    println!("\nVar of the first moment should approach pi/2 = {target:.4} as n grows.");
    println!("full JSON report:\n{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
}
