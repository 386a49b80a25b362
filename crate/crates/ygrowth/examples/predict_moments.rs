//! Exact limiting moments and covariances from free-cumulant data: the
//! semicircle moments, the Kerov covariance, and their multilevel versions.
//!
//! Run with: `cargo run --release --example predict_moments`

use ygrowth::ratio;
use ygrowth::series::{
    clt_covariance, diagram_statistics, lln_moments, multilevel_covariance, multilevel_moments,
    LimitData,
};
use ygrowth::Rat;
use num_traits::One;

fn main() {
    // F = 1, Q = 0: the Plancherel family
    let data = LimitData::plancherel(24);

    let a = lln_moments(&data, 10).unwrap();
    println!("limiting transition moments (Catalan numbers interleaved with zeros):");
    println!("  {:?}", a.iter().map(|v| v.to_string()).collect::<Vec<_>>());

    println!("\nlimiting covariance of the rescaled transition moments, k, k' <= 6:");
    let b = clt_covariance(&data, 6).unwrap();
    for row in &b {
        println!(
            "  {:?}",
            row.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
    }

    let alpha = ratio(1, 2);
    let a_half = multilevel_moments(&data, &alpha, 8).unwrap();
    println!("\nlevel alpha = 1/2 moments (a_k^alpha = alpha^{{k/2}} times Catalan):");
    println!(
        "  {:?}",
        a_half.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );

    let b_cross = multilevel_covariance(&data, &alpha, &Rat::one(), 4, 4).unwrap();
    println!("\ncross-level covariance between alpha = 1/2 and alpha = 1, k, k' <= 4:");
    for row in &b_cross {
        println!(
            "  {:?}",
            row.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
    }

    let stats = diagram_statistics(&data, &alpha, &alpha, 4).unwrap();
    println!("\ndiagram-moment means at alpha = 1/2 (k = 0..4):");
    println!(
        "  {:?}",
        stats
            .mean_first
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );
    println!("(the k = 1 mean is minus the level area)");
}
