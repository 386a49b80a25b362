//! Level lines of the uniform-tableau-of-square-shape surface: the closed
//! form of the level transform agrees with the multilevel pipeline from the
//! Bernoulli free cumulants.
//!
//! Run with: `cargo run --release --example square_levels`

use ygrowth::ratio;
use ygrowth::series::{
    bernoulli_free_cumulants, multilevel_moments, square_level_moments, LimitData,
};

fn main() {
    let cumulants = bernoulli_free_cumulants(24);
    println!(
        "free cumulants of the unit-square transition measure: {:?}",
        cumulants[..8]
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );

    let data = LimitData::from_cumulants(cumulants).unwrap();
    for alpha in [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(1, 1)] {
        let closed = square_level_moments(&alpha, 8).unwrap();
        let pipeline = multilevel_moments(&data, &alpha, 8).unwrap();
        println!("\nalpha = {alpha}:");
        println!(
            "  closed form: {:?}",
            closed.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
        println!("  agree with the multilevel extraction: {}", closed == pipeline);
    }

    println!("\nat alpha = 1/2 the level measure is the arcsine law on [-1, 1];");
    println!("at alpha = 1 it is the two-point measure of the square's corners.");
}
