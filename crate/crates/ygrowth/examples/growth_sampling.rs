//! Sample growth paths from the built-in models and print their evolution.
//!
//! Run with: `cargo run --release --example growth_sampling`

use ygrowth::characters::ThomaParams;
use ygrowth::ratio;
use ygrowth::samplers::GrowthModel;

fn main() {
    let seed = 42;

    println!("Corner growth (Plancherel), 20 boxes:");
    let path = GrowthModel::Plancherel.sample(20, seed, 0);
    for t in [5usize, 10, 15, 20] {
        println!("  t = {t:2}: {}", path.shapes[t]);
    }

    println!("\nSame law via row insertion (RSK):");
    let path = GrowthModel::Rsk.sample(20, seed, 0);
    println!("  final shape: {}", path.final_shape());

    println!("\nSchur-Weyl with a 3-letter alphabet:");
    let path = GrowthModel::SchurWeyl { d: 3 }.sample(20, seed, 0);
    println!("  final shape: {} (at most 3 rows)", path.final_shape());

    let upsilon = ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 4)]).unwrap();
    println!("\nMixed-alphabet growth, row rate 1/2, column rate 1/4:");
    let path = GrowthModel::Thoma(upsilon).sample(30, seed, 0);
    println!("  final shape: {}", path.final_shape());

    println!("\nHeight function of the Plancherel path at t = 20:");
    let path = GrowthModel::Plancherel.sample(20, seed, 0);
    let (lo, hi) = path.final_shape().profile().window();
    for x in lo..=hi {
        let h = path.height(x, 20).unwrap();
        println!("  H({x:3}, 20) = {h}  {}", "#".repeat(h as usize));
    }

    println!("\nCSV export of the first three steps:");
    for line in path.to_csv().lines().take(4) {
        println!("  {line}");
    }
}
