//! Limit-shape profiles via numeric Stieltjes inversion: the celebrated
//! Plancherel curve and the square level lines.
//!
//! Run with: `cargo run --release --example limit_shape_curves`

use ygrowth::harness::{limit_shape, LevelModel};
use ygrowth::{ratio, Rat};
use num_traits::One;

fn main() {
    let grid: Vec<f64> = (0..=1040).map(|i| -2.6 + i as f64 * 0.005).collect();
    let omega = limit_shape(&LevelModel::Plancherel, &Rat::one(), &grid);
    let pi = std::f64::consts::PI;
    println!("Plancherel limit shape at alpha = 1 (the VKLS curve):");
    for target in [-2.0f64, -1.0, 0.0, 1.0, 2.0] {
        let idx = ((target + 2.6) / 0.005).round() as usize;
        let closed = if target.abs() <= 2.0 {
            (2.0 / pi) * (target * (target / 2.0_f64).asin() + (4.0 - target * target).sqrt())
        } else {
            target.abs()
        };
        println!(
            "  omega({target:5.2}) = {:8.5}   closed form {closed:8.5}",
            omega[idx]
        );
    }
    println!("  omega(0) = 4/pi = {:.5}", 4.0 / pi);

    // level lines shrink like sqrt(alpha)
    for alpha in [ratio(1, 4), Rat::one()] {
        let omega = limit_shape(&LevelModel::Plancherel, &alpha, &grid);
        let idx = (2.6f64 / 0.005).round() as usize;
        println!(
            "  level alpha = {alpha}: peak height omega(0) = {:.5}",
            omega[idx]
        );
    }

    println!("\nSquare-shape level line at alpha = 1 (the diagram itself):");
    let grid: Vec<f64> = (0..=600).map(|i| -1.5 + i as f64 * 0.005).collect();
    let omega = limit_shape(&LevelModel::Square, &Rat::one(), &grid);
    for target in [-1.0f64, 0.0, 1.0] {
        let idx = ((target + 1.5) / 0.005).round() as usize;
        println!("  omega({target:5.2}) = {:8.5}", omega[idx]);
    }
    println!("(piecewise linear through (-1, 1), (0, 2), (1, 1))");
}
