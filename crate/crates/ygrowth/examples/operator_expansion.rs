//! The trace operators in the symmetric group algebra: their Jucys-Murphy
//! realization, conjugacy-class decomposition, and the polynomial growth of
//! the class counts with the symmetric group degree.
//!
//! Run with: `cargo run --release --example operator_expansion`

use ygrowth::cumulants::nc_count;
use ygrowth::group_algebra::{class_decompose, d_k, jucys_murphy_power_expectation, multiply};
use ygrowth::partitions::{rem_k, Partition};

fn main() {
    // D_2 acts as multiplication by n on partitions of n
    let d2 = d_k(2, 5, 5).unwrap();
    println!("D_2 at n = 5: {} term(s): {}", d2.num_terms(), d2.to_json());

    // the same element via the projected Jucys-Murphy power
    let jm = jucys_murphy_power_expectation(4, 5).unwrap();
    let direct = d_k(4, 5, 5).unwrap();
    println!(
        "\nD_4 at n = 5 has {} terms; equals E_5[X_6^4]: {}",
        direct.num_terms(),
        jm == direct
    );

    println!("\nclass decomposition of D_4 for n = 3..7:");
    println!("  (classes are cycle types with fixed points dropped)");
    for n in 3..=7usize {
        let classes = class_decompose(&d_k(4, n, n).unwrap());
        let rendered: Vec<String> = classes
            .iter()
            .map(|(lam, c)| format!("{lam} -> {c}"))
            .collect();
        println!("  n = {n}: {}", rendered.join(", "));
    }
    println!("  the identity coefficient grows like 2 n^2, and 2 = |NC(2,2)|:");
    println!(
        "  nc_count((2,2)) = {}",
        nc_count(&Partition::new(vec![2, 2]))
    );
    println!(
        "  the class (3) is the image of (4) under the row-and-column deletion: {}",
        rem_k(&Partition::new(vec![4]), 4).unwrap()
    );

    // restricted operators commute: the Gelfand-Tsetlin family
    let a = d_k(2, 5, 5).unwrap();
    let b = d_k(3, 5, 3).unwrap();
    println!(
        "\nD_2|_5 and D_3|_3 commute in Q[S_5]: {}",
        multiply(&a, &b).unwrap() == multiply(&b, &a).unwrap()
    );
}
