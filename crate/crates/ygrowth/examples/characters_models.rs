//! Characters of the symmetric group and the probability distributions they
//! induce on partitions.
//!
//! Run with: `cargo run --release --example characters_models`

use ygrowth::characters::{
    gelfand, m_rho, plancherel, schur_weyl, thoma_character, thoma_induced, young_log_derivative,
    CharacterTable, ThomaParams,
};
use ygrowth::partitions::enumerate_partitions;
use ygrowth::ratio;

fn main() {
    let table = CharacterTable::build(5).unwrap();
    println!("character table of S_5 (rows chi_lambda, columns classes):");
    let shapes = enumerate_partitions(5);
    print!("{:12}", "");
    for mu in &shapes {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for lam in &shapes {
        print!("{:12}", lam.to_string());
        for mu in &shapes {
            print!("{:>10}", table.get(lam, mu).to_string());
        }
        println!();
    }
    println!(
        "column orthogonality: {}",
        table.column_orthogonality_holds()
    );

    println!("\nPlancherel(4): {}", plancherel(4).to_json());
    println!("Gelfand(4):    {}", gelfand(4).to_json());
    println!("Schur-Weyl(4, D=2): {}", schur_weyl(4, 2).unwrap().to_json());

    let upsilon = ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 4)]).unwrap();
    let rho = thoma_induced(5, &upsilon).unwrap();
    println!("\ninduced by alpha=(1/2), beta=(1/4) at n = 5: {}", rho.to_json());
    // the induced distribution inverts back to the character
    let mu = ygrowth::partitions::Partition::new(vec![3, 2]);
    println!(
        "M_rho on class {mu}: {} = extreme character value {}",
        m_rho(&rho, &mu),
        thoma_character(&upsilon, &mu)
    );

    // log-derivatives of the partition generating function are scaled
    // cumulants; for Schur-Weyl the first-order ones are powers of sqrt(n)/D
    let sw = schur_weyl(8, 2).unwrap();
    for i in 2..=4u32 {
        let v = young_log_derivative(&sw, &[i]).unwrap();
        println!(
            "Schur-Weyl(8, 2) derivative of order {i}: {} * n^({}/2) = {:.5}",
            v.mantissa,
            v.half_power,
            v.to_f64(8)
        );
    }
}
