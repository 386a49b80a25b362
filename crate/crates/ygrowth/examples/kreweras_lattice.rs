//! The set-partition lattice: non-crossing partitions, the Kreweras
//! complement, and the falling-factorial expansion identities.
//!
//! Run with: `cargo run --release --example kreweras_lattice`

use ygrowth::cumulants::{
    disj_count, enumerate_noncrossing, interval_partition, is_admissible, kreweras_complement,
    nc_count, rosas_identity_check, SetPartition,
};
use ygrowth::partitions::{enumerate_partitions, Partition};

fn main() {
    let theta = SetPartition::new(vec![vec![1, 3, 5], vec![2], vec![4], vec![6, 8], vec![7]]);
    println!("theta = {:?}", theta.blocks());
    println!("admissible (no cyclically adjacent pair shares a block): {}", is_admissible(&theta));
    let k = kreweras_complement(&theta).unwrap();
    println!("Kreweras complement: {:?}", k.blocks());

    println!("\nnon-crossing partition counts by block type, 6 points:");
    for mu in enumerate_partitions(6) {
        let count = nc_count(&mu);
        let brute = enumerate_noncrossing(6)
            .into_iter()
            .filter(|p| p.shape() == mu)
            .count();
        println!("  type {mu}: formula {count}, enumeration {brute}");
    }

    // products of falling factorials expand over compatible set partitions
    let lambda = Partition::new(vec![3, 2]);
    let pi = interval_partition(&lambda);
    println!("\nfor lambda = {lambda} the expansion weights Disj(pi, m) are:");
    for m in 1..=5usize {
        println!("  m = {m}: {}", disj_count(&pi, m));
    }
    println!(
        "(x ff 3)(x ff 2) = sum_m Disj(pi, m) (x ff m) holds: {}",
        rosas_identity_check(&lambda)
    );
}
