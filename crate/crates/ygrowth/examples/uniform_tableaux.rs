//! Uniform random standard Young tableaux via the hook walk, and downward
//! chains driven by the co-transition measure.
//!
//! Run with: `cargo run --release --example uniform_tableaux`

use std::collections::BTreeMap;

use ygrowth::partitions::{dim_syt, Partition};
use ygrowth::samplers::{downward_chain_stream, exact_downward_law, hook_walk_syt_stream};

fn main() {
    let shape = Partition::new(vec![3, 2]);
    println!(
        "shape {shape} has {} standard tableaux; sampling 10000 of them:",
        dim_syt(&shape)
    );
    let mut counts: BTreeMap<Vec<Partition>, u64> = BTreeMap::new();
    for i in 0..10_000u64 {
        let path = hook_walk_syt_stream(&shape, 5, i).unwrap();
        *counts.entry(path.shapes).or_insert(0) += 1;
    }
    for (i, (path, count)) in counts.iter().enumerate() {
        let chain: Vec<String> = path.iter().skip(1).map(|p| p.to_string()).collect();
        println!("  tableau {}: {}  seen {count} times", i + 1, chain.join(" -> "));
    }

    let lambda = Partition::new(vec![4, 2, 1]);
    println!("\nexact downward law from {lambda} to 3 boxes:");
    for (mu, p) in exact_downward_law(&lambda, 3) {
        println!("  {mu}: {p}");
    }
    println!("one sampled downward chain end: {}", downward_chain_stream(&lambda, 3, 9, 0).unwrap());
}
