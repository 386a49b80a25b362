//! Transition, co-transition and diagram measures of a partition, with the
//! moment bridges that connect them.
//!
//! Run with: `cargo run --release --example exact_measures`

use ygrowth::measures::{
    cotransition_bridge, cotransition_measure, diagram_moments, markov_krein_bridge, moments,
    transition_measure, MomentFlavor,
};
use ygrowth::partitions::{corners, dim_syt, Partition};
use ygrowth::rat;

fn main() {
    let lambda = Partition::new(vec![5, 3, 2, 2, 1]);
    println!("lambda = {lambda}, dim = {}", dim_syt(&lambda));

    let c = corners(&lambda);
    println!("addable-corner contents (minima): {:?}", c.minima);
    println!("removable-corner contents (maxima): {:?}", c.maxima);

    let m_k = transition_measure(&lambda);
    println!("\ntransition measure:");
    for (x, w) in m_k.atoms() {
        println!("  weight {w} at {x}");
    }

    let m_a = cotransition_measure(&lambda).unwrap();
    println!("co-transition measure:");
    for (y, w) in m_a.atoms() {
        println!("  weight {w} at {y}");
    }

    let x = moments(&m_k, 8, MomentFlavor::Transition);
    println!("\ntransition moments: {:?}", pretty(&x.values));

    // the log bridge turns transition moments into diagram moments
    let q_bridge = markov_krein_bridge(&x).unwrap();
    let q_direct = diagram_moments(&lambda, 7);
    println!("diagram moments (bridge): {:?}", pretty(&q_bridge.values));
    println!("diagram moments (direct): {:?}", pretty(&q_direct.values));
    assert_eq!(q_bridge.values, q_direct.values);

    // the Stieltjes relation recovers the co-transition moments, with the
    // area convention A = |lambda|
    let z_bridge = cotransition_bridge(&x, &rat(lambda.size() as i64)).unwrap();
    let z_direct = moments(&m_a, 6, MomentFlavor::Cotransition);
    println!("co-transition moments (bridge): {:?}", pretty(&z_bridge.values));
    assert_eq!(z_bridge.values, z_direct.values);
    println!("\nboth bridges agree with the direct computations.");
}

fn pretty(values: &[ygrowth::Rat]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}
