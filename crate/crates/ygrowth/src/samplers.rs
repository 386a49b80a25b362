//! Seeded random generation of growth paths and tableaux.
//!
//! Randomness is counter-based: every path derives its own ChaCha8 stream
//! from `(seed, path_index)` via `set_stream`, so ensembles are
//! embarrassingly parallel and identical `(seed, model, steps)` always
//! reproduce identical paths, byte for byte, on every platform.
//!
//! The corner-growth sampler draws each step from the exact rational
//! transition weights (the product formula over corner contents), compared
//! against a 64-bit uniform as an exact rational; no floating point enters
//! the chain law.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{gelfand, Distribution, ThomaParams};
use crate::measures::{cotransition_measure, transition_measure};
use crate::partitions::Partition;
use crate::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SamplerError {
    #[error("hook walk requires a nonempty shape")]
    EmptyShape,
    #[error("downward chain target {m} exceeds |lambda| = {size}")]
    BadTarget { m: u64, size: u64 },
    #[error("time {t} outside the path (steps = {steps})")]
    TimeOutOfRange { t: usize, steps: usize },
}

/// Which process generated a path.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelTag {
    Plancherel,
    Rsk,
    SchurWeyl { d: u64 },
    Thoma(ThomaParams),
    FixedShape(Partition),
    Gelfand,
}

/// An increasing sequence of partitions `shapes[t]` of size `t`, with the
/// seed and model recorded for provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthPath {
    pub shapes: Vec<Partition>,
    pub seed: u64,
    pub path_index: u64,
    pub model: ModelTag,
}

impl GrowthPath {
    pub fn steps(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn final_shape(&self) -> &Partition {
        self.shapes.last().expect("nonempty path")
    }

    /// Number of boxes on the diagonal of content `x` at time `t`.
    pub fn height(&self, x: i64, t: usize) -> Result<u64, SamplerError> {
        if t >= self.shapes.len() {
            return Err(SamplerError::TimeOutOfRange {
                t,
                steps: self.steps(),
            });
        }
        Ok(self.shapes[t].profile().height(x))
    }

    /// CSV export: columns `t, parts` with semicolon-joined parts.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,parts\n");
        for (t, shape) in self.shapes.iter().enumerate() {
            let parts: Vec<String> = shape.parts().iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{},{}\n", t, parts.join(";")));
        }
        out
    }

    /// CSV export of the height field: columns `x, t, H`.
    pub fn height_field_csv(&self) -> String {
        let mut out = String::from("x,t,H\n");
        let (lo, hi) = self
            .final_shape()
            .profile()
            .window();
        for t in 0..self.shapes.len() {
            let prof = self.shapes[t].profile();
            for x in lo..=hi {
                out.push_str(&format!("{},{},{}\n", x, t, prof.height(x)));
            }
        }
        out
    }
}

/// The deterministic ChaCha8 stream for `(seed, path_index)`.
pub fn rng_stream(seed: u64, path_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path_index);
    rng
}

/// Draws an index from exact rational weights using a single 64-bit
/// uniform compared as the exact rational `r / 2^64`.
fn draw_exact(weights: &[Rat], rng: &mut ChaCha8Rng) -> usize {
    let r = rng.next_u64();
    let u = Rat::new(BigInt::from(r), BigInt::from(1u128 << 64));
    let mut acc = Rat::zero();
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i;
        }
    }
    weights.len() - 1
}

/// Corner-growth sampler of the Plancherel growth process: each step adds a
/// box at an addable corner drawn from the transition measure of the current
/// shape.
pub fn plancherel_growth(steps: usize, seed: u64) -> GrowthPath {
    plancherel_growth_stream(steps, seed, 0)
}

pub fn plancherel_growth_stream(steps: usize, seed: u64, path_index: u64) -> GrowthPath {
    let mut rng = rng_stream(seed, path_index);
    let mut shapes = Vec::with_capacity(steps + 1);
    let mut cur = Partition::empty();
    shapes.push(cur.clone());
    for _ in 0..steps {
        let m = transition_measure(&cur);
        let weights: Vec<Rat> = m.atoms().iter().map(|(_, w)| w.clone()).collect();
        let idx = draw_exact(&weights, &mut rng);
        let content = m.atoms()[idx]
            .0
            .to_integer();
        let content = i64::try_from(&content).expect("corner content fits i64");
        cur = cur.with_box_at(content);
        shapes.push(cur.clone());
    }
    GrowthPath {
        shapes,
        seed,
        path_index,
        model: ModelTag::Plancherel,
    }
}

/// Row insertion of a single key into tableau rows; returns nothing, the
/// rows grow by one box. `strict` controls the bumping rule: weak insertion
/// bumps the first entry `> x`, strict insertion the first entry `>= x`.
fn insert_key<T: PartialOrd + Copy>(rows: &mut Vec<Vec<T>>, x: T, strict: bool) {
    let mut carry = x;
    for row in rows.iter_mut() {
        let pos = row.partition_point(|y| {
            if strict {
                *y < carry
            } else {
                *y <= carry
            }
        });
        if pos == row.len() {
            row.push(carry);
            return;
        }
        std::mem::swap(&mut row[pos], &mut carry);
    }
    rows.push(vec![carry]);
}

fn rows_to_partition<T>(rows: &[Vec<T>]) -> Partition {
    Partition::new(rows.iter().map(|r| r.len() as u32).collect())
}

/// RSK shape evolution on iid uniform keys; identical in law to
/// [`plancherel_growth`].
pub fn rsk_growth(steps: usize, seed: u64) -> GrowthPath {
    rsk_growth_stream(steps, seed, 0)
}

pub fn rsk_growth_stream(steps: usize, seed: u64, path_index: u64) -> GrowthPath {
    let mut rng = rng_stream(seed, path_index);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut shapes = Vec::with_capacity(steps + 1);
    shapes.push(Partition::empty());
    for _ in 0..steps {
        // 64-bit keys: ties have probability ~ 2^{-64}
        insert_key(&mut rows, rng.next_u64(), false);
        shapes.push(rows_to_partition(&rows));
    }
    GrowthPath {
        shapes,
        seed,
        path_index,
        model: ModelTag::Rsk,
    }
}

/// RSK on iid uniform letters from `{1..D}`: the Schur–Weyl growth process.
pub fn schur_weyl_growth(steps: usize, d: u64, seed: u64, path_index: u64) -> GrowthPath {
    let mut rng = rng_stream(seed, path_index);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut shapes = Vec::with_capacity(steps + 1);
    shapes.push(Partition::empty());
    for _ in 0..steps {
        let letter = rng.gen_range(1..=d);
        insert_key(&mut rows, letter, false);
        shapes.push(rows_to_partition(&rows));
    }
    GrowthPath {
        shapes,
        seed,
        path_index,
        model: ModelTag::SchurWeyl { d },
    }
}

/// A letter of the mixed Thoma alphabet. Regular letters repeat weakly along
/// rows, primed letters bump their equals (so equal primes stack into a
/// column), continuous letters never tie. The variant order gives the total
/// order on the alphabet.
#[derive(Clone, Copy, PartialEq, PartialOrd, Debug)]
enum Letter {
    Reg(u32),
    Cont(u64),
    Prim(u32),
}

/// Mixed-alphabet RSK growth driven by Thoma parameters: letter `i` with
/// probability `alpha_i` (row rates), primed letter `i` with probability
/// `beta_i` (column rates), a continuous letter with the remaining rate
/// `gamma`.
pub fn thoma_growth(steps: usize, upsilon: &ThomaParams, seed: u64) -> GrowthPath {
    thoma_growth_stream(steps, upsilon, seed, 0)
}

pub fn thoma_growth_stream(
    steps: usize,
    upsilon: &ThomaParams,
    seed: u64,
    path_index: u64,
) -> GrowthPath {
    let mut rng = rng_stream(seed, path_index);
    // letter law as exact cumulative weights over [alpha..., beta..., gamma]
    let mut weights: Vec<Rat> = upsilon.alpha().to_vec();
    weights.extend_from_slice(upsilon.beta());
    weights.push(upsilon.gamma());
    let n_alpha = upsilon.alpha().len();
    let n_beta = upsilon.beta().len();
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    let mut shapes = Vec::with_capacity(steps + 1);
    shapes.push(Partition::empty());
    for _ in 0..steps {
        let idx = draw_exact(&weights, &mut rng);
        let (letter, strict) = if idx < n_alpha {
            (Letter::Reg(idx as u32 + 1), false)
        } else if idx < n_alpha + n_beta {
            (Letter::Prim((idx - n_alpha) as u32 + 1), true)
        } else {
            (Letter::Cont(rng.next_u64()), false)
        };
        insert_letter(&mut rows, letter, strict);
        shapes.push(rows_to_partition(&rows));
    }
    GrowthPath {
        shapes,
        seed,
        path_index,
        model: ModelTag::Thoma(upsilon.clone()),
    }
}

fn insert_letter(rows: &mut Vec<Vec<Letter>>, x: Letter, strict_for_x: bool) {
    let mut carry = x;
    let mut strict = strict_for_x;
    for row in rows.iter_mut() {
        let pos = row.partition_point(|y| if strict { *y < carry } else { *y <= carry });
        if pos == row.len() {
            row.push(carry);
            return;
        }
        std::mem::swap(&mut row[pos], &mut carry);
        // the bumped letter keeps its own insertion rule
        strict = matches!(carry, Letter::Prim(_));
    }
    rows.push(vec![carry]);
}

/// Uniform random standard Young tableau of shape `lambda` via the
/// Greene–Nijenhuis–Wilf hook walk, returned as its growth path.
pub fn hook_walk_syt(lambda: &Partition, seed: u64) -> Result<GrowthPath, SamplerError> {
    hook_walk_syt_stream(lambda, seed, 0)
}

pub fn hook_walk_syt_stream(
    lambda: &Partition,
    seed: u64,
    path_index: u64,
) -> Result<GrowthPath, SamplerError> {
    if lambda.is_empty() {
        return Err(SamplerError::EmptyShape);
    }
    let mut rng = rng_stream(seed, path_index);
    let n = lambda.size() as usize;
    let mut shapes = vec![Partition::empty(); n + 1];
    shapes[n] = lambda.clone();
    let mut cur = lambda.clone();
    for t in (1..=n).rev() {
        let corner = hook_walk_corner(&cur, &mut rng);
        let content = corner.1 as i64 - corner.0 as i64;
        cur = cur.without_box_at(content);
        shapes[t - 1] = cur.clone();
    }
    Ok(GrowthPath {
        shapes,
        seed,
        path_index,
        model: ModelTag::FixedShape(lambda.clone()),
    })
}

/// One hook walk on `shape`: start at a uniform cell, jump to a uniform
/// other cell of the current hook until a corner is reached. Returns the
/// corner as a (row, col) pair, 1-based.
fn hook_walk_corner(shape: &Partition, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut cell = cells[rng.gen_range(0..cells.len())];
    loop {
        let (r, c) = cell;
        let arm = shape.row(r) as usize - c;
        let leg = shape.parts()[r..]
            .iter()
            .take_while(|&&p| p as usize >= c)
            .count();
        if arm == 0 && leg == 0 {
            return cell;
        }
        let jump = rng.gen_range(0..arm + leg);
        cell = if jump < arm {
            (r, c + 1 + jump)
        } else {
            (r + 1 + (jump - arm), c)
        };
    }
}

/// Removes boxes one at a time with co-transition weights until `m` boxes
/// remain; realizes the branching-rule law
/// `p(lambda -> mu) = dim(lambda\mu) dim(mu) / dim(lambda)`.
pub fn downward_chain(
    lambda: &Partition,
    m: u64,
    seed: u64,
) -> Result<Partition, SamplerError> {
    downward_chain_stream(lambda, m, seed, 0)
}

pub fn downward_chain_stream(
    lambda: &Partition,
    m: u64,
    seed: u64,
    path_index: u64,
) -> Result<Partition, SamplerError> {
    if m > lambda.size() {
        return Err(SamplerError::BadTarget {
            m,
            size: lambda.size(),
        });
    }
    let mut rng = rng_stream(seed, path_index);
    let mut cur = lambda.clone();
    while cur.size() > m {
        let meas = cotransition_measure(&cur).expect("nonempty");
        let weights: Vec<Rat> = meas.atoms().iter().map(|(_, w)| w.clone()).collect();
        let idx = draw_exact(&weights, &mut rng);
        let content = meas.atoms()[idx].0.to_integer();
        let content = i64::try_from(&content).expect("corner content fits i64");
        cur = cur.without_box_at(content);
    }
    Ok(cur)
}

/// Exact law of [`downward_chain`] from `lambda` to level `m`, by dynamic
/// programming over the intermediate levels; the oracle for the
/// branching-rule identity.
pub fn exact_downward_law(lambda: &Partition, m: u64) -> Vec<(Partition, Rat)> {
    let mut level: Vec<(Partition, Rat)> = vec![(lambda.clone(), Rat::one())];
    let mut size = lambda.size();
    while size > m {
        let mut next: std::collections::BTreeMap<Partition, Rat> = Default::default();
        for (mu, p) in &level {
            let meas = cotransition_measure(mu).expect("nonempty");
            for (loc, w) in meas.atoms() {
                let content = i64::try_from(&loc.to_integer()).expect("content fits");
                let smaller = mu.without_box_at(content);
                *next.entry(smaller).or_insert_with(Rat::zero) += p * w;
            }
        }
        level = next.into_iter().collect();
        size -= 1;
    }
    level
}

/// Number of boxes of `path.shapes[t]` on the diagonal of content `x`.
pub fn height_function(path: &GrowthPath, x: i64, t: usize) -> Result<u64, SamplerError> {
    path.height(x, t)
}

/// A sampling model bundled with its parameters, for ensemble generation.
#[derive(Clone, Debug)]
pub enum GrowthModel {
    Plancherel,
    Rsk,
    SchurWeyl { d: u64 },
    Thoma(ThomaParams),
    FixedShape(Partition),
    Gelfand,
}

impl GrowthModel {
    /// Samples one path of `steps` boxes on the stream `(seed, path_index)`.
    /// For `FixedShape`, `steps` is ignored (the shape fixes the length);
    /// for `Gelfand`, the final shape is drawn from the exact Gelfand
    /// distribution and the tableau is a uniform SYT of that shape.
    pub fn sample(&self, steps: usize, seed: u64, path_index: u64) -> GrowthPath {
        match self {
            GrowthModel::Plancherel => plancherel_growth_stream(steps, seed, path_index),
            GrowthModel::Rsk => rsk_growth_stream(steps, seed, path_index),
            GrowthModel::SchurWeyl { d } => schur_weyl_growth(steps, *d, seed, path_index),
            GrowthModel::Thoma(upsilon) => thoma_growth_stream(steps, upsilon, seed, path_index),
            GrowthModel::FixedShape(shape) => {
                let mut path =
                    hook_walk_syt_stream(shape, seed, path_index).expect("nonempty shape");
                path.model = ModelTag::FixedShape(shape.clone());
                path
            }
            GrowthModel::Gelfand => {
                let mut rng = rng_stream(seed, path_index);
                let rho = gelfand(steps as u64);
                let shape = sample_from_distribution(&rho, &mut rng);
                let mut path = if shape.is_empty() {
                    GrowthPath {
                        shapes: vec![Partition::empty()],
                        seed,
                        path_index,
                        model: ModelTag::Gelfand,
                    }
                } else {
                    // fresh substream for the tableau; cheap and keeps the
                    // shape draw independent of the walk
                    hook_walk_syt_stream(&shape, seed ^ 0x9e37_79b9_7f4a_7c15, path_index)
                        .expect("nonempty shape")
                };
                path.model = ModelTag::Gelfand;
                path
            }
        }
    }

    /// Samples an ensemble in parallel, one independent stream per path.
    pub fn sample_ensemble(&self, steps: usize, count: u64, seed: u64) -> Vec<GrowthPath> {
        (0..count)
            .into_par_iter()
            .map(|i| self.sample(steps, seed, i))
            .collect()
    }
}

/// Inverse-CDF draw from an exact distribution on partitions.
pub fn sample_from_distribution(rho: &Distribution, rng: &mut ChaCha8Rng) -> Partition {
    let r = rng.next_u64();
    let u = Rat::new(BigInt::from(r), BigInt::from(1u128 << 64));
    let mut acc = Rat::zero();
    let mut last = Partition::empty();
    for (lam, p) in rho.support() {
        acc += p;
        last = lam.clone();
        if u < acc {
            return last;
        }
    }
    last
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{dim_skew, dim_syt, enumerate_partitions};
    use crate::ratio;
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn determinism() {
        let a = plancherel_growth(50, 7);
        let b = plancherel_growth(50, 7);
        assert_eq!(a, b);
        let c = plancherel_growth_stream(50, 7, 1);
        assert_ne!(a.shapes, c.shapes);
        let d = plancherel_growth(50, 8);
        assert_ne!(a.shapes, d.shapes);
        assert_eq!(rsk_growth(40, 3), rsk_growth(40, 3));
        assert_eq!(
            hook_walk_syt(&p(&[4, 3, 1]), 11).unwrap(),
            hook_walk_syt(&p(&[4, 3, 1]), 11).unwrap()
        );
    }

    #[test]
    fn growth_is_a_chain() {
        let path = plancherel_growth(60, 42);
        assert_eq!(path.shapes.len(), 61);
        assert_eq!(path.shapes[1], p(&[1]));
        for (t, w) in path.shapes.windows(2).enumerate() {
            assert_eq!(w[0].size() as usize, t);
            assert!(w[1].contains(&w[0]));
            assert_eq!(w[1].size(), w[0].size() + 1);
        }
    }

    #[test]
    fn area_identity_on_samples() {
        for (i, path) in [
            plancherel_growth(200, 1),
            rsk_growth(200, 2),
            thoma_growth(
                200,
                &ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 4)]).unwrap(),
                3,
            ),
        ]
        .iter()
        .enumerate()
        {
            for t in 0..=path.steps() {
                let prof = path.shapes[t].profile();
                let (lo, hi) = prof.window();
                let total: u64 = (lo..=hi).map(|x| prof.height(x)).sum();
                assert_eq!(total, t as u64, "sampler {i} at t={t}");
            }
        }
        // bulk check at the full scale: a thousand paths, every time slice
        let paths = GrowthModel::Plancherel.sample_ensemble(200, 1000, 77);
        for path in &paths {
            for t in 0..=path.steps() {
                let prof = path.shapes[t].profile();
                let (lo, hi) = prof.window();
                let total: u64 = (lo..=hi).map(|x| prof.height(x)).sum();
                assert_eq!(total, t as u64);
            }
        }
    }

    #[test]
    fn rsk_monotone_words() {
        // decreasing keys always bump: a single column
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for x in (0..10u64).rev() {
            insert_key(&mut rows, x, false);
        }
        assert_eq!(rows_to_partition(&rows), p(&[1; 10]));
        // increasing keys never bump: a single row
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for x in 0..10u64 {
            insert_key(&mut rows, x, false);
        }
        assert_eq!(rows_to_partition(&rows), p(&[10]));
    }

    #[test]
    fn thoma_degenerate_alphabets() {
        // alpha = (1): all letters equal and weak, one row
        let row = ThomaParams::new(vec![Rat::one()], vec![]).unwrap();
        let path = thoma_growth(20, &row, 5);
        assert_eq!(path.final_shape(), &p(&[20]));
        // beta = (1): all letters equal and strict, one column
        let col = ThomaParams::new(vec![], vec![Rat::one()]).unwrap();
        let path = thoma_growth(20, &col, 5);
        assert_eq!(path.final_shape(), &p(&[1; 20]));
    }

    #[test]
    fn hook_walk_basics() {
        // single-row shape has a unique tableau
        let path = hook_walk_syt(&p(&[5]), 9).unwrap();
        for (t, shape) in path.shapes.iter().enumerate() {
            assert_eq!(shape, &p(&vec![t as u32; (t > 0) as usize]).clone());
        }
        assert_eq!(path.final_shape(), &p(&[5]));
        assert_eq!(
            hook_walk_syt(&Partition::empty(), 0),
            Err(SamplerError::EmptyShape)
        );
        // all paths end at the requested shape and are valid chains
        for i in 0..50u64 {
            let path = hook_walk_syt_stream(&p(&[3, 2]), 17, i).unwrap();
            assert_eq!(path.final_shape(), &p(&[3, 2]));
            for w in path.shapes.windows(2) {
                assert!(w[1].contains(&w[0]));
            }
        }
    }

    #[test]
    fn hook_walk_uniformity_quick() {
        // (2,2) has two tableaux; rough balance at small sample size
        // (the chi-square version runs in the acceptance suite)
        let mut counts = [0u32; 2];
        for i in 0..2000u64 {
            let path = hook_walk_syt_stream(&p(&[2, 2]), 23, i).unwrap();
            let first_row_second = path.shapes[2] == p(&[2]);
            counts[first_row_second as usize] += 1;
        }
        assert!(counts[0] > 800 && counts[1] > 800, "{counts:?}");
    }

    #[test]
    fn downward_chain_basics() {
        let lam = p(&[3, 2, 1]);
        assert_eq!(downward_chain(&lam, 6, 1).unwrap(), lam);
        assert!(downward_chain(&lam, 7, 1).is_err());
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..200u64 {
            let mu = downward_chain_stream(&p(&[2, 1]), 2, 5, i).unwrap();
            seen.insert(mu);
        }
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn downward_law_matches_branching_rule() {
        // exact composed law equals dim(lambda\mu) dim(mu) / dim(lambda)
        for n in 1..=6u64 {
            for lam in enumerate_partitions(n) {
                for m in 0..=n {
                    let law = exact_downward_law(&lam, m);
                    let total: Rat = law.iter().map(|(_, p)| p.clone()).sum();
                    assert_eq!(total, Rat::one());
                    for (mu, prob) in law {
                        let skew = dim_skew(&lam, &mu).unwrap();
                        let expected = Rat::new(
                            BigInt::from(skew * dim_syt(&mu)),
                            BigInt::from(dim_syt(&lam)),
                        );
                        assert_eq!(prob, expected, "{lam} -> {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn single_step_law_is_cotransition() {
        // one step of the downward chain has exactly the co-transition law
        for n in 1..=8u64 {
            for lam in enumerate_partitions(n) {
                let law = exact_downward_law(&lam, n - 1);
                let meas = cotransition_measure(&lam).unwrap();
                assert_eq!(law.len(), meas.atoms().len());
                for (loc, w) in meas.atoms() {
                    let content = i64::try_from(&loc.to_integer()).unwrap();
                    let smaller = lam.without_box_at(content);
                    let found = law.iter().find(|(mu, _)| mu == &smaller).unwrap();
                    assert_eq!(&found.1, w);
                }
            }
        }
    }

    #[test]
    fn height_function_examples() {
        let path = plancherel_growth(30, 99);
        assert_eq!(path.height(0, 0).unwrap(), 0);
        assert_eq!(path.height(5, 0).unwrap(), 0);
        assert!(path.height(0, 31).is_err());
        // fixed 13-box shape: diagonal 0 holds two boxes
        let lam = p(&[5, 3, 2, 2, 1]);
        assert_eq!(lam.profile().height(0), 2);
        // sum over diagonals is t
        for t in [0usize, 7, 19, 30] {
            let prof = path.shapes[t].profile();
            let (lo, hi) = prof.window();
            let total: u64 = (lo..=hi).map(|x| prof.height(x)).sum();
            assert_eq!(total, t as u64);
        }
    }

    #[test]
    fn schur_weyl_single_letter() {
        let path = schur_weyl_growth(15, 1, 4, 0);
        assert_eq!(path.final_shape(), &p(&[15]));
    }

    #[test]
    fn gelfand_model_marginal_quick() {
        // the Gelfand model draws final shapes with probability dim / I_n
        let model = GrowthModel::Gelfand;
        let n = 4u64;
        let trials = 4000u64;
        let mut counts: std::collections::BTreeMap<Partition, u64> = Default::default();
        for i in 0..trials {
            let path = model.sample(n as usize, 31, i);
            *counts.entry(path.final_shape().clone()).or_insert(0) += 1;
        }
        let rho = gelfand(n);
        for (lam, prob) in rho.support() {
            let observed = *counts.get(lam).unwrap_or(&0) as f64 / trials as f64;
            let expect = prob.to_f64().unwrap();
            assert!(
                (observed - expect).abs() < 0.05,
                "{lam}: {observed} vs {expect}"
            );
        }
    }

    #[test]
    fn ensemble_parallel_matches_serial() {
        let model = GrowthModel::Plancherel;
        let ensemble = model.sample_ensemble(25, 8, 13);
        for (i, path) in ensemble.iter().enumerate() {
            assert_eq!(path, &plancherel_growth_stream(25, 13, i as u64));
        }
    }

    #[test]
    fn csv_schema() {
        let path = plancherel_growth(3, 1);
        let csv = path.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,parts");
        assert_eq!(lines[1], "0,");
        assert!(lines[2] == "1,1");
        let hf = path.height_field_csv();
        assert!(hf.starts_with("x,t,H\n"));
    }

    #[test]
    fn sample_from_exact_distribution() {
        let rho = gelfand(3);
        let mut rng = rng_stream(2, 0);
        let mut counts: std::collections::BTreeMap<Partition, u64> = Default::default();
        for _ in 0..3000 {
            *counts.entry(sample_from_distribution(&rho, &mut rng)).or_insert(0) += 1;
        }
        // dims 1, 2, 1 over I_3 = 4
        let freq21 = *counts.get(&p(&[2, 1])).unwrap() as f64 / 3000.0;
        assert!((freq21 - 0.5).abs() < 0.05);
    }

    #[test]
    fn dims_count_tableaux() {
        // hook walk explores every SYT of (3,2): 5 distinct paths
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..3000u64 {
            let path = hook_walk_syt_stream(&p(&[3, 2]), 3, i).unwrap();
            seen.insert(path.shapes.clone());
        }
        assert_eq!(BigUint::from(seen.len()), dim_syt(&p(&[3, 2])));
    }
}
