//! The set-partition lattice, Möbius-type cumulant sums, non-crossing
//! partitions and the Kreweras complement.
//!
//! Ground sets are `{1, ..., r}` and blocks are kept sorted, with blocks
//! ordered by their minimum element.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{falling_factorial, falling_factorial_int, Partition};
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("set partition has a crossing")]
    Crossing,
    #[error("generalized falling factorial spec invalid: {0}")]
    BadSpec(String),
}

/// A partition of `{1, ..., r}` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    r: usize,
}

impl SetPartition {
    /// Builds a set partition from blocks; panics unless the blocks are
    /// disjoint, nonempty and cover `{1, ..., r}` for some `r`.
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        let r = seen.len();
        assert!(
            seen == (1..=r).collect::<Vec<_>>(),
            "blocks must partition {{1..r}}: {blocks:?}"
        );
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        SetPartition { blocks, r }
    }

    /// The minimal partition (all singletons) of `{1..r}`.
    pub fn singletons(r: usize) -> Self {
        SetPartition::new((1..=r).map(|i| vec![i]).collect())
    }

    /// The maximal partition (one block) of `{1..r}`.
    pub fn full(r: usize) -> Self {
        SetPartition::new(vec![(1..=r).collect()])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> usize {
        self.r
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x` (1-based element).
    pub fn block_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element out of range")
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of(x) == self.block_of(y)
    }

    /// Refinement order: `self <= other` when every block of `self` is
    /// contained in a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        assert_eq!(self.r, other.r);
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| other.same_block(b[0], x)))
    }

    /// Block sizes as a partition (the *type* of the set partition).
    pub fn shape(&self) -> Partition {
        let mut sizes: Vec<u32> = self.blocks.iter().map(|b| b.len() as u32).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(sizes)
    }

    /// Interval-crossing scan: blocks `a < b < a < b` forbidden.
    pub fn is_noncrossing(&self) -> bool {
        for (i, bi) in self.blocks.iter().enumerate() {
            for bj in self.blocks.iter().skip(i + 1) {
                for w in bi.windows(2) {
                    let inside = bj.iter().any(|&x| w[0] < x && x < w[1]);
                    let outside = bj.iter().any(|&x| x < w[0] || x > w[1]);
                    if inside && outside {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All set partitions of `{1, ..., r}` via restricted growth strings;
/// `Bell(r)` of them.
pub fn enumerate_set_partitions(r: usize) -> Vec<SetPartition> {
    assert!(r >= 1);
    let mut out = Vec::new();
    let mut rgs = vec![0usize; r];
    fn rec(i: usize, maxv: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        let r = rgs.len();
        if i == r {
            let nb = maxv + 1;
            let mut blocks = vec![Vec::new(); nb];
            for (pos, &b) in rgs.iter().enumerate() {
                blocks[b].push(pos + 1);
            }
            out.push(SetPartition::new(blocks));
            return;
        }
        for v in 0..=maxv + 1 {
            rgs[i] = v;
            rec(i + 1, maxv.max(v), rgs, out);
        }
    }
    rgs[0] = 0;
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Greatest lower bound in the refinement order: blocks are the nonempty
/// pairwise intersections.
pub fn meet(a: &SetPartition, b: &SetPartition) -> SetPartition {
    assert_eq!(a.ground_size(), b.ground_size());
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for x in 1..=a.ground_size() {
        blocks
            .entry((a.block_of(x), b.block_of(x)))
            .or_default()
            .push(x);
    }
    SetPartition::new(blocks.into_values().collect())
}

/// Least upper bound in the refinement order, by merging overlapping blocks.
pub fn join(a: &SetPartition, b: &SetPartition) -> SetPartition {
    assert_eq!(a.ground_size(), b.ground_size());
    let r = a.ground_size();
    let mut parent: Vec<usize> = (0..=r).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for p in [a, b] {
        for blk in p.blocks() {
            for w in blk.windows(2) {
                let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 1..=r {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x);
    }
    SetPartition::new(groups.into_values().collect())
}

/// The r-th order classical joint cumulant from a moment oracle:
/// `sum_pi (-1)^{|pi|-1} (|pi|-1)! prod_B oracle(B)`, where `oracle(B)` is
/// the joint moment of the variables indexed by the block `B`.
pub fn classical_cumulant<F>(oracle: F, r: usize) -> Rat
where
    F: Fn(&[usize]) -> Rat,
{
    let mut total = Rat::zero();
    for pi in enumerate_set_partitions(r) {
        let mut term = mobius_weight(pi.num_blocks());
        for block in pi.blocks() {
            term *= oracle(block);
        }
        total += term;
    }
    total
}

/// `(-1)^{m-1} (m-1)!` as a rational.
pub fn mobius_weight(m: usize) -> Rat {
    let mut w = BigInt::one();
    for i in 1..m {
        w *= BigInt::from(i);
    }
    if m % 2 == 0 {
        w = -w;
    }
    Rat::from(w)
}

/// Inverse of [`classical_cumulant`]: reconstructs the r-th joint moment
/// from a cumulant oracle, `sum_pi prod_B kappa(B)`.
pub fn moment_from_cumulants<F>(kappa: F, r: usize) -> Rat
where
    F: Fn(&[usize]) -> Rat,
{
    let mut total = Rat::zero();
    for pi in enumerate_set_partitions(r) {
        let mut term = Rat::one();
        for block in pi.blocks() {
            term *= kappa(block);
        }
        total += term;
    }
    total
}

/// Permutation-cumulant of disjoint permutations, each given by its cycle
/// type (fixed points dropped). `class_fn` must evaluate the central
/// functional on a conjugacy class; the product over a block of disjoint
/// permutations has the multiset union of their cycle types.
pub fn permutation_cumulant<F>(class_fn: F, sigmas: &[Partition]) -> Rat
where
    F: Fn(&Partition) -> Rat,
{
    classical_cumulant(
        |block| class_fn(&union_classes(sigmas, block)),
        sigmas.len(),
    )
}

/// Multiset union of the cycle types indexed by `block` (1-based).
pub fn union_classes(sigmas: &[Partition], block: &[usize]) -> Partition {
    let mut parts: Vec<u32> = Vec::new();
    for &j in block {
        parts.extend_from_slice(sigmas[j - 1].parts());
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// The `n`-falling cumulant: a permutation-cumulant whose block terms carry
/// generalized falling-factorial weights
/// `(n_vec ff sum_{j in B} k_vec^j) * M(prod_{j in B} sigma_j)`.
pub fn falling_cumulant<F>(
    class_fn: F,
    sigmas: &[Partition],
    k_vecs: &[Vec<u64>],
    n_vec: &[u64],
) -> Rat
where
    F: Fn(&Partition) -> Rat,
{
    assert_eq!(sigmas.len(), k_vecs.len());
    let r = sigmas.len();
    let mut total = Rat::zero();
    for pi in enumerate_set_partitions(r) {
        let mut term = mobius_weight(pi.num_blocks());
        for block in pi.blocks() {
            let mut ks = vec![0u64; n_vec.len()];
            for &j in block {
                for (i, &k) in k_vecs[j - 1].iter().enumerate() {
                    ks[i] += k;
                }
            }
            let spec = GenFallingSpec::new(n_vec.to_vec(), ks).expect("valid spec");
            term *= Rat::from(generalized_ff(&spec));
            term *= class_fn(&union_classes(sigmas, block));
        }
        total += term;
    }
    total
}

/// Specification of a generalized falling factorial `(n_vec ff k_vec)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFallingSpec {
    n_vec: Vec<u64>,
    k_vec: Vec<u64>,
}

impl GenFallingSpec {
    pub fn new(n_vec: Vec<u64>, k_vec: Vec<u64>) -> Result<Self, LatticeError> {
        if n_vec.len() != k_vec.len() {
            return Err(LatticeError::BadSpec("length mismatch".into()));
        }
        if n_vec.windows(2).any(|w| w[0] > w[1]) {
            return Err(LatticeError::BadSpec("n_vec must be nondecreasing".into()));
        }
        Ok(GenFallingSpec { n_vec, k_vec })
    }
}

/// `(n_vec ff k_vec) = prod_i (n_i - k_1 - ... - k_{i-1} ff k_i)`.
pub fn generalized_ff(spec: &GenFallingSpec) -> BigInt {
    let mut acc = BigInt::one();
    let mut used = 0u64;
    for (i, &k) in spec.k_vec.iter().enumerate() {
        acc *= falling_factorial_int(spec.n_vec[i] as i64 - used as i64, k);
        used += k;
    }
    acc
}

/// Kreweras complement of a non-crossing partition of `{1..k}`: the maximal
/// non-crossing `pi` whose odd embedding together with the even embedding of
/// `theta` is non-crossing on `2k` points.
///
/// The candidate is built from the interleaving picture (two odd points can
/// be merged when no even block separates them) and then certified against
/// the definition: the union must be non-crossing and no two blocks of the
/// result can be merged without breaking that.
pub fn kreweras_complement(theta: &SetPartition) -> Result<SetPartition, LatticeError> {
    if !theta.is_noncrossing() {
        return Err(LatticeError::Crossing);
    }
    let k = theta.ground_size();
    // interleave on 1..2k: theta's point i sits at 2i-1, the complement's
    // point i sits at 2i, directly after it
    let theta_blocks: Vec<Vec<usize>> = theta
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| 2 * x - 1).collect())
        .collect();
    let separated = |a: usize, b: usize| -> bool {
        theta_blocks.iter().any(|blk| {
            let inside = blk.iter().any(|&x| a < x && x < b);
            let outside = blk.iter().any(|&x| x < a || x > b);
            inside && outside
        })
    };
    let mut parent: Vec<usize> = (0..=k).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for i in 1..=k {
        for j in i + 1..=k {
            if !separated(2 * i, 2 * j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 1..=k {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x);
    }
    let candidate = SetPartition::new(groups.into_values().collect());

    // certify: union non-crossing, and maximal among such
    assert!(
        union_noncrossing(&candidate, theta),
        "kreweras candidate not compatible for {theta:?}"
    );
    for i in 0..candidate.num_blocks() {
        for j in i + 1..candidate.num_blocks() {
            let mut merged = candidate.blocks().to_vec();
            let bj = merged.remove(j);
            merged[i].extend(bj);
            let coarser = SetPartition::new(merged);
            assert!(
                !(coarser.is_noncrossing() && union_noncrossing(&coarser, theta)),
                "kreweras candidate not maximal for {theta:?}"
            );
        }
    }
    Ok(candidate)
}

/// Whether the interleaved embedding of `pi` (points at 2i) together with
/// `theta` (points at 2i-1) is non-crossing on `2k` points.
fn union_noncrossing(pi: &SetPartition, theta: &SetPartition) -> bool {
    let mut blocks: Vec<Vec<usize>> = pi
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| 2 * x).collect())
        .collect();
    blocks.extend(
        theta
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| 2 * x - 1).collect::<Vec<_>>()),
    );
    SetPartition::new(blocks).is_noncrossing()
}

/// Number of non-crossing partitions of `{1..|mu|}` whose block sizes are
/// the parts of `mu`: `(|mu| ff h-1) / (s_1! s_2! ... )` with `h` blocks and
/// `s_i` blocks of size `i`.
pub fn nc_count(mu: &Partition) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    let h = mu.length() as u64;
    let mut den = BigInt::one();
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (_, s) in mult {
        for i in 2..=s {
            den *= BigInt::from(i);
        }
    }
    falling_factorial_int(mu.size() as i64, h - 1) / den
}

/// A set partition of `{1..k}` is admissible when no block contains two
/// cyclically adjacent points.
pub fn is_admissible(pi: &SetPartition) -> bool {
    let k = pi.ground_size();
    if k == 1 {
        return true;
    }
    (1..=k).all(|x| {
        let next = if x == k { 1 } else { x + 1 };
        x == next || !pi.same_block(x, next)
    })
}

/// All non-crossing partitions of `{1..k}`.
pub fn enumerate_noncrossing(k: usize) -> Vec<SetPartition> {
    enumerate_set_partitions(k)
        .into_iter()
        .filter(|p| p.is_noncrossing())
        .collect()
}

/// Checks that the Kreweras complement restricts to a bijection from the
/// admissible non-crossing partitions of `k` onto the non-crossing
/// partitions with all blocks of size >= 2.
pub fn admissible_bijection_check(k: usize) -> bool {
    let nc = enumerate_noncrossing(k);
    let mut images = Vec::new();
    for pi in nc.iter().filter(|p| is_admissible(p)) {
        images.push(kreweras_complement(pi).expect("non-crossing"));
    }
    images.sort();
    let before = images.len();
    images.dedup();
    if images.len() != before {
        return false;
    }
    let mut targets: Vec<SetPartition> = nc
        .into_iter()
        .filter(|p| p.blocks().iter().all(|b| b.len() >= 2))
        .collect();
    targets.sort();
    images == targets
}

/// `Disj(pi, m)`: number of set partitions `eta` of the same ground set with
/// `pi /\ eta = 0-hat` and `|eta| = m`.
pub fn disj_count(pi: &SetPartition, m: usize) -> u64 {
    let r = pi.ground_size();
    let zero = SetPartition::singletons(r);
    enumerate_set_partitions(r)
        .into_iter()
        .filter(|eta| eta.num_blocks() == m && meet(pi, eta) == zero)
        .count() as u64
}

/// Verifies the falling-factorial expansion
/// `(x ff lam_1) ... (x ff lam_r) = sum_m Disj(pi_lam, m) (x ff m)`
/// as an exact polynomial identity in `x`.
pub fn rosas_identity_check(lambda: &Partition) -> bool {
    let s = lambda.size() as usize;
    if s == 0 {
        return true;
    }
    let lhs = lambda.parts().iter().fold(vec![Rat::one()], |acc, &p| {
        poly_mul(&acc, &falling_factorial_poly(p as u64))
    });
    let pi = interval_partition(lambda);
    let mut rhs = vec![Rat::zero(); 1];
    for m in 1..=s {
        let d = disj_count(&pi, m);
        if d > 0 {
            let term = poly_scale(&falling_factorial_poly(m as u64), &rat(d as i64));
            rhs = poly_add(&rhs, &term);
        }
    }
    poly_trim(&lhs) == poly_trim(&rhs)
}

/// The alternating-sum corollary: for partitions with at least two parts,
/// `sum_m (-1)^{m-1} (m-1)! Disj(pi_lam, m) = 0`.
pub fn rosas_vanishing_check(lambda: &Partition) -> bool {
    let s = lambda.size() as usize;
    let pi = interval_partition(lambda);
    let mut total = Rat::zero();
    for m in 1..=s {
        total += mobius_weight(m) * rat(disj_count(&pi, m) as i64);
    }
    total.is_zero()
}

/// The interval set partition `pi_lambda` with consecutive blocks of sizes
/// `lambda_1, lambda_2, ...`.
pub fn interval_partition(lambda: &Partition) -> SetPartition {
    let mut blocks = Vec::new();
    let mut next = 1usize;
    for &p in lambda.parts() {
        blocks.push((next..next + p as usize).collect());
        next += p as usize;
    }
    SetPartition::new(blocks)
}

// dense polynomial helpers over Rat, ascending powers

fn falling_factorial_poly(k: u64) -> Vec<Rat> {
    // x (x-1) ... (x-k+1)
    let mut acc = vec![Rat::one()];
    for i in 0..k {
        acc = poly_mul(&acc, &[rat(-(i as i64)), Rat::one()]);
    }
    acc
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            x + y
        })
        .collect()
}

fn poly_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

fn poly_trim(a: &[Rat]) -> Vec<Rat> {
    let mut v = a.to_vec();
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Checks Malyshev / Leonov–Shiryaev: for permutations made of disjoint
/// cycles grouped by `grouping`, the cumulant of the grouped products
/// expands over set partitions whose join with the grouping is full:
/// `kappa_r(products) = sum_{pi v pi_lam = 1-hat} prod_B kappa(cycles in B)`.
pub fn products_cumulant_check<F>(class_fn: F, cycles: &[Partition], grouping: &Partition) -> bool
where
    F: Fn(&Partition) -> Rat,
{
    let total: u64 = grouping.size();
    assert_eq!(total as usize, cycles.len());
    let groups: Vec<Vec<usize>> = {
        let mut gs = Vec::new();
        let mut next = 1usize;
        for &g in grouping.parts() {
            gs.push((next..next + g as usize).collect());
            next += g as usize;
        }
        gs
    };
    let products: Vec<Partition> = groups.iter().map(|g| union_classes(cycles, g)).collect();
    let lhs = permutation_cumulant(&class_fn, &products);
    let pi_lambda = interval_partition(grouping);
    let one = SetPartition::full(total as usize);
    let mut rhs = Rat::zero();
    for pi in enumerate_set_partitions(total as usize) {
        if join(&pi, &pi_lambda) != one {
            continue;
        }
        let mut term = Rat::one();
        for block in pi.blocks() {
            let sub: Vec<Partition> = block.iter().map(|&j| cycles[j - 1].clone()).collect();
            term *= permutation_cumulant(&class_fn, &sub);
        }
        rhs += term;
    }
    (lhs - rhs).is_zero()
}

/// Plain rational falling factorial, re-exported for convenience.
pub fn ff(x: &Rat, k: u64) -> Rat {
    falling_factorial(x, k)
}
