//! Sparse exact arithmetic in the rational group algebra of the symmetric
//! group.
//!
//! Permutations are stored dense in one-line notation on `{1..n}`. Products
//! compose left to right: `(a * b)(x) = b(a(x))`, so a word of transpositions
//! multiplies out in reading order. Conjugacy classes are cycle types with
//! fixed points dropped, matching the indexing of central elements by
//! partitions with all parts >= 2.
//!
//! Element sizes grow factorially with `n`; constructors guard `n` behind a
//! configurable limit (default 8).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::Partition;
use crate::Rat;

/// Default guard on the symmetric group degree.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("degree {0} exceeds the configured limit {1}")]
    DegreeTooLarge(usize, usize),
    #[error("elements live in different group algebras ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("restriction level m={m} exceeds n={n}")]
    BadRestriction { m: usize, n: usize },
    #[error("permutation supports overlap")]
    OverlappingSupports,
    #[error("sigma_lambda requires all parts >= 2, got {0:?}")]
    BadCycleType(Vec<u32>),
}

/// A permutation of `{1..n}` in one-line notation (`images[i]` is the
/// 0-based image of `i+1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images_one_based(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &im in &images {
            assert!(
                im >= 1 && im <= images.len() && !seen[im - 1],
                "not a bijection"
            );
            seen[im - 1] = true;
        }
        Perm {
            images: images.iter().map(|&im| (im - 1) as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// Left-to-right composition: apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.n()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u8;
        }
        Perm { images }
    }

    /// The transposition `(a b)` in `S_n` (1-based; `a != b`).
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(a - 1, b - 1);
        Perm { images }
    }

    /// A single cycle `(c_1 c_2 ... c_k)` in `S_n`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Perm {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for w in cycle.windows(2) {
            images[w[0] - 1] = (w[1] - 1) as u8;
        }
        if cycle.len() > 1 {
            images[cycle[cycle.len() - 1] - 1] = (cycle[0] - 1) as u8;
        }
        Perm { images }
    }

    /// Cycle type with fixed points dropped.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] as usize;
                len += 1;
            }
            if len >= 2 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens)
    }

    /// Cayley length: minimal number of transpositions, `n - #cycles`.
    pub fn cayley_length(&self) -> u64 {
        self.cycle_type().colength()
    }

    /// Points moved by the permutation (1-based).
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&x| self.apply(x) != x).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &im)| im as usize == i)
    }

    /// One-line images, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }
}

/// A sparse element of the rational group algebra of `S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Perm, Rat>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Perm::identity(n), Rat::one());
        AlgebraElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Perm) -> Rat {
        self.terms.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Perm, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Conjugates the element by `g`: each term `p` becomes `g^{-1} p g`.
    pub fn conjugate(&self, g: &Perm) -> AlgebraElement {
        let ginv = g.inverse();
        let mut out = AlgebraElement::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(ginv.then(p).then(g), c.clone());
        }
        out
    }

    /// Debug dump: a JSON list of `[one-line permutation, num, den]` triples.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                serde_json::json!([p.one_line(), c.numer().to_string(), c.denom().to_string()])
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

fn guard(n: usize, max_n: usize) -> Result<(), AlgebraError> {
    if n > max_n {
        Err(AlgebraError::DegreeTooLarge(n, max_n))
    } else {
        Ok(())
    }
}

/// Convolution product, exact. Errors on mismatched degrees.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    if a.n != b.n {
        return Err(AlgebraError::DegreeMismatch(a.n, b.n));
    }
    let mut out = AlgebraElement::zero(a.n);
    for (p, cp) in &a.terms {
        for (q, cq) in &b.terms {
            out.add_term(p.then(q), cp * cq);
        }
    }
    Ok(out)
}

/// The class sum `Sigma_lambda` restricted to indices `{1..m}`, as an element
/// of `Q[S_n]`: the sum over all tuples of distinct indices in `{1..m}`
/// arranged as cycles of lengths `lambda_i`. Zero when `|lambda| > m`.
pub fn sigma_lambda(
    lambda: &Partition,
    n: usize,
    m: usize,
) -> Result<AlgebraElement, AlgebraError> {
    sigma_lambda_with_limit(lambda, n, m, DEFAULT_MAX_N)
}

pub fn sigma_lambda_with_limit(
    lambda: &Partition,
    n: usize,
    m: usize,
    max_n: usize,
) -> Result<AlgebraElement, AlgebraError> {
    guard(n, max_n)?;
    if m > n {
        return Err(AlgebraError::BadRestriction { m, n });
    }
    if lambda.parts().iter().any(|&p| p < 2) {
        return Err(AlgebraError::BadCycleType(lambda.parts().to_vec()));
    }
    let total = lambda.size() as usize;
    let mut out = AlgebraElement::zero(n);
    if total > m {
        return Ok(out);
    }
    let mut tuple = Vec::with_capacity(total);
    let mut used = vec![false; m + 1];
    fn rec(
        lambda: &[u32],
        total: usize,
        m: usize,
        n: usize,
        tuple: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut AlgebraElement,
    ) {
        if tuple.len() == total {
            let mut perm = Perm::identity(n);
            let mut start = 0usize;
            for &len in lambda {
                perm = perm.then(&Perm::cycle(n, &tuple[start..start + len as usize]));
                start += len as usize;
            }
            out.add_term(perm, Rat::one());
            return;
        }
        for i in 1..=m {
            if !used[i] {
                used[i] = true;
                tuple.push(i);
                rec(lambda, total, m, n, tuple, used, out);
                tuple.pop();
                used[i] = false;
            }
        }
    }
    rec(lambda.parts(), total, m, n, &mut tuple, &mut used, &mut out);
    Ok(out)
}

/// The trace operator element `D_k` restricted to level `m`, in `Q[S_n]`:
///
/// `(1/(m+1)) * sum over (i_1..i_k) in {0..m}` with cyclically adjacent
/// entries distinct, of `(i_1 i_2)(i_2 i_3)...(i_k i_1)`, where any
/// transposition touching the sentinel index 0 is the identity.
pub fn d_k(k: usize, n: usize, m: usize) -> Result<AlgebraElement, AlgebraError> {
    d_k_with_limit(k, n, m, DEFAULT_MAX_N)
}

pub fn d_k_with_limit(
    k: usize,
    n: usize,
    m: usize,
    max_n: usize,
) -> Result<AlgebraElement, AlgebraError> {
    guard(n, max_n)?;
    if m > n {
        return Err(AlgebraError::BadRestriction { m, n });
    }
    let mut out = AlgebraElement::zero(n);
    if k == 0 {
        // (m+1) empty tuples, each the identity, divided by m+1
        return Ok(AlgebraElement::identity(n));
    }
    fn emit(tuple: &[usize], n: usize, out: &mut AlgebraElement) {
        let k = tuple.len();
        let mut perm = Perm::identity(n);
        for j in 0..k {
            let a = tuple[j];
            let b = tuple[(j + 1) % k];
            if a != 0 && b != 0 {
                perm = perm.then(&Perm::transposition(n, a, b));
            }
        }
        out.add_term(perm, Rat::one());
    }
    fn rec(
        pos: usize,
        k: usize,
        m: usize,
        n: usize,
        tuple: &mut Vec<usize>,
        out: &mut AlgebraElement,
    ) {
        if pos == k {
            if tuple[k - 1] != tuple[0] {
                emit(tuple, n, out);
            }
            return;
        }
        for v in 0..=m {
            if pos > 0 && tuple[pos - 1] == v {
                continue;
            }
            tuple[pos] = v;
            rec(pos + 1, k, m, n, tuple, out);
        }
    }
    let mut tuple = vec![0usize; k];
    rec(0, k, m, n, &mut tuple, &mut out);
    let inv = Rat::new(1.into(), (m as i64 + 1).into());
    Ok(out.scale(&inv))
}

/// Expands the Jucys–Murphy power `X_{n+1}^k` in `Q[S_{n+1}]` and projects
/// onto `Q[S_n]` by killing every permutation that moves `n+1`.
pub fn jucys_murphy_power_expectation(k: usize, n: usize) -> Result<AlgebraElement, AlgebraError> {
    jucys_murphy_power_expectation_with_limit(k, n, DEFAULT_MAX_N)
}

pub fn jucys_murphy_power_expectation_with_limit(
    k: usize,
    n: usize,
    max_n: usize,
) -> Result<AlgebraElement, AlgebraError> {
    guard(n + 1, max_n + 1)?;
    let big = n + 1;
    let x = {
        let mut e = AlgebraElement::zero(big);
        for i in 1..=n {
            e.add_term(Perm::transposition(big, i, big), Rat::one());
        }
        e
    };
    let mut acc = AlgebraElement::identity(big);
    for _ in 0..k {
        acc = multiply(&acc, &x)?;
    }
    let mut out = AlgebraElement::zero(n);
    for (p, c) in acc.terms() {
        if p.apply(big) == big {
            let images: Vec<usize> = (1..=n).map(|x| p.apply(x)).collect();
            out.add_term(Perm::from_images_one_based(images), c.clone());
        }
    }
    Ok(out)
}

/// Decomposes an element by conjugacy class: for each cycle type (fixed
/// points dropped), the sum of the coefficients over that class. This is the
/// coefficient functional `N_lambda[x]`.
pub fn class_decompose(a: &AlgebraElement) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (p, c) in a.terms() {
        let entry = out.entry(p.cycle_type()).or_insert_with(Rat::zero);
        *entry += c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Whether an element is central: invariant under conjugation by the
/// adjacent transpositions (which generate `S_n`).
pub fn is_central(a: &AlgebraElement) -> bool {
    let n = a.n();
    (1..n).all(|i| {
        let t = Perm::transposition(n, i, i + 1);
        a.conjugate(&t) == *a
    })
}

/// Permutation-cumulant of actual group elements with pairwise disjoint
/// supports, evaluated through a class functional. Thin wrapper over
/// [`crate::cumulants::permutation_cumulant`].
pub fn perm_cumulant_of_perms<F>(class_fn: F, perms: &[Perm]) -> Result<Rat, AlgebraError>
where
    F: Fn(&Partition) -> Rat,
{
    let mut seen = std::collections::BTreeSet::new();
    for p in perms {
        for x in p.support() {
            if !seen.insert(x) {
                return Err(AlgebraError::OverlappingSupports);
            }
        }
    }
    let classes: Vec<Partition> = perms.iter().map(|p| p.cycle_type()).collect();
    Ok(crate::cumulants::permutation_cumulant(class_fn, &classes))
}
