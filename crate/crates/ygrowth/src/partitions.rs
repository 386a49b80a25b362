//! Integer partitions and their Russian-notation geometry.
//!
//! A partition is stored as its weakly decreasing list of positive parts.
//! Cells are addressed by 1-based (row, column) pairs and the *content* of a
//! cell is `column - row`; diagonals of the Young diagram are indexed by
//! content throughout the crate.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidParts(Vec<u32>),
    #[error("rem_k requires all parts >= 2, got {0:?}")]
    RemPartTooSmall(Vec<u32>),
    #[error("rem_k requires |mu| = k, got |mu| = {size} and k = {k}")]
    RemSizeMismatch { size: u64, k: u64 },
    #[error("skew shape requires mu contained in lambda")]
    NotContained,
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, panicking on invalid input. Use [`Partition::try_new`]
    /// for data coming from the outside world.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::InvalidParts(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `l(lambda)`, the number of rows.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `|lambda| - l(lambda)`; equals the Cayley length of any permutation
    /// with this cycle type.
    pub fn colength(&self) -> u64 {
        self.size() - self.length() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length at 1-based index `row`; 0 beyond the last row.
    pub fn row(&self, row: usize) -> u32 {
        if row >= 1 {
            self.parts.get(row - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.length()).all(|i| self.row(i) >= other.row(i))
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells as 1-based (row, column) pairs, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Hook length of the cell `(row, col)` (1-based).
    pub fn hook_len(&self, row: usize, col: usize) -> u32 {
        let arm = self.row(row) - col as u32;
        let leg = self.parts[row..]
            .iter()
            .take_while(|&&p| p as usize >= col)
            .count() as u32;
        arm + leg + 1
    }

    /// Adds a box at the addable corner with the given content.
    /// Panics if there is no such corner.
    pub fn with_box_at(&self, content: i64) -> Partition {
        let mut parts = self.parts.clone();
        // content x is addable in row r = lambda_r - r ... solve r from x = (lambda_r + 1) - r
        for r in 1..=self.length() + 1 {
            let new_col = self.row(r) as i64 + 1;
            if new_col - r as i64 == content && (r == 1 || self.row(r - 1) as i64 >= new_col) {
                if r <= parts.len() {
                    parts[r - 1] += 1;
                } else {
                    parts.push(1);
                }
                return Partition { parts };
            }
        }
        panic!("no addable corner with content {content}");
    }

    /// Removes the box at the removable corner with the given content.
    /// Panics if there is no such corner.
    pub fn without_box_at(&self, content: i64) -> Partition {
        let mut parts = self.parts.clone();
        for r in 1..=self.length() {
            let col = self.row(r) as i64;
            if col - r as i64 == content && self.row(r + 1) < self.row(r) {
                parts[r - 1] -= 1;
                if parts[r - 1] == 0 {
                    parts.pop();
                }
                return Partition { parts };
            }
        }
        panic!("no removable corner with content {content}");
    }

    pub fn corners(&self) -> CornerData {
        corners(self)
    }

    pub fn profile(&self) -> Profile {
        Profile::of(self)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::try_new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Contents of addable corners (minima) and removable corners (maxima) of a
/// diagram in Russian notation. The two lists strictly interlace:
/// `x_1 < y_1 < x_2 < ... < y_{m-1} < x_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerData {
    pub minima: Vec<i64>,
    pub maxima: Vec<i64>,
}

/// Addable-corner contents (minima) and removable-corner contents (maxima).
pub fn corners(lambda: &Partition) -> CornerData {
    let l = lambda.length();
    let mut minima = Vec::new();
    let mut maxima = Vec::new();
    // Walk rows top to bottom; contents decrease.
    for r in 1..=l + 1 {
        // addable corner in row r: column lambda_r + 1, needs previous row longer
        let col = lambda.row(r) as i64 + 1;
        if r == 1 || lambda.row(r - 1) as i64 >= col {
            minima.push(col - r as i64);
        }
        // removable corner in row r: column lambda_r, needs next row shorter
        if r <= l && lambda.row(r + 1) < lambda.row(r) {
            maxima.push(lambda.row(r) as i64 - r as i64);
        }
    }
    minima.reverse();
    maxima.reverse();
    CornerData { minima, maxima }
}

/// Number of standard Young tableaux of shape `lambda`, via the hook length
/// formula over exact big integers. `dim_syt(empty) = 1`.
pub fn dim_syt(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut num = BigUint::one();
    for k in 1..=n {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for (r, c) in lambda.cells() {
        den *= BigUint::from(lambda.hook_len(r, c));
    }
    num / den
}

/// `Rem_k`: deletes all rows of length 2, then the first column of what
/// remains. Defined on partitions of `k` with all parts >= 2.
pub fn rem_k(mu: &Partition, k: u64) -> Result<Partition, PartitionError> {
    if mu.parts().iter().any(|&p| p < 2) {
        return Err(PartitionError::RemPartTooSmall(mu.parts().to_vec()));
    }
    if mu.size() != k {
        return Err(PartitionError::RemSizeMismatch { size: mu.size(), k });
    }
    let parts = mu
        .parts()
        .iter()
        .filter(|&&p| p > 2)
        .map(|&p| p - 1)
        .collect();
    Ok(Partition { parts })
}

/// Whether some `mu` with all parts >= 2 and `|mu| = k` maps to `lambda`
/// under [`rem_k`]: happens exactly when `k = |lambda| + l(lambda) + 2j`
/// for some `j >= 0`.
pub fn rem_preimage_exists(lambda: &Partition, k: u64) -> bool {
    let base = lambda.size() + lambda.length() as u64;
    k >= base && (k - base) % 2 == 0
}

/// The unique preimage of `lambda` under [`rem_k`], when it exists: add the
/// first column back and pad with rows of length 2.
pub fn rem_k_preimage(lambda: &Partition, k: u64) -> Option<Partition> {
    if !rem_preimage_exists(lambda, k) {
        return None;
    }
    let j = (k - lambda.size() - lambda.length() as u64) / 2;
    let mut parts: Vec<u32> = lambda.parts().iter().map(|&p| p + 1).collect();
    parts.extend(std::iter::repeat(2).take(j as usize));
    Some(Partition { parts })
}

/// Number of standard Young tableaux of skew shape `lambda \ mu`, via the
/// Aitken determinant `|lambda/mu|! det[ 1/(lambda_i - mu_j - i + j)! ]`.
pub fn dim_skew(lambda: &Partition, mu: &Partition) -> Result<BigUint, PartitionError> {
    if !lambda.contains(mu) {
        return Err(PartitionError::NotContained);
    }
    let l = lambda.length();
    if l == 0 {
        return Ok(BigUint::one());
    }
    let n = lambda.size() - mu.size();
    let mut mat = vec![vec![BigRational::zero(); l]; l];
    for i in 1..=l {
        for j in 1..=l {
            let e = lambda.row(i) as i64 - mu.row(j) as i64 - i as i64 + j as i64;
            if e >= 0 {
                mat[i - 1][j - 1] = BigRational::new(BigInt::one(), factorial(e as u64));
            }
        }
    }
    let det = determinant(mat);
    let count = det * BigRational::from(BigInt::from(factorial(n)));
    debug_assert!(count.is_integer() && !count.is_negative());
    Ok(count.to_integer().to_biguint().expect("negative skew count"))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Falling factorial `(x ff k) = x (x-1) ... (x-k+1)` over rationals.
pub fn falling_factorial(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - Rat::from(BigInt::from(i));
    }
    acc
}

/// Integer falling factorial `(n ff k)`.
pub fn falling_factorial_int(n: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= BigInt::from(n - i);
    }
    acc
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let inv = m[col][col].clone();
        det *= &inv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &inv;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)`
/// last. This is the canonical iteration order for maps keyed by partitions.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u64, max_part: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            cur.push(p as u32);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// The boundary profile `omega_lambda` of a diagram in Russian notation:
/// piecewise linear, slopes ±1, `omega(x) = |x|` outside a finite window.
#[derive(Clone, Debug)]
pub struct Profile {
    parts: Vec<u32>,
}

impl Profile {
    pub fn of(lambda: &Partition) -> Self {
        Profile {
            parts: lambda.parts().to_vec(),
        }
    }

    /// Number of boxes on the diagonal of content `x`.
    pub fn height(&self, x: i64) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| {
                let row = i as i64 + 1;
                let col = x + row;
                col >= 1 && col <= p as i64
            })
            .count() as u64
    }

    /// Window `[lo, hi]` outside of which `omega(x) = |x|`.
    pub fn window(&self) -> (i64, i64) {
        let lo = -(self.parts.len() as i64);
        let hi = self.parts.first().copied().unwrap_or(0) as i64;
        (lo, hi)
    }

    /// Exact evaluation of `omega(x)` at a rational point: linear
    /// interpolation between integer contents, where
    /// `omega(m) = |m| + 2 * height(m)`.
    pub fn evaluate(&self, x: &Rat) -> Rat {
        let floor = x.floor().to_integer();
        let m: i64 = i64::try_from(&floor).expect("profile argument out of range");
        let at = |m: i64| Rat::from(BigInt::from(m.abs() + 2 * self.height(m) as i64));
        let t = x - Rat::from(BigInt::from(m));
        if t.is_zero() {
            at(m)
        } else {
            // slope between m and m+1 is +-1, so linear interpolation is exact
            (Rat::one() - &t) * at(m) + t * at(m + 1)
        }
    }

    /// Exact area between the profile and `|x|`, halved:
    /// `integral (omega(x) - |x|)/2 dx`; equals `|lambda|`.
    pub fn area(&self) -> BigInt {
        let (lo, hi) = self.window();
        // trapezoid rule is exact for a piecewise-linear integrand with
        // integer breakpoints; unit spacing makes it a plain sum of heights
        (lo..=hi).map(|m| BigInt::from(self.height(m))).sum()
    }
}
