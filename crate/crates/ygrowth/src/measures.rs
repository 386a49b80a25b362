//! Transition, co-transition, and diagram measures of a partition, their
//! exact moments, and the formal-series bridges between the three moment
//! families.
//!
//! All three measures attach to the same picture: the transition measure
//! `m_K` lives on the addable-corner contents, the co-transition measure
//! `m_A` on the removable-corner contents, and the diagram measure `sigma`
//! is the derivative measure of `(omega(x) - |x|)/2`, with density in
//! `{0, +-1}` between integer contents.
//!
//! The bridges are Stieltjes-transform identities, handled here as exact
//! truncated power series in `u = 1/z`:
//!
//! * Markov–Krein: `ln(sum_k x_k u^k) = -sum_m q_m u^{m+1}`,
//! * co-transition: `z - 1/C_K(z) = A * C_A(z)` with the area `A = |lambda|`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::characters::Distribution;
use crate::partitions::{dim_syt, Partition};
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MeasureError {
    #[error("co-transition measure of the empty partition is undefined")]
    EmptyPartition,
    #[error("area must be positive")]
    NonPositiveArea,
    #[error("moment sequence must start with 1, got {0}")]
    NotNormalized(String),
    #[error("bridge input must be centered (first moment 0), got {0}")]
    NotCentered(String),
    #[error("expectation over Y_n requires n <= {cap}, got n = {n}")]
    AboveCap { n: u64, cap: u64 },
}

/// Finitely many weighted atoms with exact rational data; locations strictly
/// increasing, weights nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<(Rat, Rat)>,
}

impl AtomicMeasure {
    pub fn new(mut atoms: Vec<(Rat, Rat)>) -> Self {
        atoms.retain(|(_, w)| !w.is_zero());
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        for w in atoms.windows(2) {
            assert!(w[0].0 < w[1].0, "duplicate atom location");
        }
        AtomicMeasure { atoms }
    }

    pub fn dirac(loc: Rat) -> Self {
        AtomicMeasure {
            atoms: vec![(loc, Rat::one())],
        }
    }

    pub fn atoms(&self) -> &[(Rat, Rat)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> Rat {
        self.atoms.iter().map(|(_, w)| w.clone()).sum()
    }

    pub fn is_probability(&self) -> bool {
        self.atoms.iter().all(|(_, w)| w.is_positive()) && self.total_mass().is_one()
    }

    /// Rescales every atom location by `c`.
    pub fn scaled_locations(&self, c: &Rat) -> AtomicMeasure {
        AtomicMeasure::new(
            self.atoms
                .iter()
                .map(|(x, w)| (x * c, w.clone()))
                .collect(),
        )
    }

    /// JSON dump: `{"atoms": [[loc_num, loc_den, w_num, w_den], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let atoms: Vec<serde_json::Value> = self
            .atoms
            .iter()
            .map(|(x, w)| {
                serde_json::json!([
                    x.numer().to_string(),
                    x.denom().to_string(),
                    w.numer().to_string(),
                    w.denom().to_string()
                ])
            })
            .collect();
        serde_json::json!({ "atoms": atoms })
    }
}

/// Which measure a moment sequence belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentFlavor {
    Transition,
    Cotransition,
    Diagram,
}

/// Exact moments `values[k] = integral x^k`, `k = 0..=K`, with a flavor tag.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence {
    pub flavor: MomentFlavor,
    pub values: Vec<Rat>,
}

impl MomentSequence {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }
}

/// Kerov's transition measure of a partition: atoms at the addable-corner
/// contents `x_i` with weights `mu_i = prod_j (x_i - y_j) / prod_{j != i} (x_i - x_j)`.
pub fn transition_measure(lambda: &Partition) -> AtomicMeasure {
    let c = lambda.corners();
    let atoms = c
        .minima
        .iter()
        .map(|&x| {
            let mut num = BigInt::one();
            for &y in &c.maxima {
                num *= BigInt::from(x - y);
            }
            let mut den = BigInt::one();
            for &x2 in &c.minima {
                if x2 != x {
                    den *= BigInt::from(x - x2);
                }
            }
            (rat(x), Rat::new(num, den))
        })
        .collect();
    AtomicMeasure::new(atoms)
}

/// Transition weights by the dimension-ratio formula
/// `dim(Lambda) / ((n+1) dim(lambda))`; an independent route used to
/// cross-check the product formula.
pub fn transition_measure_dim_ratio(lambda: &Partition) -> AtomicMeasure {
    let n = lambda.size();
    let d = BigInt::from(dim_syt(lambda));
    let atoms = lambda
        .corners()
        .minima
        .iter()
        .map(|&x| {
            let up = BigInt::from(dim_syt(&lambda.with_box_at(x)));
            (rat(x), Rat::new(up, BigInt::from(n + 1) * &d))
        })
        .collect();
    AtomicMeasure::new(atoms)
}

/// Co-transition measure: atoms at the removable-corner contents `y_i` with
/// weights `dim(lambda - box) / dim(lambda)`.
pub fn cotransition_measure(lambda: &Partition) -> Result<AtomicMeasure, MeasureError> {
    if lambda.is_empty() {
        return Err(MeasureError::EmptyPartition);
    }
    let d = BigInt::from(dim_syt(lambda));
    let atoms = lambda
        .corners()
        .maxima
        .iter()
        .map(|&y| {
            let down = BigInt::from(dim_syt(&lambda.without_box_at(y)));
            (rat(y), Rat::new(down, d.clone()))
        })
        .collect();
    Ok(AtomicMeasure::new(atoms))
}

/// Exact raw moments `sum_i w_i x_i^k` for `k = 0..=kmax`.
pub fn moments(m: &AtomicMeasure, kmax: usize, flavor: MomentFlavor) -> MomentSequence {
    let mut values = Vec::with_capacity(kmax + 1);
    let mut powers: Vec<Rat> = m.atoms().iter().map(|_| Rat::one()).collect();
    for k in 0..=kmax {
        if k > 0 {
            for (p, (x, _)) in powers.iter_mut().zip(m.atoms()) {
                *p *= x;
            }
        }
        values.push(powers.iter().zip(m.atoms()).map(|(p, (_, w))| p * w).sum());
    }
    MomentSequence { flavor, values }
}

/// Moments `q_k = integral x^k d sigma[lambda](x)` of the diagram measure,
/// whose density between integer contents is `(omega'(x) - sgn(x)) / 2`,
/// valued in `{0, +-1}`. Always `q_0 = 0` and `q_1 = -|lambda|`.
pub fn diagram_moments(lambda: &Partition, kmax: usize) -> MomentSequence {
    let profile = lambda.profile();
    let (lo, hi) = profile.window();
    let mut values = vec![Rat::zero(); kmax + 1];
    for m in lo..hi {
        // slope of sigma on (m, m+1)
        let s = profile.height(m + 1) as i64 - profile.height(m) as i64;
        if s == 0 {
            continue;
        }
        for (k, v) in values.iter_mut().enumerate() {
            // integral over (m, m+1) of x^k dx
            let hi_pow = rat(m + 1).pow(k as i32 + 1);
            let lo_pow = rat(m).pow(k as i32 + 1);
            *v += rat(s) * (hi_pow - lo_pow) / rat(k as i64 + 1);
        }
    }
    MomentSequence {
        flavor: MomentFlavor::Diagram,
        values,
    }
}

// power series helpers in u, dense ascending coefficients, fixed length

fn series_mul(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for i in 0..a.len().min(len) {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..b.len().min(len - i) {
            if !b[j].is_zero() {
                out[i + j] += &a[i] * &b[j];
            }
        }
    }
    out
}

/// log of a series with constant term 1: `ln(1 + u) = sum (-1)^{j+1} u^j / j`.
fn series_log(a: &[Rat]) -> Vec<Rat> {
    let len = a.len();
    debug_assert!(a[0].is_one());
    let mut u = a.to_vec();
    u[0] = Rat::zero();
    let mut out = vec![Rat::zero(); len];
    let mut upow = u.clone();
    for j in 1..len {
        let sign = if j % 2 == 1 { Rat::one() } else { -Rat::one() };
        for i in 0..len {
            if !upow[i].is_zero() {
                out[i] += &sign * &upow[i] / rat(j as i64);
            }
        }
        if upow.iter().all(|c| c.is_zero()) {
            break;
        }
        upow = series_mul(&upow, &u, len);
    }
    out
}

/// exp of a series with constant term 0, via `sum u^j / j!` with the
/// running term `u^j / j!` updated multiplicatively.
fn series_exp(a: &[Rat]) -> Vec<Rat> {
    let len = a.len();
    debug_assert!(a[0].is_zero());
    let mut out = vec![Rat::zero(); len];
    out[0] = Rat::one();
    let mut term = vec![Rat::zero(); len];
    term[0] = Rat::one();
    for j in 1..len {
        term = series_mul(&term, a, len);
        let jr = rat(j as i64);
        for c in term.iter_mut() {
            if !c.is_zero() {
                *c /= &jr;
            }
        }
        for i in 0..len {
            if !term[i].is_zero() {
                out[i] += &term[i];
            }
        }
        if term.iter().all(|c| c.is_zero()) {
            break;
        }
    }
    out
}

/// reciprocal of a series with constant term 1.
fn series_inverse(a: &[Rat]) -> Vec<Rat> {
    let len = a.len();
    debug_assert!(a[0].is_one());
    let mut out = vec![Rat::zero(); len];
    out[0] = Rat::one();
    for i in 1..len {
        let mut s = Rat::zero();
        for j in 1..=i {
            if j < a.len() && !a[j].is_zero() {
                s += &a[j] * &out[i - j];
            }
        }
        out[i] = -s;
    }
    out
}

/// Markov–Krein bridge: from transition moments `x_k` (with `x_0 = 1`) to
/// diagram moments `q_m` via `ln(sum_k x_k u^k) = -sum_m q_m u^{m+1}`.
/// Returns `q_0..q_{K-1}` for an input of order `K`.
pub fn markov_krein_bridge(x: &MomentSequence) -> Result<MomentSequence, MeasureError> {
    if !x.values[0].is_one() {
        return Err(MeasureError::NotNormalized(x.values[0].to_string()));
    }
    let logs = series_log(&x.values);
    let values: Vec<Rat> = (0..x.values.len() - 1)
        .map(|m| -logs[m + 1].clone())
        .collect();
    Ok(MomentSequence {
        flavor: MomentFlavor::Diagram,
        values,
    })
}

/// Formal inverse of [`markov_krein_bridge`]: from diagram moments back to
/// transition moments, `sum_k x_k u^k = exp(-sum_m q_m u^{m+1})`.
/// Returns `x_0..x_{K+1}` for an input of order `K`.
pub fn markov_krein_inverse(q: &MomentSequence) -> MomentSequence {
    let len = q.values.len() + 2;
    let mut arg = vec![Rat::zero(); len];
    for (m, v) in q.values.iter().enumerate() {
        arg[m + 1] = -v.clone();
    }
    let values = series_exp(&arg);
    MomentSequence {
        flavor: MomentFlavor::Transition,
        values,
    }
}

/// Co-transition bridge: from transition moments and the area `A` to
/// co-transition moments via `z - 1/C_K(z) = A * C_A(z)`. In `u = 1/z` this
/// reads `z_k = -[u^{k+2}] X(u)^{-1} / A`. The input must be centered
/// (`x_1 = 0`, automatic for genuine partitions). Returns `z_0..z_{K-2}`.
pub fn cotransition_bridge(x: &MomentSequence, area: &Rat) -> Result<MomentSequence, MeasureError> {
    if !x.values[0].is_one() {
        return Err(MeasureError::NotNormalized(x.values[0].to_string()));
    }
    if !area.is_positive() {
        return Err(MeasureError::NonPositiveArea);
    }
    if x.values.len() > 1 && !x.values[1].is_zero() {
        return Err(MeasureError::NotCentered(x.values[1].to_string()));
    }
    let inv = series_inverse(&x.values);
    let values: Vec<Rat> = (0..x.values.len().saturating_sub(2))
        .map(|k| -&inv[k + 2] / area)
        .collect();
    Ok(MomentSequence {
        flavor: MomentFlavor::Cotransition,
        values,
    })
}

/// Default size cap for exact expectations over all of `Y_n`.
pub const DEFAULT_EXPECTATION_CAP: u64 = 9;

/// Exact joint moment `E_rho[prod_i integral x^{k_i} m_K[lambda](dx)]` by
/// full summation over the support of `rho`, with the default size cap.
pub fn exact_expectation(rho: &Distribution, ks: &[usize]) -> Result<Rat, MeasureError> {
    exact_expectation_capped(rho, ks, DEFAULT_EXPECTATION_CAP)
}

pub fn exact_expectation_capped(
    rho: &Distribution,
    ks: &[usize],
    cap: u64,
) -> Result<Rat, MeasureError> {
    if rho.n > cap {
        return Err(MeasureError::AboveCap { n: rho.n, cap });
    }
    let kmax = ks.iter().copied().max().unwrap_or(0);
    let mut total = Rat::zero();
    for (lam, p) in rho.support() {
        if p.is_zero() {
            continue;
        }
        let mom = moments(&transition_measure(lam), kmax, MomentFlavor::Transition);
        let mut term = p.clone();
        for &k in ks {
            term *= &mom.values[k];
        }
        total += term;
    }
    Ok(total)
}
