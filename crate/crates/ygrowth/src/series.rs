//! Truncated Laurent series over exact rationals and the
//! coefficient-extraction formulas for limiting moments and covariances.
//!
//! A series knows the window on which its coefficients are exact: supports
//! are bounded below (finitely many negative exponents) and coefficients are
//! tracked up to an explicit cutoff. Any attempt to read a coefficient at or
//! beyond the cutoff is an error, never a silent zero: silent truncation is
//! the main correctness hazard of this machinery.
//!
//! The limit formulas all extract `[z^{-1}]` or `[z^{-1} w^{-1}]` from
//! products of `(alpha z^{-1} + z F(z))^k` against a covariance kernel
//!
//! ```text
//! H(z,w) = Q(z,w) - zw d/dz d/dw ( zw F(z) F(w) / t + ln(1 - zw P(z,w) / t) )
//! ```
//!
//! with `t = max(alpha, alpha')` and `P(z,w) = (z F(z) - w F(w)) / (z - w)`
//! expanded symbolically as `sum_m c_m sum_{a+b=m-1} z^a w^b`, which avoids
//! ever dividing by `z - w`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::measures::AtomicMeasure;
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient at exponent {exp} is beyond the truncation window (cutoff {cutoff})")]
    OutOfWindow { exp: i64, cutoff: i64 },
    #[error("bivariate coefficient at ({ez}, {ew}) is beyond the truncation window")]
    OutOfWindow2 { ez: i64, ew: i64 },
    #[error("insufficient truncation order: {have} coefficients given, {required} required")]
    Truncation { have: usize, required: usize },
    #[error("alpha must lie in (0, 1], got {0}")]
    AlphaOutOfRange(String),
    #[error("invalid limit data: {0}")]
    BadLimitData(String),
}

/// A Laurent series with finitely many negative exponents, exact on
/// `[min_exp, cutoff)` and unknown from `cutoff` on (`None` = exact
/// everywhere, i.e. a Laurent polynomial).
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    min_exp: i64,
    cutoff: Option<i64>,
    coeffs: BTreeMap<i64, Rat>,
}

impl TruncatedSeries {
    /// An exact Laurent polynomial.
    pub fn polynomial(terms: Vec<(i64, Rat)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            if !c.is_zero() {
                *coeffs.entry(e).or_insert_with(Rat::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        let min_exp = coeffs.keys().next().copied().unwrap_or(0);
        TruncatedSeries {
            min_exp,
            cutoff: None,
            coeffs,
        }
    }

    /// A series known exactly on `[min_exp, cutoff)`.
    pub fn truncated(terms: Vec<(i64, Rat)>, min_exp: i64, cutoff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            debug_assert!(e >= min_exp && e < cutoff);
            if !c.is_zero() {
                *coeffs.entry(e).or_insert_with(Rat::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            min_exp,
            cutoff: Some(cutoff),
            coeffs,
        }
    }

    pub fn zero() -> Self {
        TruncatedSeries::polynomial(vec![])
    }

    pub fn monomial(e: i64, c: Rat) -> Self {
        TruncatedSeries::polynomial(vec![(e, c)])
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn cutoff(&self) -> Option<i64> {
        self.cutoff
    }

    /// Exact coefficient, or an error when the exponent is at or beyond the
    /// cutoff.
    pub fn coeff(&self, e: i64) -> Result<Rat, SeriesError> {
        if let Some(c) = self.cutoff {
            if e >= c {
                return Err(SeriesError::OutOfWindow { exp: e, cutoff: c });
            }
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cutoff = opt_min(self.cutoff, other.cutoff);
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            *coeffs.entry(e).or_insert_with(Rat::zero) += c;
        }
        if let Some(cut) = cutoff {
            coeffs.retain(|&e, _| e < cut);
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            min_exp: self.min_exp.min(other.min_exp),
            cutoff,
            coeffs,
        }
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        TruncatedSeries {
            min_exp: self.min_exp,
            cutoff: self.cutoff,
            coeffs: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect()
            },
        }
    }

    /// Multiplication; the product is exact up to
    /// `min(a.cutoff + b.min_exp, b.cutoff + a.min_exp)`.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cutoff = opt_min(
            self.cutoff.map(|c| c + other.min_exp),
            other.cutoff.map(|c| c + self.min_exp),
        );
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                let e = e1 + e2;
                if cutoff.map_or(true, |c| e < c) {
                    *coeffs.entry(e).or_insert_with(Rat::zero) += c1 * c2;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            min_exp: self.min_exp + other.min_exp,
            cutoff,
            coeffs,
        }
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::monomial(0, Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// JSON dump: a map from exponent to `[num, den]`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            map.insert(
                e.to_string(),
                serde_json::json!([c.numer().to_string(), c.denom().to_string()]),
            );
        }
        serde_json::Value::Object(map)
    }
}

fn opt_min(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, y) => y,
    }
}

/// A Laurent series in two variables, exact on the rectangle
/// `[min_z, cut_z) x [min_w, cut_w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateSeries {
    min_z: i64,
    min_w: i64,
    cut_z: Option<i64>,
    cut_w: Option<i64>,
    coeffs: BTreeMap<(i64, i64), Rat>,
}

impl BivariateSeries {
    pub fn polynomial(terms: Vec<(i64, i64, Rat)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (ez, ew, c) in terms {
            if !c.is_zero() {
                *coeffs.entry((ez, ew)).or_insert_with(Rat::zero) += c;
            }
        }
        coeffs.retain(|_, c: &mut Rat| !c.is_zero());
        let min_z = coeffs.keys().map(|&(z, _)| z).min().unwrap_or(0);
        let min_w = coeffs.keys().map(|&(_, w)| w).min().unwrap_or(0);
        BivariateSeries {
            min_z,
            min_w,
            cut_z: None,
            cut_w: None,
            coeffs,
        }
    }

    pub fn truncated(terms: Vec<(i64, i64, Rat)>, mins: (i64, i64), cuts: (i64, i64)) -> Self {
        let mut s = BivariateSeries::polynomial(terms);
        s.min_z = mins.0;
        s.min_w = mins.1;
        s.cut_z = Some(cuts.0);
        s.cut_w = Some(cuts.1);
        s.coeffs
            .retain(|&(z, w), _| z >= mins.0 && w >= mins.1 && z < cuts.0 && w < cuts.1);
        s
    }

    pub fn coeff(&self, ez: i64, ew: i64) -> Result<Rat, SeriesError> {
        let bad_z = self.cut_z.map_or(false, |c| ez >= c);
        let bad_w = self.cut_w.map_or(false, |c| ew >= c);
        if bad_z || bad_w {
            return Err(SeriesError::OutOfWindow2 { ez, ew });
        }
        Ok(self
            .coeffs
            .get(&(ez, ew))
            .cloned()
            .unwrap_or_else(Rat::zero))
    }

    pub fn add(&self, other: &BivariateSeries) -> BivariateSeries {
        let cut_z = opt_min(self.cut_z, other.cut_z);
        let cut_w = opt_min(self.cut_w, other.cut_w);
        let mut coeffs = self.coeffs.clone();
        for (&k, c) in &other.coeffs {
            *coeffs.entry(k).or_insert_with(Rat::zero) += c;
        }
        coeffs.retain(|&(z, w), c| {
            cut_z.map_or(true, |cz| z < cz) && cut_w.map_or(true, |cw| w < cw) && !c.is_zero()
        });
        BivariateSeries {
            min_z: self.min_z.min(other.min_z),
            min_w: self.min_w.min(other.min_w),
            cut_z,
            cut_w,
            coeffs,
        }
    }

    pub fn scale(&self, c: &Rat) -> BivariateSeries {
        BivariateSeries {
            min_z: self.min_z,
            min_w: self.min_w,
            cut_z: self.cut_z,
            cut_w: self.cut_w,
            coeffs: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect()
            },
        }
    }

    pub fn mul(&self, other: &BivariateSeries) -> BivariateSeries {
        let cut_z = opt_min(
            self.cut_z.map(|c| c + other.min_z),
            other.cut_z.map(|c| c + self.min_z),
        );
        let cut_w = opt_min(
            self.cut_w.map(|c| c + other.min_w),
            other.cut_w.map(|c| c + self.min_w),
        );
        let mut coeffs: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
        for (&(z1, w1), c1) in &self.coeffs {
            for (&(z2, w2), c2) in &other.coeffs {
                let key = (z1 + z2, w1 + w2);
                if cut_z.map_or(true, |c| key.0 < c) && cut_w.map_or(true, |c| key.1 < c) {
                    *coeffs.entry(key).or_insert_with(Rat::zero) += c1 * c2;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        BivariateSeries {
            min_z: self.min_z + other.min_z,
            min_w: self.min_w + other.min_w,
            cut_z,
            cut_w,
            coeffs,
        }
    }

    /// The operator `zw d/dz d/dw`: each coefficient at `(i, j)` is scaled
    /// by `i * j` in place.
    pub fn zw_dz_dw(&self) -> BivariateSeries {
        BivariateSeries {
            min_z: self.min_z,
            min_w: self.min_w,
            cut_z: self.cut_z,
            cut_w: self.cut_w,
            coeffs: self
                .coeffs
                .iter()
                .filter(|&(&(i, j), _)| i != 0 && j != 0)
                .map(|(&(i, j), c)| ((i, j), c * rat(i) * rat(j)))
                .collect(),
        }
    }

    /// `ln(1 + u)` for a series with both minimal exponents >= 1, summed
    /// until the powers of `u` leave the window.
    pub fn ln_one_plus(&self) -> BivariateSeries {
        assert!(self.min_z >= 1 && self.min_w >= 1, "ln needs vanishing constant term");
        let mut out = BivariateSeries::truncated(
            vec![],
            (0, 0),
            (
                self.cut_z.unwrap_or(i64::MAX / 4),
                self.cut_w.unwrap_or(i64::MAX / 4),
            ),
        );
        let stop = out.cut_z.unwrap().max(out.cut_w.unwrap());
        let mut upow = self.clone();
        let mut r = 1i64;
        loop {
            let sign = if r % 2 == 1 { Rat::one() } else { -Rat::one() };
            out = out.add(&upow.scale(&(sign / rat(r))));
            r += 1;
            if upow.coeffs.is_empty() || r * self.min_z.min(self.min_w) > stop {
                break;
            }
            upow = upow.mul(self);
        }
        out
    }
}

/// Limiting data of a distribution family: free cumulants `c` (with
/// `c_1 = 1`) and the symmetric covariance array `d` (with first row and
/// column zero). `c[i]` stores `c_{i+1}` and `d[i][j]` stores `d_{i+1,j+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitData {
    c: Vec<Rat>,
    d: Vec<Vec<Rat>>,
}

impl LimitData {
    pub fn new(c: Vec<Rat>, d: Vec<Vec<Rat>>) -> Result<Self, SeriesError> {
        if c.is_empty() || !c[0].is_one() {
            return Err(SeriesError::BadLimitData("c_1 must be 1".into()));
        }
        for (i, row) in d.iter().enumerate() {
            if row.len() != d.len() {
                return Err(SeriesError::BadLimitData("d must be square".into()));
            }
            for (j, v) in row.iter().enumerate() {
                if v != &d[j][i] {
                    return Err(SeriesError::BadLimitData("d must be symmetric".into()));
                }
                if (i == 0 || j == 0) && !v.is_zero() {
                    return Err(SeriesError::BadLimitData(
                        "d_{1,j} and d_{i,1} must vanish".into(),
                    ));
                }
            }
        }
        Ok(LimitData { c, d })
    }

    /// Free cumulants only, with `Q = 0`.
    pub fn from_cumulants(c: Vec<Rat>) -> Result<Self, SeriesError> {
        LimitData::new(c, Vec::new())
    }

    /// The Plancherel family: `F = 1`, `Q = 0`, padded to `order`
    /// coefficients.
    pub fn plancherel(order: usize) -> Self {
        let mut c = vec![Rat::zero(); order.max(1)];
        c[0] = Rat::one();
        LimitData { c, d: Vec::new() }
    }

    pub fn c(&self) -> &[Rat] {
        &self.c
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    /// JSON dump: `{"c": [...], "d": [[...]]}` with rationals as
    /// `"num/den"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rs = |v: &Rat| format!("{}/{}", v.numer(), v.denom());
        serde_json::json!({
            "c": self.c.iter().map(rs).collect::<Vec<_>>(),
            "d": self
                .d
                .iter()
                .map(|row| row.iter().map(rs).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    fn require(&self, required: usize) -> Result<(), SeriesError> {
        if self.c.len() < required {
            Err(SeriesError::Truncation {
                have: self.c.len(),
                required,
            })
        } else {
            Ok(())
        }
    }

    /// `F(z) = sum_i c_i z^{i-1}`, exact below exponent `len(c)`.
    pub fn f_series(&self) -> TruncatedSeries {
        TruncatedSeries::truncated(
            self.c
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone()))
                .collect(),
            0,
            self.c.len() as i64,
        )
    }

    /// `alpha z^{-1} + z F(z)`.
    pub fn base_series(&self, alpha: &Rat) -> TruncatedSeries {
        let zf = TruncatedSeries::monomial(1, Rat::one()).mul(&self.f_series());
        TruncatedSeries::monomial(-1, alpha.clone()).add(&zf)
    }

    /// `Q(z, w) = sum d_{i,j} z^i w^j` restricted to the rectangle
    /// `[0, cz) x [0, cw)`; entries beyond the stored array are zero.
    fn q_series(&self, cz: i64, cw: i64) -> BivariateSeries {
        let mut terms = Vec::new();
        for (i, row) in self.d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    terms.push((i as i64 + 1, j as i64 + 1, v.clone()));
                }
            }
        }
        BivariateSeries::truncated(terms, (0, 0), (cz, cw))
    }

    /// The divided difference `P(z, w) = (z F(z) - w F(w)) / (z - w)`
    /// expanded as `sum_m c_m sum_{a+b=m-1} z^a w^b`, on a rectangle that
    /// requires `len(c) >= cz + cw - 1`.
    fn p_series(&self, cz: i64, cw: i64) -> Result<BivariateSeries, SeriesError> {
        self.require((cz + cw - 1) as usize)?;
        let mut terms = Vec::new();
        for (idx, cm) in self.c.iter().enumerate() {
            let m = idx as i64 + 1;
            if cm.is_zero() {
                continue;
            }
            for a in 0..m {
                let b = m - 1 - a;
                if a < cz && b < cw {
                    terms.push((a, b, cm.clone()));
                }
            }
        }
        Ok(BivariateSeries::truncated(terms, (0, 0), (cz, cw)))
    }

    /// The covariance kernel
    /// `H = Q - zw d/dz d/dw (zw F(z)F(w)/t + ln(1 - zw P/t))` with
    /// `t = max(alpha, alpha')`, exact on `[0, cz) x [0, cw)`.
    pub fn covariance_kernel(
        &self,
        t: &Rat,
        cz: i64,
        cw: i64,
    ) -> Result<BivariateSeries, SeriesError> {
        let f = &self.c;
        // zw F(z) F(w) / t
        let mut ff_terms = Vec::new();
        for (i, ci) in f.iter().enumerate() {
            for (j, cj) in f.iter().enumerate() {
                let (ez, ew) = (i as i64 + 1, j as i64 + 1);
                if ez < cz && ew < cw && !ci.is_zero() && !cj.is_zero() {
                    ff_terms.push((ez, ew, ci * cj / t));
                }
            }
        }
        // F entries up to cz-2 and cw-2 are needed; covered by p_series's
        // stronger requirement below
        let ff = BivariateSeries::truncated(ff_terms, (0, 0), (cz, cw));
        let p = self.p_series(cz, cw)?;
        let zw = BivariateSeries::truncated(
            vec![(1, 1, -(Rat::one() / t))],
            (1, 1),
            (cz.max(2), cw.max(2)),
        );
        let inner = zw.mul(&p); // -zw P / t, min exps (1, 1)
        let log = inner.ln_one_plus();
        let q = self.q_series(cz, cw);
        Ok(q.add(&ff.add(&log).zw_dz_dw().scale(&-Rat::one())))
    }
}

fn check_alpha(alpha: &Rat) -> Result<(), SeriesError> {
    if alpha.is_positive() && alpha <= &Rat::one() {
        Ok(())
    } else {
        Err(SeriesError::AlphaOutOfRange(alpha.to_string()))
    }
}

/// Limiting transition-measure moments:
/// `a_k = [z^{-1}] (z^{-1} + z F(z))^{k+1} / (k+1)`, for `k = 0..=kmax`.
pub fn lln_moments(data: &LimitData, kmax: usize) -> Result<Vec<Rat>, SeriesError> {
    multilevel_moments(data, &Rat::one(), kmax)
}

/// Multilevel moments
/// `a_k^alpha = [z^{-1}] (alpha z^{-1} + z F(z))^{k+1} / (alpha (k+1))`.
pub fn multilevel_moments(
    data: &LimitData,
    alpha: &Rat,
    kmax: usize,
) -> Result<Vec<Rat>, SeriesError> {
    check_alpha(alpha)?;
    data.require(kmax.max(1))?;
    let base = data.base_series(alpha);
    let mut out = Vec::with_capacity(kmax + 1);
    let mut power = base.clone(); // base^{k+1}
    for k in 0..=kmax {
        let coeff = power.coeff(-1)?;
        out.push(coeff / (rat(k as i64 + 1) * alpha));
        power = power.mul(&base);
    }
    Ok(out)
}

/// Kerov-type limiting covariance of the rescaled transition moments,
/// `b_{k,k'}` for `1 <= k, k' <= kmax`; `[k-1][k'-1]` indexing.
pub fn clt_covariance(data: &LimitData, kmax: usize) -> Result<Vec<Vec<Rat>>, SeriesError> {
    multilevel_covariance(data, &Rat::one(), &Rat::one(), kmax, kmax)
}

/// Two-level covariance `b^{alpha,alpha'}_{k,k'}` for `1 <= k <= kmax`,
/// `1 <= k' <= kmax2`.
pub fn multilevel_covariance(
    data: &LimitData,
    alpha: &Rat,
    alpha2: &Rat,
    kmax: usize,
    kmax2: usize,
) -> Result<Vec<Vec<Rat>>, SeriesError> {
    check_alpha(alpha)?;
    check_alpha(alpha2)?;
    let t = alpha.clone().max(alpha2.clone());
    let (cz, cw) = (kmax as i64 + 1, kmax2 as i64 + 1);
    let kernel = data.covariance_kernel(&t, cz, cw)?;
    let base_z = data.base_series(alpha);
    let base_w = data.base_series(alpha2);
    let prefactor = Rat::one() / (alpha * alpha2);
    extract_covariances(&kernel, &base_z, &base_w, kmax, kmax2, &prefactor, -1)
}

/// Means and covariances of the rescaled diagram moments
/// `Y_k = integral x^k d sigma`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramStatistics {
    /// `lim E[Y^alpha_k]` for `k = 0..=kmax`.
    pub mean_first: Vec<Rat>,
    /// Same at the second level `alpha'`.
    pub mean_second: Vec<Rat>,
    /// `lim n Cov(Y^alpha_k, Y^alpha'_{k'})` for `1 <= k, k' <= kmax`.
    pub covariance: Vec<Vec<Rat>>,
}

/// Limiting diagram-moment statistics: means
/// `-[z^{-1}] (alpha/z + zF)^{k+1} / ((k+1) z)` and the `(zw)^{-1}`-damped
/// covariance kernel.
pub fn diagram_statistics(
    data: &LimitData,
    alpha: &Rat,
    alpha2: &Rat,
    kmax: usize,
) -> Result<DiagramStatistics, SeriesError> {
    check_alpha(alpha)?;
    check_alpha(alpha2)?;
    let mean_at = |a: &Rat| -> Result<Vec<Rat>, SeriesError> {
        let base = data.base_series(a);
        let mut out = Vec::with_capacity(kmax + 1);
        let mut power = base.clone();
        for k in 0..=kmax {
            // -[z^{-1}] base^{k+1} / ((k+1) z) = -[z^0] base^{k+1} / (k+1)
            let coeff = power.coeff(0)?;
            out.push(-coeff / rat(k as i64 + 1));
            power = power.mul(&base);
        }
        Ok(out)
    };
    let t = alpha.clone().max(alpha2.clone());
    let (cz, cw) = (kmax as i64 + 2, kmax as i64 + 2);
    let kernel = data.covariance_kernel(&t, cz, cw)?;
    let base_z = data.base_series(alpha);
    let base_w = data.base_series(alpha2);
    // the (zw)^{-1} damping turns the [z^{-1} w^{-1}] extraction into [z^0 w^0]
    let covariance = extract_covariances(&kernel, &base_z, &base_w, kmax, kmax, &Rat::one(), 0)?;
    Ok(DiagramStatistics {
        mean_first: mean_at(alpha)?,
        mean_second: mean_at(alpha2)?,
        covariance,
    })
}

fn extract_covariances(
    kernel: &BivariateSeries,
    base_z: &TruncatedSeries,
    base_w: &TruncatedSeries,
    kmax: usize,
    kmax2: usize,
    prefactor: &Rat,
    target: i64,
) -> Result<Vec<Vec<Rat>>, SeriesError> {
    // precompute powers
    let mut pow_z = Vec::with_capacity(kmax + 1);
    let mut pow_w = Vec::with_capacity(kmax2 + 1);
    let mut acc = TruncatedSeries::monomial(0, Rat::one());
    for _ in 0..=kmax {
        pow_z.push(acc.clone());
        acc = acc.mul(base_z);
    }
    let mut acc = TruncatedSeries::monomial(0, Rat::one());
    for _ in 0..=kmax2 {
        pow_w.push(acc.clone());
        acc = acc.mul(base_w);
    }
    let mut out = vec![vec![Rat::zero(); kmax2]; kmax];
    for k in 1..=kmax {
        for k2 in 1..=kmax2 {
            let mut total = Rat::zero();
            // [z^target w^target] pow_z[k](z) pow_w[k2](w) kernel(z, w)
            for (&(i, j), c) in &kernel.coeffs {
                let cz = pow_z[k].coeff(target - i)?;
                if cz.is_zero() {
                    continue;
                }
                let cw = pow_w[k2].coeff(target - j)?;
                if cw.is_zero() {
                    continue;
                }
                total += cz * cw * c;
            }
            // verify the extraction saw every kernel entry it needed: any
            // exponent from the base powers below their minimum contributes
            // zero, and entries beyond the kernel window would be needed only
            // if target - min_exp >= cutoff
            let need_z = target - pow_z[k].min_exp();
            let need_w = target - pow_w[k2].min_exp();
            if kernel.cut_z.map_or(false, |c| need_z >= c)
                || kernel.cut_w.map_or(false, |c| need_w >= c)
            {
                return Err(SeriesError::OutOfWindow2 {
                    ez: need_z,
                    ew: need_w,
                });
            }
            out[k - 1][k2 - 1] = total * prefactor;
        }
    }
    Ok(out)
}

/// Free cumulants `c_1..c_order` of a probability measure from its raw
/// moments `m_0 = 1, m_1, ...`: the coefficients of
/// `C^{-1}(z) - 1/z = sum_i c_i z^i` for the Stieltjes transform
/// `C(z) = sum_k m_k z^{-k-1}`, computed by order-by-order series reversion.
pub fn free_cumulants_from_moments(moments: &[Rat], order: usize) -> Result<Vec<Rat>, SeriesError> {
    if moments.is_empty() || !moments[0].is_one() {
        return Err(SeriesError::BadLimitData("m_0 must be 1".into()));
    }
    // working in u = 1/z: evaluating C at z = 1/w + e(w) requires moments up
    // to order `order + 1`
    if moments.len() < order + 2 {
        return Err(SeriesError::Truncation {
            have: moments.len(),
            required: order + 2,
        });
    }
    let len = order + 3;
    let mut e = vec![Rat::zero(); len]; // e(w) = sum c_i w^i, c_0 slot unused
    // residual_j(e) = [w^{j+2}] (C(1/w + e(w)) - w); linear in the unknown
    // coefficient c_j, so two evaluations solve each order exactly
    for j in 1..=order {
        let r0 = reversion_residual(moments, &e, j + 2, len);
        e[j] = Rat::one();
        let r1 = reversion_residual(moments, &e, j + 2, len);
        let slope = &r1 - &r0;
        debug_assert!(!slope.is_zero());
        e[j] = -r0 / slope;
    }
    Ok(e[1..=order].to_vec())
}

/// `[w^target] (C(1/w + e(w)) - w)` with all series truncated at `len`.
fn reversion_residual(moments: &[Rat], e: &[Rat], target: usize, len: usize) -> Rat {
    // 1/z = w / (1 + w e(w)) = w * sum_j (-w e(w))^j
    let mut we = vec![Rat::zero(); len];
    for (i, c) in e.iter().enumerate() {
        if i + 1 < len && !c.is_zero() {
            we[i + 1] = -c.clone();
        }
    }
    let mut geom = vec![Rat::zero(); len];
    geom[0] = Rat::one();
    let mut pow = we.clone();
    loop {
        if pow.iter().all(|c| c.is_zero()) {
            break;
        }
        for i in 0..len {
            if !pow[i].is_zero() {
                geom[i] += &pow[i];
            }
        }
        pow = dense_mul(&pow, &we, len);
    }
    let mut zinv = vec![Rat::zero(); len];
    for i in 0..len - 1 {
        zinv[i + 1] = geom[i].clone();
    }
    // C(z) = sum_k m_k z^{-k-1} = sum_k m_k zinv^{k+1}
    let mut c_val = vec![Rat::zero(); len];
    let mut zpow = zinv.clone();
    for m in moments {
        if !m.is_zero() {
            for i in 0..len {
                if !zpow[i].is_zero() {
                    c_val[i] += m * &zpow[i];
                }
            }
        }
        zpow = dense_mul(&zpow, &zinv, len);
        if zpow.iter().all(|c| c.is_zero()) {
            break;
        }
    }
    let mut res = c_val;
    res[1] -= Rat::one();
    res.get(target).cloned().unwrap_or_else(Rat::zero)
}

fn dense_mul(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for i in 0..len {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..len - i {
            if !b[j].is_zero() {
                out[i + j] += &a[i] * &b[j];
            }
        }
    }
    out
}

/// Limiting free cumulants of a Thoma-type family from the row and column
/// limit measures: `c_1 = 1` and
/// `c_k = integral x^{k+1} dA + (-1)^{k+1} integral x^{k+1} dB` for `k >= 2`.
pub fn thoma_limit_cumulants(a: &AtomicMeasure, b: &AtomicMeasure, order: usize) -> Vec<Rat> {
    let mut c = vec![Rat::zero(); order.max(1)];
    c[0] = Rat::one();
    for k in 2..=order {
        let ma: Rat = a
            .atoms()
            .iter()
            .map(|(x, w)| x.pow(k as i32 + 1) * w)
            .sum();
        let mb: Rat = b
            .atoms()
            .iter()
            .map(|(x, w)| x.pow(k as i32 + 1) * w)
            .sum();
        let sb = if (k + 1) % 2 == 0 { mb } else { -mb };
        c[k - 1] = ma + sb;
    }
    c
}

/// The series `F` built from Thoma limit data, as a truncated series.
pub fn thoma_f(a: &AtomicMeasure, b: &AtomicMeasure, order: usize) -> TruncatedSeries {
    LimitData::from_cumulants(thoma_limit_cumulants(a, b, order))
        .expect("c_1 = 1 by construction")
        .f_series()
}

/// Free cumulants of the symmetric Bernoulli measure `(delta_{-1} + delta_1)/2`
/// (the transition measure of the unit square), by series reversion of its
/// moment sequence `1, 0, 1, 0, ...`.
pub fn bernoulli_free_cumulants(order: usize) -> Vec<Rat> {
    let moments: Vec<Rat> = (0..order + 2)
        .map(|k| if k % 2 == 0 { Rat::one() } else { Rat::zero() })
        .collect();
    free_cumulants_from_moments(&moments, order).expect("enough moments supplied")
}

/// Moments of the measure whose Stieltjes transform is
/// `C_alpha(z) = ((2 alpha - 1) z + sqrt(z^2 + 4 alpha^2 - 4 alpha)) / (2 alpha (z^2 - 1))`,
/// the transition measure of the level line at `alpha` of the square-shape
/// surface. The square root expands exactly as `z (1 + u)^{1/2}` with
/// `u = (4 alpha^2 - 4 alpha) / z^2` via the binomial series.
pub fn square_level_moments(alpha: &Rat, kmax: usize) -> Result<Vec<Rat>, SeriesError> {
    check_alpha(alpha)?;
    let len = kmax + 3;
    // series in u = 1/z
    // sqrt(z^2 + 4a^2 - 4a) = z * sum_j binom(1/2, j) (4a^2-4a)^j u^{2j}
    let disc = rat(4) * alpha * alpha - rat(4) * alpha;
    let mut root = vec![Rat::zero(); len];
    let mut binom = Rat::one(); // binom(1/2, j)
    let mut disc_pow = Rat::one();
    let mut j = 0usize;
    while 2 * j < len {
        root[2 * j] = &binom * &disc_pow;
        // binom(1/2, j+1) = binom(1/2, j) * (1/2 - j) / (j + 1)
        binom = binom * (crate::ratio(1, 2) - rat(j as i64)) / rat(j as i64 + 1);
        disc_pow *= &disc;
        j += 1;
    }
    // numerator * u: (2a-1) z + root(z) = z [(2a-1) + root_u], so
    // C = u [(2a-1) + root_u] / (2a (1 - u^2))
    let mut num = root;
    num[0] += rat(2) * alpha - rat(1);
    // divide by (1 - u^2): multiply by sum u^{2i}
    let mut series = vec![Rat::zero(); len];
    for start in 0..len {
        if num[start].is_zero() {
            continue;
        }
        let mut e = start;
        while e < len {
            series[e] += &num[start];
            e += 2;
        }
    }
    // multiply by u / (2 alpha): moments m_k = [u^{k+1}] C
    let scale = rat(2) * alpha;
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        out.push(&series[k] / &scale);
    }
    Ok(out)
}

/// Closed Kerov sum `sum_{i >= 2} i binom(k, (k-i-1)/2) binom(k', (k'-i-1)/2)`
/// for the Plancherel transition-moment covariance; convention-free oracle.
pub fn kerov_transition_covariance(k: usize, k2: usize) -> Rat {
    closed_kerov_sum(k, k2, 1)
}

/// Closed Kerov sum `sum_{i >= 2} i binom(k, (k-i)/2) binom(k', (k'-i)/2)`
/// for the Plancherel diagram-moment covariance.
pub fn kerov_diagram_covariance(k: usize, k2: usize) -> Rat {
    closed_kerov_sum(k, k2, 0)
}

fn closed_kerov_sum(k: usize, k2: usize, shift: usize) -> Rat {
    let mut total = Rat::zero();
    for i in 2..=(k.max(k2) + 2) {
        let b1 = parity_binomial(k, i + shift);
        let b2 = parity_binomial(k2, i + shift);
        if !b1.is_zero() && !b2.is_zero() {
            total += rat(i as i64) * b1 * b2;
        }
    }
    total
}

/// `binom(k, (k - d)/2)` when `(k - d)` is even and the index lies in
/// `0..=k`; zero otherwise.
fn parity_binomial(k: usize, d: usize) -> Rat {
    if d > k || (k - d) % 2 != 0 {
        return Rat::zero();
    }
    let j = (k - d) / 2;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= BigInt::from(k - i);
        den *= BigInt::from(i + 1);
    }
    Rat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{moments, transition_measure, MomentFlavor};
    use crate::partitions::Partition;
    use crate::ratio;

    fn catalan(m: usize) -> Rat {
        let mut c = Rat::one();
        for i in 0..m {
            c = c * rat(2 * (2 * i as i64 + 1)) / rat(i as i64 + 2);
        }
        c
    }

    #[test]
    fn series_window_discipline() {
        // (z^{-1} + z + z^2 truncated at 3) squared: cutoff moves to 2
        let a = TruncatedSeries::truncated(
            vec![(-1, rat(1)), (1, rat(1)), (2, rat(1))],
            -1,
            3,
        );
        let sq = a.mul(&a);
        assert_eq!(sq.cutoff(), Some(2));
        assert_eq!(sq.coeff(0).unwrap(), rat(2));
        assert!(matches!(
            sq.coeff(2),
            Err(SeriesError::OutOfWindow { exp: 2, .. })
        ));
        // polynomials never truncate
        let p = TruncatedSeries::polynomial(vec![(-1, rat(1)), (1, rat(1))]);
        assert_eq!(p.pow(4).coeff(100).unwrap(), rat(0));
        assert_eq!(p.pow(4).coeff(0).unwrap(), rat(6));
    }

    #[test]
    fn extraction_linearity() {
        let a = TruncatedSeries::truncated(vec![(-2, ratio(1, 3)), (1, rat(2))], -2, 4);
        let b = TruncatedSeries::truncated(vec![(-1, rat(5)), (3, ratio(-2, 7))], -2, 4);
        let combo = a.scale(&ratio(3, 4)).add(&b.scale(&rat(-2)));
        for e in -2..4 {
            assert_eq!(
                combo.coeff(e).unwrap(),
                ratio(3, 4) * a.coeff(e).unwrap() + rat(-2) * b.coeff(e).unwrap()
            );
        }
    }

    #[test]
    fn lln_semicircle() {
        let data = LimitData::plancherel(20);
        let a = lln_moments(&data, 16).unwrap();
        assert_eq!(a[0], rat(1));
        for k in 0..=16usize {
            let expected = if k % 2 == 0 { catalan(k / 2) } else { rat(0) };
            assert_eq!(a[k], expected, "k={k}");
        }
    }

    #[test]
    fn lln_low_moments_for_any_cumulants() {
        // a_0 = 1 and a_2 = c_1 = 1 for arbitrary admissible data
        let data = LimitData::from_cumulants(vec![
            rat(1),
            ratio(2, 3),
            ratio(-1, 2),
            rat(3),
            ratio(5, 7),
            rat(0),
            rat(1),
        ])
        .unwrap();
        let a = lln_moments(&data, 2).unwrap();
        assert_eq!(a[0], rat(1));
        assert_eq!(a[2], rat(1));
        // a_1 = 0: centered
        assert_eq!(a[1], rat(0));
    }

    #[test]
    fn truncation_error_reported() {
        let data = LimitData::plancherel(3);
        assert!(matches!(
            lln_moments(&data, 10),
            Err(SeriesError::Truncation { .. })
        ));
        assert!(matches!(
            multilevel_covariance(&data, &Rat::one(), &Rat::one(), 6, 6),
            Err(SeriesError::Truncation { required: 13, .. })
        ));
    }

    #[test]
    fn clt_matches_kerov_sum() {
        let data = LimitData::plancherel(24);
        let b = clt_covariance(&data, 10).unwrap();
        for k in 1..=10usize {
            for k2 in 1..=10usize {
                assert_eq!(
                    b[k - 1][k2 - 1],
                    kerov_transition_covariance(k, k2),
                    "(k, k') = ({k}, {k2})"
                );
            }
        }
        // b_{1, k'} = 0 under F = 1, Q = 0
        for k2 in 1..=10usize {
            assert!(b[0][k2 - 1].is_zero());
        }
    }

    #[test]
    fn clt_symmetry_with_random_data() {
        let c = vec![rat(1), ratio(1, 2), ratio(-1, 3), ratio(2, 5), rat(1), rat(0), ratio(3, 4), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)];
        let mut d = vec![vec![Rat::zero(); 4]; 4];
        d[1][1] = ratio(1, 2);
        d[1][2] = ratio(-2, 7);
        d[2][1] = ratio(-2, 7);
        d[2][2] = rat(3);
        d[1][3] = rat(1);
        d[3][1] = rat(1);
        d[3][3] = ratio(5, 9);
        let data = LimitData::new(c, d).unwrap();
        let b = clt_covariance(&data, 5).unwrap();
        for k in 0..5 {
            for k2 in 0..5 {
                assert_eq!(b[k][k2], b[k2][k]);
            }
        }
    }

    /// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
    fn min_eigenvalue(mut m: Vec<Vec<f64>>) -> f64 {
        let n = m.len();
        for _ in 0..100 {
            let mut off = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    off += m[i][j] * m[i][j];
                }
            }
            if off < 1e-24 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if m[p][q].abs() < 1e-18 {
                        continue;
                    }
                    let theta = 0.5 * (2.0 * m[p][q]).atan2(m[q][q] - m[p][p]);
                    let (s, c) = theta.sin_cos();
                    for k in 0..n {
                        let (a, b) = (m[p][k], m[q][k]);
                        m[p][k] = c * a - s * b;
                        m[q][k] = s * a + c * b;
                    }
                    for k in 0..n {
                        let (a, b) = (m[k][p], m[k][q]);
                        m[k][p] = c * a - s * b;
                        m[k][q] = s * a + c * b;
                    }
                }
            }
        }
        (0..n).map(|i| m[i][i]).fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn clt_covariance_positive_semidefinite() {
        use num_traits::ToPrimitive;
        // sanity of the eigenvalue helper on a known matrix
        let known = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        assert!((min_eigenvalue(known) - 1.0).abs() < 1e-9);
        let data = LimitData::plancherel(20);
        let b = clt_covariance(&data, 8).unwrap();
        let floats: Vec<Vec<f64>> = b
            .iter()
            .map(|row| row.iter().map(|v| v.to_f64().unwrap()).collect())
            .collect();
        let min = min_eigenvalue(floats);
        assert!(min > -1e-9, "smallest eigenvalue {min}");
    }

    #[test]
    fn multilevel_specializations() {
        let data = LimitData::plancherel(22);
        let a1 = multilevel_moments(&data, &Rat::one(), 8).unwrap();
        let a = lln_moments(&data, 8).unwrap();
        assert_eq!(a1, a);
        let b1 = multilevel_covariance(&data, &Rat::one(), &Rat::one(), 8, 8).unwrap();
        let b = clt_covariance(&data, 8).unwrap();
        assert_eq!(b1, b);
        // rescaled second moment is 1 for every alpha: a_2^alpha = alpha
        for alpha in [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(7, 8)] {
            let m = multilevel_moments(&data, &alpha, 2).unwrap();
            assert_eq!(m[2], alpha, "alpha = {alpha}");
        }
        assert!(multilevel_moments(&data, &rat(2), 2).is_err());
        assert!(multilevel_moments(&data, &rat(0), 2).is_err());
    }

    #[test]
    fn multilevel_covariance_symmetry() {
        let data = LimitData::plancherel(16);
        let a = ratio(1, 3);
        let a2 = ratio(4, 5);
        let b = multilevel_covariance(&data, &a, &a2, 5, 5).unwrap();
        let b_swapped = multilevel_covariance(&data, &a2, &a, 5, 5).unwrap();
        for k in 0..5 {
            for k2 in 0..5 {
                assert_eq!(b[k][k2], b_swapped[k2][k]);
            }
        }
        // b^{1,1}_{1,1} = 0 for F = 1, Q = 0
        let b11 = multilevel_covariance(&data, &Rat::one(), &Rat::one(), 1, 1).unwrap();
        assert!(b11[0][0].is_zero());
    }

    #[test]
    fn diagram_statistics_examples() {
        let data = LimitData::plancherel(26);
        let stats = diagram_statistics(&data, &Rat::one(), &Rat::one(), 10).unwrap();
        for k in 1..=10usize {
            for k2 in 1..=10usize {
                assert_eq!(
                    stats.covariance[k - 1][k2 - 1],
                    kerov_diagram_covariance(k, k2),
                    "(k, k') = ({k}, {k2})"
                );
            }
        }
        // mean at k = 0 is 0 (sigma has total mass zero), and the k = 1
        // mean is minus the area of the level line for any admissible F
        for alpha in [Rat::one(), ratio(1, 2), ratio(1, 4)] {
            let stats = diagram_statistics(&data, &alpha, &Rat::one(), 2).unwrap();
            assert_eq!(stats.mean_first[0], rat(0));
            assert_eq!(stats.mean_first[1], -alpha.clone());
        }
        let bumpy = LimitData::from_cumulants(vec![
            rat(1),
            ratio(1, 3),
            ratio(-2, 5),
            rat(2),
            rat(0),
            rat(0),
            rat(0),
        ])
        .unwrap();
        let stats = diagram_statistics(&bumpy, &ratio(1, 2), &Rat::one(), 2).unwrap();
        assert_eq!(stats.mean_first[0], rat(0));
        assert_eq!(stats.mean_first[1], ratio(-1, 2));
    }

    #[test]
    fn free_cumulant_round_trips() {
        // delta_0: moments (1, 0, 0, ...) -> F = 0
        let m: Vec<Rat> = std::iter::once(Rat::one())
            .chain(std::iter::repeat(Rat::zero()).take(9))
            .collect();
        let c = free_cumulants_from_moments(&m, 6).unwrap();
        assert!(c.iter().all(|x| x.is_zero()));
        // semicircle: Catalan moments -> F = 1
        let m: Vec<Rat> = (0..12)
            .map(|k| if k % 2 == 0 { catalan(k / 2) } else { rat(0) })
            .collect();
        let c = free_cumulants_from_moments(&m, 8).unwrap();
        assert_eq!(c[0], rat(1));
        assert!(c[1..].iter().all(|x| x.is_zero()));
        // symmetric Bernoulli: c = (1, 0, -1, 0, 2, 0, -5, ...)
        let c = bernoulli_free_cumulants(8);
        assert_eq!(
            c,
            vec![rat(1), rat(0), rat(-1), rat(0), rat(2), rat(0), rat(-5), rat(0)]
        );
        // reversion inverts the moment map induced by lln_moments
        let cum = vec![rat(1), ratio(1, 2), ratio(-1, 3), rat(2), rat(0), ratio(1, 7)];
        let mut padded = cum.clone();
        padded.resize(14, Rat::zero());
        let data = LimitData::from_cumulants(padded).unwrap();
        let moms = lln_moments(&data, 8).unwrap();
        let back = free_cumulants_from_moments(&moms, 6).unwrap();
        assert_eq!(back, cum);
    }

    #[test]
    fn thoma_cumulants() {
        // A = B = 0 gives z F(z) = z
        let zero = AtomicMeasure::new(vec![]);
        let c = thoma_limit_cumulants(&zero, &zero, 6);
        assert_eq!(c[0], rat(1));
        assert!(c[1..].iter().all(|x| x.is_zero()));
        // Schur-Weyl limit: A = (1/c^2) delta_c gives c_i = c^{i-1}
        let cval = ratio(2, 3);
        let a = AtomicMeasure::new(vec![(cval.clone(), Rat::one() / (&cval * &cval))]);
        let c = thoma_limit_cumulants(&a, &zero, 6);
        for (i, ci) in c.iter().enumerate() {
            if i == 0 {
                assert_eq!(ci, &rat(1));
            } else {
                assert_eq!(ci, &cval.pow(i as i32), "i={}", i + 1);
            }
        }
        // reflection: a pure-B measure flips the sign of c_k for odd k+1
        let b_only = thoma_limit_cumulants(&zero, &a, 8);
        let a_only = thoma_limit_cumulants(&a, &zero, 8);
        for k in 2..=8usize {
            let expected = if (k + 1) % 2 == 0 {
                a_only[k - 1].clone()
            } else {
                -a_only[k - 1].clone()
            };
            assert_eq!(b_only[k - 1], expected, "k={k}");
        }
    }

    #[test]
    fn square_levels() {
        // alpha = 1: moments of (delta_-1 + delta_1)/2
        let m = square_level_moments(&Rat::one(), 8).unwrap();
        for (k, v) in m.iter().enumerate() {
            let expected = if k % 2 == 0 { rat(1) } else { rat(0) };
            assert_eq!(v, &expected, "k={k}");
        }
        // m_0 = 1 for every alpha
        for alpha in [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(9, 10)] {
            let m = square_level_moments(&alpha, 4).unwrap();
            assert_eq!(m[0], rat(1));
        }
        // alpha = 1/2 is the arcsine law: C = 1/sqrt(z^2 - 1)
        let m = square_level_moments(&ratio(1, 2), 6).unwrap();
        assert_eq!(m[2], ratio(1, 2));
        assert_eq!(m[4], ratio(3, 8));
        assert_eq!(m[6], ratio(5, 16));
        // matches the multilevel pipeline from the Bernoulli free cumulants
        let data = LimitData::from_cumulants(bernoulli_free_cumulants(24)).unwrap();
        for alpha in [ratio(1, 4), ratio(1, 2), ratio(3, 4), Rat::one()] {
            let sq = square_level_moments(&alpha, 8).unwrap();
            let ml = multilevel_moments(&data, &alpha, 8).unwrap();
            assert_eq!(sq, ml, "alpha = {alpha}");
        }
    }

    #[test]
    fn square_level_matches_growth_of_single_box_shape() {
        // the alpha = 1 level moments are the transition moments of the unit
        // square, i.e. of the single-box partition profile
        let m_k = transition_measure(&Partition::new(vec![1]));
        let direct = moments(&m_k, 6, MomentFlavor::Transition);
        let sq = square_level_moments(&Rat::one(), 6).unwrap();
        assert_eq!(sq, direct.values);
    }

    #[test]
    fn bad_limit_data_rejected() {
        assert!(LimitData::from_cumulants(vec![rat(2)]).is_err());
        assert!(LimitData::new(vec![rat(1)], vec![vec![rat(1)]]).is_err());
        let mut d = vec![vec![Rat::zero(); 2]; 2];
        d[0][1] = rat(1);
        assert!(LimitData::new(vec![rat(1)], d).is_err());
    }
}
