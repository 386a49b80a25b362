//! Monte Carlo estimation of height-function fluctuation moments and
//! comparison against conditioned-Gaussian-field predictions.
//!
//! The height function of a growth path integrates exactly against
//! polynomials: `integral x^k H(sqrt(n) x, t) dx = -q_{k+1} / ((k+1) n^{(k+1)/2})`
//! where `q` are the diagram moments of the shape at time `t`. Each field
//! moment is therefore an exact rational per path, centered by the exact
//! ensemble mean, and floating point enters only in the final rescaling by
//! `sqrt(pi)`.
//!
//! Predictions come from two independent pipelines that the acceptance
//! criteria compare: an exact `[z^{-1} w^{-1}]` series extraction
//! ([`predicted_pcov`]) and a numeric double contour integral of the
//! conditioned-field kernel over semicircles ([`cgff_contour_covariance`]).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::measures::diagram_moments;
use crate::samplers::{GrowthModel, GrowthPath};
use crate::series::SeriesError;
use crate::{rat, ratio, Rat};

#[derive(Debug, Error, PartialEq)]
pub enum HarnessError {
    #[error("need at least {required} paths, got {got}")]
    InsufficientPaths { required: usize, got: usize },
    #[error("paths must have at least {required} steps, got {got}")]
    PathTooShort { required: usize, got: usize },
    #[error("alpha must lie in (0, 1], got {0}")]
    AlphaOutOfRange(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One centered height-function moment sample.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMoment {
    pub alpha: Rat,
    pub k: u32,
    pub value: f64,
}

/// Centered field-moment samples for an ensemble, on the grid
/// `alphas x ks`; `samples[path][alpha_idx][k_idx]`.
#[derive(Clone, Debug)]
pub struct FieldMomentSamples {
    pub n: u64,
    pub alphas: Vec<Rat>,
    pub ks: Vec<u32>,
    pub samples: Vec<Vec<Vec<f64>>>,
}

impl FieldMomentSamples {
    pub fn num_paths(&self) -> usize {
        self.samples.len()
    }

    /// All samples of the moment at `(alpha_idx, k_idx)`.
    pub fn series(&self, alpha_idx: usize, k_idx: usize) -> Vec<f64> {
        self.samples
            .iter()
            .map(|p| p[alpha_idx][k_idx])
            .collect()
    }

    /// Empirical covariance of two centered moment series and its standard
    /// error, `sqrt((var_x var_y + cov^2) / (N - 1))`.
    pub fn covariance(&self, a: (usize, usize), b: (usize, usize)) -> (f64, f64) {
        let xs = self.series(a.0, a.1);
        let ys = self.series(b.0, b.1);
        let n = xs.len() as f64;
        let cov = xs.iter().zip(&ys).map(|(x, y)| x * y).sum::<f64>() / (n - 1.0);
        let var_x = xs.iter().map(|x| x * x).sum::<f64>() / (n - 1.0);
        let var_y = ys.iter().map(|y| y * y).sum::<f64>() / (n - 1.0);
        let se = ((var_x * var_y + cov * cov) / (n - 1.0)).sqrt();
        (cov, se)
    }
}

/// Exact per-path field moments from an existing ensemble: the moment at
/// `(alpha, k)` is `sqrt(pi) n^{-(k+1)/2} (q_{k+1} - mean q_{k+1}) / (k+1)`
/// evaluated at time `floor(alpha n)`, centered by the exact ensemble mean.
/// The `k = 0` column is identically zero by the area identity.
pub fn empirical_field_moments(
    paths: &[GrowthPath],
    n: u64,
    alphas: &[Rat],
    ks: &[u32],
) -> Result<FieldMomentSamples, HarnessError> {
    if paths.is_empty() {
        return Err(HarnessError::InsufficientPaths {
            required: 1,
            got: 0,
        });
    }
    for path in paths {
        if (path.steps() as u64) < n {
            return Err(HarnessError::PathTooShort {
                required: n as usize,
                got: path.steps(),
            });
        }
    }
    let times = alpha_times(alphas, n)?;
    let raw: Vec<Vec<Vec<Rat>>> = paths
        .par_iter()
        .map(|path| raw_diagram_moments(path, &times, ks))
        .collect();
    Ok(center_and_scale(raw, n, alphas, ks))
}

/// Streaming ensemble version: samples `count` paths of the model, extracts
/// the exact diagram moments per path and drops the path, then centers.
/// Equivalent to [`empirical_field_moments`] over
/// [`GrowthModel::sample_ensemble`] without storing the ensemble.
pub fn sample_field_moments(
    model: &GrowthModel,
    n: u64,
    count: u64,
    seed: u64,
    alphas: &[Rat],
    ks: &[u32],
) -> Result<FieldMomentSamples, HarnessError> {
    if count == 0 {
        return Err(HarnessError::InsufficientPaths {
            required: 1,
            got: 0,
        });
    }
    let times = alpha_times(alphas, n)?;
    let raw: Vec<Vec<Vec<Rat>>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let path = model.sample(n as usize, seed, i);
            raw_diagram_moments(&path, &times, ks)
        })
        .collect();
    Ok(center_and_scale(raw, n, alphas, ks))
}

fn alpha_times(alphas: &[Rat], n: u64) -> Result<Vec<usize>, HarnessError> {
    alphas
        .iter()
        .map(|a| {
            if !a.is_positive() || a > &Rat::one() {
                return Err(HarnessError::AlphaOutOfRange(a.to_string()));
            }
            let t = (a * rat(n as i64)).floor().to_integer();
            Ok(usize::try_from(&t).expect("time fits usize"))
        })
        .collect()
}

fn raw_diagram_moments(path: &GrowthPath, times: &[usize], ks: &[u32]) -> Vec<Vec<Rat>> {
    let kmax = ks.iter().copied().max().unwrap_or(0) as usize;
    times
        .iter()
        .map(|&t| {
            let q = diagram_moments(&path.shapes[t], kmax + 1);
            ks.iter()
                .map(|&k| q.values[k as usize + 1].clone())
                .collect()
        })
        .collect()
}

fn center_and_scale(
    raw: Vec<Vec<Vec<Rat>>>,
    n: u64,
    alphas: &[Rat],
    ks: &[u32],
) -> FieldMomentSamples {
    let count = raw.len();
    let mut means = vec![vec![Rat::zero(); ks.len()]; alphas.len()];
    for path in &raw {
        for (ai, row) in path.iter().enumerate() {
            for (ki, v) in row.iter().enumerate() {
                means[ai][ki] += v;
            }
        }
    }
    let count_rat = rat(count as i64);
    for row in means.iter_mut() {
        for v in row.iter_mut() {
            *v /= &count_rat;
        }
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let samples: Vec<Vec<Vec<f64>>> = raw
        .into_iter()
        .map(|path| {
            path.into_iter()
                .enumerate()
                .map(|(ai, row)| {
                    row.into_iter()
                        .enumerate()
                        .map(|(ki, q)| {
                            let k = ks[ki] as i32;
                            let centered = (q - &means[ai][ki]).to_f64().unwrap_or(f64::NAN);
                            let scale =
                                sqrt_pi / ((k as f64 + 1.0) * (n as f64).powf((k + 1) as f64 / 2.0));
                            -centered * scale
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    FieldMomentSamples {
        n,
        alphas: alphas.to_vec(),
        ks: ks.to_vec(),
        samples,
    }
}

/// Predicted limiting covariance of the Plancherel height-function moments,
/// as an exact rational multiple of pi:
///
/// `PCov^{alpha,alpha'}_{k,k'} / pi = [z^{-1} w^{-1}] base_z^{k+1} base_w^{k'+1}
///  / ((k+1)(k'+1)) * sum_{i >= 2} i (zw)^{i-1} / t^i`,
///
/// with `base_z = alpha/z + z`, `t = max(alpha, alpha')`.
pub fn predicted_pcov(k: u32, k2: u32, alpha: &Rat, alpha2: &Rat) -> Rat {
    let t = alpha.clone().max(alpha2.clone());
    let mut total = Rat::zero();
    let imax = k.max(k2) as i64 + 2;
    for i in 2..=imax {
        let cz = centered_binomial_coeff(k as i64 + 1, i, alpha);
        if cz.is_zero() {
            continue;
        }
        let cw = centered_binomial_coeff(k2 as i64 + 1, i, alpha2);
        if cw.is_zero() {
            continue;
        }
        total += rat(i) * cz * cw / t.pow(i as i32);
    }
    total / rat((k as i64 + 1) * (k2 as i64 + 1))
}

/// `[z^{-i}] (alpha/z + z)^m = binom(m, (m+i)/2) alpha^{(m+i)/2}` with the
/// usual parity and range constraints.
fn centered_binomial_coeff(m: i64, i: i64, alpha: &Rat) -> Rat {
    let s = m + i;
    if s % 2 != 0 || s < 0 || s / 2 > m {
        return Rat::zero();
    }
    let j = s / 2;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j.min(m - j) {
        num *= BigInt::from(m - t);
        den *= BigInt::from(t + 1);
    }
    Rat::new(num, den) * alpha.pow(j as i32)
}

/// Numeric double contour integral of the conditioned-field kernel
///
/// `G(z,w) = -(1/2pi) ln|(z-w)/(z-conj w)| - (min(t(z),t(w))/pi) Im(1/z) Im(1/w)`
///
/// against `x(z)^k x(w)^{k'} dx(z) dx(w)` over the upper semicircles
/// `|z|^2 = alpha`, `|w|^2 = alpha'`, normalized so the value equals the
/// rational part of the series prediction (i.e. `PCov / pi`, directly
/// comparable to [`predicted_pcov`]).
///
/// Two conventions are pinned here and cross-checked against the series
/// pipeline over the whole test grid:
///
/// * the second kernel term *subtracts* the first angular mode: with
///   `Im(1/z) = -Im(z)/|z|^2` it is exactly the `m = 1` Fourier content of
///   the log term, and removing it is the conditioning (the field then has
///   zero covariance against constants, matching the identically vanishing
///   `k = 0` height moments);
/// * on `|z|^2 = alpha` one has `alpha/z + z = 2 x(z)`, so rewriting the
///   `[z^{-1}w^{-1}]` extraction in `x`-coordinates picks up
///   `2^{k+1} 2^{k'+1}`; that factor and the overall `pi` are divided out.
///
/// Gauss–Legendre in the angles; the two circles use different node counts
/// so the logarithmic singularity at `alpha = alpha'` is never evaluated at
/// zero distance.
pub fn cgff_contour_covariance(
    k: u32,
    k2: u32,
    alpha: f64,
    alpha2: f64,
    quadrature_nodes: usize,
) -> f64 {
    let nodes = quadrature_nodes.max(64);
    let (t1, w1) = gauss_legendre(nodes, 0.0, std::f64::consts::PI);
    let (t2, w2) = gauss_legendre(nodes + 9, 0.0, std::f64::consts::PI);
    let r1 = alpha.sqrt();
    let r2 = alpha2.sqrt();
    let min_t = alpha.min(alpha2);
    let mut total = 0.0;
    for (a, wa) in t1.iter().zip(&w1) {
        let (sa, ca) = a.sin_cos();
        let z = (r1 * ca, r1 * sa);
        let xz = z.0;
        let dxz = -r1 * sa;
        let im_inv_z = -sa / r1;
        for (b, wb) in t2.iter().zip(&w2) {
            let (sb, cb) = b.sin_cos();
            let w = (r2 * cb, r2 * sb);
            let xw = w.0;
            let dxw = -r2 * sb;
            let im_inv_w = -sb / r2;
            let num2 = (z.0 - w.0).powi(2) + (z.1 - w.1).powi(2);
            let den2 = (z.0 - w.0).powi(2) + (z.1 + w.1).powi(2);
            let g = -(num2 / den2).ln() / (4.0 * std::f64::consts::PI)
                - min_t * im_inv_z * im_inv_w / std::f64::consts::PI;
            total += wa * wb * xz.powi(k as i32) * xw.powi(k2 as i32) * g * dxz * dxw;
        }
    }
    total * 2f64.powi(k as i32 + k2 as i32 + 2) / std::f64::consts::PI
}

/// Gauss–Legendre nodes and weights on `[a, b]` by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // initial guess: Chebyshev-like
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative by recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    let half = (b - a) / 2.0;
    let mid = (b + a) / 2.0;
    (
        nodes.iter().map(|x| mid + half * x).collect(),
        weights.iter().map(|w| w * half).collect(),
    )
}

/// Exact series check of the orthogonality behind the conditioned-field
/// projection: for `1 <= k <= kmax` and a grid of rational levels,
///
/// `[z^{-1} w^{-1}] (alpha/z + z)^k (alpha'/w + w) (t/(t - zw)^2 - 1/t) = 0`
///
/// with `t = max(alpha, alpha')`, and the `k = 0` diagonal term reproduces
/// the `min(alpha, alpha')` correction of the field kernel. Contributions
/// beyond the truncation window are impossible: the `w`-factor only reaches
/// exponents `+-1` while `(zw)^i` needs `w^{-1-i}` with `i >= 1`.
pub fn conditioning_projection_check(kmax: u32) -> bool {
    use crate::series::{BivariateSeries, TruncatedSeries};
    let grid = [ratio(1, 4), ratio(1, 2), ratio(3, 4), Rat::one()];
    let imax = kmax as i64 + 3;
    for alpha in &grid {
        for alpha2 in &grid {
            let t = alpha.clone().max(alpha2.clone());
            // t/(t - zw)^2 - 1/t = sum_{i >= 1} (i+1) (zw)^i / t^{i+1}
            let kernel = BivariateSeries::truncated(
                (1..=imax)
                    .map(|i| (i, i, rat(i + 1) / t.pow(i as i32 + 1)))
                    .collect(),
                (1, 1),
                (imax + 1, imax + 1),
            );
            let w_factor = TruncatedSeries::polynomial(vec![
                (-1, alpha2.clone()),
                (1, Rat::one()),
            ]);
            let z_base = TruncatedSeries::polynomial(vec![
                (-1, alpha.clone()),
                (1, Rat::one()),
            ]);
            // cross terms vanish for every k >= 1
            let mut z_pow = z_base.clone();
            for _ in 1..=kmax {
                let mut total = Rat::zero();
                for i in 1..=imax {
                    let kzw = kernel.coeff(i, i).expect("within window");
                    total += kzw
                        * z_pow.coeff(-1 - i).expect("polynomial")
                        * w_factor.coeff(-1 - i).expect("polynomial");
                }
                if !total.is_zero() {
                    return false;
                }
                z_pow = z_pow.mul(&z_base);
            }
            // k = 0 diagonal: the full kernel residue reproduces the
            // min(alpha, alpha') correction, i.e. the t/(t-zw)^2 part equals
            // the 1/t part, both giving alpha alpha' / t
            let z_lin = TruncatedSeries::polynomial(vec![
                (-1, alpha.clone()),
                (1, Rat::one()),
            ]);
            let mut lhs = Rat::zero();
            for i in 0..=imax {
                let kzw = rat(i + 1) / t.pow(i as i32 + 1);
                lhs += kzw
                    * z_lin.coeff(-1 - i).expect("polynomial")
                    * w_factor.coeff(-1 - i).expect("polynomial");
            }
            if lhs != alpha.clone().min(alpha2.clone()) {
                return false;
            }
        }
    }
    true
}

/// Documented rescaling for Gelfand fluctuations: they are `sqrt(2)` times
/// the Plancherel ones, so every predicted covariance is doubled.
pub fn gelfand_covariance_factor() -> Rat {
    rat(2)
}

/// Models with a computable level-line Stieltjes transform, for limit-shape
/// evaluation.
#[derive(Clone, Debug)]
pub enum LevelModel {
    /// `F = 1`; level lines are scaled Vershik–Kerov–Logan–Shepp curves.
    Plancherel,
    /// Uniform tableaux of square shape; closed-form `C_alpha`.
    Square,
    /// Any family given by its free cumulants (truncated); the Stieltjes
    /// transform is solved numerically from `1/C + alpha C F(alpha C) = z`
    /// by Newton continuation. Reliable only while the transform stays in
    /// the convergence domain of the truncated series (true for polynomial
    /// `F`; the square shape needs its closed form instead).
    FreeCumulants(Vec<Rat>),
}

/// Evaluates the limit-shape profile `omega(x)` of the level line at
/// `alpha` on the given grid: Stieltjes inversion of the log of the
/// transition transform at `z = x + i eps` with Richardson extrapolation,
/// then cumulative integration of the density.
///
/// The grid must be sorted increasing and should start below the support;
/// outside the support the profile returns to `|x|`.
pub fn limit_shape(model: &LevelModel, alpha: &Rat, x_grid: &[f64]) -> Vec<f64> {
    let a = alpha.to_f64().expect("alpha fits f64");
    let eps = 1e-6;
    let density = |x: f64| -> f64 {
        let f_eps = im_log_transform(model, a, x, eps);
        let f_2eps = im_log_transform(model, a, x, 2.0 * eps);
        // Richardson in eps^2 for the Poisson kernel
        let im = (4.0 * f_eps - f_2eps) / 3.0;
        -im / std::f64::consts::PI
    };
    // integrate omega' = 2 sigma' + sgn(x) rather than sigma' itself: the
    // sgn jump and the sigma' jump at 0 cancel, so the integrand is
    // continuous there and the trapezoid rule keeps its accuracy
    let omega_prime = |x: f64| 2.0 * density(x) + sign_zero(x);
    let mut omega = x_grid[0].abs();
    let mut prev_x = x_grid[0];
    let mut prev_d = omega_prime(prev_x);
    let mut out = Vec::with_capacity(x_grid.len());
    out.push(omega);
    for &x in &x_grid[1..] {
        let d = omega_prime(x);
        omega += 0.5 * (d + prev_d) * (x - prev_x);
        prev_d = d;
        prev_x = x;
        out.push(omega);
    }
    out
}

fn sign_zero(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `Im W(x + i eps)` where `W(z) = -Ln(z C_alpha(z))` is the Stieltjes
/// transform of the diagram measure of the level line.
fn im_log_transform(model: &LevelModel, alpha: f64, x: f64, eps: f64) -> f64 {
    let z = (x, eps);
    let c = match model {
        LevelModel::Plancherel => {
            // solves 1/C + alpha C = z: C = (z - sqrt(z^2 - 4 alpha)) / (2 alpha)
            let disc = c_sub(c_mul(z, z), (4.0 * alpha, 0.0));
            let root = c_sqrt_branch(disc, z);
            c_scale(c_sub(z, root), 1.0 / (2.0 * alpha))
        }
        LevelModel::Square => {
            let disc = c_add(c_mul(z, z), (4.0 * alpha * alpha - 4.0 * alpha, 0.0));
            let root = c_sqrt_branch(disc, z);
            let num = c_add(c_scale(z, 2.0 * alpha - 1.0), root);
            let den = c_scale(c_sub(c_mul(z, z), (1.0, 0.0)), 2.0 * alpha);
            c_div(num, den)
        }
        LevelModel::FreeCumulants(c) => {
            let coeffs: Vec<f64> = c.iter().map(|v| v.to_f64().unwrap()).collect();
            stieltjes_newton(&coeffs, alpha, z)
        }
    };
    let zc = c_mul(z, c);
    // W = -Ln(z C); Im of the principal log
    -(zc.1.atan2(zc.0))
}

/// Newton solve of `1/C + alpha C F(alpha C) = z` for the branch `C ~ 1/z`,
/// with continuation in the imaginary part: near the real axis `1/z` is a
/// useless starting point inside the support, so the solution is tracked
/// down from `Im z = 4` where the expansion at infinity is reliable.
fn stieltjes_newton(coeffs: &[f64], alpha: f64, z: (f64, f64)) -> (f64, f64) {
    let f_eval = |w: (f64, f64)| -> (f64, f64) {
        // F(w) = sum c_i w^{i-1}, Horner
        let mut acc = (0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = c_add(c_mul(acc, w), (*c, 0.0));
        }
        acc
    };
    let f_deriv = |w: (f64, f64)| -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for (i, c) in coeffs.iter().enumerate().skip(1).rev() {
            acc = c_add(c_mul(acc, w), (*c * i as f64, 0.0));
        }
        acc
    };
    let newton = |zt: (f64, f64), start: (f64, f64)| -> (f64, f64) {
        let mut c = start;
        for _ in 0..100 {
            let ac = c_scale(c, alpha);
            let fv = f_eval(ac);
            let g = c_add(c_div((1.0, 0.0), c), c_mul(ac, fv));
            let resid = c_sub(g, zt);
            if resid.0.abs() + resid.1.abs() < 1e-13 {
                break;
            }
            let gp = c_add(
                c_scale(c_div((1.0, 0.0), c_mul(c, c)), -1.0),
                c_add(
                    c_scale(fv, alpha),
                    c_scale(c_mul(c, f_deriv(ac)), alpha * alpha),
                ),
            );
            c = c_sub(c, c_div(resid, gp));
        }
        c
    };
    let mut im = 4.0_f64;
    let mut c = c_div((1.0, 0.0), (z.0, im));
    while im > z.1 {
        c = newton((z.0, im), c);
        im *= 0.5;
        if im < z.1 {
            im = z.1;
        }
    }
    newton(z, c)
}

// small complex helpers on (re, im) pairs

fn c_add(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 + b.0, a.1 + b.1)
}

fn c_sub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}

fn c_mul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn c_scale(a: (f64, f64), s: f64) -> (f64, f64) {
    (a.0 * s, a.1 * s)
}

fn c_div(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

/// Principal square root steered to the branch aligned with `dir`
/// (the one behaving like `dir` at infinity).
fn c_sqrt_branch(a: (f64, f64), dir: (f64, f64)) -> (f64, f64) {
    let r = (a.0 * a.0 + a.1 * a.1).sqrt();
    let re = ((r + a.0) / 2.0).sqrt();
    let im = ((r - a.0) / 2.0).sqrt() * a.1.signum();
    let root = (re, im);
    if root.0 * dir.0 + root.1 * dir.1 < 0.0 {
        (-root.0, -root.1)
    } else {
        root
    }
}

/// One compared covariance entry of a report.
#[derive(Clone, Debug)]
pub struct CovarianceEntry {
    pub alpha: Rat,
    pub k: u32,
    pub alpha2: Rat,
    pub k2: u32,
    pub empirical: f64,
    pub std_error: f64,
    pub predicted: f64,
}

/// Comparison of empirical field-moment covariances against predictions.
#[derive(Clone, Debug)]
pub struct CovarianceReport {
    pub model: String,
    pub n: u64,
    pub paths: u64,
    pub entries: Vec<CovarianceEntry>,
}

impl CovarianceReport {
    /// Builds the full grid report: empirical covariance with standard
    /// error for every pair of (alpha, k) cells, and the exact Plancherel
    /// prediction `pi * PCov`, scaled by `factor` (1 for Plancherel, 2 for
    /// Gelfand).
    pub fn from_samples(
        model: &str,
        samples: &FieldMomentSamples,
        factor: &Rat,
    ) -> CovarianceReport {
        let mut entries = Vec::new();
        for ai in 0..samples.alphas.len() {
            for ki in 0..samples.ks.len() {
                for aj in 0..samples.alphas.len() {
                    for kj in 0..samples.ks.len() {
                        if (aj, kj) < (ai, ki) {
                            continue;
                        }
                        let (emp, se) = samples.covariance((ai, ki), (aj, kj));
                        let pred = predicted_pcov(
                            samples.ks[ki],
                            samples.ks[kj],
                            &samples.alphas[ai],
                            &samples.alphas[aj],
                        ) * factor;
                        entries.push(CovarianceEntry {
                            alpha: samples.alphas[ai].clone(),
                            k: samples.ks[ki],
                            alpha2: samples.alphas[aj].clone(),
                            k2: samples.ks[kj],
                            empirical: emp,
                            std_error: se,
                            predicted: pred.to_f64().unwrap() * std::f64::consts::PI,
                        });
                    }
                }
            }
        }
        CovarianceReport {
            model: model.to_string(),
            n: samples.n,
            paths: samples.num_paths() as u64,
            entries,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "a": e.alpha.to_string(),
                    "k": e.k,
                    "a2": e.alpha2.to_string(),
                    "k2": e.k2,
                    "emp": e.empirical,
                    "se": e.std_error,
                    "pred": e.predicted,
                })
            })
            .collect();
        serde_json::json!({
            "model": self.model,
            "n": self.n,
            "paths": self.paths,
            "entries": entries,
        })
    }
}

/// The centered height field of one ensemble member: for every diagonal `x`
/// and time `t`, `H_path(x, t) - mean over the ensemble of H(x, t)`.
pub fn centered_height_field(
    paths: &[GrowthPath],
    member: usize,
) -> Result<Vec<(i64, usize, f64)>, HarnessError> {
    if paths.is_empty() {
        return Err(HarnessError::InsufficientPaths {
            required: 1,
            got: 0,
        });
    }
    let steps = paths.iter().map(|p| p.steps()).min().unwrap();
    let lo = paths
        .iter()
        .map(|p| p.final_shape().profile().window().0)
        .min()
        .unwrap();
    let hi = paths
        .iter()
        .map(|p| p.final_shape().profile().window().1)
        .max()
        .unwrap();
    let count = paths.len() as f64;
    let mut cells = Vec::new();
    for t in 0..=steps {
        let member_prof = paths[member].shapes[t].profile();
        for x in lo..=hi {
            let mean: f64 = paths
                .iter()
                .map(|p| p.shapes[t].profile().height(x) as f64)
                .sum::<f64>()
                / count;
            cells.push((x, t, member_prof.height(x) as f64 - mean));
        }
    }
    Ok(cells)
}

/// CSV export of a `(x, t) -> value` field: columns `x, t, value`.
pub fn field_csv(cells: &[(i64, usize, f64)]) -> String {
    let mut out = String::from("x,t,value\n");
    for (x, t, v) in cells {
        out.push_str(&format!("{x},{t},{v:.6}\n"));
    }
    out
}

/// Renders a `(x, t) -> value` field as a self-contained SVG heatmap on a
/// fixed 800x600 canvas with a fixed blue–white–red diverging ramp,
/// symmetric about zero. Deterministic output for snapshot testing.
pub fn svg_heatmap(cells: &[(i64, usize, f64)], comment: &str) -> String {
    let (width, height) = (800.0, 600.0);
    let xs: Vec<i64> = cells.iter().map(|c| c.0).collect();
    let ts: Vec<usize> = cells.iter().map(|c| c.1).collect();
    let (x_lo, x_hi) = (
        xs.iter().copied().min().unwrap_or(0),
        xs.iter().copied().max().unwrap_or(1),
    );
    let t_hi = ts.iter().copied().max().unwrap_or(1);
    let vmax = cells
        .iter()
        .map(|c| c.2.abs())
        .fold(1e-12_f64, f64::max);
    let cw = width / (x_hi - x_lo + 1) as f64;
    let ch = height / (t_hi + 1) as f64;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!("<!-- {} -->\n", comment.replace("--", "- -")));
    for &(x, t, v) in cells {
        let u = (v / vmax).clamp(-1.0, 1.0);
        // diverging ramp: blue (-1) to white (0) to red (+1)
        let (r, g, b) = if u >= 0.0 {
            (255, (255.0 * (1.0 - u)) as u8, (255.0 * (1.0 - u)) as u8)
        } else {
            ((255.0 * (1.0 + u)) as u8, (255.0 * (1.0 + u)) as u8, 255)
        };
        let px = (x - x_lo) as f64 * cw;
        let py = height - (t + 1) as f64 * ch;
        out.push_str(&format!(
            "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"rgb({},{},{})\"/>\n",
            px, py, cw, ch, r, g, b
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Upper-tail probability of the chi-square distribution with `df` degrees
/// of freedom: the regularized upper incomplete gamma `Q(df/2, x/2)`.
pub fn chi_square_sf(x: f64, df: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    regularized_gamma_q(df / 2.0, x / 2.0)
}

fn regularized_gamma_q(a: f64, x: f64) -> f64 {
    if x < a + 1.0 {
        1.0 - gamma_p_series(a, x)
    } else {
        gamma_q_contfrac(a, x)
    }
}

fn gamma_p_series(a: f64, x: f64) -> f64 {
    let mut sum = 1.0 / a;
    let mut term = sum;
    let mut ap = a;
    for _ in 0..500 {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * 1e-15 {
            break;
        }
    }
    sum * (-x + a * x.ln() - ln_gamma(a)).exp()
}

fn gamma_q_contfrac(a: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-15 {
            break;
        }
    }
    (-x + a * x.ln() - ln_gamma(a)).exp() * h
}

fn ln_gamma(x: f64) -> f64 {
    // Lanczos, g = 7
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// One-sample chi-square statistic against exact class probabilities,
/// pooling classes with tiny expectation into the largest cell.
pub fn chi_square_statistic(observed: &[u64], expected: &[f64]) -> (f64, usize) {
    assert_eq!(observed.len(), expected.len());
    let total: u64 = observed.iter().sum();
    let mut stat = 0.0;
    let mut df = 0usize;
    for (o, e) in observed.iter().zip(expected) {
        let exp_count = e * total as f64;
        if exp_count < 1e-9 {
            continue;
        }
        stat += (*o as f64 - exp_count).powi(2) / exp_count;
        df += 1;
    }
    (stat, df.saturating_sub(1))
}

/// Two-sample chi-square statistic for equal-size categorical samples:
/// `sum (o1 - o2)^2 / (o1 + o2)` over classes observed at least once.
pub fn two_sample_chi_square(a: &[u64], b: &[u64]) -> (f64, usize) {
    assert_eq!(a.len(), b.len());
    let mut stat = 0.0;
    let mut df = 0usize;
    for (x, y) in a.iter().zip(b) {
        let s = x + y;
        if s == 0 {
            continue;
        }
        stat += (*x as f64 - *y as f64).powi(2) / s as f64;
        df += 1;
    }
    (stat, df.saturating_sub(1))
}
