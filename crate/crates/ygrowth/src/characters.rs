//! Irreducible characters of the symmetric group and the probability
//! distributions on partitions they induce.
//!
//! Characters are computed by the Murnaghan–Nakayama border-strip recursion
//! with memoization. A distribution on partitions of `n` is equivalently a
//! central functional `M_rho` on conjugacy classes (its "associated
//! character"), and the two directions of that correspondence are
//! [`m_rho`] and [`thoma_induced`]'s Fourier inversion.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cumulants;
use crate::partitions::{dim_syt, enumerate_partitions, factorial, Partition};
use crate::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("character requires |lambda| = |mu|, got {0} and {1}")]
    SizeMismatch(u64, u64),
    #[error("invalid Thoma parameters: {0}")]
    BadThoma(String),
    #[error("degree {0} exceeds the table limit {1}")]
    DegreeTooLarge(u64, u64),
    #[error("cycles of total length {0} do not fit in S_{1}")]
    CyclesDoNotFit(u64, u64),
}

/// Practical ceiling for full character-table work (the table for `n` has
/// `p(n)^2` entries and each evaluation recurses through subdiagrams).
pub const MAX_TABLE_N: u64 = 14;

/// Irreducible character `chi_lambda` evaluated on the conjugacy class `mu`,
/// via the Murnaghan–Nakayama rule. Requires `|lambda| = |mu|`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt, CharacterError> {
    if lambda.size() != mu.size() {
        return Err(CharacterError::SizeMismatch(lambda.size(), mu.size()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, mu.parts(), &mut memo))
}

fn mn_rec(
    lambda: &Partition,
    remaining: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>,
) -> BigInt {
    if remaining.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.parts().to_vec(), remaining.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip_len = remaining[0];
    let rest = &remaining[1..];
    let mut total = BigInt::zero();
    for (smaller, height) in border_strip_removals(lambda, strip_len) {
        let sign = if height % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        total += sign * mn_rec(&smaller, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// All ways to remove a border strip of `len` boxes from `lambda`, returning
/// the smaller shape and the strip height (#rows spanned - 1).
fn border_strip_removals(lambda: &Partition, len: u32) -> Vec<(Partition, u32)> {
    // border strips correspond to beta-set moves: with b_i = lambda_i + l - i,
    // removing a strip of length `len` means replacing some b_i by b_i - len,
    // provided the result stays distinct and nonnegative.
    let l = lambda.length();
    let beta: Vec<i64> = (0..l)
        .map(|i| lambda.parts()[i] as i64 + (l as i64 - 1 - i as i64))
        .collect();
    let mut out = Vec::new();
    for i in 0..l {
        let target = beta[i] - len as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        // height = number of beta entries jumped over
        let height = beta.iter().filter(|&&b| target < b && b < beta[i]).count() as u32;
        let mut parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (l as i64 - 1 - j as i64)) as u32)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push((Partition::new(parts), height));
    }
    out
}

/// Full character table of `S_n`: values[(lambda, mu)] = chi_lambda(mu).
pub struct CharacterTable {
    pub n: u64,
    pub values: BTreeMap<(Partition, Partition), BigInt>,
}

impl CharacterTable {
    pub fn build(n: u64) -> Result<Self, CharacterError> {
        if n > MAX_TABLE_N {
            return Err(CharacterError::DegreeTooLarge(n, MAX_TABLE_N));
        }
        let shapes = enumerate_partitions(n);
        let mut values = BTreeMap::new();
        for lam in &shapes {
            for mu in &shapes {
                values.insert((lam.clone(), mu.clone()), character(lam, mu)?);
            }
        }
        Ok(CharacterTable { n, values })
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.values[&(lambda.clone(), mu.clone())]
    }

    /// Column orthogonality: `sum_lambda chi(mu) chi(mu') |class mu| = n! [mu = mu']`.
    pub fn column_orthogonality_holds(&self) -> bool {
        let shapes = enumerate_partitions(self.n);
        let nf = factorial(self.n);
        for mu in &shapes {
            for mu2 in &shapes {
                let mut s = BigInt::zero();
                for lam in &shapes {
                    s += self.get(lam, mu) * self.get(lam, mu2);
                }
                s *= class_size(mu);
                let expected = if mu == mu2 { nf.clone() } else { BigInt::zero() };
                if s != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Size of the conjugacy class with cycle type `mu` in `S_{|mu|}`:
/// `n! / (prod i^{m_i} m_i!)`.
pub fn class_size(mu: &Partition) -> BigInt {
    let n = mu.size();
    let mut z = BigInt::one();
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (i, m) in mult {
        for _ in 0..m {
            z *= BigInt::from(i);
        }
        z *= factorial(m);
    }
    factorial(n) / z
}

/// A probability distribution on partitions of `n` with exact rational
/// weights.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    pub n: u64,
    probs: BTreeMap<Partition, Rat>,
}

impl Distribution {
    pub fn new(n: u64, probs: BTreeMap<Partition, Rat>) -> Self {
        debug_assert!(probs.keys().all(|lam| lam.size() == n));
        debug_assert!(probs.values().all(|p| !p.is_negative()));
        debug_assert_eq!(probs.values().cloned().sum::<Rat>(), Rat::one());
        Distribution { n, probs }
    }

    pub fn prob(&self, lambda: &Partition) -> Rat {
        self.probs.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.probs.iter()
    }

    pub fn total_mass(&self) -> Rat {
        self.probs.values().cloned().sum()
    }

    /// JSON dump: `{"n": n, "probs": [[parts, num, den], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let probs: Vec<serde_json::Value> = self
            .probs
            .iter()
            .map(|(lam, p)| {
                serde_json::json!([
                    lam.parts().to_vec(),
                    p.numer().to_string(),
                    p.denom().to_string()
                ])
            })
            .collect();
        serde_json::json!({"n": self.n, "probs": probs})
    }
}

/// The associated character `M_rho` of a distribution, evaluated on the
/// conjugacy class `mu` (given without fixed points, or with them — ones are
/// dropped). Classes that do not fit in `S_n` evaluate to 0 by the standard
/// extension.
pub fn m_rho(rho: &Distribution, mu: &Partition) -> Rat {
    let reduced: Vec<u32> = mu.parts().iter().copied().filter(|&p| p >= 2).collect();
    let core = Partition::new(reduced);
    if core.size() > rho.n {
        return Rat::zero();
    }
    // pad with fixed points up to n
    let mut padded: Vec<u32> = core.parts().to_vec();
    padded.extend(std::iter::repeat(1).take((rho.n - core.size()) as usize));
    let padded = Partition::new(padded);
    let mut total = Rat::zero();
    for (lam, p) in rho.support() {
        if p.is_zero() {
            continue;
        }
        let chi = character(lam, &padded).expect("sizes match");
        let dim = BigInt::from(dim_syt(lam));
        total += p * Rat::new(chi, dim);
    }
    total
}

/// Plancherel measure: `rho(lambda) = dim(lambda)^2 / n!`.
pub fn plancherel(n: u64) -> Distribution {
    let nf = factorial(n);
    let probs = enumerate_partitions(n)
        .into_iter()
        .map(|lam| {
            let d = BigInt::from(dim_syt(&lam));
            let p = Rat::new(&d * &d, nf.clone());
            (lam, p)
        })
        .collect();
    Distribution::new(n, probs)
}

/// Number of involutions in `S_n`, by `I_n = I_{n-1} + (n-1) I_{n-2}`.
pub fn involution_count(n: u64) -> BigInt {
    let mut prev2 = BigInt::one(); // I_0
    let mut prev1 = BigInt::one(); // I_1
    if n == 0 {
        return prev2;
    }
    for m in 2..=n {
        let cur = &prev1 + BigInt::from(m - 1) * &prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    prev1
}

/// Gelfand measure: `rho(lambda) = dim(lambda) / I_n`.
pub fn gelfand(n: u64) -> Distribution {
    let i_n = involution_count(n);
    let probs = enumerate_partitions(n)
        .into_iter()
        .map(|lam| {
            let d = BigInt::from(dim_syt(&lam));
            (lam, Rat::new(d, i_n.clone()))
        })
        .collect();
    Distribution::new(n, probs)
}

/// Thoma parameters: finite nonincreasing nonnegative rational row rates
/// `alpha` and column rates `beta` with `sum alpha + sum beta <= 1`; the
/// Plancherel rate is `gamma = 1 - sum alpha - sum beta`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThomaParams {
    alpha: Vec<Rat>,
    beta: Vec<Rat>,
}

impl ThomaParams {
    pub fn new(alpha: Vec<Rat>, beta: Vec<Rat>) -> Result<Self, CharacterError> {
        for list in [&alpha, &beta] {
            if list.iter().any(|x| x.is_negative() || x > &Rat::one()) {
                return Err(CharacterError::BadThoma("entries must lie in [0, 1]".into()));
            }
            if list.windows(2).any(|w| w[0] < w[1]) {
                return Err(CharacterError::BadThoma("entries must be nonincreasing".into()));
            }
        }
        let total: Rat = alpha.iter().chain(beta.iter()).cloned().sum();
        if total > Rat::one() {
            return Err(CharacterError::BadThoma(
                "sum of alpha and beta exceeds 1".into(),
            ));
        }
        Ok(ThomaParams { alpha, beta })
    }

    /// The pure-Plancherel point `gamma = 1`.
    pub fn plancherel_point() -> Self {
        ThomaParams {
            alpha: Vec::new(),
            beta: Vec::new(),
        }
    }

    pub fn alpha(&self) -> &[Rat] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rat] {
        &self.beta
    }

    pub fn gamma(&self) -> Rat {
        Rat::one() - self.alpha.iter().chain(self.beta.iter()).cloned().sum::<Rat>()
    }
}

/// Extreme character value on the class `mu`:
/// `M(mu) = prod over cycle lengths k >= 2 of (sum alpha_i^k + (-1)^{k-1} sum beta_i^k)`.
pub fn thoma_character(upsilon: &ThomaParams, mu: &Partition) -> Rat {
    let mut val = Rat::one();
    for &k in mu.parts().iter().filter(|&&k| k >= 2) {
        let pa: Rat = upsilon.alpha.iter().map(|a| a.pow(k as i32)).sum();
        let pb: Rat = upsilon.beta.iter().map(|b| b.pow(k as i32)).sum();
        let signed_pb = if k % 2 == 1 { pb } else { -pb };
        val *= pa + signed_pb;
    }
    val
}

/// Distribution on partitions of `n` induced by an extreme character, via
/// Fourier inversion:
/// `rho(lambda) = dim(lambda) * sum_mu (|class mu| / n!) M(mu) chi_lambda(mu)`.
pub fn thoma_induced(n: u64, upsilon: &ThomaParams) -> Result<Distribution, CharacterError> {
    if n > MAX_TABLE_N {
        return Err(CharacterError::DegreeTooLarge(n, MAX_TABLE_N));
    }
    let shapes = enumerate_partitions(n);
    let nf = factorial(n);
    let mut probs = BTreeMap::new();
    for lam in &shapes {
        let mut total = Rat::zero();
        for mu in &shapes {
            let m = thoma_character(upsilon, mu);
            if m.is_zero() {
                continue;
            }
            let chi = character(lam, mu)?;
            total += Rat::new(class_size(mu), nf.clone()) * m * Rat::from(chi);
        }
        let p = Rat::from(BigInt::from(dim_syt(lam))) * total;
        if !p.is_zero() {
            probs.insert(lam.clone(), p);
        }
    }
    Ok(Distribution::new(n, probs))
}

/// Schur–Weyl measure with `D` letters, as the distribution induced by the
/// extreme character with `alpha = (1/D, ..., 1/D)`.
pub fn schur_weyl(n: u64, d: u64) -> Result<Distribution, CharacterError> {
    if d == 0 {
        return Err(CharacterError::BadThoma("D must be >= 1".into()));
    }
    let alpha = vec![Rat::new(BigInt::one(), BigInt::from(d)); d as usize];
    let upsilon = ThomaParams::new(alpha, Vec::new())?;
    thoma_induced(n, &upsilon)
}

/// An exact value of the form `mantissa * n^{half_power/2}`; log-derivatives
/// of the partition generating function carry half-integer powers of `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledValue {
    pub mantissa: Rat,
    pub half_power: u32,
}

impl ScaledValue {
    /// Normalizes so that `half_power` is 0 or 1: even powers of sqrt(n)
    /// fold into the mantissa.
    pub fn normalized(mut self, n: u64) -> Self {
        let whole = self.half_power / 2;
        if whole > 0 {
            self.mantissa *= Rat::from(BigInt::from(n).pow(whole));
            self.half_power %= 2;
        }
        self
    }

    pub fn to_f64(&self, n: u64) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        m * (n as f64).powf(self.half_power as f64 / 2.0)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }
}

/// Mixed partial derivative of the log of the partition generating
/// function at the origin, indexed by the multiset `ks` of cycle lengths:
/// equals `n^{sum (k_j - 1) / 2}` times the permutation-cumulant of disjoint
/// cycles of those lengths under `M_rho`.
///
/// Repetitions in `ks` are handled by the cumulant itself; no extra
/// factorials are applied, so the returned value is exactly the scaled
/// cumulant of the multiset.
pub fn young_log_derivative(rho: &Distribution, ks: &[u32]) -> Result<ScaledValue, CharacterError> {
    let total: u64 = ks.iter().map(|&k| k as u64).sum();
    if total > rho.n {
        return Err(CharacterError::CyclesDoNotFit(total, rho.n));
    }
    let sigmas: Vec<Partition> = ks
        .iter()
        .map(|&k| {
            if k >= 2 {
                Partition::new(vec![k])
            } else {
                Partition::empty()
            }
        })
        .collect();
    let kappa = cumulants::permutation_cumulant(|mu| m_rho(rho, mu), &sigmas);
    let half_power: u32 = ks.iter().map(|&k| k - 1).sum();
    Ok(ScaledValue {
        mantissa: kappa,
        half_power,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn character_examples() {
        // identity class gives the dimension
        for n in 1..=6u64 {
            let ones = p(&vec![1; n as usize]);
            for lam in enumerate_partitions(n) {
                assert_eq!(
                    character(&lam, &ones).unwrap(),
                    BigInt::from(dim_syt(&lam))
                );
            }
        }
        // trivial representation is 1 on every class
        for mu in enumerate_partitions(5) {
            assert_eq!(character(&p(&[5]), &mu).unwrap(), BigInt::one());
        }
        // sign representation is the parity of the class
        for mu in enumerate_partitions(5) {
            let parity: u32 = mu.parts().iter().map(|&k| k - 1).sum();
            let expected = if parity % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                character(&p(&[1, 1, 1, 1, 1]), &mu).unwrap(),
                BigInt::from(expected)
            );
        }
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert!(character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn table_orthogonality() {
        for n in 1..=7u64 {
            let table = CharacterTable::build(n).unwrap();
            assert!(table.column_orthogonality_holds(), "n={n}");
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p(&[1, 1, 1])), BigInt::one());
        assert_eq!(class_size(&p(&[2, 1])), BigInt::from(3));
        assert_eq!(class_size(&p(&[3])), BigInt::from(2));
        let total: BigInt = enumerate_partitions(6).iter().map(class_size).sum();
        assert_eq!(total, factorial(6));
    }

    #[test]
    fn plancherel_values() {
        let rho = plancherel(3);
        assert_eq!(rho.prob(&p(&[3])), ratio(1, 6));
        assert_eq!(rho.prob(&p(&[2, 1])), ratio(2, 3));
        assert_eq!(rho.prob(&p(&[1, 1, 1])), ratio(1, 6));
        // associated character is the delta at the identity
        for n in 1..=6u64 {
            let rho = plancherel(n);
            assert_eq!(m_rho(&rho, &Partition::empty()), Rat::one());
            for mu in enumerate_partitions(n) {
                if mu.parts().iter().any(|&k| k >= 2) {
                    assert!(m_rho(&rho, &mu).is_zero(), "n={n} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn natural_representation_character() {
        // rho from the natural permutation representation has
        // M(sigma) = #fixed points / n
        for n in 3..=5u64 {
            let mut probs = BTreeMap::new();
            probs.insert(p(&[n as u32]), Rat::new(BigInt::one(), BigInt::from(n)));
            probs.insert(
                p(&[(n - 1) as u32, 1]),
                Rat::new(BigInt::from(n - 1), BigInt::from(n)),
            );
            let rho = Distribution::new(n, probs);
            for mu in enumerate_partitions(n) {
                let fixed = mu.parts().iter().filter(|&&k| k == 1).count() as i64;
                assert_eq!(
                    m_rho(&rho, &mu),
                    ratio(fixed, n as i64),
                    "n={n} mu={mu}"
                );
            }
        }
    }

    #[test]
    fn gelfand_normalization() {
        assert_eq!(involution_count(4), BigInt::from(10));
        let total: BigInt = enumerate_partitions(4)
            .iter()
            .map(|lam| BigInt::from(dim_syt(lam)))
            .sum();
        assert_eq!(total, BigInt::from(10));
        let rho = gelfand(4);
        assert_eq!(rho.total_mass(), Rat::one());
        // M on the class (2): brute force sum chi_lambda((2,1,1)) / I_4
        let mu = p(&[2, 1, 1]);
        let brute: Rat = enumerate_partitions(4)
            .iter()
            .map(|lam| Rat::new(character(lam, &mu).unwrap(), involution_count(4)))
            .sum();
        assert_eq!(m_rho(&rho, &p(&[2])), brute);
    }

    #[test]
    fn thoma_character_examples() {
        let planch = ThomaParams::plancherel_point();
        assert_eq!(thoma_character(&planch, &p(&[2])), Rat::zero());
        assert_eq!(thoma_character(&planch, &Partition::empty()), Rat::one());
        let row = ThomaParams::new(vec![Rat::one()], vec![]).unwrap();
        for mu in enumerate_partitions(5) {
            assert_eq!(thoma_character(&row, &mu), Rat::one());
        }
        let col = ThomaParams::new(vec![], vec![Rat::one()]).unwrap();
        for mu in enumerate_partitions(5) {
            let parity: u32 = mu.parts().iter().map(|&k| k - 1).sum();
            let expected = if parity % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(thoma_character(&col, &mu), expected, "mu={mu}");
        }
        assert!(ThomaParams::new(vec![ratio(1, 2), ratio(3, 4)], vec![]).is_err());
        assert!(ThomaParams::new(vec![ratio(3, 4)], vec![ratio(1, 2)]).is_err());
    }

    #[test]
    fn thoma_induced_matches_plancherel_at_gamma_one() {
        for n in 1..=6u64 {
            let rho = thoma_induced(n, &ThomaParams::plancherel_point()).unwrap();
            assert_eq!(rho, plancherel(n), "n={n}");
        }
    }

    #[test]
    fn thoma_fourier_round_trip() {
        let upsilons = [
            ThomaParams::new(vec![ratio(1, 2)], vec![ratio(1, 4)]).unwrap(),
            ThomaParams::new(vec![ratio(1, 3), ratio(1, 3)], vec![]).unwrap(),
            ThomaParams::new(vec![], vec![ratio(2, 5), ratio(1, 5)]).unwrap(),
        ];
        for upsilon in &upsilons {
            for n in 1..=6u64 {
                let rho = thoma_induced(n, upsilon).unwrap();
                assert_eq!(rho.total_mass(), Rat::one());
                for (_, pr) in rho.support() {
                    assert!(!pr.is_negative());
                }
                for mu in enumerate_partitions(n) {
                    assert_eq!(
                        m_rho(&rho, &mu),
                        thoma_character(upsilon, &mu),
                        "n={n} mu={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_weyl_small() {
        // n = 2, D = 2: shapes (2) and (1,1) with probabilities 3/4 and 1/4
        let rho = schur_weyl(2, 2).unwrap();
        assert_eq!(rho.prob(&p(&[2])), ratio(3, 4));
        assert_eq!(rho.prob(&p(&[1, 1])), ratio(1, 4));
        // single row forced when D = 1
        let rho = schur_weyl(4, 1).unwrap();
        assert_eq!(rho.prob(&p(&[4])), Rat::one());
    }

    #[test]
    fn young_log_derivative_plancherel() {
        for n in 2..=8u64 {
            let rho = plancherel(n);
            let d1 = young_log_derivative(&rho, &[1]).unwrap();
            assert_eq!(d1.mantissa, Rat::one());
            assert_eq!(d1.half_power, 0);
            // every higher or mixed derivative vanishes
            for ks in [vec![2], vec![3], vec![2, 2], vec![1, 2], vec![2, 3]] {
                if ks.iter().map(|&k| k as u64).sum::<u64>() > n {
                    continue;
                }
                let d = young_log_derivative(&rho, &ks).unwrap();
                assert!(d.is_zero(), "n={n} ks={ks:?}");
            }
        }
        // CLT-appropriate diagnostics with d = 0: n * derivative over pairs
        for n in 2..=8u64 {
            let rho = plancherel(n);
            for i in 1..=4u32 {
                for j in i..=4u32 {
                    if (i + j) as u64 > n {
                        continue;
                    }
                    let d = young_log_derivative(&rho, &[i, j]).unwrap();
                    assert!(d.is_zero(), "n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn young_log_derivative_schur_weyl() {
        // exact value n^{(i-1)/2} D^{1-i} for the i-th derivative
        let n = 6u64;
        let d = 3u64;
        let rho = schur_weyl(n, d).unwrap();
        for i in 2..=4u32 {
            let v = young_log_derivative(&rho, &[i]).unwrap();
            assert_eq!(v.half_power, i - 1);
            assert_eq!(
                v.mantissa,
                Rat::new(BigInt::one(), BigInt::from(d).pow(i - 1))
            );
        }
        // cycles must fit
        assert!(young_log_derivative(&rho, &[5, 5]).is_err());
    }

    #[test]
    fn scaled_value_normalization() {
        let v = ScaledValue {
            mantissa: ratio(1, 3),
            half_power: 5,
        };
        let norm = v.clone().normalized(4);
        assert_eq!(norm.mantissa, ratio(16, 3));
        assert_eq!(norm.half_power, 1);
        let f = v.to_f64(4);
        assert!((f - 16.0 / 3.0 * 2.0).abs() < 1e-12);
    }

    #[test]
    fn distribution_json() {
        let rho = plancherel(2);
        let v = rho.to_json();
        assert_eq!(
            v,
            serde_json::json!({"n": 2, "probs": [[[1, 1], "1", "2"], [[2], "1", "2"]]})
        );
    }
}
