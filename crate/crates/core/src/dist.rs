//! Finite-support degree distributions, size-biasing and binomial
//! probabilities.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::{binomial_coefficient, pow_field, Field, LnFactorials, Real};

/// Tail mass a truncated Poisson-type law may drop.
pub const MAX_TAIL_MASS: f64 = 1e-10;

/// Default exponential cutoff of the power-law family.
pub const DEFAULT_KAPPA: f64 = 50.0;

/// Law `(p_r)` on `0..=support_max`.
///
/// Probabilities are non-negative and sum to one within `T::PROB_TOL`;
/// the mean is positive. Trailing zero entries are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution<T = f64> {
    probs: Vec<T>,
    tail_mass_dropped: T,
}

impl<T: Real> DegreeDistribution<T> {
    /// Validates an explicit probability vector indexed by degree.
    pub fn from_probs(probs: Vec<T>) -> Result<Self> {
        Self::build(probs, T::zero())
    }

    /// Normalizes non-negative weights into a distribution.
    pub fn from_weights(weights: Vec<T>) -> Result<Self> {
        let total = weights.iter().fold(T::zero(), |a, &w| a + w);
        if !(total > T::zero()) || !total.is_finite() {
            return Err(Error::param("weights must have positive finite total"));
        }
        Self::build(weights.into_iter().map(|w| w / total).collect(), T::zero())
    }

    fn build(mut probs: Vec<T>, tail_mass_dropped: T) -> Result<Self> {
        if let Some((r, p)) = probs
            .iter()
            .enumerate()
            .find(|(_, p)| !(**p >= T::zero()) || !p.is_finite())
        {
            return Err(Error::param(format!("p_{r} = {p} is not a probability")));
        }
        while probs.len() > 1 && probs.last() == Some(&T::zero()) {
            probs.pop();
        }
        let total = probs.iter().fold(T::zero(), |a, &p| a + p);
        if (total - T::one()).abs() > T::lit(T::PROB_TOL) {
            return Err(Error::param(format!("probabilities sum to {total}, not 1")));
        }
        let dist = Self {
            probs,
            tail_mass_dropped,
        };
        if !(dist.mean() > T::zero()) {
            return Err(Error::param("mean degree must be positive"));
        }
        Ok(dist)
    }

    /// `p_r ∝ r^{-tau} e^{-r/kappa}` on `1..=r_max`, renormalized.
    pub fn power_law_cutoff(tau: f64, kappa: f64, r_max: usize) -> Result<Self> {
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(Error::param(format!("tau must be positive, got {tau}")));
        }
        if !(kappa > 0.0) {
            return Err(Error::param(format!("kappa must be positive, got {kappa}")));
        }
        if r_max < 1 {
            return Err(Error::param("r_max must be at least 1"));
        }
        let weight = |r: usize| (r as f64).powf(-tau) * (-(r as f64) / kappa).exp();
        let mut weights = vec![0.0f64; r_max + 1];
        let mut body = 0.0;
        for (r, w) in weights.iter_mut().enumerate().skip(1) {
            *w = weight(r);
            body += *w;
        }
        // Tail estimated over a finite window; e^{-r/kappa} makes it converge.
        let window = ((60.0 * kappa).ceil() as usize).clamp(1, 2_000_000);
        let mut tail = 0.0;
        for r in r_max + 1..=r_max + window {
            let w = weight(r);
            tail += w;
            if w < 1e-300 {
                break;
            }
        }
        let probs = weights.into_iter().map(|w| T::lit(w / body)).collect();
        Self::build(probs, T::lit(tail / (body + tail)))
    }

    /// [`power_law_cutoff`](Self::power_law_cutoff) with the smallest
    /// `r_max` whose dropped tail is below [`MAX_TAIL_MASS`].
    pub fn power_law_auto(tau: f64, kappa: f64) -> Result<Self> {
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::param(format!("kappa must be positive, got {kappa}")));
        }
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(Error::param(format!("tau must be positive, got {tau}")));
        }
        let span = ((200.0 * kappa).ceil() as usize).clamp(16, 5_000_000);
        let w: Vec<f64> = (1..=span)
            .map(|r| (r as f64).powf(-tau) * (-(r as f64) / kappa).exp())
            .collect();
        let total: f64 = w.iter().sum();
        let mut tail = 0.0;
        let mut r_max = span;
        for r in (1..=span).rev() {
            if (tail + w[r - 1]) / total >= MAX_TAIL_MASS {
                r_max = r;
                break;
            }
            tail += w[r - 1];
        }
        Self::power_law_cutoff(tau, kappa, r_max)
    }

    /// [`poisson`](Self::poisson) or, with `shifted`,
    /// [`poisson_shifted`](Self::poisson_shifted), truncated just past the
    /// tail limit.
    pub fn poisson_auto(lambda: f64, shifted: bool) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::param(format!("lambda must be positive, got {lambda}")));
        }
        let mut r_max = (lambda + 6.0 * lambda.sqrt()).ceil() as usize + 8;
        loop {
            let d = if shifted { Self::poisson_shifted(lambda, r_max) } else { Self::poisson(lambda, r_max) };
            match d {
                Err(Error::Truncation { .. }) => r_max += 1 + r_max / 16,
                other => return other,
            }
        }
    }

    /// Point mass at `d`.
    pub fn regular(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::param("regular degree must be at least 1"));
        }
        let mut probs = vec![T::zero(); d + 1];
        probs[d] = T::one();
        Self::build(probs, T::zero())
    }

    /// `p_r = e^{-lambda} lambda^{r-1} / (r-1)!` for `r >= 1` (one plus a Poisson variable).
    pub fn poisson_shifted(lambda: f64, r_max: usize) -> Result<Self> {
        let base = poisson_pmf(lambda, r_max.saturating_sub(1))?;
        let mut probs = vec![0.0; r_max + 1];
        probs[1..].copy_from_slice(&base.0);
        Self::finish_truncated(probs, base.1, r_max)
    }

    /// Poisson law with mean `lambda`, truncated at `r_max`.
    pub fn poisson(lambda: f64, r_max: usize) -> Result<Self> {
        let (probs, tail) = poisson_pmf(lambda, r_max)?;
        Self::finish_truncated(probs, tail, r_max)
    }

    fn finish_truncated(probs: Vec<f64>, tail: f64, r_max: usize) -> Result<Self> {
        if tail >= MAX_TAIL_MASS {
            return Err(Error::Truncation {
                r_max,
                tail,
                limit: MAX_TAIL_MASS,
            });
        }
        let body: f64 = probs.iter().sum();
        Self::build(probs.into_iter().map(|p| T::lit(p / body)).collect(), T::lit(tail))
    }

    #[inline]
    pub fn prob(&self, r: usize) -> T {
        self.probs.get(r).copied().unwrap_or_else(T::zero)
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn support_max(&self) -> usize {
        self.probs.len() - 1
    }

    pub fn tail_mass_dropped(&self) -> T {
        self.tail_mass_dropped
    }

    /// Iterates `(r, p_r)` over degrees with positive mass.
    pub fn iter(&self) -> impl Iterator<Item = (usize, T)> + '_ {
        self.probs
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, p)| *p > T::zero())
    }

    pub fn mean(&self) -> T {
        self.factorial_moment(1)
    }

    /// `E[D(D-1)...(D-k+1)]`.
    pub fn factorial_moment(&self, k: usize) -> T {
        self.probs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (r, &p)| {
                if r < k {
                    return acc;
                }
                let falling = (r + 1 - k..=r).fold(T::one(), |f, j| f * T::from_usize_lossy(j));
                acc + falling * p
            })
    }

    /// `E[D^k]`.
    pub fn moment(&self, k: i32) -> T {
        self.probs.iter().enumerate().fold(T::zero(), |acc, (r, &p)| {
            acc + T::from_usize_lossy(r).powi(k) * p
        })
    }

    /// Law of `D* = (size-biased D) - 1`: `p*_{r-1} = r p_r / lambda`.
    pub fn size_biased(&self) -> Result<SizeBiasedDistribution<T>> {
        let lambda = self.mean();
        if !(lambda > T::zero()) {
            return Err(Error::param("size-biasing needs a positive mean"));
        }
        let probs = (1..self.probs.len())
            .map(|r| T::from_usize_lossy(r) * self.probs[r] / lambda)
            .collect();
        Ok(SizeBiasedDistribution { probs })
    }

    /// Total variation distance to another law.
    pub fn total_variation(&self, other: &Self) -> T {
        let n = self.probs.len().max(other.probs.len());
        let half = T::lit(0.5);
        (0..n).fold(T::zero(), |a, r| a + (self.prob(r) - other.prob(r)).abs()) * half
    }

    /// Plain-text table: one `r p_r` line per degree with positive mass, ascending.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (r, p) in self.iter() {
            writeln!(out, "{r} {p}").unwrap();
        }
        out
    }

    /// Parses the [`to_table`](Self::to_table) format. Blank lines and `#` comments
    /// are skipped; degrees must be strictly ascending.
    pub fn from_table(text: &str) -> Result<Self> {
        let mut probs: Vec<T> = Vec::new();
        let mut last: Option<usize> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let mut parts = line.split_whitespace();
            let r: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse_err("expected an integer degree"))?;
            let p: f64 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse_err("expected a probability"))?;
            if parts.next().is_some() {
                return Err(parse_err("trailing fields"));
            }
            if last.is_some_and(|l| r <= l) {
                return Err(parse_err("degrees must be strictly ascending"));
            }
            last = Some(r);
            if probs.len() <= r {
                probs.resize(r + 1, T::zero());
            }
            probs[r] = T::lit(p);
        }
        if probs.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "empty distribution table".into(),
            });
        }
        Self::from_probs(probs)
    }

    /// Converts to another scalar type.
    pub fn cast<U: Real>(&self) -> DegreeDistribution<U> {
        DegreeDistribution {
            probs: self.probs.iter().map(|p| U::lit(p.as_f64())).collect(),
            tail_mass_dropped: U::lit(self.tail_mass_dropped.as_f64()),
        }
    }
}

fn poisson_pmf(lambda: f64, r_max: usize) -> Result<(Vec<f64>, f64)> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::param(format!("lambda must be positive, got {lambda}")));
    }
    let ln_fact = LnFactorials::<f64>::new(r_max);
    let probs: Vec<f64> = (0..=r_max)
        .map(|r| (-lambda + r as f64 * lambda.ln() - ln_fact.get(r)).exp())
        .collect();
    let tail = (1.0 - probs.iter().sum::<f64>()).max(0.0);
    // Near 1e-10 the complement is dominated by rounding; sum the tail directly.
    let tail = if tail < 1e-6 {
        let mut t = 0.0;
        let mut term = *probs.last().unwrap();
        let mut r = r_max;
        loop {
            r += 1;
            term *= lambda / r as f64;
            t += term;
            if term < 1e-300 || term < t * 1e-17 {
                break;
            }
        }
        t
    } else {
        tail
    };
    Ok((probs, tail))
}

/// Law of `D*`, indexed by `r >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeBiasedDistribution<T = f64> {
    probs: Vec<T>,
}

impl<T: Real> SizeBiasedDistribution<T> {
    #[inline]
    pub fn prob(&self, r: usize) -> T {
        self.probs.get(r).copied().unwrap_or_else(T::zero)
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn total(&self) -> T {
        self.probs.iter().fold(T::zero(), |a, &p| a + p)
    }

    pub fn mean(&self) -> T {
        self.probs
            .iter()
            .enumerate()
            .fold(T::zero(), |a, (r, &p)| a + T::from_usize_lossy(r) * p)
    }
}

/// `P(Bi(s, p) = r)`, evaluated in log space with the saddle-point
/// decomposition (Stirling remainders plus deviance terms).
pub fn binomial_pmf<T: Real>(s: usize, r: usize, p: T) -> Result<T> {
    if r > s {
        return Err(Error::param(format!("r = {r} exceeds s = {s}")));
    }
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::param(format!("p = {p} outside [0, 1]")));
    }
    Ok(T::lit(pmf_raw(s, r, p.as_f64())))
}

/// `ln(n!) - ln(sqrt(2πn) (n/e)^n)`.
fn stirlerr(n: usize) -> f64 {
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;
    let x = n as f64;
    if n <= 15 {
        let ln_fact: f64 = (2..=n).map(|k| (k as f64).ln()).sum();
        if n == 0 {
            return 0.0;
        }
        return ln_fact - (x * x.ln() - x + 0.5 * (std::f64::consts::TAU * x).ln());
    }
    let nn = x * x;
    if n > 500 {
        (S0 - S1 / nn) / x
    } else if n > 80 {
        (S0 - (S1 - S2 / nn) / nn) / x
    } else if n > 35 {
        (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / x
    } else {
        (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / x
    }
}

/// Deviance `x ln(x/m) + m - x`, stable when `x ≈ m`.
fn bd0(x: f64, m: f64) -> f64 {
    if (x - m).abs() < 0.1 * (x + m) {
        let mut v = (x - m) / (x + m);
        let mut sum = (x - m) * v;
        let mut ej = 2.0 * x * v;
        v *= v;
        for j in 1..1000 {
            ej *= v;
            let next = sum + ej / (2 * j + 1) as f64;
            if next == sum {
                return next;
            }
            sum = next;
        }
        sum
    } else {
        x * (x / m).ln() + m - x
    }
}

fn pmf_raw(s: usize, r: usize, p: f64) -> f64 {
    let q = 1.0 - p;
    if p == 0.0 {
        return if r == 0 { 1.0 } else { 0.0 };
    }
    if q == 0.0 {
        return if r == s { 1.0 } else { 0.0 };
    }
    let n = s as f64;
    if r == 0 {
        return (n * (-p).ln_1p()).exp();
    }
    if r == s {
        return (n * p.ln()).exp();
    }
    let x = r as f64;
    let lc = stirlerr(s) - stirlerr(r) - stirlerr(s - r) - bd0(x, n * p) - bd0(n - x, n * q);
    let lf = std::f64::consts::TAU.ln() + x.ln() + (-x / n).ln_1p();
    (lc - 0.5 * lf).exp()
}

/// `P(Bi(s, p) = r)` by direct products, exact over rational fields.
pub fn binomial_pmf_exact<T: Field>(s: u64, r: u64, p: &T) -> Result<T> {
    if r > s {
        return Err(Error::param(format!("r = {r} exceeds s = {s}")));
    }
    if *p < T::zero() || *p > T::one() {
        return Err(Error::param("p outside [0, 1]"));
    }
    let q = T::one() - p.clone();
    Ok(binomial_coefficient::<T>(s, r) * pow_field(p, r) * pow_field(&q, s - r))
}

/// Binomial tails summed outward from their largest term, so only the
/// significant terms are visited. Tails containing the mode are taken as
/// complements of the opposite tail.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinomialTails;

impl BinomialTails {
    /// `P(Bi(s, z) >= m)`; `m <= 0` gives 1 and `m > s` gives 0.
    pub fn upper<T: Real>(s: usize, m: i64, z: T) -> T {
        if m <= 0 {
            return T::one();
        }
        let m = m as usize;
        if m > s || z <= T::zero() {
            return T::zero();
        }
        if z >= T::one() {
            return T::one();
        }
        let zf = z.as_f64();
        let mode = (((s + 1) as f64 * zf).floor() as usize).min(s);
        let v = if m > mode {
            sum_up(s, m, zf)
        } else {
            1.0 - sum_down(s, m - 1, zf)
        };
        T::lit(v.clamp(0.0, 1.0))
    }

    /// `Σ_{r >= m} r P(Bi(s, z) = r) = s z P(Bi(s-1, z) >= m-1)`.
    pub fn upper_weighted<T: Real>(s: usize, m: i64, z: T) -> T {
        if s == 0 {
            return T::zero();
        }
        T::from_usize_lossy(s) * z * Self::upper(s - 1, m - 1, z)
    }
}

const TAIL_EPS: f64 = 1e-18;

/// `Σ_{r=m}^{s} P(Bi(s, z) = r)` for `m` above the mode.
fn sum_up(s: usize, m: usize, z: f64) -> f64 {
    let peak = pmf_raw(s, m, z);
    if peak == 0.0 {
        return 0.0;
    }
    let odds = z / (1.0 - z);
    let (mut sum, mut term) = (peak, peak);
    for r in m..s {
        term *= (s - r) as f64 / (r + 1) as f64 * odds;
        sum += term;
        if term < sum * TAIL_EPS {
            break;
        }
    }
    sum
}

/// `Σ_{r=0}^{m} P(Bi(s, z) = r)` for `m` below the mode.
fn sum_down(s: usize, m: usize, z: f64) -> f64 {
    let peak = pmf_raw(s, m, z);
    if peak == 0.0 {
        return 0.0;
    }
    let inv_odds = (1.0 - z) / z;
    let (mut sum, mut term) = (peak, peak);
    for r in (1..=m).rev() {
        term *= r as f64 / (s - r + 1) as f64 * inv_odds;
        sum += term;
        if term < sum * TAIL_EPS {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn poisson_shifted_moments() {
        let d = DegreeDistribution::<f64>::poisson_shifted(2.0, 60).unwrap();
        assert!(close(d.mean(), 3.0, 1e-8));
        assert!(close(d.prob(1), (-2.0f64).exp(), 1e-12));
        assert!(close(d.probs().iter().sum::<f64>(), 1.0, 1e-10));
        assert_eq!(d.prob(0), 0.0);
    }

    #[test]
    fn poisson_shifted_rejects_short_support() {
        let err = DegreeDistribution::<f64>::poisson_shifted(2.0, 8).unwrap_err();
        assert!(matches!(err, Error::Truncation { .. }));
    }

    #[test]
    fn factorial_moment_by_direct_summation() {
        let d = DegreeDistribution::<f64>::poisson_shifted(2.0, 60).unwrap();
        // Oracle: D = 1 + X, X ~ Poisson(2); sum (x+1) x P(X = x) term by term.
        let mut oracle = 0.0;
        let mut px = (-2.0f64).exp();
        for x in 0..60u32 {
            if x > 0 {
                px *= 2.0 / x as f64;
            }
            oracle += (x as f64 + 1.0) * x as f64 * px;
        }
        assert!(close(oracle, 8.0, 1e-9));
        assert!(close(d.factorial_moment(2), oracle, 1e-9));
    }

    #[test]
    fn regular_moments() {
        let d3 = DegreeDistribution::<f64>::regular(3).unwrap();
        assert_eq!(d3.factorial_moment(2), 6.0);
        assert_eq!(d3.factorial_moment(1), 3.0);
        assert_eq!(d3.mean(), 3.0);
        let d5 = DegreeDistribution::<f64>::regular(5).unwrap();
        assert_eq!(d5.factorial_moment(2), 20.0);
        assert!(DegreeDistribution::<f64>::regular(0).is_err());
    }

    #[test]
    fn size_biasing() {
        let d3 = DegreeDistribution::<f64>::regular(3).unwrap();
        let sb = d3.size_biased().unwrap();
        assert_eq!(sb.prob(2), 1.0);
        let two = DegreeDistribution::<f64>::from_probs(vec![0.0, 0.5, 0.0, 0.5]).unwrap();
        let sb = two.size_biased().unwrap();
        assert!(close(sb.prob(0), 0.25, 1e-15));
        assert!(close(sb.prob(2), 0.75, 1e-15));
        assert!(close(sb.total(), 1.0, 1e-15));
    }

    #[test]
    fn power_law_means_match_reported_values() {
        let d = DegreeDistribution::<f64>::power_law_cutoff(2.5, 50.0, 500).unwrap();
        assert!(close(d.mean(), 1.65, 0.005), "{}", d.mean());
        let d = DegreeDistribution::<f64>::power_law_cutoff(2.9, 50.0, 500).unwrap();
        assert!(close(d.mean(), 1.37, 0.005), "{}", d.mean());
        assert!(close(d.size_biased().unwrap().total(), 1.0, 1e-10));
        assert!(d.tail_mass_dropped() < 1e-10);
    }

    #[test]
    fn automatic_truncation() {
        for &(tau, mean) in &[(2.5, 1.65), (1.81, 3.22), (1.3, 7.3), (1.0, 12.62), (0.1, 46.0)] {
            let d = DegreeDistribution::<f64>::power_law_auto(tau, 50.0).unwrap();
            assert!(d.tail_mass_dropped() < MAX_TAIL_MASS);
            let shorter = DegreeDistribution::<f64>::power_law_cutoff(tau, 50.0, d.support_max() - 1).unwrap();
            assert!(shorter.tail_mass_dropped() >= MAX_TAIL_MASS);
            assert!(close(d.mean(), mean, 0.01 * mean), "tau {tau}: {}", d.mean());
        }
        let p = DegreeDistribution::<f64>::poisson_auto(12.0, true).unwrap();
        assert!(p.tail_mass_dropped() < MAX_TAIL_MASS);
        assert!(close(p.mean(), 13.0, 1e-8));
    }

    #[test]
    fn single_atom_power_law() {
        let d = DegreeDistribution::<f64>::power_law_cutoff(1.0, 1e9, 1).unwrap();
        assert_eq!(d.probs(), &[0.0, 1.0]);
        assert!(d.tail_mass_dropped() > 0.0);
        assert!(DegreeDistribution::<f64>::power_law_cutoff(-1.0, 50.0, 10).is_err());
        assert!(DegreeDistribution::<f64>::power_law_cutoff(2.0, 0.0, 10).is_err());
    }

    #[test]
    fn binomial_values() {
        assert!(close(binomial_pmf(2, 1, 0.5f64).unwrap(), 0.5, 1e-15));
        assert_eq!(binomial_pmf(7, 0, 0.0f64).unwrap(), 1.0);
        assert!(binomial_pmf(2, 3, 0.5f64).is_err());
        assert!(binomial_pmf(2, 1, 1.5f64).is_err());
        // Exact oracle: C(10,3) 3^3 7^7 / 10^10.
        let p = BigRational::new(BigInt::from(3), BigInt::from(10));
        let exact = binomial_pmf_exact(10, 3, &p).unwrap();
        let expected = BigRational::new(
            BigInt::from(120u64 * 27 * 823_543),
            BigInt::from(10_000_000_000u64),
        );
        assert_eq!(exact, expected);
        let as_f64 = 120.0 * 27.0 * 823_543.0 / 1e10;
        assert!(close(binomial_pmf(10, 3, 0.3f64).unwrap(), as_f64, 1e-14));
        assert!(close(as_f64, 0.266_827_93, 1e-8));
    }

    #[test]
    fn binomial_rows_sum_to_one() {
        for s in 0..=200usize {
            for j in 0..=10 {
                let p = j as f64 / 10.0;
                let total: f64 = (0..=s).map(|r| binomial_pmf(s, r, p).unwrap()).sum();
                assert!(close(total, 1.0, 1e-12), "s={s} p={p} total={total}");
            }
        }
    }

    #[test]
    fn tails_match_direct_sums() {
        for &s in &[0usize, 1, 5, 40, 399] {
            for &z in &[0.0, 1e-3, 0.2, 0.5, 0.93, 1.0] {
                for m in -1..=(s as i64 + 1) {
                    let direct: f64 = (m.max(0) as usize..=s)
                        .map(|r| binomial_pmf(s, r, z).unwrap())
                        .sum();
                    let got = BinomialTails::upper(s, m, z);
                    assert!(close(got, direct.min(1.0), 1e-12), "s={s} m={m} z={z}: {got} vs {direct}");
                    let direct_w: f64 = (m.max(0) as usize..=s)
                        .map(|r| r as f64 * binomial_pmf(s, r, z).unwrap())
                        .sum();
                    let got_w = BinomialTails::upper_weighted(s, m, z);
                    assert!(close(got_w, direct_w, 1e-9 * (1.0 + s as f64)));
                }
            }
        }
    }

    #[test]
    fn table_format_round_trip() {
        let d = DegreeDistribution::<f64>::power_law_cutoff(2.5, 50.0, 40).unwrap();
        let text = d.to_table();
        assert!(text.starts_with("1 "));
        let back = DegreeDistribution::<f64>::from_table(&text).unwrap();
        assert_eq!(back.probs(), d.probs());
        assert!(DegreeDistribution::<f64>::from_table("3 0.5\n2 0.5\n").is_err());
        assert!(DegreeDistribution::<f64>::from_table("# comment\n\n3 1\n").is_ok());
    }

    #[test]
    fn generic_over_f32() {
        let d = DegreeDistribution::<f32>::power_law_cutoff(2.5, 50.0, 500).unwrap();
        assert!((d.mean() - 1.65).abs() < 0.01);
        assert_eq!(DegreeDistribution::<f32>::regular(3).unwrap().factorial_moment(2), 6.0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn constructed_laws_are_normalized(tau in 0.05f64..4.0, r_max in 1usize..600, lambda in 0.1f64..20.0) {
                let pl = DegreeDistribution::<f64>::power_law_cutoff(tau, 50.0, r_max).unwrap();
                prop_assert!((pl.probs().iter().sum::<f64>() - 1.0).abs() < 1e-10);
                prop_assert!(pl.probs().iter().all(|p| *p >= 0.0));
                prop_assert_eq!(pl.factorial_moment(1), pl.mean());
                let ps = DegreeDistribution::<f64>::poisson_shifted(lambda, 200).unwrap();
                prop_assert!((ps.probs().iter().sum::<f64>() - 1.0).abs() < 1e-10);
                prop_assert!((ps.size_biased().unwrap().total() - 1.0).abs() < 1e-10);
            }

            #[test]
            fn size_biased_regular_is_point_mass(d in 1usize..200) {
                let sb = DegreeDistribution::<f64>::regular(d).unwrap().size_biased().unwrap();
                prop_assert_eq!(sb.prob(d - 1), 1.0);
                prop_assert_eq!(sb.total(), 1.0);
            }
        }
    }
}
