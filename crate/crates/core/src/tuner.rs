//! Inverse problem: given a target degree law `p̃` of the substituted graph
//! and a target clustering, find a constant `γ` and the original law `p`.

use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::roots::bisect;
use crate::scalar::Real;

/// Output of [`tune`] and [`tune_biased`].
#[derive(Debug, Clone, PartialEq)]
pub struct TuneResult<T = f64> {
    pub gamma: T,
    /// Mean of `p`.
    pub lambda: T,
    pub p: DegreeDistribution<T>,
    pub achieved_c: T,
}

/// Checks `p̃_0 = 0` and `Σ_{r>=3} p̃_r > 0`.
pub fn check_target<T: Real>(p_tilde: &DegreeDistribution<T>) -> Result<()> {
    if p_tilde.prob(0) > T::zero() {
        return Err(Error::Infeasible(format!(
            "target law puts mass {} on degree 0",
            p_tilde.prob(0)
        )));
    }
    let big = p_tilde
        .iter()
        .filter(|(r, _)| *r >= 3)
        .fold(T::zero(), |a, (_, p)| a + p);
    if !(big > T::zero()) {
        return Err(Error::Infeasible(
            "target law has no mass on degrees >= 3, so no clustering is reachable".into(),
        ));
    }
    Ok(())
}

fn pair_mass<T: Real>(p_tilde: &DegreeDistribution<T>) -> T {
    p_tilde.iter().fold(T::zero(), |a, (r, p)| {
        let rr = T::from_usize_lossy(r);
        a + rr * (rr - T::one()) * p
    })
}

/// Largest reachable global clustering.
pub fn c_max<T: Real>(p_tilde: &DegreeDistribution<T>) -> Result<T> {
    check_target(p_tilde)?;
    let lin = p_tilde
        .iter()
        .filter(|(r, _)| *r >= 2)
        .fold(T::zero(), |a, (r, p)| a + (T::from_usize_lossy(r) - T::one()) * p);
    Ok(T::one() - T::lit(2.0) * lin / pair_mass(p_tilde))
}

/// Global clustering reached with constant `γ`.
pub fn c_of_gamma<T: Real>(p_tilde: &DegreeDistribution<T>, gamma: T) -> T {
    let den = pair_mass(p_tilde);
    if !(den > T::zero()) {
        return T::zero();
    }
    let num = p_tilde
        .iter()
        .filter(|(r, _)| *r >= 3)
        .fold(T::zero(), |a, (r, p)| {
            let rr = T::from_usize_lossy(r);
            let w = gamma / ((rr - T::one()) * gamma + T::one());
            a + rr * (rr - T::one()) * (rr - T::lit(2.0)) * w * p
        });
    num / den
}

/// Largest reachable mean local clustering.
pub fn c2_max<T: Real>(p_tilde: &DegreeDistribution<T>) -> Result<T> {
    check_target(p_tilde)?;
    Ok(c2_of_gamma(p_tilde, T::one()))
}

/// Mean local clustering reached with constant `γ`.
pub fn c2_of_gamma<T: Real>(p_tilde: &DegreeDistribution<T>, gamma: T) -> T {
    p_tilde
        .iter()
        .filter(|(r, _)| *r >= 3)
        .fold(T::zero(), |a, (r, p)| {
            let rr = T::from_usize_lossy(r);
            a + (rr - T::lit(2.0)) * gamma / (rr * gamma + T::one() - gamma) * p
        })
}

/// `F(γ) = Σ_r r p̃_r / ((r-1)γ + 1)`.
pub fn f_of_gamma<T: Real>(p_tilde: &DegreeDistribution<T>, gamma: T) -> T {
    p_tilde.iter().fold(T::zero(), |a, (r, p)| {
        let rr = T::from_usize_lossy(r);
        a + rr * p / ((rr - T::one()) * gamma + T::one())
    })
}

/// Mean of the original law for a given `γ`.
pub fn lambda_of_gamma<T: Real>(p_tilde: &DegreeDistribution<T>, gamma: T) -> T {
    if gamma == T::one() {
        let inv = p_tilde
            .iter()
            .fold(T::zero(), |a, (r, p)| a + p / T::from_usize_lossy(r));
        return T::one() / inv;
    }
    // F(1-γ)/(1-γF) with the common factor (1-γ) cancelled:
    // 1 - γF = (1-γ) Σ p̃_r / ((r-1)γ+1).
    let norm = p_tilde.iter().fold(T::zero(), |a, (r, p)| {
        a + p / ((T::from_usize_lossy(r) - T::one()) * gamma + T::one())
    });
    f_of_gamma(p_tilde, gamma) / norm
}

/// Original law `p` producing `p̃` after substitution with constant `γ`.
pub fn original_law<T: Real>(p_tilde: &DegreeDistribution<T>, gamma: T) -> Result<(T, DegreeDistribution<T>)> {
    check_target(p_tilde)?;
    if !(gamma >= T::zero() && gamma <= T::one()) {
        return Err(Error::param(format!("gamma = {gamma} outside [0, 1]")));
    }
    let lambda = lambda_of_gamma(p_tilde, gamma);
    let scale = (lambda - T::one()) * gamma + T::one();
    let probs = p_tilde
        .probs()
        .iter()
        .enumerate()
        .map(|(r, &pt)| {
            if r == 0 {
                T::zero()
            } else {
                pt * scale / ((T::from_usize_lossy(r) - T::one()) * gamma + T::one())
            }
        })
        .collect();
    Ok((lambda, DegreeDistribution::from_probs(probs)?))
}

fn solve_gamma<T: Real>(target: T, top: T, curve: impl Fn(T) -> T, what: &str) -> Result<T> {
    let slack = T::lit(T::PROB_TOL);
    if target < T::zero() {
        return Err(Error::param(format!("{what} target {target} is negative")));
    }
    if target > top + slack {
        return Err(Error::Infeasible(format!(
            "{what} target {target} exceeds the maximum {top}"
        )));
    }
    if target == T::zero() {
        return Ok(T::zero());
    }
    if target >= top {
        return Ok(T::one());
    }
    bisect(|g| curve(g) - target, T::zero(), T::one(), T::epsilon())
}

/// Constant `γ` and law `p` reaching global clustering `c` with degree law `p̃`.
pub fn tune<T: Real>(p_tilde: &DegreeDistribution<T>, c: T) -> Result<TuneResult<T>> {
    let top = c_max(p_tilde)?;
    let gamma = solve_gamma(c, top, |g| c_of_gamma(p_tilde, g), "clustering")?;
    let (lambda, p) = original_law(p_tilde, gamma)?;
    Ok(TuneResult {
        gamma,
        lambda,
        p,
        achieved_c: c_of_gamma(p_tilde, gamma),
    })
}

/// As [`tune`], for the mean local clustering.
pub fn tune_biased<T: Real>(p_tilde: &DegreeDistribution<T>, c2: T) -> Result<TuneResult<T>> {
    let top = c2_max(p_tilde)?;
    let gamma = solve_gamma(c2, top, |g| c2_of_gamma(p_tilde, g), "biased clustering")?;
    let (lambda, p) = original_law(p_tilde, gamma)?;
    Ok(TuneResult {
        gamma,
        lambda,
        p,
        achieved_c: c2_of_gamma(p_tilde, gamma),
    })
}
