//! Forward laws of the clique-substituted graph: vertex inflation, degree
//! law and the two clustering coefficients.

use crate::dist::DegreeDistribution;
use crate::error::Result;
use crate::profile::CliqueProfile;
use crate::scalar::Real;

/// `γ̃ = Σ_d [d γ_d + 1 - γ_d] p_d`, the limit of `ñ / n`.
pub fn gamma_tilde<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>) -> T {
    p.iter().fold(T::zero(), |acc, (d, pd)| {
        let g = gamma.get(d);
        acc + (T::from_usize_lossy(d) * g + T::one() - g) * pd
    })
}

/// Degree law `p̃` of the substituted graph.
pub fn substituted_degree_law<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
) -> Result<DegreeDistribution<T>> {
    let gt = gamma_tilde(p, gamma);
    let probs = p
        .probs()
        .iter()
        .enumerate()
        .map(|(r, &pr)| {
            let g = gamma.get(r);
            (T::from_usize_lossy(r) * g + T::one() - g) * pr / gt
        })
        .collect();
    DegreeDistribution::from_probs(probs)
}

/// Asymptotic global clustering coefficient `C`.
pub fn clustering<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>) -> T {
    let mut num = T::zero();
    let mut den = T::zero();
    for (r, pr) in p.iter() {
        let rr = T::from_usize_lossy(r);
        let g = gamma.get(r);
        let pairs = rr * (rr - T::one());
        if r >= 3 {
            num = num + pairs * (rr - T::lit(2.0)) * g * pr;
        }
        den = den + ((rr - T::one()) * g + T::one()) * pairs * pr;
    }
    if den > T::zero() {
        num / den
    } else {
        T::zero()
    }
}

/// Asymptotic mean local clustering `C₂`.
pub fn biased_clustering<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>) -> T {
    let num = p
        .iter()
        .filter(|(r, _)| *r >= 3)
        .fold(T::zero(), |acc, (r, pr)| {
            acc + pr * gamma.get(r) * (T::from_usize_lossy(r) - T::lit(2.0))
        });
    num / gamma_tilde(p, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_full_substitution() {
        for d in 3..=6usize {
            let p = DegreeDistribution::<f64>::regular(d).unwrap();
            let g = CliqueProfile::constant(1.0).unwrap();
            assert_eq!(gamma_tilde(&p, &g), d as f64);
            let c = clustering(&p, &g);
            assert!((c - (d as f64 - 2.0) / d as f64).abs() < 1e-15);
            assert!((biased_clustering(&p, &g) - (d as f64 - 2.0) / d as f64).abs() < 1e-15);
            assert_eq!(substituted_degree_law(&p, &g).unwrap(), p);
        }
    }

    #[test]
    fn half_substituted_regular_four() {
        let p = DegreeDistribution::<f64>::regular(4).unwrap();
        let g = CliqueProfile::constant(0.5).unwrap();
        assert_eq!(gamma_tilde(&p, &g), 2.5);
        // 24·0.5 / (2.5·12)
        assert!((clustering(&p, &g) - 0.4).abs() < 1e-15);
    }

    #[test]
    fn zero_profile_is_identity() {
        let p = DegreeDistribution::<f64>::power_law_cutoff(2.5, 50.0, 200).unwrap();
        let g = CliqueProfile::constant(0.0).unwrap();
        assert!((gamma_tilde(&p, &g) - 1.0).abs() < 1e-12);
        let pt = substituted_degree_law(&p, &g).unwrap();
        for r in 0..=p.support_max() {
            assert!((pt.prob(r) - p.prob(r)).abs() < 1e-12);
        }
        assert_eq!(clustering(&p, &g), 0.0);
    }
}
