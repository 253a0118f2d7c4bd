use crate::dist::DegreeDistribution;
use crate::profile::CliqueProfile;
use crate::scalar::Real;

use super::gilbert::GilbertTable;

/// Degree law of the graph obtained after percolating clique edges only and
/// collapsing each clique fragment to one vertex (unnormalized).
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedLaw<T = f64> {
    /// `ϱ_k`, indexed by `k`.
    pub rho_k: Vec<T>,
    /// `ϱ = Σ ϱ_k`.
    pub rho: T,
    /// `μ = Σ k ϱ_k / ϱ`.
    pub mu: T,
    /// `σ_k`, indexed by `k`.
    pub sigma_k: Vec<T>,
}

impl<T: Real> DerivedLaw<T> {
    /// `table` must cover the support of `p`.
    pub fn new(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, table: &GilbertTable<T>) -> Self {
        let d_max = p.support_max();
        assert!(table.d_max() >= d_max, "Gilbert table too small");
        let mut rho_k = vec![T::zero(); d_max + 1];
        let mut sigma_k = vec![T::zero(); d_max + 1];
        for (d, pd) in p.iter() {
            let g = gamma.get(d);
            let plain = pd * (T::one() - g);
            rho_k[d] = rho_k[d] + plain;
            sigma_k[d] = sigma_k[d] + plain;
            if g > T::zero() && d > 0 {
                let w = T::from_usize_lossy(d) * pd * g;
                for k in 1..=d {
                    let f = table.f(d, k);
                    if f > T::zero() {
                        rho_k[k] = rho_k[k] + w * f / T::from_usize_lossy(k);
                        sigma_k[k] = sigma_k[k] + w * f;
                    }
                }
            }
        }
        let rho = rho_k.iter().fold(T::zero(), |a, &r| a + r);
        let edges = rho_k
            .iter()
            .enumerate()
            .fold(T::zero(), |a, (k, &r)| a + T::from_usize_lossy(k) * r);
        Self {
            rho_k,
            rho,
            mu: edges / rho,
            sigma_k,
        }
    }

    /// Builds its own table at `pi`.
    pub fn at(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, pi: T) -> crate::Result<Self> {
        let table = GilbertTable::new(p.support_max().max(1), pi)?;
        Ok(Self::new(p, gamma, &table))
    }

    /// Normalized law `p'_k = ϱ_k / ϱ`.
    pub fn p_prime(&self, k: usize) -> T {
        self.rho_k.get(k).map_or(T::zero(), |&r| r / self.rho)
    }

    pub fn support_max(&self) -> usize {
        self.rho_k.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_substitution_is_identity() {
        let p = DegreeDistribution::<f64>::power_law_cutoff(2.5, 50.0, 100).unwrap();
        let law = DerivedLaw::at(&p, &CliqueProfile::constant(0.0).unwrap(), 0.4).unwrap();
        assert_eq!(law.rho_k, p.probs());
        assert_eq!(law.sigma_k, p.probs());
        assert!((law.rho - 1.0).abs() < 1e-12);
        assert!((law.mu - p.mean()).abs() < 1e-12);
    }

    #[test]
    fn full_percolation_is_identity() {
        let p = DegreeDistribution::<f64>::poisson_shifted(3.0, 60).unwrap();
        let law = DerivedLaw::at(&p, &CliqueProfile::constant(0.7).unwrap(), 1.0).unwrap();
        for k in 0..=p.support_max() {
            assert!((law.rho_k[k] - p.prob(k)).abs() < 1e-15);
        }
    }

    #[test]
    fn regular_three_hand_values() {
        let p = DegreeDistribution::<f64>::regular(3).unwrap();
        let law = DerivedLaw::at(&p, &CliqueProfile::constant(1.0).unwrap(), 0.5).unwrap();
        assert!((law.rho_k[1] - 0.75).abs() < 1e-15);
        assert!((law.rho_k[2] - 0.375).abs() < 1e-15);
        assert!((law.rho_k[3] - 0.5).abs() < 1e-15);
        assert!((law.rho - 1.625).abs() < 1e-15);
        assert!((law.mu - (0.75 + 0.75 + 1.5) / 1.625).abs() < 1e-15);
        assert!((law.p_prime(1) - 0.75 / 1.625).abs() < 1e-15);
    }
}
