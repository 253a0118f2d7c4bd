use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::profile::CliqueProfile;
use crate::scalar::Real;

/// Row-stochastic threshold law: row `s` gives `t_{s0}, ..., t_{ss}`, the
/// probability that a degree-`s` vertex has threshold `ℓ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdDistribution<T = f64> {
    rows: Vec<Vec<T>>,
}

impl<T: Real> ThresholdDistribution<T> {
    /// Validates `rows[s]` of length `s + 1`, each summing to one.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::param("threshold law needs at least row 0"));
        }
        for (s, row) in rows.iter().enumerate() {
            check_row(s, row).map_err(Error::Parameter)?;
        }
        Ok(Self { rows })
    }

    fn point_masses(s_max: usize, level: impl Fn(usize) -> usize) -> Self {
        let rows = (0..=s_max)
            .map(|s| {
                let mut row = vec![T::zero(); s + 1];
                row[level(s).min(s)] = T::one();
                row
            })
            .collect();
        Self { rows }
    }

    /// Contagion thresholds `ℓ = ⌊q s⌋`.
    pub fn contagion(q: T, s_max: usize) -> Result<Self> {
        if !(q > T::zero() && q < T::one()) {
            return Err(Error::param(format!("q = {q} outside (0, 1)")));
        }
        Ok(Self::point_masses(s_max, |s| {
            (q * T::from_usize_lossy(s)).floor().as_f64() as usize
        }))
    }

    /// Same threshold `k` for every vertex. Rows with `s <= k` put their mass
    /// on `ℓ = s`, which never activates either.
    pub fn constant(k: usize, s_max: usize) -> Self {
        Self::point_masses(s_max, |_| k)
    }

    /// Every threshold zero.
    pub fn zero(s_max: usize) -> Self {
        Self::point_masses(s_max, |_| 0)
    }

    pub fn s_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, s: usize) -> &[T] {
        &self.rows[s]
    }

    #[inline]
    pub fn t(&self, s: usize, l: usize) -> T {
        self.rows[s].get(l).copied().unwrap_or_else(T::zero)
    }

    /// `t_{s0}`.
    #[inline]
    pub fn t0(&self, s: usize) -> T {
        self.rows[s][0]
    }

    /// Errors unless every degree charged by `p` has a row.
    pub fn check_covers(&self, p: &DegreeDistribution<T>) -> Result<()> {
        if p.support_max() > self.s_max() {
            return Err(Error::param(format!(
                "threshold rows stop at {} but degrees reach {}",
                self.s_max(),
                p.support_max()
            )));
        }
        Ok(())
    }
}

fn check_row<T: Real>(s: usize, row: &[T]) -> Result<(), String> {
    if row.len() != s + 1 {
        return Err(format!("row {s} has {} entries, expected {}", row.len(), s + 1));
    }
    if let Some((l, v)) = row.iter().enumerate().find(|(_, v)| !(**v >= T::zero())) {
        return Err(format!("t_{{{s},{l}}} = {v} is negative"));
    }
    let total = row.iter().fold(T::zero(), |a, &v| a + v);
    if (total - T::one()).abs() > T::lit(T::PROB_TOL) {
        return Err(format!("row {s} sums to {total}"));
    }
    Ok(())
}

/// Thresholds `t′` on the projected graph: clique vertex thresholds other
/// than zero move to the top level `ℓ = s`.
pub fn threshold_prime<T: Real>(
    t: &ThresholdDistribution<T>,
    gamma: &CliqueProfile<T>,
) -> Result<ThresholdDistribution<T>> {
    let rows: Vec<Vec<T>> = t
        .rows
        .iter()
        .enumerate()
        .map(|(s, row)| {
            let g = gamma.get(s);
            let mut out: Vec<T> = row.iter().map(|&v| (T::one() - g) * v).collect();
            out[0] = row[0];
            if s > 0 {
                out[s] = out[s] + g * (T::one() - row[0]);
            }
            out
        })
        .collect();
    for (s, row) in rows.iter().enumerate() {
        check_row(s, row).map_err(|m| Error::Internal(format!("transformed {m}")))?;
    }
    Ok(ThresholdDistribution { rows })
}
