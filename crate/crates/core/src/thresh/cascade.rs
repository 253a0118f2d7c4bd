use crate::dist::{BinomialTails, DegreeDistribution};
use crate::error::{Error, Result};
use crate::model::gamma_tilde;
use crate::profile::{ActivationProfile, CliqueProfile};
use crate::roots::{largest_root_below_one, negative_below, REGULARITY_EPS, SCAN_POINTS};
use crate::scalar::Real;

use super::rows::ThresholdDistribution;

/// Both sides of `Σ r(r-1) p_r t_{r0} > Σ r p_r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CascadeCondition<T = f64> {
    pub holds: bool,
    /// Sides equal within `T::PROB_TOL` (relative); no prediction is made.
    pub critical: bool,
    pub lhs: T,
    pub rhs: T,
}

fn compare<T: Real>(lhs: T, rhs: T) -> (bool, bool) {
    let critical = (lhs - rhs).abs() <= T::lit(T::PROB_TOL) * rhs.max(T::one());
    (lhs > rhs && !critical, critical)
}

/// Cascade condition; depends on `p` and `t` only.
pub fn cascade_condition<T: Real>(p: &DegreeDistribution<T>, t: &ThresholdDistribution<T>) -> Result<CascadeCondition<T>> {
    t.check_covers(p)?;
    let lhs = p.iter().fold(T::zero(), |a, (r, pr)| {
        let rr = T::from_usize_lossy(r);
        a + rr * (rr - T::one()) * pr * t.t0(r)
    });
    let rhs = p.mean();
    let (holds, critical) = compare(lhs, rhs);
    Ok(CascadeCondition {
        holds,
        critical,
        lhs,
        rhs,
    })
}

/// Contagion threshold of the law `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContagionThreshold<T = f64> {
    /// `1 / m*`, or 0 when no cascade is possible for any `q`.
    pub q_c: T,
    /// Smallest `m` with `Σ_{r<=m} r(r-1) p_r > λ`.
    pub m_star: Option<usize>,
}

impl<T> ContagionThreshold<T> {
    pub fn cascade_possible(&self) -> bool {
        self.m_star.is_some()
    }
}

/// Supremum of the `q` for which contagion thresholds `⌊q s⌋` satisfy the
/// cascade condition; the condition only changes at `q = 1/m`.
pub fn contagion_qc<T: Real>(p: &DegreeDistribution<T>) -> ContagionThreshold<T> {
    let lambda = p.mean();
    let mut partial = T::zero();
    for (m, pm) in p.probs().iter().enumerate() {
        let mm = T::from_usize_lossy(m);
        partial = partial + mm * (mm - T::one()) * *pm;
        if m >= 2 && compare(partial, lambda).0 {
            return ContagionThreshold {
                q_c: T::one() / mm,
                m_star: Some(m),
            };
        }
    }
    ContagionThreshold {
        q_c: T::zero(),
        m_star: None,
    }
}

/// Root `ξ < 1` of `Σ d p_d t_{d0} (1 - ξ^{d-1}) = λ (1 - ξ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiSolution<T = f64> {
    pub xi: T,
    /// The equation already holds at `ξ = 0`.
    pub degenerate: bool,
}

pub fn xi_solve<T: Real>(p: &DegreeDistribution<T>, t: &ThresholdDistribution<T>) -> Result<XiSolution<T>> {
    let cond = cascade_condition(p, t)?;
    if !cond.holds {
        return Err(Error::Precondition(format!(
            "cascade condition fails: {} <= {}",
            cond.lhs, cond.rhs
        )));
    }
    let lambda = p.mean();
    let f = |xi: T| -> T {
        p.iter().fold(T::zero(), |a, (d, pd)| {
            if d == 0 {
                return a;
            }
            a + T::from_usize_lossy(d) * pd * t.t0(d) * (T::one() - xi.powi(d as i32 - 1))
        }) - lambda * (T::one() - xi)
    };
    let at_zero = f(T::zero());
    if at_zero.abs() <= T::lit(T::PROB_TOL) * lambda {
        return Ok(XiSolution {
            xi: T::zero(),
            degenerate: true,
        });
    }
    match largest_root_below_one(f, SCAN_POINTS, T::lit(T::ROOT_TOL) * T::lit(1e-2))? {
        Some(xi) => Ok(XiSolution { xi, degenerate: false }),
        None => Err(Error::numeric("no root below 1 although the cascade condition holds")),
    }
}

/// Limit fraction of pivotal vertices; zero when the cascade condition fails.
pub fn pivotal_fraction<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    t: &ThresholdDistribution<T>,
) -> Result<T> {
    if !cascade_condition(p, t)?.holds {
        return Ok(T::zero());
    }
    let xi = xi_solve(p, t)?.xi;
    Ok(pivotal_with(p, gamma, t, xi))
}

fn pivotal_with<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, t: &ThresholdDistribution<T>, xi: T) -> T {
    let num = p.iter().fold(T::zero(), |a, (d, pd)| {
        let g = gamma.get(d);
        let w = T::from_usize_lossy(d) * g + T::one() - g;
        a + w * pd * t.t0(d) * (T::one() - xi.powi(d as i32))
    });
    num / gamma_tilde(p, gamma)
}

/// Fixed point and final fraction of a threshold cascade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CascadeFixedPoint<T = f64> {
    pub zeta: T,
    pub cascade_fraction: T,
    pub regularity_ok: bool,
}

struct CascadeSeries<'a, T> {
    p: &'a DegreeDistribution<T>,
    gamma: &'a CliqueProfile<T>,
    t: &'a ThresholdDistribution<T>,
    alpha: Option<&'a ActivationProfile<T>>,
    gt: T,
    /// Nonzero `(l, T_{s,l})` with `l >= 1`, indexed by `s`.
    support: Vec<Vec<(usize, T)>>,
}

impl<'a, T: Real> CascadeSeries<'a, T> {
    fn keep(&self, s: usize) -> T {
        self.alpha.map_or(T::one(), |a| T::one() - a.get(s))
    }

    fn h(&self, z: T) -> T {
        self.p.iter().fold(T::zero(), |acc, (s, ps)| {
            let keep = self.keep(s);
            let g = self.gamma.get(s);
            let t0 = self.t.t0(s);
            let ss = T::from_usize_lossy(s);
            let mut term = ss * ps * (t0 * z.powi(s as i32) + g * (T::one() - t0) * z);
            if g < T::one() {
                let inner = self.support[s].iter().fold(T::zero(), |a, &(l, tl)| {
                    a + tl * BinomialTails::upper_weighted(s, (s - l) as i64, z)
                });
                term = term + ps * (T::one() - g) * inner;
            }
            acc + keep * term
        })
    }

    fn fraction(&self, z: T) -> T {
        let total = self.p.iter().fold(T::zero(), |acc, (s, ps)| {
            let a = T::one() - self.keep(s);
            let keep = self.keep(s);
            let g = self.gamma.get(s);
            let t0 = self.t.t0(s);
            let ss = T::from_usize_lossy(s);
            let w = ss * g + T::one() - g;
            let mut term = w * ps * (keep * t0 * (T::one() - z.powi(s as i32)) + a);
            if g < T::one() {
                let reached = self.support[s].iter().fold(T::zero(), |acc, &(l, tl)| {
                    acc + tl * BinomialTails::upper(s, (s - l) as i64, z)
                });
                term = term + (T::one() - g) * ps * keep * (T::one() - t0 - reached);
            }
            acc + term
        });
        (total / self.gt).max(T::zero()).min(T::one())
    }
}

fn solve_cascade<T: Real>(series: &CascadeSeries<'_, T>) -> Result<CascadeFixedPoint<T>> {
    let lambda = series.p.mean();
    let g = |z: T| lambda * z * z - series.h(z);
    let tol = T::lit(T::ROOT_TOL) * T::lit(1e-2);
    let zeta = largest_root_below_one(g, SCAN_POINTS, tol)?.unwrap_or_else(T::one);
    Ok(CascadeFixedPoint {
        zeta,
        cascade_fraction: series.fraction(zeta),
        regularity_ok: negative_below(g, zeta, T::lit(REGULARITY_EPS)),
    })
}

fn series<'a, T: Real>(
    p: &'a DegreeDistribution<T>,
    gamma: &'a CliqueProfile<T>,
    t: &'a ThresholdDistribution<T>,
    alpha: Option<&'a ActivationProfile<T>>,
) -> Result<CascadeSeries<'a, T>> {
    t.check_covers(p)?;
    let mut support = vec![Vec::new(); p.support_max() + 1];
    for (s, _) in p.iter() {
        let row = t.row(s);
        support[s] = (1..=s).filter(|&l| row[l] > T::zero()).map(|l| (l, row[l])).collect();
    }
    Ok(CascadeSeries {
        p,
        gamma,
        t,
        alpha,
        gt: gamma_tilde(p, gamma),
        support,
    })
}

/// Cascade started from one pivotal vertex. Without the cascade condition
/// the fraction is zero and `ζ = 1`.
pub fn contagion_zeta_l<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    t: &ThresholdDistribution<T>,
) -> Result<CascadeFixedPoint<T>> {
    if !cascade_condition(p, t)?.holds {
        return Ok(CascadeFixedPoint {
            zeta: T::one(),
            cascade_fraction: T::zero(),
            regularity_ok: false,
        });
    }
    solve_cascade(&series(p, gamma, t, None)?)
}

/// Cascade started from a clique-correlated seed: each original vertex of
/// degree `d` is seeded with probability `α_d`, together with its clique.
pub fn activation_cascade_fraction<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    t: &ThresholdDistribution<T>,
    alpha: &ActivationProfile<T>,
) -> Result<CascadeFixedPoint<T>> {
    solve_cascade(&series(p, gamma, t, Some(alpha))?)
}

/// Full analytic summary of a threshold cascade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContagionReport<T = f64> {
    pub cascade_possible: bool,
    pub critical: bool,
    pub lhs: T,
    pub rhs: T,
    /// Filled for contagion thresholds only.
    pub q_c: Option<T>,
    pub xi: T,
    pub xi_degenerate: bool,
    pub pivotal_fraction: T,
    pub zeta: T,
    pub cascade_fraction: T,
    pub regularity_ok: bool,
}

impl<T: Real> ContagionReport<T> {
    pub const CSV_HEADER: [&'static str; 11] = [
        "cascade_possible",
        "critical",
        "lhs",
        "rhs",
        "q_c",
        "xi",
        "xi_degenerate",
        "pivotal_fraction",
        "zeta",
        "cascade_fraction",
        "regularity_ok",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.cascade_possible.to_string(),
            self.critical.to_string(),
            self.lhs.to_string(),
            self.rhs.to_string(),
            self.q_c.map_or(String::new(), |q| q.to_string()),
            self.xi.to_string(),
            self.xi_degenerate.to_string(),
            self.pivotal_fraction.to_string(),
            self.zeta.to_string(),
            self.cascade_fraction.to_string(),
            self.regularity_ok.to_string(),
        ]
    }
}

/// Cascade condition, pivotal fraction and cascade size for threshold law `t`.
pub fn analyze_thresholds<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    t: &ThresholdDistribution<T>,
) -> Result<ContagionReport<T>> {
    let cond = cascade_condition(p, t)?;
    let mut report = ContagionReport {
        cascade_possible: cond.holds,
        critical: cond.critical,
        lhs: cond.lhs,
        rhs: cond.rhs,
        q_c: None,
        xi: T::one(),
        xi_degenerate: false,
        pivotal_fraction: T::zero(),
        zeta: T::one(),
        cascade_fraction: T::zero(),
        regularity_ok: false,
    };
    if !cond.holds {
        return Ok(report);
    }
    let xi = xi_solve(p, t)?;
    report.xi = xi.xi;
    report.xi_degenerate = xi.degenerate;
    report.pivotal_fraction = pivotal_with(p, gamma, t, xi.xi);
    let fp = solve_cascade(&series(p, gamma, t, None)?)?;
    report.zeta = fp.zeta;
    report.cascade_fraction = fp.cascade_fraction;
    report.regularity_ok = fp.regularity_ok;
    Ok(report)
}

/// [`analyze_thresholds`] for contagion thresholds `⌊q s⌋`, with `q_c`.
pub fn analyze_contagion<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    q: T,
) -> Result<ContagionReport<T>> {
    let t = ThresholdDistribution::contagion(q, p.support_max())?;
    let mut report = analyze_thresholds(p, gamma, &t)?;
    report.q_c = Some(contagion_qc(p).q_c);
    Ok(report)
}
