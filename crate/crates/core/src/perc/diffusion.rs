use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::model::gamma_tilde;
use crate::profile::{ActivationProfile, CliqueProfile};
use crate::roots::{bisect, largest_root_below_one, negative_below, REGULARITY_EPS, SCAN_POINTS};
use crate::scalar::Real;

use super::derived::DerivedLaw;
use super::gilbert::GilbertTable;

/// Distance to the threshold below which a point counts as critical.
pub const CRITICAL_BAND: f64 = 1e-9;

/// Diffusion threshold together with whether it is attained inside `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiC<T = f64> {
    pub value: T,
    /// `false` when even `π = 1` is subcritical; `value` is then 1.
    pub finite: bool,
}

fn table_for<T: Real>(p: &DegreeDistribution<T>, pi: T) -> Result<GilbertTable<T>> {
    GilbertTable::new(p.support_max().max(1), pi)
}

/// Mean offspring `π E[K(D*+1, π, γ) - 1]` of the exploration process.
pub fn offspring_mean<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, pi: T) -> Result<T> {
    let table = table_for(p, pi)?;
    Ok(offspring_with(p, gamma, &table))
}

fn offspring_with<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, table: &GilbertTable<T>) -> T {
    let lambda = p.mean();
    let pi = *table.pi();
    let sum = p.iter().filter(|(d, _)| *d > 0).fold(T::zero(), |acc, (d, pd)| {
        let dd = T::from_usize_lossy(d);
        let g = gamma.get(d);
        let ek = (T::one() - g) * dd + g * table.expected_size(d);
        acc + dd * pd / lambda * (ek - T::one())
    });
    pi * sum
}

/// `φ(π) = offspring_mean(π) - 1` sampled on a uniform grid of `points + 1` values.
pub fn phi_grid<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, points: usize) -> Result<Vec<(T, T)>> {
    let n = points.max(1);
    (0..=n)
        .map(|i| {
            let pi = T::from_usize_lossy(i) / T::from_usize_lossy(n);
            Ok((pi, offspring_mean(p, gamma, pi)? - T::one()))
        })
        .collect()
}

/// Diffusion threshold by bisection on `φ`, after checking `φ` is monotone on a coarse grid.
pub fn diffusion_pi_c<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>) -> Result<PiC<T>> {
    let grid = phi_grid(p, gamma, 20)?;
    let slack = T::lit(1e3) * T::epsilon();
    if let Some(w) = grid.windows(2).find(|w| w[1].1 < w[0].1 - slack) {
        return Err(Error::numeric(format!(
            "phi not monotone: phi({}) = {} > phi({}) = {}",
            w[0].0, w[0].1, w[1].0, w[1].1
        )));
    }
    let (_, phi0) = grid[0];
    if !(phi0 < T::zero()) {
        return Err(Error::numeric(format!("phi(0) = {phi0}, expected -1")));
    }
    let (_, phi1) = grid[grid.len() - 1];
    if phi1 <= T::zero() {
        return Ok(PiC {
            value: T::one(),
            finite: false,
        });
    }
    let value = bisect(
        |pi| offspring_mean(p, gamma, pi).map_or(T::nan(), |m| m - T::one()),
        T::zero(),
        T::one(),
        T::epsilon() * T::lit(4.0),
    )?;
    Ok(PiC { value, finite: true })
}

/// `π_c = E[D] / E[D(D-1)]`, valid without cliques.
pub fn pi_c_unclustered<T: Real>(p: &DegreeDistribution<T>) -> PiC<T> {
    let ratio = p.mean() / p.factorial_moment(2);
    if ratio >= T::one() || !ratio.is_finite() {
        PiC {
            value: T::one(),
            finite: false,
        }
    } else {
        PiC {
            value: ratio,
            finite: true,
        }
    }
}

/// Threshold from the derived law: smallest `π` with `π Σ k(k-1) ϱ_k > Σ k ϱ_k`.
pub fn pi_c_moment_route<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>) -> Result<PiC<T>> {
    let excess = |pi: T| -> T {
        match DerivedLaw::at(p, gamma, pi) {
            Ok(law) => {
                let (m1, m2) = law.rho_k.iter().enumerate().fold((T::zero(), T::zero()), |(a, b), (k, &r)| {
                    let kk = T::from_usize_lossy(k);
                    (a + kk * r, b + kk * (kk - T::one()) * r)
                });
                pi * m2 - m1
            }
            Err(_) => T::nan(),
        }
    };
    if excess(T::one()) <= T::zero() {
        return Ok(PiC {
            value: T::one(),
            finite: false,
        });
    }
    let value = bisect(excess, T::zero(), T::one(), T::epsilon() * T::lit(4.0))?;
    Ok(PiC { value, finite: true })
}

/// Largest root below one of a fixed-point equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint<T = f64> {
    pub zeta: T,
    /// The equation has a root in `[0, 1)`; otherwise `zeta` is 1.
    pub nontrivial: bool,
    /// `g < 0` just below `zeta`.
    pub regularity_ok: bool,
}

struct Laws<T> {
    law: DerivedLaw<T>,
    gt: T,
}

impl<T: Real> Laws<T> {
    fn new(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, pi: T) -> Result<Self> {
        Ok(Self {
            law: DerivedLaw::at(p, gamma, pi)?,
            gt: gamma_tilde(p, gamma),
        })
    }

    /// `Σ_s c_s y^s`.
    fn series(coef: &[T], y: T) -> T {
        coef.iter().rev().fold(T::zero(), |acc, &c| acc * y + c)
    }

    fn giant(&self, pi: T, z: T) -> T {
        let x = T::one() - pi + pi * z;
        let total = self.law.sigma_k.iter().fold(T::zero(), |a, &s| a + s);
        (total - Self::series(&self.law.sigma_k, x)) / self.gt
    }
}

fn locate<T: Real>(mut g: impl FnMut(T) -> T) -> Result<FixedPoint<T>> {
    let tol = T::lit(T::ROOT_TOL) * T::lit(1e-2);
    match largest_root_below_one(&mut g, SCAN_POINTS, tol)? {
        Some(zeta) => Ok(FixedPoint {
            zeta,
            nontrivial: true,
            regularity_ok: negative_below(&mut g, zeta, T::lit(REGULARITY_EPS)),
        }),
        None => Ok(FixedPoint {
            zeta: T::one(),
            nontrivial: false,
            regularity_ok: false,
        }),
    }
}

/// Fixed point `ζ` of `μ z (1-π+πz) = h(z)`.
pub fn diffusion_zeta<T: Real>(p: &DegreeDistribution<T>, gamma: &CliqueProfile<T>, pi: T) -> Result<FixedPoint<T>> {
    let laws = Laws::new(p, gamma, pi)?;
    zeta_with(&laws, pi)
}

fn zeta_with<T: Real>(laws: &Laws<T>, pi: T) -> Result<FixedPoint<T>> {
    let mu = laws.law.mu;
    let coef: Vec<T> = laws
        .law
        .rho_k
        .iter()
        .enumerate()
        .map(|(s, &r)| T::from_usize_lossy(s) * r / laws.law.rho)
        .collect();
    locate(|z: T| {
        let x = T::one() - pi + pi * z;
        mu * z * x - Laws::series(&coef, x)
    })
}

/// Same fixed point through two-stage `√π` percolation: solve
/// `G'(1 - √π(1-ξ)) = μ(1 - (1-ξ)/√π)` for `ξ`, then `ζ = 1 - (1-ξ)/√π`,
/// where `G` is the generating function of `p'`.
pub fn diffusion_zeta_two_stage<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    pi: T,
) -> Result<FixedPoint<T>> {
    if pi <= T::zero() {
        return Ok(FixedPoint {
            zeta: T::one(),
            nontrivial: false,
            regularity_ok: false,
        });
    }
    let law = DerivedLaw::at(p, gamma, pi)?;
    let root = pi.sqrt();
    let mu = law.mu;
    // derivative coefficients of G: k p'_k y^{k-1}
    let coef: Vec<T> = law
        .rho_k
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &r)| T::from_usize_lossy(k) * r / law.rho)
        .collect();
    let xi = locate(|xi: T| {
        let y = T::one() - root * (T::one() - xi);
        Laws::series(&coef, y) - mu * (T::one() - (T::one() - xi) / root)
    })?;
    Ok(FixedPoint {
        zeta: T::one() - (T::one() - xi.zeta) / root,
        ..xi
    })
}

/// Analytic summary for diffusion at one `π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffusionReport<T = f64> {
    pub pi: T,
    pub pi_c: T,
    pub pi_c_finite: bool,
    pub zeta: T,
    /// `ζ` from the two-stage route; equals `zeta` up to solver tolerance.
    pub zeta_two_stage: T,
    pub giant_fraction: T,
    pub supercritical: bool,
    /// `π` within [`CRITICAL_BAND`] of `π_c`; reported with fraction 0.
    pub critical: bool,
    pub regularity_ok: bool,
}

impl<T: Real> DiffusionReport<T> {
    pub const CSV_HEADER: [&'static str; 9] = [
        "pi",
        "pi_c",
        "pi_c_finite",
        "zeta",
        "zeta_two_stage",
        "giant_fraction",
        "supercritical",
        "critical",
        "regularity_ok",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.pi.to_string(),
            self.pi_c.to_string(),
            self.pi_c_finite.to_string(),
            self.zeta.to_string(),
            self.zeta_two_stage.to_string(),
            self.giant_fraction.to_string(),
            self.supercritical.to_string(),
            self.critical.to_string(),
            self.regularity_ok.to_string(),
        ]
    }
}

/// Giant-component fraction `L(ζ)` of the percolated substituted graph.
pub fn diffusion_giant_fraction<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    pi: T,
) -> Result<DiffusionReport<T>> {
    let pc = diffusion_pi_c(p, gamma)?;
    diffusion_report_with(p, gamma, pi, pc)
}

/// As [`diffusion_giant_fraction`] with a precomputed threshold.
pub fn diffusion_report_with<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    pi: T,
    pc: PiC<T>,
) -> Result<DiffusionReport<T>> {
    if !(pi >= T::zero() && pi <= T::one()) {
        return Err(Error::param(format!("pi = {pi} outside [0, 1]")));
    }
    let band = T::lit(CRITICAL_BAND);
    let critical = pc.finite && (pi - pc.value).abs() <= band;
    let supercritical = pc.finite && pi > pc.value + band;
    let mut report = DiffusionReport {
        pi,
        pi_c: pc.value,
        pi_c_finite: pc.finite,
        zeta: T::one(),
        zeta_two_stage: T::one(),
        giant_fraction: T::zero(),
        supercritical,
        critical,
        regularity_ok: true,
    };
    if !supercritical {
        return Ok(report);
    }
    let laws = Laws::new(p, gamma, pi)?;
    let fp = zeta_with(&laws, pi)?;
    if !fp.nontrivial {
        return Err(Error::numeric(format!(
            "supercritical at pi = {pi} but no fixed point below 1"
        )));
    }
    let two = diffusion_zeta_two_stage(p, gamma, pi)?;
    report.zeta = fp.zeta;
    report.zeta_two_stage = two.zeta;
    report.regularity_ok = fp.regularity_ok;
    report.giant_fraction = laws.giant(pi, fp.zeta).max(T::zero()).min(T::one());
    Ok(report)
}

/// Final active fraction with independent per-vertex initial activation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActivationReport<T = f64> {
    pub zeta: T,
    pub fraction: T,
    pub regularity_ok: bool,
}

/// Final active fraction of diffusion seeded by activating each vertex of
/// degree `d` independently with probability `α_d`.
pub fn diffusion_activation_fraction<T: Real>(
    p: &DegreeDistribution<T>,
    gamma: &CliqueProfile<T>,
    pi: T,
    alpha: &ActivationProfile<T>,
) -> Result<ActivationReport<T>> {
    if !(pi >= T::zero() && pi <= T::one()) {
        return Err(Error::param(format!("pi = {pi} outside [0, 1]")));
    }
    let table = table_for(p, pi)?;
    let law = DerivedLaw::new(p, gamma, &table);
    let gt = gamma_tilde(p, gamma);
    let n = p.support_max() + 1;
    // h(z) = Σ_s hc_s x^s / ϱ and L(z) = Σ_s (lc_s - lx_s x^s) / γ̃
    let mut hc = vec![T::zero(); n];
    let mut lc = vec![T::zero(); n];
    let mut lx = vec![T::zero(); n];
    for (d, pd) in p.iter() {
        let g = gamma.get(d);
        let keep = T::one() - alpha.get(d);
        let dd = T::from_usize_lossy(d);
        let plain = (T::one() - g) * pd;
        hc[d] = hc[d] + dd * plain * keep;
        lc[d] = lc[d] + plain;
        lx[d] = lx[d] + plain * keep;
        if g > T::zero() && d > 0 {
            let mut keep_s = T::one();
            for s in 1..=d {
                keep_s = keep_s * keep;
                let w = dd * table.f(d, s) * g * pd;
                hc[s] = hc[s] + w * keep_s;
                lc[s] = lc[s] + w;
                lx[s] = lx[s] + w * keep_s;
            }
        }
    }
    let mu = law.mu;
    let rho = law.rho;
    let fp = locate(|z: T| {
        let x = T::one() - pi + pi * z;
        mu * z * x - Laws::series(&hc, x) / rho
    })?;
    let x = T::one() - pi + pi * fp.zeta;
    let total = lc.iter().fold(T::zero(), |a, &c| a + c);
    let fraction = ((total - Laws::series(&lx, x)) / gt).max(T::zero()).min(T::one());
    Ok(ActivationReport {
        zeta: fp.zeta,
        fraction,
        regularity_ok: fp.regularity_ok,
    })
}
