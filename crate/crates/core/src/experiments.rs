//! Figure presets: analytic curves, with optional Monte Carlo overlays.

use crate::dist::{DegreeDistribution, DEFAULT_KAPPA};
use crate::error::{Error, Result};
use crate::graphgen::{generate, SimplePolicy};
use crate::model::{biased_clustering, clustering, substituted_degree_law};
use crate::perc::{diffusion_giant_fraction, diffusion_pi_c};
use crate::profile::CliqueProfile;
use crate::sim::{
    assign_thresholds, bond_percolate_components, monte_carlo, pivotal_set, threshold_final_set, ReplicaPlan,
    SeedSet, Summary,
};
use crate::thresh::{analyze_contagion, contagion_qc, ThresholdDistribution};
use crate::tuner::{c2_max, c_max, tune};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    ClustRange,
    DiffRegular,
    DiffSize,
    DiffPowerlaw,
    ContThresholds,
    ContVsC,
    CascadeSizes,
    CascadeVsC,
}

impl Figure {
    pub const ALL: [Figure; 8] = [
        Figure::ClustRange,
        Figure::DiffRegular,
        Figure::DiffSize,
        Figure::DiffPowerlaw,
        Figure::ContThresholds,
        Figure::ContVsC,
        Figure::CascadeSizes,
        Figure::CascadeVsC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::ClustRange => "fig_clust_range",
            Figure::DiffRegular => "fig_diff_regular",
            Figure::DiffSize => "fig_diff_size",
            Figure::DiffPowerlaw => "fig_diff_powerlaw",
            Figure::ContThresholds => "fig_cont_thresholds",
            Figure::ContVsC => "fig_cont_vs_C",
            Figure::CascadeSizes => "fig_cascade_sizes",
            Figure::CascadeVsC => "fig_cascade_vs_C",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::param(format!("unknown experiment '{name}'")))
    }

    /// Whether a simulation overlay exists for this figure.
    pub fn simulable(self) -> bool {
        matches!(self, Figure::DiffSize | Figure::CascadeSizes | Figure::CascadeVsC)
    }
}

/// Taus of the diffusion power-law figure.
pub const DIFF_TAUS: [f64; 4] = [2.9, 2.5, 1.81, 1.3];
/// Taus of the contagion-vs-clustering figure.
pub const CONT_TAUS: [f64; 3] = [2.5, 1.81, 0.1];
/// Taus of the cascade-vs-clustering figure.
pub const CASCADE_TAUS: [f64; 4] = [2.5, 1.81, 1.3, 1.0];
pub const DIFF_SIZE_PI: f64 = 0.22;
pub const CASCADE_SIZES_Q: f64 = 0.15;
pub const CASCADE_VS_C_Q: f64 = 0.12;
/// Clique probability of the clustered Poisson family.
pub const CASCADE_SIZES_GAMMA: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimOptions {
    pub n: usize,
    pub replicas: usize,
    pub base_seed: u64,
    pub policy: SimplePolicy,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self { n: 100_000, replicas: 50, base_seed: 1, policy: SimplePolicy::Erase }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOptions {
    /// Points on each swept axis.
    pub points: usize,
    pub kappa: f64,
    pub sim: Option<SimOptions>,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        Self { points: 21, kappa: DEFAULT_KAPPA, sim: None }
    }
}

/// Result table; every value already formatted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(cols: &[&str]) -> Self {
        Self { header: cols.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Column parsed as floats; blanks become NaN.
    pub fn floats(&self, name: &str) -> Vec<f64> {
        let j = self.column(name).expect("column exists");
        self.rows.iter().map(|r| r[j].parse().unwrap_or(f64::NAN)).collect()
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let e = |e: csv::Error| Error::Internal(format!("csv: {e}"));
        w.write_record(&self.header).map_err(e)?;
        for r in &self.rows {
            w.write_record(r).map_err(e)?;
        }
        w.flush().map_err(|e| Error::Internal(e.to_string()))
    }
}

fn grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![lo];
    }
    (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect()
}

fn s(x: f64) -> String {
    x.to_string()
}

fn sim_cols(t: &mut Table, names: &[&str]) {
    for n in names {
        for suffix in ["mean", "ci_lo", "ci_hi"] {
            t.header.push(format!("sim_{n}_{suffix}"));
        }
    }
    t.header.push("replicas".into());
    t.header.push("base_seed".into());
}

fn sim_values(sums: &[Summary], plan: &ReplicaPlan) -> Vec<String> {
    let mut v: Vec<String> = sums.iter().flat_map(|m| [s(m.mean), s(m.ci_lo), s(m.ci_hi)]).collect();
    v.push(plan.replicas.to_string());
    v.push(plan.base_seed.to_string());
    v
}

fn plan_for(opts: &SimOptions, point: usize) -> Result<ReplicaPlan> {
    ReplicaPlan::new(opts.replicas, rng::derive(opts.base_seed, point as u64))
}

/// Simulated largest component fraction after percolation at `pi`.
pub fn simulate_giant(
    p: &DegreeDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    pi: f64,
    opts: &SimOptions,
    plan: &ReplicaPlan,
) -> Result<Summary> {
    let out = monte_carlo(plan, &["largest"], |seed| {
        let g = generate(p, opts.n, gamma, opts.policy, rng::derive(seed, 0))?;
        let c = bond_percolate_components(&g, pi, rng::derive(seed, 1));
        Ok(vec![c.largest as f64 / g.n_vertices() as f64])
    })?;
    Ok(out.into_iter().next().unwrap())
}

/// Simulated pivotal fraction and cascade fraction from a uniformly random
/// pivotal vertex (zero when the pivotal set is empty).
pub fn simulate_cascade(
    p: &DegreeDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    t: &ThresholdDistribution<f64>,
    opts: &SimOptions,
    plan: &ReplicaPlan,
) -> Result<(Summary, Summary)> {
    let out = monte_carlo(plan, &["pivotal", "cascade"], |seed| {
        let g = generate(p, opts.n, gamma, opts.policy, rng::derive(seed, 0))?;
        let k = assign_thresholds(&g, t, rng::derive(seed, 1))?;
        let piv = pivotal_set(&g, &k);
        let n = g.n_vertices() as f64;
        if piv.is_empty() {
            return Ok(vec![0.0, 0.0]);
        }
        use rand::Rng as _;
        let u = piv[rng::rng(rng::derive(seed, 2)).random_range(0..piv.len())];
        let active = threshold_final_set(&g, &k, &SeedSet::from_vertices(vec![u]));
        Ok(vec![piv.len() as f64 / n, active.iter().filter(|&&a| a).count() as f64 / n])
    })?;
    let mut it = out.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

pub fn run(fig: Figure, opts: &ExperimentOptions) -> Result<Table> {
    if opts.points < 2 {
        return Err(Error::param("need at least 2 grid points"));
    }
    if opts.sim.is_some() && !fig.simulable() {
        return Err(Error::param(format!("{} has no simulation overlay", fig.name())));
    }
    match fig {
        Figure::ClustRange => clust_range(opts),
        Figure::DiffRegular => diff_regular(opts),
        Figure::DiffSize => diff_size(opts),
        Figure::DiffPowerlaw => diff_powerlaw(opts),
        Figure::ContThresholds => cont_thresholds(opts),
        Figure::ContVsC => cont_vs_c(opts),
        Figure::CascadeSizes => cascade_sizes(opts),
        Figure::CascadeVsC => cascade_vs_c(opts),
    }
}

fn clust_range(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&["tau", "mean_degree", "c_max", "c2_max"]);
    for tau in grid(0.1, 3.0, (o.points - 1) * 3 / 2 + 1) {
        let pt = DegreeDistribution::power_law_auto(tau, o.kappa)?;
        t.push(vec![s(tau), s(pt.mean()), s(c_max(&pt)?), s(c2_max(&pt)?)]);
    }
    Ok(t)
}

/// `γ` giving clustering `c` on a `d`-regular target: `c = γ(d-2)/(γ(d-1)+1)`.
pub fn regular_gamma(d: usize, c: f64) -> f64 {
    let d = d as f64;
    (c / (d - 2.0 - c * (d - 1.0))).clamp(0.0, 1.0)
}

/// Clustering axis `0, 0.05, ...` closed by `C^max`.
pub fn clustering_axis(top: f64, step: f64) -> Vec<f64> {
    let mut v: Vec<f64> = (0..).map(|i| i as f64 * step).take_while(|&c| c < top - 1e-12).collect();
    v.push(top);
    v
}

fn diff_regular(_: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&["d", "C", "gamma", "pi_c", "pi_c_finite"]);
    for d in 3..=10usize {
        let p = DegreeDistribution::regular(d)?;
        for c in clustering_axis(1.0 - 2.0 / d as f64, 0.05) {
            let g = regular_gamma(d, c);
            let pc = diffusion_pi_c(&p, &CliqueProfile::constant(g)?)?;
            t.push(vec![d.to_string(), s(c), s(g), s(pc.value), pc.finite.to_string()]);
        }
    }
    Ok(t)
}

fn diff_size(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&["d", "C", "gamma", "pi", "giant_fraction"]);
    if o.sim.is_some() {
        sim_cols(&mut t, &["largest"]);
    }
    let mut point = 0;
    for d in 3..=10usize {
        let p = DegreeDistribution::regular(d)?;
        for c in clustering_axis(1.0 - 2.0 / d as f64, 0.05) {
            let g = regular_gamma(d, c);
            let gamma = CliqueProfile::constant(g)?;
            let r = diffusion_giant_fraction(&p, &gamma, DIFF_SIZE_PI)?;
            let mut row = vec![d.to_string(), s(c), s(g), s(DIFF_SIZE_PI), s(r.giant_fraction)];
            if let Some(so) = &o.sim {
                let plan = plan_for(so, point)?;
                row.extend(sim_values(&[simulate_giant(&p, &gamma, DIFF_SIZE_PI, so, &plan)?], &plan));
            }
            point += 1;
            t.push(row);
        }
    }
    Ok(t)
}

fn diff_powerlaw(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&["tau", "mean_degree", "C", "gamma", "pi_c", "pi_c_finite"]);
    for tau in DIFF_TAUS {
        let pt = DegreeDistribution::power_law_auto(tau, o.kappa)?;
        for c in grid(0.0, c_max(&pt)?, o.points) {
            let tr = tune(&pt, c)?;
            let pc = diffusion_pi_c(&tr.p, &CliqueProfile::constant(tr.gamma)?)?;
            t.push(vec![s(tau), s(pt.mean()), s(c), s(tr.gamma), s(pc.value), pc.finite.to_string()]);
        }
    }
    Ok(t)
}

/// Original law of the fully clustered graph with target `p̃`.
fn full_clique_law(pt: &DegreeDistribution<f64>) -> Result<DegreeDistribution<f64>> {
    Ok(crate::tuner::original_law(pt, 1.0)?.1)
}

fn cont_thresholds(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&["family", "param", "mean_degree", "q_c0", "q_c1"]);
    for tau in grid(0.1, 3.0, (o.points - 1) * 3 / 2 + 1) {
        let pt = DegreeDistribution::power_law_auto(tau, o.kappa)?;
        let q0 = contagion_qc(&pt).q_c;
        let q1 = contagion_qc(&full_clique_law(&pt)?).q_c;
        t.push(vec!["powerlaw".into(), s(tau), s(pt.mean()), s(q0), s(q1)]);
    }
    for lambda in grid(0.5, 20.0, (o.points - 1) * 2 + 1) {
        // p̃ is one plus a Poisson variable; with γ = 1 the original law is Poisson.
        let pt = DegreeDistribution::poisson_auto(lambda, true)?;
        let p1 = DegreeDistribution::poisson_auto(lambda, false)?;
        t.push(vec!["poisson".into(), s(lambda), s(pt.mean()), s(contagion_qc(&pt).q_c), s(contagion_qc(&p1).q_c)]);
    }
    Ok(t)
}

fn cont_vs_c(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&["tau", "mean_degree", "C", "gamma", "q_c"]);
    for tau in CONT_TAUS {
        let pt = DegreeDistribution::power_law_auto(tau, o.kappa)?;
        for c in grid(0.0, c_max(&pt)?, o.points) {
            let tr = tune(&pt, c)?;
            t.push(vec![s(tau), s(pt.mean()), s(c), s(tr.gamma), s(contagion_qc(&tr.p).q_c)]);
        }
    }
    Ok(t)
}

/// The clustered member of the cascade-size family and its unclustered twin.
pub fn cascade_pair(lambda: f64) -> Result<[(DegreeDistribution<f64>, CliqueProfile<f64>); 2]> {
    let p = DegreeDistribution::poisson_auto(lambda, false)?;
    let gamma = CliqueProfile::constant(CASCADE_SIZES_GAMMA)?;
    let pt = substituted_degree_law(&p, &gamma)?;
    Ok([(p, gamma), (pt, CliqueProfile::constant(0.0)?)])
}

fn cascade_sizes(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&[
        "graph",
        "lambda",
        "mean_degree",
        "C",
        "C2",
        "cascade_possible",
        "pivotal_fraction",
        "cascade_fraction",
    ]);
    if o.sim.is_some() {
        sim_cols(&mut t, &["pivotal", "cascade"]);
    }
    let mut point = 0;
    for lambda in grid(0.25, 12.0, (o.points - 1) * 2 + 1) {
        let pair = cascade_pair(lambda)?;
        let mean = substituted_degree_law(&pair[0].0, &pair[0].1)?.mean();
        for (label, (p, gamma)) in ["clustered", "unclustered"].iter().zip(&pair) {
            let r = analyze_contagion(p, gamma, CASCADE_SIZES_Q)?;
            let mut row = vec![
                label.to_string(),
                s(lambda),
                s(mean),
                s(clustering(p, gamma)),
                s(biased_clustering(p, gamma)),
                r.cascade_possible.to_string(),
                s(r.pivotal_fraction),
                s(r.cascade_fraction),
            ];
            if let Some(so) = &o.sim {
                let plan = plan_for(so, point)?;
                let th = ThresholdDistribution::contagion(CASCADE_SIZES_Q, p.support_max())?;
                let (a, b) = simulate_cascade(p, gamma, &th, so, &plan)?;
                row.extend(sim_values(&[a, b], &plan));
            }
            point += 1;
            t.push(row);
        }
    }
    Ok(t)
}

fn cascade_vs_c(o: &ExperimentOptions) -> Result<Table> {
    let mut t = Table::new(&[
        "tau",
        "mean_degree",
        "C",
        "gamma",
        "cascade_possible",
        "pivotal_fraction",
        "cascade_fraction",
    ]);
    if o.sim.is_some() {
        sim_cols(&mut t, &["pivotal", "cascade"]);
    }
    let mut point = 0;
    for tau in CASCADE_TAUS {
        let pt = DegreeDistribution::power_law_auto(tau, o.kappa)?;
        for c in grid(0.0, c_max(&pt)?, o.points) {
            let tr = tune(&pt, c)?;
            let gamma = CliqueProfile::constant(tr.gamma)?;
            let r = analyze_contagion(&tr.p, &gamma, CASCADE_VS_C_Q)?;
            let mut row = vec![
                s(tau),
                s(pt.mean()),
                s(c),
                s(tr.gamma),
                r.cascade_possible.to_string(),
                s(r.pivotal_fraction),
                s(r.cascade_fraction),
            ];
            if let Some(so) = &o.sim {
                let plan = plan_for(so, point)?;
                let th = ThresholdDistribution::contagion(CASCADE_VS_C_Q, tr.p.support_max())?;
                let (a, b) = simulate_cascade(&tr.p, &gamma, &th, so, &plan)?;
                row.extend(sim_values(&[a, b], &plan));
            }
            point += 1;
            t.push(row);
        }
    }
    Ok(t)
}
