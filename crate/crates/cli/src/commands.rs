//! Subcommands. Each resolves and validates every setting first, then computes.

use std::path::PathBuf;

use cliquenet::dist::DegreeDistribution;
use cliquenet::experiments::{self, ExperimentOptions, Figure, SimOptions};
use cliquenet::graphgen::{generate, SimplePolicy};
use cliquenet::perc::{
    diffusion_activation_fraction, diffusion_pi_c, diffusion_report_with, offspring_mean, pi_c_moment_route,
    DiffusionReport,
};
use cliquenet::rng;
use cliquenet::sim::{
    assign_thresholds, monte_carlo, run_diffusion, threshold_final_set, write_summaries, ReplicaPlan, SeedSet, Summary,
};
use cliquenet::thresh::{
    activation_cascade_fraction, analyze_contagion, analyze_thresholds, ContagionReport, ThresholdDistribution,
};
use cliquenet::tuner;
use cliquenet::{ActivationProfile, CliqueProfile};

use crate::config::Settings;
use crate::error::CliError;
use crate::output::{csv_bytes, emit, metadata};
use crate::spec::DistSpec;
use crate::{Common, GraphArgs, Process, ProcessArgs, SimArgs};

const DEFAULT_N: usize = 100_000;
const DEFAULT_REPLICAS: usize = 50;
const DEFAULT_SEED: u64 = 1;

fn deny(given: bool, flag: &str, command: &str) -> Result<(), CliError> {
    if given {
        Err(CliError::usage(format!("{command} does not take {flag}")))
    } else {
        Ok(())
    }
}

fn or_default<T: ToString>(s: &mut Settings, key: &str, v: Option<T>, default: T) -> T {
    v.unwrap_or_else(|| {
        s.note(key, default.to_string());
        default
    })
}

struct Resolved {
    settings: Settings,
    out: Option<PathBuf>,
}

fn start(common: &Common, command: &str) -> Result<Resolved, CliError> {
    let mut settings = Settings::load(common.config.as_deref(), command)?;
    let out = settings.string("out", common.out.as_ref().map(|p| p.display().to_string()))?.map(PathBuf::from);
    Ok(Resolved { settings, out })
}

fn law(s: &mut Settings, g: &GraphArgs) -> Result<DegreeDistribution<f64>, CliError> {
    let text = s.string("dist", g.dist.clone())?.ok_or_else(|| CliError::usage("missing --dist"))?;
    DistSpec::parse(&text)?.build()
}

fn clique_profile(s: &mut Settings, g: &GraphArgs) -> Result<CliqueProfile<f64>, CliError> {
    let text = s.string("gamma", g.gamma.clone())?;
    let text = or_default(s, "gamma", text, "0".to_string());
    Ok(CliqueProfile::parse(&text)?)
}

fn alpha_profile(s: &mut Settings, a: &ProcessArgs) -> Result<Option<(String, ActivationProfile<f64>)>, CliError> {
    match s.string("alpha", a.alpha.clone())? {
        None => Ok(None),
        Some(t) => {
            let prof = ActivationProfile::parse(&t)?;
            Ok(Some((t, prof)))
        }
    }
}

fn policy(s: &mut Settings, a: &SimArgs, default: SimplePolicy) -> Result<SimplePolicy, CliError> {
    match s.string("policy", a.policy.clone())? {
        Some(t) => Ok(SimplePolicy::parse(&t)?),
        None => {
            s.note("policy", default.describe());
            Ok(default)
        }
    }
}

fn pis(s: &mut Settings, a: &ProcessArgs) -> Result<Vec<f64>, CliError> {
    let v = s.f64_list("pi", a.pi.clone())?;
    if let Some(x) = v.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(CliError::usage(format!("pi = {x} outside [0, 1]")));
    }
    Ok(v)
}

/// Contagion threshold choice: `q` for `⌊q d⌋`, or a constant `k`.
enum Rule {
    Q(f64),
    K(usize),
}

impl Rule {
    fn resolve(s: &mut Settings, a: &ProcessArgs) -> Result<Self, CliError> {
        let q = s.f64("q", a.q)?;
        let k = s.usize("k", a.k)?;
        match (q, k) {
            (Some(_), Some(_)) => Err(CliError::usage("give either --q or --k, not both")),
            (Some(q), None) if (0.0..=1.0).contains(&q) => Ok(Rule::Q(q)),
            (Some(q), None) => Err(CliError::usage(format!("q = {q} outside [0, 1]"))),
            (None, Some(k)) => Ok(Rule::K(k)),
            (None, None) => Err(CliError::usage("contagion needs --q or --k")),
        }
    }

    fn column(&self) -> (&'static str, String) {
        match self {
            Rule::Q(q) => ("q", q.to_string()),
            Rule::K(k) => ("k", k.to_string()),
        }
    }

    fn thresholds(&self, s_max: usize) -> Result<ThresholdDistribution<f64>, CliError> {
        Ok(match self {
            Rule::Q(q) => ThresholdDistribution::contagion(*q, s_max)?,
            Rule::K(k) => ThresholdDistribution::constant(*k, s_max),
        })
    }
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

pub fn dist(g: &GraphArgs, common: &Common) -> Result<(), CliError> {
    deny(g.gamma.is_some(), "--gamma", "dist")?;
    let Resolved { mut settings, out } = start(common, "dist")?;
    let p = law(&mut settings, g)?;
    let extra = [
        ("mean", p.mean().to_string()),
        ("support_max", p.support_max().to_string()),
        ("tail_mass_dropped", p.tail_mass_dropped().to_string()),
    ];
    emit(out.as_deref(), &metadata("dist", &settings, &extra), p.to_table().as_bytes())
}

pub fn tune(g: &GraphArgs, c: Option<f64>, biased: bool, common: &Common) -> Result<(), CliError> {
    deny(g.gamma.is_some(), "--gamma", "tune")?;
    let Resolved { mut settings, out } = start(common, "tune")?;
    let target = law(&mut settings, g)?;
    let c = settings.f64("C", c)?.ok_or_else(|| CliError::usage("missing --C"))?;
    let biased = settings.bool("biased", biased)?;
    let r = if biased { tuner::tune_biased(&target, c)? } else { tuner::tune(&target, c)? };
    let extra = [
        ("gamma_tuned", r.gamma.to_string()),
        ("lambda", r.lambda.to_string()),
        ("achieved_C", r.achieved_c.to_string()),
    ];
    emit(out.as_deref(), &metadata("tune", &settings, &extra), r.p.to_table().as_bytes())
}

pub fn analyze(process: Process, g: &GraphArgs, a: &ProcessArgs, common: &Common) -> Result<(), CliError> {
    let name = match process {
        Process::Diffusion => "analyze diffusion",
        Process::Contagion => "analyze contagion",
    };
    let Resolved { mut settings, out } = start(common, "analyze")?;
    let s = &mut settings;
    let p = law(s, g)?;
    let gamma = clique_profile(s, g)?;
    let (head, rows) = match process {
        Process::Diffusion => {
            deny(a.q.is_some(), "--q", name)?;
            deny(a.k.is_some(), "--k", name)?;
            let pis = pis(s, a)?;
            let alpha = alpha_profile(s, a)?;
            if alpha.is_some() && pis.is_empty() {
                return Err(CliError::usage("--alpha needs --pi"));
            }
            analyze_diffusion(&p, &gamma, &pis, alpha)?
        }
        Process::Contagion => {
            deny(!a.pi.is_empty(), "--pi", name)?;
            let rule = Rule::resolve(s, a)?;
            let alpha = alpha_profile(s, a)?;
            analyze_cascade(&p, &gamma, &rule, alpha)?
        }
    };
    emit(out.as_deref(), &metadata(name, &settings, &[]), &csv_bytes(&head, &rows)?)
}

type Rows = (Vec<String>, Vec<Vec<String>>);

fn analyze_diffusion(
    p: &DegreeDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    pis: &[f64],
    alpha: Option<(String, ActivationProfile<f64>)>,
) -> Result<Rows, CliError> {
    if let Some((text, alpha)) = alpha {
        let mut rows = Vec::new();
        for &pi in pis {
            let r = diffusion_activation_fraction(p, gamma, pi, &alpha)?;
            rows.push(vec![pi.to_string(), text.clone(), r.zeta.to_string(), r.fraction.to_string(), r.regularity_ok.to_string()]);
        }
        return Ok((header(&["pi", "alpha", "zeta", "fraction", "regularity_ok"]), rows));
    }
    let pc = diffusion_pi_c(p, gamma)?;
    if pis.is_empty() {
        let moment = pi_c_moment_route(p, gamma)?;
        let at = if pc.finite { offspring_mean(p, gamma, pc.value)?.to_string() } else { String::new() };
        let row = vec![pc.value.to_string(), pc.finite.to_string(), moment.value.to_string(), at];
        return Ok((header(&["pi_c", "pi_c_finite", "pi_c_moment_route", "offspring_at_pi_c"]), vec![row]));
    }
    let rows = pis.iter().map(|&pi| Ok(diffusion_report_with(p, gamma, pi, pc)?.csv_row())).collect::<Result<_, CliError>>()?;
    Ok((header(&DiffusionReport::<f64>::CSV_HEADER), rows))
}

fn analyze_cascade(
    p: &DegreeDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    rule: &Rule,
    alpha: Option<(String, ActivationProfile<f64>)>,
) -> Result<Rows, CliError> {
    let (col, val) = rule.column();
    if let Some((text, alpha)) = alpha {
        let t = rule.thresholds(p.support_max())?;
        let r = activation_cascade_fraction(p, gamma, &t, &alpha)?;
        let row = vec![val, text, r.zeta.to_string(), r.cascade_fraction.to_string(), r.regularity_ok.to_string()];
        return Ok((header(&[col, "alpha", "zeta", "cascade_fraction", "regularity_ok"]), vec![row]));
    }
    let report = match rule {
        Rule::Q(q) => analyze_contagion(p, gamma, *q)?,
        Rule::K(_) => analyze_thresholds(p, gamma, &rule.thresholds(p.support_max())?)?,
    };
    let mut head = vec![col.to_string()];
    head.extend(header(&ContagionReport::<f64>::CSV_HEADER));
    let mut row = vec![val];
    row.extend(report.csv_row());
    Ok((head, vec![row]))
}

pub fn gen(g: &GraphArgs, a: &SimArgs, common: &Common) -> Result<(), CliError> {
    deny(a.replicas.is_some(), "--replicas", "gen")?;
    let Resolved { mut settings, out } = start(common, "gen")?;
    let s = &mut settings;
    let p = law(s, g)?;
    let gamma = clique_profile(s, g)?;
    let n = s.usize("n", a.n)?;
    let n = or_default(s, "n", n, DEFAULT_N);
    let seed = s.u64("seed", a.seed)?;
    let seed = or_default(s, "seed", seed, DEFAULT_SEED);
    let policy = policy(s, a, SimplePolicy::default())?;
    let graph = generate(&p, n, &gamma, policy, seed)?;
    let extra = [
        ("vertices", graph.n_vertices().to_string()),
        ("edges", graph.n_edges().to_string()),
    ];
    emit(out.as_deref(), &metadata("gen", &settings, &extra), graph.to_text().as_bytes())
}

struct Campaign {
    n: usize,
    policy: SimplePolicy,
    plan: ReplicaPlan,
}

fn campaign(s: &mut Settings, a: &SimArgs, default_policy: SimplePolicy) -> Result<Campaign, CliError> {
    let n = s.usize("n", a.n)?;
    let n = or_default(s, "n", n, DEFAULT_N);
    let replicas = s.usize("replicas", a.replicas)?;
    let replicas = or_default(s, "replicas", replicas, DEFAULT_REPLICAS);
    let seed = s.u64("seed", a.seed)?;
    let seed = or_default(s, "seed", seed, DEFAULT_SEED);
    let policy = policy(s, a, default_policy)?;
    if n == 0 {
        return Err(CliError::usage("n must be positive"));
    }
    Ok(Campaign { n, policy, plan: ReplicaPlan::new(replicas, seed)? })
}

type SimRow = (Vec<String>, Summary, Option<f64>);

pub fn simulate(process: Process, g: &GraphArgs, a: &ProcessArgs, sa: &SimArgs, common: &Common) -> Result<(), CliError> {
    let name = match process {
        Process::Diffusion => "simulate diffusion",
        Process::Contagion => "simulate contagion",
    };
    let Resolved { mut settings, out } = start(common, "simulate")?;
    let s = &mut settings;
    let p = law(s, g)?;
    let gamma = clique_profile(s, g)?;
    let (params, rows, seed): (Vec<&str>, Vec<SimRow>, u64) = match process {
        Process::Diffusion => {
            deny(a.q.is_some(), "--q", name)?;
            deny(a.k.is_some(), "--k", name)?;
            let pis = pis(s, a)?;
            if pis.is_empty() {
                return Err(CliError::usage("simulate diffusion needs --pi"));
            }
            let alpha = alpha_profile(s, a)?;
            let c = campaign(s, sa, SimplePolicy::default())?;
            let (params, rows) = simulate_diffusion(&p, &gamma, &pis, alpha, &c)?;
            (params, rows, c.plan.base_seed)
        }
        Process::Contagion => {
            deny(!a.pi.is_empty(), "--pi", name)?;
            let rule = Rule::resolve(s, a)?;
            let alpha = alpha_profile(s, a)?;
            let c = campaign(s, sa, SimplePolicy::default())?;
            let (params, rows) = simulate_cascade(&p, &gamma, &rule, alpha, &c)?;
            (params, rows, c.plan.base_seed)
        }
    };
    let mut body = Vec::new();
    write_summaries(&mut body, &params, &rows, seed)?;
    emit(out.as_deref(), &metadata(name, &settings, &[]), &body)
}

fn simulate_diffusion(
    p: &DegreeDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    pis: &[f64],
    alpha: Option<(String, ActivationProfile<f64>)>,
    c: &Campaign,
) -> Result<(Vec<&'static str>, Vec<SimRow>), CliError> {
    let pc = diffusion_pi_c(p, gamma)?;
    let mut rows = Vec::new();
    for &pi in pis {
        match &alpha {
            None => {
                let analytic = diffusion_report_with(p, gamma, pi, pc)?.giant_fraction;
                let sums = monte_carlo(&c.plan, &["largest"], |seed| {
                    let g = generate(p, c.n, gamma, c.policy, rng::derive(seed, 0))?;
                    let comps = cliquenet::sim::bond_percolate_components(&g, pi, rng::derive(seed, 1));
                    Ok(vec![comps.largest as f64 / g.n_vertices() as f64])
                })?;
                rows.extend(sums.into_iter().map(|m| (vec![pi.to_string()], m, Some(analytic))));
            }
            Some((text, alpha)) => {
                let analytic = diffusion_activation_fraction(p, gamma, pi, alpha)?.fraction;
                let sums = monte_carlo(&c.plan, &["active"], |seed| {
                    let g = generate(p, c.n, gamma, c.policy, rng::derive(seed, 0))?;
                    let seeds = SeedSet::degree_independent(&g, alpha, rng::derive(seed, 1));
                    Ok(vec![run_diffusion(&g, pi, &seeds, rng::derive(seed, 2)).fraction(g.n_vertices())])
                })?;
                rows.extend(sums.into_iter().map(|m| (vec![pi.to_string(), text.clone()], m, Some(analytic))));
            }
        }
    }
    let params = if alpha.is_some() { vec!["pi", "alpha"] } else { vec!["pi"] };
    Ok((params, rows))
}

fn simulate_cascade(
    p: &DegreeDistribution<f64>,
    gamma: &CliqueProfile<f64>,
    rule: &Rule,
    alpha: Option<(String, ActivationProfile<f64>)>,
    c: &Campaign,
) -> Result<(Vec<&'static str>, Vec<SimRow>), CliError> {
    let (col, val) = rule.column();
    let t = rule.thresholds(p.support_max())?;
    match alpha {
        None => {
            let report = analyze_thresholds(p, gamma, &t)?;
            let opts = SimOptions { n: c.n, replicas: c.plan.replicas, base_seed: c.plan.base_seed, policy: c.policy };
            let (piv, casc) = experiments::simulate_cascade(p, gamma, &t, &opts, &c.plan)?;
            let rows = vec![
                (vec![val.clone()], piv, Some(report.pivotal_fraction)),
                (vec![val], casc, Some(report.cascade_fraction)),
            ];
            Ok((vec![col], rows))
        }
        Some((text, alpha)) => {
            let analytic = activation_cascade_fraction(p, gamma, &t, &alpha)?.cascade_fraction;
            let sums = monte_carlo(&c.plan, &["active"], |seed| {
                let g = generate(p, c.n, gamma, c.policy, rng::derive(seed, 0))?;
                let k = assign_thresholds(&g, &t, rng::derive(seed, 1))?;
                let seeds = SeedSet::clique_correlated(&g, &alpha, rng::derive(seed, 2));
                let active = threshold_final_set(&g, &k, &seeds);
                Ok(vec![active.iter().filter(|&&x| x).count() as f64 / g.n_vertices() as f64])
            })?;
            let rows = sums.into_iter().map(|m| (vec![val.clone(), text.clone()], m, Some(analytic))).collect();
            Ok((vec![col, "alpha"], rows))
        }
    }
}

pub fn experiment(
    name: &str,
    points: Option<usize>,
    kappa: Option<f64>,
    simulate: bool,
    sa: &SimArgs,
    out_dir: Option<PathBuf>,
    common: &Common,
) -> Result<(), CliError> {
    let Resolved { mut settings, out } = start(common, "experiment")?;
    let s = &mut settings;
    let figures: Vec<Figure> = if name == "all" { Figure::ALL.to_vec() } else { vec![Figure::parse(name)?] };
    let defaults = ExperimentOptions::default();
    let points = s.usize("points", points)?;
    let points = or_default(s, "points", points, defaults.points);
    let kappa = s.f64("kappa", kappa)?;
    let kappa = or_default(s, "kappa", kappa, defaults.kappa);
    let simulate = s.bool("simulate", simulate)?;
    let sim = if simulate {
        let c = campaign(s, sa, SimOptions::default().policy)?;
        Some(SimOptions { n: c.n, replicas: c.plan.replicas, base_seed: c.plan.base_seed, policy: c.policy })
    } else {
        deny(sa.n.is_some() || sa.replicas.is_some() || sa.seed.is_some() || sa.policy.is_some(), "simulation flags", "experiment without --simulate")?;
        None
    };
    let out_dir = s.string("out_dir", out_dir.map(|p| p.display().to_string()))?.map(PathBuf::from);
    if figures.len() > 1 && out_dir.is_none() {
        return Err(CliError::usage("experiment all needs --out-dir"));
    }
    if out_dir.is_some() && out.is_some() {
        return Err(CliError::usage("give either --out or --out-dir"));
    }
    if let Some(dir) = &out_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display().to_string(), e))?;
    }
    for fig in figures {
        let opts = ExperimentOptions { points, kappa, sim: if fig.simulable() || name != "all" { sim } else { None } };
        let table = experiments::run(fig, &opts)?;
        let mut body = Vec::new();
        table.write_csv(&mut body)?;
        let meta = metadata("experiment", &settings, &[("figure", fig.name().to_string()), ("simulated", opts.sim.is_some().to_string())]);
        let path = out_dir.as_deref().map(|d| d.join(format!("{}.csv", fig.name())));
        emit(path.as_deref().or(out.as_deref()), &meta, &body)?;
    }
    Ok(())
}
