//! Acceptance checks. Prints one `criterion N: PASS|FAIL ...` line per
//! criterion. Set `ACCEPTANCE_STRICT=1` to exit non-zero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng as _;

use cliquenet::dist::DegreeDistribution;
use cliquenet::experiments::{
    cascade_pair, clustering_axis, regular_gamma, run, simulate_cascade, simulate_giant, ExperimentOptions, Figure,
    SimOptions, CASCADE_SIZES_Q,
};
use cliquenet::graphgen::{empirical_clustering, empirical_degree_hist, generate, SimplePolicy};
use cliquenet::model::{biased_clustering, clustering, substituted_degree_law};
use cliquenet::perc::{diffusion_activation_fraction, diffusion_giant_fraction, diffusion_pi_c, offspring_mean, GilbertTable};
use cliquenet::rng;
use cliquenet::sim::{
    assign_thresholds, coupling_run, internal_percolation_census, monte_carlo, run_diffusion, threshold_final_set,
    ReplicaPlan, SeedSet, Summary,
};
use cliquenet::thresh::{
    activation_cascade_fraction, analyze_contagion, cascade_condition, contagion_qc, contagion_zeta_l,
    ThresholdDistribution,
};
use cliquenet::tuner::{c_max, tune};
use cliquenet::{ActivationProfile, CliqueProfile, Result};

const N: usize = 100_000;
const REPLICAS: usize = 50;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn gamma(g: f64) -> CliqueProfile<f64> {
    CliqueProfile::constant(g).unwrap()
}

fn sim(policy: SimplePolicy, base_seed: u64) -> (SimOptions, ReplicaPlan) {
    let o = SimOptions { n: N, replicas: REPLICAS, base_seed, policy };
    (o, ReplicaPlan::new(REPLICAS, base_seed).unwrap())
}

/// Component-size law of vertex 0 in K_d by summing over all edge subsets.
fn enumerate_gilbert(d: usize, pi: f64) -> Vec<f64> {
    let edges: Vec<(usize, usize)> = (0..d).flat_map(|u| (u + 1..d).map(move |v| (u, v))).collect();
    let m = edges.len();
    let mut law = vec![0.0; d + 1];
    for mask in 0u32..(1 << m) {
        let kept = mask.count_ones() as i32;
        let w = pi.powi(kept) * (1.0 - pi).powi(m as i32 - kept);
        let mut reach = 1u32;
        loop {
            let before = reach;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 && (reach >> u & 1 == 1 || reach >> v & 1 == 1) {
                    reach |= 1 << u | 1 << v;
                }
            }
            if reach == before {
                break;
            }
        }
        law[reach.count_ones() as usize] += w;
    }
    law
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for i in 1..=9 {
        let pi = i as f64 / 10.0;
        let table = GilbertTable::new(6, pi).unwrap();
        for d in 1..=6 {
            let law = enumerate_gilbert(d, pi);
            for k in 1..=d {
                worst = worst.max((table.f(d, k) - law[k]).abs());
            }
        }
    }
    let mut row_err: f64 = 0.0;
    for i in 1..=9 {
        let table = GilbertTable::new(150, i as f64 / 10.0).unwrap();
        for d in 1..=150 {
            row_err = row_err.max((table.row(d).iter().sum::<f64>() - 1.0).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst < 1e-12 && row_err < 1e-12 && secs < 10.0,
        format!("max enumeration error {worst:.2e}, max row-sum error {row_err:.2e}, {secs:.2} s"),
    )
}

/// `(name, p, γ, policy)`; power laws use erasure since rejection would
/// almost never produce a simple graph.
fn presets() -> Vec<(&'static str, DegreeDistribution<f64>, f64, SimplePolicy)> {
    let reject = SimplePolicy::default();
    vec![
        ("regular(3) g=1", DegreeDistribution::regular(3).unwrap(), 1.0, reject),
        ("regular(4) g=0.5", DegreeDistribution::regular(4).unwrap(), 0.5, reject),
        ("poisson(3) g=0.2", DegreeDistribution::poisson_auto(3.0, false).unwrap(), 0.2, reject),
        ("poisson_shifted(2) g=0.6", DegreeDistribution::poisson_auto(2.0, true).unwrap(), 0.6, reject),
        ("powerlaw(2.5,50) g=0.3", DegreeDistribution::power_law_auto(2.5, 50.0).unwrap(), 0.3, SimplePolicy::Erase),
        ("powerlaw(2.9,50) g=1", DegreeDistribution::power_law_auto(2.9, 50.0).unwrap(), 1.0, SimplePolicy::Erase),
    ]
}

fn criteria_2_3() -> (Outcome, Outcome) {
    let mut ok2 = true;
    let mut ok3 = true;
    let mut d2 = Vec::new();
    let mut d3 = Vec::new();
    for (i, (name, p, g, policy)) in presets().into_iter().enumerate() {
        let start = Instant::now();
        let gam = gamma(g);
        let graph = generate(&p, N, &gam, policy, rng::derive(2, i as u64)).unwrap();
        let hist = empirical_degree_hist(&graph).unwrap();
        let tv = hist.total_variation(&substituted_degree_law(&p, &gam).unwrap());
        let secs = start.elapsed().as_secs_f64();
        ok2 &= tv < 0.01 && secs < 60.0;
        d2.push(format!("{name}: tv {tv:.4} ({secs:.1} s)"));
        if policy == SimplePolicy::Erase {
            // heavy tails converge slowly; reported only
            let big = generate(&p, 10 * N, &gam, SimplePolicy::Multigraph, rng::derive(3, i as u64)).unwrap();
            let tv_big = empirical_degree_hist(&big).unwrap().total_variation(&substituted_degree_law(&p, &gam).unwrap());
            d2.push(format!("{name} at n = 1e6: tv {tv_big:.4}"));
        }
        let emp = empirical_clustering(&graph).unwrap();
        let (c, c2) = (clustering(&p, &gam), biased_clustering(&p, &gam));
        ok3 &= (emp.c - c).abs() <= 0.01 && (emp.c2 - c2).abs() <= 0.01;
        d3.push(format!("{name}: C {:.4}/{c:.4} C2 {:.4}/{c2:.4}", emp.c, emp.c2));
    }
    for d in 3..=5 {
        let p = DegreeDistribution::regular(d).unwrap();
        let exact = (d as f64 - 2.0) / d as f64;
        let c = clustering(&p, &gamma(1.0));
        let graph = generate(&p, 2_000, &gamma(1.0), SimplePolicy::default(), d as u64).unwrap();
        let e = empirical_clustering(&graph).unwrap().c;
        ok3 &= (c - exact).abs() < 1e-12 && (e - exact).abs() < 1e-12;
        d3.push(format!("regular({d}) g=1: C {c} empirical {e} exact {exact:.6}"));
    }
    (outcome(ok2, d2.join("; ")), outcome(ok3, d3.join("; ")))
}

fn criterion_4() -> Outcome {
    let mut r = rng::rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let top = r.random_range(3..=15);
        let mut w: Vec<f64> = (0..=top).map(|_| r.random::<f64>()).collect();
        w[0] = 0.0;
        let pt = DegreeDistribution::from_weights(w).unwrap();
        let c = r.random::<f64>() * c_max(&pt).unwrap();
        let tr = tune(&pt, c).unwrap();
        let gam = gamma(tr.gamma);
        let back = substituted_degree_law(&tr.p, &gam).unwrap();
        worst = worst.max(back.total_variation(&pt) * 2.0).max((clustering(&tr.p, &gam) - c).abs());
    }
    let d3 = tune(&DegreeDistribution::<f64>::regular(3).unwrap(), 0.2).unwrap();
    let exact =
        (d3.gamma - 1.0 / 3.0).abs() < 1e-12 && (d3.lambda - 3.0).abs() < 1e-12 && (d3.p.prob(3) - 1.0).abs() < 1e-12;
    outcome(
        worst < 1e-8 && exact,
        format!(
            "max round-trip error {worst:.2e}; delta3 C=0.2: gamma {} lambda {} p3 {}",
            d3.gamma,
            d3.lambda,
            d3.p.prob(3)
        ),
    )
}

fn criterion_5() -> Outcome {
    let p = DegreeDistribution::regular(3).unwrap();
    let gam = gamma(0.0);
    let pc = diffusion_pi_c(&p, &gam).unwrap().value;
    let mut ok = (pc - 0.5).abs() < 1e-6;
    let mut detail = vec![format!("pi_c {pc:.9}")];
    for (i, pi) in [pc - 0.1, pc + 0.1, 0.75].into_iter().enumerate() {
        let l = diffusion_giant_fraction(&p, &gam, pi).unwrap().giant_fraction;
        let (o, plan) = sim(SimplePolicy::default(), rng::derive(5, i as u64));
        let s = simulate_giant(&p, &gam, pi, &o, &plan).unwrap();
        ok &= (s.mean - l).abs() <= 0.02;
        if pi < pc {
            ok &= s.mean < 0.01;
        }
        detail.push(format!("pi {pi:.2}: sim {:.4} L {l:.4}", s.mean));
    }
    outcome(ok, detail.join("; "))
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in 3..=6 {
        let p = DegreeDistribution::regular(d).unwrap();
        let top = (d as f64 - 2.0) / d as f64;
        let curve: Vec<f64> = clustering_axis(top, 0.05)
            .into_iter()
            .map(|c| diffusion_pi_c(&p, &gamma(regular_gamma(d, c))).unwrap().value)
            .collect();
        let mono = curve.windows(2).all(|w| w[1] >= w[0] - 1e-12);
        ok &= mono;
        detail.push(format!("d={d}: {:.4} -> {:.4} over {} points", curve[0], curve[curve.len() - 1], curve.len()));
    }
    outcome(ok, detail.join("; "))
}

/// Expected fragment counts and exact variances per `(d, k)` cell, treating
/// each of the `n` parents as an independent draw.
fn census_moments(p: &DegreeDistribution<f64>, g: f64, pi: f64, n: usize, d: usize, k: usize, t: &GilbertTable<f64>) -> (f64, f64) {
    // X = number of size-k fragments in one percolated K_d.
    let choose = |a: usize, b: usize| -> f64 { (0..b).fold(1.0, |acc, i| acc * (a - i) as f64 / (i + 1) as f64) };
    let q = 1.0 - pi;
    let ck = t.f(k, k);
    let ex = choose(d, k) * ck * q.powi((k * (d - k)) as i32);
    let ex2 = if 2 * k <= d {
        choose(d, k) * choose(d - k, k) * ck * ck * q.powi((k * (d - k) + k * (d - 2 * k)) as i32)
    } else {
        0.0
    };
    let w = p.prob(d) * g;
    let mean = n as f64 * w * ex;
    let var = n as f64 * (w * (ex2 + ex) - (w * ex).powi(2));
    (mean, var)
}

fn criterion_7() -> Outcome {
    let p = DegreeDistribution::power_law_auto(2.5, 50.0).unwrap();
    let (g, pi) = (0.5, 0.22);
    let graph = generate(&p, N, &gamma(g), SimplePolicy::Multigraph, 7).unwrap();
    let n = graph.n_parents();
    let counts = internal_percolation_census(&graph, pi, 8);
    let table = GilbertTable::new(p.support_max(), pi).unwrap();
    let (mut cells, mut worst) = (0, 0.0f64);
    let mut ok = true;
    for d in 1..=p.support_max() {
        for k in 1..=d {
            let (mean, var) = census_moments(&p, g, pi, n, d, k, &table);
            // (d/k) f(d,k,π) p_d γ_d per parent
            let direct = n as f64 * d as f64 / k as f64 * table.f(d, k) * p.prob(d) * g;
            ok &= (mean - direct).abs() <= 1e-9 * direct.max(1.0);
            if mean < 10.0 {
                continue;
            }
            let got = *counts.get(&(d, k)).unwrap_or(&0) as f64;
            let z = (got - mean).abs() / var.sqrt();
            worst = worst.max(z);
            ok &= z <= 3.0;
            cells += 1;
        }
    }
    // Calibration over further instances; reported only.
    let (mut z2, mut beyond, mut total) = (0.0, 0usize, 0usize);
    for r in 0..10u64 {
        let graph = generate(&p, N, &gamma(g), SimplePolicy::Multigraph, rng::derive(70, r)).unwrap();
        let n = graph.n_parents();
        let counts = internal_percolation_census(&graph, pi, rng::derive(71, r));
        for d in 1..=p.support_max() {
            for k in 1..=d {
                let (mean, var) = census_moments(&p, g, pi, n, d, k, &table);
                if mean >= 10.0 {
                    let z = (*counts.get(&(d, k)).unwrap_or(&0) as f64 - mean) / var.sqrt();
                    z2 += z * z;
                    beyond += usize::from(z.abs() > 3.0);
                    total += 1;
                }
            }
        }
    }
    outcome(
        ok && cells > 0,
        format!(
            "{cells} cells with expected count >= 10, max |z| {worst:.2}; 10 more instances: mean z^2 {:.3}, {beyond}/{total} cells beyond 3 sigma",
            z2 / total as f64
        ),
    )
}

fn criterion_8() -> Outcome {
    let qc = contagion_qc(&DegreeDistribution::<f64>::regular(3).unwrap()).q_c;
    let mut ok = qc == 1.0 / 3.0;
    let mut detail = vec![format!("q_c(regular(3)) = {qc}")];
    let t = run(Figure::ContThresholds, &ExperimentOptions::default()).unwrap();
    let fam = t.column("family").unwrap();
    let (mean, q0, q1) = (t.floats("mean_degree"), t.floats("q_c0"), t.floats("q_c1"));
    // Crossing: rows with q0 > q1 all lie at lower mean degree than rows with q0 < q1.
    for family in ["powerlaw", "poisson"] {
        let rows: Vec<usize> = (0..t.rows.len()).filter(|&i| t.rows[i][fam] == family).collect();
        let above: Vec<f64> = rows.iter().filter(|&&i| q0[i] > q1[i]).map(|&i| mean[i]).collect();
        let below: Vec<f64> = rows.iter().filter(|&&i| q0[i] < q1[i]).map(|&i| mean[i]).collect();
        let top_above = above.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let bottom_below = below.iter().cloned().fold(f64::INFINITY, f64::min);
        ok &= !above.is_empty() && !below.is_empty() && top_above < bottom_below;
        detail.push(format!(
            "{family}: q0 > q1 for {} rows up to mean {top_above:.2}, q0 < q1 for {} rows from mean {bottom_below:.2}",
            above.len(),
            below.len()
        ));
    }
    outcome(ok, detail.join("; "))
}

/// Final active fraction from one uniformly random vertex.
fn random_seed_cascade(p: &DegreeDistribution<f64>, gam: &CliqueProfile<f64>, q: f64, base: u64) -> Result<Summary> {
    let t = ThresholdDistribution::contagion(q, p.support_max())?;
    let plan = ReplicaPlan::new(REPLICAS, base)?;
    let out = monte_carlo(&plan, &["cascade"], |seed| {
        let g = generate(p, N, gam, SimplePolicy::Erase, rng::derive(seed, 0))?;
        let k = assign_thresholds(&g, &t, rng::derive(seed, 1))?;
        let u = rng::rng(rng::derive(seed, 2)).random_range(0..g.n_vertices());
        let active = threshold_final_set(&g, &k, &SeedSet::from_vertices(vec![u]));
        Ok(vec![active.iter().filter(|&&a| a).count() as f64 / g.n_vertices() as f64])
    })?;
    Ok(out.into_iter().next().unwrap())
}

fn criterion_9() -> Outcome {
    let q = CASCADE_SIZES_Q;
    let mut ok = true;
    let mut detail = Vec::new();
    let mut invariant = true;
    for lambda in [0.5, 1.0, 2.0, 3.0, 5.0, 8.0] {
        let p = DegreeDistribution::poisson_auto(lambda, false).unwrap();
        let possible: Vec<bool> = [0.0, 0.2, 0.5, 1.0]
            .iter()
            .map(|&g| analyze_contagion(&p, &gamma(g), q).unwrap().cascade_possible)
            .collect();
        let t = ThresholdDistribution::contagion(q, p.support_max()).unwrap();
        let holds = cascade_condition(&p, &t).unwrap().holds;
        invariant &= possible.iter().all(|&b| b == holds);
    }
    ok &= invariant;
    detail.push(format!("condition invariant under gamma: {invariant}"));
    for (i, (p, gam)) in cascade_pair(3.0).unwrap().into_iter().enumerate() {
        let r = analyze_contagion(&p, &gam, q).unwrap();
        let t = ThresholdDistribution::contagion(q, p.support_max()).unwrap();
        let (o, plan) = sim(SimplePolicy::Erase, rng::derive(9, i as u64));
        let (piv, casc) = simulate_cascade(&p, &gam, &t, &o, &plan).unwrap();
        ok &= r.cascade_possible
            && (piv.mean - r.pivotal_fraction).abs() <= 0.02
            && (casc.mean - r.cascade_fraction).abs() <= 0.02;
        detail.push(format!(
            "gamma {}: pivotal {:.4}/{:.4} cascade {:.4}/{:.4}",
            gam.get(3),
            piv.mean,
            r.pivotal_fraction,
            casc.mean,
            r.cascade_fraction
        ));
    }
    let p = DegreeDistribution::poisson_auto(8.0, false).unwrap();
    let gam = gamma(0.2);
    let possible = analyze_contagion(&p, &gam, q).unwrap().cascade_possible;
    let s = random_seed_cascade(&p, &gam, q, 99).unwrap();
    ok &= !possible && s.mean < 0.01;
    detail.push(format!("subcritical poisson(8) random seed: mean {:.5}", s.mean));
    outcome(ok, detail.join("; "))
}

fn criterion_10() -> Outcome {
    let q = CASCADE_SIZES_Q;
    let p = DegreeDistribution::poisson_auto(3.0, false).unwrap();
    let gam = gamma(1.0);
    let r = analyze_contagion(&p, &gam, q).unwrap();
    let t = ThresholdDistribution::contagion(q, p.support_max()).unwrap();
    let (o, plan) = sim(SimplePolicy::Erase, 10);
    let (piv, casc) = simulate_cascade(&p, &gam, &t, &o, &plan).unwrap();
    let ok = r.cascade_possible
        && (r.cascade_fraction - r.pivotal_fraction).abs() < 1e-6
        && (piv.mean - r.pivotal_fraction).abs() <= 0.02
        && (casc.mean - r.cascade_fraction).abs() <= 0.02;
    outcome(
        ok,
        format!(
            "analytic pivotal {:.8} cascade {:.8}; sim pivotal {:.4} cascade {:.4}",
            r.pivotal_fraction, r.cascade_fraction, piv.mean, casc.mean
        ),
    )
}

fn criterion_11() -> Outcome {
    let mut r = rng::rng(11);
    let mut failures = 0;
    let mut errors = Vec::new();
    for i in 0..200u64 {
        let p = match i % 3 {
            0 => DegreeDistribution::poisson_auto(r.random_range(1.0..6.0), false).unwrap(),
            1 => DegreeDistribution::regular(r.random_range(2..=6)).unwrap(),
            _ => DegreeDistribution::power_law_cutoff(r.random_range(1.5..3.0), 10.0, 40).unwrap(),
        };
        let gam = gamma(r.random_range(0.05..=1.0));
        let g = generate(&p, 500, &gam, SimplePolicy::Multigraph, rng::derive(11, i)).unwrap();
        let t = ThresholdDistribution::contagion(r.random_range(0.0..0.6), g.max_degree().max(p.support_max())).unwrap();
        let u = r.random_range(0..g.n_vertices());
        match coupling_run(&g, &t, &gam, u, rng::derive(12, i)) {
            Ok(c) if c.equal => {}
            Ok(_) => failures += 1,
            Err(e) => errors.push(e.to_string()),
        }
    }
    outcome(failures == 0 && errors.is_empty(), format!("200 instances, {failures} mismatches, {} errors", errors.len()))
}

fn criterion_12() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let zero = ActivationProfile::constant(0.0).unwrap();
    let alpha = ActivationProfile::constant(0.05).unwrap();

    // diffusion, single seed vs α ≡ 0
    let mut worst: f64 = 0.0;
    for (p, g, pi) in [
        (DegreeDistribution::regular(3).unwrap(), 0.5, 0.8),
        (DegreeDistribution::poisson_auto(3.0, false).unwrap(), 0.3, 0.6),
        (DegreeDistribution::power_law_auto(2.5, 50.0).unwrap(), 0.4, 0.4),
    ] {
        let single = diffusion_giant_fraction(&p, &gamma(g), pi).unwrap().giant_fraction;
        let act = diffusion_activation_fraction(&p, &gamma(g), pi, &zero).unwrap().fraction;
        worst = worst.max((single - act).abs());
    }
    // cascade, pivotal seed vs α ≡ 0
    for lambda in [2.0, 3.0] {
        for (p, gam) in cascade_pair(lambda).unwrap() {
            let t = ThresholdDistribution::contagion(CASCADE_SIZES_Q, p.support_max()).unwrap();
            let single = contagion_zeta_l(&p, &gam, &t).unwrap().cascade_fraction;
            let act = activation_cascade_fraction(&p, &gam, &t, &zero).unwrap().cascade_fraction;
            worst = worst.max((single - act).abs());
        }
    }
    ok &= worst < 1e-8;
    detail.push(format!("alpha=0 limits max gap {worst:.2e}"));

    // independent seeds for diffusion
    let p = DegreeDistribution::regular(3).unwrap();
    let (g, pi) = (gamma(0.5), 0.3);
    let a = diffusion_activation_fraction(&p, &g, pi, &alpha).unwrap().fraction;
    let plan = ReplicaPlan::new(REPLICAS, 121).unwrap();
    let s = monte_carlo(&plan, &["active"], |seed| {
        let graph = generate(&p, N, &g, SimplePolicy::default(), rng::derive(seed, 0))?;
        let seeds = SeedSet::degree_independent(&graph, &alpha, rng::derive(seed, 1));
        Ok(vec![run_diffusion(&graph, pi, &seeds, rng::derive(seed, 2)).fraction(graph.n_vertices())])
    })
    .unwrap();
    ok &= (s[0].mean - a).abs() <= 0.02;
    detail.push(format!("diffusion regular(3) g=0.5 pi=0.3: sim {:.4} analytic {a:.4}", s[0].mean));

    // clique-correlated seeds for cascades
    for (lambda, base) in [(3.0, 122), (8.0, 123)] {
        let p = DegreeDistribution::poisson_auto(lambda, false).unwrap();
        let g = gamma(0.2);
        let t = ThresholdDistribution::contagion(CASCADE_SIZES_Q, p.support_max()).unwrap();
        let a = activation_cascade_fraction(&p, &g, &t, &alpha).unwrap().cascade_fraction;
        let plan = ReplicaPlan::new(REPLICAS, base).unwrap();
        let s = monte_carlo(&plan, &["active"], |seed| {
            let graph = generate(&p, N, &g, SimplePolicy::Erase, rng::derive(seed, 0))?;
            let k = assign_thresholds(&graph, &t, rng::derive(seed, 1))?;
            let seeds = SeedSet::clique_correlated(&graph, &alpha, rng::derive(seed, 2));
            let active = threshold_final_set(&graph, &k, &seeds);
            Ok(vec![active.iter().filter(|&&x| x).count() as f64 / graph.n_vertices() as f64])
        })
        .unwrap();
        ok &= (s[0].mean - a).abs() <= 0.02;
        detail.push(format!("cascade poisson({lambda}) g=0.2: sim {:.4} analytic {a:.4}", s[0].mean));
    }
    outcome(ok, detail.join("; "))
}

fn criterion_13() -> Outcome {
    let mut laws: Vec<(String, DegreeDistribution<f64>, f64)> =
        presets().into_iter().map(|(name, p, g, _)| (name.to_string(), p, g)).collect();
    for d in 3..=6 {
        let top = (d as f64 - 2.0) / d as f64;
        for c in clustering_axis(top, 0.05) {
            laws.push((format!("regular({d}) C={c:.2}"), DegreeDistribution::regular(d).unwrap(), regular_gamma(d, c)));
        }
    }
    for tau in [2.9, 2.5, 1.81, 1.3] {
        let pt = DegreeDistribution::power_law_auto(tau, 50.0).unwrap();
        for frac in [0.0, 0.5, 1.0] {
            let tr = tune(&pt, frac * c_max(&pt).unwrap()).unwrap();
            laws.push((format!("tuned powerlaw({tau})"), tr.p, tr.gamma));
        }
    }
    let mut worst: f64 = 0.0;
    let mut infinite = 0;
    for (_, p, g) in &laws {
        let gam = gamma(*g);
        let pc = diffusion_pi_c(p, &gam).unwrap();
        if !pc.finite {
            infinite += 1;
            continue;
        }
        worst = worst.max((offspring_mean(p, &gam, pc.value).unwrap() - 1.0).abs());
    }
    outcome(worst < 1e-6, format!("{} laws ({infinite} without finite threshold), max |m - 1| {worst:.2e}", laws.len()))
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, Outcome)> = Vec::new();
    let mut record = |n: usize, o: Outcome| {
        println!("criterion {n}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((n, o));
    };
    record(1, criterion_1());
    let (c2, c3) = criteria_2_3();
    record(2, c2);
    record(3, c3);
    record(4, criterion_4());
    record(5, criterion_5());
    record(6, criterion_6());
    record(7, criterion_7());
    record(8, criterion_8());
    record(9, criterion_9());
    record(10, criterion_10());
    record(11, criterion_11());
    record(12, criterion_12());
    record(13, criterion_13());
    let failed: Vec<usize> = results.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
        return ExitCode::SUCCESS;
    }
    println!("acceptance: failed {failed:?}");
    // Report-only unless strict mode is requested.
    if std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
