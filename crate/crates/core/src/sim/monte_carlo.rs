use std::io::Write;

use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};
use crate::rng;

/// Replica count and base seed. Replica `i` runs with
/// `rng::derive(base_seed, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplicaPlan {
    pub replicas: usize,
    pub base_seed: u64,
}

impl ReplicaPlan {
    pub fn new(replicas: usize, base_seed: u64) -> Result<Self> {
        if replicas < 2 {
            return Err(Error::param("need at least 2 replicas for a confidence interval"));
        }
        Ok(Self { replicas, base_seed })
    }

    pub fn replica_seed(&self, i: usize) -> u64 {
        rng::derive(self.base_seed, i as u64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub metric: String,
    pub mean: f64,
    /// Sample standard deviation.
    pub std: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub replicas: usize,
}

impl Summary {
    /// Mean, sample deviation and two-sided 95% Student-t interval.
    pub fn from_samples(metric: &str, xs: &[f64]) -> Result<Self> {
        let n = xs.len();
        if n < 2 {
            return Err(Error::param("need at least 2 samples"));
        }
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        let std = var.sqrt();
        let t = StudentsT::new(0.0, 1.0, (n - 1) as f64)
            .map_err(|e| Error::Internal(e.to_string()))?
            .inverse_cdf(0.975);
        let half = t * std / (n as f64).sqrt();
        Ok(Self { metric: metric.to_string(), mean, std, ci_lo: mean - half, ci_hi: mean + half, replicas: n })
    }

    pub fn contains(&self, x: f64) -> bool {
        self.ci_lo <= x && x <= self.ci_hi
    }
}

/// Runs `run(replica_seed)` for every replica in parallel and aggregates
/// each named metric. Results are reduced in replica order.
pub fn monte_carlo<F>(plan: &ReplicaPlan, metrics: &[&str], run: F) -> Result<Vec<Summary>>
where
    F: Fn(u64) -> Result<Vec<f64>> + Sync,
{
    let rows: Vec<Vec<f64>> = (0..plan.replicas)
        .into_par_iter()
        .map(|i| run(plan.replica_seed(i)))
        .collect::<Result<_>>()?;
    if let Some(r) = rows.iter().find(|r| r.len() != metrics.len()) {
        return Err(Error::Internal(format!("replica returned {} metrics, expected {}", r.len(), metrics.len())));
    }
    metrics
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let xs: Vec<f64> = rows.iter().map(|r| r[j]).collect();
            Summary::from_samples(name, &xs)
        })
        .collect()
}

pub const CSV_TAIL: [&str; 8] = ["metric", "mean", "std", "ci_lo", "ci_hi", "replicas", "base_seed", "analytic"];

/// Writes `params..., metric, mean, std, ci_lo, ci_hi, replicas, base_seed,
/// analytic` rows. `analytic` is empty when there is no reference value.
pub fn write_summaries<W: Write>(
    out: W,
    param_names: &[&str],
    rows: &[(Vec<String>, Summary, Option<f64>)],
    base_seed: u64,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let header: Vec<&str> = param_names.iter().copied().chain(CSV_TAIL).collect();
    w.write_record(&header).map_err(io_err)?;
    for (params, s, analytic) in rows {
        let mut rec = params.clone();
        rec.extend([
            s.metric.clone(),
            s.mean.to_string(),
            s.std.to_string(),
            s.ci_lo.to_string(),
            s.ci_hi.to_string(),
            s.replicas.to_string(),
            base_seed.to_string(),
            analytic.map(|a| a.to_string()).unwrap_or_default(),
        ]);
        w.write_record(&rec).map_err(io_err)?;
    }
    w.flush().map_err(|e| Error::Internal(e.to_string()))
}

fn io_err(e: csv::Error) -> Error {
    Error::Internal(format!("csv: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng as _;

    #[test]
    fn constant_metric_has_zero_width() {
        let plan = ReplicaPlan::new(10, 3).unwrap();
        let s = monte_carlo(&plan, &["x"], |_| Ok(vec![0.25])).unwrap();
        assert_eq!(s[0].mean, 0.25);
        assert_eq!(s[0].std, 0.0);
        assert_eq!((s[0].ci_lo, s[0].ci_hi), (0.25, 0.25));
    }

    #[test]
    fn bernoulli_mean_and_determinism() {
        let plan = ReplicaPlan::new(10_000, 77).unwrap();
        let coin = |seed: u64| Ok(vec![f64::from(u8::from(rng::rng(seed).random::<bool>()))]);
        let a = monte_carlo(&plan, &["coin"], coin).unwrap();
        assert!((a[0].mean - 0.5).abs() < 0.02);
        let b = monte_carlo(&plan, &["coin"], coin).unwrap();
        assert_eq!(a, b);
        assert!(ReplicaPlan::new(1, 0).is_err());
    }

    #[test]
    fn t_interval_matches_table() {
        // t_{0.975, 4} = 2.776
        let s = Summary::from_samples("m", &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let half = 2.776_445_105 * (2.5f64).sqrt() / 5f64.sqrt();
        assert!((s.ci_hi - 3.0 - half).abs() < 1e-6);
    }

    #[test]
    fn csv_layout() {
        let s = Summary::from_samples("frac", &[0.5, 0.7]).unwrap();
        let mut buf = Vec::new();
        write_summaries(&mut buf, &["pi"], &[(vec!["0.6".into()], s, Some(0.61))], 9).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "pi,metric,mean,std,ci_lo,ci_hi,replicas,base_seed,analytic");
        assert!(lines.next().unwrap().starts_with("0.6,frac,0.6,"));
    }
}
