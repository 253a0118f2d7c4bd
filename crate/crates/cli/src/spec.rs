//! Distribution spec strings such as `powerlaw:tau=2.5,kappa=50`.

use std::collections::BTreeMap;

use cliquenet::dist::{DegreeDistribution, DEFAULT_KAPPA};

use crate::error::CliError;

/// Parsed `family:key=value,...` text.
#[derive(Debug, Clone, PartialEq)]
pub enum DistSpec {
    Regular(usize),
    Poisson { lambda: f64, r_max: Option<usize> },
    PoissonShifted { lambda: f64, r_max: Option<usize> },
    PowerLaw { tau: f64, kappa: f64, r_max: Option<usize> },
    File(String),
}

fn split_keys(body: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("dist: expected key=value, got '{item}'")))?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(CliError::usage(format!("dist: key '{}' given twice", k.trim())));
        }
    }
    Ok(out)
}

fn take<T: std::str::FromStr>(keys: &mut BTreeMap<String, String>, key: &str) -> Result<Option<T>, CliError> {
    match keys.remove(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| CliError::usage(format!("dist: bad value '{v}' for key '{key}'"))),
    }
}

fn need<T: std::str::FromStr>(keys: &mut BTreeMap<String, String>, key: &str, family: &str) -> Result<T, CliError> {
    take(keys, key)?.ok_or_else(|| CliError::usage(format!("dist: {family} needs key '{key}'")))
}

impl DistSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let text = text.trim();
        let (family, body) = text.split_once(':').unwrap_or((text, ""));
        if family == "file" {
            if body.is_empty() {
                return Err(CliError::usage("dist: file: needs a path"));
            }
            return Ok(DistSpec::File(body.to_string()));
        }
        let mut keys = if family == "regular" && !body.contains('=') && !body.is_empty() {
            BTreeMap::from([("d".to_string(), body.to_string())])
        } else {
            split_keys(body)?
        };
        let spec = match family {
            "regular" => DistSpec::Regular(need(&mut keys, "d", family)?),
            "poisson" => DistSpec::Poisson { lambda: need(&mut keys, "lambda", family)?, r_max: take(&mut keys, "rmax")? },
            "poisson_shifted" => {
                DistSpec::PoissonShifted { lambda: need(&mut keys, "lambda", family)?, r_max: take(&mut keys, "rmax")? }
            }
            "powerlaw" => DistSpec::PowerLaw {
                tau: need(&mut keys, "tau", family)?,
                kappa: take(&mut keys, "kappa")?.unwrap_or(DEFAULT_KAPPA),
                r_max: take(&mut keys, "rmax")?,
            },
            other => return Err(CliError::usage(format!("dist: unknown family '{other}'"))),
        };
        if let Some(k) = keys.keys().next() {
            return Err(CliError::usage(format!("dist: unknown key '{k}' for {family}")));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<DegreeDistribution<f64>, CliError> {
        let d = match self {
            DistSpec::Regular(d) => DegreeDistribution::regular(*d)?,
            DistSpec::Poisson { lambda, r_max: None } => DegreeDistribution::poisson_auto(*lambda, false)?,
            DistSpec::Poisson { lambda, r_max: Some(r) } => DegreeDistribution::poisson(*lambda, *r)?,
            DistSpec::PoissonShifted { lambda, r_max: None } => DegreeDistribution::poisson_auto(*lambda, true)?,
            DistSpec::PoissonShifted { lambda, r_max: Some(r) } => DegreeDistribution::poisson_shifted(*lambda, *r)?,
            DistSpec::PowerLaw { tau, kappa, r_max: None } => DegreeDistribution::power_law_auto(*tau, *kappa)?,
            DistSpec::PowerLaw { tau, kappa, r_max: Some(r) } => DegreeDistribution::power_law_cutoff(*tau, *kappa, *r)?,
            DistSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                DegreeDistribution::from_table(&text)?
            }
        };
        Ok(d)
    }
}
