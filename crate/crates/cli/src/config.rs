//! TOML config files. Top-level keys apply to every command; a table named
//! after the command overrides them. Command-line flags override both.

use std::collections::BTreeMap;
use std::path::Path;

use toml::Value;

use crate::error::CliError;

/// Every key any command understands.
pub const KNOWN_KEYS: &[&str] = &[
    "dist", "gamma", "C", "biased", "pi", "q", "k", "alpha", "n", "replicas", "seed", "policy", "points", "kappa",
    "simulate", "out", "out_dir",
];

const COMMANDS: &[&str] = &["dist", "tune", "analyze", "gen", "simulate", "experiment"];

#[derive(Debug, Default)]
pub struct Settings {
    values: BTreeMap<String, Value>,
    resolved: Vec<(String, String)>,
}

fn check_key(key: &str, path: &str) -> Result<(), CliError> {
    if KNOWN_KEYS.contains(&key) {
        Ok(())
    } else {
        Err(CliError::usage(format!("{path}: unknown config key '{key}'")))
    }
}

impl Settings {
    pub fn load(path: Option<&Path>, command: &str) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(&shown, e))?;
        Self::from_str(&text, command, &shown)
    }

    pub fn from_str(text: &str, command: &str, shown: &str) -> Result<Self, CliError> {
        let table: toml::Table = text.parse().map_err(|e| CliError::usage(format!("{shown}: {e}")))?;
        let mut values = BTreeMap::new();
        let mut section = None;
        for (k, v) in table {
            match v {
                Value::Table(t) if COMMANDS.contains(&k.as_str()) => {
                    if k == command {
                        section = Some(t);
                    }
                }
                Value::Table(_) => return Err(CliError::usage(format!("{shown}: unknown config section '{k}'"))),
                v => {
                    check_key(&k, shown)?;
                    values.insert(k, v);
                }
            }
        }
        for (k, v) in section.into_iter().flatten() {
            check_key(&k, shown)?;
            values.insert(k, v);
        }
        Ok(Self { values, resolved: Vec::new() })
    }

    /// Resolved `(key, value)` pairs in lookup order.
    pub fn resolved(&self) -> &[(String, String)] {
        &self.resolved
    }

    pub fn note(&mut self, key: &str, value: String) {
        self.resolved.push((key.to_string(), value));
    }

    fn bad(key: &str, want: &str, v: &Value) -> CliError {
        CliError::usage(format!("config key '{key}': expected {want}, got {v}"))
    }

    pub fn string(&mut self, key: &str, flag: Option<String>) -> Result<Option<String>, CliError> {
        let v = match flag {
            Some(s) => Some(s),
            None => match self.values.get(key) {
                None => None,
                Some(Value::String(s)) => Some(s.clone()),
                Some(Value::Integer(i)) => Some(i.to_string()),
                Some(Value::Float(f)) => Some(f.to_string()),
                Some(v) => return Err(Self::bad(key, "a string", v)),
            },
        };
        if let Some(s) = &v {
            self.note(key, s.clone());
        }
        Ok(v)
    }

    pub fn f64(&mut self, key: &str, flag: Option<f64>) -> Result<Option<f64>, CliError> {
        let v = match flag {
            Some(x) => Some(x),
            None => match self.values.get(key) {
                None => None,
                Some(Value::Float(f)) => Some(*f),
                Some(Value::Integer(i)) => Some(*i as f64),
                Some(v) => return Err(Self::bad(key, "a number", v)),
            },
        };
        if let Some(x) = v {
            self.note(key, x.to_string());
        }
        Ok(v)
    }

    pub fn f64_list(&mut self, key: &str, flag: Vec<f64>) -> Result<Vec<f64>, CliError> {
        let v = if !flag.is_empty() {
            flag
        } else {
            match self.values.get(key) {
                None => Vec::new(),
                Some(Value::Float(f)) => vec![*f],
                Some(Value::Integer(i)) => vec![*i as f64],
                Some(Value::Array(a)) => a
                    .iter()
                    .map(|x| match x {
                        Value::Float(f) => Ok(*f),
                        Value::Integer(i) => Ok(*i as f64),
                        other => Err(Self::bad(key, "numbers", other)),
                    })
                    .collect::<Result<_, _>>()?,
                Some(v) => return Err(Self::bad(key, "a number or list", v)),
            }
        };
        if !v.is_empty() {
            let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            self.note(key, shown.join(","));
        }
        Ok(v)
    }

    pub fn u64(&mut self, key: &str, flag: Option<u64>) -> Result<Option<u64>, CliError> {
        let v = match flag {
            Some(x) => Some(x),
            None => match self.values.get(key) {
                None => None,
                Some(Value::Integer(i)) if *i >= 0 => Some(*i as u64),
                Some(v) => return Err(Self::bad(key, "a non-negative integer", v)),
            },
        };
        if let Some(x) = v {
            self.note(key, x.to_string());
        }
        Ok(v)
    }

    pub fn usize(&mut self, key: &str, flag: Option<usize>) -> Result<Option<usize>, CliError> {
        let v = self.u64(key, flag.map(|x| x as u64))?;
        v.map(|x| usize::try_from(x).map_err(|_| CliError::usage(format!("config key '{key}' out of range"))))
            .transpose()
    }

    /// A flag that is `true` when given; otherwise the config value.
    pub fn bool(&mut self, key: &str, flag: bool) -> Result<bool, CliError> {
        let v = if flag {
            true
        } else {
            match self.values.get(key) {
                None => false,
                Some(Value::Boolean(b)) => *b,
                Some(v) => return Err(Self::bad(key, "true or false", v)),
            }
        };
        self.note(key, v.to_string());
        Ok(v)
    }
}
