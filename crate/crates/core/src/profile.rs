//! Per-degree probability profiles.

use crate::error::{Error, Result};
use crate::scalar::Real;

macro_rules! degree_profile {
    ($(#[$meta:meta])* $name:ident, $what:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name<T = f64> {
            per_degree: Vec<T>,
            default: T,
        }

        impl<T: Real> $name<T> {
            /// Same value for every degree.
            pub fn constant(value: T) -> Result<Self> {
                Self::new(Vec::new(), value)
            }

            /// Explicit values for degrees `0..per_degree.len()`, `default` beyond.
            pub fn new(per_degree: Vec<T>, default: T) -> Result<Self> {
                let bad = |v: T| !(v >= T::zero() && v <= T::one());
                if let Some((r, v)) = per_degree.iter().enumerate().find(|(_, v)| bad(**v)) {
                    return Err(Error::param(format!(concat!($what, "_{} = {} outside [0, 1]"), r, v)));
                }
                if bad(default) {
                    return Err(Error::param(format!(concat!($what, " default {} outside [0, 1]"), default)));
                }
                Ok(Self { per_degree, default })
            }

            /// `(degree, value)` pairs; unlisted degrees take `default`.
            pub fn from_pairs(pairs: &[(usize, T)], default: T) -> Result<Self> {
                let len = pairs.iter().map(|(r, _)| r + 1).max().unwrap_or(0);
                let mut per_degree = vec![default; len];
                for &(r, v) in pairs {
                    per_degree[r] = v;
                }
                Self::new(per_degree, default)
            }

            /// Parses `0.3` (constant) or `3:0.5,4:0.25[,*:0.1]`.
            pub fn parse(text: &str) -> Result<Self> {
                let text = text.trim();
                let lit = |s: &str| -> Result<T> {
                    s.trim()
                        .parse::<f64>()
                        .map(T::lit)
                        .map_err(|_| Error::param(format!(concat!("bad ", $what, " value '{}'"), s)))
                };
                if !text.contains(':') {
                    return Self::constant(lit(text)?);
                }
                let mut pairs = Vec::new();
                let mut default = T::zero();
                for item in text.split(',') {
                    let (k, v) = item
                        .split_once(':')
                        .ok_or_else(|| Error::param(format!(concat!("bad ", $what, " entry '{}'"), item)))?;
                    if k.trim() == "*" {
                        default = lit(v)?;
                    } else {
                        let r = k
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::param(format!("bad degree '{k}'")))?;
                        pairs.push((r, lit(v)?));
                    }
                }
                Self::from_pairs(&pairs, default)
            }

            #[inline]
            pub fn get(&self, r: usize) -> T {
                self.per_degree.get(r).copied().unwrap_or(self.default)
            }

            pub fn is_zero(&self) -> bool {
                self.default == T::zero() && self.per_degree.iter().all(|v| *v == T::zero())
            }

            /// Returns the value when the profile does not depend on the degree.
            pub fn as_constant(&self) -> Option<T> {
                self.per_degree
                    .iter()
                    .all(|v| *v == self.default)
                    .then_some(self.default)
            }

            /// Compact text form accepted by [`parse`](Self::parse).
            pub fn describe(&self) -> String {
                if let Some(c) = self.as_constant() {
                    return format!("{c}");
                }
                let mut parts: Vec<String> = self
                    .per_degree
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != self.default)
                    .map(|(r, v)| format!("{r}:{v}"))
                    .collect();
                parts.push(format!("*:{}", self.default));
                parts.join(",")
            }
        }
    };
}

degree_profile!(
    /// Clique substitution probabilities `γ_r`.
    CliqueProfile,
    "gamma"
);

degree_profile!(
    /// Initial activation probabilities `α_d`.
    ActivationProfile,
    "alpha"
);
