//! Component-size law of a tagged vertex in a percolated clique.

use crate::error::{Error, Result};
use crate::scalar::{binomial_coefficient, pow_field, Field, LnFactorials, Real};

/// Values below this are flushed to zero.
const UNDERFLOW: f64 = 1e-300;

/// `f(d, k, π)`: probability that a tagged vertex of `K_d` with each edge kept
/// with probability `π` lies in a component of size `k`.
///
/// Row `d` is stored with index `k` in `0..=d`; index 0 is always zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GilbertTable<T = f64> {
    pi: T,
    rows: Vec<Vec<T>>,
}

impl<T: Clone> GilbertTable<T> {
    pub fn pi(&self) -> &T {
        &self.pi
    }

    pub fn d_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Row `d`, indexed by `k` (entry 0 unused).
    pub fn row(&self, d: usize) -> &[T] {
        &self.rows[d]
    }

    pub fn get(&self, d: usize, k: usize) -> &T {
        &self.rows[d][k]
    }
}

impl<T: Real> GilbertTable<T> {
    /// Builds rows `1..=d_max` in log space; connected probabilities come
    /// from the complement of the row.
    pub fn new(d_max: usize, pi: T) -> Result<Self> {
        if d_max < 1 {
            return Err(Error::param("d_max must be at least 1"));
        }
        if !(pi >= T::zero() && pi <= T::one()) {
            return Err(Error::param(format!("pi = {pi} outside [0, 1]")));
        }
        let ln_fact = LnFactorials::<T>::new(d_max);
        let ln_q = (-pi).ln_1p();
        let floor = T::lit(UNDERFLOW);
        let ln_floor = floor.ln();
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(d_max + 1);
        rows.push(vec![T::zero()]);
        // ln f(k, k)
        let mut ln_conn: Vec<T> = vec![T::zero(); d_max + 1];
        for d in 1..=d_max {
            let mut row = vec![T::zero(); d + 1];
            let mut acc = T::zero();
            for k in 1..d {
                let cross = T::from_usize_lossy(k * (d - k));
                let ln = ln_fact.ln_choose(d - 1, k - 1) + ln_conn[k] + cross * ln_q;
                let v = if ln < ln_floor { T::zero() } else { ln.exp() };
                let v = if v < floor { T::zero() } else { v };
                row[k] = v;
                acc = acc + v;
            }
            let full = (T::one() - acc).max(T::zero());
            row[d] = full;
            ln_conn[d] = if full > T::zero() { full.ln() } else { T::neg_infinity() };
            rows.push(row);
        }
        Ok(Self { pi, rows })
    }

    #[inline]
    pub fn f(&self, d: usize, k: usize) -> T {
        self.rows[d][k]
    }

    /// `E[size]` of the tagged component in `K_d`.
    pub fn expected_size(&self, d: usize) -> T {
        self.rows[d]
            .iter()
            .enumerate()
            .fold(T::zero(), |a, (k, &f)| a + T::from_usize_lossy(k) * f)
    }
}

impl<T: Field> GilbertTable<T> {
    /// Same recurrence evaluated exactly in the field `T`.
    pub fn exact(d_max: usize, pi: T) -> Result<Self> {
        if d_max < 1 {
            return Err(Error::param("d_max must be at least 1"));
        }
        if pi < T::zero() || pi > T::one() {
            return Err(Error::param("pi outside [0, 1]"));
        }
        let q = T::one() - pi.clone();
        let mut rows: Vec<Vec<T>> = vec![vec![T::zero()]];
        for d in 1..=d_max {
            let mut row = vec![T::zero(); d + 1];
            let mut acc = T::zero();
            for k in 1..d {
                let v = binomial_coefficient::<T>((d - 1) as u64, (k - 1) as u64)
                    * rows[k][k].clone()
                    * pow_field(&q, (k * (d - k)) as u64);
                acc = acc + v.clone();
                row[k] = v;
            }
            row[d] = T::one() - acc;
            rows.push(row);
        }
        Ok(Self { pi, rows })
    }
}

/// Law of `K(d, π, γ_d)` indexed by `k` in `0..=d`: `d` with probability
/// `1 - γ_d`, otherwise the tagged clique component size.
pub fn k_mixture<T: Real>(table: &GilbertTable<T>, d: usize, gamma_d: T) -> Result<Vec<T>> {
    if d == 0 || d > table.d_max() {
        return Err(Error::param(format!("degree {d} outside table 1..={}", table.d_max())));
    }
    let mut out: Vec<T> = table.row(d).iter().map(|&f| gamma_d * f).collect();
    out[d] = out[d] + T::one() - gamma_d;
    Ok(out)
}
