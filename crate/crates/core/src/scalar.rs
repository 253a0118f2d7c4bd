//! Scalar abstractions.
//!
//! Analytic code is written against [`Real`], which covers `f32` and `f64`.
//! Pure ring computations (the Gilbert recurrence, binomial probabilities)
//! are also available over [`Field`], which admits exact rationals.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// Floating point scalar used by every analytic routine.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute tolerance for probability-mass checks.
    const PROB_TOL: f64;
    /// Absolute tolerance targeted by bisection solvers.
    const ROOT_TOL: f64;

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).expect("integer representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f64 {
    const PROB_TOL: f64 = 1e-10;
    const ROOT_TOL: f64 = 1e-12;
}

impl Real for f32 {
    const PROB_TOL: f64 = 1e-5;
    const ROOT_TOL: f64 = 1e-6;
}

/// Commutative field with ordering; implemented by floats and [`BigRational`].
pub trait Field: Num + Clone + PartialOrd + Debug {
    fn from_u64(x: u64) -> Self;
}

impl Field for f64 {
    fn from_u64(x: u64) -> Self {
        x as f64
    }
}

impl Field for f32 {
    fn from_u64(x: u64) -> Self {
        x as f32
    }
}

impl Field for BigRational {
    fn from_u64(x: u64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
}

/// `base^exp` by repeated squaring, for any [`Field`].
pub fn pow_field<T: Field>(base: &T, mut exp: u64) -> T {
    let mut acc = T::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}

/// Binomial coefficient as an exact field element (Pascal row product).
pub fn binomial_coefficient<T: Field>(n: u64, k: u64) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut num = T::one();
    let mut den = T::one();
    for i in 0..k {
        num = num * T::from_u64(n - i);
        den = den * T::from_u64(i + 1);
    }
    num / den
}

/// Table of `ln(k!)` for `k <= n`.
#[derive(Debug, Clone)]
pub struct LnFactorials<T> {
    table: Vec<T>,
}

impl<T: Real> LnFactorials<T> {
    pub fn new(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        let mut acc = 0.0f64;
        table.push(T::zero());
        for k in 1..=n {
            acc += (k as f64).ln();
            table.push(T::lit(acc));
        }
        Self { table }
    }

    pub fn max(&self) -> usize {
        self.table.len() - 1
    }

    /// `ln(k!)`; panics past the table end.
    #[inline]
    pub fn get(&self, k: usize) -> T {
        self.table[k]
    }

    #[inline]
    pub fn ln_choose(&self, n: usize, k: usize) -> T {
        self.table[n] - self.table[k] - self.table[n - k]
    }
}
