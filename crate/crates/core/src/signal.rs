//! Uniformly sampled real or complex signals.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{param, Result};

/// Scalar sample type: `f64` or `Complex64`.
pub trait Scalar:
    Copy
    + Send
    + Sync
    + Default
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + AddAssign
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + 'static
{
    fn is_finite(&self) -> bool;
    fn modulus(&self) -> f64;
    fn from_real(x: f64) -> Self;
    fn to_complex(self) -> Complex64;
}

impl Scalar for f64 {
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl Scalar for Complex64 {
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn to_complex(self) -> Complex64 {
        self
    }
}

/// Samples f(t0 + j·dt), j = 0..len.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal<T = f64> {
    t0: f64,
    dt: f64,
    values: Vec<T>,
}

impl<T: Scalar> SampledSignal<T> {
    pub fn new(t0: f64, dt: f64, values: Vec<T>) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(param(format!("grid step must be positive, got {dt}")));
        }
        if !t0.is_finite() {
            return Err(param("grid start must be finite"));
        }
        if values.len() < 2 {
            return Err(param(format!("a signal needs at least 2 samples, got {}", values.len())));
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(param(format!("sample {j} is not finite")));
        }
        Ok(SampledSignal { t0, dt, values })
    }

    /// Samples `f` on t0, t0+dt, ..., covering [t0, t_end] (n = round((t_end−t0)/dt) steps).
    pub fn from_fn(t0: f64, t_end: f64, dt: f64, f: impl Fn(f64) -> T) -> Result<Self> {
        if !(t_end > t0) {
            return Err(param(format!("empty sampling interval [{t0}, {t_end}]")));
        }
        let n = ((t_end - t0) / dt).round() as usize;
        Self::new(t0, dt, (0..=n).map(|j| f(t0 + j as f64 * dt)).collect())
    }

    pub(crate) fn from_parts_unchecked(t0: f64, dt: f64, values: Vec<T>) -> Self {
        SampledSignal { t0, dt, values }
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn time(&self, j: usize) -> f64 {
        self.t0 + j as f64 * self.dt
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |j| self.time(j))
    }

    pub fn t_end(&self) -> f64 {
        self.time(self.len() - 1)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> SampledSignal<U> {
        SampledSignal { t0: self.t0, dt: self.dt, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// Same grid (start, step and length) as `other`.
    pub fn same_grid<U: Scalar>(&self, other: &SampledSignal<U>) -> bool {
        self.len() == other.len()
            && (self.dt - other.dt).abs() <= 1e-12 * self.dt
            && (self.t0 - other.t0).abs() <= 1e-12 * self.dt.max(self.t0.abs())
    }

    /// Largest modulus of the pointwise difference with a signal on the same grid.
    pub fn max_abs_diff(&self, other: &SampledSignal<T>) -> f64 {
        self.values.iter().zip(&other.values).map(|(&a, &b)| (a - b).modulus()).fold(0.0, f64::max)
    }
}

impl<T: Scalar> Add for &SampledSignal<T> {
    type Output = SampledSignal<T>;
    fn add(self, rhs: Self) -> SampledSignal<T> {
        assert!(self.same_grid(rhs), "signals on different grids");
        SampledSignal {
            t0: self.t0,
            dt: self.dt,
            values: self.values.iter().zip(&rhs.values).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Scalar> Mul<f64> for &SampledSignal<T> {
    type Output = SampledSignal<T>;
    fn mul(self, rhs: f64) -> SampledSignal<T> {
        self.map(|v| v * rhs)
    }
}
