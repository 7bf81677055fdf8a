//! Duhamel convolution ∫₀ᵗ G(t−s;λ) f(s) ds per mode, with
//! G = t^{β−1}E_{β,β}(−t^βλ) (e^{−tλ} for heat).
//!
//! The forcing is taken piecewise linear in s and integrated exactly against
//! G through its first and second primitives
//! G1 = t^β E_{β,β+1}(−t^βλ) and G2 = t^{β+1} E_{β,β+2}(−t^βλ).

use std::collections::HashMap;

use num_complex::Complex64;
use rayon::prelude::*;

use super::propagator::{evolve_linear, PropagatorKind};
use crate::error::{param, Error, Result};
use crate::specfun::{mittag_leffler_real, MLParams};

/// (G1(t), G2(t)) for order β and spectral value λ.
fn primitives(beta: f64, lam: f64, t: f64) -> Result<(f64, f64)> {
    if t == 0.0 {
        return Ok((0.0, 0.0));
    }
    if beta == 1.0 {
        let x = lam * t;
        if x < 1e-2 {
            // Series of (1−e^{−x})/x and (x−1+e^{−x})/x².
            let g1 = 1.0 - x / 2.0 + x * x / 6.0 - x.powi(3) / 24.0 + x.powi(4) / 120.0;
            let g2 = 0.5 - x / 6.0 + x * x / 24.0 - x.powi(3) / 120.0 + x.powi(4) / 720.0;
            return Ok((t * g1, t * t * g2));
        }
        let em1 = (-x).exp_m1();
        return Ok((-em1 / lam, (x + em1) / (lam * lam)));
    }
    let z = -lam * t.powf(beta);
    let g1 = t.powf(beta) * mittag_leffler_real(MLParams::new(beta, beta + 1.0)?, z)?;
    let g2 = t.powf(beta + 1.0) * mittag_leffler_real(MLParams::new(beta, beta + 2.0)?, z)?;
    Ok((g1, g2))
}

/// Product-integration weights for every distinct eigenvalue on a uniform grid.
#[derive(Debug, Clone)]
pub struct DuhamelPlan {
    dt: f64,
    steps: usize,
    /// Column of each mode in `weights`.
    column: Vec<usize>,
    /// Per distinct eigenvalue: (left, right) node weights at lags 0..steps.
    weights: Vec<Vec<(f64, f64)>>,
}

impl DuhamelPlan {
    pub fn new(eigs: &[f64], kind: &PropagatorKind, dt: f64, steps: usize) -> Result<Self> {
        let beta = kind.duhamel_order()?;
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(param(format!("time step must be positive, got {dt}")));
        }
        if let Some(l) = eigs.iter().find(|l| !(**l >= 0.0) || !l.is_finite()) {
            return Err(param(format!("eigenvalues must be finite and >= 0, got {l}")));
        }
        let mut distinct = eigs.to_vec();
        distinct.sort_by(f64::total_cmp);
        distinct.dedup();
        let index: HashMap<u64, usize> = distinct.iter().enumerate().map(|(i, l)| (l.to_bits(), i)).collect();
        let column = eigs.iter().map(|l| index[&l.to_bits()]).collect();
        let weights = distinct
            .par_iter()
            .map(|&lam| {
                let prim: Vec<(f64, f64)> =
                    (0..=steps).map(|m| primitives(beta, lam, m as f64 * dt)).collect::<Result<_>>()?;
                Ok((0..steps)
                    .map(|m| {
                        let d2 = prim[m + 1].1 - prim[m].1;
                        ((dt * prim[m + 1].0 - d2) / dt, (d2 - dt * prim[m].0) / dt)
                    })
                    .collect())
            })
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(DuhamelPlan { dt, steps, column, weights })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn modes(&self) -> usize {
        self.column.len()
    }

    /// The convolution term at t_n = n·dt, n = 0..=steps, for forcing rows
    /// f[n][mode].
    pub fn apply(&self, forcing: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
        if forcing.len() != self.steps + 1 {
            return Err(Error::GridMismatch(format!("{} forcing rows for {} grid points", forcing.len(), self.steps + 1)));
        }
        if let Some(row) = forcing.iter().find(|r| r.len() != self.modes()) {
            return Err(Error::GridMismatch(format!("forcing row of {} entries for {} modes", row.len(), self.modes())));
        }
        let per_mode: Vec<Vec<Complex64>> = (0..self.modes())
            .into_par_iter()
            .map(|m| {
                let w = &self.weights[self.column[m]];
                let mut out = vec![Complex64::new(0.0, 0.0); self.steps + 1];
                for (n, slot) in out.iter_mut().enumerate().skip(1) {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for j in 0..n {
                        let (a, b) = w[n - 1 - j];
                        acc += forcing[j][m] * a + forcing[j + 1][m] * b;
                    }
                    *slot = acc;
                }
                out
            })
            .collect();
        Ok((0..=self.steps).map(|n| per_mode.iter().map(|col| col[n]).collect()).collect())
    }
}

/// Linear evolution plus the Duhamel term on the grid t_n = n·dt, n = 0..=steps.
pub fn duhamel(
    eigs: &[f64],
    kind: &PropagatorKind,
    w0: &[Complex64],
    w1: Option<&[Complex64]>,
    forcing: &[Vec<Complex64>],
    dt: f64,
) -> Result<Vec<Vec<Complex64>>> {
    if forcing.len() < 2 {
        return Err(Error::GridMismatch("forcing needs at least two time samples".into()));
    }
    let steps = forcing.len() - 1;
    let plan = DuhamelPlan::new(eigs, kind, dt, steps)?;
    let times: Vec<f64> = (0..=steps).map(|n| n as f64 * dt).collect();
    let linear = evolve_linear(eigs, kind, w0, w1, &times)?;
    let conv = plan.apply(forcing)?;
    Ok(linear.into_iter().zip(conv).map(|(a, b)| a.into_iter().zip(b).map(|(x, y)| x + y).collect()).collect())
}
