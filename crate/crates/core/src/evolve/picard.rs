//! Picard iteration for w = linear part + Duhamel(μ|w|^{η−1}w) on the torus.

use num_complex::Complex64;
use rayon::prelude::*;

use super::duhamel::DuhamelPlan;
use super::propagator::{evolve_linear, PropagatorKind};
use super::torus::{analyze, lp_norm_of, synthesize, synthesize_coeffs, FieldOnTorus, TorusCoeffs, TorusGrid};
use crate::error::{param, Error, Result};
use crate::spectra::SpectralModel;

/// Consecutive growing increments that count as divergence.
const GROWTH_LIMIT: usize = 3;
/// Increments beyond this are treated as overflow.
const OVERFLOW: f64 = 1e150;

#[derive(Debug, Clone)]
pub struct PicardRequest {
    pub kind: PropagatorKind,
    pub eta: f64,
    /// Sign of the nonlinearity, ±1.
    pub mu: f64,
    pub w0: FieldOnTorus,
    /// Initial velocity, wave-type only.
    pub w1: Option<FieldOnTorus>,
    pub t_max: f64,
    pub dt: f64,
    pub tol: f64,
    pub max_iter: usize,
    /// Spatial exponent of the increment norm.
    pub p0: f64,
}

impl PicardRequest {
    /// Defaults: tol = 1e-10, max_iter = 50, p0 = 2.
    pub fn new(kind: PropagatorKind, eta: f64, mu: f64, w0: FieldOnTorus, t_max: f64, dt: f64) -> Self {
        PicardRequest { kind, eta, mu, w0, w1: None, t_max, dt, tol: 1e-10, max_iter: 50, p0: 2.0 }
    }

    fn steps(&self) -> Result<usize> {
        if !matches!(self.kind, PropagatorKind::Heat | PropagatorKind::HeatType { .. } | PropagatorKind::WaveType { .. }) {
            return Err(param(format!("Picard iteration supports heat, heat-type and wave-type, not {:?}", self.kind)));
        }
        self.kind.validate()?;
        if !(self.eta > 1.0) || !self.eta.is_finite() {
            return Err(param(format!("nonlinearity power must exceed 1, got {}", self.eta)));
        }
        if self.mu != 1.0 && self.mu != -1.0 {
            return Err(param(format!("mu must be +1 or -1, got {}", self.mu)));
        }
        if !(self.tol > 0.0) || self.max_iter == 0 || !(self.p0 >= 1.0) {
            return Err(param("need tol > 0, max_iter >= 1 and p0 >= 1"));
        }
        if !(self.dt > 0.0 && self.t_max > 0.0) || !self.t_max.is_finite() {
            return Err(param(format!("need T > 0 and dt > 0, got T = {}, dt = {}", self.t_max, self.dt)));
        }
        let ratio = self.t_max / self.dt;
        let steps = ratio.round();
        if (ratio - steps).abs() > 1e-9 * ratio || steps < 1.0 {
            return Err(param(format!("T = {} is not a whole number of steps dt = {}", self.t_max, self.dt)));
        }
        if let Some(w1) = &self.w1 {
            if w1.grid() != self.w0.grid() {
                return Err(Error::GridMismatch("w0 and w1 live on different grids".into()));
            }
        }
        Ok(steps as usize)
    }
}

#[derive(Debug, Clone)]
pub struct PicardReport {
    pub times: Vec<f64>,
    pub trajectory: Vec<FieldOnTorus>,
    pub iterations: usize,
    /// sup_t ‖w_{n+1} − w_n‖_{p0} per iteration.
    pub increments: Vec<f64>,
    /// Ratios of consecutive increments.
    pub contraction_ratios: Vec<f64>,
    /// sup_t ‖w − linear − Duhamel(F(w))‖_{p0} of the returned trajectory.
    pub residual: f64,
}

struct Problem<'a> {
    grid: TorusGrid,
    plan: DuhamelPlan,
    linear: Vec<Vec<Complex64>>,
    req: &'a PicardRequest,
}

impl Problem<'_> {
    fn physical(&self, rows: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
        rows.par_iter()
            .map(|r| Ok(synthesize_coeffs(&TorusCoeffs::new(self.grid, r.clone())?).into_values()))
            .collect()
    }

    /// Coefficients of linear + Duhamel(F(w)) for w given in physical space.
    fn step(&self, w: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
        let (eta, mu) = (self.req.eta, self.req.mu);
        let forcing = w
            .par_iter()
            .map(|vals| {
                let f = vals.iter().map(|&z| z * (mu * z.norm().powf(eta - 1.0))).collect();
                Ok(analyze(&FieldOnTorus::new(self.grid, f)?).into_values())
            })
            .collect::<Result<Vec<_>>>()?;
        let conv = self.plan.apply(&forcing)?;
        Ok(self.linear.iter().zip(conv).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect())
    }

    fn distance(&self, a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Result<f64> {
        let norms = a
            .par_iter()
            .zip(b)
            .map(|(x, y)| lp_norm_of(&x.iter().zip(y).map(|(u, v)| u - v).collect::<Vec<_>>(), self.req.p0))
            .collect::<Result<Vec<_>>>()?;
        Ok(norms.into_iter().fold(0.0, f64::max))
    }
}

/// Iterates from the linear evolution until sup_t ‖w_{n+1} − w_n‖_{p0} < tol.
pub fn picard_solve(m: &SpectralModel, req: &PicardRequest) -> Result<PicardReport> {
    let steps = req.steps()?;
    let grid = req.w0.grid();
    let c0 = analyze(&req.w0);
    // Fails early unless the model is the torus Laplacian of this grid.
    synthesize(m, &c0)?;
    let c1 = req.w1.as_ref().map(analyze);
    let eigs = grid.eigenvalues();
    let times: Vec<f64> = (0..=steps).map(|n| n as f64 * req.dt).collect();
    let linear = evolve_linear(&eigs, &req.kind, c0.values(), c1.as_ref().map(|c| c.values()), &times)?;
    let plan = DuhamelPlan::new(&eigs, &req.kind, req.dt, steps)?;
    let problem = Problem { grid, plan, linear, req };

    let mut current = problem.physical(&problem.linear)?;
    let mut increments = Vec::new();
    let mut contraction_ratios = Vec::new();
    let mut growing = 0;
    for iteration in 1..=req.max_iter {
        let next = problem.physical(&problem.step(&current)?)?;
        let delta = problem.distance(&next, &current)?;
        if !delta.is_finite() || delta > OVERFLOW {
            return Err(Error::Diverged(format!("increment overflowed at iteration {iteration}")));
        }
        if let Some(&prev) = increments.last() {
            let ratio = if prev > 0.0 { delta / prev } else { 0.0 };
            contraction_ratios.push(ratio);
            growing = if ratio > 1.0 { growing + 1 } else { 0 };
            if growing >= GROWTH_LIMIT {
                return Err(Error::Diverged(format!(
                    "increments grew for {GROWTH_LIMIT} consecutive iterations, last ratio {ratio:.3}, increment {delta:e}"
                )));
            }
        }
        increments.push(delta);
        current = next;
        if delta < req.tol {
            let residual = problem.distance(&problem.physical(&problem.step(&current)?)?, &current)?;
            let trajectory = current.into_iter().map(|v| FieldOnTorus::new(grid, v)).collect::<Result<_>>()?;
            return Ok(PicardReport { times, trajectory, iterations: iteration, increments, contraction_ratios, residual });
        }
    }
    Err(Error::Convergence(format!(
        "no convergence in {} iterations, last increment {:e}",
        req.max_iter,
        increments.last().copied().unwrap_or(f64::NAN)
    )))
}
