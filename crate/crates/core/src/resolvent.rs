//! The scalar resolvent s(t;λ) solving s = 1 − λ (k ∗ s).
//!
//! Time stepping treats s as piecewise linear and integrates the kernel
//! exactly against the two hat functions of each cell. The current value
//! enters through the weight of the last cell's right node and is solved
//! for implicitly.
//!
//! For kernels with k(t) ~ t^{ν−1} at the origin, s has a t^ν layer that a
//! uniform grid cannot resolve. The first uniform cells are then split into
//! sub-cells, graded towards 0 in the first cell and uniformly refined in the
//! next ones, and the history over this region is integrated on the fine
//! mesh. Output is reported on the uniform grid only.

use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::kernels::Kernel;
use crate::quadrature::{gauss_legendre_moments, GaussRule};
use crate::signal::SampledSignal;

/// Default absolute tolerance of [`resolvent_bound_check`].
pub const BOUND_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct ResolventRequest {
    pub kernel: Kernel,
    pub lambda: f64,
    pub t_max: f64,
    pub dt: f64,
}

impl ResolventRequest {
    pub fn new(kernel: Kernel, lambda: f64, t_max: f64, dt: f64) -> Result<Self> {
        let r = ResolventRequest { kernel, lambda, t_max, dt };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<()> {
        check_lambda(self.lambda)?;
        check_grid(self.t_max, self.dt)
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(param(format!("lambda must be finite and >= 0, got {lambda}")));
    }
    Ok(())
}

fn check_grid(t_max: f64, dt: f64) -> Result<()> {
    if !(t_max > 0.0 && dt > 0.0 && dt <= t_max) || !t_max.is_finite() {
        return Err(param(format!("invalid time grid T = {t_max}, dt = {dt}")));
    }
    Ok(())
}

/// Target for the linear-interpolation error of the t^ν layer, per unit dt.
const LAYER_TOLERANCE: f64 = 1e-3;

/// Weights of the left and right node of a cell of width h whose nearest
/// lag from the target node is a: ∫_0^h k(a+x)·x/h dx and ∫_0^h k(a+x)(h−x)/h dx.
///
/// The width is passed separately because sub-cells near the origin can be
/// narrower than the spacing of floating-point numbers around the lag.
fn cell_moments(kernel: &Kernel, a: f64, h: f64) -> Result<(f64, f64)> {
    let b = a + h;
    if a == 0.0 {
        let (k1, k2) = (kernel.cumulative(h)?, kernel.second_cumulative(h)?);
        return Ok(((h * k1 - k2) / h, k2 / h));
    }
    let ratio = h / a;
    if ratio >= 0.5 {
        let d2 = kernel.second_cumulative(b)? - kernel.second_cumulative(a)?;
        return Ok(((h * kernel.cumulative(b)? - d2) / h, (d2 - h * kernel.cumulative(a)?) / h));
    }
    // Away from the singularity K2 differences cancel; integrate k directly.
    let rule = if ratio < 1e-3 {
        GaussRule::Two
    } else if ratio < 0.1 {
        GaussRule::Four
    } else {
        GaussRule::Eight
    };
    let (left, right) = gauss_legendre_moments(rule, |x| kernel.eval(a + x), 0.0, h)?;
    Ok((left / h, right / h))
}

/// Sub-cells of uniform cell j ≥ 1 so that the interpolation error of t^ν,
/// about ν(1−ν)/8·dt^ν·j^{ν−2}/p², stays below LAYER_TOLERANCE·dt.
fn subcells(nu: f64, dt: f64, j: usize) -> usize {
    let e = nu * (1.0 - nu) / 8.0 * dt.powf(nu - 1.0) * (j as f64).powf(nu - 2.0) / LAYER_TOLERANCE;
    e.sqrt().ceil() as usize
}

/// Fine nodes covering [0, m0·dt], and the index of each uniform node in it.
fn fine_mesh(nu: f64, dt: f64, steps: usize) -> (Vec<f64>, Vec<usize>) {
    let first = 2 * subcells(nu, dt, 1).max(1);
    let grading = 2.0 / nu;
    let mut nodes: Vec<f64> = (0..=first).map(|i| dt * (i as f64 / first as f64).powf(grading)).collect();
    let mut index = vec![0, first];
    for j in 1..steps {
        let p = subcells(nu, dt, j);
        if p <= 1 {
            break;
        }
        let start = j as f64 * dt;
        nodes.extend((1..=p).map(|i| start + dt * i as f64 / p as f64));
        *nodes.last_mut().expect("non-empty") = (j + 1) as f64 * dt;
        index.push(nodes.len() - 1);
    }
    (nodes, index)
}

/// Product-integration weights of a kernel on a uniform grid, with a refined
/// start for kernels singular at the origin.
#[derive(Debug, Clone)]
pub struct ResolventWeights {
    dt: f64,
    steps: usize,
    /// Fine nodes over the refined cells; `[0.0]` when there are none.
    fine: Vec<f64>,
    /// Fine-node index of uniform nodes 0..=m0.
    fine_index: Vec<usize>,
    /// Row i−1 holds the (left, right) weights of fine cells 0..i for fine target i.
    fine_rows: Vec<Vec<(f64, f64)>>,
    /// Row n−m0−1 holds the weights of all fine cells for uniform target n > m0.
    tail_rows: Vec<Vec<(f64, f64)>>,
    /// Left-node weight of the uniform cell at lag m.
    a: Vec<f64>,
    /// Right-node weight of the uniform cell at lag m.
    b: Vec<f64>,
}

impl ResolventWeights {
    pub fn new(kernel: &Kernel, t_max: f64, dt: f64) -> Result<Self> {
        check_grid(t_max, dt)?;
        let steps = (t_max / dt).round() as usize;
        let k1: Vec<f64> = (0..=steps).map(|m| kernel.cumulative(m as f64 * dt)).collect::<Result<_>>()?;
        let k2: Vec<f64> = (0..=steps).map(|m| kernel.second_cumulative(m as f64 * dt)).collect::<Result<_>>()?;
        let (a, b) = (0..steps)
            .map(|m| {
                let d2 = k2[m + 1] - k2[m];
                ((dt * k1[m + 1] - d2) / dt, (d2 - dt * k1[m]) / dt)
            })
            .unzip();

        let (fine, fine_index) = match kernel.origin_exponent() {
            Some(nu) => fine_mesh(nu, dt, steps),
            None => (vec![0.0], vec![0]),
        };
        let fine_rows = (1..fine.len())
            .into_par_iter()
            .map(|i| (0..i).map(|c| cell_moments(kernel, fine[i] - fine[c + 1], fine[c + 1] - fine[c])).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        let m0 = fine_index.len() - 1;
        let tail_rows = if fine.len() > 1 {
            (m0 + 1..=steps)
                .into_par_iter()
                .map(|n| {
                    let t = n as f64 * dt;
                    (0..fine.len() - 1).map(|c| cell_moments(kernel, t - fine[c + 1], fine[c + 1] - fine[c])).collect()
                })
                .collect::<Result<Vec<Vec<_>>>>()?
        } else {
            Vec::new()
        };
        Ok(ResolventWeights { dt, steps, fine, fine_index, fine_rows, tail_rows, a, b })
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Number of uniform cells replaced by the fine mesh.
    pub fn refined_cells(&self) -> usize {
        self.fine_index.len() - 1
    }

    /// s(t_n; λ) for n = 0..=steps.
    pub fn solve(&self, lambda: f64) -> Result<SampledSignal> {
        check_lambda(lambda)?;
        let mut f = Vec::with_capacity(self.fine.len());
        f.push(1.0);
        for (i, row) in self.fine_rows.iter().enumerate().map(|(r, row)| (r + 1, row)) {
            let (last, prior) = row.split_last().expect("non-empty row");
            let mut hist = last.0 * f[i - 1];
            for (c, &(wl, wr)) in prior.iter().enumerate() {
                hist += wl * f[c] + wr * f[c + 1];
            }
            let denom = 1.0 + lambda * last.1;
            if !(denom > 0.0) {
                return Err(Error::StepRejection { step: i, denominator: denom });
            }
            f.push((1.0 - lambda * hist) / denom);
        }

        let m0 = self.refined_cells();
        let mut s: Vec<f64> = self.fine_index.iter().map(|&i| f[i]).collect();
        s.reserve(self.steps - m0);
        let denom = 1.0 + lambda * self.b[0];
        if self.steps > m0 && !(denom > 0.0) {
            return Err(Error::StepRejection { step: m0 + 1, denominator: denom });
        }
        for n in m0 + 1..=self.steps {
            let mut hist = 0.0;
            if let Some(row) = self.tail_rows.get(n - m0 - 1) {
                for (c, &(wl, wr)) in row.iter().enumerate() {
                    hist += wl * f[c] + wr * f[c + 1];
                }
            }
            // Uniform cells j = m0..n: left node j, right node j+1, lag n−1−j.
            for (j, sj) in s.iter().enumerate().take(n).skip(m0) {
                hist += self.a[n - 1 - j] * sj;
            }
            for j in m0..n - 1 {
                hist += self.b[n - 1 - j] * s[j + 1];
            }
            s.push((1.0 - lambda * hist) / denom);
        }
        SampledSignal::new(0.0, self.dt, s)
    }
}

/// Samples of s(t;λ) on [0, T].
pub fn resolvent_scalar(req: &ResolventRequest) -> Result<SampledSignal> {
    req.validate()?;
    ResolventWeights::new(&req.kernel, req.t_max, req.dt)?.solve(req.lambda)
}

/// Resolvents for several λ sharing one kernel and grid; the output order
/// follows `lambdas`.
pub fn resolvent_batch(kernel: &Kernel, lambdas: &[f64], t_max: f64, dt: f64) -> Result<Vec<SampledSignal>> {
    let w = ResolventWeights::new(kernel, t_max, dt)?;
    lambdas.par_iter().map(|&l| w.solve(l)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// max over the grid of s(t;λ) − 1/(1 + λ ∫₀ᵗ k).
    pub max_violation: f64,
    pub pass: bool,
}

/// Checks s(t;λ) ≤ 1/(1 + λ ∫₀ᵗ k) on the grid for a completely positive kernel.
pub fn resolvent_bound_check(req: &ResolventRequest) -> Result<BoundReport> {
    resolvent_bound_check_with(req, BOUND_TOLERANCE)
}

pub fn resolvent_bound_check_with(req: &ResolventRequest, tol: f64) -> Result<BoundReport> {
    if !req.kernel.is_completely_positive() {
        return Err(Error::Precondition(format!("{} is not flagged completely positive", req.kernel)));
    }
    let s = resolvent_scalar(req)?;
    bound_violation(&req.kernel, req.lambda, &s, tol)
}

/// Compares a computed resolvent with 1/(1 + λ ∫₀ᵗ k).
pub fn bound_violation(kernel: &Kernel, lambda: f64, s: &SampledSignal, tol: f64) -> Result<BoundReport> {
    let mut worst = f64::NEG_INFINITY;
    for (t, &v) in s.times().zip(s.values()) {
        let bound = 1.0 / (1.0 + lambda * kernel.cumulative(t)?);
        worst = worst.max(v - bound);
    }
    Ok(BoundReport { max_violation: worst, pass: worst <= tol })
}
