//! Riemann–Liouville integral and Djrbashian–Caputo derivative of sampled
//! signals by product integration.
//!
//! Both operators act on signals starting at t0 = 0. The integral uses the
//! product-rectangle rule (f frozen at the left end of each cell, the kernel
//! (t−s)^{β−1} integrated exactly); the derivative is the RL derivative of
//! f minus its Taylor head, discretised by the L1 scheme for 0 < β < 1 and
//! its second-difference analogue for 1 < β < 2.

use crate::error::{param, Error, Result};
use crate::signal::{SampledSignal, Scalar};
use crate::specfun::{gamma, rgamma};

fn require_origin<T: Scalar>(f: &SampledSignal<T>) -> Result<()> {
    if f.t0() != 0.0 {
        return Err(param(format!("fractional operators need a grid starting at 0, got t0 = {}", f.t0())));
    }
    Ok(())
}

/// Differences (m+1)^a − m^a for m = 0..n.
fn power_increments(a: f64, n: usize) -> Vec<f64> {
    (0..n).map(|m| ((m + 1) as f64).powf(a) - (m as f64).powf(a)).collect()
}

/// ᴿᴸI^β f(t_n) = (1/Γ(β)) ∫₀^{t_n} (t_n − s)^{β−1} f(s) ds.
pub fn rl_integral<T: Scalar>(beta: f64, f: &SampledSignal<T>) -> Result<SampledSignal<T>> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(param(format!("integral order must be > 0, got {beta}")));
    }
    require_origin(f)?;
    let n = f.len();
    let scale = f.dt().powf(beta) / gamma(beta + 1.0)?;
    let w: Vec<f64> = power_increments(beta, n).into_iter().map(|x| x * scale).collect();
    let fv = f.values();
    let out = (0..n)
        .map(|i| {
            let mut acc = T::default();
            for j in 0..i {
                acc += fv[j] * w[i - 1 - j];
            }
            acc
        })
        .collect();
    Ok(SampledSignal::from_parts_unchecked(0.0, f.dt(), out))
}

/// Caputo derivative together with the provenance of its value at t = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct FracDerivative<T = f64> {
    pub signal: SampledSignal<T>,
    /// The sample at t = 0 is a copy of the first interior value rather than
    /// a scheme output (the analytic value may be singular).
    pub origin_extrapolated: bool,
}

/// ᶜ∂^β f for 0 < β < 2, β not an integer.
///
/// `init` holds f(0) and, for β > 1, f′(0).
pub fn caputo_derivative<T: Scalar>(beta: f64, f: &SampledSignal<T>, init: &[T]) -> Result<FracDerivative<T>> {
    if !(beta > 0.0 && beta < 2.0) || beta == 1.0 {
        return Err(param(format!("Caputo order must lie in (0,1) or (1,2), got {beta}")));
    }
    require_origin(f)?;
    let need = beta.floor() as usize + 1;
    if init.len() != need {
        return Err(Error::Dimension(format!(
            "order {beta} needs {need} initial value(s), got {}",
            init.len()
        )));
    }
    let n = f.len();
    let dt = f.dt();
    // Subtract the Taylor head.
    let g: Vec<T> = f
        .values()
        .iter()
        .enumerate()
        .map(|(j, &v)| {
            let mut x = v - init[0];
            if need == 2 {
                x = x - init[1] * (j as f64 * dt);
            }
            x
        })
        .collect();
    // A nonzero g(0) is a jump at the origin: its RL derivative is g(0)t^{−β}/Γ(1−β).
    let jump = g[0];
    let jump_coeff = rgamma(1.0 - beta);

    let mut out = vec![T::default(); n];
    if beta < 1.0 {
        let b = power_increments(1.0 - beta, n);
        let scale = dt.powf(-beta) * rgamma(2.0 - beta);
        let diffs: Vec<T> = g.windows(2).map(|w| w[1] - w[0]).collect();
        for (i, o) in out.iter_mut().enumerate().skip(1) {
            let mut acc = T::default();
            for j in 0..i {
                acc += diffs[j] * b[i - 1 - j];
            }
            *o = acc * scale + jump * (jump_coeff * (i as f64 * dt).powf(-beta));
        }
    } else {
        let b = power_increments(2.0 - beta, n);
        let scale = dt.powf(1.0 - beta) * rgamma(3.0 - beta);
        // Slopes on the half grid; the slope at −1/2 is g′(0) = 0 after removing the head.
        let slopes: Vec<T> = g.windows(2).map(|w| (w[1] - w[0]) * (1.0 / dt)).collect();
        let curv: Vec<T> = (0..slopes.len())
            .map(|j| if j == 0 { slopes[0] } else { slopes[j] - slopes[j - 1] })
            .collect();
        for (i, o) in out.iter_mut().enumerate().skip(1) {
            let mut acc = T::default();
            for j in 0..i {
                acc += curv[j] * b[i - 1 - j];
            }
            *o = acc * scale + jump * (jump_coeff * (i as f64 * dt).powf(-beta));
        }
    }
    out[0] = out[1];
    Ok(FracDerivative {
        signal: SampledSignal::from_parts_unchecked(0.0, dt, out),
        origin_extrapolated: true,
    })
}

/// Caputo derivative with starting-weight corrections.
///
/// The L1 scheme loses accuracy near t = 0 when f − (Taylor head) behaves
/// like Σ c_k t^{σ_k} with non-integer σ_k (for Mittag-Leffler type
/// solutions σ_k = kβ). Adding Σ_k W_{n,k} g(t_k), with weights chosen so the
/// corrected scheme reproduces ᶜ∂^β t^{σ} exactly for every σ in `exponents`,
/// removes those terms from the error.
pub fn caputo_derivative_corrected<T: Scalar>(
    beta: f64,
    f: &SampledSignal<T>,
    init: &[T],
    exponents: &[f64],
) -> Result<FracDerivative<T>> {
    let base = caputo_derivative(beta, f, init)?;
    let m = exponents.len();
    if m == 0 {
        return Ok(base);
    }
    if m + 1 > f.len() {
        return Err(Error::Dimension(format!("{m} corrections need at least {} samples", m + 1)));
    }
    if let Some(s) = exponents.iter().find(|s| !(**s > 0.0) || !s.is_finite()) {
        return Err(param(format!("correction exponents must be > 0, got {s}")));
    }
    let n = f.len();
    let dt = f.dt();
    let zeros = vec![0.0; init.len()];
    // Residual of the base scheme on each t^σ.
    let mut resid = Vec::with_capacity(m);
    for &s in exponents {
        let p = SampledSignal::from_parts_unchecked(0.0, dt, (0..n).map(|j| (j as f64 * dt).powf(s)).collect());
        let approx = caputo_derivative(beta, &p, &zeros)?.signal.into_values();
        let c = gamma(s + 1.0)? * rgamma(s + 1.0 - beta);
        resid.push((0..n).map(|j| c * (j as f64 * dt).powf(s - beta) - approx[j]).collect::<Vec<_>>());
    }
    // V[l][k] = (t_{k+1})^{σ_l}; the weights for step i solve V w = resid[·][i].
    let v: Vec<Vec<f64>> = exponents
        .iter()
        .map(|&s| (1..=m).map(|k| (k as f64 * dt).powf(s)).collect())
        .collect();
    let lu = Lu::new(v).ok_or_else(|| param("correction exponents must be distinct"))?;
    let head = |j: usize| {
        let mut x = init[0];
        if init.len() == 2 {
            x += init[1] * (j as f64 * dt);
        }
        x
    };
    let g: Vec<T> = (1..=m).map(|k| f.values()[k] - head(k)).collect();
    let mut out = base.signal.into_values();
    let mut rhs = vec![0.0; m];
    for (i, o) in out.iter_mut().enumerate().skip(1) {
        for l in 0..m {
            rhs[l] = resid[l][i];
        }
        let w = lu.solve(&rhs);
        for k in 0..m {
            *o += g[k] * w[k];
        }
    }
    out[0] = out[1];
    Ok(FracDerivative {
        signal: SampledSignal::from_parts_unchecked(0.0, dt, out),
        origin_extrapolated: true,
    })
}

/// LU factorisation with partial pivoting of a small dense matrix.
struct Lu {
    a: Vec<Vec<f64>>,
    piv: Vec<usize>,
}

impl Lu {
    fn new(mut a: Vec<Vec<f64>>) -> Option<Self> {
        let n = a.len();
        let mut piv: Vec<usize> = (0..n).collect();
        for c in 0..n {
            let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
            if a[p][c] == 0.0 {
                return None;
            }
            a.swap(c, p);
            piv.swap(c, p);
            for r in c + 1..n {
                let f = a[r][c] / a[c][c];
                a[r][c] = f;
                let (top, rest) = a.split_at_mut(r);
                for (x, y) in rest[0][c + 1..n].iter_mut().zip(&top[c][c + 1..n]) {
                    *x -= f * y;
                }
            }
        }
        Some(Lu { a, piv })
    }

    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.a.len();
        let mut x: Vec<f64> = self.piv.iter().map(|&p| b[p]).collect();
        for r in 0..n {
            for k in 0..r {
                x[r] -= self.a[r][k] * x[k];
            }
        }
        for r in (0..n).rev() {
            for k in r + 1..n {
                x[r] -= self.a[r][k] * x[k];
            }
            x[r] /= self.a[r][r];
        }
        x
    }
}
