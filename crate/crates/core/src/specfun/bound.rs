//! Empirical sup of (1+|z|)·|E_{α,δ}(z)| along rays in the decay sector.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::mittag_leffler::{mittag_leffler, MLParams};
use crate::error::{param, Result};

/// One point of the profile t ↦ (1+t)|E_{α,δ}(t e^{iθ})|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSample {
    pub t: f64,
    pub value: f64,
}

/// The sampling grid: t = 0 followed by `n_samples - 1` log-spaced points
/// ending at `t_max`.
fn grid(t_max: f64, n_samples: usize) -> Vec<f64> {
    let lo = 1e-3 * t_max.min(1.0);
    let n = n_samples.max(2) - 1;
    let (a, b) = (lo.ln(), t_max.ln());
    let mut ts = Vec::with_capacity(n + 1);
    ts.push(0.0);
    ts.extend((0..n).map(|i| {
        if n == 1 {
            t_max
        } else {
            (a + (b - a) * i as f64 / (n - 1) as f64).exp()
        }
    }));
    ts
}

fn check(p: MLParams, t_max: f64) -> Result<()> {
    p.validate()?;
    if !(p.alpha < 2.0) {
        return Err(param(format!("bound probe requires 0 < alpha < 2, got {}", p.alpha)));
    }
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(param(format!("t_max must be positive, got {t_max}")));
    }
    Ok(())
}

/// Profile of (1+t)|E_{α,δ}(t e^{iθ})| on the sampling grid.
///
/// Rays with |θ| < πα/2 lie outside the sector where the bound holds and are
/// rejected.
pub fn ml_bound_profile_on_ray(p: MLParams, theta: f64, t_max: f64, n_samples: usize) -> Result<Vec<BoundSample>> {
    check(p, t_max)?;
    if theta.abs() > PI || theta.abs() < PI * p.alpha / 2.0 {
        return Err(param(format!(
            "ray arg {theta} is outside the sector pi*alpha/2 <= |arg z| <= pi (alpha = {})",
            p.alpha
        )));
    }
    let dir = Complex64::from_polar(1.0, theta);
    grid(t_max, n_samples)
        .into_par_iter()
        .map(|t| {
            let z = if theta == PI { Complex64::new(-t, 0.0) } else { dir * t };
            mittag_leffler(p, z).map(|e| BoundSample { t, value: (1.0 + t) * e.norm() })
        })
        .collect()
}

/// Profile along the negative real axis.
pub fn ml_bound_profile(p: MLParams, t_max: f64, n_samples: usize) -> Result<Vec<BoundSample>> {
    ml_bound_profile_on_ray(p, PI, t_max, n_samples)
}

/// sup over the grid of (1+t)|E_{α,δ}(−t)|: an empirical lower estimate of
/// the constant C in |E_{α,δ}(z)| ≤ C/(1+|z|).
pub fn ml_bound_constant(p: MLParams, t_max: f64, n_samples: usize) -> Result<f64> {
    ml_bound_constant_on_ray(p, PI, t_max, n_samples)
}

/// Same as [`ml_bound_constant`] along the ray arg z = θ.
pub fn ml_bound_constant_on_ray(p: MLParams, theta: f64, t_max: f64, n_samples: usize) -> Result<f64> {
    let prof = ml_bound_profile_on_ray(p, theta, t_max, n_samples)?;
    Ok(prof.iter().map(|s| s.value).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_sup_is_one() {
        let p = MLParams::new(1.0, 1.0).unwrap();
        let c = ml_bound_constant(p, 1e4, 1000).unwrap();
        assert!((c - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_alpha_two() {
        let p = MLParams::new(2.0, 1.0).unwrap();
        assert!(ml_bound_constant(p, 10.0, 100).is_err());
    }

    #[test]
    fn rejects_out_of_sector_ray() {
        let p = MLParams::new(0.5, 1.0).unwrap();
        assert!(ml_bound_constant_on_ray(p, 0.5, 10.0, 50).is_err());
        assert!(ml_bound_constant_on_ray(p, PI / 2.0, 10.0, 50).is_ok());
    }

    #[test]
    fn grid_shape() {
        let g = grid(100.0, 11);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.0);
        assert!((g[10] - 100.0).abs() < 1e-9);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }
}
