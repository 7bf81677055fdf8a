//! Mixed L^r_t L^q_x norms of field trajectories.

use super::torus::FieldOnTorus;
use crate::error::{param, Error, Result};

/// Exponents and time window of ‖w‖_{L^r_t L^q_x}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedNormSpec {
    r: f64,
    q: f64,
    window: (f64, f64),
}

impl MixedNormSpec {
    pub fn new(r: f64, q: f64, window: (f64, f64)) -> Result<Self> {
        if !(r >= 1.0) || !(q >= 1.0) {
            return Err(param(format!("exponents must be in [1, inf], got r = {r}, q = {q}")));
        }
        if !(window.0 < window.1) || !window.0.is_finite() || !window.1.is_finite() {
            return Err(param(format!("time window must satisfy t_a < t_b, got {window:?}")));
        }
        Ok(MixedNormSpec { r, q, window })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn window(&self) -> (f64, f64) {
        self.window
    }
}

/// Fields at increasing sample times.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    fields: Vec<FieldOnTorus>,
}

impl Trajectory {
    pub fn new(times: Vec<f64>, fields: Vec<FieldOnTorus>) -> Result<Self> {
        if times.len() != fields.len() || times.is_empty() {
            return Err(Error::IndexMismatch(format!("{} times for {} fields", times.len(), fields.len())));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(param("trajectory times must be strictly increasing"));
        }
        if fields.iter().any(|f| f.grid() != fields[0].grid()) {
            return Err(Error::GridMismatch("trajectory fields live on different grids".into()));
        }
        Ok(Trajectory { times, fields })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn fields(&self) -> &[FieldOnTorus] {
        &self.fields
    }
}

/// Time L^r norm, over the window, of t ↦ ‖w(t)‖_q. Samples inside the
/// window are combined by the trapezoid rule; r = ∞ takes the maximum.
pub fn mixed_norm(traj: &Trajectory, spec: &MixedNormSpec) -> Result<f64> {
    let (ta, tb) = spec.window;
    let span = tb - ta;
    let inside: Vec<(f64, f64)> = traj
        .times
        .iter()
        .zip(&traj.fields)
        .filter(|(t, _)| **t >= ta - 1e-12 * span && **t <= tb + 1e-12 * span)
        .map(|(t, f)| Ok((*t, f.lp_norm(spec.q)?)))
        .collect::<Result<_>>()?;
    if inside.len() < 2 {
        return Err(Error::Window(format!("fewer than two samples inside [{ta}, {tb}]")));
    }
    if spec.r.is_infinite() {
        return Ok(inside.iter().map(|p| p.1).fold(0.0, f64::max));
    }
    let integral: f64 = inside.windows(2).map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1.powf(spec.r) + w[1].1.powf(spec.r))).sum();
    Ok(integral.powf(1.0 / spec.r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::torus::TorusGrid;
    use num_complex::Complex64;

    #[test]
    fn constant_trajectory() {
        let g = TorusGrid::new(1, 8).unwrap();
        let f = FieldOnTorus::new(g, vec![Complex64::new(-3.0, 0.0); 8]).unwrap();
        let times: Vec<f64> = (0..=20).map(|j| j as f64 * 0.1).collect();
        let traj = Trajectory::new(times.clone(), vec![f; times.len()]).unwrap();
        for r in [1.0, 2.0, 3.5] {
            let v = mixed_norm(&traj, &MixedNormSpec::new(r, 4.0, (0.0, 2.0)).unwrap()).unwrap();
            assert!((v - 3.0 * 2f64.powf(1.0 / r)).abs() < 1e-12);
        }
        let inf = mixed_norm(&traj, &MixedNormSpec::new(f64::INFINITY, 2.0, (0.0, 2.0)).unwrap()).unwrap();
        assert!((inf - 3.0).abs() < 1e-14);
        assert!(matches!(mixed_norm(&traj, &MixedNormSpec::new(1.0, 1.0, (5.0, 6.0)).unwrap()), Err(Error::Window(_))));
    }

    #[test]
    fn spec_validation() {
        assert!(MixedNormSpec::new(0.5, 2.0, (0.0, 1.0)).is_err());
        assert!(MixedNormSpec::new(1.0, 2.0, (1.0, 1.0)).is_err());
    }
}
