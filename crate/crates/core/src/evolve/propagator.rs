//! Scalar propagators φ(t;λ) of the equation families and their diagonal
//! action on spectral coefficients.

use std::collections::HashMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::kernels::Kernel;
use crate::resolvent::ResolventWeights;
use crate::signal::SampledSignal;
use crate::specfun::{mittag_leffler, mittag_leffler_real, MLParams};

/// Resolvent steps per unit of the longest requested time.
const RESOLVENT_STEPS: f64 = 4000.0;

#[derive(Debug, Clone, PartialEq)]
pub enum PropagatorKind {
    /// φ = e^{−tλ}
    Heat,
    /// φ = E_β(−t^βλ), 0 < β < 1
    HeatType { beta: f64 },
    /// φ₀ = E_β(−t^βλ) and φ₁ = t·E_{β,2}(−t^βλ), 1 < β < 2
    WaveType { beta: f64 },
    /// φ = E_β(i t^βλ), 0 < β < 1
    SchrodingerType { beta: f64 },
    /// Resolvent of k = 1 + γt^{−β}/Γ(1−β)
    RayleighStokes { beta: f64, gamma: f64 },
    /// φ = exp(−λ∫₀ᵗα) for a sampled coefficient α ≥ 0 starting at t = 0
    VariableCoeff { alpha: SampledSignal },
    /// Resolvent of the multi-term kernel
    MultiTerm { beta: f64, beta_i: Vec<f64>, sigma_i: Vec<f64> },
    /// Resolvent of an arbitrary kernel
    GeneralKernel(Kernel),
}

impl PropagatorKind {
    pub fn validate(&self) -> Result<()> {
        let open = |beta: f64, lo: f64, hi: f64, name: &str| {
            if beta > lo && beta < hi {
                Ok(())
            } else {
                Err(param(format!("{name} needs {lo} < beta < {hi}, got {beta}")))
            }
        };
        match self {
            PropagatorKind::Heat | PropagatorKind::GeneralKernel(_) => Ok(()),
            PropagatorKind::HeatType { beta } => open(*beta, 0.0, 1.0, "heat-type"),
            PropagatorKind::WaveType { beta } => open(*beta, 1.0, 2.0, "wave-type"),
            PropagatorKind::SchrodingerType { beta } => open(*beta, 0.0, 1.0, "Schrödinger-type"),
            PropagatorKind::RayleighStokes { beta, gamma } => Kernel::rayleigh_stokes(*beta, *gamma).map(|_| ()),
            PropagatorKind::MultiTerm { beta, beta_i, sigma_i } => {
                Kernel::multi_term(*beta, beta_i.clone(), sigma_i.clone()).map(|_| ())
            }
            PropagatorKind::VariableCoeff { alpha } => {
                if alpha.t0() != 0.0 {
                    return Err(param("variable coefficient must be sampled from t = 0"));
                }
                if alpha.values().iter().any(|&a| a < 0.0) {
                    return Err(param("variable coefficient must be nonnegative"));
                }
                Ok(())
            }
        }
    }

    /// The kernel k whose resolvent s(t;λ) is the propagator, for the
    /// families driven by a scalar Volterra equation.
    pub fn kernel(&self) -> Result<Option<Kernel>> {
        self.validate()?;
        Ok(match self {
            PropagatorKind::Heat => Some(Kernel::constant(1.0)?),
            PropagatorKind::HeatType { beta } | PropagatorKind::WaveType { beta } => Some(Kernel::power_law(*beta)?),
            PropagatorKind::RayleighStokes { beta, gamma } => Some(Kernel::rayleigh_stokes(*beta, *gamma)?),
            PropagatorKind::MultiTerm { beta, beta_i, sigma_i } => {
                Some(Kernel::multi_term(*beta, beta_i.clone(), sigma_i.clone())?)
            }
            PropagatorKind::GeneralKernel(k) => Some(k.clone()),
            PropagatorKind::SchrodingerType { .. } | PropagatorKind::VariableCoeff { .. } => None,
        })
    }

    /// Families evaluated through the numerical resolvent.
    pub fn uses_resolvent(&self) -> bool {
        matches!(
            self,
            PropagatorKind::RayleighStokes { .. } | PropagatorKind::MultiTerm { .. } | PropagatorKind::GeneralKernel(_)
        )
    }

    /// The fractional order governing Duhamel convolutions: 1 for Heat, β
    /// for the heat- and wave-type families.
    pub(crate) fn duhamel_order(&self) -> Result<f64> {
        self.validate()?;
        match self {
            PropagatorKind::Heat => Ok(1.0),
            PropagatorKind::HeatType { beta } | PropagatorKind::WaveType { beta } => Ok(*beta),
            other => Err(param(format!("Duhamel forcing is defined for heat, heat-type and wave-type, not {other:?}"))),
        }
    }
}

fn check_point(t: f64, lam: f64) -> Result<()> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(param(format!("time must be finite and >= 0, got {t}")));
    }
    if !(lam >= 0.0) || !lam.is_finite() {
        return Err(param(format!("spectral value must be finite and >= 0, got {lam}")));
    }
    Ok(())
}

/// E_β(−t^βλ).
fn ml_decay(beta: f64, t: f64, lam: f64) -> Result<f64> {
    mittag_leffler_real(MLParams::new(beta, 1.0)?, -lam * t.powf(beta))
}

/// (φ₀, φ₁) = (E_β(−t^βλ), t·E_{β,2}(−t^βλ)) for the wave-type family.
pub fn wave_pair(beta: f64, t: f64, lam: f64) -> Result<(f64, f64)> {
    PropagatorKind::WaveType { beta }.validate()?;
    check_point(t, lam)?;
    let z = -lam * t.powf(beta);
    Ok((mittag_leffler_real(MLParams::new(beta, 1.0)?, z)?, t * mittag_leffler_real(MLParams::new(beta, 2.0)?, z)?))
}

/// ∫₀ᵗ α by the trapezoid rule on α's samples, linear inside a cell.
fn integrated_coefficient(alpha: &SampledSignal, t: f64) -> Result<f64> {
    if t > alpha.t_end() * (1.0 + 1e-12) {
        return Err(param(format!("time {t} beyond the coefficient samples (end {})", alpha.t_end())));
    }
    let dt = alpha.dt();
    let v = alpha.values();
    let j = ((t / dt).floor() as usize).min(v.len() - 2);
    let full: f64 = v[..=j].windows(2).map(|w| 0.5 * dt * (w[0] + w[1])).sum();
    let frac = t - j as f64 * dt;
    let at = v[j] + (v[j + 1] - v[j]) * frac / dt;
    Ok(full + 0.5 * frac * (v[j] + at))
}

/// φ(t;λ) for the non-resolvent families (the w₀ propagator for wave-type).
fn closed_form(kind: &PropagatorKind, t: f64, lam: f64) -> Result<Complex64> {
    let re = |x: f64| Ok(Complex64::new(x, 0.0));
    match kind {
        PropagatorKind::Heat => re((-t * lam).exp()),
        PropagatorKind::HeatType { beta } | PropagatorKind::WaveType { beta } => re(ml_decay(*beta, t, lam)?),
        PropagatorKind::SchrodingerType { beta } => {
            mittag_leffler(MLParams::new(*beta, 1.0)?, Complex64::new(0.0, lam * t.powf(*beta)))
        }
        PropagatorKind::VariableCoeff { alpha } => re((-lam * integrated_coefficient(alpha, t)?).exp()),
        _ => unreachable!("resolvent families are tabulated"),
    }
}

/// Resolvents s(·;λ) for a set of spectral values on one time grid.
#[derive(Debug, Clone)]
pub struct ResolventTable {
    dt: f64,
    lambdas: Vec<f64>,
    values: Vec<SampledSignal>,
}

impl ResolventTable {
    pub fn new(kernel: &Kernel, lambdas: &[f64], t_max: f64, dt: f64) -> Result<Self> {
        let mut lambdas = lambdas.to_vec();
        lambdas.sort_by(f64::total_cmp);
        lambdas.dedup();
        let w = ResolventWeights::new(kernel, t_max, dt)?;
        let values = lambdas.par_iter().map(|&l| w.solve(l)).collect::<Result<Vec<_>>>()?;
        Ok(ResolventTable { dt, lambdas, values })
    }

    /// s(t;λ) by linear interpolation in t; λ must be one of the tabulated values.
    pub fn value(&self, lam: f64, t: f64) -> Result<f64> {
        let i = self
            .lambdas
            .binary_search_by(|l| l.total_cmp(&lam))
            .map_err(|_| param(format!("spectral value {lam} is not tabulated")))?;
        let s = &self.values[i];
        let x = t / self.dt;
        let j = x.floor() as usize;
        if j + 1 >= s.len() {
            if j < s.len() && (x - j as f64) < 1e-9 {
                return Ok(s.values()[j]);
            }
            return Err(param(format!("time {t} beyond the tabulated range {}", s.t_end())));
        }
        let f = x - j as f64;
        Ok(s.values()[j] * (1.0 - f) + s.values()[j + 1] * f)
    }
}

/// φ(t;λ) of a family. Resolvent families are solved on [0, t] with
/// t/4000 steps.
pub fn propagator_value(kind: &PropagatorKind, t: f64, lam: f64) -> Result<Complex64> {
    kind.validate()?;
    check_point(t, lam)?;
    if !kind.uses_resolvent() {
        return closed_form(kind, t, lam);
    }
    if t == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let kernel = kind.kernel()?.expect("resolvent family has a kernel");
    let table = ResolventTable::new(&kernel, &[lam], t, t / RESOLVENT_STEPS)?;
    Ok(Complex64::new(table.value(lam, t)?, 0.0))
}

/// φ(t_j;λ_m) for all requested times and distinct eigenvalues; rows follow
/// `times`, columns follow `eigs`.
pub fn propagator_matrix(kind: &PropagatorKind, eigs: &[f64], times: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    Ok(propagator_matrices(kind, eigs, times)?.0)
}

/// Rows follow times, columns follow eigenvalues.
type Matrix = Vec<Vec<Complex64>>;

/// The w₀ propagator matrix and, for wave-type, the w₁ one.
fn propagator_matrices(kind: &PropagatorKind, eigs: &[f64], times: &[f64]) -> Result<(Matrix, Option<Matrix>)> {
    kind.validate()?;
    for &t in times {
        check_point(t, 0.0)?;
    }
    let mut distinct: Vec<f64> = eigs.to_vec();
    for &l in &distinct {
        check_point(0.0, l)?;
    }
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    let slot: HashMap<u64, usize> = distinct.iter().enumerate().map(|(i, l)| (l.to_bits(), i)).collect();
    let column = |l: &f64| slot[&l.to_bits()];

    let table = if kind.uses_resolvent() {
        let t_max = times.iter().copied().fold(0.0, f64::max);
        if t_max > 0.0 {
            let kernel = kind.kernel()?.expect("resolvent family has a kernel");
            Some(ResolventTable::new(&kernel, &distinct, t_max, t_max / RESOLVENT_STEPS)?)
        } else {
            None
        }
    } else {
        None
    };

    let rows = |f: &(dyn Fn(f64, f64) -> Result<Complex64> + Sync)| -> Result<Vec<Vec<Complex64>>> {
        times
            .par_iter()
            .map(|&t| {
                let per: Vec<Complex64> = distinct.iter().map(|&l| f(t, l)).collect::<Result<_>>()?;
                Ok(eigs.iter().map(|l| per[column(l)]).collect())
            })
            .collect()
    };
    let phi0 = rows(&|t, l| match &table {
        Some(tab) => Ok(Complex64::new(tab.value(l, t)?, 0.0)),
        None if kind.uses_resolvent() => Ok(Complex64::new(1.0, 0.0)),
        None => closed_form(kind, t, l),
    })?;
    let phi1 = match kind {
        PropagatorKind::WaveType { beta } => Some(rows(&|t, l| Ok(Complex64::new(wave_pair(*beta, t, l)?.1, 0.0)))?),
        _ => None,
    };
    Ok((phi0, phi1))
}

/// Multiplies each coefficient by φ(t;λ) of its eigenvalue, for every time.
/// Wave-type accepts initial velocity coefficients `w1`.
pub fn evolve_linear(
    eigs: &[f64],
    kind: &PropagatorKind,
    w0: &[Complex64],
    w1: Option<&[Complex64]>,
    times: &[f64],
) -> Result<Vec<Vec<Complex64>>> {
    if w0.len() != eigs.len() {
        return Err(Error::IndexMismatch(format!("{} coefficients for {} modes", w0.len(), eigs.len())));
    }
    if let Some(w1) = w1 {
        if !matches!(kind, PropagatorKind::WaveType { .. }) {
            return Err(param("initial velocity is only meaningful for wave-type equations"));
        }
        if w1.len() != eigs.len() {
            return Err(Error::IndexMismatch(format!("{} velocity coefficients for {} modes", w1.len(), eigs.len())));
        }
    }
    let (phi0, phi1) = propagator_matrices(kind, eigs, times)?;
    Ok(phi0
        .iter()
        .enumerate()
        .map(|(j, row)| {
            row.iter()
                .zip(w0)
                .enumerate()
                .map(|(m, (p, c))| {
                    let base = p * c;
                    match (w1, &phi1) {
                        (Some(w1), Some(p1)) => base + p1[j][m] * w1[m],
                        _ => base,
                    }
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn heat_at_zero_is_identity() {
        for lam in [0.0, 1.0, 1e4] {
            assert_eq!(propagator_value(&PropagatorKind::Heat, 0.0, lam).unwrap(), c(1.0));
        }
    }

    #[test]
    fn variable_coefficient_one_is_heat() {
        let alpha = SampledSignal::from_fn(0.0, 3.0, 0.01, |_| 1.0).unwrap();
        let kind = PropagatorKind::VariableCoeff { alpha };
        for (t, lam) in [(0.5, 1.0), (2.0, 3.0), (3.0, 0.1)] {
            let a = propagator_value(&kind, t, lam).unwrap();
            let b = propagator_value(&PropagatorKind::Heat, t, lam).unwrap();
            assert!((a - b).norm() < 1e-12);
        }
        assert!(propagator_value(&kind, 3.5, 1.0).is_err());
    }

    #[test]
    fn heat_type_value() {
        let v = propagator_value(&PropagatorKind::HeatType { beta: 0.5 }, 1.0, 1.0).unwrap();
        assert!((v.re - 0.427_583_576_155_807).abs() < 1e-10);
    }

    #[test]
    fn parameter_ranges() {
        assert!(PropagatorKind::HeatType { beta: 1.0 }.validate().is_err());
        assert!(PropagatorKind::WaveType { beta: 0.9 }.validate().is_err());
        assert!(PropagatorKind::SchrodingerType { beta: 1.2 }.validate().is_err());
        assert!(propagator_value(&PropagatorKind::Heat, -1.0, 1.0).is_err());
        assert!(propagator_value(&PropagatorKind::Heat, 1.0, -1.0).is_err());
    }

    #[test]
    fn resolvent_family_matches_closed_form() {
        // A general power-law kernel reproduces the heat-type propagator.
        let kind = PropagatorKind::GeneralKernel(Kernel::power_law(0.6).unwrap());
        let a = propagator_value(&kind, 2.0, 1.5).unwrap();
        let b = propagator_value(&PropagatorKind::HeatType { beta: 0.6 }, 2.0, 1.5).unwrap();
        assert!((a - b).norm() < 1e-5, "{a} vs {b}");
    }

    #[test]
    fn evolve_zero_modes_and_single_mode() {
        let eigs = [0.0, 0.0, 4.0];
        let w0 = [c(1.0), c(-2.0), c(3.0)];
        let out = evolve_linear(&eigs, &PropagatorKind::Heat, &w0, None, &[0.0, 0.5]).unwrap();
        assert_eq!(out[1][0], c(1.0));
        assert_eq!(out[1][1], c(-2.0));
        assert!((out[1][2] - c(3.0 * (-2.0f64).exp())).norm() < 1e-14);
        assert!(matches!(
            evolve_linear(&eigs, &PropagatorKind::Heat, &w0[..2], None, &[0.0]),
            Err(Error::IndexMismatch(_))
        ));
    }

    #[test]
    fn wave_velocity_propagator() {
        let kind = PropagatorKind::WaveType { beta: 1.5 };
        let out = evolve_linear(&[2.0], &kind, &[c(0.0)], Some(&[c(1.0)]), &[0.7]).unwrap();
        let expected = 0.7 * mittag_leffler_real(MLParams::new(1.5, 2.0).unwrap(), -2.0 * 0.7f64.powf(1.5)).unwrap();
        assert!((out[0][0].re - expected).abs() < 1e-12);
        assert!(evolve_linear(&[2.0], &PropagatorKind::Heat, &[c(0.0)], Some(&[c(1.0)]), &[0.7]).is_err());
    }
}
