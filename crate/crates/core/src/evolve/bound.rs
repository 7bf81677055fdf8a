//! The decay-bound function B(t) = sup_{v>0} N(v)^{1/p−1/q} ψ(t;v) and
//! measured L^p → L^q decay of evolved fields.

use std::fmt::Write as _;

use super::propagator::{evolve_linear, PropagatorKind};
use super::torus::{analyze, synthesize, FieldOnTorus, TorusCoeffs};
use crate::error::{param, Error, Result};
use crate::kernels::Kernel;
use crate::signal::SampledSignal;
use crate::spectra::{linear_fit, SpectralModel};

/// Points of the coarse log-grid scan over v.
const SCAN_POINTS: usize = 200;
/// Lower end of the scan.
const SCAN_START: f64 = 1e-6;
/// Golden-section iterations in log v.
const GOLDEN_ITERATIONS: usize = 80;
/// Relative slack on the exponent condition 1/λ ≥ 1/p − 1/q.
const EXPONENT_SLACK: f64 = 1e-12;

/// What ψ(t;v) is built from.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundDriver {
    /// ψ = e^{−tv}
    Heat,
    /// ψ = 1/(1 + v∫₀ᵗk)
    Kernel(Kernel),
    /// ψ = exp(−v∫₀ᵗα) for a sampled coefficient α
    Coefficient(SampledSignal),
}

impl BoundDriver {
    /// The driver of a propagator family. Schrödinger-type uses the power-law
    /// kernel of its order, matching |E_β(it^βv)| ≲ 1/(1 + t^βv).
    pub fn for_kind(kind: &PropagatorKind) -> Result<Self> {
        kind.validate()?;
        Ok(match kind {
            PropagatorKind::Heat => BoundDriver::Heat,
            PropagatorKind::VariableCoeff { alpha } => BoundDriver::Coefficient(alpha.clone()),
            PropagatorKind::SchrodingerType { beta } => BoundDriver::Kernel(Kernel::power_law(*beta)?),
            other => BoundDriver::Kernel(other.kernel()?.expect("kernel-driven family")),
        })
    }

    /// ψ(t;·) as a function of v.
    fn profile(&self, t: f64) -> Result<impl Fn(f64) -> f64> {
        let (rate, algebraic) = match self {
            BoundDriver::Heat => (t, false),
            BoundDriver::Kernel(k) => (k.cumulative(t)?, true),
            BoundDriver::Coefficient(alpha) => {
                let v = alpha.values();
                let dt = alpha.dt();
                if t > alpha.t_end() * (1.0 + 1e-12) {
                    return Err(param(format!("time {t} beyond the coefficient samples")));
                }
                let j = ((t / dt).floor() as usize).min(v.len() - 2);
                let full: f64 = v[..=j].windows(2).map(|w| 0.5 * dt * (w[0] + w[1])).sum();
                let frac = t - j as f64 * dt;
                let at = v[j] + (v[j + 1] - v[j]) * frac / dt;
                (full + 0.5 * frac * (v[j] + at), false)
            }
        };
        Ok(move |v: f64| if algebraic { 1.0 / (1.0 + v * rate) } else { (-v * rate).exp() })
    }
}

fn check_exponents(p: f64, q: f64) -> Result<f64> {
    if !(p > 1.0 && p <= 2.0 && q >= 2.0 && q.is_finite()) {
        return Err(Error::Exponent(format!("need 1 < p <= 2 <= q < inf, got p = {p}, q = {q}")));
    }
    Ok(1.0 / p - 1.0 / q)
}

/// B(t) together with the v at which the supremum was found.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub argmax: f64,
}

/// B(t) = sup_{v>0} N(v)^{1/p−1/q} ψ(t;v), searched on a log grid over
/// [1e-6, horizon] and refined by golden section around the best grid point.
pub fn bound_function(m: &SpectralModel, driver: &BoundDriver, p: f64, q: f64, t: f64) -> Result<f64> {
    Ok(bound_search(m, driver, p, q, t)?.value)
}

pub fn bound_search(m: &SpectralModel, driver: &BoundDriver, p: f64, q: f64, t: f64) -> Result<BoundValue> {
    let a = check_exponents(p, q)?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(param(format!("bound needs t > 0, got {t}")));
    }
    let lam = m.nominal_lambda();
    if a > (1.0 / lam) * (1.0 + EXPONENT_SLACK) {
        return Err(Error::UnboundedSup(format!("1/lambda = {} < 1/p - 1/q = {a}", 1.0 / lam)));
    }
    let psi = driver.profile(t)?;
    if a == 0.0 {
        return Ok(BoundValue { value: 1.0, argmax: 0.0 });
    }
    let horizon = m.horizon();
    if horizon <= SCAN_START {
        return Err(param(format!("spectrum horizon {horizon} is below the scan start {SCAN_START}")));
    }
    let g = |x: f64| -> Result<f64> {
        let v = x.exp().min(horizon);
        let n = m.counting_function(v)?;
        Ok(if n == 0.0 { 0.0 } else { n.powf(a) * psi(v) })
    };
    let (x0, x1) = (SCAN_START.ln(), horizon.ln());
    let h = (x1 - x0) / (SCAN_POINTS - 1) as f64;
    let scan = (0..SCAN_POINTS).map(|i| Ok((x0 + i as f64 * h, g(x0 + i as f64 * h)?))).collect::<Result<Vec<_>>>()?;
    let (ibest, &(xbest, gbest)) =
        scan.iter().enumerate().max_by(|a, b| a.1 .1.total_cmp(&b.1 .1)).expect("non-empty scan");
    let mut best = (xbest, gbest);
    let (mut lo, mut hi) = (scan[ibest.saturating_sub(1)].0, scan[(ibest + 1).min(SCAN_POINTS - 1)].0);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - phi * (hi - lo);
    let mut d = lo + phi * (hi - lo);
    let (mut gc, mut gd) = (g(c)?, g(d)?);
    for _ in 0..GOLDEN_ITERATIONS {
        if gc >= gd {
            hi = d;
            d = c;
            gd = gc;
            c = hi - phi * (hi - lo);
            gc = g(c)?;
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + phi * (hi - lo);
            gd = g(d)?;
        }
        for (x, v) in [(c, gc), (d, gd)] {
            if v > best.1 {
                best = (x, v);
            }
        }
    }
    Ok(BoundValue { value: best.1, argmax: best.0.exp().min(horizon) })
}

/// Log-log slope of B over `n` log-spaced times in [t_a, t_b].
pub fn bound_slope(m: &SpectralModel, driver: &BoundDriver, p: f64, q: f64, window: (f64, f64), n: usize) -> Result<f64> {
    let times = log_times(window, n)?;
    let pts = times.iter().map(|&t| Ok((t.ln(), bound_function(m, driver, p, q, t)?.ln()))).collect::<Result<Vec<_>>>()?;
    Ok(linear_fit(&pts).0)
}

/// `n` log-spaced times covering the window.
pub fn log_times(window: (f64, f64), n: usize) -> Result<Vec<f64>> {
    let (ta, tb) = window;
    if !(ta > 0.0 && tb > ta) || !tb.is_finite() {
        return Err(param(format!("window must satisfy 0 < t_a < t_b, got [{ta}, {tb}]")));
    }
    if n < 2 {
        return Err(param("a window needs at least two sample times"));
    }
    let (l0, l1) = (ta.ln(), tb.ln());
    Ok((0..n).map(|i| (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp()).collect())
}

/// One sample of a decay measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayRow {
    pub t: f64,
    pub lq_norm: f64,
    pub bound: f64,
    /// ‖w(t)‖_q / ‖w₀‖_p
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    /// Fitted slope of log ratio against log t.
    pub slope: f64,
    /// Smallest C with ‖w(t)‖_q ≤ C·B(t)·‖w₀‖_p on the samples.
    pub envelope_constant: f64,
    /// 1/λ₁, past which the spectral gap dominates.
    pub gap_time: Option<f64>,
    pub rows: Vec<DecayRow>,
}

impl DecayReport {
    /// CSV with columns `t,Lq_norm,bound_B,ratio`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,Lq_norm,bound_B,ratio\n");
        for r in &self.rows {
            let _ = writeln!(s, "{:e},{:e},{:e},{:e}", r.t, r.lq_norm, r.bound, r.ratio);
        }
        s
    }
}

/// Evolves a mean-zero field on the torus and measures ‖w(t)‖_q/‖w₀‖_p at
/// `n_times` log-spaced times in the window.
pub fn decay_slope(
    m: &SpectralModel,
    kind: &PropagatorKind,
    p: f64,
    q: f64,
    w0: &FieldOnTorus,
    window: (f64, f64),
    n_times: usize,
) -> Result<DecayReport> {
    check_exponents(p, q)?;
    let scale = w0.lp_norm(f64::INFINITY)?;
    if scale == 0.0 {
        return Err(param("initial field is zero"));
    }
    if w0.mean().norm() > 1e-12 * scale {
        return Err(Error::Precondition(format!("initial field must be mean-zero, mean = {}", w0.mean())));
    }
    let times = log_times(window, n_times)?;
    let grid = w0.grid();
    let coeffs = analyze(w0);
    let eigs = grid.eigenvalues();
    let evolved = evolve_linear(&eigs, kind, coeffs.values(), None, &times)?;
    let driver = BoundDriver::for_kind(kind)?;
    let p_norm = w0.lp_norm(p)?;
    let rows = times
        .iter()
        .zip(evolved)
        .map(|(&t, c)| {
            let field = synthesize(m, &TorusCoeffs::new(grid, c)?)?;
            let lq_norm = field.lp_norm(q)?;
            let ratio = lq_norm / p_norm;
            if !(ratio > 1e-280) || !ratio.is_finite() {
                return Err(Error::Window(format!("norm ratio {ratio:e} at t = {t} is not representable")));
            }
            Ok(DecayRow { t, lq_norm, bound: bound_function(m, &driver, p, q, t)?, ratio })
        })
        .collect::<Result<Vec<_>>>()?;
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.t.ln(), r.ratio.ln())).collect();
    let slope = linear_fit(&pts).0;
    let envelope_constant = rows.iter().map(|r| r.ratio / r.bound).fold(0.0, f64::max);
    Ok(DecayReport { slope, envelope_constant, gap_time: m.first_positive().map(|l| 1.0 / l), rows })
}
