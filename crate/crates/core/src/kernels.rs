//! Scalar memory kernels k ∈ L¹_loc(ℝ₊), their cumulative integrals, and
//! Sonine partners 𝒦 with (𝒦∗k)(t) = 1.

use std::cell::RefCell;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{param, Error, Result};
use crate::quadrature::{gauss_legendre, tanh_sinh, GaussRule};
use crate::signal::SampledSignal;
use crate::specfun::{multinomial_ml, rgamma, MultiMLParams};

/// How a tabulated kernel is read between samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interp {
    /// Piecewise linear through the samples, constant before the first one.
    Linear,
    /// Sample j holds on [t_j − dt/2, t_j + dt/2).
    Step,
}

#[derive(Debug, Clone, PartialEq)]
pub enum KernelKind {
    /// k(t) = c
    Constant { c: f64 },
    /// k(t) = t^{β−1}/Γ(β)
    PowerLaw { beta: f64 },
    /// k(t) = t^{−β}/Γ(1−β)
    CaputoDual { beta: f64 },
    /// k(t) = 1 + γ t^{−β}/Γ(1−β)
    RayleighStokes { beta: f64, gamma: f64 },
    /// k(t) = t^{β−1} E_{(β−β_1,…,β−β_m),β}(−σ_1 t^{β−β_1}, …, −σ_m t^{β−β_m})
    MultiTerm { beta: f64, beta_i: Vec<f64>, sigma_i: Vec<f64> },
    Tabulated { signal: SampledSignal, interp: Interp },
}

/// A kernel together with its completely-positive flag.
///
/// The flag is asserted by construction for the analytic kinds and checked
/// on the samples (nonnegative, nonincreasing) for tabulated ones.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    kind: KernelKind,
    cp: bool,
    pieces: Option<Pieces>,
}

/// Piecewise-linear representation of a tabulated kernel with running
/// first and second integrals at the piece starts.
#[derive(Debug, Clone, PartialEq)]
struct Pieces {
    starts: Vec<f64>,
    a: Vec<f64>,
    b: Vec<f64>,
    c1: Vec<f64>,
    c2: Vec<f64>,
    end: f64,
}

impl Pieces {
    fn build(signal: &SampledSignal, interp: Interp) -> Self {
        let v = signal.values();
        let dt = signal.dt();
        let n = v.len();
        let mut starts = Vec::with_capacity(n + 1);
        let mut a = Vec::with_capacity(n + 1);
        let mut b = Vec::with_capacity(n + 1);
        let end = match interp {
            Interp::Linear => {
                let t0 = signal.t0();
                if t0 > 0.0 {
                    starts.push(0.0);
                    a.push(v[0]);
                    b.push(0.0);
                }
                for j in 0..n - 1 {
                    starts.push(signal.time(j));
                    a.push(v[j]);
                    b.push((v[j + 1] - v[j]) / dt);
                }
                signal.t_end()
            }
            Interp::Step => {
                let first = signal.t0() - 0.5 * dt;
                if first > 0.0 {
                    starts.push(0.0);
                    a.push(v[0]);
                    b.push(0.0);
                }
                for (j, &vj) in v.iter().enumerate() {
                    starts.push((signal.time(j) - 0.5 * dt).max(0.0));
                    a.push(vj);
                    b.push(0.0);
                }
                signal.t_end() + 0.5 * dt
            }
        };
        let mut c1 = vec![0.0; starts.len()];
        let mut c2 = vec![0.0; starts.len()];
        for i in 1..starts.len() {
            let u = starts[i] - starts[i - 1];
            c1[i] = c1[i - 1] + a[i - 1] * u + b[i - 1] * u * u / 2.0;
            c2[i] = c2[i - 1] + c1[i - 1] * u + a[i - 1] * u * u / 2.0 + b[i - 1] * u * u * u / 6.0;
        }
        Pieces { starts, a, b, c1, c2, end }
    }

    fn locate(&self, t: f64) -> Result<(usize, f64)> {
        if t > self.end * (1.0 + 1e-12) {
            return Err(param(format!("t = {t} beyond the tabulated range (ends at {})", self.end)));
        }
        let i = self.starts.partition_point(|&s| s <= t).saturating_sub(1);
        Ok((i, t - self.starts[i]))
    }

    fn value(&self, t: f64) -> Result<f64> {
        let (i, u) = self.locate(t)?;
        Ok(self.piece_value(i, u))
    }

    /// Value on piece i at offset u from its start, without a lookup.
    fn piece_value(&self, i: usize, u: f64) -> f64 {
        self.a[i] + self.b[i] * u
    }

    fn k1(&self, t: f64) -> Result<f64> {
        let (i, u) = self.locate(t)?;
        Ok(self.c1[i] + self.a[i] * u + self.b[i] * u * u / 2.0)
    }

    fn k2(&self, t: f64) -> Result<f64> {
        let (i, u) = self.locate(t)?;
        Ok(self.c2[i] + self.c1[i] * u + self.a[i] * u * u / 2.0 + self.b[i] * u * u * u / 6.0)
    }
}

fn check_order(name: &str, beta: f64, lo_open: f64, hi: f64, hi_inclusive: bool) -> Result<()> {
    let ok = beta > lo_open && (beta < hi || (hi_inclusive && beta == hi)) && beta.is_finite();
    if ok {
        Ok(())
    } else {
        Err(param(format!("{name}: order {beta} out of range")))
    }
}

impl Kernel {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(param(format!("constant kernel needs c > 0, got {c}")));
        }
        Ok(Self::analytic(KernelKind::Constant { c }, true))
    }

    /// t^{β−1}/Γ(β); completely positive for 0 < β ≤ 1.
    pub fn power_law(beta: f64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(Error::Divergence(format!("t^(beta-1) with beta = {beta}")));
        }
        check_order("power-law kernel", beta, 0.0, f64::INFINITY, false)?;
        Ok(Self::analytic(KernelKind::PowerLaw { beta }, beta <= 1.0))
    }

    /// t^{−β}/Γ(1−β), 0 < β < 1.
    pub fn caputo_dual(beta: f64) -> Result<Self> {
        if beta >= 1.0 {
            return Err(Error::Divergence(format!("t^(-beta) with beta = {beta}")));
        }
        check_order("Caputo dual kernel", beta, 0.0, 1.0, false)?;
        Ok(Self::analytic(KernelKind::CaputoDual { beta }, true))
    }

    /// 1 + γ t^{−β}/Γ(1−β), 0 < β < 1, γ > 0.
    pub fn rayleigh_stokes(beta: f64, gamma: f64) -> Result<Self> {
        check_order("Rayleigh-Stokes kernel", beta, 0.0, 1.0, false)?;
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(param(format!("Rayleigh-Stokes kernel needs gamma > 0, got {gamma}")));
        }
        Ok(Self::analytic(KernelKind::RayleighStokes { beta, gamma }, true))
    }

    /// Multi-term kernel with 0 < β_m < … < β_1 < β ≤ 1 and σ_i > 0.
    pub fn multi_term(beta: f64, beta_i: Vec<f64>, sigma_i: Vec<f64>) -> Result<Self> {
        check_order("multi-term kernel", beta, 0.0, 1.0, true)?;
        if beta_i.is_empty() || beta_i.len() != sigma_i.len() {
            return Err(Error::Dimension(format!(
                "multi-term kernel needs matching nonempty beta_i/sigma_i, got {} and {}",
                beta_i.len(),
                sigma_i.len()
            )));
        }
        let mut prev = beta;
        for &b in &beta_i {
            if !(b > 0.0 && b < prev) {
                return Err(param(format!("multi-term orders must satisfy 0 < beta_m < ... < beta_1 < beta, got {beta_i:?}")));
            }
            prev = b;
        }
        if let Some(s) = sigma_i.iter().find(|s| !(**s > 0.0) || !s.is_finite()) {
            return Err(param(format!("multi-term weights must be > 0, got {s}")));
        }
        Ok(Self::analytic(KernelKind::MultiTerm { beta, beta_i, sigma_i }, true))
    }

    pub fn tabulated(signal: SampledSignal, interp: Interp) -> Result<Self> {
        if signal.t0() < 0.0 {
            return Err(param("tabulated kernel must start at t >= 0"));
        }
        let v = signal.values();
        let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let nonneg = v.iter().all(|&x| x >= -1e-12 * scale);
        let nonincreasing = v.windows(2).all(|w| w[1] <= w[0] + 1e-12 * scale);
        let pieces = Pieces::build(&signal, interp);
        Ok(Kernel { kind: KernelKind::Tabulated { signal, interp }, cp: nonneg && nonincreasing, pieces: Some(pieces) })
    }

    /// Reads a two-column `t,k` file with uniformly spaced, strictly increasing t.
    pub fn from_file(path: &Path, interp: Interp) -> Result<Self> {
        let rows = crate::table::read_two_columns(path, ("t", "k"))?;
        let p = path.display().to_string();
        let (t, k): (Vec<f64>, Vec<f64>) = rows.iter().map(|&(_, a, b)| (a, b)).unzip();
        if t.len() < 2 {
            return Err(Error::Parse { path: p, line: 1, message: "need at least two rows".into() });
        }
        let dt = t[1] - t[0];
        for (i, w) in t.windows(2).enumerate() {
            let line = rows[i + 1].0;
            if !(w[1] > w[0]) {
                return Err(Error::Parse { path: p, line, message: "t must be strictly increasing".into() });
            }
            if ((w[1] - w[0]) - dt).abs() > 1e-9 * dt.max(w[1].abs()) {
                return Err(Error::Parse { path: p, line, message: "t must be uniformly spaced".into() });
            }
        }
        Self::tabulated(SampledSignal::new(t[0], dt, k)?, interp)
    }

    fn analytic(kind: KernelKind, cp: bool) -> Self {
        Kernel { kind, cp, pieces: None }
    }

    pub fn kind(&self) -> &KernelKind {
        &self.kind
    }

    /// Asserted (or, for tabulated kernels, sample-checked) complete positivity.
    pub fn is_completely_positive(&self) -> bool {
        self.cp
    }

    /// k(0⁺) = +∞.
    pub fn is_singular_at_origin(&self) -> bool {
        match &self.kind {
            KernelKind::Constant { .. } | KernelKind::Tabulated { .. } => false,
            KernelKind::PowerLaw { beta } => *beta < 1.0,
            KernelKind::CaputoDual { .. } | KernelKind::RayleighStokes { .. } => true,
            KernelKind::MultiTerm { beta, .. } => *beta < 1.0,
        }
    }

    /// ν with k(t) ~ c·t^{ν−1} as t → 0⁺, for kernels singular at the origin.
    pub fn origin_exponent(&self) -> Option<f64> {
        match &self.kind {
            KernelKind::PowerLaw { beta } if *beta < 1.0 => Some(*beta),
            KernelKind::CaputoDual { beta } | KernelKind::RayleighStokes { beta, .. } => Some(1.0 - beta),
            KernelKind::MultiTerm { beta, .. } if *beta < 1.0 => Some(*beta),
            _ => None,
        }
    }

    fn multi_args(t: f64, beta: f64, beta_i: &[f64], sigma_i: &[f64]) -> Vec<Complex64> {
        beta_i.iter().zip(sigma_i).map(|(b, s)| Complex64::new(-s * t.powf(beta - b), 0.0)).collect()
    }

    /// Multi-term series t^{β+shift−1} E_{(β−β_i), β+shift}(…).
    fn multi_value(t: f64, beta: f64, beta_i: &[f64], sigma_i: &[f64], shift: f64) -> Result<f64> {
        let p = MultiMLParams::new(beta_i.iter().map(|b| beta - b).collect(), beta + shift)?;
        let e = multinomial_ml(&p, &Self::multi_args(t, beta, beta_i, sigma_i))?;
        Ok(t.powf(beta + shift - 1.0) * e.re)
    }

    /// Pointwise value k(t).
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(param(format!("kernel evaluated at invalid t = {t}")));
        }
        if t == 0.0 && self.is_singular_at_origin() {
            return Err(Error::Singularity(0.0));
        }
        Ok(match &self.kind {
            KernelKind::Constant { c } => *c,
            KernelKind::PowerLaw { beta } => {
                if t == 0.0 {
                    if *beta == 1.0 {
                        1.0
                    } else {
                        0.0
                    }
                } else {
                    t.powf(beta - 1.0) * rgamma(*beta)
                }
            }
            KernelKind::CaputoDual { beta } => t.powf(-beta) * rgamma(1.0 - beta),
            KernelKind::RayleighStokes { beta, gamma } => 1.0 + gamma * t.powf(-beta) * rgamma(1.0 - beta),
            KernelKind::MultiTerm { beta, beta_i, sigma_i } => {
                if t == 0.0 {
                    // β = 1: k(0) = 1/Γ(1)
                    1.0
                } else {
                    Self::multi_value(t, *beta, beta_i, sigma_i, 0.0)?
                }
            }
            KernelKind::Tabulated { .. } => self.pieces.as_ref().expect("tabulated pieces").value(t)?,
        })
    }

    /// ∫₀ᵗ k(τ) dτ.
    pub fn cumulative(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(param(format!("cumulative integral at invalid t = {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(match &self.kind {
            KernelKind::Constant { c } => c * t,
            KernelKind::PowerLaw { beta } => t.powf(*beta) * rgamma(beta + 1.0),
            KernelKind::CaputoDual { beta } => t.powf(1.0 - beta) * rgamma(2.0 - beta),
            KernelKind::RayleighStokes { beta, gamma } => t + gamma * t.powf(1.0 - beta) * rgamma(2.0 - beta),
            KernelKind::MultiTerm { beta, beta_i, sigma_i } => Self::multi_value(t, *beta, beta_i, sigma_i, 1.0)?,
            KernelKind::Tabulated { .. } => self.pieces.as_ref().expect("tabulated pieces").k1(t)?,
        })
    }

    /// ∫₀ᵗ ∫₀^τ k(σ) dσ dτ.
    pub fn second_cumulative(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(param(format!("second cumulative integral at invalid t = {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(match &self.kind {
            KernelKind::Constant { c } => c * t * t / 2.0,
            KernelKind::PowerLaw { beta } => t.powf(beta + 1.0) * rgamma(beta + 2.0),
            KernelKind::CaputoDual { beta } => t.powf(2.0 - beta) * rgamma(3.0 - beta),
            KernelKind::RayleighStokes { beta, gamma } => t * t / 2.0 + gamma * t.powf(2.0 - beta) * rgamma(3.0 - beta),
            KernelKind::MultiTerm { beta, beta_i, sigma_i } => Self::multi_value(t, *beta, beta_i, sigma_i, 2.0)?,
            KernelKind::Tabulated { .. } => self.pieces.as_ref().expect("tabulated pieces").k2(t)?,
        })
    }

    /// Closed-form Sonine partner, when the catalog has one.
    pub fn sonine_partner(&self) -> Option<Kernel> {
        match self.kind {
            KernelKind::PowerLaw { beta } if beta < 1.0 => Kernel::caputo_dual(beta).ok(),
            KernelKind::CaputoDual { beta } => Kernel::power_law(beta).ok(),
            _ => None,
        }
    }

    /// Largest t at which the kernel can be evaluated.
    pub fn horizon(&self) -> f64 {
        self.pieces.as_ref().map_or(f64::INFINITY, |p| p.end)
    }

    /// Breakpoints of a tabulated kernel on [0, horizon] (empty for analytic kinds).
    fn breakpoints(&self) -> Vec<f64> {
        self.pieces.as_ref().map_or_else(Vec::new, |p| {
            let mut v = p.starts.clone();
            v.push(p.end);
            v
        })
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            KernelKind::Constant { c } => write!(f, "const:{c}"),
            KernelKind::PowerLaw { beta } => write!(f, "power:{beta}"),
            KernelKind::CaputoDual { beta } => write!(f, "caputo-dual:{beta}"),
            KernelKind::RayleighStokes { beta, gamma } => write!(f, "rs:{beta},{gamma}"),
            KernelKind::MultiTerm { beta, beta_i, sigma_i } => {
                let join = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "multi:{beta};{};{}", join(beta_i), join(sigma_i))
            }
            KernelKind::Tabulated { signal, interp } => {
                write!(f, "tabulated[{} samples, dt={}, {:?}]", signal.len(), signal.dt(), interp)
            }
        }
    }
}

pub(crate) fn parse_list(text: &str, what: &str) -> Result<Vec<f64>> {
    text.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<f64>().map_err(|_| param(format!("bad number `{x}` in {what}"))))
        .collect()
}

/// Parses the forms printed by `Display`: `const:c`, `power:β`,
/// `caputo-dual:β`, `rs:β,γ`, `multi:β;β₁,…;σ₁,…`, plus `file:path` for a
/// tabulated `t,k` file read with linear interpolation.
impl FromStr for Kernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = s.split_once(':').ok_or_else(|| param(format!("kernel `{s}` lacks a `kind:` prefix")))?;
        let nums = |n: usize| -> Result<Vec<f64>> {
            let v = parse_list(rest, "kernel parameters")?;
            if v.len() != n {
                return Err(param(format!("kernel `{head}` takes {n} parameter(s), got {}", v.len())));
            }
            Ok(v)
        };
        match head.trim() {
            "const" => Kernel::constant(nums(1)?[0]),
            "power" => Kernel::power_law(nums(1)?[0]),
            "caputo-dual" => Kernel::caputo_dual(nums(1)?[0]),
            "rs" => {
                let v = nums(2)?;
                Kernel::rayleigh_stokes(v[0], v[1])
            }
            "multi" => {
                let parts: Vec<&str> = rest.split(';').collect();
                if parts.len() != 3 {
                    return Err(param("multi-term kernel is written multi:beta;beta_1,...;sigma_1,..."));
                }
                let beta = parse_list(parts[0], "multi-term order")?;
                if beta.len() != 1 {
                    return Err(param("multi-term kernel takes one leading order"));
                }
                Kernel::multi_term(beta[0], parse_list(parts[1], "orders")?, parse_list(parts[2], "weights")?)
            }
            "file" => Kernel::from_file(Path::new(rest.trim()), Interp::Linear),
            other => Err(param(format!("unknown kernel kind `{other}`"))),
        }
    }
}

/// Free-function form of [`Kernel::eval`].
pub fn kernel_eval(k: &Kernel, t: f64) -> Result<f64> {
    k.eval(t)
}

/// Free-function form of [`Kernel::cumulative`].
pub fn cumulative_integral(k: &Kernel, t: f64) -> Result<f64> {
    k.cumulative(t)
}

/// Solves the first-kind equation (𝒦∗k)(t) = 1 on (0, T] for a piecewise
/// constant 𝒦.
///
/// The unknown value c_j on [j·dt, (j+1)·dt) is found by forward substitution
/// from the collocation conditions at t_n = n·dt, using the exact cell
/// moments K1((m+1)dt) − K1(m·dt) of k. The result is returned with
/// t0 = dt/2 (cell midpoints) and is meant to be read back with
/// [`Interp::Step`].
pub fn sonine_solve(k: &Kernel, t_max: f64, dt: f64) -> Result<SampledSignal> {
    if !(t_max > 0.0 && dt > 0.0 && dt < t_max) {
        return Err(param(format!("invalid Sonine grid T = {t_max}, dt = {dt}")));
    }
    if !matches!(k.kind, KernelKind::Tabulated { .. }) && !k.is_singular_at_origin() {
        return Err(Error::IllPosed(format!(
            "{k} is bounded at the origin, so its Sonine partner is not a locally integrable function"
        )));
    }
    let n = (t_max / dt).round() as usize;
    let k1: Vec<f64> = (0..=n).map(|m| k.cumulative(m as f64 * dt)).collect::<Result<_>>()?;
    let w: Vec<f64> = k1.windows(2).map(|p| p[1] - p[0]).collect();
    if !(w[0].abs() > f64::MIN_POSITIVE * 1e4) || !w[0].is_finite() {
        return Err(Error::IllPosed(format!("leading quadrature weight {} underflows", w[0])));
    }
    let mut c = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = 1.0;
        for j in 0..i {
            acc -= c[j] * w[i - j];
        }
        c.push(acc / w[0]);
    }
    SampledSignal::new(0.5 * dt, dt, c)
}

/// A kernel and a candidate Sonine partner.
#[derive(Debug, Clone)]
pub struct SoninePair {
    pub k: Kernel,
    pub partner: Kernel,
    /// max |(𝒦∗k)(t) − 1| from the last verification, if any.
    pub verified_to: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SonineReport {
    pub max_deviation: f64,
    pub pass: bool,
}

impl SoninePair {
    pub fn new(k: Kernel, partner: Kernel) -> Self {
        SoninePair { k, partner, verified_to: None }
    }
}

/// (a ∗ b)(t) = ∫₀ᵗ a(s) b(t−s) ds evaluated independently of the
/// cumulative-integral route used by [`sonine_solve`].
///
/// If one factor is tabulated, its pieces are integrated one by one against
/// the other factor (Gauss–Legendre away from the other factor's
/// singularity, tanh-sinh on the piece that touches it). Two analytic
/// factors are integrated with tanh-sinh over [0, t].
fn convolve_at(a: &Kernel, b: &Kernel, t: f64) -> Result<f64> {
    let (tab, other) = match (&a.kind, &b.kind) {
        (KernelKind::Tabulated { .. }, _) => (a, b),
        (_, KernelKind::Tabulated { .. }) => (b, a),
        _ => {
            let err = RefCell::new(None);
            let v = tanh_sinh(
                |_, s, r| match (a.eval(s), b.eval(r)) {
                    (Ok(x), Ok(y)) => x * y,
                    (Err(e), _) | (_, Err(e)) => {
                        err.borrow_mut().get_or_insert(e);
                        0.0
                    }
                },
                0.0,
                t,
                1e-11,
            )?;
            return match err.into_inner() {
                Some(e) if !matches!(e, Error::Singularity(_)) => Err(e),
                _ => Ok(v),
            };
        }
    };
    let pieces = tab.pieces.as_ref().expect("tabulated pieces");
    let bp = tab.breakpoints();
    let mut acc = 0.0;
    for (i, w) in bp.windows(2).enumerate() {
        let (lo, hi) = (w[0], w[1].min(t));
        if hi <= lo {
            break;
        }
        if t - hi < 1e-14 * t.max(1.0) {
            // The piece ends at s = t, where the other factor may be singular.
            // The piece is evaluated by index: near s = t the abscissa rounds
            // onto the next breakpoint.
            let err = RefCell::new(None);
            let v = tanh_sinh(
                |_, u, r| match other.eval(r) {
                    Ok(y) => pieces.piece_value(i, u) * y,
                    Err(e) => {
                        err.borrow_mut().get_or_insert(e);
                        0.0
                    }
                },
                lo,
                hi,
                1e-12,
            )?;
            if let Some(e) = err.into_inner() {
                if !matches!(e, Error::Singularity(_)) {
                    return Err(e);
                }
            }
            acc += v;
        } else {
            acc += gauss_legendre(GaussRule::Eight, |s| Ok(tab.eval(s)? * other.eval(t - s)?), lo, hi)?;
        }
    }
    Ok(acc)
}

/// Computes (𝒦∗k)(t_n) at t_n = n·dt ≤ T and compares with 1.
pub fn sonine_verify(pair: &mut SoninePair, t_max: f64, dt: f64, tol: f64) -> Result<SonineReport> {
    if !(t_max > 0.0 && dt > 0.0 && dt <= t_max) {
        return Err(param(format!("invalid verification grid T = {t_max}, dt = {dt}")));
    }
    use rayon::prelude::*;
    let n = (t_max / dt).round() as usize;
    let devs: Vec<f64> = (1..=n)
        .into_par_iter()
        .map(|i| convolve_at(&pair.partner, &pair.k, i as f64 * dt).map(|v| (v - 1.0).abs()))
        .collect::<Result<_>>()?;
    let max_deviation = devs.into_iter().fold(0.0, f64::max);
    pair.verified_to = Some(max_deviation);
    Ok(SonineReport { max_deviation, pass: max_deviation < tol })
}
