//! Admissible triples (r, q, p) for time-space estimates, region scans over
//! (1/q, 1/r) and the subcritical-exponent construction.

use std::fmt::{self, Write as _};

use crate::error::{param, Error, Result};

/// Relative slack used to keep strict inequalities strict under rounding.
const STRICT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TripleKind {
    Heat,
    /// β ∈ (0, 1)
    HeatType { beta: f64 },
    /// β ∈ (1, 2)
    WaveType { beta: f64 },
}

impl TripleKind {
    /// Multiplier of λ in the admissibility inequality.
    fn order(&self) -> f64 {
        match self {
            TripleKind::Heat => 1.0,
            TripleKind::HeatType { beta } | TripleKind::WaveType { beta } => *beta,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            TripleKind::Heat => Ok(()),
            TripleKind::HeatType { beta } if beta > 0.0 && beta < 1.0 => Ok(()),
            TripleKind::WaveType { beta } if beta > 1.0 && beta < 2.0 => Ok(()),
            other => Err(param(format!("order out of range for {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripleSpec {
    pub r: f64,
    pub q: f64,
    pub p: f64,
    pub kind: TripleKind,
}

/// Why a triple is not admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    /// 1 < p ≤ 2 ≤ q < ∞ fails.
    Exponents,
    /// r outside [1, ∞), or [1, 2) for wave-type.
    TimeExponent,
    /// The order parameter is out of range.
    Order,
    /// λ ≤ 0
    TraceExponent,
    /// The decay inequality fails.
    Decay,
    /// The second wave-type inequality fails.
    WaveGrowth,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::Exponents => "need 1 < p <= 2 <= q < inf",
            Rejection::TimeExponent => "time exponent out of range",
            Rejection::Order => "order out of range",
            Rejection::TraceExponent => "trace exponent must be positive",
            Rejection::Decay => "decay inequality is not strict",
            Rejection::WaveGrowth => "wave growth inequality is not strict",
        })
    }
}

fn lt(a: f64, b: f64) -> bool {
    a < b - STRICT * b.abs().max(1.0)
}

/// Ok(()) if admissible for λ, otherwise the first failing condition.
pub fn check_admissible(t: &TripleSpec, lambda: f64) -> std::result::Result<(), Rejection> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Rejection::TraceExponent);
    }
    t.kind.validate().map_err(|_| Rejection::Order)?;
    if !(t.p > 1.0 && t.p <= 2.0 && t.q >= 2.0 && t.q.is_finite()) {
        return Err(Rejection::Exponents);
    }
    let r_max = if matches!(t.kind, TripleKind::WaveType { .. }) { 2.0 } else { f64::INFINITY };
    if !(t.r >= 1.0 && t.r < r_max) {
        return Err(Rejection::TimeExponent);
    }
    let gain = t.kind.order() * lambda * (1.0 / t.p - 1.0 / t.q);
    let inv_r = 1.0 / t.r;
    if !lt(gain, inv_r) {
        return Err(Rejection::Decay);
    }
    if matches!(t.kind, TripleKind::WaveType { .. }) && !lt(1.0 - gain, inv_r) {
        return Err(Rejection::WaveGrowth);
    }
    Ok(())
}

pub fn is_admissible(t: &TripleSpec, lambda: f64) -> bool {
    check_admissible(t, lambda).is_ok()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionSample {
    /// Every scanned (1/q, 1/r) with its verdict.
    pub grid: Vec<(f64, f64, bool)>,
    pub empty: bool,
}

impl RegionSample {
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.iter().filter(|g| g.2).map(|g| (g.0, g.1))
    }

    /// CSV with columns `inv_q,inv_r,admissible`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("inv_q,inv_r,admissible\n");
        for (x, y, ok) in &self.grid {
            let _ = writeln!(s, "{x},{y},{}", u8::from(*ok));
        }
        s
    }
}

/// Threshold λ* = 2p0/(2−p0) at or above which heat and heat-type regions
/// with data exponent p0 < 2 are empty (in terms of βλ for heat-type).
pub fn emptiness_threshold(p0: f64) -> Option<f64> {
    (p0 < 2.0).then(|| 2.0 * p0 / (2.0 - p0))
}

/// Scans (1/q, 1/r) ∈ (0, 1/2] × (0, 1] on a `resolution`² grid with p = p0.
/// For heat and heat-type with p0 < 2 the scan must agree with the analytic
/// threshold; a disagreement is reported as a Precondition error.
pub fn region_sample(p0: f64, lambda: f64, kind: TripleKind, resolution: usize) -> Result<RegionSample> {
    if !(p0 > 1.0 && p0 <= 2.0) {
        return Err(Error::Exponent(format!("need 1 < p0 <= 2, got {p0}")));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(param(format!("trace exponent must be positive, got {lambda}")));
    }
    kind.validate()?;
    if resolution < 2 {
        return Err(param("region resolution must be at least 2"));
    }
    let grid: Vec<(f64, f64, bool)> = (1..=resolution)
        .flat_map(|i| (1..=resolution).map(move |j| (0.5 * i as f64 / resolution as f64, j as f64 / resolution as f64)))
        .map(|(iq, ir)| (iq, ir, is_admissible(&TripleSpec { r: 1.0 / ir, q: 1.0 / iq, p: p0, kind }, lambda)))
        .collect();
    let empty = !grid.iter().any(|g| g.2);
    if !matches!(kind, TripleKind::WaveType { .. }) {
        if let Some(star) = emptiness_threshold(p0) {
            let analytic = kind.order() * lambda >= star;
            // Points just inside the threshold may be finer than the scan.
            if analytic && !empty {
                return Err(Error::Precondition(format!(
                    "scan found admissible points beyond the threshold {star} at p0 = {p0}"
                )));
            }
        }
    }
    Ok(RegionSample { grid, empty })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubcriticalTriple {
    pub rho: f64,
    pub r: f64,
    pub q: f64,
}

/// ρ at the midpoint of its admissible interval, r = ηρ, q = ηp0, for
/// 1 < η < 1 + p0/λ. ρ ≤ r always holds since η > 1.
pub fn subcritical_construct(p0: f64, lambda: f64, eta: f64, kind: TripleKind) -> Result<SubcriticalTriple> {
    if !(p0 > 1.0 && p0 <= 2.0) {
        return Err(Error::Exponent(format!("need 1 < p0 <= 2, got {p0}")));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(param(format!("trace exponent must be positive, got {lambda}")));
    }
    let beta = match kind {
        TripleKind::Heat => 1.0,
        TripleKind::HeatType { beta } => {
            kind.validate()?;
            beta
        }
        TripleKind::WaveType { .. } => return Err(param("the subcritical construction covers heat and heat-type only")),
    };
    if !(eta > 1.0) {
        return Err(param(format!("nonlinearity power must exceed 1, got {eta}")));
    }
    if eta >= 1.0 + p0 / lambda {
        return Err(Error::Supercritical(format!("eta = {eta} >= 1 + p0/lambda = {}", 1.0 + p0 / lambda)));
    }
    if let Some(star) = emptiness_threshold(p0) {
        if lambda >= star {
            return Err(Error::EmptyInterval(format!("p0 = {p0} < 2 needs lambda < {star}, got {lambda}")));
        }
    }
    if eta * p0 < 2.0 {
        return Err(Error::Exponent(format!("q = eta*p0 = {} is below 2", eta * p0)));
    }
    let (lo, hi) = (1.0 / beta, p0 / (beta * lambda * (eta - 1.0)));
    if !(lo < hi) {
        return Err(Error::EmptyInterval(format!("rho interval [{lo}, {hi}) is empty")));
    }
    let rho = 0.5 * (lo + hi);
    let out = SubcriticalTriple { rho, r: eta * rho, q: eta * p0 };
    let spec = TripleSpec { r: out.r, q: out.q, p: p0, kind };
    check_admissible(&spec, lambda)
        .map_err(|why| Error::EmptyInterval(format!("constructed triple {out:?} is not admissible: {why}")))?;
    Ok(out)
}
