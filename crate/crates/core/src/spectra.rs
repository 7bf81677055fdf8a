//! Spectral surrogates for positive left-invariant operators: eigenvalue
//! streams with counting functions N(s), the operator → trace-exponent
//! catalog and a least-squares exponent fitter.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{param, Error, Result};
use crate::table::read_two_columns;

/// Enumerated modes (with multiplicity) when no truncation is given.
pub const DEFAULT_TRUNCATION: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumKind {
    /// Laplacian on T^n = ℝ^n/(2πℤ)^n: eigenvalues |k|², k ∈ ℤ^n.
    TorusLaplacian { n: usize },
    /// Eigenvalues j^{1/λ}, j ≥ 1, each simple.
    PrescribedExponent { lambda: f64 },
    /// Eigenvalues ρ^{μj}, j ≥ 1, with multiplicity (ρ−1)ρ^{j−1}.
    Geometric { rho: u32, mu: f64 },
    /// User-supplied (eigenvalue, multiplicity) list.
    Explicit,
}

#[derive(Debug, Clone)]
enum Levels {
    /// Distinct eigenvalues in increasing order with running mode totals.
    Stored { values: Vec<f64>, cumulative: Vec<u64>, mult: Vec<u64> },
    /// j^{1/λ} for j = 1..=count, evaluated on demand.
    Power { lambda: f64, count: u64 },
}

/// An enumerated spectrum with its nominal trace exponent λ.
#[derive(Debug, Clone)]
pub struct SpectralModel {
    kind: SpectrumKind,
    truncation: u64,
    nominal_lambda: f64,
    levels: Levels,
}

impl SpectralModel {
    pub fn torus_laplacian(n: usize) -> Result<Self> {
        Self::new(SpectrumKind::TorusLaplacian { n }, DEFAULT_TRUNCATION)
    }

    pub fn prescribed_exponent(lambda: f64) -> Result<Self> {
        Self::new(SpectrumKind::PrescribedExponent { lambda }, DEFAULT_TRUNCATION)
    }

    pub fn geometric(rho: u32, mu: f64) -> Result<Self> {
        Self::new(SpectrumKind::Geometric { rho, mu }, DEFAULT_TRUNCATION)
    }

    /// Enumerates at most `truncation` modes (whole eigenvalue levels only).
    pub fn new(kind: SpectrumKind, truncation: u64) -> Result<Self> {
        if truncation < 1 {
            return Err(param("truncation must be at least 1 mode"));
        }
        let (levels, nominal_lambda) = match kind {
            SpectrumKind::TorusLaplacian { n } => {
                if n == 0 {
                    return Err(param("torus dimension must be >= 1"));
                }
                (stored(torus_levels(n, truncation)), n as f64 / 2.0)
            }
            SpectrumKind::PrescribedExponent { lambda } => {
                if !(lambda > 0.0) || !lambda.is_finite() {
                    return Err(param(format!("trace exponent must be positive, got {lambda}")));
                }
                (Levels::Power { lambda, count: truncation }, lambda)
            }
            SpectrumKind::Geometric { rho, mu } => {
                if rho < 2 {
                    return Err(param(format!("geometric base must be an integer >= 2, got {rho}")));
                }
                if !(mu > 0.0) || !mu.is_finite() {
                    return Err(param(format!("geometric rate must be positive, got {mu}")));
                }
                (stored(geometric_levels(rho, mu, truncation)), 1.0 / mu)
            }
            SpectrumKind::Explicit => {
                return Err(param("explicit spectra are built with SpectralModel::explicit"));
            }
        };
        Ok(SpectralModel { kind, truncation, nominal_lambda, levels })
    }

    /// A model from (eigenvalue, multiplicity) pairs in any order; equal
    /// eigenvalues are merged.
    pub fn explicit(pairs: Vec<(f64, u64)>, nominal_lambda: f64) -> Result<Self> {
        if !(nominal_lambda > 0.0) || !nominal_lambda.is_finite() {
            return Err(param(format!("nominal exponent must be positive, got {nominal_lambda}")));
        }
        if pairs.is_empty() {
            return Err(param("explicit spectrum is empty"));
        }
        if let Some(&(v, m)) = pairs.iter().find(|(v, m)| !(*v >= 0.0) || !v.is_finite() || *m < 1) {
            return Err(param(format!("invalid level ({v}, {m}): eigenvalues must be >= 0, multiplicities >= 1")));
        }
        let mut pairs = pairs;
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, u64)> = Vec::with_capacity(pairs.len());
        for (v, m) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += m,
                _ => merged.push((v, m)),
            }
        }
        let truncation = merged.iter().map(|l| l.1).sum();
        Ok(SpectralModel { kind: SpectrumKind::Explicit, truncation, nominal_lambda, levels: stored(merged) })
    }

    /// Loads `eigenvalue,multiplicity` rows.
    pub fn from_file(path: &Path, nominal_lambda: f64) -> Result<Self> {
        let rows = read_two_columns(path, ("eigenvalue", "multiplicity"))?;
        let pairs = rows
            .into_iter()
            .map(|(line, v, m)| {
                if m < 1.0 || m.fract() != 0.0 || m > u64::MAX as f64 {
                    return Err(Error::Parse {
                        path: path.display().to_string(),
                        line,
                        message: format!("multiplicity must be a positive integer, got {m}"),
                    });
                }
                Ok((v, m as u64))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::explicit(pairs, nominal_lambda)
    }

    pub fn kind(&self) -> &SpectrumKind {
        &self.kind
    }

    pub fn truncation(&self) -> u64 {
        self.truncation
    }

    pub fn nominal_lambda(&self) -> f64 {
        self.nominal_lambda
    }

    /// Largest enumerated eigenvalue; N(s) is exact for s up to here.
    pub fn horizon(&self) -> f64 {
        match &self.levels {
            Levels::Stored { values, .. } => *values.last().expect("non-empty spectrum"),
            Levels::Power { lambda, count } => (*count as f64).powf(1.0 / lambda),
        }
    }

    /// Smallest positive eigenvalue, if any is enumerated.
    pub fn first_positive(&self) -> Option<f64> {
        match &self.levels {
            Levels::Stored { values, .. } => values.iter().copied().find(|&v| v > 0.0),
            Levels::Power { .. } => Some(1.0),
        }
    }

    /// Distinct eigenvalues with multiplicities, increasing.
    pub fn levels(&self) -> Box<dyn Iterator<Item = (f64, u64)> + '_> {
        match &self.levels {
            Levels::Stored { values, mult, .. } => Box::new(values.iter().copied().zip(mult.iter().copied())),
            Levels::Power { lambda, count } => {
                let e = 1.0 / lambda;
                Box::new((1..=*count).map(move |j| ((j as f64).powf(e), 1)))
            }
        }
    }

    /// One eigenvalue per mode (levels repeated by multiplicity), at most `limit` entries.
    pub fn mode_eigenvalues(&self, limit: usize) -> Vec<f64> {
        self.levels().flat_map(|(v, m)| std::iter::repeat_n(v, m as usize)).take(limit).collect()
    }

    /// N(s): total multiplicity of eigenvalues in the open interval (0, s).
    pub fn counting_function(&self, s: f64) -> Result<f64> {
        if !(s >= 0.0) {
            return Err(param(format!("counting function needs s >= 0, got {s}")));
        }
        let horizon = self.horizon();
        if s > horizon {
            return Err(Error::Horizon { query: s, horizon });
        }
        Ok(self.count_below(s) as f64)
    }

    fn count_below(&self, s: f64) -> u64 {
        match &self.levels {
            Levels::Stored { values, cumulative, .. } => {
                let below = values.partition_point(|&v| v < s);
                let zero = values.partition_point(|&v| v <= 0.0);
                if below <= zero {
                    return 0;
                }
                cumulative[below - 1] - if zero > 0 { cumulative[zero - 1] } else { 0 }
            }
            Levels::Power { lambda, count } => {
                // j^{1/λ} < s ⇔ j < s^λ; the estimate is corrected against the exact test.
                let e = 1.0 / lambda;
                let mut c = (s.powf(*lambda).ceil() - 1.0).max(0.0).min(*count as f64) as u64;
                while c < *count && ((c + 1) as f64).powf(e) < s {
                    c += 1;
                }
                while c > 0 && (c as f64).powf(e) >= s {
                    c -= 1;
                }
                c
            }
        }
    }
}

impl fmt::Display for SpectralModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SpectrumKind::TorusLaplacian { n } => write!(f, "torus:{n}"),
            SpectrumKind::PrescribedExponent { lambda } => write!(f, "prescribed:{lambda}"),
            SpectrumKind::Geometric { rho, mu } => write!(f, "geometric:{rho},{mu}"),
            SpectrumKind::Explicit => write!(f, "explicit({} modes)", self.truncation),
        }
    }
}

/// Parses `torus:n`, `prescribed:λ` and `geometric:ρ,μ` with the default
/// truncation.
impl FromStr for SpectralModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = s.split_once(':').ok_or_else(|| param(format!("model `{s}` lacks a `kind:` prefix")))?;
        let v = crate::kernels::parse_list(rest, "model parameters")?;
        let whole = |x: f64| -> Result<u64> {
            if x >= 1.0 && x.fract() == 0.0 && x < u32::MAX as f64 {
                Ok(x as u64)
            } else {
                Err(param(format!("expected a positive integer, got {x}")))
            }
        };
        match (head.trim(), v.as_slice()) {
            ("torus", [n]) => SpectralModel::torus_laplacian(whole(*n)? as usize),
            ("prescribed", [lambda]) => SpectralModel::prescribed_exponent(*lambda),
            ("geometric", [rho, mu]) => SpectralModel::geometric(whole(*rho)? as u32, *mu),
            (head, _) => Err(param(format!("cannot read model `{head}` with parameters {v:?}"))),
        }
    }
}

fn stored(levels: Vec<(f64, u64)>) -> Levels {
    let (values, mult): (Vec<f64>, Vec<u64>) = levels.into_iter().unzip();
    let cumulative = mult
        .iter()
        .scan(0u64, |acc, &m| {
            *acc = acc.saturating_add(m);
            Some(*acc)
        })
        .collect();
    Levels::Stored { values, cumulative, mult }
}

/// Shells |k|² = m of ℤ^n with their lattice-point counts, cut at the last
/// complete shell that keeps the total within `truncation`.
fn torus_levels(n: usize, truncation: u64) -> Vec<(f64, u64)> {
    if n == 1 {
        let k_max = (truncation - 1) / 2;
        return std::iter::once((0.0, 1)).chain((1..=k_max).map(|k| ((k * k) as f64, 2))).collect();
    }
    // Volume of the unit n-ball gives the shell radius holding `truncation` points.
    let half = n as f64 / 2.0;
    let ball = std::f64::consts::PI.powf(half) * crate::specfun::rgamma(half + 1.0);
    let radius2 = (truncation as f64 / ball).powf(2.0 / n as f64);
    let m_max = (1.2 * radius2).ceil() as usize + 4;
    // r_1(m): representations of m as a single square.
    let mut r1 = vec![0u64; m_max + 1];
    r1[0] = 1;
    let mut k = 1;
    while k * k <= m_max {
        r1[k * k] = 2;
        k += 1;
    }
    let mut r = r1.clone();
    for _ in 1..n {
        let mut next = vec![0u64; m_max + 1];
        for (m, &c) in r.iter().enumerate().filter(|(_, &c)| c > 0) {
            let mut k = 0;
            while m + k * k <= m_max {
                next[m + k * k] += c * r1[k * k];
                k += 1;
            }
        }
        r = next;
    }
    let mut total = 0u64;
    let mut out = Vec::new();
    for (m, &c) in r.iter().enumerate().filter(|(_, &c)| c > 0) {
        if total + c > truncation {
            break;
        }
        total += c;
        out.push((m as f64, c));
    }
    out
}

fn geometric_levels(rho: u32, mu: f64, truncation: u64) -> Vec<(f64, u64)> {
    let rho_f = rho as f64;
    let mut out = Vec::new();
    let mut total = 0u64;
    let mut mult = (rho - 1) as u64;
    for j in 1.. {
        if total.saturating_add(mult) > truncation {
            break;
        }
        total += mult;
        out.push((rho_f.powf(mu * j as f64), mult));
        match mult.checked_mul(rho as u64) {
            Some(m) => mult = m,
            None => break,
        }
    }
    if out.is_empty() {
        // The first level alone exceeds the budget; keep it so the model is non-empty.
        out.push((rho_f.powf(mu), (rho - 1) as u64));
    }
    out
}

/// Entries of the operator catalog and their parameter names.
pub const CATALOG: [(&str, &[&str]); 8] = [
    ("euclidean_laplacian", &["n"]),
    ("compact_sublaplacian", &["Q"]),
    ("heisenberg_sublaplacian", &["n"]),
    ("rockland", &["Q", "nu"]),
    ("engel_D1", &[]),
    ("cartan_D2", &[]),
    ("subcoercive", &["Q_star", "m"]),
    ("vladimirov", &["mu"]),
];

/// Trace exponent λ with τ(E_(0,s)(𝓛)) ≲ s^λ for a catalog operator.
pub fn catalog_exponent(name: &str, params: &BTreeMap<String, f64>) -> Result<f64> {
    let (_, names) = CATALOG.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::UnknownOperator(name.into()))?;
    if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
        return Err(param(format!("`{name}` takes no parameter `{extra}`")));
    }
    let get = |key: &str| -> Result<f64> {
        let v = *params.get(key).ok_or_else(|| param(format!("`{name}` needs parameter `{key}`")))?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(param(format!("`{key}` must be positive, got {v}")));
        }
        Ok(v)
    };
    Ok(match name {
        "euclidean_laplacian" => get("n")? / 2.0,
        "compact_sublaplacian" => get("Q")? / 2.0,
        "heisenberg_sublaplacian" => get("n")? + 1.0,
        "rockland" => get("Q")? / get("nu")?,
        "engel_D1" => 3.0,
        "cartan_D2" => 4.5,
        "subcoercive" => get("Q_star")? / get("m")?,
        "vladimirov" => 1.0 / get("mu")?,
        _ => unreachable!("name checked against the catalog"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentFit {
    pub lambda_hat: f64,
    pub r_squared: f64,
}

/// Least-squares slope of log N(s) against log s on `n_points` log-spaced samples.
pub fn fit_trace_exponent(m: &SpectralModel, s_min: f64, s_max: f64, n_points: usize) -> Result<ExponentFit> {
    if !(s_min > 0.0 && s_max > s_min) {
        return Err(param(format!("fit range must satisfy 0 < s_min < s_max, got [{s_min}, {s_max}]")));
    }
    if n_points < 8 {
        return Err(param(format!("fit needs at least 8 points, got {n_points}")));
    }
    if m.counting_function(s_min)? == 0.0 {
        return Err(Error::DegenerateFit(format!("N({s_min}) = 0")));
    }
    let (l0, l1) = (s_min.ln(), s_max.ln());
    let pts = (0..n_points)
        .map(|i| {
            let x = l0 + (l1 - l0) * i as f64 / (n_points - 1) as f64;
            Ok((x, m.counting_function(x.exp().min(s_max))?.ln()))
        })
        .collect::<Result<Vec<_>>>()?;
    let (slope, _, r_squared) = linear_fit(&pts);
    Ok(ExponentFit { lambda_hat: slope, r_squared })
}

/// Ordinary least squares y = a·x + b; returns (a, b, R²).
pub(crate) fn linear_fit(pts: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let a = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (a, my - a * mx, r2)
}
