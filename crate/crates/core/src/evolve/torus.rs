//! Fields on T^n = ℝ^n/(2πℤ)^n sampled on uniform grids, their Fourier
//! coefficients, and L^p norms under the normalized Haar measure.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::{param, Error, Result};
use crate::spectra::{SpectralModel, SpectrumKind};

/// Largest number of grid points accepted (all dimensions together).
const MAX_POINTS: usize = 1 << 24;

/// The uniform grid x_j = 2πj/N in each of n dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusGrid {
    n: usize,
    npts: usize,
}

impl TorusGrid {
    pub fn new(n: usize, npts: usize) -> Result<Self> {
        if n == 0 {
            return Err(param("torus dimension must be >= 1"));
        }
        if npts < 4 || !npts.is_multiple_of(2) {
            return Err(param(format!("points per dimension must be even and >= 4, got {npts}")));
        }
        match npts.checked_pow(n as u32) {
            Some(total) if total <= MAX_POINTS => Ok(TorusGrid { n, npts }),
            _ => Err(param(format!("grid {npts}^{n} exceeds {MAX_POINTS} points"))),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn points_per_dim(&self) -> usize {
        self.npts
    }

    pub fn len(&self) -> usize {
        self.npts.pow(self.n as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Wave vector of a coefficient slot (row-major, FFT order per axis).
    pub fn frequency(&self, idx: usize) -> Vec<i64> {
        let n = self.npts;
        let mut k = vec![0i64; self.n];
        let mut rest = idx;
        for slot in k.iter_mut().rev() {
            let d = rest % n;
            rest /= n;
            *slot = if d < n / 2 { d as i64 } else { d as i64 - n as i64 };
        }
        k
    }

    /// Slot of a wave vector with 2|k_i| ≤ N.
    pub fn slot(&self, k: &[i64]) -> Result<usize> {
        if k.len() != self.n {
            return Err(Error::Dimension(format!("wave vector of length {} on T^{}", k.len(), self.n)));
        }
        let n = self.npts as i64;
        let mut idx = 0usize;
        for &ki in k {
            if 2 * ki.abs() > n {
                return Err(Error::Aliasing(format!("frequency {ki} needs at least {} points, grid has {n}", 2 * ki.abs())));
            }
            idx = idx * self.npts + ki.rem_euclid(n) as usize;
        }
        Ok(idx)
    }

    /// Laplacian eigenvalue |k|² of every coefficient slot.
    pub fn eigenvalues(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.frequency(i).iter().map(|&k| (k * k) as f64).sum()).collect()
    }

    /// Coordinates of grid point `idx`.
    pub fn point(&self, idx: usize) -> Vec<f64> {
        let h = 2.0 * std::f64::consts::PI / self.npts as f64;
        let mut x = vec![0.0; self.n];
        let mut rest = idx;
        for slot in x.iter_mut().rev() {
            *slot = (rest % self.npts) as f64 * h;
            rest /= self.npts;
        }
        x
    }
}

/// Samples of a field at the grid points (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct FieldOnTorus {
    grid: TorusGrid,
    values: Vec<Complex64>,
}

/// Fourier coefficients c_k with w(x) = Σ c_k e^{ik·x}, in FFT slot order.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusCoeffs {
    grid: TorusGrid,
    values: Vec<Complex64>,
}

fn check_samples(grid: &TorusGrid, values: &[Complex64]) -> Result<()> {
    if values.len() != grid.len() {
        return Err(Error::Dimension(format!("{} samples for a grid of {}", values.len(), grid.len())));
    }
    if let Some(j) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(param(format!("sample {j} is not finite")));
    }
    Ok(())
}

impl FieldOnTorus {
    pub fn new(grid: TorusGrid, values: Vec<Complex64>) -> Result<Self> {
        check_samples(&grid, &values)?;
        Ok(FieldOnTorus { grid, values })
    }

    pub fn from_real(grid: TorusGrid, values: &[f64]) -> Result<Self> {
        Self::new(grid, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn(&[f64]) -> Complex64) -> Result<Self> {
        Self::new(grid, (0..grid.len()).map(|i| f(&grid.point(i))).collect())
    }

    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Haar average of the field (its zero mode).
    pub fn mean(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() / self.values.len() as f64
    }

    /// ‖w‖_p = (mean |w|^p)^{1/p}; p = ∞ gives the maximum modulus.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        lp_norm_of(&self.values, p)
    }

    /// Pointwise map in physical space.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> FieldOnTorus {
        FieldOnTorus { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// The same field with its grid-point values scaled so that ‖w‖_p = target.
    pub fn scaled_to_norm(&self, p: f64, target: f64) -> Result<FieldOnTorus> {
        let norm = self.lp_norm(p)?;
        if norm == 0.0 {
            return Err(param("cannot rescale the zero field"));
        }
        Ok(self.map(|v| v * (target / norm)))
    }

    /// Flat text: a first line `n,N`, then one `re,im` row per grid point.
    pub fn to_text(&self) -> String {
        let mut s = format!("{},{}\n", self.grid.n, self.grid.npts);
        for v in &self.values {
            let _ = writeln!(s, "{:e},{:e}", v.re, v.im);
        }
        s
    }
}

pub(crate) fn lp_norm_of(values: &[Complex64], p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(param(format!("norm exponent must be in [1, inf], got {p}")));
    }
    if p.is_infinite() {
        return Ok(values.iter().map(|v| v.norm()).fold(0.0, f64::max));
    }
    // Scale by the maximum so that |w|^p neither overflows nor underflows.
    let m = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if m == 0.0 {
        return Ok(0.0);
    }
    let mean = values.iter().map(|v| (v.norm() / m).powf(p)).sum::<f64>() / values.len() as f64;
    Ok(m * mean.powf(1.0 / p))
}

impl TorusCoeffs {
    pub fn new(grid: TorusGrid, values: Vec<Complex64>) -> Result<Self> {
        check_samples(&grid, &values)?;
        Ok(TorusCoeffs { grid, values })
    }

    pub fn zeros(grid: TorusGrid) -> Self {
        TorusCoeffs { grid, values: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    /// Coefficients from a sparse list of (wave vector, value); repeated
    /// wave vectors add up.
    pub fn from_modes(grid: TorusGrid, modes: &[(Vec<i64>, Complex64)]) -> Result<Self> {
        let mut c = Self::zeros(grid);
        for (k, v) in modes {
            c.values[grid.slot(k)?] += v;
        }
        check_samples(&grid, &c.values)?;
        Ok(c)
    }

    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }
}

/// Line-by-line n-dimensional FFT.
fn transform(grid: &TorusGrid, data: &mut [Complex64], direction: FftDirection) {
    let fft: std::sync::Arc<dyn Fft<f64>> = FftPlanner::new().plan_fft(grid.npts, direction);
    let n = grid.npts;
    let total = data.len();
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    for axis in 0..grid.n {
        let stride = n.pow((grid.n - 1 - axis) as u32);
        for base in (0..total).filter(|i| (i / stride).is_multiple_of(n)) {
            for (j, slot) in line.iter_mut().enumerate() {
                *slot = data[base + j * stride];
            }
            fft.process_with_scratch(&mut line, &mut scratch);
            for (j, v) in line.iter().enumerate() {
                data[base + j * stride] = *v;
            }
        }
    }
}

/// Fourier coefficients of a field: c_k = mean over the grid of w(x)e^{−ik·x}.
pub fn analyze(field: &FieldOnTorus) -> TorusCoeffs {
    let mut data = field.values.clone();
    transform(&field.grid, &mut data, FftDirection::Forward);
    let scale = 1.0 / field.grid.len() as f64;
    data.iter_mut().for_each(|v| *v *= scale);
    TorusCoeffs { grid: field.grid, values: data }
}

/// Grid samples of Σ c_k e^{ik·x}.
pub fn synthesize_coeffs(coeffs: &TorusCoeffs) -> FieldOnTorus {
    let mut data = coeffs.values.clone();
    transform(&coeffs.grid, &mut data, FftDirection::Inverse);
    FieldOnTorus { grid: coeffs.grid, values: data }
}

/// Synthesis for a torus Laplacian model; the model and the coefficient grid
/// must agree on the dimension.
pub fn synthesize(model: &SpectralModel, coeffs: &TorusCoeffs) -> Result<FieldOnTorus> {
    match model.kind() {
        SpectrumKind::TorusLaplacian { n } if *n == coeffs.grid.n => Ok(synthesize_coeffs(coeffs)),
        SpectrumKind::TorusLaplacian { n } => {
            Err(Error::Dimension(format!("model on T^{n}, coefficients on T^{}", coeffs.grid.n)))
        }
        _ => Err(Error::Precondition(format!("synthesis needs a torus Laplacian model, got {model}"))),
    }
}

/// Random real mean-zero field with independent Gaussian coefficients for
/// 1 ≤ |k|_∞ ≤ k_max, scaled to ‖w‖_p = 1.
pub fn random_mean_zero_field(grid: TorusGrid, k_max: usize, p: f64, rng: &mut impl Rng) -> Result<FieldOnTorus> {
    if 2 * k_max > grid.npts {
        return Err(Error::Aliasing(format!("k_max = {k_max} needs at least {} points", 2 * k_max)));
    }
    if k_max == 0 {
        return Err(param("k_max must be >= 1"));
    }
    let mut c = TorusCoeffs::zeros(grid);
    for idx in 0..grid.len() {
        let k = grid.frequency(idx);
        let kmax = k.iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0);
        if kmax == 0 || kmax > k_max || 2 * kmax == grid.npts {
            continue;
        }
        // Fill one of each ±k pair and mirror it so the field is real.
        let neg: Vec<i64> = k.iter().map(|v| -v).collect();
        let j = grid.slot(&neg)?;
        if j < idx {
            continue;
        }
        let v = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        c.values[idx] = v;
        c.values[j] = v.conj();
    }
    let field = synthesize_coeffs(&c).map(|v| Complex64::new(v.re, 0.0));
    field.scaled_to_norm(p, 1.0)
}
