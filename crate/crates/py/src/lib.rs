//! Python bindings for fracevo.
//!
//! Validation failures raise `ValueError`; numerical failures (divergence,
//! accuracy not attained) raise `ArithmeticError`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fracevo::admiss::{self, TripleKind, TripleSpec};
use fracevo::evolve::{self, BoundDriver, PropagatorKind, TorusGrid};
use fracevo::kernels::{self, Interp};
use fracevo::specfun::{self, MLParams};
use fracevo::{fraccalc, resolvent as resolvent_mod, spectra, Error, SampledSignal};

fn py_err(e: Error) -> PyErr {
    if e.is_numerical() {
        PyArithmeticError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for fracevo::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// E_{alpha,delta}(z) for complex z.
#[pyfunction]
#[pyo3(signature = (alpha, delta, z))]
fn mittag_leffler(alpha: f64, delta: f64, z: Complex64) -> PyResult<Complex64> {
    specfun::mittag_leffler(MLParams::new(alpha, delta).py()?, z).py()
}

/// E_{alpha,delta}(x) for real x.
#[pyfunction]
fn mittag_leffler_real(alpha: f64, delta: f64, x: f64) -> PyResult<f64> {
    specfun::mittag_leffler_real(MLParams::new(alpha, delta).py()?, x).py()
}

/// sup over the sampled t in [0, t_max] of (1+t)|E_{alpha,delta}(-t)|.
#[pyfunction]
#[pyo3(signature = (alpha, delta=1.0, t_max=1e4, n_samples=10_000))]
fn ml_bound_constant(alpha: f64, delta: f64, t_max: f64, n_samples: usize) -> PyResult<f64> {
    specfun::ml_bound_constant(MLParams::new(alpha, delta).py()?, t_max, n_samples).py()
}

/// Caputo derivative of uniformly spaced samples starting at t = 0.
#[pyfunction]
#[pyo3(signature = (beta, values, dt, init))]
fn caputo_derivative(beta: f64, values: Vec<f64>, dt: f64, init: Vec<f64>) -> PyResult<Vec<f64>> {
    let f = SampledSignal::new(0.0, dt, values).py()?;
    Ok(fraccalc::caputo_derivative(beta, &f, &init).py()?.signal.into_values())
}

/// A memory kernel, written as `power:0.5`, `const:1`, `caputo-dual:0.3`,
/// `rs:0.5,1`, `multi:0.8;0.3;1` or `file:path`.
#[pyclass(name = "Kernel", module = "fracevo_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyKernel(kernels::Kernel);

#[pymethods]
impl PyKernel {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse().py().map(PyKernel)
    }

    /// A kernel sampled on t0 + j*dt.
    #[staticmethod]
    #[pyo3(signature = (values, dt, t0=0.0))]
    fn tabulated(values: Vec<f64>, dt: f64, t0: f64) -> PyResult<Self> {
        let s = SampledSignal::new(t0, dt, values).py()?;
        kernels::Kernel::tabulated(s, Interp::Linear).py().map(PyKernel)
    }

    fn eval(&self, t: f64) -> PyResult<f64> {
        self.0.eval(t).py()
    }

    /// The integral of k over [0, t].
    fn cumulative(&self, t: f64) -> PyResult<f64> {
        self.0.cumulative(t).py()
    }

    #[getter]
    fn completely_positive(&self) -> bool {
        self.0.is_completely_positive()
    }

    /// The analytic Sonine partner, if the kernel has one.
    fn sonine_partner(&self) -> Option<PyKernel> {
        self.0.sonine_partner().map(PyKernel)
    }

    /// The Sonine partner solved numerically on [0, t_max].
    fn solve_sonine_partner(&self, t_max: f64, dt: f64) -> PyResult<PyKernel> {
        let s = kernels::sonine_solve(&self.0, t_max, dt).py()?;
        kernels::Kernel::tabulated(s, Interp::Step).py().map(PyKernel)
    }

    fn __repr__(&self) -> String {
        format!("Kernel('{}')", self.0)
    }
}

/// max |(partner * k)(t) - 1| on the grid and whether it is below tol.
#[pyfunction]
#[pyo3(signature = (kernel, partner, t_max, dt, tol=1e-4))]
fn sonine_verify(kernel: &PyKernel, partner: &PyKernel, t_max: f64, dt: f64, tol: f64) -> PyResult<(f64, bool)> {
    let mut pair = kernels::SoninePair::new(kernel.0.clone(), partner.0.clone());
    let r = kernels::sonine_verify(&mut pair, t_max, dt, tol).py()?;
    Ok((r.max_deviation, r.pass))
}

/// Resolvent s(t) + lambda (k*s)(t) = 1 on t = j*dt, returned as (times, values).
#[pyfunction]
fn resolvent(kernel: &PyKernel, lam: f64, t_max: f64, dt: f64) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let req = resolvent_mod::ResolventRequest::new(kernel.0.clone(), lam, t_max, dt).py()?;
    let s = resolvent_mod::resolvent_scalar(&req).py()?;
    Ok((s.times().collect(), s.into_values()))
}

/// Resolvents for several lambdas on one grid.
#[pyfunction]
fn resolvent_batch(kernel: &PyKernel, lambdas: Vec<f64>, t_max: f64, dt: f64) -> PyResult<Vec<Vec<f64>>> {
    let out = resolvent_mod::resolvent_batch(&kernel.0, &lambdas, t_max, dt).py()?;
    Ok(out.into_iter().map(SampledSignal::into_values).collect())
}

/// A spectral model written as `torus:n`, `prescribed:lambda` or `geometric:rho,mu`.
#[pyclass(name = "SpectralModel", module = "fracevo_py", frozen)]
struct PySpectralModel(spectra::SpectralModel);

#[pymethods]
impl PySpectralModel {
    #[new]
    #[pyo3(signature = (spec, truncation=None))]
    fn new(spec: &str, truncation: Option<u64>) -> PyResult<Self> {
        let m: spectra::SpectralModel = spec.parse().py()?;
        match truncation {
            Some(t) => spectra::SpectralModel::new(m.kind().clone(), t).py().map(PySpectralModel),
            None => Ok(PySpectralModel(m)),
        }
    }

    /// A model from (eigenvalue, multiplicity) pairs.
    #[staticmethod]
    fn explicit(pairs: Vec<(f64, u64)>, nominal_lambda: f64) -> PyResult<Self> {
        spectra::SpectralModel::explicit(pairs, nominal_lambda).py().map(PySpectralModel)
    }

    /// Number of eigenvalues, with multiplicity, in (0, s).
    fn counting_function(&self, s: f64) -> PyResult<f64> {
        self.0.counting_function(s).py()
    }

    #[getter]
    fn horizon(&self) -> f64 {
        self.0.horizon()
    }

    #[getter]
    fn nominal_lambda(&self) -> f64 {
        self.0.nominal_lambda()
    }

    /// (lambda_hat, r_squared) from a log-log fit of N(s).
    #[pyo3(signature = (s_min, s_max, n_points=64))]
    fn fit_trace_exponent(&self, s_min: f64, s_max: f64, n_points: usize) -> PyResult<(f64, f64)> {
        let f = spectra::fit_trace_exponent(&self.0, s_min, s_max, n_points).py()?;
        Ok((f.lambda_hat, f.r_squared))
    }

    /// B(t) for the heat driver (`"heat"`) or a kernel spec.
    fn bound_function(&self, driver: &str, p: f64, q: f64, t: f64) -> PyResult<f64> {
        evolve::bound_function(&self.0, &bound_driver(driver)?, p, q, t).py()
    }

    fn __repr__(&self) -> String {
        format!("SpectralModel('{}')", self.0)
    }
}

fn bound_driver(spec: &str) -> PyResult<BoundDriver> {
    match spec {
        "heat" => Ok(BoundDriver::Heat),
        k => Ok(BoundDriver::Kernel(k.parse().py()?)),
    }
}

/// Trace exponent of a catalog operator.
#[pyfunction]
#[pyo3(signature = (name, params=BTreeMap::new()))]
fn catalog_exponent(name: &str, params: BTreeMap<String, f64>) -> PyResult<f64> {
    spectra::catalog_exponent(name, &params).py()
}

fn propagator_kind(kind: &str, beta: Option<f64>) -> PyResult<PropagatorKind> {
    let b = || beta.ok_or_else(|| PyValueError::new_err(format!("kind `{kind}` needs beta")));
    match kind {
        "heat" => Ok(PropagatorKind::Heat),
        "heat-type" => Ok(PropagatorKind::HeatType { beta: b()? }),
        "wave-type" => Ok(PropagatorKind::WaveType { beta: b()? }),
        "schrodinger" => Ok(PropagatorKind::SchrodingerType { beta: b()? }),
        other => Err(PyValueError::new_err(format!("unknown kind `{other}`"))),
    }
}

fn triple_kind(kind: &str, beta: Option<f64>) -> PyResult<TripleKind> {
    let b = || beta.ok_or_else(|| PyValueError::new_err(format!("kind `{kind}` needs beta")));
    match kind {
        "heat" => Ok(TripleKind::Heat),
        "heat-type" => Ok(TripleKind::HeatType { beta: b()? }),
        "wave-type" => Ok(TripleKind::WaveType { beta: b()? }),
        other => Err(PyValueError::new_err(format!("unknown kind `{other}`"))),
    }
}

/// Decay of a seeded random mean-zero field on the circle; returns a dict
/// with slope, envelope_constant, gap_time and the sampled rows.
#[pyfunction]
#[pyo3(signature = (kind, p, q, window, beta=None, points=128, k_max=16, seed=1, n_times=32))]
#[allow(clippy::too_many_arguments)]
fn decay_slope<'py>(
    py: Python<'py>,
    kind: &str,
    p: f64,
    q: f64,
    window: (f64, f64),
    beta: Option<f64>,
    points: usize,
    k_max: usize,
    seed: u64,
    n_times: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let kind = propagator_kind(kind, beta)?;
    let grid = TorusGrid::new(1, points).py()?;
    let w0 = evolve::random_mean_zero_field(grid, k_max, p, &mut ChaCha8Rng::seed_from_u64(seed)).py()?;
    let m = spectra::SpectralModel::torus_laplacian(1).py()?;
    let r = evolve::decay_slope(&m, &kind, p, q, &w0, window, n_times).py()?;
    let d = PyDict::new(py);
    d.set_item("slope", r.slope)?;
    d.set_item("envelope_constant", r.envelope_constant)?;
    d.set_item("gap_time", r.gap_time)?;
    let rows: Vec<(f64, f64, f64, f64)> = r.rows.iter().map(|x| (x.t, x.lq_norm, x.bound, x.ratio)).collect();
    d.set_item("rows", rows)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (kind, r, q, p, lam, beta=None))]
fn is_admissible(kind: &str, r: f64, q: f64, p: f64, lam: f64, beta: Option<f64>) -> PyResult<bool> {
    Ok(admiss::is_admissible(&TripleSpec { r, q, p, kind: triple_kind(kind, beta)? }, lam))
}

/// (admissible (1/q, 1/r) points, empty).
#[pyfunction]
#[pyo3(signature = (kind, p0, lam, resolution=100, beta=None))]
fn region_sample(kind: &str, p0: f64, lam: f64, resolution: usize, beta: Option<f64>) -> PyResult<(Vec<(f64, f64)>, bool)> {
    let r = admiss::region_sample(p0, lam, triple_kind(kind, beta)?, resolution).py()?;
    Ok((r.points().collect(), r.empty))
}

/// (rho, r, q) for a subcritical power eta.
#[pyfunction]
#[pyo3(signature = (kind, p0, lam, eta, beta=None))]
fn subcritical_construct(kind: &str, p0: f64, lam: f64, eta: f64, beta: Option<f64>) -> PyResult<(f64, f64, f64)> {
    let t = admiss::subcritical_construct(p0, lam, eta, triple_kind(kind, beta)?).py()?;
    Ok((t.rho, t.r, t.q))
}

/// Picard iteration from seeded random data of L^p0 norm `norm_w0` on the
/// circle; returns a dict with iterations, contraction_ratios and residual.
#[pyfunction]
#[pyo3(signature = (kind, eta, mu, norm_w0, t_max, dt, beta=None, points=128, k_max=8, seed=1, p0=2.0, tol=1e-10, max_iter=50))]
#[allow(clippy::too_many_arguments)]
fn picard_solve<'py>(
    py: Python<'py>,
    kind: &str,
    eta: f64,
    mu: f64,
    norm_w0: f64,
    t_max: f64,
    dt: f64,
    beta: Option<f64>,
    points: usize,
    k_max: usize,
    seed: u64,
    p0: f64,
    tol: f64,
    max_iter: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let kind = propagator_kind(kind, beta)?;
    let grid = TorusGrid::new(1, points).py()?;
    let w0 = evolve::random_mean_zero_field(grid, k_max, p0, &mut ChaCha8Rng::seed_from_u64(seed))
        .and_then(|w| w.scaled_to_norm(p0, norm_w0))
        .py()?;
    let mut req = evolve::PicardRequest::new(kind, eta, mu, w0, t_max, dt);
    req.p0 = p0;
    req.tol = tol;
    req.max_iter = max_iter;
    let m = spectra::SpectralModel::torus_laplacian(1).py()?;
    let r = py.detach(|| evolve::picard_solve(&m, &req)).py()?;
    let d = PyDict::new(py);
    d.set_item("iterations", r.iterations)?;
    d.set_item("contraction_ratios", r.contraction_ratios)?;
    d.set_item("increments", r.increments)?;
    d.set_item("residual", r.residual)?;
    Ok(d)
}

/// Runs the command-line front end with the given arguments; returns the exit code.
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    fracevo::cli::run(std::iter::once("fracevo".to_string()).chain(args))
}

#[pymodule]
pub fn fracevo_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyKernel>()?;
    m.add_class::<PySpectralModel>()?;
    m.add_function(wrap_pyfunction!(mittag_leffler, m)?)?;
    m.add_function(wrap_pyfunction!(mittag_leffler_real, m)?)?;
    m.add_function(wrap_pyfunction!(ml_bound_constant, m)?)?;
    m.add_function(wrap_pyfunction!(caputo_derivative, m)?)?;
    m.add_function(wrap_pyfunction!(sonine_verify, m)?)?;
    m.add_function(wrap_pyfunction!(resolvent, m)?)?;
    m.add_function(wrap_pyfunction!(resolvent_batch, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(decay_slope, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(region_sample, m)?)?;
    m.add_function(wrap_pyfunction!(subcritical_construct, m)?)?;
    m.add_function(wrap_pyfunction!(picard_solve, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
