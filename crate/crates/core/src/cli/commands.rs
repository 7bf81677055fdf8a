//! The subcommands and their self-tests.

use std::collections::BTreeMap;
use std::f64::consts::{E, PI};
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{key, CommandSpec, ExperimentConfig, KeySpec, Outcome};
use crate::admiss::{region_sample, TripleKind};
use crate::error::{param, Error, Result};
use crate::evolve::{
    bound_function, bound_slope, decay_slope, picard_solve, random_mean_zero_field, BoundDriver, FieldOnTorus,
    PicardRequest, PropagatorKind, TorusGrid,
};
use crate::fraccalc::{caputo_derivative, caputo_derivative_corrected};
use crate::kernels::{sonine_solve, sonine_verify, Interp, Kernel, SoninePair};
use crate::resolvent::{bound_violation, resolvent_scalar, ResolventRequest, BOUND_TOLERANCE};
use crate::signal::SampledSignal;
use crate::specfun::{gamma, ml_bound_constant_on_ray, ml_bound_profile_on_ray, mittag_leffler, rgamma, MLParams};
use crate::spectra::{catalog_exponent, fit_trace_exponent, SpectralModel, CATALOG};

const OUT: KeySpec = key("out", None, "CSV output path; a .json sidecar is written next to it");

pub static COMMANDS: [CommandSpec; 11] = [
    CommandSpec {
        name: "ml",
        about: "Evaluate the Mittag-Leffler function E_{alpha,delta}(z)",
        keys: &[
            key("alpha", None, "alpha > 0"),
            key("delta", Some("1"), "delta"),
            key("z", None, "real part of z"),
            key("zi", Some("0"), "imaginary part of z"),
            OUT,
        ],
        run: ml,
        selftest: ml_checks,
    },
    CommandSpec {
        name: "mlbound",
        about: "Profile of (1+t)|E_{alpha,delta}(t e^{i theta})| and its supremum",
        keys: &[
            key("alpha", None, "0 < alpha < 2"),
            key("delta", Some("1"), "delta"),
            key("theta", Some("3.141592653589793"), "ray argument"),
            key("t-max", Some("1e4"), "end of the profile"),
            key("samples", Some("2001"), "number of samples"),
            OUT,
        ],
        run: mlbound,
        selftest: mlbound_checks,
    },
    CommandSpec {
        name: "fracderiv",
        about: "Caputo derivative of a test function by the L1 scheme",
        keys: &[
            key("beta", None, "order in (0,1) or (1,2)"),
            key("function", Some("power"), "power (t^gamma) or ml (E_beta(-lambda t^beta))"),
            key("gamma", Some("2"), "exponent of the power function"),
            key("lambda", Some("1"), "rate of the ml function"),
            key("scheme", Some("l1"), "l1 or corrected"),
            key("t-max", Some("1"), "end of the grid"),
            key("dt", Some("1e-3"), "time step"),
            OUT,
        ],
        run: fracderiv,
        selftest: fracderiv_checks,
    },
    CommandSpec {
        name: "sonine",
        about: "Sonine partner of a kernel and the round-trip check (K*k)(t) = 1",
        keys: &[
            key("kernel", Some("power:0.5"), "kernel, e.g. power:0.5 or rs:0.5,1"),
            key("t-max", Some("2"), "end of the grid"),
            key("dt", Some("1e-3"), "time step"),
            key("tol", Some("1e-4"), "accepted deviation"),
            OUT,
        ],
        run: sonine,
        selftest: sonine_checks,
    },
    CommandSpec {
        name: "resolvent",
        about: "Scalar resolvent s(t) + lambda (k*s)(t) = 1",
        keys: &[
            key("kernel", Some("power:0.5"), "kernel, e.g. power:0.5 or rs:0.5,1"),
            key("lambda", Some("1"), "lambda >= 0"),
            key("t-max", Some("5"), "end of the grid"),
            key("dt", Some("1e-3"), "time step"),
            OUT,
        ],
        run: resolvent,
        selftest: resolvent_checks,
    },
    CommandSpec {
        name: "catalog",
        about: "Trace exponents of the operator catalog",
        keys: &[key("name", None, "operator; omit to list the catalog"), key("params", Some(""), "e.g. Q=4,nu=2"), OUT],
        run: catalog,
        selftest: catalog_checks,
    },
    CommandSpec {
        name: "countfit",
        about: "Fit the trace exponent of a spectral model from N(s)",
        keys: &[
            key("model", Some("torus:1"), "torus:n, prescribed:lambda or geometric:rho,mu"),
            key("model-file", None, "eigenvalue,multiplicity file instead of --model"),
            key("lambda", None, "nominal trace exponent of a model file"),
            key("truncation", Some("1000000"), "enumerated modes"),
            key("s-min", Some("1e2"), "start of the fit range"),
            key("s-max", Some("1e4"), "end of the fit range"),
            key("points", Some("64"), "sample count"),
            OUT,
        ],
        run: countfit,
        selftest: countfit_checks,
    },
    CommandSpec {
        name: "decay",
        about: "Measured Lp to Lq decay of random mean-zero data on the torus",
        keys: &[
            key("kind", Some("heat"), "heat, heat-type, wave-type or schrodinger"),
            key("beta", None, "order for the fractional kinds"),
            key("n", Some("1"), "torus dimension"),
            key("points", Some("128"), "grid points per dimension"),
            key("k-max", Some("16"), "highest excited frequency"),
            key("seed", Some("1"), "random seed"),
            key("p", Some("1.3333333333333333"), "data exponent"),
            key("q", Some("4"), "target exponent"),
            key("t-a", Some("1e-3"), "window start"),
            key("t-b", Some("0.5"), "window end"),
            key("times", Some("32"), "sample times"),
            OUT,
        ],
        run: decay,
        selftest: decay_checks,
    },
    CommandSpec {
        name: "bound",
        about: "Decay-bound function B(t) and its log-log slope",
        keys: &[
            key("model", Some("prescribed:1"), "torus:n, prescribed:lambda or geometric:rho,mu"),
            key("truncation", Some("1000000"), "enumerated modes"),
            key("kernel", Some("power:0.5"), "heat or a kernel such as power:0.5"),
            key("p", Some("1.3333333333333333"), "data exponent"),
            key("q", Some("4"), "target exponent"),
            key("t-a", Some("1e-2"), "window start"),
            key("t-b", Some("1e2"), "window end"),
            key("times", Some("41"), "sample times"),
            OUT,
        ],
        run: bound,
        selftest: bound_checks,
    },
    CommandSpec {
        name: "region",
        about: "Admissible (1/q, 1/r) region for a data exponent p0",
        keys: &[
            key("kind", Some("heat"), "heat, heat-type or wave-type"),
            key("beta", None, "order for the fractional kinds"),
            key("p0", None, "1 < p0 <= 2"),
            key("lambda", None, "trace exponent"),
            key("resolution", Some("100"), "grid points per axis"),
            OUT,
        ],
        run: region,
        selftest: region_checks,
    },
    CommandSpec {
        name: "picard",
        about: "Picard iteration for the power nonlinearity on the torus",
        keys: &[
            key("kind", Some("heat"), "heat, heat-type or wave-type"),
            key("beta", None, "order for the fractional kinds"),
            key("eta", Some("3"), "power eta > 1"),
            key("mu", Some("1"), "sign of the nonlinearity"),
            key("n", Some("1"), "torus dimension"),
            key("points", Some("128"), "grid points per dimension"),
            key("k-max", Some("8"), "highest excited frequency"),
            key("seed", Some("1"), "random seed"),
            key("norm-w0", Some("1e-2"), "Lp0 norm of the initial data"),
            key("p0", Some("2"), "spatial exponent"),
            key("t-max", Some("0.5"), "final time"),
            key("dt", Some("1e-3"), "time step"),
            key("tol", Some("1e-10"), "stopping increment"),
            key("max-iter", Some("50"), "iteration cap"),
            OUT,
        ],
        run: picard,
        selftest: picard_checks,
    },
];

fn csv_rows<'a>(header: &str, rows: impl IntoIterator<Item = &'a [f64]>) -> String {
    let mut s = format!("{header}\n");
    for r in rows {
        let line: Vec<String> = r.iter().map(|v| format!("{v:e}")).collect();
        let _ = writeln!(s, "{}", line.join(","));
    }
    s
}

fn check(label: impl Into<String>, ok: bool) -> (String, bool) {
    (label.into(), ok)
}

fn propagator_kind(cfg: &ExperimentConfig) -> Result<PropagatorKind> {
    let beta = || cfg.real("beta");
    match cfg.text("kind")? {
        "heat" => Ok(PropagatorKind::Heat),
        "heat-type" => Ok(PropagatorKind::HeatType { beta: beta()? }),
        "wave-type" => Ok(PropagatorKind::WaveType { beta: beta()? }),
        "schrodinger" => Ok(PropagatorKind::SchrodingerType { beta: beta()? }),
        other => Err(param(format!("unknown kind `{other}`"))),
    }
}

fn triple_kind(cfg: &ExperimentConfig) -> Result<TripleKind> {
    match cfg.text("kind")? {
        "heat" => Ok(TripleKind::Heat),
        "heat-type" => Ok(TripleKind::HeatType { beta: cfg.real("beta")? }),
        "wave-type" => Ok(TripleKind::WaveType { beta: cfg.real("beta")? }),
        other => Err(param(format!("unknown kind `{other}`"))),
    }
}

fn ml(cfg: &ExperimentConfig) -> Result<Outcome> {
    let (alpha, delta) = (cfg.real("alpha")?, cfg.real("delta")?);
    let z = Complex64::new(cfg.real("z")?, cfg.real("zi")?);
    let v = mittag_leffler(MLParams::new(alpha, delta)?, z)?;
    let line = if z.im == 0.0 && v.im == 0.0 { format!("{}", v.re) } else { format!("{} {:+}i", v.re, v.im) };
    Ok(Outcome {
        line,
        csv: Some(csv_rows("alpha,delta,z_re,z_im,re,im", [&[alpha, delta, z.re, z.im, v.re, v.im][..]])),
        summary: json!({ "re": v.re, "im": v.im }),
    })
}

fn ml_checks() -> Vec<(String, bool)> {
    let e = mittag_leffler(MLParams::new(1.0, 1.0).unwrap(), Complex64::new(1.0, 0.0));
    let zero = mittag_leffler(MLParams::new(0.7, 2.5).unwrap(), Complex64::new(0.0, 0.0));
    vec![
        check("E_{1,1}(1) = e", e.is_ok_and(|v| (v.re - E).abs() < 1e-14)),
        check("E_{0.7,2.5}(0) = 1/Gamma(2.5)", zero.is_ok_and(|v| (v.re - rgamma(2.5)).abs() < 1e-15)),
    ]
}

fn mlbound(cfg: &ExperimentConfig) -> Result<Outcome> {
    let p = MLParams::new(cfg.real("alpha")?, cfg.real("delta")?)?;
    let (theta, t_max, n) = (cfg.real("theta")?, cfg.real("t-max")?, cfg.count("samples")?);
    let profile = ml_bound_profile_on_ray(p, theta, t_max, n)?;
    let sup = ml_bound_constant_on_ray(p, theta, t_max, n)?;
    let rows: Vec<[f64; 2]> = profile.iter().map(|s| [s.t, s.value]).collect();
    Ok(Outcome {
        line: format!("sup (1+t)|E| = {sup}"),
        csv: Some(csv_rows("t,value", rows.iter().map(|r| &r[..]))),
        summary: json!({ "sup": sup }),
    })
}

fn mlbound_checks() -> Vec<(String, bool)> {
    // (1+t)e^{-t} peaks at t = 0.
    let c = ml_bound_constant_on_ray(MLParams::new(1.0, 1.0).unwrap(), PI, 100.0, 501);
    vec![check("alpha = 1 gives sup (1+t)e^{-t} = 1", c.is_ok_and(|v| (v - 1.0).abs() < 1e-12))]
}

/// Samples of the test function, its initial data, exact derivative and
/// correction exponents.
struct TestFunction {
    f: SampledSignal,
    init: Vec<f64>,
    exact: Vec<f64>,
    exponents: Vec<f64>,
}

fn test_function(cfg: &ExperimentConfig, beta: f64) -> Result<TestFunction> {
    let (t_max, dt) = (cfg.real("t-max")?, cfg.real("dt")?);
    match cfg.text("function")? {
        "power" => {
            let g = cfg.real("gamma")?;
            if g < 0.0 || (beta > 1.0 && g > 0.0 && g < 1.0) {
                return Err(param(format!("t^{g} has no Caputo derivative of order {beta} from t = 0")));
            }
            let f = SampledSignal::from_fn(0.0, t_max, dt, |t| t.powf(g))?;
            let init = match (g == 0.0, g == 1.0) {
                (true, _) => vec![1.0, 0.0],
                (_, true) => vec![0.0, 1.0],
                _ => vec![0.0, 0.0],
            };
            let whole = g.fract() == 0.0 && g <= beta.ceil() - 1.0;
            let c = if whole { 0.0 } else { gamma(g + 1.0)? / gamma(g + 1.0 - beta)? };
            let exact = f.times().map(|t| if whole { 0.0 } else { c * t.powf(g - beta) }).collect();
            let exponents = if g.fract() != 0.0 { vec![g] } else { vec![] };
            Ok(TestFunction { f, init: init[..beta.ceil() as usize].to_vec(), exact, exponents })
        }
        "ml" => {
            let lam = cfg.real("lambda")?;
            let p = MLParams::new(beta, 1.0)?;
            let vals: Vec<f64> = (0..=((t_max / dt).round() as usize))
                .map(|j| crate::specfun::mittag_leffler_real(p, -lam * (j as f64 * dt).powf(beta)))
                .collect::<Result<_>>()?;
            let exact = vals.iter().map(|v| -lam * v).collect();
            let f = SampledSignal::new(0.0, dt, vals)?;
            let init = if beta > 1.0 { vec![1.0, 0.0] } else { vec![1.0] };
            Ok(TestFunction { f, init, exact, exponents: vec![beta, 2.0 * beta] })
        }
        other => Err(param(format!("unknown test function `{other}`"))),
    }
}

fn fracderiv(cfg: &ExperimentConfig) -> Result<Outcome> {
    let beta = cfg.real("beta")?;
    let tf = test_function(cfg, beta)?;
    let d = match cfg.text("scheme")? {
        "l1" => caputo_derivative(beta, &tf.f, &tf.init)?,
        "corrected" => caputo_derivative_corrected(beta, &tf.f, &tf.init, &tf.exponents)?,
        other => return Err(param(format!("unknown scheme `{other}`"))),
    };
    let skip = usize::from(d.origin_extrapolated);
    let err = d.signal.values().iter().zip(&tf.exact).skip(skip).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let rows: Vec<[f64; 4]> = tf
        .f
        .times()
        .zip(tf.f.values())
        .zip(d.signal.values().iter().zip(&tf.exact))
        .map(|((t, f), (d, e))| [t, *f, *d, *e])
        .collect();
    Ok(Outcome {
        line: format!("max |error| = {err:e}"),
        csv: Some(csv_rows("t,f,derivative,exact", rows.iter().map(|r| &r[..]))),
        summary: json!({ "max_error": err, "origin_extrapolated": d.origin_extrapolated }),
    })
}

fn fracderiv_checks() -> Vec<(String, bool)> {
    let grid = |f: fn(f64) -> f64| SampledSignal::from_fn(0.0, 1.0, 0.01, f).unwrap();
    let constant = caputo_derivative(0.5, &grid(|_| 3.0), &[3.0]);
    let linear = caputo_derivative(0.5, &grid(|t| t), &[0.0]);
    let c = 1.0 / gamma(1.5).unwrap();
    vec![
        check("derivative of a constant vanishes", constant.is_ok_and(|d| d.signal.values().iter().all(|v| v.abs() < 1e-14))),
        check(
            "L1 is exact on t",
            linear.is_ok_and(|d| {
                d.signal.times().zip(d.signal.values()).skip(1).all(|(t, v)| (v - c * t.sqrt()).abs() < 1e-12)
            }),
        ),
    ]
}

fn sonine(cfg: &ExperimentConfig) -> Result<Outcome> {
    let k: Kernel = cfg.text("kernel")?.parse()?;
    let (t_max, dt, tol) = (cfg.real("t-max")?, cfg.real("dt")?, cfg.real("tol")?);
    let (partner, route) = match k.sonine_partner() {
        Some(p) => (p, "analytic"),
        None => (Kernel::tabulated(sonine_solve(&k, t_max, dt)?, Interp::Step)?, "solved"),
    };
    let mut pair = SoninePair::new(k, partner);
    let report = sonine_verify(&mut pair, t_max, dt, tol)?;
    let n = (t_max / dt).round() as usize;
    let rows: Vec<[f64; 2]> = (1..=n)
        .map(|j| {
            let t = (j as f64 - 0.5) * dt;
            Ok([t, pair.partner.eval(t)?])
        })
        .collect::<Result<_>>()?;
    let out = Outcome {
        line: format!("{route} partner, max |(K*k)(t) - 1| = {:e}", report.max_deviation),
        csv: Some(csv_rows("t,partner", rows.iter().map(|r| &r[..]))),
        summary: json!({ "route": route, "max_deviation": report.max_deviation, "pass": report.pass }),
    };
    if report.pass {
        Ok(out)
    } else {
        Err(Error::Accuracy(format!("Sonine deviation {:e} exceeds {tol:e}", report.max_deviation)))
    }
}

fn sonine_checks() -> Vec<(String, bool)> {
    let k = Kernel::power_law(0.5).unwrap();
    let mut pair = SoninePair::new(k.clone(), k.sonine_partner().unwrap());
    let r = sonine_verify(&mut pair, 1.0, 0.05, 1e-8);
    vec![check("power-law pair convolves to 1", r.is_ok_and(|r| r.pass))]
}

fn resolvent(cfg: &ExperimentConfig) -> Result<Outcome> {
    let k: Kernel = cfg.text("kernel")?.parse()?;
    let lam = cfg.real("lambda")?;
    let req = ResolventRequest::new(k.clone(), lam, cfg.real("t-max")?, cfg.real("dt")?)?;
    let s = resolvent_scalar(&req)?;
    let bounds: Vec<f64> = s.times().map(|t| Ok(1.0 / (1.0 + lam * k.cumulative(t)?))).collect::<Result<_>>()?;
    let rows: Vec<[f64; 3]> = s.times().zip(s.values()).zip(&bounds).map(|((t, v), b)| [t, *v, *b]).collect();
    let end = *s.values().last().expect("non-empty resolvent");
    let mut summary = json!({ "s_end": end, "steps": s.len() - 1 });
    let mut line = format!("s({}) = {end}", s.t_end());
    if k.is_completely_positive() {
        let r = bound_violation(&k, lam, &s, BOUND_TOLERANCE)?;
        summary["max_bound_violation"] = json!(r.max_violation);
        let _ = write!(line, ", max s - 1/(1+lambda K) = {:e}", r.max_violation);
    }
    Ok(Outcome { line, csv: Some(csv_rows("t,s,bound", rows.iter().map(|r| &r[..]))), summary })
}

fn resolvent_checks() -> Vec<(String, bool)> {
    let run = |lam: f64| resolvent_scalar(&ResolventRequest::new(Kernel::constant(1.0).unwrap(), lam, 1.0, 1e-3).unwrap());
    vec![
        check("lambda = 0 gives s = 1", run(0.0).is_ok_and(|s| s.values().iter().all(|v| (v - 1.0).abs() < 1e-14))),
        check(
            "constant kernel gives exp(-lambda t)",
            run(2.0).is_ok_and(|s| s.times().zip(s.values()).all(|(t, v)| (v - (-2.0 * t).exp()).abs() < 1e-5)),
        ),
    ]
}

fn parse_params(text: &str) -> Result<BTreeMap<String, f64>> {
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| param(format!("expected name=value, got `{p}`")))?;
            let v = v.trim().parse().map_err(|_| param(format!("bad number in `{p}`")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn catalog(cfg: &ExperimentConfig) -> Result<Outcome> {
    match cfg.get("name") {
        None => {
            let mut csv = String::from("name,parameters\n");
            for (name, params) in CATALOG.iter() {
                let _ = writeln!(csv, "{name},{}", params.join(" "));
            }
            Ok(Outcome { line: format!("{} operators", CATALOG.len()), csv: Some(csv), summary: json!({ "count": CATALOG.len() }) })
        }
        Some(name) => {
            let lam = catalog_exponent(name, &parse_params(cfg.text("params")?)?)?;
            Ok(Outcome {
                line: format!("lambda = {lam}"),
                csv: Some(format!("name,lambda\n{name},{lam:e}\n")),
                summary: json!({ "name": name, "lambda": lam }),
            })
        }
    }
}

fn catalog_checks() -> Vec<(String, bool)> {
    let p = BTreeMap::from([("n".to_string(), 3.0)]);
    vec![check("Laplacian on R^3 has lambda = 3/2", catalog_exponent("euclidean_laplacian", &p).is_ok_and(|l| l == 1.5))]
}

fn model(cfg: &ExperimentConfig) -> Result<SpectralModel> {
    match cfg.get("model-file") {
        Some(path) => SpectralModel::from_file(Path::new(path), cfg.real("lambda")?),
        None => {
            let m: SpectralModel = cfg.text("model")?.parse()?;
            SpectralModel::new(m.kind().clone(), cfg.count("truncation")? as u64)
        }
    }
}

fn countfit(cfg: &ExperimentConfig) -> Result<Outcome> {
    let m = model(cfg)?;
    let (s_min, s_max, n) = (cfg.real("s-min")?, cfg.real("s-max")?, cfg.count("points")?);
    let fit = fit_trace_exponent(&m, s_min, s_max, n)?;
    let rows: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            let s = s_min * (s_max / s_min).powf(i as f64 / (n - 1) as f64);
            Ok([s, m.counting_function(s)?])
        })
        .collect::<Result<_>>()?;
    Ok(Outcome {
        line: format!("lambda_hat = {} (r^2 = {:.6})", fit.lambda_hat, fit.r_squared),
        csv: Some(csv_rows("s,N", rows.iter().map(|r| &r[..]))),
        summary: json!({ "lambda_hat": fit.lambda_hat, "r_squared": fit.r_squared, "nominal": m.nominal_lambda() }),
    })
}

fn countfit_checks() -> Vec<(String, bool)> {
    let m = SpectralModel::prescribed_exponent(1.7).unwrap();
    let fit = fit_trace_exponent(&m, 1e2, 3e3, 64);
    vec![check("prescribed exponent 1.7 is recovered", fit.is_ok_and(|f| (f.lambda_hat / 1.7 - 1.0).abs() < 0.01))]
}

fn window(cfg: &ExperimentConfig) -> Result<((f64, f64), usize)> {
    Ok(((cfg.real("t-a")?, cfg.real("t-b")?), cfg.count("times")?))
}

fn decay(cfg: &ExperimentConfig) -> Result<Outcome> {
    let kind = propagator_kind(cfg)?;
    let n = cfg.count("n")?;
    let grid = TorusGrid::new(n, cfg.count("points")?)?;
    let m = SpectralModel::torus_laplacian(n)?;
    let (p, q) = (cfg.real("p")?, cfg.real("q")?);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.count("seed")? as u64);
    let w0 = random_mean_zero_field(grid, cfg.count("k-max")?, p, &mut rng)?;
    let (win, times) = window(cfg)?;
    let r = decay_slope(&m, &kind, p, q, &w0, win, times)?;
    Ok(Outcome {
        line: format!("slope = {:.4}, envelope C = {:.4}", r.slope, r.envelope_constant),
        csv: Some(r.to_csv()),
        summary: json!({ "slope": r.slope, "envelope_constant": r.envelope_constant, "gap_time": r.gap_time }),
    })
}

fn decay_checks() -> Vec<(String, bool)> {
    let run = || -> Result<bool> {
        let grid = TorusGrid::new(1, 16)?;
        let w0 = FieldOnTorus::from_fn(grid, |x| Complex64::new(x[0].sin(), 0.0))?;
        let r = decay_slope(&SpectralModel::torus_laplacian(1)?, &PropagatorKind::Heat, 2.0, 2.0, &w0, (0.1, 1.0), 8)?;
        Ok(r.rows.iter().all(|row| (row.ratio - (-row.t).exp()).abs() < 1e-12))
    };
    vec![check("single mode decays as exp(-t)", run().unwrap_or(false))]
}

fn driver(cfg: &ExperimentConfig) -> Result<BoundDriver> {
    match cfg.text("kernel")? {
        "heat" => Ok(BoundDriver::Heat),
        k => Ok(BoundDriver::Kernel(k.parse()?)),
    }
}

fn bound(cfg: &ExperimentConfig) -> Result<Outcome> {
    let m = model(cfg)?;
    let d = driver(cfg)?;
    let (p, q) = (cfg.real("p")?, cfg.real("q")?);
    let (win, n) = window(cfg)?;
    let times = crate::evolve::log_times(win, n)?;
    let rows: Vec<[f64; 2]> = times.iter().map(|&t| Ok([t, bound_function(&m, &d, p, q, t)?])).collect::<Result<_>>()?;
    let slope = bound_slope(&m, &d, p, q, win, n)?;
    Ok(Outcome {
        line: format!("slope = {slope:.4}"),
        csv: Some(csv_rows("t,bound_B", rows.iter().map(|r| &r[..]))),
        summary: json!({ "slope": slope }),
    })
}

fn bound_checks() -> Vec<(String, bool)> {
    let m = SpectralModel::prescribed_exponent(1.0).unwrap();
    let b = bound_function(&m, &BoundDriver::Heat, 2.0, 2.0, 1.0);
    vec![check("p = q = 2 gives B = 1", b.is_ok_and(|v| v == 1.0))]
}

fn region(cfg: &ExperimentConfig) -> Result<Outcome> {
    let r = region_sample(cfg.real("p0")?, cfg.real("lambda")?, triple_kind(cfg)?, cfg.count("resolution")?)?;
    let count = r.points().count();
    Ok(Outcome {
        line: if r.empty { "empty".into() } else { format!("nonempty ({count} admissible points)") },
        csv: Some(r.to_csv()),
        summary: json!({ "empty": r.empty, "admissible_points": count }),
    })
}

fn region_checks() -> Vec<(String, bool)> {
    use crate::admiss::{is_admissible, TripleSpec};
    let heat = |r, q, p| TripleSpec { r, q, p, kind: TripleKind::Heat };
    vec![
        check("(2,4,2) at lambda = 2 is a boundary case", !is_admissible(&heat(2.0, 4.0, 2.0), 2.0)),
        check("(1,2,2) at lambda = 2 is admissible", is_admissible(&heat(1.0, 2.0, 2.0), 2.0)),
        check("p0 = 1.5, lambda = 6 is empty", region_sample(1.5, 6.0, TripleKind::Heat, 50).is_ok_and(|r| r.empty)),
    ]
}

fn picard(cfg: &ExperimentConfig) -> Result<Outcome> {
    let kind = propagator_kind(cfg)?;
    let n = cfg.count("n")?;
    let grid = TorusGrid::new(n, cfg.count("points")?)?;
    let p0 = cfg.real("p0")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.count("seed")? as u64);
    let w0 = random_mean_zero_field(grid, cfg.count("k-max")?, p0, &mut rng)?.scaled_to_norm(p0, cfg.real("norm-w0")?)?;
    let mut req = PicardRequest::new(kind, cfg.real("eta")?, cfg.real("mu")?, w0, cfg.real("t-max")?, cfg.real("dt")?);
    req.tol = cfg.real("tol")?;
    req.max_iter = cfg.count("max-iter")?;
    req.p0 = p0;
    let r = picard_solve(&SpectralModel::torus_laplacian(n)?, &req)?;
    let rows: Vec<[f64; 2]> =
        r.times.iter().zip(&r.trajectory).map(|(&t, w)| Ok([t, w.lp_norm(p0)?])).collect::<Result<_>>()?;
    let worst = r.contraction_ratios.iter().copied().fold(0.0, f64::max);
    Ok(Outcome {
        line: format!("converged in {} iterations, max ratio {worst:.3}, residual {:e}", r.iterations, r.residual),
        csv: Some(csv_rows("t,norm_p0", rows.iter().map(|r| &r[..]))),
        summary: json!({
            "iterations": r.iterations,
            "contraction_ratios": r.contraction_ratios,
            "increments": r.increments,
            "residual": r.residual,
        }),
    })
}

fn picard_checks() -> Vec<(String, bool)> {
    let run = |mu: f64| -> Result<usize> {
        let grid = TorusGrid::new(1, 16)?;
        let w0 = FieldOnTorus::new(grid, vec![Complex64::new(0.0, 0.0); 16])?;
        let req = PicardRequest::new(PropagatorKind::Heat, 3.0, mu, w0, 0.1, 0.01);
        Ok(picard_solve(&SpectralModel::torus_laplacian(1)?, &req)?.iterations)
    };
    vec![
        check("zero data, mu = +1: one iteration", run(1.0).is_ok_and(|n| n == 1)),
        check("zero data, mu = -1: one iteration", run(-1.0).is_ok_and(|n| n == 1)),
    ]
}
