//! Multinomial Mittag-Leffler function
//!
//! E_{(a_1..a_m),b}(z_1..z_m) = Σ_k Σ_{|l|=k} (k; l) Π z_i^{l_i} / Γ(b + Σ a_i l_i).
//!
//! Terms are generated level by level (fixed total degree k) in log space so
//! that neither the multinomial coefficients nor the powers overflow.

use num_complex::Complex64;

use super::gamma::ln_gamma;
use super::mittag_leffler::{mittag_leffler, MLParams, MAX_TERMS};
use crate::error::{param, Error, Result};

/// Cancellation factor Σ|terms| / |sum| beyond which the sum is not trusted.
const MAX_CANCELLATION: f64 = 1e6;

#[derive(Debug, Clone, PartialEq)]
pub struct MultiMLParams {
    a: Vec<f64>,
    b: f64,
}

impl MultiMLParams {
    pub fn new(a: Vec<f64>, b: f64) -> Result<Self> {
        if a.is_empty() {
            return Err(param("multinomial Mittag-Leffler needs at least one exponent"));
        }
        if let Some(x) = a.iter().find(|x| !(**x > 0.0) || !x.is_finite()) {
            return Err(param(format!("multinomial exponents must be > 0, got {x}")));
        }
        if !b.is_finite() {
            return Err(param("multinomial b must be finite"));
        }
        Ok(MultiMLParams { a, b })
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }
}

/// Calls `f` with every composition of `k` into `m` nonnegative parts.
fn for_each_composition(k: usize, m: usize, parts: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if m == 1 {
        parts.push(k);
        f(parts);
        parts.pop();
        return;
    }
    for first in 0..=k {
        parts.push(first);
        for_each_composition(k - first, m - 1, parts, f);
        parts.pop();
    }
}

pub fn multinomial_ml(p: &MultiMLParams, z: &[Complex64]) -> Result<Complex64> {
    if z.len() != p.m() {
        return Err(Error::Dimension(format!(
            "multinomial Mittag-Leffler has {} exponents but {} arguments",
            p.m(),
            z.len()
        )));
    }
    if p.m() == 1 {
        return mittag_leffler(MLParams::new(p.a[0], p.b)?, z[0]);
    }
    let ln_abs: Vec<f64> = z.iter().map(|w| w.norm().ln()).collect();
    let args: Vec<f64> = z.iter().map(|w| w.arg()).collect();

    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut terms = 0usize;
    let mut quiet = 0usize;
    let mut parts = Vec::with_capacity(p.m());
    for k in 0usize.. {
        let ln_kfact = ln_gamma(k as f64 + 1.0).0;
        let mut level = Complex64::new(0.0, 0.0);
        let mut level_abs = 0.0;
        let mut min_arg = f64::INFINITY;
        for_each_composition(k, p.m(), &mut parts, &mut |l| {
            terms += 1;
            let mut ln_mag = ln_kfact;
            let mut phase = 0.0;
            let mut gamma_arg = p.b;
            for (i, &li) in l.iter().enumerate() {
                if li == 0 {
                    continue;
                }
                let lf = li as f64;
                ln_mag += lf * ln_abs[i] - ln_gamma(lf + 1.0).0;
                phase += lf * args[i];
                gamma_arg += p.a[i] * lf;
            }
            min_arg = min_arg.min(gamma_arg);
            let (lg, sg) = ln_gamma(gamma_arg);
            let mag = (ln_mag - lg).exp();
            if mag > 0.0 {
                level += Complex64::from_polar(sg * mag, phase);
                level_abs += mag;
            }
        });
        sum += level;
        abs_sum += level_abs;
        if !abs_sum.is_finite() {
            return Err(Error::Convergence("multinomial Mittag-Leffler terms overflow".into()));
        }
        let scale = sum.norm().max(abs_sum * 1e-300);
        if level_abs <= 1e-16 * scale && min_arg > 2.0 {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        if terms > MAX_TERMS {
            return Err(Error::Convergence(format!(
                "multinomial Mittag-Leffler needs more than {MAX_TERMS} terms"
            )));
        }
    }
    let s = sum.norm();
    if s > 0.0 && abs_sum / s > MAX_CANCELLATION {
        return Err(Error::Accuracy(format!(
            "multinomial Mittag-Leffler cancellation factor {:.1e}",
            abs_sum / s
        )));
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::rgamma;

    #[test]
    fn zero_arguments_give_reciprocal_gamma() {
        let p = MultiMLParams::new(vec![0.3, 0.6, 0.9], 1.7).unwrap();
        let v = multinomial_ml(&p, &[Complex64::new(0.0, 0.0); 3]).unwrap();
        assert!((v.re - rgamma(1.7)).abs() < 1e-15);
    }

    #[test]
    fn compositions_count() {
        let mut n = 0;
        for_each_composition(4, 3, &mut Vec::new(), &mut |l| {
            assert_eq!(l.iter().sum::<usize>(), 4);
            n += 1;
        });
        assert_eq!(n, 15);
    }

    #[test]
    fn equal_exponents_collapse_to_single_argument() {
        // With a_1 = a_2 the multinomial sum is E_{a,b}(z_1 + z_2).
        let p = MultiMLParams::new(vec![0.7, 0.7], 1.2).unwrap();
        let z = [Complex64::new(-0.4, 0.1), Complex64::new(-0.3, 0.2)];
        let v = multinomial_ml(&p, &z).unwrap();
        let w = mittag_leffler(MLParams::new(0.7, 1.2).unwrap(), z[0] + z[1]).unwrap();
        assert!((v - w).norm() < 1e-13);
    }

    #[test]
    fn length_mismatch() {
        let p = MultiMLParams::new(vec![0.5, 0.5], 1.0).unwrap();
        assert!(matches!(multinomial_ml(&p, &[Complex64::new(0.0, 0.0)]), Err(Error::Dimension(_))));
    }

    #[test]
    fn invalid_exponents() {
        assert!(MultiMLParams::new(vec![], 1.0).is_err());
        assert!(MultiMLParams::new(vec![0.5, 0.0], 1.0).is_err());
    }
}
