// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod admiss;
pub mod cli;
pub mod error;
pub mod evolve;
pub mod fraccalc;
pub mod kernels;
pub mod quadrature;
pub mod resolvent;
pub mod signal;
pub mod spectra;
pub mod specfun;
mod table;

pub use error::{Error, Result};
pub use signal::{SampledSignal, Scalar};
