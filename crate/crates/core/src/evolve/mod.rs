//! Diagonal evolution on a spectral model: scalar propagators, fields on the
//! torus, Duhamel forcing, mixed norms, decay bounds and Picard iteration.

mod bound;
mod duhamel;
mod norms;
mod picard;
mod propagator;
mod torus;

pub use bound::{
    bound_function, bound_search, bound_slope, decay_slope, log_times, BoundDriver, BoundValue, DecayReport, DecayRow,
};
pub use duhamel::{duhamel, DuhamelPlan};
pub use norms::{mixed_norm, MixedNormSpec, Trajectory};
pub use picard::{picard_solve, PicardReport, PicardRequest};
pub use propagator::{
    evolve_linear, propagator_matrix, propagator_value, wave_pair, PropagatorKind, ResolventTable,
};
pub use torus::{
    analyze, random_mean_zero_field, synthesize, synthesize_coeffs, FieldOnTorus, TorusCoeffs, TorusGrid,
};
