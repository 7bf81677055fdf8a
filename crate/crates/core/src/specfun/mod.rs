//! Special functions: Γ, the two-parameter and multinomial Mittag-Leffler
//! functions, and an empirical probe of the bound |E_{α,δ}(z)| ≤ C/(1+|z|).

mod bound;
mod gamma;
mod mittag_leffler;
mod multinomial;

pub use bound::{
    ml_bound_constant, ml_bound_constant_on_ray, ml_bound_profile, ml_bound_profile_on_ray, BoundSample,
};
pub use gamma::{gamma, ln_gamma, rgamma, GAMMA_MAX_ARG};
pub use mittag_leffler::{
    mittag_leffler, mittag_leffler_numerical, mittag_leffler_real, mittag_leffler_with_method, MLParams, Method, MAX_TERMS,
    TAYLOR_RADIUS,
};
pub use multinomial::{multinomial_ml, MultiMLParams};
