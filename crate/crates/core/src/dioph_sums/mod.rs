//! Sums of `1/‖jx‖`, `1/(j‖jx‖)`, `‖jx‖` and `1/|sin(pi j x)|`, the bounds
//! they satisfy for numbers of bounded type, and sweeps over `m`.

mod bounds;
mod kernel;
mod nathanson;
mod sums;
mod sweep;

pub use bounds::{
    bound_h0, bound_hhalpha, bound_jalpha, bound_lower, empirical_certificate, fast_growth_counterexample,
    fast_growth_quotients, surd_certificate, GrowthCheck, PsiCertificate, SumRecord, TypeFunction,
};
pub use nathanson::{nathanson_sums, NathansonParams, NathansonRow, NathansonSums};
pub use sums::{
    cumulative_sums, fracpart_sum, m_log_m, norm_sum_drift, segment_consistency, sine_sandwich, sum_of,
    sum_norm, sum_recip_jnorm, sum_recip_norm, sum_recip_sin, SineSandwich, SumKind, SUM_HORIZON,
};
pub use sweep::{sweep, Normalize, SweepRange};

pub(crate) use kernel::MultipleNorms;
