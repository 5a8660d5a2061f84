//! Continued fractions: verified expansions, Ostrowski numeration, the Gauss
//! map and measure, and Diophantine type.

mod classify;
mod expansion;
mod gauss;
mod ostrowski;
mod parse;

pub use classify::{classify_type, DiophClassification, TypeRow};
pub use expansion::{
    best_approx_verify, cf_expand, cf_expand_until, value_of, BestApproxReport, ContinuedFractionExpansion, Period,
    BEST_APPROX_HORIZON,
};
pub use gauss::{
    cylinder_interval, gauss_density, gauss_map, gauss_map_exact, gauss_measure, gauss_measure_preimage,
    gauss_orbit_surd, pf_operator_apply, Cylinder,
};
pub use ostrowski::{brown_shiue_sum, brown_shiue_with, fracpart_sum_direct, is_legal, ostrowski_expand, OstrowskiDigits};
pub(crate) use ostrowski::{FixedMultiples, FIX_BITS};
pub use parse::{parse_quotients, MAX_QUOTIENTS};
