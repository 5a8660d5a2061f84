//! Sine products, power-series radii, the q-binomial and Abel limits, the
//! Dedekind eta function and the partition function.

mod eta;
mod partition;
mod qseries;
mod radius;
mod sine;

pub use eta::{dedekind_sum, eta, eta_functional_residual, DedekindSumValue};
pub use partition::{partition_dp, partition_rademacher, partition_table, rademacher_a};
pub use qseries::{hecke_abel_limit, qbinomial_residual};
pub use radius::{
    construct, radius_estimate, radius_estimate_constructed, radius_relation_check, radius_relation_constructed,
    ConstructedExpansion, GrowthRate, Magnitude, RadiusEstimate, RadiusRelation,
};
pub use sine::{
    fibonacci, fibonacci_products, log_sine_product, log_two_sin_product, sin_product_geomean, two_sin_exponents,
    two_sin_product, FibonacciProducts,
};
