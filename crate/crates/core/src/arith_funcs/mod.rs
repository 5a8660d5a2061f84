//! Farey fractions and Ford circles, integer-part identities, quadratic
//! residues, divisor sums and the ternary Goldbach count.

mod farey;
mod goldbach;
mod identities;

pub use farey::{
    farey, ford_tangency, franel_landau_sum, mertens_ratio, totient_sum, totients, FareySequence, FordCircle,
    FordContact,
};
pub use goldbach::{goldbach_ratio, prime_sieve, singular_factor, singular_series, ternary_r, GoldbachRatio};
pub use identities::{
    divisor_sum_hyperbola, divisor_sum_identity, gauss_identity, gauss_mu, hermite_identity, legendre, s_sum,
    stern_sum, DivisorSumIdentity,
};
