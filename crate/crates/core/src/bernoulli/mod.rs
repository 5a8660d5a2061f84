//! Bernoulli polynomials and the summation formulas built on them.

mod poly;
mod summation;
mod watson;

pub use poly::{
    bernoulli_number, bernoulli_poly, faulhaber_sum, periodic_bernoulli, periodic_bernoulli_ball, periodic_bernoulli_exact,
    raabe_residual,
    BernoulliPoly, MAX_DEGREE,
};
pub use summation::{
    euler_gamma, euler_gamma_with, euler_maclaurin, euler_maclaurin_tail, harmonic_residual,
    periodic_sup_over_factorial, stirling_check, EulerMaclaurin, Log, LogShiftCombination, Polynomial, Reciprocal,
    SmoothFunction,
};
pub use watson::{watson_asymptotic, watson_csc_sum, watson_direct, WatsonSum};
