//! Euler–Maclaurin summation with a rigorous remainder, Euler's constant and
//! Stirling's approximation.

use super::poly::{bernoulli_number, MAX_DEGREE};
use crate::arith::HPFloat;
use crate::error::{Error, Result};
use rug::{Complete, Integer, Rational};

/// A function with closed-form derivatives and integrals, as the summation
/// formula needs them.
pub trait SmoothFunction {
    /// `f^(k)(x)`.
    fn derivative(&self, k: u32, x: &HPFloat) -> HPFloat;

    /// `∫_a^b f`.
    fn integral(&self, a: &HPFloat, b: &HPFloat) -> HPFloat;

    /// Upper bound on `∫_a^b |f^(k)|`; `b = None` means `+∞`. An infinite
    /// ball signals divergence.
    fn abs_derivative_integral(&self, k: u32, a: &HPFloat, b: Option<&HPFloat>) -> HPFloat;

    /// `∫_a^∞ f` when it converges.
    fn integral_to_infinity(&self, _a: &HPFloat) -> Option<HPFloat> {
        None
    }
}

/// Sum estimate and a bound on the absolute remainder.
#[derive(Clone, Debug)]
pub struct EulerMaclaurin {
    pub estimate: HPFloat,
    pub remainder_bound: HPFloat,
}

impl EulerMaclaurin {
    /// Ball certainly containing the true sum.
    pub fn enclosure(&self) -> HPFloat {
        self.estimate.add_rad(self.remainder_bound.mag_upper())
    }
}

/// Upper bound on `sup |P_K| / K!`. Uses `|B_K(x)| <= 2 K! zeta(K) / (2 pi)^K`
/// for `K >= 2` with `zeta(K) <= 1 + 2^-K + 2^(1-K)/(K-1)`.
pub fn periodic_sup_over_factorial(k: u32, prec: u32) -> HPFloat {
    if k == 1 {
        return HPFloat::from_rational(prec, &Rational::from((1, 2)));
    }
    let two_k = Integer::from(1) << k;
    let zeta = Rational::from(1) + Rational::from((1, two_k.clone())) + Rational::from((2, two_k * (k - 1)));
    let two_pi_k = HPFloat::pi(prec).mul_2exp(1).pow_u64(k as u64);
    upper_point(&HPFloat::from_rational(prec, &(zeta * 2u32)).div_ball(&two_pi_k))
}

/// The point `sup x` with zero radius, for quantities used only as upper bounds.
fn upper_point(x: &HPFloat) -> HPFloat {
    HPFloat::exact(x.upper())
}

/// `(-1)^k B_k / k!` for the boundary terms.
fn boundary_coeff(k: u32) -> Result<Rational> {
    let b = bernoulli_number(k)?;
    let fact = Integer::factorial(k).complete();
    let c = b / fact;
    Ok(if k % 2 == 1 { -c } else { c })
}

fn check_order(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("Euler-Maclaurin order K must be at least 1".into()));
    }
    if k > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!("Euler-Maclaurin order K exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

/// `sum_{a < m <= b} f(m)` by Euler–Maclaurin with `K` boundary terms.
pub fn euler_maclaurin(f: &dyn SmoothFunction, a: i64, b: i64, k_max: u32, prec: u32) -> Result<EulerMaclaurin> {
    check_order(k_max)?;
    if a > b {
        return Err(Error::InvalidArgument(format!("need a <= b, got a={a}, b={b}")));
    }
    let w = prec + 32;
    let (ab, bb) = (HPFloat::from_i64(w, a), HPFloat::from_i64(w, b));
    let mut est = f.integral(&ab, &bb);
    // P_k at integers equals B_k, so each term is (-1)^k B_k / k! (f^(k-1)(b) - f^(k-1)(a)).
    for k in 1..=k_max {
        let c = boundary_coeff(k)?;
        if c == 0 {
            continue;
        }
        let diff = f.derivative(k - 1, &bb).sub_ball(&f.derivative(k - 1, &ab));
        est = est.add_ball(&diff.mul_rational(&c));
    }
    let rem = periodic_sup_over_factorial(k_max, w).mul_ball(&f.abs_derivative_integral(k_max, &ab, Some(&bb)));
    Ok(EulerMaclaurin { estimate: est.with_prec(prec), remainder_bound: upper_point(&rem) })
}

/// `sum_{m > a} f(m)` for an `f` whose derivatives vanish at infinity and
/// whose integral to infinity converges.
pub fn euler_maclaurin_tail(f: &dyn SmoothFunction, a: i64, k_max: u32, prec: u32) -> Result<EulerMaclaurin> {
    check_order(k_max)?;
    let w = prec + 32;
    let ab = HPFloat::from_i64(w, a);
    let mut est = f
        .integral_to_infinity(&ab)
        .ok_or_else(|| Error::InvalidArgument("integral to infinity diverges".into()))?;
    for k in 1..=k_max {
        let c = boundary_coeff(k)?;
        if c == 0 {
            continue;
        }
        est = est.sub_ball(&f.derivative(k - 1, &ab).mul_rational(&c));
    }
    let rem = periodic_sup_over_factorial(k_max, w).mul_ball(&f.abs_derivative_integral(k_max, &ab, None));
    if !rem.is_finite() {
        return Err(Error::InvalidArgument("remainder integral diverges".into()));
    }
    Ok(EulerMaclaurin { estimate: est.with_prec(prec), remainder_bound: upper_point(&rem) })
}

/// `(-1)^(k-1) (k-1)! / x^k`, the k-th derivative of `log x` for `k >= 1`.
fn log_derivative(k: u32, x: &HPFloat) -> HPFloat {
    let fact = Integer::factorial(k - 1).complete();
    let v = x.pow_u64(k as u64).recip().mul_int(&fact);
    if k.is_multiple_of(2) {
        v.neg()
    } else {
        v
    }
}

/// `x log x - x`, an antiderivative of `log x`.
fn xlogx_minus_x(x: &HPFloat) -> HPFloat {
    x.mul_ball(&x.ln()).sub_ball(x)
}

/// `f(x) = log x` on `x > 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Log;

impl SmoothFunction for Log {
    fn derivative(&self, k: u32, x: &HPFloat) -> HPFloat {
        if k == 0 {
            x.ln()
        } else {
            log_derivative(k, x)
        }
    }

    fn integral(&self, a: &HPFloat, b: &HPFloat) -> HPFloat {
        xlogx_minus_x(b).sub_ball(&xlogx_minus_x(a))
    }

    fn abs_derivative_integral(&self, k: u32, a: &HPFloat, b: Option<&HPFloat>) -> HPFloat {
        let p = a.prec();
        match (k, b) {
            (0, Some(b)) => self.integral(a, b).abs(),
            (0, None) | (1, None) => HPFloat::indeterminate(p),
            (1, Some(b)) => b.div_ball(a).ln(),
            (k, b) => {
                // (k-2)! (a^(1-k) - b^(1-k))
                let fact = Integer::factorial(k - 2).complete();
                let hi = a.pow_u64(k as u64 - 1).recip();
                let lo = b.map(|b| b.pow_u64(k as u64 - 1).recip()).unwrap_or_else(|| HPFloat::zero(p));
                hi.sub_ball(&lo).mul_int(&fact)
            }
        }
    }
}

/// `f(x) = 1/x` on `x > 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Reciprocal;

impl SmoothFunction for Reciprocal {
    fn derivative(&self, k: u32, x: &HPFloat) -> HPFloat {
        log_derivative(k + 1, x)
    }

    fn integral(&self, a: &HPFloat, b: &HPFloat) -> HPFloat {
        b.div_ball(a).ln()
    }

    fn abs_derivative_integral(&self, k: u32, a: &HPFloat, b: Option<&HPFloat>) -> HPFloat {
        // (k-1)! (a^-k - b^-k) for k >= 1
        let p = a.prec();
        if k == 0 {
            return match b {
                Some(b) => self.integral(a, b).abs(),
                None => HPFloat::indeterminate(p),
            };
        }
        let fact = Integer::factorial(k - 1).complete();
        let hi = a.pow_u64(k as u64).recip();
        let lo = b.map(|b| b.pow_u64(k as u64).recip()).unwrap_or_else(|| HPFloat::zero(p));
        hi.sub_ball(&lo).mul_int(&fact)
    }
}

/// Polynomial with exact rational coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Polynomial {
        Polynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial { coeffs: vec![c] }
    }

    fn derived(&self, k: u32) -> Vec<Rational> {
        let mut c = self.coeffs.clone();
        for _ in 0..k {
            c = c.iter().enumerate().skip(1).map(|(j, v)| Rational::from(v * j as u32)).collect();
        }
        c
    }

    fn eval(coeffs: &[Rational], x: &HPFloat) -> HPFloat {
        let p = x.prec();
        let mut acc = HPFloat::zero(p);
        for c in coeffs.iter().rev() {
            acc = acc.mul_ball(x).add_rational(c);
        }
        acc
    }
}

/// `sign(t) |t|^(j+1) / (j+1)`, an antiderivative of `|t|^j`.
fn abs_power_antiderivative(j: usize, t: &HPFloat) -> HPFloat {
    let v = t.abs().pow_u64(j as u64 + 1).div_u64(j as u64 + 1);
    if t.definitely_negative() {
        v.neg()
    } else {
        v
    }
}

impl SmoothFunction for Polynomial {
    fn derivative(&self, k: u32, x: &HPFloat) -> HPFloat {
        Polynomial::eval(&self.derived(k), x)
    }

    fn integral(&self, a: &HPFloat, b: &HPFloat) -> HPFloat {
        let anti: Vec<Rational> = std::iter::once(Rational::new())
            .chain(self.coeffs.iter().enumerate().map(|(j, c)| Rational::from(c / (j as u32 + 1))))
            .collect();
        Polynomial::eval(&anti, b).sub_ball(&Polynomial::eval(&anti, a))
    }

    fn abs_derivative_integral(&self, k: u32, a: &HPFloat, b: Option<&HPFloat>) -> HPFloat {
        let d = self.derived(k);
        let p = a.prec();
        if d.iter().all(|c| *c == 0) {
            return HPFloat::zero(p);
        }
        let Some(b) = b else { return HPFloat::indeterminate(p) };
        // |sum c_j t^j| <= sum |c_j| |t|^j; a and b are integers so their signs are definite.
        let mut acc = HPFloat::zero(p);
        for (j, c) in d.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let span = abs_power_antiderivative(j, b).sub_ball(&abs_power_antiderivative(j, a));
            acc = acc.add_ball(&span.mul_rational(&c.clone().abs()));
        }
        acc
    }
}

/// `f(x) = sum_i w_i log(x + c_i)` on `x > -min c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogShiftCombination {
    terms: Vec<(Rational, Rational)>,
}

impl LogShiftCombination {
    /// Terms are `(weight, shift)` pairs.
    pub fn new(terms: Vec<(Rational, Rational)>) -> LogShiftCombination {
        LogShiftCombination { terms }
    }

    fn weight_sum(&self) -> Rational {
        self.terms.iter().map(|(w, _)| w.clone()).sum()
    }

    fn moment(&self) -> Rational {
        self.terms.iter().map(|(w, c)| (w * c).complete()).sum()
    }

    fn antiderivative(&self, x: &HPFloat) -> HPFloat {
        let mut acc = HPFloat::zero(x.prec());
        for (w, c) in &self.terms {
            acc = acc.add_ball(&xlogx_minus_x(&x.add_rational(c)).mul_rational(w));
        }
        acc
    }
}

impl SmoothFunction for LogShiftCombination {
    fn derivative(&self, k: u32, x: &HPFloat) -> HPFloat {
        let mut acc = HPFloat::zero(x.prec());
        for (w, c) in &self.terms {
            let xc = x.add_rational(c);
            let d = if k == 0 { xc.ln() } else { log_derivative(k, &xc) };
            acc = acc.add_ball(&d.mul_rational(w));
        }
        acc
    }

    fn integral(&self, a: &HPFloat, b: &HPFloat) -> HPFloat {
        self.antiderivative(b).sub_ball(&self.antiderivative(a))
    }

    fn abs_derivative_integral(&self, k: u32, a: &HPFloat, b: Option<&HPFloat>) -> HPFloat {
        let p = a.prec();
        let mut acc = HPFloat::zero(p);
        for (w, c) in &self.terms {
            let ac = a.add_rational(c);
            let term = match (k, b) {
                (0, _) | (1, None) => return HPFloat::indeterminate(p),
                (1, Some(b)) => b.add_rational(c).div_ball(&ac).ln(),
                (k, b) => {
                    let fact = Integer::factorial(k - 2).complete();
                    let hi = ac.pow_u64(k as u64 - 1).recip();
                    let lo = b
                        .map(|b| b.add_rational(c).pow_u64(k as u64 - 1).recip())
                        .unwrap_or_else(|| HPFloat::zero(p));
                    hi.sub_ball(&lo).mul_int(&fact)
                }
            };
            acc = acc.add_ball(&term.mul_rational(&w.clone().abs()));
        }
        acc
    }

    /// Converges exactly when the weights and their first moment both vanish;
    /// then the antiderivative tends to zero at infinity.
    fn integral_to_infinity(&self, a: &HPFloat) -> Option<HPFloat> {
        if self.weight_sum() != 0 || self.moment() != 0 {
            return None;
        }
        Some(self.antiderivative(a).neg())
    }
}

/// `H_n - log n`, positive and nonincreasing in `n`.
pub fn harmonic_residual(n: u64, prec: u32) -> Result<HPFloat> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let w = prec + 2 * (64 - n.leading_zeros()) + 16;
    Ok(harmonic(n, w).sub_ball(&HPFloat::from_int(w, n).ln()).with_prec(prec))
}

fn harmonic(n: u64, prec: u32) -> HPFloat {
    let mut h = HPFloat::zero(prec);
    for m in 1..=n {
        h = h.add_ball(&HPFloat::one(prec).div_u64(m));
    }
    h
}

/// Euler's constant from `H_n - log n` plus a `K`-term Euler–Maclaurin tail.
pub fn euler_gamma_with(n: u64, k_max: u32, prec: u32) -> Result<HPFloat> {
    check_order(k_max)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let w = prec + 2 * (64 - n.leading_zeros()) + 16;
    let nb = HPFloat::from_int(w, n);
    let mut g = harmonic(n, w).sub_ball(&nb.ln());
    for k in 1..=k_max {
        let c = boundary_coeff(k)?;
        if c != 0 {
            g = g.sub_ball(&Reciprocal.derivative(k - 1, &nb).mul_rational(&c));
        }
    }
    // sup|P_K|/K! * (K-1)!/n^K
    let rem = periodic_sup_over_factorial(k_max, w)
        .mul_int(&Integer::factorial(k_max - 1).complete())
        .div_ball(&nb.pow_u64(k_max as u64));
    Ok(g.add_rad(rem.mag_upper()).with_prec(prec))
}

/// Euler's constant to roughly `prec` bits.
pub fn euler_gamma(prec: u32) -> Result<HPFloat> {
    if prec < 32 {
        return Err(Error::InvalidArgument(format!("precision {prec} is below 32 bits")));
    }
    // Remainder is about 2 (K / (2 pi e n))^K; take the largest K and enough n.
    let k = MAX_DEGREE;
    let target = prec as f64 + 8.0;
    let n = (k as f64 / (2.0 * std::f64::consts::PI * std::f64::consts::E) * 2f64.powf(target / k as f64)).ceil();
    if n > 1e8 {
        return Err(Error::PrecisionExhausted(format!("Euler's constant to {prec} bits needs too many terms")));
    }
    euler_gamma_with((n as u64).max(16), k, prec)
}

/// `n! / (n^n e^-n sqrt(2 pi n))`, computed from the exact factorial.
pub fn stirling_check(n: u32, prec: u32) -> Result<HPFloat> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let w = prec + 64;
    let nb = HPFloat::from_int(w, n);
    let log_fact = HPFloat::from_int(w, Integer::factorial(n).complete()).ln();
    let log_approx = nb
        .mul_ball(&nb.ln())
        .sub_ball(&nb)
        .add_ball(&HPFloat::pi(w).mul_2exp(1).mul_ball(&nb).ln().mul_2exp(-1));
    Ok(log_fact.sub_ball(&log_approx).exp().with_prec(prec))
}
