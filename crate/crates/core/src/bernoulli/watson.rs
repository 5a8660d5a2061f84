//! `S_n = sum_{m=1}^{n-1} csc(m pi / n)` and its asymptotic series.

use super::poly::bernoulli_number;
use super::summation::euler_gamma;
use crate::arith::HPFloat;
use crate::error::{Error, Result};
use rug::{Complete, Integer, Rational};

#[derive(Clone, Debug)]
pub struct WatsonSum {
    pub n: u64,
    pub terms: u32,
    pub direct: HPFloat,
    pub asymptotic: HPFloat,
}

/// Direct cosecant sum, pairing `m` with `n - m`.
pub fn watson_direct(n: u64, prec: u32) -> Result<HPFloat> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let w = prec + 2 * (64 - n.leading_zeros()) + 16;
    let mut acc = HPFloat::zero(w);
    for m in 1..=(n - 1) / 2 {
        let s = HPFloat::from_rational(w, &Rational::from((m, n))).sin_pi();
        acc = acc.add_ball(&s.recip());
    }
    acc = acc.mul_2exp(1);
    if n.is_multiple_of(2) {
        // csc(pi/2) = 1
        acc = acc.add_i64(1);
    }
    Ok(acc.with_prec(prec))
}

/// `(2n log 2n + 2n(gamma - log pi) + sum_{j<=J} (-1)^j B_2j^2 (2^2j - 2) pi^2j / (j (2j)! n^(2j-1))) / pi`.
pub fn watson_asymptotic(n: u64, terms: u32, prec: u32) -> Result<HPFloat> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    if 2 * terms > super::poly::MAX_DEGREE {
        return Err(Error::InvalidArgument(format!("at most {} correction terms", super::poly::MAX_DEGREE / 2)));
    }
    let w = prec + 32;
    let pi = HPFloat::pi(w);
    let nb = HPFloat::from_int(w, n);
    let gamma = euler_gamma(w)?;
    let two_n = nb.mul_2exp(1);
    let mut acc = two_n.mul_ball(&two_n.ln()).add_ball(&two_n.mul_ball(&gamma.sub_ball(&pi.ln())));
    let pi2 = pi.sqr();
    for j in 1..=terms {
        let b = bernoulli_number(2 * j)?;
        let coeff = Rational::from(b.square_ref()) * ((Integer::from(1) << (2 * j)) - 2u32)
            / (Integer::factorial(2 * j).complete() * j);
        let term = pi2.pow_u64(j as u64).mul_rational(&coeff).div_ball(&nb.pow_u64(2 * j as u64 - 1));
        acc = if j % 2 == 1 { acc.sub_ball(&term) } else { acc.add_ball(&term) };
    }
    Ok(acc.div_ball(&pi).with_prec(prec))
}

pub fn watson_csc_sum(n: u64, terms: u32, prec: u32) -> Result<WatsonSum> {
    Ok(WatsonSum {
        n,
        terms,
        direct: watson_direct(n, prec)?,
        asymptotic: watson_asymptotic(n, terms, prec)?,
    })
}
