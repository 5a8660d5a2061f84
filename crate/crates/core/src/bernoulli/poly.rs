use crate::arith::{HPFloat, Real, SurdOrRational};
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Integer, Rational};
use std::sync::OnceLock;

/// Largest degree held in the coefficient table.
pub const MAX_DEGREE: u32 = 200;

/// `B_k(x)` with exact rational coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliPoly {
    coeffs: Vec<Rational>,
}

static TABLE: OnceLock<Vec<BernoulliPoly>> = OnceLock::new();

fn table() -> &'static [BernoulliPoly] {
    TABLE.get_or_init(|| {
        let mut polys = vec![BernoulliPoly { coeffs: vec![Rational::from(1)] }];
        for k in 1..=MAX_DEGREE as usize {
            // B_k' = k B_{k-1}, then fix the constant so that the integral over [0,1] vanishes.
            let prev = &polys[k - 1].coeffs;
            let mut coeffs = Vec::with_capacity(k + 1);
            coeffs.push(Rational::new());
            for (j, c) in prev.iter().enumerate() {
                coeffs.push(Rational::from(c * k as u32) / (j as u32 + 1));
            }
            let integral: Rational = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| Rational::from(c / (j as u32 + 1)))
                .sum();
            coeffs[0] = -integral;
            polys.push(BernoulliPoly { coeffs });
        }
        polys
    })
}

/// The cached polynomial `B_k`.
pub fn bernoulli_poly(k: u32) -> Result<&'static BernoulliPoly> {
    if k > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!("Bernoulli degree {k} exceeds {MAX_DEGREE}")));
    }
    Ok(&table()[k as usize])
}

/// `B_k = B_k(0)`, with `B_1 = -1/2`.
pub fn bernoulli_number(k: u32) -> Result<Rational> {
    Ok(bernoulli_poly(k)?.coeffs[0].clone())
}

impl BernoulliPoly {
    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_ball(&self, x: &HPFloat) -> HPFloat {
        let p = x.prec();
        let mut acc = HPFloat::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ball(x).add_ball(&HPFloat::from_rational(p + 16, c)).with_prec(p);
        }
        acc
    }

    pub fn derivative(&self) -> Vec<Rational> {
        self.coeffs.iter().enumerate().skip(1).map(|(j, c)| Rational::from(c * j as u32)).collect()
    }
}

/// `P_k(t) = B_k(R(t))` for an exact rational `t`.
pub fn periodic_bernoulli_exact(k: u32, t: &Rational) -> Result<Rational> {
    let r = t - t.clone().floor() ;
    Ok(bernoulli_poly(k)?.eval_rational(&r))
}

/// `P_k(t) = B_k(R(t))`, the periodic Bernoulli function.
pub fn periodic_bernoulli(k: u32, t: &Real, prec: u32) -> Result<HPFloat> {
    if k == 0 {
        return Err(Error::InvalidArgument("periodic Bernoulli functions start at k = 1".into()));
    }
    if let Some(q) = t.as_rational() {
        return Ok(HPFloat::from_rational(prec, &periodic_bernoulli_exact(k, &q)?));
    }
    crate::arith::adaptive(prec, |p| periodic_bernoulli_ball(k, &t.enclosure(p)))
}

/// `P_k` on a ball; fails when the ball straddles an integer and `k = 1`.
pub fn periodic_bernoulli_ball(k: u32, t: &HPFloat) -> Result<HPFloat> {
    if k == 0 {
        return Err(Error::InvalidArgument("periodic Bernoulli functions start at k = 1".into()));
    }
    let poly = bernoulli_poly(k)?;
    Ok(poly.eval_ball(&t.fract()?))
}

/// `sum_{a <= m <= b} m^k` via `(B_{k+1}(b+1) - B_{k+1}(a)) / (k+1)`.
pub fn faulhaber_sum(a: u64, b: u64, k: u32) -> Result<Rational> {
    if a == 0 || a > b {
        return Err(Error::InvalidArgument(format!("need 1 <= a <= b, got a={a}, b={b}")));
    }
    let poly = bernoulli_poly(k + 1)?;
    let hi = poly.eval_rational(&Rational::from(Integer::from(b) + 1));
    let lo = poly.eval_rational(&Rational::from(a));
    Ok((hi - lo) / (k + 1))
}

/// `|q B_k(qx) - q^k sum_{j<q} B_k(x + j/q)|`, which vanishes identically.
pub fn raabe_residual(k: u32, q: u32, x: &Real, prec: u32) -> Result<HPFloat> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let poly = bernoulli_poly(k)?;
    let qk = Integer::from(q).pow(k);
    if let Some(SurdOrRational::Rational(xr)) = x.as_exact() {
        let lhs = poly.eval_rational(&Rational::from(&xr * q)) * q;
        let mut rhs = Rational::new();
        for j in 0..q {
            rhs += poly.eval_rational(&(xr.clone() + Rational::from((j, q))));
        }
        let diff = lhs - rhs * qk;
        return Ok(HPFloat::from_rational(prec, &diff.abs()));
    }
    let xb = x.enclosure(prec);
    let lhs = poly.eval_ball(&xb.mul_u64(q as u64)).mul_u64(q as u64);
    let mut rhs = HPFloat::zero(prec);
    for j in 0..q {
        rhs = rhs.add_ball(&poly.eval_ball(&xb.add_rational(&Rational::from((j, q)))));
    }
    Ok(lhs.sub_ball(&rhs.mul_int(&qk)).abs())
}
