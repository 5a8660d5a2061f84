//! Integer-part identities, Legendre symbols through Gauss's lemma and the
//! divisor summatory function.

use crate::arith::{HPFloat, Real, SurdOrRational};
use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// `[q x]`, exact for rational and surd `x`.
fn floor_scaled(x: &Real, q: &Rational) -> Result<Integer> {
    match x.as_exact() {
        Some(SurdOrRational::Rational(r)) => Ok((r * q).floor().numer().clone()),
        Some(SurdOrRational::Surd(s)) => floor_exact(&s.mul_rational(q)),
        None => crate::arith::adaptive(128, |p| x.enclosure(p + 64).mul_rational(q).floor()),
    }
}

fn floor_exact(v: &SurdOrRational) -> Result<Integer> {
    Ok(match v {
        SurdOrRational::Rational(r) => r.clone().floor().numer().clone(),
        SurdOrRational::Surd(s) => s.floor(),
    })
}

/// `[k / x]` for irrational `x`.
fn floor_over(k: u64, x: &Real) -> Result<Integer> {
    match x.as_exact() {
        Some(SurdOrRational::Surd(s)) => match s.recip() {
            SurdOrRational::Surd(r) => floor_exact(&r.mul_rational(&Rational::from(k))),
            SurdOrRational::Rational(_) => unreachable!("the reciprocal of a surd is a surd"),
        },
        _ => crate::arith::adaptive(128, |p| {
            let bits = 64 - k.leading_zeros();
            HPFloat::from_int(p + bits, k).div_ball(&x.enclosure(p + bits + 32)).floor()
        }),
    }
}

/// `sum_{k<n} [x + k/n] = [n x]`.
pub fn hermite_identity(x: &Real, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let lhs = (0..n).try_fold(Integer::new(), |s, k| {
        let shifted = match x.as_exact() {
            Some(SurdOrRational::Rational(r)) => (r + Rational::from((k, n))).floor().numer().clone(),
            Some(SurdOrRational::Surd(s)) => floor_exact(&s.add_rational(&Rational::from((k, n))))?,
            None => crate::arith::adaptive(128, |p| x.enclosure(p).add_rational(&Rational::from((k, n))).floor())?,
        };
        Ok::<_, Error>(s + shifted)
    })?;
    Ok(lhs == floor_scaled(x, &Rational::from(n))?)
}

/// `sum_{k<=n} [k x] + sum_{k<=[n x]} [k / x] = n [n x]` for irrational `x > 0`.
pub fn gauss_identity(x: &Real, n: u64) -> Result<bool> {
    if x.is_rational() {
        return Err(Error::InvalidArgument("x must be irrational".into()));
    }
    if !x.enclosure(64).definitely_positive() {
        return Err(Error::InvalidArgument("x must be positive".into()));
    }
    let nx = floor_scaled(x, &Rational::from(n))?;
    let mut lhs = Integer::new();
    for k in 1..=n {
        lhs += floor_scaled(x, &Rational::from(k))?;
    }
    let top = nx.to_u64().ok_or_else(|| Error::InvalidArgument("[n x] too large".into()))?;
    for k in 1..=top {
        lhs += floor_over(k, x)?;
    }
    Ok(lhs == nx * n)
}

/// `sum_{k=1}^{n-1} [k m / n]` by direct summation, checked against `(m-1)(n-1)/2`.
pub fn stern_sum(m: u64, n: u64) -> Result<Integer> {
    if m == 0 || n == 0 || Integer::from(m).gcd(&Integer::from(n)) != 1 {
        return Err(Error::InvalidArgument(format!("{m} and {n} must be positive and coprime")));
    }
    let direct = (1..n).fold(Integer::new(), |s, k| s + Integer::from(k) * m / n);
    let closed = Integer::from(m - 1) * (n - 1) / 2u32;
    debug_assert_eq!(direct, closed);
    Ok(direct)
}

fn odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || Integer::from(p).is_probably_prime(30) == rug::integer::IsPrime::No {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(())
}

fn distinct_odd_primes(q: u64, p: u64) -> Result<()> {
    odd_prime(p)?;
    odd_prime(q)?;
    if p == q {
        return Err(Error::InvalidArgument("p and q must differ".into()));
    }
    Ok(())
}

/// `(a/p)` by Euler's criterion `a^((p-1)/2) mod p`.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    odd_prime(p)?;
    let pp = Integer::from(p);
    let a = (Integer::from(a) % &pp + &pp) % &pp;
    if a == 0 {
        return Err(Error::InvalidArgument(format!("{p} divides a")));
    }
    let e = a.pow_mod(&Integer::from((p - 1) / 2), &pp).expect("positive modulus");
    Ok(if e == 1 { 1 } else { -1 })
}

/// `mu(q, p)`: how many of the residues `k q mod p`, `1 <= k <= (p-1)/2`, exceed `(p-1)/2`.
pub fn gauss_mu(q: u64, p: u64) -> Result<u64> {
    distinct_odd_primes(q, p)?;
    let h = (p - 1) / 2;
    Ok((1..=h).filter(|k| (u128::from(*k) * u128::from(q) % u128::from(p)) as u64 > h).count() as u64)
}

/// `S(q, p) = sum_{j=1}^{(p-1)/2} [j q / p]`.
pub fn s_sum(q: u64, p: u64) -> Result<u64> {
    distinct_odd_primes(q, p)?;
    Ok((1..=(p - 1) / 2).map(|j| (u128::from(j) * u128::from(q) / u128::from(p)) as u64).sum())
}

#[derive(Clone, Debug)]
pub struct DivisorSumIdentity {
    pub n: u64,
    /// `sum_{k<=n} d(k)` from a divisor-count sieve.
    pub lhs: Integer,
    /// `sum_{k<=n} [n/k]`.
    pub rhs: Integer,
    /// `2 sum_{k<=sqrt n} [n/k] - [sqrt n]^2`.
    pub hyperbola: Integer,
    /// `lhs - n log n - (2 gamma - 1) n`.
    pub residual: HPFloat,
    /// `|residual| / sqrt n`.
    pub scaled: HPFloat,
}

impl DivisorSumIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.rhs == self.hyperbola
    }
}

/// `sum_{k<=n} [n/k]` in `O(sqrt n)` steps.
pub fn divisor_sum_hyperbola(n: u64) -> Integer {
    let s = n.isqrt();
    let half = (1..=s).fold(Integer::new(), |acc, k| acc + n / k);
    half * 2u32 - Integer::from(s) * s
}

pub fn divisor_sum_identity(n: u64) -> Result<DivisorSumIdentity> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let len = usize::try_from(n).map_err(|_| Error::InvalidArgument("n too large".into()))?;
    let mut d = vec![0u32; len + 1];
    for k in 1..=len {
        for m in (k..=len).step_by(k) {
            d[m] += 1;
        }
    }
    let lhs = d.iter().fold(Integer::new(), |s, &v| s + v);
    let rhs = (1..=n).fold(Integer::new(), |s, k| s + n / k);
    let hyperbola = divisor_sum_hyperbola(n);
    let p = 128;
    let nb = HPFloat::from_int(p, n);
    let main = nb.mul_ball(&nb.ln()).add_ball(&HPFloat::euler_gamma(p).mul_2exp(1).add_i64(-1).mul_ball(&nb));
    let residual = HPFloat::from_int(p, lhs.clone()).sub_ball(&main);
    let scaled = residual.abs().div_ball(&nb.sqrt());
    Ok(DivisorSumIdentity { n, lhs, rhs, hyperbola, residual, scaled })
}
