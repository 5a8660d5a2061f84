//! Farey fractions, the totient summatory function, the Franel–Landau sum
//! and Ford circles.

use crate::arith::HPFloat;
use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// `0/1 < ... < 1/1`: reduced fractions `h/k` in `[0, 1]` with `k <= N`.
#[derive(Clone, Debug, PartialEq)]
pub struct FareySequence {
    order: u64,
    /// `(h, k)` in increasing order.
    terms: Vec<(u64, u64)>,
}

impl FareySequence {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> &[(u64, u64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Rational> + '_ {
        self.terms.iter().map(|&(h, k)| Rational::from((h, k)))
    }
}

/// Next-term recurrence: after `a/b < c/d`, the next fraction is
/// `(j c - a)/(j d - b)` with `j = [(N + b)/d]`.
pub fn farey(n: u64) -> Result<FareySequence> {
    if n == 0 {
        return Err(Error::InvalidArgument("the order must be positive".into()));
    }
    let mut terms = vec![(0, 1), (1, n)];
    while terms.last() != Some(&(1, 1)) {
        let (a, b) = terms[terms.len() - 2];
        let (c, d) = terms[terms.len() - 1];
        let j = (n + b) / d;
        terms.push((j * c - a, j * d - b));
    }
    Ok(FareySequence { order: n, terms })
}

/// `phi(1), ..., phi(n)` by the multiplicative sieve; index 0 is unused.
pub fn totients(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

/// `Phi(N) = sum_{m<=N} phi(m)`.
pub fn totient_sum(n: u64) -> Integer {
    totients(n as usize).iter().skip(1).fold(Integer::new(), |s, &v| s + v)
}

/// `Phi(N) / (3 N^2 / pi^2)`.
pub fn mertens_ratio(n: u64) -> Result<HPFloat> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let p = 128;
    let big = HPFloat::from_int(p, totient_sum(n));
    let main = HPFloat::from_int(p, Integer::from(n) * n).mul_u64(3).div_ball(&HPFloat::pi(p).sqr());
    Ok(big.div_ball(&main))
}

/// `sum_{n=1}^{Phi(N)} |rho_n - n/Phi(N)|` over the Farey fractions `rho_n` of order `N`.
pub fn franel_landau_sum(n: u64) -> Result<Rational> {
    let f = farey(n)?;
    let big_phi = (f.len() - 1) as u64;
    // |h/k - i/Phi| = |h Phi - i k| / (k Phi), summed per denominator first
    let mut per_k = vec![Integer::new(); n as usize + 1];
    for (i, &(h, k)) in f.terms().iter().enumerate().skip(1) {
        let d = i128::from(h) * i128::from(big_phi) - i as i128 * i128::from(k);
        per_k[k as usize] += Integer::from(d.unsigned_abs());
    }
    let total = per_k
        .into_iter()
        .enumerate()
        .skip(1)
        .fold(Rational::new(), |s, (k, v)| s + Rational::from((v, k as u64)));
    Ok(total / big_phi)
}

/// The circle tangent to the real axis at `a/b` with radius `1/(2 b^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FordCircle {
    pub a: i64,
    pub b: i64,
}

impl FordCircle {
    pub fn new(a: i64, b: i64) -> Result<FordCircle> {
        if b < 1 || Integer::from(a).gcd(&Integer::from(b)) != 1 {
            return Err(Error::InvalidArgument(format!("C({a}, {b}) needs b >= 1 and gcd(a, b) = 1")));
        }
        Ok(FordCircle { a, b })
    }

    pub fn radius(&self) -> Rational {
        Rational::from((1, Integer::from(self.b).square() * 2u32))
    }

    /// `(a/b, 1/(2 b^2))`.
    pub fn center(&self) -> (Rational, Rational) {
        (Rational::from((self.a, self.b)), self.radius())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FordContact {
    /// Touching at `re + i im`.
    Tangent { re: Rational, im: Rational },
    Disjoint,
}

/// Tangent exactly when `(b c - a d)^2 = 1`; the touch point divides the
/// segment between the centres in the ratio of the radii.
pub fn ford_tangency(c1: &FordCircle, c2: &FordCircle) -> Result<FordContact> {
    if c1 == c2 {
        return Err(Error::InvalidArgument("a circle is not tangent to itself".into()));
    }
    let det = i128::from(c1.b) * i128::from(c2.a) - i128::from(c1.a) * i128::from(c2.b);
    if det * det != 1 {
        return Ok(FordContact::Disjoint);
    }
    let ((x1, y1), (x2, y2)) = (c1.center(), c2.center());
    let (r1, r2) = (c1.radius(), c2.radius());
    let t = &r1 / Rational::from(&r1 + &r2);
    let re = Rational::from(&x2 - &x1) * &t + x1;
    let im = Rational::from(&y2 - &y1) * t + y1;
    Ok(FordContact::Tangent { re, im })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn order_five() {
        let f = farey(5).unwrap();
        let want = [(0, 1), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2), (3, 5), (2, 3), (3, 4), (4, 5), (1, 1)];
        assert_eq!(f.terms(), want);
        assert_eq!(totient_sum(5), 10);
        assert_eq!(farey(1).unwrap().terms(), [(0, 1), (1, 1)]);
        assert_eq!(totient_sum(1), 1);
    }

    #[test]
    fn franel_small() {
        assert_eq!(franel_landau_sum(5).unwrap(), q(11, 30));
        assert_eq!(franel_landau_sum(2).unwrap(), 0);
        assert_eq!(franel_landau_sum(1).unwrap(), 0);
    }

    #[test]
    fn ford_examples() {
        let c = |a, b| FordCircle::new(a, b).unwrap();
        // k = k1 = 1, h = 1: 1 - 1/2 + i/2
        assert_eq!(ford_tangency(&c(0, 1), &c(1, 1)).unwrap(), FordContact::Tangent { re: q(1, 2), im: q(1, 2) });
        assert!(matches!(ford_tangency(&c(0, 1), &c(1, 2)).unwrap(), FordContact::Tangent { .. }));
        assert_eq!(ford_tangency(&c(0, 1), &c(2, 5)).unwrap(), FordContact::Disjoint);
        assert!(FordCircle::new(2, 4).is_err());
    }
}
