//! The partition function `p(n)`, exactly by the pentagonal recurrence and
//! approximately by the convergent series over `A_k(n)`.

use super::eta::dedekind_sum;
use crate::arith::HPFloat;
use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// `p(0), ..., p(n)` from `p(m) = sum_{j>=1} (-1)^(j+1) (p(m - j(3j-1)/2) + p(m - j(3j+1)/2))`.
pub fn partition_table(n: usize) -> Vec<Integer> {
    let mut p = vec![Integer::from(1)];
    for m in 1..=n {
        let mut s = Integer::new();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut t = p[m - g1].clone();
            if g2 <= m {
                t += &p[m - g2];
            }
            if j % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
        }
        p.push(s);
    }
    p
}

pub fn partition_dp(n: usize) -> Integer {
    partition_table(n).pop().expect("table has n + 1 entries")
}

/// `A_k(n) = sum_{0<=h<k, gcd(h,k)=1} cos(pi (s(h, k) - 2 n h / k))`.
pub fn rademacher_a(k: u64, n: u64, prec: u32) -> Result<HPFloat> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let mut acc = HPFloat::zero(prec);
    for h in 0..k {
        if Integer::from(h).gcd(&Integer::from(k)) != 1 {
            continue;
        }
        let s = dedekind_sum(h as i64, k)?.value;
        let turn = s - Rational::from((Integer::from(2 * n) * h, k));
        acc = acc.add_ball(&HPFloat::from_rational(prec, &turn).cos_pi());
    }
    Ok(acc)
}

/// `(1/(pi sqrt 2)) sum_{k<=K} A_k(n) sqrt(k) d/dn [sinh(C lambda / k) / lambda]`
/// with `lambda = sqrt(n - 1/24)`, `C = pi sqrt(2/3)`; the derivative is
/// `(c lambda cosh(c lambda) - sinh(c lambda)) / (2 lambda^3)` for `c = C/k`.
pub fn partition_rademacher(n: u64, terms: u64) -> Result<HPFloat> {
    if n == 0 || terms == 0 {
        return Err(Error::InvalidArgument("n and K must be positive".into()));
    }
    // p(n) has about pi sqrt(2n/3) / ln 2 bits
    let p = 128 + (3.7 * (n as f64).sqrt()) as u32;
    let pi = HPFloat::pi(p);
    let lambda = HPFloat::from_rational(p, &(Rational::from(n) - Rational::from((1, 24)))).sqrt();
    let big_c = pi.mul_ball(&HPFloat::from_rational(p, &Rational::from((2, 3))).sqrt());
    let mut acc = HPFloat::zero(p);
    for k in 1..=terms {
        let cl = big_c.div_u64(k).mul_ball(&lambda);
        let deriv = cl.mul_ball(&cl.cosh()).sub_ball(&cl.sinh()).div_ball(&lambda.pow_u64(3).mul_2exp(1));
        let term = rademacher_a(k, n, p)?.mul_ball(&HPFloat::from_int(p, k).sqrt()).mul_ball(&deriv);
        acc = acc.add_ball(&term);
    }
    Ok(acc.div_ball(&pi.mul_ball(&HPFloat::from_int(p, 2).sqrt())))
}
