//! Weyl sums `sum e(h n x)`, the Erdős–Turán bracket and the quadratic sum
//! `sum e(n^2 x)`, with `e(t) = e^{2 pi i t}`.

use super::points::{discrepancy, PointSet};
use crate::arith::{CBall, HPFloat, Real};
use crate::dioph_sums::sum_recip_sin;
use crate::error::{Error, Result};
use rug::Integer;

fn bits(n: u64) -> u32 {
    64 - n.leading_zeros()
}

/// `t - round(t)`: same value of `e(t)`, small argument.
fn reduce_turns(t: &HPFloat) -> HPFloat {
    let n = t.mid().to_integer().unwrap_or_default();
    t.sub_exact_int(&n)
}

/// `h x` is an integer, so every term of the sum is 1.
fn integer_multiple(x: &Real, h: i64) -> bool {
    x.as_rational().is_some_and(|r| (r * h).is_integer())
}

/// `|sum_{n=1}^N e(h n x)| = |sin(pi h N x) / sin(pi h x)|`.
pub fn weyl_sum(x: &Real, h: i64, n: u64, prec: u32) -> Result<HPFloat> {
    if h == 0 {
        return Err(Error::InvalidArgument("h must be nonzero".into()));
    }
    if integer_multiple(x, h) {
        return Ok(HPFloat::from_int(prec, n));
    }
    let w = prec + bits(n) + bits(h.unsigned_abs()) + 32;
    let t = x.enclosure(w).mul_i64(h);
    let num = reduce_turns(&t.mul_u64(n)).sin_pi().abs();
    let den = reduce_turns(&t).sin_pi().abs();
    if !den.definitely_positive() {
        return Err(Error::PrecisionExhausted(format!("cannot separate {h}x from an integer")));
    }
    Ok(num.div_ball(&den).with_prec(prec))
}

/// The same modulus by summing the `N` unit vectors.
pub fn weyl_sum_direct(x: &Real, h: i64, n: u64, prec: u32) -> Result<HPFloat> {
    if h == 0 {
        return Err(Error::InvalidArgument("h must be nonzero".into()));
    }
    let w = prec + 2 * bits(n) + bits(h.unsigned_abs()) + 32;
    let t = x.enclosure(w).mul_i64(h);
    let mut acc = CBall::zero(w);
    for k in 1..=n {
        acc = acc.add(&CBall::cis_turns(&reduce_turns(&t.mul_u64(k))));
    }
    Ok(acc.abs().with_prec(prec))
}

/// `1/|sin(pi h x)|`, the `N`-uniform bound on the Weyl sum.
pub fn weyl_bound(x: &Real, h: i64, prec: u32) -> Result<HPFloat> {
    if integer_multiple(x, h) {
        return Err(Error::Pole(format!("sin(pi {h} x) = 0")));
    }
    let t = x.enclosure(prec + bits(h.unsigned_abs()) + 32).mul_i64(h);
    Ok(reduce_turns(&t).sin_pi().abs().recip().with_prec(prec))
}

/// `B = 1/m + sum_{j=1}^m (1/j) |N^-1 sum_{n<=N} e(j n x)|`.
pub fn erdos_turan_bracket(x: &Real, n: u64, m: u64) -> Result<HPFloat> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("N and m must be positive".into()));
    }
    let p = 128;
    let mut acc = HPFloat::one(p).div_u64(m);
    for j in 1..=m {
        let j = i64::try_from(j).map_err(|_| Error::InvalidArgument("m too large".into()))?;
        acc = acc.add_ball(&weyl_sum(x, j, n, p)?.div_u64(n).div_u64(j as u64));
    }
    Ok(acc)
}

/// `D_N` of `R(n x)` and the Erdős–Turán bracket for it.
#[derive(Clone, Debug)]
pub struct ErdosTuranRow {
    pub n: u64,
    pub m: u64,
    pub discrepancy: HPFloat,
    pub bracket: HPFloat,
    pub ratio: HPFloat,
}

pub fn erdos_turan_row(x: &Real, n: u64, m: u64, jobs: usize) -> Result<ErdosTuranRow> {
    let d = discrepancy(&PointSet::n_alpha(x, n, jobs)?);
    let b = erdos_turan_bracket(x, n, m)?;
    Ok(ErdosTuranRow { n, m, ratio: d.div_ball(&b), discrepancy: d, bracket: b })
}

/// `|sum_{n<=N} e(n^2 x)|^2` against the chained bound `N + 4 sum_{n<=4N} 1/|sin(pi n x)|`.
#[derive(Clone, Debug)]
pub struct QuadraticWeyl {
    pub n: u64,
    pub lhs_squared: HPFloat,
    /// `N + 4 sum_{n<=N} 1/|sin(4 pi n x)|`, absent when a term has a pole.
    pub intermediate: Option<HPFloat>,
    pub rhs: HPFloat,
    pub holds: bool,
}

pub fn weyl_quadratic(x: &Real, n: u64) -> Result<QuadraticWeyl> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let p = 128;
    let w = p + 2 * bits(n) + 32;
    let xb = x.enclosure(w);
    let mut acc = CBall::zero(w);
    for k in 1..=n {
        let t = xb.mul_int(&(Integer::from(k) * k));
        acc = acc.add(&CBall::cis_turns(&reduce_turns(&t)));
    }
    let lhs_squared = acc.norm_sqr().with_prec(p);
    let rhs = sum_recip_sin(x, 4 * n)?.mul_2exp(2).add_int(&Integer::from(n));
    let intermediate = (1..=n)
        .try_fold(HPFloat::zero(p), |s, k| {
            if integer_multiple(x, 4 * k as i64) {
                return None;
            }
            let t = reduce_turns(&x.enclosure(w).mul_u64(4 * k)).sin_pi().abs();
            t.definitely_positive().then(|| s.add_ball(&t.recip()))
        })
        .map(|s| s.mul_2exp(2).add_int(&Integer::from(n)));
    Ok(QuadraticWeyl { n, holds: lhs_squared.definitely_le(&rhs), lhs_squared, intermediate, rhs })
}
