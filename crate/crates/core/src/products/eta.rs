//! Dedekind sums `s(h, k)` and the transformation law of
//! `eta(tau) = e(tau/24) prod_{m>=1} (1 - e(m tau))`.

use crate::arith::{CBall, HPFloat};
use crate::error::{Error, Result};
use rug::{Integer, Rational};

const PREC: u32 = 128;

#[derive(Clone, Debug, PartialEq)]
pub struct DedekindSumValue {
    pub h: i64,
    pub k: u64,
    pub value: Rational,
}

/// `s(h, k) = sum_{r=1}^{k-1} (r/k) ((h r / k))` with the sawtooth `((t)) = t - [t] - 1/2`,
/// which never meets an integer argument when `gcd(h, k) = 1`.
pub fn dedekind_sum(h: i64, k: u64) -> Result<DedekindSumValue> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if Integer::from(h).gcd(&Integer::from(k)) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({h}, {k}) != 1")));
    }
    let kk = i128::from(k);
    let hh = i128::from(h).rem_euclid(kk);
    // s = sum r (2 (h r mod k) - k) / (2 k^2)
    let mut num = Integer::new();
    let mut acc: i128 = 0;
    for r in 1..kk {
        acc += r * (2 * (hh * r % kk) - kk);
        if acc.unsigned_abs() > 1 << 100 {
            num += acc;
            acc = 0;
        }
    }
    num += acc;
    let value = Rational::from((num, Integer::from(2) * Integer::from(k) * k));
    Ok(DedekindSumValue { h, k, value })
}

/// `q = e(tau)`, requiring `Im tau > 0`.
fn nome(tau: &CBall) -> Result<CBall> {
    if !tau.im.definitely_positive() {
        return Err(Error::InvalidArgument("Im tau must be positive".into()));
    }
    let two_pi = HPFloat::pi(tau.prec()).mul_2exp(1);
    Ok(CBall::new(tau.im.mul_ball(&two_pi).neg(), tau.re.mul_ball(&two_pi)).exp())
}

/// `eta(tau)` from `N` factors; the rest of the product is folded into the radius.
pub fn eta(tau: &CBall, n: u64) -> Result<CBall> {
    let q = nome(tau)?;
    let aq = q.abs();
    let one = CBall::one(tau.prec());
    let mut prod = one.clone();
    let mut qm = one.clone();
    for _ in 0..n {
        qm = qm.mul(&q);
        prod = prod.mul(&one.sub(&qm));
    }
    // |ln(1 - w)| <= 2|w| for |w| <= 1/2, so the tail factor is within e^L - 1 of 1
    let tail = aq.pow_u64(n + 1);
    if !tail.lt_f64(0.5) {
        return Err(Error::InvalidArgument(format!("{n} factors do not reach |q|^(N+1) < 1/2")));
    }
    let l = tail.mul_2exp(1).div_ball(&HPFloat::one(tau.prec()).sub_ball(&aq));
    let delta = l.exp().add_i64(-1);
    let pre = CBall::cis_turns(&tau.re.div_u64(24)).scale(&tau.im.div_u64(24).mul_ball(&HPFloat::pi(tau.prec()).mul_2exp(1)).neg().exp());
    let v = pre.mul(&prod);
    Ok(v.inflate(&v.abs().mul_ball(&delta)))
}

/// `|eta((a tau + b)/(c tau + d)) - eps (-i (c tau + d))^(1/2) eta(tau)|` with
/// `eps = e((a + d)/(24 c) - s(d, c)/2)` for `c > 0`. A matrix with `c = 0` is
/// the translation `tau -> tau + b d`, where the law reads `eta(tau + b) = e(b/24) eta(tau)`.
pub fn eta_functional_residual(m: [i64; 4], tau: &CBall, n: u64) -> Result<HPFloat> {
    let [mut a, mut b, mut c, mut d] = m;
    if i128::from(a) * i128::from(d) - i128::from(b) * i128::from(c) != 1 {
        return Err(Error::InvalidArgument(format!("{m:?} is not in SL2(Z)")));
    }
    // (a, b, c, d) and its negative act identically
    if c < 0 || (c == 0 && d < 0) {
        (a, b, c, d) = (-a, -b, -c, -d);
    }
    let p = tau.prec().max(PREC);
    let tau = CBall::new(tau.re.with_prec(p), tau.im.with_prec(p));
    let int = |v: i64| CBall::real(HPFloat::from_i64(p, v));
    let rhs = if c == 0 {
        eta(&tau, n)?.mul(&CBall::cis_turns(&HPFloat::from_rational(p, &Rational::from((b, 24)))))
    } else {
        let s = dedekind_sum(d, c as u64)?.value;
        let theta = Rational::from((a + d, 24 * c)) - s / 2;
        let eps = CBall::cis_turns(&HPFloat::from_rational(p, &theta));
        let ctd = tau.scale(&HPFloat::from_i64(p, c)).add(&int(d));
        // -i w = (Im w) - i (Re w), in the right half-plane since Im w = c Im tau > 0
        let root = CBall::new(ctd.im.clone(), ctd.re.neg()).sqrt_right_half_plane();
        eta(&tau, n)?.mul(&eps).mul(&root)
    };
    let num = tau.scale(&HPFloat::from_i64(p, a)).add(&int(b));
    let den = tau.scale(&HPFloat::from_i64(p, c)).add(&int(d));
    let lhs = eta(&num.div(&den), n)?;
    Ok(lhs.sub(&rhs).abs())
}
