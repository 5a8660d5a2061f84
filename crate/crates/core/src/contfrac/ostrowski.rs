//! Ostrowski numeration and the digit formula for `sum_{k<=m} (R(kx) - 1/2)`.

use super::expansion::{cf_expand_until, ContinuedFractionExpansion};
use crate::arith::{default_precision, HPFloat, Real, SurdOrRational};
use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// `m = sum_{k=1}^t z_k q_{k-1}` in the numeration system of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OstrowskiDigits {
    pub m: u64,
    /// `z_1, ..., z_t`.
    pub z: Vec<u64>,
}

impl OstrowskiDigits {
    pub fn t(&self) -> usize {
        self.z.len()
    }

    /// `m_k = sum_{j<=k} z_j q_{j-1}`, for `k = 0..=t`.
    pub fn partial_sums(&self, q: &[Integer]) -> Vec<u64> {
        let mut out = vec![0u64];
        let mut acc = 0u64;
        for (j, z) in self.z.iter().enumerate() {
            acc += z * q[j].to_u64().expect("q_{k-1} <= m");
            out.push(acc);
        }
        out
    }
}

/// Checks the digit constraints against the partial quotients `a_1, a_2, ...`.
pub fn is_legal(z: &[u64], a: &[Integer]) -> bool {
    if z.last() == Some(&0) || z.len() > a.len() {
        return false;
    }
    for (k, &zk) in z.iter().enumerate() {
        let ak = &a[k];
        let cap = if k == 0 { Integer::from(ak - 1u32) } else { ak.clone() };
        if zk > cap {
            return false;
        }
        if k + 1 < z.len() && a[k + 1] == z[k + 1] && zk != 0 {
            return false;
        }
    }
    true
}

/// Greedy digits from the largest `q_{k-1} <= m` downward.
pub fn ostrowski_expand(m: u64, e: &ContinuedFractionExpansion) -> Result<OstrowskiDigits> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let q = e.q();
    let last = q.last().expect("q_0 exists");
    if *last <= m {
        return Err(Error::InsufficientConvergents { m: m.to_string(), largest: last.to_string() });
    }
    // q_{t-1} <= m < q_t
    let t = q.iter().position(|qk| *qk > m).expect("checked above");
    let mut z = vec![0u64; t];
    let mut rem = m;
    for k in (1..=t).rev() {
        let qk = q[k - 1].to_u64().expect("q_{k-1} <= m");
        z[k - 1] = rem / qk;
        rem %= qk;
    }
    while z.last() == Some(&0) {
        z.pop();
    }
    let digits = OstrowskiDigits { m, z };
    debug_assert!(is_legal(&digits.z, e.a()));
    Ok(digits)
}

/// `sum_{k=1}^t (-1)^k z_k (1/2 - d_{k-1} (m_{k-1} + z_k q_{k-1} / 2 + 1/2))` with
/// `d_k = |q_k R(x) - p_k|`.
pub fn brown_shiue_sum(x: &Real, m: u64, prec: u32) -> Result<HPFloat> {
    if x.is_rational() {
        return Err(Error::InvalidArgument("the digit formula needs an irrational x".into()));
    }
    let e = cf_expand_until(x, &Integer::from(m))?;
    brown_shiue_with(&e, m, prec)
}

/// Same as [`brown_shiue_sum`] on a prepared expansion.
pub fn brown_shiue_with(e: &ContinuedFractionExpansion, m: u64, prec: u32) -> Result<HPFloat> {
    let digits = ostrowski_expand(m, e)?;
    let ms = digits.partial_sums(e.q());
    let w = prec + 2 * 64;
    let half = Rational::from((1, 2));
    let mut acc = HPFloat::zero(w);
    for (i, &zk) in digits.z.iter().enumerate() {
        if zk == 0 {
            continue;
        }
        let k = i + 1;
        let qk1 = &e.q()[k - 1];
        // m_{k-1} + z_k q_{k-1}/2 + 1/2, exact
        let inner = Rational::from(ms[k - 1]) + Rational::from((Integer::from(qk1 * zk) + 1u32, 2));
        let term = HPFloat::from_rational(w, &half).sub_ball(&e.d(k - 1, w).mul_rational(&inner)).mul_u64(zk);
        acc = if k % 2 == 0 { acc.add_ball(&term) } else { acc.sub_ball(&term) };
    }
    Ok(acc.with_prec(prec))
}

/// Fixed-point enclosure `[lo, hi] / 2^FIX_BITS` of `R(x)`, so that `[k x]` is two `u128` products.
pub(crate) const FIX_BITS: u32 = 96;

#[derive(Clone, Debug)]
pub(crate) struct FixedMultiples {
    lo: u128,
    hi: u128,
}

impl FixedMultiples {
    pub(crate) fn new(frac: &HPFloat) -> Option<FixedMultiples> {
        let scale = |v: rug::Float| (v << FIX_BITS as i32).floor().to_integer();
        let lo = scale(frac.lower())?;
        let hi = scale(frac.upper())? + 1u32;
        if lo < 0 || hi > Integer::from(1) << FIX_BITS {
            return None;
        }
        Some(FixedMultiples { lo: lo.to_u128()?, hi: hi.to_u128()? })
    }

    /// `R(k x)` lies in `[lo, hi] / 2^FIX_BITS`, for `k < 2^31`.
    pub(crate) fn frac_bounds(&self, k: u64) -> Option<(u128, u128)> {
        debug_assert!(k < 1 << 31);
        let a = self.lo * k as u128;
        let b = self.hi * k as u128;
        let mask = (1u128 << FIX_BITS) - 1;
        (a >> FIX_BITS == b >> FIX_BITS && b & mask != 0).then_some((a & mask, b & mask))
    }

    /// Certified `[k R(x)]` for `k < 2^31`.
    pub(crate) fn floor(&self, k: u64) -> Option<u64> {
        debug_assert!(k < 1 << 31);
        let a = (self.lo * k as u128) >> FIX_BITS;
        let b = (self.hi * k as u128) >> FIX_BITS;
        // hi is strictly above R(x), so equal floors at both ends certify [k x] unless k*hi lands on an integer
        let exact_edge = (self.hi * k as u128) & ((1u128 << FIX_BITS) - 1) == 0;
        (a == b && !exact_edge).then_some(a as u64)
    }
}

/// `sum_{k=1}^m (R(kx) - 1/2)` by direct summation of exact floors.
pub fn fracpart_sum_direct(x: &Real, m: u64, prec: u32) -> Result<HPFloat> {
    if m >= 1 << 31 {
        return Err(Error::HorizonExceeded { required: m.to_string(), horizon: (1u64 << 31).to_string() });
    }
    let tri = Integer::from(m) * (m + 1) / 2u32;
    if let Some(SurdOrRational::Rational(r)) = x.as_exact() {
        let frac = &r - r.clone().floor();
        let mut floors = Integer::new();
        for k in 1..=m {
            floors += Rational::from(&frac * k).floor().numer();
        }
        let v = frac * tri - floors - Rational::from((m, 2));
        return Ok(HPFloat::from_rational(prec, &v));
    }
    crate::arith::adaptive(prec.max(default_precision()), |p| {
        let w = p + 64;
        let xb = x.enclosure(w);
        let n = xb.floor()?;
        let frac = xb.sub_exact_int(&n);
        let fixed = FixedMultiples::new(&frac).ok_or(Error::IntervalStraddlesInteger)?;
        let mut floors = Integer::new();
        for k in 1..=m {
            let f = match fixed.floor(k) {
                Some(f) => f,
                None => frac.mul_u64(k).floor()?.to_u64().expect("k R(x) < k"),
            };
            floors += f;
        }
        // R(x) m(m+1)/2 - sum [k R(x)] - m/2
        let v = frac.mul_int(&tri).sub_ball(&HPFloat::from_int(w, floors)).sub_ball(&HPFloat::from_rational(w, &Rational::from((m, 2))));
        Ok(v.with_prec(prec))
    })
}
