//! Verified partial quotients and convergents.

use crate::arith::{default_precision, HPFloat, QuadraticSurd, Real, SurdOrRational, PRECISION_CAP};
use crate::error::{Error, Result};
use rug::{Integer, Rational};
use std::collections::HashMap;

/// Steps spent looking for the period of a surd beyond the requested length.
const CYCLE_SEARCH: usize = 100_000;

/// Eventual period of a surd's expansion: `a_{k + length} = a_k` for `k > preperiod`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Period {
    pub preperiod: usize,
    pub length: usize,
}

/// Expansion `R(x) = [a_1, a_2, ...]` with convergents `p_k / q_k` of `R(x)`,
/// `p_0 = 0`, `q_0 = 1`. The integer part `[x]` is kept separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFractionExpansion {
    x: Real,
    integer_part: Integer,
    a: Vec<Integer>,
    p: Vec<Integer>,
    q: Vec<Integer>,
    terminated: bool,
    period: Option<Period>,
}

impl ContinuedFractionExpansion {
    fn build(x: Real, integer_part: Integer, a: Vec<Integer>, terminated: bool, period: Option<Period>) -> Self {
        let mut p = vec![Integer::from(0)];
        let mut q = vec![Integer::from(1)];
        let (mut p_prev, mut q_prev) = (Integer::from(1), Integer::from(0));
        for ak in &a {
            let pn = Integer::from(ak * p.last().unwrap()) + &p_prev;
            let qn = Integer::from(ak * q.last().unwrap()) + &q_prev;
            p_prev = p.last().unwrap().clone();
            q_prev = q.last().unwrap().clone();
            p.push(pn);
            q.push(qn);
        }
        ContinuedFractionExpansion { x, integer_part, a, p, q, terminated, period }
    }

    /// The expansion of the rational `[a_1, ..., a_n]` in `(0, 1]`.
    pub fn from_quotients(a: Vec<Integer>) -> Result<Self> {
        if a.iter().any(|v| *v <= 0) {
            return Err(Error::InvalidArgument("partial quotients must be positive".into()));
        }
        let tmp = Self::build(Real::Rational(Rational::new()), Integer::new(), a, true, None);
        let v = tmp.convergent(tmp.len());
        Ok(ContinuedFractionExpansion { x: Real::Rational(v), ..tmp })
    }

    pub fn x(&self) -> &Real {
        &self.x
    }

    /// `[x]`.
    pub fn integer_part(&self) -> &Integer {
        &self.integer_part
    }

    /// Number of partial quotients held.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `a_1, ..., a_n`.
    pub fn a(&self) -> &[Integer] {
        &self.a
    }

    /// `p_0, ..., p_n`.
    pub fn p(&self) -> &[Integer] {
        &self.p
    }

    /// `q_0, ..., q_n`.
    pub fn q(&self) -> &[Integer] {
        &self.q
    }

    /// `a_k`, one-based.
    pub fn partial_quotient(&self, k: usize) -> Option<&Integer> {
        k.checked_sub(1).and_then(|i| self.a.get(i))
    }

    /// True when `x` is rational and the expansion ended.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    pub fn period(&self) -> Option<Period> {
        self.period
    }

    /// `p_k / q_k`.
    pub fn convergent(&self, k: usize) -> Rational {
        Rational::from((self.p[k].clone(), self.q[k].clone()))
    }

    /// `R(x)` as a ball.
    pub fn frac_enclosure(&self, prec: u32) -> HPFloat {
        self.x.enclosure(prec + self.integer_part.significant_bits() + 8).sub_exact_int(&self.integer_part).with_prec(prec)
    }

    /// `p_k q_{k-1} - p_{k-1} q_k = (-1)^(k+1)` for every `1 <= k <= n`.
    pub fn determinant_identity_holds(&self) -> bool {
        (1..=self.len()).all(|k| {
            let det = Integer::from(&self.p[k] * &self.q[k - 1]) - Integer::from(&self.p[k - 1] * &self.q[k]);
            det == if k % 2 == 1 { 1 } else { -1 }
        })
    }

    /// `1/(q_k (q_{k+1} + q_k))` and `1/(q_k q_{k+1})`, the bounds on `|R(x) - p_k/q_k|`.
    pub fn error_bracket(&self, k: usize) -> Option<(Rational, Rational)> {
        if k + 1 > self.len() {
            return None;
        }
        let (qk, qk1) = (&self.q[k], &self.q[k + 1]);
        let lo = Rational::from((1, (qk * Integer::from(qk1 + qk))));
        let hi = Rational::from((1, Integer::from(qk * qk1)));
        Some((lo, hi))
    }

    /// `|q_k R(x) - p_k|` as a ball; positive for irrational `x`.
    pub fn d(&self, k: usize, prec: u32) -> HPFloat {
        let w = prec + self.q[k].significant_bits() + 16;
        self.frac_enclosure(w).mul_int(&self.q[k]).sub_exact_int(&self.p[k]).abs().with_prec(prec)
    }

    /// Strict sandwich `1/(q_k(q_{k+1}+q_k)) < |R(x) - p_k/q_k| < 1/(q_k q_{k+1})`,
    /// decided at interval precision. Rational expansions need `k + 2 <= n`.
    pub fn sandwich_holds(&self, k: usize) -> Result<bool> {
        let (lo, hi) = self
            .error_bracket(k)
            .ok_or_else(|| Error::InvalidArgument(format!("sandwich needs q_{}", k + 1)))?;
        if let Some(x) = self.x.as_rational() {
            if self.terminated && k + 2 > self.len() {
                return Err(Error::InvalidArgument("sandwich at the last convergent of a rational".into()));
            }
            let frac = &x - x.clone().floor();
            let err = (frac - self.convergent(k)).abs();
            return Ok(lo < err && err < hi);
        }
        let start = default_precision().max(2 * self.q[k + 1].significant_bits() + 64);
        crate::arith::adaptive(start, |p| {
            let err = self.frac_enclosure(p).sub_ball(&HPFloat::from_rational(p, &self.convergent(k))).abs();
            let (lb, hb) = (HPFloat::from_rational(p, &lo), HPFloat::from_rational(p, &hi));
            if lb.definitely_lt(&err) && err.definitely_lt(&hb) {
                Ok(true)
            } else if err.definitely_le(&lb) || hb.definitely_le(&err) {
                Ok(false)
            } else {
                Err(Error::PrecisionExhausted(format!("sandwich at k={k} undecided at {p} bits")))
            }
        })
    }
}

/// Integer part and partial quotients of a rational by Euclid, at most `limit` of them.
fn euclid(r: &Rational, limit: usize) -> (Integer, Vec<Integer>, bool) {
    let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
    let (a0, rem) = num.clone().div_rem_floor(den.clone());
    let mut out = Vec::new();
    num = den;
    den = rem;
    while den != 0 {
        if out.len() == limit {
            return (a0, out, false);
        }
        let (a, rem) = num.clone().div_rem_floor(den.clone());
        out.push(a);
        num = den;
        den = rem;
    }
    (a0, out, true)
}

fn expand_rational(x: &Real, r: &Rational, n: usize) -> ContinuedFractionExpansion {
    let (a0, a, done) = euclid(r, n);
    ContinuedFractionExpansion::build(x.clone(), a0, a, done, None)
}

/// Complete quotient `(P + sqrt D) / Q` with `Q | D - P^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SurdState {
    p: Integer,
    q: Integer,
}

fn surd_floor(s: &SurdState, isqrt_d: &Integer) -> Integer {
    if s.q > 0 {
        Integer::from(&s.p + isqrt_d).div_rem_floor(s.q.clone()).0
    } else {
        // (P + sqrt D)/Q = (-P - sqrt D)/(-Q), and [-P - sqrt D] = -P - isqrt(D) - 1
        (Integer::from(-&s.p) - isqrt_d - 1u32).div_rem_floor(Integer::from(-&s.q)).0
    }
}

fn expand_surd(x: &Real, s: &QuadraticSurd, n: usize) -> ContinuedFractionExpansion {
    // Write x = (P + sqrt D) / Q, then scale so that Q | D - P^2.
    let (p0, q0) = if *s.b() < 0 { (Integer::from(-s.a()), Integer::from(-s.c())) } else { (s.a().clone(), s.c().clone()) };
    let d0 = Integer::from(s.b().square_ref()) * s.d();
    let qa = Integer::from(q0.abs_ref());
    let d = d0 * Integer::from(qa.square_ref());
    let mut state = SurdState { p: p0 * &qa, q: q0 * &qa };
    let isqrt_d = d.clone().sqrt();

    let step = |st: &SurdState, a: &Integer| {
        let p = Integer::from(a * &st.q) - &st.p;
        let q = (&d - Integer::from(p.square_ref())).div_exact(&st.q);
        SurdState { p, q }
    };

    let a0 = surd_floor(&state, &isqrt_d);
    state = step(&state, &a0);
    let mut seen: HashMap<SurdState, usize> = HashMap::new();
    let mut quotients = Vec::new();
    let mut period = None;
    while quotients.len() < n.max(CYCLE_SEARCH) {
        if let Some(&i) = seen.get(&state) {
            period = Some(Period { preperiod: i, length: quotients.len() - i });
            break;
        }
        seen.insert(state.clone(), quotients.len());
        let a = surd_floor(&state, &isqrt_d);
        state = step(&state, &a);
        quotients.push(a);
        if quotients.len() >= n && quotients.len() > CYCLE_SEARCH {
            break;
        }
    }
    if let Some(per) = period {
        while quotients.len() < n {
            let k = quotients.len();
            quotients.push(quotients[k - per.length].clone());
        }
    }
    quotients.truncate(n);
    ContinuedFractionExpansion::build(x.clone(), a0, quotients, false, period)
}

/// Quotients shared by every real in the ball: the common prefix of the
/// expansions of its two rational endpoints.
fn certified_prefix(b: &HPFloat, n: usize) -> Option<(Integer, Vec<Integer>)> {
    if !b.is_finite() {
        return None;
    }
    let lo = b.lower().to_rational()?;
    let hi = b.upper().to_rational()?;
    let (a_lo, q_lo, done_lo) = euclid(&lo, n);
    let (a_hi, q_hi, done_hi) = euclid(&hi, n);
    if a_lo != a_hi {
        return None;
    }
    let mut common: Vec<Integer> = q_lo.iter().zip(&q_hi).take_while(|(u, v)| u == v).map(|(u, _)| u.clone()).collect();
    // A terminating endpoint pins the last shared quotient only if the other side agrees beyond it.
    if (done_lo && common.len() == q_lo.len()) || (done_hi && common.len() == q_hi.len()) {
        common.pop();
    }
    Some((a_lo, common))
}

fn expand_inexact(x: &Real, n: usize) -> Result<ContinuedFractionExpansion> {
    let mut p = default_precision();
    loop {
        let first = certified_prefix(&x.enclosure(p), n);
        let second = certified_prefix(&x.enclosure(2 * p), n);
        if let (Some((a0, qa)), Some((b0, qb))) = (&first, &second) {
            if a0 == b0 {
                let agreed: Vec<Integer> = qa.iter().zip(qb).take_while(|(u, v)| u == v).map(|(u, _)| u.clone()).collect();
                if agreed.len() >= n {
                    return Ok(ContinuedFractionExpansion::build(x.clone(), a0.clone(), agreed, false, None));
                }
            }
        }
        if p >= PRECISION_CAP {
            let got = first.map(|(_, q)| q.len()).unwrap_or(0);
            return Err(Error::PrecisionExhausted(format!(
                "{x}: only {got} of {n} partial quotients can be certified"
            )));
        }
        p = (p * 2).min(PRECISION_CAP);
    }
}

/// The first `n` partial quotients of `R(x)`, fewer if `x` is rational.
pub fn cf_expand(x: &Real, n: usize) -> Result<ContinuedFractionExpansion> {
    match x.as_exact() {
        Some(SurdOrRational::Rational(r)) => Ok(expand_rational(x, &r, n)),
        Some(SurdOrRational::Surd(s)) => Ok(expand_surd(x, &s, n)),
        None => expand_inexact(x, n),
    }
}

/// Expansion long enough that `q_n > bound`, or complete if `x` is rational.
pub fn cf_expand_until(x: &Real, bound: &Integer) -> Result<ContinuedFractionExpansion> {
    let mut n = 16;
    loop {
        let e = cf_expand(x, n)?;
        if e.terminated() || e.q().last().is_some_and(|q| q > bound) {
            return Ok(e);
        }
        n *= 2;
    }
}

/// `v(a) = sum_k (-1)^(k+1) / (q_{k-1} q_k)` for a finite list of positive quotients.
pub fn value_of(a: &[Integer], prec: u32) -> Result<HPFloat> {
    let e = ContinuedFractionExpansion::from_quotients(a.to_vec())?;
    let w = prec + 16;
    let mut acc = HPFloat::zero(w);
    for k in 1..=e.len() {
        let t = HPFloat::one(w).div_ball(&HPFloat::from_int(w, Integer::from(&e.q[k - 1] * &e.q[k])));
        acc = if k % 2 == 1 { acc.add_ball(&t) } else { acc.sub_ball(&t) };
    }
    Ok(acc.with_prec(prec))
}

/// Outcome of the exhaustive best-approximation scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestApproxReport {
    pub holds: bool,
    /// Vacuous: the rational expansion ended before `q_{n+1}`.
    pub terminated: bool,
    pub checked: u64,
}

pub const BEST_APPROX_HORIZON: u64 = 1_000_000;

/// Checks `‖q x‖ >= |q_n x - p_n|` for every `1 <= q < q_{n+1}` by scanning.
pub fn best_approx_verify(x: &Real, n: usize) -> Result<BestApproxReport> {
    let e = cf_expand(x, n + 1)?;
    if e.len() < n + 1 {
        return Ok(BestApproxReport { holds: true, terminated: true, checked: 0 });
    }
    let qn1 = &e.q()[n + 1];
    let bound = qn1
        .to_u64()
        .filter(|&v| v <= BEST_APPROX_HORIZON)
        .ok_or_else(|| Error::HorizonExceeded { required: qn1.to_string(), horizon: BEST_APPROX_HORIZON.to_string() })?;
    let qn = e.q()[n].to_u64().expect("q_n < q_{n+1}");
    let start = default_precision().max(2 * qn1.significant_bits() + 64);
    crate::arith::adaptive(start, |p| {
        let xb = e.frac_enclosure(p);
        let target = e.d(n, p);
        for q in 1..bound {
            if q == qn {
                continue;
            }
            let dist = xb.mul_u64(q).dist_nearest();
            if target.definitely_le(&dist) {
                continue;
            }
            if dist.definitely_lt(&target) {
                return Ok(BestApproxReport { holds: false, terminated: false, checked: q });
            }
            return Err(Error::PrecisionExhausted(format!("q={q} undecided at {p} bits")));
        }
        Ok(BestApproxReport { holds: true, terminated: false, checked: bound - 1 })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn rational_two_thirds() {
        let e = cf_expand(&Real::rational(2, 3), 10).unwrap();
        assert_eq!(e.a(), &ints(&[1, 2])[..]);
        assert!(e.terminated());
        let alt = ContinuedFractionExpansion::from_quotients(ints(&[1, 1, 1])).unwrap();
        assert_eq!(alt.convergent(3), Rational::from((2, 3)));
        let e = cf_expand(&Real::rational(7, 3), 10).unwrap();
        assert_eq!(*e.integer_part(), 2);
        assert_eq!(e.a(), &ints(&[3])[..]);
    }

    #[test]
    fn surd_periods() {
        let x = Real::surd(-3, 1, 11, 1).unwrap();
        let e = cf_expand(&x, 10).unwrap();
        assert_eq!(e.a(), &ints(&[3, 6, 3, 6, 3, 6, 3, 6, 3, 6])[..]);
        assert_eq!(e.period(), Some(Period { preperiod: 0, length: 2 }));
        let g = cf_expand(&Real::golden(), 5).unwrap();
        assert_eq!(g.a(), &ints(&[1, 1, 1, 1, 1])[..]);
        assert_eq!(g.period(), Some(Period { preperiod: 0, length: 1 }));
        // sqrt 7 = [2; 1, 1, 1, 4, ...]
        let s7 = cf_expand(&Real::surd(0, 1, 7, 1).unwrap(), 8).unwrap();
        assert_eq!(*s7.integer_part(), 2);
        assert_eq!(s7.a(), &ints(&[1, 1, 1, 4, 1, 1, 1, 4])[..]);
        // (1 + sqrt 3)/5 has a preperiod
        let e = cf_expand(&Real::surd(1, 1, 3, 5).unwrap(), 12).unwrap();
        let per = e.period().unwrap();
        assert!(per.preperiod > 0);
        let oracle = cf_expand(&"0.54641016151377545870548926830117447338856105076207612561116139589038660338176".parse().unwrap(), 12).unwrap();
        assert_eq!(e.a(), oracle.a());
    }

    #[test]
    fn e_minus_two_pattern() {
        let e = cf_expand(&"e-2".parse().unwrap(), 60).unwrap();
        for k in 1..=20usize {
            assert_eq!(e.a()[3 * k - 1], 1);
            assert_eq!(e.a()[3 * k - 3], 1);
            assert_eq!(e.a()[3 * k - 2], Integer::from(2 * k as i64));
        }
    }

    #[test]
    fn pi_quotients() {
        let e = cf_expand(&Real::pi(), 8).unwrap();
        assert_eq!(*e.integer_part(), 3);
        assert_eq!(e.a(), &ints(&[7, 15, 1, 292, 1, 1, 1, 2])[..]);
        assert!(e.determinant_identity_holds());
    }

    #[test]
    fn declared_decimal_runs_out() {
        let x: Real = "3.14159@5".parse().unwrap();
        assert!(matches!(cf_expand(&x, 10), Err(Error::PrecisionExhausted(_))));
        // within 1e-5 of 3.14159 the second quotient ranges over 15 and 16
        assert!(cf_expand(&x, 2).is_err());
        assert_eq!(cf_expand(&x, 1).unwrap().a(), &ints(&[7])[..]);
        let y: Real = "3.14159265@8".parse().unwrap();
        assert_eq!(cf_expand(&y, 3).unwrap().a(), &ints(&[7, 15, 1])[..]);
    }

    #[test]
    fn sandwich_for_golden() {
        let e = cf_expand(&Real::golden(), 40).unwrap();
        for k in 0..39 {
            assert!(e.sandwich_holds(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn values_of_lists() {
        let v = value_of(&ints(&[1, 1, 1]), 64).unwrap();
        assert!(v.contains_rational(&Rational::from((2, 3))));
        assert!(value_of(&ints(&[2]), 64).unwrap().contains_rational(&Rational::from((1, 2))));
        let ones = vec![Integer::from(1); 40];
        let v = value_of(&ones, 128).unwrap();
        let g = Real::golden().enclosure(128);
        assert!(v.sub_ball(&g).abs().upper() < 1e-16);
    }

    #[test]
    fn best_approximations() {
        assert!(best_approx_verify(&Real::golden(), 5).unwrap().holds);
        let pi = best_approx_verify(&Real::pi(), 3).unwrap();
        assert!(pi.holds && pi.checked == 33101);
        let r = best_approx_verify(&Real::rational(2, 3), 5).unwrap();
        assert!(r.holds && r.terminated);
        assert!(matches!(best_approx_verify(&Real::pi(), 10), Err(Error::HorizonExceeded { .. })));
    }
}
