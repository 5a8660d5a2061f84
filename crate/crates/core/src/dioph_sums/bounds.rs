//! Type functions `psi` with `‖h x‖ >= 1/(h psi(h))`, and the upper and
//! lower bounds on `sum 1/‖jx‖` and `sum 1/(j‖jx‖)` checked against them.

use super::kernel::{segment, MultipleNorms, Summand};
use super::sums::{sum_recip_jnorm, sum_recip_norm};
use crate::arith::{HPFloat, Real};
use crate::contfrac::{cf_expand, cf_expand_until, classify_type, ContinuedFractionExpansion};
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Integer, Rational};

const PREC: u32 = 128;

/// A positive nondecreasing function of `h >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum TypeFunction {
    Constant(Rational),
    /// `k (1 + log h)^(1 + eps)`.
    PowerLog { k: Rational, eps: Rational },
    /// Step function: `psi(h)` is the value of the last breakpoint `<= h`; the first breakpoint is 1.
    Table(Vec<(u64, Rational)>),
}

impl TypeFunction {
    pub fn constant(k: impl Into<Rational>) -> Result<TypeFunction> {
        let k = k.into();
        if k <= 0 {
            return Err(Error::InvalidArgument(format!("type constant must be positive, got {k}")));
        }
        Ok(TypeFunction::Constant(k))
    }

    pub fn power_log(k: impl Into<Rational>, eps: impl Into<Rational>) -> Result<TypeFunction> {
        let (k, eps) = (k.into(), eps.into());
        if k <= 0 || eps < 0 {
            return Err(Error::InvalidArgument(format!("need k > 0 and eps >= 0, got k = {k}, eps = {eps}")));
        }
        Ok(TypeFunction::PowerLog { k, eps })
    }

    pub fn table(rows: Vec<(u64, Rational)>) -> Result<TypeFunction> {
        let ok = rows.first().is_some_and(|(h, v)| *h == 1 && *v > 0)
            && rows.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 <= w[1].1);
        if !ok {
            return Err(Error::InvalidArgument(
                "a type table needs increasing breakpoints from h = 1 with positive nondecreasing values".into(),
            ));
        }
        Ok(TypeFunction::Table(rows))
    }

    pub fn eval(&self, h: u64, prec: u32) -> HPFloat {
        debug_assert!(h >= 1);
        match self {
            TypeFunction::Constant(k) => HPFloat::from_rational(prec, k),
            TypeFunction::PowerLog { k, eps } => {
                let l = HPFloat::from_int(prec, h).ln().add_i64(1);
                let e = HPFloat::from_rational(prec, eps).add_i64(1);
                l.ln().mul_ball(&e).exp().mul_rational(k)
            }
            TypeFunction::Table(rows) => {
                let i = rows.partition_point(|(b, _)| *b <= h) - 1;
                HPFloat::from_rational(prec, &rows[i].1)
            }
        }
    }

    /// `sum_{j=1}^m psi(j)/j`.
    pub fn weighted_harmonic(&self, m: u64, prec: u32) -> HPFloat {
        let harmonic = |a: u64, b: u64| {
            (a..=b).fold(HPFloat::zero(prec), |acc, j| acc.add_ball(&HPFloat::one(prec).div_u64(j)))
        };
        match self {
            TypeFunction::Constant(k) => harmonic(1, m).mul_rational(k),
            TypeFunction::Table(rows) => {
                let mut acc = HPFloat::zero(prec);
                for (i, (b, v)) in rows.iter().enumerate() {
                    if *b > m {
                        break;
                    }
                    let end = rows.get(i + 1).map_or(m, |r| (r.0 - 1).min(m));
                    acc = acc.add_ball(&harmonic(*b, end).mul_rational(v));
                }
                acc
            }
            TypeFunction::PowerLog { .. } => {
                (1..=m).fold(HPFloat::zero(prec), |acc, j| acc.add_ball(&self.eval(j, prec).div_u64(j)))
            }
        }
    }

    /// Whether `h psi(h) ‖h x‖ >= 1` for every `1 <= h <= upto`.
    ///
    /// For `q_k <= h < q_{k+1}`, `‖h x‖ >= ‖q_k x‖` and `psi(h) >= psi(q_k)`,
    /// so the convergent denominators are the only cases to check.
    pub fn certifies(&self, x: &Real, upto: u64) -> Result<bool> {
        let e = cf_expand_until(x, &Integer::from(upto))?;
        self.certifies_with(&e, upto)
    }

    fn certifies_with(&self, e: &ContinuedFractionExpansion, upto: u64) -> Result<bool> {
        for (k, q) in e.q().iter().enumerate() {
            if *q > upto {
                break;
            }
            let h = q.to_u64().expect("q_k <= upto");
            let holds = crate::arith::adaptive(PREC, |p| {
                let lhs = e.d(k, p).mul_int(q).mul_ball(&self.eval(h, p));
                if lhs.lower() >= 1 {
                    Ok(true)
                } else if lhs.upper() < 1 {
                    Ok(false)
                } else {
                    Err(Error::PrecisionExhausted(format!("cannot decide h psi(h) ‖hx‖ >= 1 at h = {h}")))
                }
            })?;
            if !holds {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A type function for `x`, proved for every `h` when `rigorous`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiCertificate {
    pub psi: TypeFunction,
    pub rigorous: bool,
    /// Largest `h` the certificate was checked for when not rigorous.
    pub checked_upto: Option<u64>,
}

/// `psi = K + 2` with `K = sup a_n`, from the period of a quadratic surd.
///
/// `‖q_k x‖ > 1/(q_{k+1} + q_k) >= 1/((a_{k+1} + 2) q_k)`, and the
/// convergent denominators are the extremal `h`.
pub fn surd_certificate(x: &Real) -> Result<PsiCertificate> {
    if x.as_surd().is_none() {
        return Err(Error::InvalidArgument(format!("{x} is not a quadratic surd")));
    }
    let c = classify_type(x, &Integer::from(2))?;
    let k = c.max_quotient.expect("surds have a period");
    Ok(PsiCertificate { psi: TypeFunction::Constant(Rational::from(k + 2u32)), rigorous: true, checked_upto: None })
}

/// Smallest integer constant with `h ‖h x‖ >= 1/c` at every convergent
/// denominator up to `upto`; valid on `[1, upto]` only.
pub fn empirical_certificate(x: &Real, upto: u64) -> Result<PsiCertificate> {
    if x.is_rational() {
        return Err(Error::InvalidArgument("rational numbers have no finite type".into()));
    }
    let e = cf_expand_until(x, &Integer::from(upto))?;
    let mut worst = Integer::from(1);
    for (k, q) in e.q().iter().enumerate() {
        if *q > upto {
            break;
        }
        let r = e.d(k, PREC).mul_int(q).recip().upper();
        let c = r.ceil().to_integer().expect("finite");
        worst = worst.max(c);
    }
    Ok(PsiCertificate { psi: TypeFunction::Constant(Rational::from(worst)), rigorous: false, checked_upto: Some(upto) })
}

/// One row of a bound check: `ratio = value / bound_value`.
#[derive(Clone, Debug)]
pub struct SumRecord {
    pub m: u64,
    pub value: HPFloat,
    pub bound_value: HPFloat,
    pub ratio: HPFloat,
}

impl SumRecord {
    pub fn new(m: u64, value: HPFloat, bound_value: HPFloat) -> SumRecord {
        let ratio = value.div_ball(&bound_value);
        SumRecord { m, value, bound_value, ratio }
    }

    /// Certified `ratio < 1`.
    pub fn below_one(&self) -> bool {
        self.ratio.lt_f64(1.0)
    }
}

fn require(psi: &TypeFunction, x: &Real, upto: u64) -> Result<()> {
    if psi.certifies(x, upto)? {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("psi does not bound the type of {x} on [1, {upto}]")))
    }
}

fn log_of(m: u64) -> HPFloat {
    HPFloat::from_int(PREC, m).ln()
}

/// `sum_{1<=j<=q_n, j+h0<q_{n+1}} 1/‖(j+h0)x‖` against `6 q_n (psi(q_n) + log q_n)`.
pub fn bound_h0(x: &Real, psi: &TypeFunction, n: usize, h0: u64) -> Result<SumRecord> {
    if n == 0 {
        return Err(Error::InvalidArgument("the convergent index starts at 1".into()));
    }
    let e = cf_expand(x, n + 1)?;
    if e.len() < n + 1 {
        return Err(Error::InvalidArgument(format!("{x} has fewer than {} partial quotients", n + 1)));
    }
    let as_u64 = |v: &Integer| {
        v.to_u64().ok_or_else(|| Error::HorizonExceeded { required: v.to_string(), horizon: u64::MAX.to_string() })
    };
    let (qn, qn1) = (as_u64(&e.q()[n])?, as_u64(&e.q()[n + 1])?);
    if h0 >= qn1 {
        return Err(Error::InvalidArgument(format!("h0 = {h0} must be below q_(n+1) = {qn1}")));
    }
    require(psi, x, qn)?;
    let last = (h0 + qn).min(qn1 - 1);
    let value = segment(&MultipleNorms::new(x), Summand::Recip, h0 + 1, last)?.value();
    let bound = psi.eval(qn, PREC).add_ball(&log_of(qn)).mul_u64(6 * qn);
    Ok(SumRecord::new(qn, value, bound))
}

/// `sum_{j<=m} 1/‖jx‖` against `12 m (psi(m) + log m)`.
pub fn bound_jalpha(x: &Real, psi: &TypeFunction, m: u64) -> Result<SumRecord> {
    require(psi, x, m)?;
    let bound = psi.eval(m, PREC).add_ball(&log_of(m)).mul_u64(12 * m);
    Ok(SumRecord::new(m, sum_recip_norm(x, m)?, bound))
}

/// `sum_{j<=m} 1/(j‖jx‖)` against `24 ((log m)^2 + psi(m) + sum_{j<=m} psi(j)/j)`.
pub fn bound_hhalpha(x: &Real, psi: &TypeFunction, m: u64) -> Result<SumRecord> {
    require(psi, x, m)?;
    let bound = log_of(m).sqr().add_ball(&psi.eval(m, PREC)).add_ball(&psi.weighted_harmonic(m, PREC)).mul_u64(24);
    Ok(SumRecord::new(m, sum_recip_jnorm(x, m)?, bound))
}

/// `sum_{j<=m} 1/‖jx‖` against `m log m`; the ratio is monitored, not bounded.
pub fn bound_lower(x: &Real, m: u64) -> Result<SumRecord> {
    if m < 2 {
        return Err(Error::InvalidArgument("m log m vanishes below m = 2".into()));
    }
    Ok(SumRecord::new(m, sum_recip_norm(x, m)?, super::sums::m_log_m(m, PREC)))
}

/// Partial quotients with `a_{n+1} = q_n^(n-1) + 1`, starting from `a_1 = 1`.
pub fn fast_growth_quotients(len: usize) -> Vec<Integer> {
    // (q_{n-1}, q_n) starting from q_{-1} = 0, q_0 = 1
    let (mut q_prev, mut q) = (Integer::from(0), Integer::from(1));
    let mut a = Vec::with_capacity(len);
    for n in 0..len {
        let an = if n == 0 { Integer::from(1) } else { q.clone().pow(n as u32 - 1) + 1u32 };
        let next = Integer::from(&an * &q) + &q_prev;
        q_prev = std::mem::replace(&mut q, next);
        a.push(an);
    }
    a
}

/// `sum_{j<=q_n} 1/‖j x‖ > q_n^n` for `x` with fast-growing quotients.
#[derive(Clone, Debug)]
pub struct GrowthCheck {
    pub n: usize,
    pub q_n: Integer,
    pub sum: HPFloat,
    pub threshold: Integer,
    pub holds: bool,
}

/// The rational `[a_1, ..., a_{n_max + 2}]` from [`fast_growth_quotients`], and the
/// check at each `n` in `ns`.
///
/// The term `j = q_n` alone exceeds `q_{n+1} > a_{n+1} q_n > q_n^n`, so the
/// inequality holds on the whole cylinder of `a_1, ..., a_{n+1}`.
pub fn fast_growth_counterexample(ns: &[usize]) -> Result<(Real, Vec<GrowthCheck>)> {
    let n_max = ns.iter().copied().max().unwrap_or(1);
    let a = fast_growth_quotients(n_max + 2);
    let e = ContinuedFractionExpansion::from_quotients(a)?;
    let x = Real::Rational(Rational::from((e.p().last().cloned().expect("p"), e.q().last().cloned().expect("q"))));
    let norms = MultipleNorms::new(&x);
    let mut out = Vec::new();
    for &n in ns {
        let q_n = e.q()[n].clone();
        let qn = q_n.to_u64().ok_or_else(|| Error::HorizonExceeded { required: q_n.to_string(), horizon: "2^64".into() })?;
        let sum = segment(&norms, Summand::Recip, 1, qn)?.value();
        let threshold = q_n.clone().pow(n as u32);
        let holds = sum.lower() > threshold;
        out.push(GrowthCheck { n, q_n, sum, threshold, holds });
    }
    Ok((x, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surds() -> Vec<Real> {
        vec![Real::golden(), Real::surd(-1, 1, 2, 1).unwrap(), Real::surd(-3, 1, 11, 1).unwrap()]
    }

    #[test]
    fn surd_certificates() {
        let c = surd_certificate(&Real::golden()).unwrap();
        assert_eq!(c.psi, TypeFunction::Constant(Rational::from(3)));
        let c = surd_certificate(&Real::surd(-3, 1, 11, 1).unwrap()).unwrap();
        assert_eq!(c.psi, TypeFunction::Constant(Rational::from(8)));
        for x in surds() {
            let c = surd_certificate(&x).unwrap();
            assert!(c.psi.certifies(&x, 1_000_000_000).unwrap(), "x={x}");
        }
        // too small a constant fails at the first convergent
        assert!(!TypeFunction::constant(1).unwrap().certifies(&Real::golden(), 10).unwrap());
        assert!(surd_certificate(&Real::pi()).is_err());
    }

    #[test]
    fn type_function_shapes() {
        let p = TypeFunction::power_log(2, Rational::from((1, 10))).unwrap();
        assert!(p.eval(1, 64).contains_rational(&Rational::from(2)));
        assert!(p.eval(100, 64).definitely_lt(&p.eval(101, 64)));
        let t = TypeFunction::table(vec![(1, Rational::from(2)), (10, Rational::from(5))]).unwrap();
        assert!(t.eval(9, 64).contains_rational(&Rational::from(2)));
        assert!(t.eval(10, 64).contains_rational(&Rational::from(5)));
        // psi(j)/j summed: 2 H_9 + 5 (H_20 - H_9)
        let w = t.weighted_harmonic(20, 128).to_f64();
        let h = |n: u32| (1..=n).map(|j| 1.0 / j as f64).sum::<f64>();
        assert!((w - (2.0 * h(9) + 5.0 * (h(20) - h(9)))).abs() < 1e-12);
        assert!(TypeFunction::table(vec![(1, Rational::from(2)), (3, Rational::from(1))]).is_err());
        assert!(TypeFunction::constant(0).is_err());
    }

    #[test]
    fn h0_lemma() {
        let g = Real::golden();
        let psi = TypeFunction::constant(3).unwrap();
        assert!(bound_h0(&g, &psi, 10, 0).unwrap().below_one());
        assert!(bound_h0(&g, &psi, 1, 0).unwrap().below_one());
        // q_11 = 144: h0 = 143 leaves no term
        let r = bound_h0(&g, &psi, 10, 143).unwrap();
        assert!(r.value.contains_zero() && r.ratio.lt_f64(1e-6));
        assert!(bound_h0(&g, &psi, 10, 144).is_err());
        for x in surds() {
            let psi = surd_certificate(&x).unwrap().psi;
            for n in 1..12 {
                for h0 in [0, 1, 7] {
                    if let Ok(r) = bound_h0(&x, &psi, n, h0) {
                        assert!(r.below_one(), "x={x} n={n} h0={h0}");
                    }
                }
            }
        }
    }

    #[test]
    fn jalpha_and_hhalpha() {
        for x in surds() {
            let psi = surd_certificate(&x).unwrap().psi;
            for m in [100, 10_000] {
                assert!(bound_jalpha(&x, &psi, m).unwrap().below_one(), "x={x} m={m}");
                assert!(bound_hhalpha(&x, &psi, m).unwrap().below_one(), "x={x} m={m}");
            }
        }
        let bad = TypeFunction::constant(1).unwrap();
        assert!(bound_jalpha(&Real::golden(), &bad, 100).is_err());
    }

    #[test]
    fn empirical_certificate_for_pi() {
        let c = empirical_certificate(&Real::pi(), 100_000).unwrap();
        assert!(!c.rigorous);
        // 113 ‖113 pi‖ is about 1/294
        assert!(c.psi.eval(1, 64).to_f64() >= 294.0);
        assert!(c.psi.certifies(&Real::pi(), 100_000).unwrap());
    }

    #[test]
    fn lower_ratio_positive() {
        assert!(bound_lower(&Real::golden(), 10).unwrap().ratio.definitely_positive());
        assert!(bound_lower(&Real::golden(), 1).is_err());
    }

    #[test]
    fn growth_quotients() {
        let a = fast_growth_quotients(5);
        assert_eq!(a, [1, 2, 4, 170, 10837877598u64].map(Integer::from).to_vec());
        let (_, checks) = fast_growth_counterexample(&[3, 4]).unwrap();
        assert_eq!(checks[0].q_n, 13);
        assert_eq!(checks[1].q_n, 2213);
        assert!(checks.iter().all(|c| c.holds));
    }
}
