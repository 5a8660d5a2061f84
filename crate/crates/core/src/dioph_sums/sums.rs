//! `sum 1/‖jx‖`, `sum 1/(j‖jx‖)`, `sum ‖jx‖`, `sum 1/|sin(pi j x)|` and
//! `sum (R(jx) - 1/2)` with certified enclosures.

use super::kernel::{parallel_segments, MultipleNorms, Partial, Summand};
use crate::arith::{HPFloat, Real};
use crate::contfrac::brown_shiue_sum;
use crate::error::{Error, Result};
use rug::Integer;
use std::fmt;
use std::str::FromStr;

/// Largest `m` accepted by the sums.
pub const SUM_HORIZON: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumKind {
    /// `sum 1/‖jx‖`
    Recip,
    /// `sum 1/(j‖jx‖)`
    RecipJ,
    /// `sum ‖jx‖`
    Norm,
    /// `sum 1/|sin(pi j x)|`
    Sin,
    /// `sum (R(jx) - 1/2)`
    Fracpart,
}

impl SumKind {
    pub const ALL: [SumKind; 5] = [SumKind::Recip, SumKind::RecipJ, SumKind::Norm, SumKind::Sin, SumKind::Fracpart];

    pub fn name(self) -> &'static str {
        match self {
            SumKind::Recip => "recip",
            SumKind::RecipJ => "recipj",
            SumKind::Norm => "norm",
            SumKind::Sin => "sin",
            SumKind::Fracpart => "fracpart",
        }
    }

    fn summand(self) -> Option<Summand> {
        match self {
            SumKind::Recip => Some(Summand::Recip),
            SumKind::RecipJ => Some(Summand::RecipJ),
            SumKind::Norm => Some(Summand::Norm),
            SumKind::Sin => Some(Summand::Sin),
            SumKind::Fracpart => None,
        }
    }

    fn has_poles(self) -> bool {
        matches!(self, SumKind::Recip | SumKind::RecipJ | SumKind::Sin)
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SumKind> {
        SumKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(s, "expected one of recip, recipj, norm, sin, fracpart"))
    }
}

fn check(x: &Real, kind: SumKind, m: u64) -> Result<()> {
    if m > SUM_HORIZON {
        return Err(Error::HorizonExceeded { required: m.to_string(), horizon: SUM_HORIZON.to_string() });
    }
    if kind.has_poles() {
        if let Some(r) = x.as_rational() {
            let q = r.denom().clone();
            if q <= m {
                return Err(Error::Pole(format!("‖{q}·{x}‖ = 0, so the sum up to m = {m} has a pole")));
            }
        }
    }
    Ok(())
}

/// Cumulative sums at each right end in `cuts` (strictly increasing, first at least 1).
pub fn cumulative_sums(x: &Real, kind: SumKind, cuts: &[u64], jobs: usize) -> Result<Vec<HPFloat>> {
    if cuts.is_empty() {
        return Ok(Vec::new());
    }
    if cuts[0] == 0 || cuts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("sum indices must be positive and strictly increasing".into()));
    }
    check(x, kind, *cuts.last().expect("nonempty"))?;
    let Some(summand) = kind.summand() else {
        let prec = crate::arith::default_precision();
        return cuts.iter().map(|&m| fracpart_sum(x, m, prec)).collect();
    };
    let k = MultipleNorms::new(x);
    let parts = parallel_segments(&k, summand, cuts, jobs)?;
    let mut acc = Partial::new(summand.bits());
    let mut out = Vec::with_capacity(parts.len());
    for p in &parts {
        acc.merge(p)?;
        out.push(acc.value());
    }
    Ok(out)
}

pub fn sum_of(x: &Real, kind: SumKind, m: u64, jobs: usize) -> Result<HPFloat> {
    if m == 0 {
        return Ok(HPFloat::zero(64));
    }
    Ok(cumulative_sums(x, kind, &[m], jobs)?.remove(0))
}

/// `sum_{j=1}^m 1/‖jx‖`.
pub fn sum_recip_norm(x: &Real, m: u64) -> Result<HPFloat> {
    sum_of(x, SumKind::Recip, m, 1)
}

/// `sum_{j=1}^m 1/|sin(pi j x)|`.
pub fn sum_recip_sin(x: &Real, m: u64) -> Result<HPFloat> {
    sum_of(x, SumKind::Sin, m, 1)
}

/// `sum_{j=1}^m 1/(j ‖jx‖)`.
pub fn sum_recip_jnorm(x: &Real, m: u64) -> Result<HPFloat> {
    sum_of(x, SumKind::RecipJ, m, 1)
}

/// `sum_{n=1}^N ‖nx‖`.
pub fn sum_norm(x: &Real, n: u64) -> Result<HPFloat> {
    sum_of(x, SumKind::Norm, n, 1)
}

/// `|sum_{n<=N} ‖nx‖ - N/4|`.
pub fn norm_sum_drift(x: &Real, n: u64) -> Result<HPFloat> {
    Ok(sum_norm(x, n)?.sub_ball(&HPFloat::from_int(64, n).mul_2exp(-2)).abs())
}

/// `sum_{j=1}^m (R(jx) - 1/2)`, by the Ostrowski digit formula for irrational `x`.
pub fn fracpart_sum(x: &Real, m: u64, prec: u32) -> Result<HPFloat> {
    if x.is_rational() {
        crate::contfrac::fracpart_sum_direct(x, m, prec)
    } else {
        brown_shiue_sum(x, m, prec)
    }
}

/// Sums over `[1, m]` and `[1, k] + [k+1, m]`; the fixed-point parts agree exactly.
pub fn segment_consistency(x: &Real, kind: SumKind, k: u64, m: u64) -> Result<bool> {
    let summand = kind
        .summand()
        .ok_or_else(|| Error::InvalidArgument("segment consistency needs a termwise sum".into()))?;
    if !(1..m).contains(&k) {
        return Err(Error::InvalidArgument(format!("need 1 <= k < m, got k = {k}, m = {m}")));
    }
    check(x, kind, m)?;
    let norms = MultipleNorms::new(x);
    let whole = super::kernel::segment(&norms, summand, 1, m)?;
    let mut split = super::kernel::segment(&norms, summand, 1, k)?;
    split.merge(&super::kernel::segment(&norms, summand, k + 1, m)?)?;
    Ok(whole.fixed_units() == split.fixed_units() && whole.value().overlaps(&split.value()))
}

/// `(1/pi) sum 1/‖jx‖ <= sum 1/|sin(pi j x)| <= (1/2) sum 1/‖jx‖`, certified.
#[derive(Clone, Debug)]
pub struct SineSandwich {
    pub m: u64,
    pub norm_sum: HPFloat,
    pub sin_sum: HPFloat,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

pub fn sine_sandwich(x: &Real, m: u64) -> Result<SineSandwich> {
    let norm_sum = sum_recip_norm(x, m)?;
    let sin_sum = sum_recip_sin(x, m)?;
    let p = norm_sum.prec();
    let lower = norm_sum.div_ball(&HPFloat::pi(p));
    let upper = norm_sum.mul_2exp(-1);
    Ok(SineSandwich {
        m,
        lower_holds: lower.definitely_lt(&sin_sum),
        upper_holds: sin_sum.definitely_lt(&upper),
        norm_sum,
        sin_sum,
    })
}

/// Ratios `m log m` of the index to normalize `sum 1/‖jx‖`.
pub fn m_log_m(m: u64, prec: u32) -> HPFloat {
    let mb = HPFloat::from_int(prec, Integer::from(m));
    mb.mul_ball(&mb.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SurdOrRational;
    use rug::ops::Pow;
    use rug::Rational;

    fn g() -> Real {
        Real::golden()
    }

    /// `‖j g‖` from exact surd arithmetic: `R(j g)` or `1 - R(j g)`.
    fn surd_norm(j: i64) -> HPFloat {
        let s = crate::arith::QuadraticSurd::golden();
        let SurdOrRational::Surd(t) = s.mul_rational(&Rational::from(j)) else { unreachable!() };
        let SurdOrRational::Surd(f) = t.add_rational(&Rational::from(-t.floor())) else { unreachable!() };
        let f = if f.to_f64() <= 0.5 { f } else { f.neg() };
        
        if f.signum() == std::cmp::Ordering::Less { f.enclosure(128).add_i64(1) } else { f.enclosure(128) }
    }

    #[test]
    fn golden_first_terms() {
        let v = sum_recip_norm(&g(), 1).unwrap();
        // 1/(1 - g) = 1 + g = 2.6180339887...
        assert!((v.to_f64() - 2.618033988749895).abs() < 1e-12 && v.rad_f64() < 1e-15);
        let three = sum_recip_norm(&g(), 3).unwrap();
        let oracle = (1..=3).fold(HPFloat::zero(128), |acc, j| acc.add_ball(&surd_norm(j).recip()));
        assert!(three.overlaps(&oracle) && three.rad_f64() < 1e-15);
        assert!((sum_recip_jnorm(&g(), 1).unwrap().to_f64() - 2.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn norm_sum_small() {
        let one = sum_norm(&g(), 1).unwrap();
        assert!((one.to_f64() - (1.0 - 0.6180339887498949)).abs() < 1e-15);
        // (1 - g) + (2g - 1) = g
        let two = sum_norm(&g(), 2).unwrap();
        assert!((two.to_f64() - 0.6180339887498949).abs() < 1e-15);
    }

    #[test]
    fn sine_values() {
        let s = sum_recip_sin(&g(), 1).unwrap();
        let oracle = 1.0 / (std::f64::consts::PI * (1.0 - 0.6180339887498949)).sin();
        assert!((s.to_f64() - oracle).abs() < 1e-12);
        assert!(matches!(sum_recip_sin(&Real::rational(2, 7), 10), Err(Error::Pole(_))));
        assert!(sum_recip_sin(&Real::rational(2, 7), 6).is_ok());
    }

    #[test]
    fn sandwich_strict() {
        for x in [g(), Real::pi(), Real::surd(0, 1, 2, 1).unwrap()] {
            let s = sine_sandwich(&x, 10_000).unwrap();
            assert!(s.lower_holds && s.upper_holds, "x={x}");
        }
    }

    #[test]
    fn segments_add_exactly() {
        for kind in [SumKind::Recip, SumKind::RecipJ, SumKind::Norm] {
            assert!(segment_consistency(&Real::pi(), kind, 377, 5000).unwrap());
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let cuts = [100u64, 5000, 20_000, 50_000];
        let a = cumulative_sums(&g(), SumKind::Recip, &cuts, 1).unwrap();
        let b = cumulative_sums(&g(), SumKind::Recip, &cuts, 4).unwrap();
        for (u, v) in a.iter().zip(&b) {
            assert_eq!(u.lower(), v.lower());
            assert_eq!(u.upper(), v.upper());
        }
    }

    #[test]
    fn jnorm_monotone() {
        let cuts: Vec<u64> = (1..=200).collect();
        let v = cumulative_sums(&g(), SumKind::RecipJ, &cuts, 1).unwrap();
        assert!(v.windows(2).all(|w| w[0].definitely_lt(&w[1])));
    }

    #[test]
    fn ball_fallback_for_tiny_norms() {
        // ‖x‖ is far below the 96-bit fixed-point resolution
        let x: Real = "1/1000000000000000000000000000000000000000000000000000000000000007"
            .parse()
            .unwrap();
        let v = sum_recip_norm(&x, 3).unwrap();
        let exact = Rational::from(Integer::from(10).pow(63) + 7) * (Rational::from(1) + Rational::from((1, 2)) + Rational::from((1, 3)));
        assert!(v.contains_rational(&exact));
    }
}
