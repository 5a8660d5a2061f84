//! Cylinder sets, the Gauss map `T(x) = R(1/x)`, the Gauss measure and the
//! transfer operator.

use crate::arith::{HPFloat, QuadraticSurd, Real, SurdOrRational};
use crate::bernoulli::{euler_maclaurin_tail, LogShiftCombination};
use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// The interval `(u, v)` of reals in `(0, 1)` whose expansion starts with `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    pub u: Rational,
    pub v: Rational,
    pub measure: Rational,
}

pub fn cylinder_interval(i: &[Integer]) -> Result<Cylinder> {
    if i.is_empty() || i.iter().any(|a| *a <= 0) {
        return Err(Error::InvalidArgument("cylinder needs a nonempty list of positive quotients".into()));
    }
    let (mut p_prev, mut q_prev) = (Integer::from(1), Integer::from(0));
    let (mut p, mut q) = (Integer::from(0), Integer::from(1));
    for a in i {
        let pn = Integer::from(a * &p) + &p_prev;
        let qn = Integer::from(a * &q) + &q_prev;
        p_prev = std::mem::replace(&mut p, pn);
        q_prev = std::mem::replace(&mut q, qn);
    }
    let conv = Rational::from((p.clone(), q.clone()));
    let mediant = Rational::from((Integer::from(&p + &p_prev), Integer::from(&q + &q_prev)));
    let (u, v) = if i.len() % 2 == 1 { (mediant, conv) } else { (conv, mediant) };
    let measure = Rational::from((1, (&q * Integer::from(&q + &q_prev))));
    debug_assert_eq!(Rational::from(&v - &u), measure);
    Ok(Cylinder { u, v, measure })
}

/// `T(x) = R(1/x)` on exact values; `None` once the orbit reaches zero.
pub fn gauss_map_exact(x: &SurdOrRational) -> Option<SurdOrRational> {
    match x {
        SurdOrRational::Rational(r) => {
            if *r == 0 {
                return None;
            }
            let inv = r.clone().recip();
            let f = &inv - inv.clone().floor();
            Some(SurdOrRational::Rational(f))
        }
        SurdOrRational::Surd(s) => Some(frac_surd(&s.recip())),
    }
}

fn frac_surd(v: &SurdOrRational) -> SurdOrRational {
    match v {
        SurdOrRational::Rational(r) => SurdOrRational::Rational(r - r.clone().floor()),
        SurdOrRational::Surd(s) => s.add_rational(&Rational::from(-s.floor())),
    }
}

/// `T^n(R(x))`.
pub fn gauss_map(x: &Real, n: usize, prec: u32) -> Result<HPFloat> {
    if let Some(v) = x.as_exact() {
        let mut cur = frac_surd(&v);
        for _ in 0..n {
            cur = gauss_map_exact(&cur)
                .ok_or_else(|| Error::InvalidArgument("the Gauss orbit of a rational reaches 0".into()))?;
        }
        return Ok(match cur {
            SurdOrRational::Rational(r) => HPFloat::from_rational(prec, &r),
            SurdOrRational::Surd(s) => s.enclosure(prec).with_prec(prec),
        });
    }
    // Each step loses about 2 log2(a_k) bits; retry wider until the floors certify.
    crate::arith::adaptive(prec + 64 * (n as u32 + 1), |p| {
        let mut cur = x.enclosure(p).fract()?;
        for _ in 0..n {
            if cur.contains_zero() {
                return Err(Error::PrecisionExhausted("Gauss orbit approaches 0".into()));
            }
            cur = cur.recip().fract()?;
        }
        if cur.rad_f64() > 2f64.powi(-(prec as i32)) {
            return Err(Error::PrecisionExhausted(format!("T^{n}(x) not resolved to {prec} bits")));
        }
        Ok(cur.with_prec(prec))
    })
}

/// `(log(1+b) - log(1+a)) / log 2`.
pub fn gauss_measure(a: &Rational, b: &Rational, prec: u32) -> Result<HPFloat> {
    if *a < 0 || *b > 1 || a > b {
        return Err(Error::InvalidArgument(format!("[{a}, {b}] is not a subinterval of [0, 1]")));
    }
    let w = prec + 16;
    let one = Rational::from(1);
    let lb = HPFloat::from_rational(w, &(b + one.clone())).ln();
    let la = HPFloat::from_rational(w, &(a + one)).ln();
    Ok(lb.sub_ball(&la).div_ball(&HPFloat::ln2(w)).with_prec(prec))
}

/// Gauss measure of `T^{-1}[a, b] = union_k [1/(k+b), 1/(k+a)]`, summed over
/// the first `branches` branches with an Euler–Maclaurin tail for the rest.
pub fn gauss_measure_preimage(a: &Rational, b: &Rational, branches: u64, prec: u32) -> Result<HPFloat> {
    gauss_measure(a, b, prec)?;
    if branches == 0 {
        return Err(Error::InvalidArgument("need at least one explicit branch".into()));
    }
    let w = prec + 32;
    // Branch k contributes log(k+a+1) - log(k+a) - log(k+b+1) + log(k+b), over log 2.
    let one = Rational::from(1);
    let f = LogShiftCombination::new(vec![
        (one.clone(), Rational::from(a + &one)),
        (-one.clone(), a.clone()),
        (-one.clone(), Rational::from(b + &one)),
        (one, b.clone()),
    ]);
    let mut acc = HPFloat::zero(w);
    for k in 1..=branches {
        let kb = HPFloat::from_int(w, k);
        let br_lo = HPFloat::one(w).div_ball(&kb.add_rational(b));
        let br_hi = HPFloat::one(w).div_ball(&kb.add_rational(a));
        acc = acc.add_ball(&br_hi.add_i64(1).ln().sub_ball(&br_lo.add_i64(1).ln()));
    }
    let branches_i64 = i64::try_from(branches).map_err(|_| Error::InvalidArgument("too many branches".into()))?;
    let tail = euler_maclaurin_tail(&f, branches_i64, 40, w)?;
    Ok(acc.add_ball(&tail.enclosure()).div_ball(&HPFloat::ln2(w)).with_prec(prec))
}

/// `h(x) = 1 / ((1 + x) log 2)`, the invariant density.
pub fn gauss_density(x: &HPFloat) -> HPFloat {
    x.add_i64(1).mul_ball(&HPFloat::ln2(x.prec())).recip()
}

/// `sum_{k=1}^K f(1/(x+k)) / (x+k)^2` plus the tail bound `sup|f| / (x+K)`.
pub fn pf_operator_apply(
    f: &dyn Fn(&HPFloat) -> HPFloat,
    sup_abs_f: &HPFloat,
    x: &HPFloat,
    branches: u64,
) -> Result<HPFloat> {
    if branches < 10 {
        return Err(Error::InvalidArgument("the transfer operator needs at least 10 branches".into()));
    }
    if x.lower() < 0 || x.upper() > 1 {
        return Err(Error::InvalidArgument("x must lie in [0, 1]".into()));
    }
    let p = x.prec();
    let mut acc = HPFloat::zero(p);
    for k in 1..=branches {
        let xk = x.add_int(&Integer::from(k));
        acc = acc.add_ball(&f(&xk.recip()).div_ball(&xk.sqr()));
    }
    // sum_{k>K} 1/(x+k)^2 <= 1/(x+K)
    let tail = sup_abs_f.abs().div_ball(&x.add_int(&Integer::from(branches)));
    Ok(acc.add_rad(tail.mag_upper()))
}

/// The surd `x` as a `SurdOrRational` after `n` Gauss steps, for orbit tests.
pub fn gauss_orbit_surd(x: &QuadraticSurd, n: usize) -> SurdOrRational {
    let mut cur = frac_surd(&SurdOrRational::Surd(x.clone()));
    for _ in 0..n {
        cur = gauss_map_exact(&cur).expect("surd orbits never reach 0");
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn cylinders() {
        let c = cylinder_interval(&ints(&[1])).unwrap();
        assert_eq!((c.u, c.v, c.measure), (q(1, 2), q(1, 1), q(1, 2)));
        let c = cylinder_interval(&ints(&[2])).unwrap();
        assert_eq!((c.u, c.v, c.measure), (q(1, 3), q(1, 2), q(1, 6)));
        let c = cylinder_interval(&ints(&[1, 1])).unwrap();
        assert_eq!((c.u, c.v), (q(1, 2), q(2, 3)));
    }

    #[test]
    fn cylinders_match_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cases = [(ints(&[1]), 0usize), (ints(&[2]), 1), (ints(&[1, 1]), 2)];
        let mut counts = [0u32; 3];
        let n = 100_000;
        for _ in 0..n {
            let x: f64 = rng.gen_range(1e-9..1.0);
            let a1 = (1.0 / x).floor();
            let t = 1.0 / x - a1;
            let a2 = if t > 0.0 { (1.0 / t).floor() } else { f64::INFINITY };
            if a1 == 1.0 {
                counts[0] += 1;
            }
            if a1 == 2.0 {
                counts[1] += 1;
            }
            if a1 == 1.0 && a2 == 1.0 {
                counts[2] += 1;
            }
        }
        for (i, c) in cases.iter().map(|(i, k)| (i, counts[*k])) {
            let m = cylinder_interval(i).unwrap().measure.to_f64();
            assert!((c as f64 / n as f64 - m).abs() < 0.01, "{i:?}");
        }
    }

    #[test]
    fn gauss_map_examples() {
        assert!(gauss_map(&Real::rational(2, 5), 1, 64).unwrap().contains_rational(&q(1, 2)));
        let g = Real::golden();
        assert_eq!(g.as_exact(), Some(gauss_orbit_surd(&g.as_surd().unwrap(), 1)));
        let x = Real::surd(-3, 1, 11, 1).unwrap().as_surd().unwrap();
        assert_eq!(gauss_orbit_surd(&x, 2), SurdOrRational::Surd(x.clone()));
        assert_ne!(gauss_orbit_surd(&x, 1), SurdOrRational::Surd(x));
        // pi - 3 = [7, 15, 1, 292, ...]: T^3 lies in (1/293, 1/292]
        let t3 = gauss_map(&Real::pi(), 3, 64).unwrap();
        assert!(t3.gt_f64(1.0 / 293.0) && t3.lt_f64(1.0 / 292.0));
    }

    #[test]
    fn measures() {
        let full = gauss_measure(&q(0, 1), &q(1, 1), 64).unwrap();
        assert!(full.contains_rational(&q(1, 1)));
        let half = gauss_measure(&q(0, 1), &q(1, 2), 64).unwrap();
        assert!((half.to_f64() - 0.5849625007211562).abs() < 1e-15);
    }

    #[test]
    fn invariance_under_the_gauss_map() {
        let direct = gauss_measure(&q(0, 1), &q(1, 2), 128).unwrap();
        let pre = gauss_measure_preimage(&q(0, 1), &q(1, 2), 1000, 128).unwrap();
        assert!(direct.sub_ball(&pre).abs().upper() < 1e-12);
        assert!(direct.overlaps(&pre));
    }

    #[test]
    fn transfer_operator() {
        let p = 128;
        let x = HPFloat::from_rational(p, &q(1, 3));
        let h_sup = HPFloat::one(p).div_ball(&HPFloat::ln2(p));
        let ph = pf_operator_apply(&gauss_density, &h_sup, &x, 2000).unwrap();
        assert!(ph.overlaps(&gauss_density(&x)));
        assert!(ph.rad_f64() < 1e-3);
        let zero = pf_operator_apply(&|v: &HPFloat| HPFloat::zero(v.prec()), &HPFloat::zero(p), &x, 10).unwrap();
        assert!(zero.contains_rational(&q(0, 1)));
        // f = 1: 1/(x+1) <= sum 1/(x+k)^2 <= 1/(x+1) + 1/(x+1)^2
        let one = pf_operator_apply(&|v: &HPFloat| HPFloat::one(v.prec()), &HPFloat::one(p), &x, 10_000).unwrap();
        let x1 = x.add_i64(1).recip();
        assert!(x1.definitely_lt(&one) && one.definitely_lt(&x1.add_ball(&x1.sqr())));
        assert!(pf_operator_apply(&gauss_density, &h_sup, &x, 5).is_err());
    }
}
