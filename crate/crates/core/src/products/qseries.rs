//! The q-binomial identity `1 + sum z^n / ((1-q)...(1-q^n)) = exp(sum z^n / (n (1-q^n)))`
//! and the Abel limit of `(1-r) sum R(n x) (r e(x))^n`.

use crate::arith::{CBall, HPFloat, Real};
use crate::equidist::PointSet;
use crate::error::{Error, Result};
use rug::Rational;

const PREC: u32 = 128;

fn inside_unit_disc(w: &CBall, name: &str) -> Result<()> {
    if w.abs().lt_f64(1.0) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("|{name}| must be below 1")))
    }
}

/// `|F_N(z, q) - exp(f_N(z, q))|` with both series cut after `N` terms.
pub fn qbinomial_residual(z: &CBall, q: &CBall, n: u64) -> Result<HPFloat> {
    inside_unit_disc(z, "z")?;
    inside_unit_disc(q, "q")?;
    let p = z.prec().max(q.prec()).max(PREC);
    let one = CBall::one(p);
    let mut big_f = one.clone();
    let mut small_f = CBall::zero(p);
    let mut term = one.clone();
    let mut zn = one.clone();
    let mut qn = one.clone();
    for k in 1..=n {
        zn = zn.mul(z);
        qn = qn.mul(q);
        let den = one.sub(&qn);
        term = term.mul(z).div(&den);
        big_f = big_f.add(&term);
        small_f = small_f.add(&zn.div(&den.scale(&HPFloat::from_int(p, k))));
    }
    Ok(big_f.sub(&small_f.exp()).abs())
}

/// `(1 - r) sum_{n<=N} R(n x) z^n` at `z = r e(x)`, widened by the tail bound `r^(N+1)`.
pub fn hecke_abel_limit(x: &Real, r: &Rational, n: u64, jobs: usize) -> Result<CBall> {
    if *r < 0 || *r >= 1 {
        return Err(Error::InvalidArgument("r must lie in [0, 1)".into()));
    }
    let ps = PointSet::n_alpha(x, n, jobs)?;
    let rad = HPFloat::from_rational(PREC, ps.radius()).mag_upper();
    let rb = HPFloat::from_rational(PREC, r);
    let mut rk = HPFloat::one(PREC);
    let mut acc = CBall::zero(PREC);
    for y in ps.points() {
        rk = rk.mul_ball(&rb);
        // e(n x) = e(R(n x))
        let t = HPFloat::from_rational(PREC, y).add_rad(rad);
        acc = acc.add(&CBall::cis_turns(&t).scale(&t.mul_ball(&rk)));
    }
    let scaled = acc.scale(&HPFloat::from_rational(PREC, &Rational::from(1 - r)));
    // |R| < 1, so the tail is below (1 - r) r^(N+1) / (1 - r)
    Ok(scaled.inflate(&rk.mul_ball(&rb)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> CBall {
        CBall::new(HPFloat::from_f64(PREC, re), HPFloat::from_f64(PREC, im))
    }

    #[test]
    fn qbinomial_decays() {
        assert!(qbinomial_residual(&c(0.0, 0.0), &c(0.5, 0.0), 10).unwrap().contains_rational(&Rational::new()));
        let half = c(0.5, 0.0);
        let r10 = qbinomial_residual(&half, &half, 10).unwrap().to_f64();
        let r20 = qbinomial_residual(&half, &half, 20).unwrap().to_f64();
        let r40 = qbinomial_residual(&half, &half, 40).unwrap();
        assert!(r40.lt_f64(1e-8) && r20 < r10 / 100.0, "{r10} {r20}");
        assert!(qbinomial_residual(&c(0.3, 0.2), &c(0.0, 0.5), 60).unwrap().lt_f64(1e-10));
        assert!(qbinomial_residual(&c(1.0, 0.0), &half, 5).is_err());
    }

    #[test]
    fn abel_limit_approaches_minus_i_over_two_pi() {
        let g = Real::golden();
        let target = -1.0 / (2.0 * std::f64::consts::PI);
        let far = hecke_abel_limit(&g, &Rational::from((99, 100)), 5000, 2).unwrap();
        let near = hecke_abel_limit(&g, &Rational::from((999, 1000)), 100_000, 4).unwrap();
        let dist = |v: &CBall| v.re.to_f64().hypot(v.im.to_f64() - target);
        assert!(dist(&near) < 0.01 && dist(&near) < dist(&far), "{} {}", dist(&near), dist(&far));
        let zero = hecke_abel_limit(&g, &Rational::new(), 10, 1).unwrap();
        assert!(zero.re.contains_rational(&Rational::new()) && zero.im.contains_rational(&Rational::new()));
    }
}
