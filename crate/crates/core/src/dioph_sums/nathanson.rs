//! The four sums with `1/‖alpha r‖` terms used for Weyl-type estimates when
//! `|alpha - a/q| <= 1/q^2`, with their `q log q`-type brackets.

use super::kernel::{MultipleNorms, Norm};
use crate::arith::{adaptive, HPFloat, Real};
use crate::error::{Error, Result};
use rug::{Float, Integer, Rational};

const PREC: u32 = 128;

#[derive(Clone, Debug)]
pub struct NathansonRow {
    pub name: &'static str,
    pub sum: HPFloat,
    pub bracket: HPFloat,
    /// `sum / bracket`, absent when the bracket vanishes.
    pub constant: Option<HPFloat>,
}

#[derive(Clone, Debug)]
pub struct NathansonSums {
    pub q: u64,
    pub rows: [NathansonRow; 4],
}

#[derive(Clone, Debug)]
pub struct NathansonParams {
    pub a: Integer,
    pub q: u64,
    pub u: u64,
    pub v: Rational,
    pub n: u64,
    pub h: u64,
}

/// `min(cap, 1/t)` for `t >= 0`, with `1/0` read as infinity.
fn capped_recip(t: &HPFloat, cap: &HPFloat) -> HPFloat {
    let p = cap.prec();
    let hi_t = HPFloat::exact(t.upper());
    let lo = if hi_t.definitely_positive() { hi_t.recip().min_ball(cap) } else { cap.clone() };
    let lo_t = HPFloat::exact(t.lower());
    let hi = if lo_t.definitely_positive() { lo_t.recip().min_ball(cap) } else { cap.clone() };
    HPFloat::from_interval(p, &lo.lower(), &hi.upper())
}

fn norm_ball(k: &MultipleNorms, j: u64) -> Result<HPFloat> {
    Ok(match k.norm(j, false)? {
        n @ Norm::Fixed { .. } => n.to_ball(PREC),
        Norm::Ball(b) => b,
    })
}

fn check_approximation(alpha: &Real, a: &Integer, q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::BadRationalApproximation("q must be positive".into()));
    }
    if Integer::from(a.gcd_ref(&Integer::from(q))) != 1 {
        return Err(Error::BadRationalApproximation(format!("gcd({a}, {q}) != 1")));
    }
    let aq = Rational::from((a.clone(), q));
    let limit = Rational::from((1, Integer::from(q) * q));
    let ok = adaptive(PREC, |p| {
        let d = alpha.enclosure(p).sub_ball(&HPFloat::from_rational(p, &aq)).abs();
        let exact = |f: Float| f.to_rational().expect("finite enclosure");
        if exact(d.upper()) <= limit {
            Ok(true)
        } else if exact(d.lower()) > limit {
            Ok(false)
        } else {
            Err(Error::PrecisionExhausted(format!("cannot compare |alpha - {aq}| with 1/q^2")))
        }
    })?;
    if ok {
        Ok(())
    } else {
        Err(Error::BadRationalApproximation(format!("|{alpha} - {aq}| > 1/{q}^2")))
    }
}

/// The sums
/// `sum_{1<=r<=q/2} 1/‖alpha r‖`,
/// `sum_{r<=q} min(V, 1/‖alpha (hq + r)‖)`,
/// `sum_{k<=U} min(n/k, 1/‖alpha k‖)`,
/// `sum_{k<=U} min(V, 1/‖alpha k‖)`
/// against `q log q`, `V + q log q`, `(n/q + U + q) log 2qU` and
/// `(q + U + V + UV/q) max(1, log q)`.
pub fn nathanson_sums(alpha: &Real, p: &NathansonParams) -> Result<NathansonSums> {
    check_approximation(alpha, &p.a, p.q)?;
    if p.u == 0 || p.n == 0 || p.v <= 0 {
        return Err(Error::InvalidArgument("U, V and n must be positive".into()));
    }
    let k = MultipleNorms::new(alpha);
    let v = HPFloat::from_rational(PREC, &p.v);
    let q = p.q;
    let qb = HPFloat::from_int(PREC, q);
    let log_q = qb.ln();
    let q_log_q = qb.mul_ball(&log_q);

    let mut s1 = HPFloat::zero(PREC);
    for r in 1..=q / 2 {
        let t = norm_ball(&k, r)?;
        if !t.definitely_positive() {
            return Err(Error::Pole(format!("‖{r} alpha‖ = 0")));
        }
        s1 = s1.add_ball(&t.recip());
    }
    let mut s2 = HPFloat::zero(PREC);
    for r in 1..=q {
        s2 = s2.add_ball(&capped_recip(&norm_ball(&k, p.h * q + r)?, &v));
    }
    let mut s3 = HPFloat::zero(PREC);
    let mut s4 = HPFloat::zero(PREC);
    for j in 1..=p.u {
        let t = norm_ball(&k, j)?;
        let n_over = HPFloat::from_rational(PREC, &Rational::from((p.n, j)));
        s3 = s3.add_ball(&capped_recip(&t, &n_over));
        s4 = s4.add_ball(&capped_recip(&t, &v));
    }

    let ub = HPFloat::from_int(PREC, p.u);
    let b3 = HPFloat::from_rational(PREC, &Rational::from((p.n, q)))
        .add_ball(&ub)
        .add_ball(&qb)
        .mul_ball(&qb.mul_ball(&ub).mul_2exp(1).ln());
    let b4 = qb
        .add_ball(&ub)
        .add_ball(&v)
        .add_ball(&ub.mul_ball(&v).div_u64(q))
        .mul_ball(&log_q.max_ball(&HPFloat::one(PREC)));
    let row = |name, sum: HPFloat, bracket: HPFloat| {
        let constant = bracket.definitely_positive().then(|| sum.div_ball(&bracket));
        NathansonRow { name, sum, bracket, constant }
    };
    Ok(NathansonSums {
        q,
        rows: [
            row("half_period", s1, q_log_q.clone()),
            row("shifted_capped", s2, v.add_ball(&q_log_q)),
            row("harmonic_capped", s3, b3),
            row("uniform_capped", s4, b4),
        ],
    })
}
