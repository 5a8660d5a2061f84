//! Exact and high-precision real arithmetic and the elementary rounding
//! functions `[x]`, `R(x)`, `‖x‖`, `(x)` and `{{x}}`.

mod ball;
mod cball;
mod mag;
mod parse;
mod real;

pub use ball::HPFloat;
pub use cball::CBall;
pub use mag::Mag;
pub use parse::parse_real;
pub use real::{DecimalLiteral, NamedConstant, QuadraticSurd, Real, SurdOrRational};

#[allow(unused_imports)]
pub(crate) use ball::format_scaled;

use crate::error::{Error, Result};
use rug::{Integer, Rational};

pub const DEFAULT_PRECISION: u32 = 256;
pub const PRECISION_CAP: u32 = 1 << 14;
pub const PRECISION_ENV: &str = "DIOPH_PRECISION_BITS";

/// Working precision: `DIOPH_PRECISION_BITS` when set to a valid value, else 256.
pub fn default_precision() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .filter(|&p| (32..=PRECISION_CAP).contains(&p))
        .unwrap_or(DEFAULT_PRECISION)
}

/// Runs `f` at `start` bits, doubling on precision-related failures until
/// the cap is passed; the last error then propagates.
pub fn adaptive<T>(start: u32, mut f: impl FnMut(u32) -> Result<T>) -> Result<T> {
    adaptive_capped(start, PRECISION_CAP, &mut f)
}

pub fn adaptive_capped<T>(start: u32, cap: u32, f: &mut impl FnMut(u32) -> Result<T>) -> Result<T> {
    let mut p = start.max(32);
    loop {
        match f(p) {
            Err(e) if e.is_precision_related() && p < cap => p = (p * 2).min(cap),
            other => return other,
        }
    }
}

/// Value of one of the rounding functions: exact when the input is exact.
#[derive(Clone, Debug)]
pub enum Rounded {
    Exact(Rational),
    Approx(HPFloat),
}

impl Rounded {
    pub fn to_ball(&self, prec: u32) -> HPFloat {
        match self {
            Rounded::Exact(q) => HPFloat::from_rational(prec, q),
            Rounded::Approx(b) => b.clone(),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Rounded::Exact(q) => Some(q),
            Rounded::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rounded::Exact(q) => q.to_f64(),
            Rounded::Approx(b) => b.to_f64(),
        }
    }
}

/// `[x]`, the greatest integer not exceeding `x`.
pub fn floor_int(x: &Real) -> Result<Integer> {
    x.floor()
}

/// `R(x) = x - [x]`.
pub fn frac_part(x: &Real, prec: u32) -> Result<Rounded> {
    match x.as_exact() {
        Some(SurdOrRational::Rational(q)) => Ok(Rounded::Exact(q.clone() - q.floor())),
        _ => {
            let r = x.frac()?;
            Ok(Rounded::Approx(r.eval(prec).unwrap_or_else(|_| r.enclosure(prec))))
        }
    }
}

/// `‖x‖ = min(R(x), 1 - R(x))`.
pub fn dist_nearest(x: &Real, prec: u32) -> Result<Rounded> {
    match x.as_rational() {
        Some(q) => {
            let f = &q - q.clone().floor();
            let g = Rational::from(1 - &f);
            Ok(Rounded::Exact(if f <= g { f } else { g }))
        }
        None => Ok(Rounded::Approx(x.enclosure(prec).dist_nearest())),
    }
}

/// Nearest integer, defined only off the half-integers.
fn nearest_integer(x: &Real, prec: u32) -> Result<Option<Integer>> {
    // m is the nearest integer iff [x + 1/2] = m and x is not a half-integer.
    let half = Rational::from((1, 2));
    match x.as_exact() {
        Some(SurdOrRational::Rational(q)) => {
            let shifted = Rational::from(&q + &half);
            if *shifted.denom() == 1 {
                Ok(None)
            } else {
                Ok(Some(shifted.floor().numer().clone()))
            }
        }
        Some(SurdOrRational::Surd(s)) => {
            let shifted = s.add_rational(&half);
            match shifted {
                SurdOrRational::Surd(t) => Ok(Some(t.floor())),
                SurdOrRational::Rational(_) => unreachable!("surd plus rational stays irrational"),
            }
        }
        None => {
            let m = adaptive(prec, |p| {
                x.enclosure(p).add_rational(&half).floor().map_err(|_| Error::IntervalStraddlesHalfInteger)
            })?;
            Ok(Some(m))
        }
    }
}

/// Riemann's `(x)`: `x - m_x` off the half-integers, `0` on them.
pub fn signed_nearest(x: &Real, prec: u32) -> Result<Rounded> {
    let Some(m) = nearest_integer(x, prec)? else {
        return Ok(Rounded::Exact(Rational::new()));
    };
    Ok(match x.as_rational() {
        Some(q) => Rounded::Exact(q - m),
        None => Rounded::Approx(x.enclosure(prec).sub_exact_int(&m)),
    })
}

/// `{{x}}`: like `(x)` but `1/2` on the half-integers, so the range is `(-1/2, 1/2]`.
pub fn braces_nearest(x: &Real, prec: u32) -> Result<Rounded> {
    let Some(m) = nearest_integer(x, prec)? else {
        return Ok(Rounded::Exact(Rational::from((1, 2))));
    };
    Ok(match x.as_rational() {
        Some(q) => Rounded::Exact(q - m),
        None => Rounded::Approx(x.enclosure(prec).sub_exact_int(&m)),
    })
}
