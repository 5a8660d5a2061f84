//! Midpoint-radius balls over MPFR floats.

use super::mag::{down, mag_of_up, up, Mag};
use crate::error::{Error, Result};
use rug::float::{Constant, Round};
use rug::ops::AssignRound;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Working precision of radius side computations.
const LO: u32 = 64;

/// A real number known to lie in `[mid - rad, mid + rad]`.
///
/// Invariant: the true value is always inside the ball. Operations whose
/// input touches a singularity return an indeterminate ball (infinite radius).
#[derive(Clone, Debug)]
pub struct HPFloat {
    mid: Float,
    rad: Mag,
}

fn rounding_error(f: &Float, ord: Ordering) -> Mag {
    if ord == Ordering::Equal || f.is_zero() {
        return Mag::ZERO;
    }
    match f.get_exp() {
        // Round-to-nearest error is at most half an ulp; ulp = 2^(exp - prec).
        Some(e) => Mag::pow2(e as i64 - f.prec() as i64 - 1),
        None => Mag::INF,
    }
}

fn rounded<T>(prec: u32, val: T) -> (Float, Mag)
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    let (f, o) = Float::with_val_round(prec, val, Round::Nearest);
    let e = rounding_error(&f, o);
    (f, e)
}

impl HPFloat {
    pub fn new(mid: Float, rad: Mag) -> HPFloat {
        if !mid.is_finite() {
            return HPFloat::indeterminate(mid.prec());
        }
        HPFloat { mid, rad }
    }

    pub fn exact(mid: Float) -> HPFloat {
        HPFloat::new(mid, Mag::ZERO)
    }

    pub fn zero(prec: u32) -> HPFloat {
        HPFloat::exact(Float::new(prec))
    }

    pub fn one(prec: u32) -> HPFloat {
        HPFloat::exact(Float::with_val(prec, 1))
    }

    /// The whole real line.
    pub fn indeterminate(prec: u32) -> HPFloat {
        HPFloat { mid: Float::new(prec), rad: Mag::INF }
    }

    pub fn from_int(prec: u32, v: impl Into<Integer>) -> HPFloat {
        let v: Integer = v.into();
        let (m, e) = rounded(prec, &v);
        HPFloat::new(m, e)
    }

    pub fn from_i64(prec: u32, v: i64) -> HPFloat {
        let (m, e) = rounded(prec, v);
        HPFloat::new(m, e)
    }

    pub fn from_rational(prec: u32, v: &Rational) -> HPFloat {
        let (m, e) = rounded(prec, v);
        HPFloat::new(m, e)
    }

    pub fn from_f64(prec: u32, v: f64) -> HPFloat {
        let (m, e) = rounded(prec, v);
        HPFloat::new(m, e)
    }

    /// Ball covering the closed interval `[lo, hi]`.
    pub fn from_interval(prec: u32, lo: &Float, hi: &Float) -> HPFloat {
        let (m, e) = rounded(prec, lo + hi);
        let m = m / 2u32;
        let lo_dist = Float::with_val_round(LO, &m - lo, Round::Up).0;
        let hi_dist = Float::with_val_round(LO, hi - &m, Round::Up).0;
        let r = mag_of_up(lo_dist).max(&mag_of_up(hi_dist));
        HPFloat::new(m, r.add(&e))
    }

    pub fn pi(prec: u32) -> HPFloat {
        let (m, e) = rounded(prec, Constant::Pi);
        HPFloat::new(m, e)
    }

    pub fn ln2(prec: u32) -> HPFloat {
        let (m, e) = rounded(prec, Constant::Log2);
        HPFloat::new(m, e)
    }

    /// Euler's constant `gamma = 0.5772...`.
    pub fn euler_gamma(prec: u32) -> HPFloat {
        let (m, e) = rounded(prec, Constant::Euler);
        HPFloat::new(m, e)
    }

    pub fn e(prec: u32) -> HPFloat {
        HPFloat::one(prec).exp()
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec()
    }

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> Mag {
        self.rad
    }

    pub fn is_finite(&self) -> bool {
        self.rad.is_finite()
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Same value carried at a different midpoint precision.
    pub fn with_prec(&self, prec: u32) -> HPFloat {
        let (m, e) = rounded(prec, &self.mid);
        HPFloat::new(m, self.rad.add(&e))
    }

    pub fn add_rad(&self, extra: Mag) -> HPFloat {
        HPFloat::new(self.mid.clone(), self.rad.add(&extra))
    }

    /// Lower endpoint, rounded down.
    pub fn lower(&self) -> Float {
        let r = self.rad.to_float();
        Float::with_val_round(self.prec() + 8, &self.mid - &r, Round::Down).0
    }

    /// Upper endpoint, rounded up.
    pub fn upper(&self) -> Float {
        let r = self.rad.to_float();
        Float::with_val_round(self.prec() + 8, &self.mid + &r, Round::Up).0
    }

    /// Upper bound on `|x|` for every `x` in the ball.
    pub fn mag_upper(&self) -> Mag {
        Mag::from_float(&self.mid).add(&self.rad)
    }

    /// Lower bound on `|x|` for every `x` in the ball (zero when the ball contains 0).
    pub fn mag_lower(&self) -> Float {
        let a = down(LO, &Float::with_val(self.prec(), self.mid.abs_ref()));
        let r = up(LO, &self.rad.to_float());
        let d = Float::with_val_round(LO, &a - &r, Round::Down).0;
        if d.is_sign_negative() {
            Float::new(LO)
        } else {
            d
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// Radius as `f64` (rounded up).
    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.is_finite() && self.lower() <= *q && self.upper() >= *q
    }

    pub fn contains_float(&self, x: &Float) -> bool {
        self.is_finite() && self.lower() <= *x && self.upper() >= *x
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_finite() || (self.lower() <= 0 && self.upper() >= 0)
    }

    /// True when `other` is entirely inside `self`.
    pub fn contains(&self, other: &HPFloat) -> bool {
        self.is_finite()
            && other.is_finite()
            && self.lower() <= other.lower()
            && self.upper() >= other.upper()
    }

    pub fn overlaps(&self, other: &HPFloat) -> bool {
        !self.is_finite()
            || !other.is_finite()
            || (self.lower() <= other.upper() && other.lower() <= self.upper())
    }

    pub fn definitely_lt(&self, other: &HPFloat) -> bool {
        self.is_finite() && other.is_finite() && self.upper() < other.lower()
    }

    pub fn definitely_le(&self, other: &HPFloat) -> bool {
        self.is_finite() && other.is_finite() && self.upper() <= other.lower()
    }

    pub fn definitely_positive(&self) -> bool {
        self.is_finite() && self.lower() > 0
    }

    pub fn definitely_negative(&self) -> bool {
        self.is_finite() && self.upper() < 0
    }

    pub fn lt_f64(&self, v: f64) -> bool {
        self.is_finite() && self.upper() < v
    }

    pub fn gt_f64(&self, v: f64) -> bool {
        self.is_finite() && self.lower() > v
    }

    /// Smallest ball containing both.
    pub fn hull(&self, other: &HPFloat) -> HPFloat {
        if !self.is_finite() || !other.is_finite() {
            return HPFloat::indeterminate(self.prec().max(other.prec()));
        }
        let lo = self.lower().min(&other.lower());
        let hi = self.upper().max(&other.upper());
        HPFloat::from_interval(self.prec().max(other.prec()), &lo, &hi)
    }

    pub fn neg(&self) -> HPFloat {
        HPFloat { mid: Float::with_val(self.prec(), -&self.mid), rad: self.rad }
    }

    /// `|x|` is 1-Lipschitz, so the radius carries over unchanged.
    pub fn abs(&self) -> HPFloat {
        HPFloat { mid: Float::with_val(self.prec(), self.mid.abs_ref()), rad: self.rad }
    }

    pub fn add_ball(&self, o: &HPFloat) -> HPFloat {
        let p = self.prec().max(o.prec());
        let (m, e) = rounded(p, &self.mid + &o.mid);
        HPFloat::new(m, self.rad.add(&o.rad).add(&e))
    }

    pub fn sub_ball(&self, o: &HPFloat) -> HPFloat {
        let p = self.prec().max(o.prec());
        let (m, e) = rounded(p, &self.mid - &o.mid);
        HPFloat::new(m, self.rad.add(&o.rad).add(&e))
    }

    pub fn mul_ball(&self, o: &HPFloat) -> HPFloat {
        let p = self.prec().max(o.prec());
        let (m, e) = rounded(p, &self.mid * &o.mid);
        let am = Mag::from_float(&self.mid);
        let bm = Mag::from_float(&o.mid);
        let r = am.mul(&o.rad).add(&bm.mul(&self.rad)).add(&self.rad.mul(&o.rad)).add(&e);
        HPFloat::new(m, r)
    }

    pub fn div_ball(&self, o: &HPFloat) -> HPFloat {
        let p = self.prec().max(o.prec());
        let den_lo = o.mag_lower();
        if den_lo.is_zero() {
            return HPFloat::indeterminate(p);
        }
        let (m, e) = rounded(p, &self.mid / &o.mid);
        // |x/y - mx/my| <= (rx|my| + |mx|ry) / (|my|(|my| - ry))
        let bm = Mag::from_float(&o.mid);
        let num = self.rad.mul(&bm).add(&Mag::from_float(&self.mid).mul(&o.rad));
        let my_lo = down(LO, &Float::with_val(p, o.mid.abs_ref()));
        let den = Float::with_val_round(LO, &my_lo * &den_lo, Round::Down).0;
        let r = num.div_lower(&mag_down(&den)).add(&e);
        HPFloat::new(m, r)
    }

    pub fn recip(&self) -> HPFloat {
        HPFloat::one(self.prec()).div_ball(self)
    }

    pub fn sqr(&self) -> HPFloat {
        let (m, e) = rounded(self.prec(), self.mid.square_ref());
        let am = Mag::from_float(&self.mid);
        let r = am.mul(&self.rad).mul_2exp(1).add(&self.rad.mul(&self.rad)).add(&e);
        HPFloat::new(m, r)
    }

    pub fn add_i64(&self, k: i64) -> HPFloat {
        let (m, e) = rounded(self.prec(), &self.mid + k);
        HPFloat::new(m, self.rad.add(&e))
    }

    pub fn add_int(&self, k: &Integer) -> HPFloat {
        let (m, e) = rounded(self.prec(), &self.mid + k);
        HPFloat::new(m, self.rad.add(&e))
    }

    pub fn add_rational(&self, q: &Rational) -> HPFloat {
        self.add_ball(&HPFloat::from_rational(self.prec() + 16, q))
            .with_prec(self.prec())
    }

    pub fn mul_i64(&self, k: i64) -> HPFloat {
        let (m, e) = rounded(self.prec(), &self.mid * k);
        HPFloat::new(m, self.rad.mul_u64(k.unsigned_abs()).add(&e))
    }

    pub fn mul_u64(&self, k: u64) -> HPFloat {
        let (m, e) = rounded(self.prec(), &self.mid * k);
        HPFloat::new(m, self.rad.mul_u64(k).add(&e))
    }

    pub fn mul_int(&self, k: &Integer) -> HPFloat {
        let (m, e) = rounded(self.prec(), &self.mid * k);
        let km = Mag::from_float(&Float::with_val(LO, k));
        HPFloat::new(m, self.rad.mul(&km).add(&e))
    }

    pub fn mul_rational(&self, q: &Rational) -> HPFloat {
        self.mul_ball(&HPFloat::from_rational(self.prec(), q))
    }

    pub fn div_u64(&self, k: u64) -> HPFloat {
        assert!(k != 0, "division by zero integer");
        let (m, e) = rounded(self.prec(), &self.mid / k);
        let kl = mag_down(&down(LO, &Float::with_val(LO, k)));
        HPFloat::new(m, self.rad.div_lower(&kl).add(&e))
    }

    pub fn div_i64(&self, k: i64) -> HPFloat {
        let q = self.div_u64(k.unsigned_abs());
        if k < 0 {
            q.neg()
        } else {
            q
        }
    }

    pub fn mul_2exp(&self, e: i32) -> HPFloat {
        HPFloat { mid: Float::with_val(self.prec(), &self.mid << e), rad: self.rad.mul_2exp(e as i64) }
    }

    pub fn pow_u64(&self, n: u64) -> HPFloat {
        let mut result = HPFloat::one(self.prec());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_ball(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.sqr();
            }
        }
        result
    }

    pub fn sqrt(&self) -> HPFloat {
        let p = self.prec();
        if !self.is_finite() {
            return HPFloat::indeterminate(p);
        }
        let lo = self.lower();
        if lo.is_sign_negative() && !lo.is_zero() {
            let hi = self.upper();
            if hi < 0 {
                return HPFloat::indeterminate(p);
            }
            // Ball reaches below zero: enclose [0, sqrt(hi)].
            let s = Float::with_val_round(p, hi.sqrt_ref(), Round::Up).0;
            return HPFloat::from_interval(p, &Float::new(p), &s);
        }
        let (m, e) = rounded(p, self.mid.sqrt_ref());
        if self.rad.is_zero() {
            return HPFloat::new(m, e);
        }
        // |sqrt x - sqrt m| = |x - m| / (sqrt x + sqrt m) <= r / (sqrt lo + sqrt m)
        let slo = Float::with_val_round(LO, lo.sqrt_ref(), Round::Down).0;
        let sm = Float::with_val_round(LO, down(LO, &self.mid).sqrt_ref(), Round::Down).0;
        let den = Float::with_val_round(LO, &slo + &sm, Round::Down).0;
        let r = if den.is_zero() {
            // sqrt is 1/2-Hölder at zero.
            mag_of_up(Float::with_val_round(LO, up(LO, &self.rad.to_float()).sqrt_ref(), Round::Up).0)
        } else {
            self.rad.div_lower(&mag_down(&den))
        };
        HPFloat::new(m, r.add(&e))
    }

    pub fn exp(&self) -> HPFloat {
        let p = self.prec();
        if !self.is_finite() {
            return HPFloat::indeterminate(p);
        }
        let (m, e) = rounded(p, self.mid.exp_ref());
        // |e^x - e^m| <= e^(m + r) r
        let top = Float::with_val_round(LO, &up(LO, &self.mid) + &up(LO, &self.rad.to_float()), Round::Up).0;
        let bound = Float::with_val_round(LO, top.exp_ref(), Round::Up).0;
        let r = mag_of_up(bound).mul(&self.rad).add(&e);
        HPFloat::new(m, r)
    }

    pub fn ln(&self) -> HPFloat {
        let p = self.prec();
        if !self.is_finite() {
            return HPFloat::indeterminate(p);
        }
        let lo = self.lower();
        if lo <= 0 {
            return HPFloat::indeterminate(p);
        }
        let (m, e) = rounded(p, self.mid.ln_ref());
        // |ln x - ln m| <= r / lo
        let r = self.rad.div_lower(&mag_down(&down(LO, &lo))).add(&e);
        HPFloat::new(m, r)
    }

    pub fn sin(&self) -> HPFloat {
        let (m, e) = rounded(self.prec(), self.mid.sin_ref());
        HPFloat::new(m, self.rad.add(&e))
    }

    pub fn cos(&self) -> HPFloat {
        let (m, e) = rounded(self.prec(), self.mid.cos_ref());
        HPFloat::new(m, self.rad.add(&e))
    }

    pub fn atan(&self) -> HPFloat {
        let (m, e) = rounded(self.prec(), self.mid.atan_ref());
        HPFloat::new(m, self.rad.add(&e))
    }

    pub fn sinh(&self) -> HPFloat {
        let t = self.exp();
        t.sub_ball(&t.recip()).mul_2exp(-1)
    }

    pub fn cosh(&self) -> HPFloat {
        let t = self.exp();
        t.add_ball(&t.recip()).mul_2exp(-1)
    }

    /// `sin(pi x)` for a ball `x`.
    pub fn sin_pi(&self) -> HPFloat {
        HPFloat::pi(self.prec()).mul_ball(self).sin()
    }

    pub fn cos_pi(&self) -> HPFloat {
        HPFloat::pi(self.prec()).mul_ball(self).cos()
    }

    pub fn max_ball(&self, o: &HPFloat) -> HPFloat {
        // max(a, b) = (a + b + |a - b|) / 2
        self.add_ball(o).add_ball(&self.sub_ball(o).abs()).mul_2exp(-1)
    }

    pub fn min_ball(&self, o: &HPFloat) -> HPFloat {
        self.add_ball(o).sub_ball(&self.sub_ball(o).abs()).mul_2exp(-1)
    }

    /// Greatest integer `<= x`, certified for every point of the ball.
    pub fn floor(&self) -> Result<Integer> {
        if !self.is_finite() {
            return Err(Error::IntervalStraddlesInteger);
        }
        let lo = self.lower().floor().to_integer();
        let hi = self.upper().floor().to_integer();
        match (lo, hi) {
            (Some(a), Some(b)) if a == b => Ok(a),
            _ => Err(Error::IntervalStraddlesInteger),
        }
    }

    /// `R(x) = x - [x]`.
    pub fn fract(&self) -> Result<HPFloat> {
        let n = self.floor()?;
        Ok(self.sub_exact_int(&n))
    }

    /// `x - n` carried with enough bits that the subtraction is exact.
    pub(crate) fn sub_exact_int(&self, n: &Integer) -> HPFloat {
        let bits = n.significant_bits().max(1) + 2;
        let p = self.prec() + bits;
        let (m, e) = rounded(p, &self.mid - n);
        let (m2, e2) = rounded(self.prec(), &m);
        HPFloat::new(m2, self.rad.add(&e).add(&e2))
    }

    /// `‖x‖`, the distance to the nearest integer. It is 1-Lipschitz, so the
    /// ball never needs floor certification.
    pub fn dist_nearest(&self) -> HPFloat {
        let p = self.prec();
        if !self.is_finite() {
            return HPFloat::indeterminate(p);
        }
        let n = self.mid.to_integer().unwrap_or_default();
        let d = self.sub_exact_int(&n).abs();
        if self.rad.to_f64() >= 0.5 {
            return HPFloat::from_interval(p, &Float::new(p), &Float::with_val(p, 0.5));
        }
        d
    }

    /// The first `digits` fractional decimal places of `x`, truncated toward
    /// zero and certified for every point of the ball.
    pub fn truncated_decimal(&self, digits: u32) -> Result<String> {
        if self.definitely_negative() {
            let t = self.neg().truncated_decimal(digits)?;
            return Ok(format!("-{t}"));
        }
        let scale = Integer::from(10).pow(digits);
        let scaled = self.mul_ball(&HPFloat::from_int(self.prec() + 64, scale));
        let n = scaled.floor()?;
        Ok(format_scaled(&n, digits))
    }

    /// Fixed-point rendering of the midpoint rounded to `places` decimals.
    pub fn to_fixed(&self, places: u32) -> String {
        if !self.is_finite() {
            return "nan".to_string();
        }
        let scale = Integer::from(10).pow(places);
        let q = self.mid.to_rational().expect("finite") * scale;
        format_scaled(&q.round().numer().clone(), places)
    }

    /// Decimal rendering of the midpoint with the given number of significant digits.
    pub fn to_string_digits(&self, digits: usize) -> String {
        if !self.is_finite() {
            return "nan".to_string();
        }
        self.mid.to_string_radix(10, Some(digits.max(1)))
    }
}

fn mag_down(x: &Float) -> Mag {
    Mag::from_float_down(x)
}

pub(crate) fn format_scaled(n: &Integer, digits: u32) -> String {
    let neg = *n < 0;
    let s = Integer::from(n.abs_ref()).to_string();
    let d = digits as usize;
    let body = if d == 0 {
        s
    } else if s.len() > d {
        format!("{}.{}", &s[..s.len() - d], &s[s.len() - d..])
    } else {
        format!("0.{}{}", "0".repeat(d - s.len()), s)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for HPFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_finite() {
            return write!(f, "[indeterminate]");
        }
        let digits = match self.rad.log2_floor() {
            None => (self.prec() as f64 * std::f64::consts::LOG10_2) as usize,
            Some(e) => {
                let mag = self.mid.get_exp().unwrap_or(0) as i64;
                (((mag - e) as f64 * std::f64::consts::LOG10_2).floor() as i64).clamp(1, 1 + self.prec() as i64 / 3) as usize
            }
        };
        write!(f, "{} ± {:.3e}", self.mid.to_string_radix(10, Some(digits)), self.rad.to_f64())
    }
}

macro_rules! ball_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&HPFloat> for &HPFloat {
            type Output = HPFloat;
            fn $m(self, o: &HPFloat) -> HPFloat {
                self.$imp(o)
            }
        }
        impl $tr<HPFloat> for HPFloat {
            type Output = HPFloat;
            fn $m(self, o: HPFloat) -> HPFloat {
                self.$imp(&o)
            }
        }
        impl $tr<&HPFloat> for HPFloat {
            type Output = HPFloat;
            fn $m(self, o: &HPFloat) -> HPFloat {
                self.$imp(o)
            }
        }
    };
}

ball_binop!(Add, add, add_ball);
ball_binop!(Sub, sub, sub_ball);
ball_binop!(Mul, mul, mul_ball);
ball_binop!(Div, div, div_ball);

impl Neg for &HPFloat {
    type Output = HPFloat;
    fn neg(self) -> HPFloat {
        HPFloat::neg(self)
    }
}

impl Neg for HPFloat {
    type Output = HPFloat;
    fn neg(self) -> HPFloat {
        HPFloat::neg(&self)
    }
}
