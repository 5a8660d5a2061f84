//! Exact and symbolic real inputs.

use super::ball::HPFloat;
use super::mag::Mag;
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Complete, Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedConstant {
    Pi,
    E,
    /// `(-1 + sqrt 5) / 2 = 0.618...`
    Golden,
    Sqrt2,
}

impl NamedConstant {
    pub fn name(&self) -> &'static str {
        match self {
            NamedConstant::Pi => "pi",
            NamedConstant::E => "e",
            NamedConstant::Golden => "golden",
            NamedConstant::Sqrt2 => "sqrt2",
        }
    }
}

/// `(a + b sqrt d) / c` with `d` squarefree and greater than 1, `b != 0`,
/// `c > 0` and `gcd(a, b, c) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Integer,
    b: Integer,
    d: Integer,
    c: Integer,
}

/// Splits `n > 0` as `s^2 * f` with `f` squarefree.
fn square_part(n: &Integer) -> (Integer, Integer) {
    let mut rest = n.clone();
    let mut s = Integer::from(1);
    let mut p = Integer::from(2);
    while Integer::from(&p * &p) <= rest {
        let pp = Integer::from(&p * &p);
        while rest.is_divisible(&pp) {
            rest /= &pp;
            s *= &p;
        }
        while rest.is_divisible(&p) {
            rest /= &p;
        }
        p += 1;
    }
    let f = n / Integer::from(&s * &s);
    (s, f)
}

/// Either a rational number or an irrational quadratic surd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurdOrRational {
    Rational(Rational),
    Surd(QuadraticSurd),
}

impl QuadraticSurd {
    /// Normalizes `(a + b sqrt d) / c`; collapses to a rational when the
    /// radical part vanishes or `d` is a perfect square.
    pub fn new(a: Integer, b: Integer, d: Integer, c: Integer) -> Result<SurdOrRational> {
        if c == 0 {
            return Err(Error::InvalidArgument("surd denominator is zero".into()));
        }
        if d < 0 {
            return Err(Error::InvalidArgument("negative radicand".into()));
        }
        if b == 0 || d == 0 {
            return Ok(SurdOrRational::Rational(Rational::from((a, c))));
        }
        let (s, f) = square_part(&d);
        let b = b * s;
        if f == 1 {
            return Ok(SurdOrRational::Rational(Rational::from((a + b, c))));
        }
        let (mut a, mut b, mut c) = (a, b, c);
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = Integer::from(a.gcd_ref(&b)).gcd(&c);
        if g != 1 {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        Ok(SurdOrRational::Surd(QuadraticSurd { a, b, d: f, c }))
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }
    pub fn b(&self) -> &Integer {
        &self.b
    }
    pub fn d(&self) -> &Integer {
        &self.d
    }
    pub fn c(&self) -> &Integer {
        &self.c
    }

    pub fn golden() -> QuadraticSurd {
        QuadraticSurd { a: (-1).into(), b: 1.into(), d: 5.into(), c: 2.into() }
    }

    pub fn sqrt2() -> QuadraticSurd {
        QuadraticSurd { a: 0.into(), b: 1.into(), d: 2.into(), c: 1.into() }
    }

    /// Exact `floor((a + b sqrt d) / c)`.
    pub fn floor(&self) -> Integer {
        // b sqrt d = sign(b) sqrt(b^2 d), never an integer.
        let big = Integer::from(self.b.square_ref()) * &self.d;
        let t = big.sqrt();
        let num = if self.b > 0 { Integer::from(&self.a + &t) } else { Integer::from(&self.a - &t) - 1u32 };
        num.div_rem_floor(self.c.clone()).0
    }

    pub fn add_rational(&self, q: &Rational) -> SurdOrRational {
        // (a + b sqrt d)/c + n/m = (a m + n c + b m sqrt d) / (c m)
        let (n, m) = (q.numer(), q.denom());
        let a = Integer::from(&self.a * m) + Integer::from(n * &self.c);
        let b = Integer::from(&self.b * m);
        let c = Integer::from(&self.c * m);
        QuadraticSurd::new(a, b, self.d.clone(), c).expect("valid surd")
    }

    pub fn mul_rational(&self, q: &Rational) -> SurdOrRational {
        let (n, m) = (q.numer(), q.denom());
        let a = Integer::from(&self.a * n);
        let b = Integer::from(&self.b * n);
        let c = Integer::from(&self.c * m);
        QuadraticSurd::new(a, b, self.d.clone(), c).expect("valid surd")
    }

    /// `1 / x`; never fails because an irrational surd is nonzero.
    pub fn recip(&self) -> SurdOrRational {
        // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        let den = Integer::from(self.a.square_ref()) - Integer::from(self.b.square_ref()) * &self.d;
        let a = Integer::from(&self.c * &self.a);
        let b = -Integer::from(&self.c * &self.b);
        QuadraticSurd::new(a, b, self.d.clone(), den).expect("valid surd")
    }

    pub fn neg(&self) -> QuadraticSurd {
        QuadraticSurd { a: (-&self.a).complete(), b: (-&self.b).complete(), d: self.d.clone(), c: self.c.clone() }
    }

    /// Ball enclosure computed from a correctly rounded square root.
    pub fn enclosure(&self, prec: u32) -> HPFloat {
        let w = prec + 32 + self.size_bits();
        let s = HPFloat::from_int(w, self.d.clone()).sqrt();
        s.mul_int(&self.b).add_int(&self.a).div_ball(&HPFloat::from_int(w, self.c.clone()))
    }

    fn size_bits(&self) -> u32 {
        self.a.significant_bits().max(self.b.significant_bits()).max(self.c.significant_bits())
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).to_f64()
    }

    /// Exact sign comparison against zero.
    pub fn signum(&self) -> Ordering {
        // sign of a + b sqrt d
        let sa = self.a.cmp0();
        let sb = self.b.cmp0();
        if sa == sb || sa == Ordering::Equal {
            return sb;
        }
        let a2 = Integer::from(self.a.square_ref());
        let b2d = Integer::from(self.b.square_ref()) * &self.d;
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            _ => sb,
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt({}))/{}", self.a, sign, Integer::from(self.b.abs_ref()), self.d, self.c)
    }
}

/// A decimal string, optionally with a declared number of trustworthy places.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalLiteral {
    digits: String,
    value: Rational,
    places: Option<u32>,
}

impl DecimalLiteral {
    pub fn new(digits: &str, places: Option<u32>) -> Result<DecimalLiteral> {
        let value = parse_decimal(digits).ok_or_else(|| Error::parse(digits, "not a decimal number"))?;
        Ok(DecimalLiteral { digits: digits.to_string(), value, places })
    }

    pub fn digits(&self) -> &str {
        &self.digits
    }

    pub fn places(&self) -> Option<u32> {
        self.places
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// Half-width of the represented interval, `10^-places`.
    pub fn uncertainty(&self) -> Option<Rational> {
        self.places.map(|p| Rational::from((1, Integer::from(10).pow(p))))
    }
}

pub(crate) fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int, frac) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if int.len() + frac.len() > 20_000 {
        return None;
    }
    let all = format!("{int}{frac}");
    let n: Integer = if all.is_empty() { Integer::new() } else { all.parse().ok()? };
    let den = Integer::from(10).pow(frac.len() as u32);
    let q = Rational::from((n, den));
    Some(if neg { -q } else { q })
}

/// The single input type for every `x` in the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Real {
    Rational(Rational),
    Surd(QuadraticSurd),
    /// A named constant shifted by an integer.
    Named { constant: NamedConstant, offset: Integer },
    Decimal(DecimalLiteral),
}

impl From<SurdOrRational> for Real {
    fn from(v: SurdOrRational) -> Real {
        match v {
            SurdOrRational::Rational(q) => Real::Rational(q),
            SurdOrRational::Surd(s) => Real::Surd(s),
        }
    }
}

impl Real {
    pub fn rational(n: i64, d: i64) -> Real {
        Real::Rational(Rational::from((n, d)))
    }

    pub fn named(constant: NamedConstant) -> Real {
        Real::Named { constant, offset: Integer::new() }
    }

    pub fn golden() -> Real {
        Real::named(NamedConstant::Golden)
    }

    pub fn pi() -> Real {
        Real::named(NamedConstant::Pi)
    }

    pub fn surd(a: i64, b: i64, d: i64, c: i64) -> Result<Real> {
        QuadraticSurd::new(a.into(), b.into(), d.into(), c.into()).map(Real::from)
    }

    /// The exact rational value, if `self` is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Real::Rational(q) => Some(q.clone()),
            Real::Decimal(d) if d.places.is_none() => Some(d.value.clone()),
            _ => None,
        }
    }

    /// Exact surd or rational form when one exists.
    pub fn as_exact(&self) -> Option<SurdOrRational> {
        match self {
            Real::Rational(q) => Some(SurdOrRational::Rational(q.clone())),
            Real::Surd(s) => Some(SurdOrRational::Surd(s.clone())),
            Real::Named { constant: NamedConstant::Golden, offset } => {
                Some(QuadraticSurd::golden().add_rational(&Rational::from(offset)))
            }
            Real::Named { constant: NamedConstant::Sqrt2, offset } => {
                Some(QuadraticSurd::sqrt2().add_rational(&Rational::from(offset)))
            }
            Real::Decimal(d) if d.places.is_none() => Some(SurdOrRational::Rational(d.value.clone())),
            _ => None,
        }
    }

    pub fn as_surd(&self) -> Option<QuadraticSurd> {
        match self.as_exact() {
            Some(SurdOrRational::Surd(s)) => Some(s),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// True when the value is known to be irrational.
    pub fn is_irrational(&self) -> bool {
        matches!(self, Real::Surd(_) | Real::Named { .. })
    }

    /// A ball containing the value, with midpoint precision `prec`. For
    /// decimals with declared places the ball is as wide as the declaration.
    pub fn enclosure(&self, prec: u32) -> HPFloat {
        match self {
            Real::Rational(q) => HPFloat::from_rational(prec, q),
            Real::Surd(s) => s.enclosure(prec).with_prec(prec),
            Real::Named { constant, offset } => {
                let w = prec + 32 + offset.significant_bits();
                let base = match constant {
                    NamedConstant::Pi => HPFloat::pi(w),
                    NamedConstant::E => HPFloat::e(w),
                    NamedConstant::Golden => QuadraticSurd::golden().enclosure(w),
                    NamedConstant::Sqrt2 => QuadraticSurd::sqrt2().enclosure(w),
                };
                base.add_int(offset).with_prec(prec)
            }
            Real::Decimal(d) => {
                let b = HPFloat::from_rational(prec, &d.value);
                match d.uncertainty() {
                    None => b,
                    Some(u) => {
                        let um = Mag::from_float(&Float::with_val_round(64, &u, rug::float::Round::Up).0);
                        b.add_rad(um)
                    }
                }
            }
        }
    }

    /// A ball containing the value with half-width at most
    /// `2^-prec * max(1, |x|)`.
    pub fn eval(&self, prec: u32) -> Result<HPFloat> {
        if prec < 32 {
            return Err(Error::InvalidArgument(format!("precision {prec} is below 32 bits")));
        }
        let wide = self.enclosure(2 * prec + 16);
        let (mid, _) = Float::with_val_round(prec, wide.mid(), rug::float::Round::Nearest);
        let gap = Float::with_val_round(2 * prec + 48, wide.mid() - &mid, rug::float::Round::Up).0;
        let rad = Mag::from_float(&gap).add(&wide.rad());
        let ball = HPFloat::new(mid, rad);
        let limit = {
            let m = ball.mag_lower();
            let base = if m > 1 { Mag::from_float_down(&m) } else { Mag::pow2(0) };
            base.mul_2exp(-(prec as i64))
        };
        if !(ball.rad() <= limit) {
            return Err(Error::PrecisionExhausted(format!(
                "{self} cannot be evaluated to {prec} bits"
            )));
        }
        Ok(ball)
    }

    /// Exact `[x]`, with adaptive refinement for inexact inputs.
    pub fn floor(&self) -> Result<Integer> {
        match self.as_exact() {
            Some(SurdOrRational::Rational(q)) => Ok(q.floor().numer().clone()),
            Some(SurdOrRational::Surd(s)) => Ok(s.floor()),
            None => super::adaptive(super::default_precision(), |p| self.enclosure(p).floor()),
        }
    }

    /// `x + k` for an integer `k`.
    pub fn add_int(&self, k: &Integer) -> Real {
        match self {
            Real::Rational(q) => Real::Rational((q + k).complete()),
            Real::Surd(s) => s.add_rational(&Rational::from(k)).into(),
            Real::Named { constant, offset } => {
                Real::Named { constant: *constant, offset: (offset + k).complete() }
            }
            Real::Decimal(d) => {
                let value = (&d.value + k).complete();
                Real::Decimal(DecimalLiteral { digits: decimal_string(&value, &d.digits), value, places: d.places })
            }
        }
    }

    /// `R(x)` as a `Real`.
    pub fn frac(&self) -> Result<Real> {
        let n = self.floor()?;
        Ok(self.add_int(&(-n)))
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).to_f64()
    }
}

fn decimal_string(value: &Rational, original: &str) -> String {
    let places = original.split_once('.').map(|(_, f)| f.len()).unwrap_or(0) as u32;
    let scaled = (value.numer() * Integer::from(10).pow(places)) / value.denom();
    super::ball::format_scaled(&scaled, places)
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(q) => write!(f, "{q}"),
            Real::Surd(s) => write!(f, "{s}"),
            Real::Named { constant, offset } => match offset.cmp0() {
                Ordering::Equal => write!(f, "{}", constant.name()),
                Ordering::Greater => write!(f, "{}+{}", constant.name(), offset),
                Ordering::Less => write!(f, "{}-{}", constant.name(), Integer::from(offset.abs_ref())),
            },
            Real::Decimal(d) => match d.places {
                None => write!(f, "{}", d.digits),
                Some(p) => write!(f, "{}@{}", d.digits, p),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_normalization() {
        // (2 + 2 sqrt 8) / 4 = (1 + 2 sqrt 2) / 2
        let s = QuadraticSurd::new(2.into(), 2.into(), 8.into(), 4.into()).unwrap();
        let SurdOrRational::Surd(s) = s else { panic!() };
        assert_eq!((s.a().to_i32(), s.b().to_i32(), s.d().to_i32(), s.c().to_i32()), (Some(1), Some(2), Some(2), Some(2)));
        let r = QuadraticSurd::new(1.into(), 1.into(), 9.into(), 2.into()).unwrap();
        assert_eq!(r, SurdOrRational::Rational(Rational::from(2)));
    }

    #[test]
    fn surd_floor_exact() {
        assert_eq!(QuadraticSurd::golden().floor(), 0);
        assert_eq!(QuadraticSurd::sqrt2().floor(), 1);
        assert_eq!(QuadraticSurd::sqrt2().neg().floor(), -2);
        let SurdOrRational::Surd(s) = QuadraticSurd::new((-3).into(), 1.into(), 11.into(), 1.into()).unwrap() else {
            panic!()
        };
        assert_eq!(s.floor(), 0);
    }

    #[test]
    fn surd_recip_of_golden() {
        // 1/g = g + 1
        let r = QuadraticSurd::golden().recip();
        assert_eq!(r, QuadraticSurd::golden().add_rational(&Rational::from(1)));
    }

    #[test]
    fn eval_width_bound() {
        for (x, p) in [(Real::pi(), 256), (Real::golden(), 128), (Real::rational(2, 3), 64), (Real::rational(1000001, 3), 40)] {
            let b = x.eval(p).unwrap();
            let limit = b.mag_lower().max(&Float::with_val(64, 1)) >> p;
            assert!(b.rad().to_float() <= limit, "{x} at {p}");
        }
    }

    #[test]
    fn declared_decimal_refuses_extra_precision() {
        let d = Real::Decimal(DecimalLiteral::new("3.14159", Some(5)).unwrap());
        assert!(matches!(d.eval(64), Err(Error::PrecisionExhausted(_))));
        assert!(d.enclosure(64).contains(&Real::pi().eval(64).unwrap()));
        let exact = Real::Decimal(DecimalLiteral::new("0.3", None).unwrap());
        assert!(exact.eval(256).unwrap().contains_rational(&Rational::from((3, 10))));
    }

    #[test]
    fn floors() {
        assert_eq!(Real::rational(7, 2).floor().unwrap(), 3);
        assert_eq!(Real::rational(-1, 2).floor().unwrap(), -1);
        assert_eq!(Real::pi().floor().unwrap(), 3);
        let e2 = Real::Named { constant: NamedConstant::E, offset: Integer::from(-2) };
        assert_eq!(e2.floor().unwrap(), 0);
    }
}
