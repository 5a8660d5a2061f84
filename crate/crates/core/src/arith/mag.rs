//! Nonnegative upper bounds used as ball radii.
//!
//! A `Mag` is `man * 2^exp` with `man` in `[0.5, 1)` (or zero, or infinite).
//! Every operation rounds upward, so a computed `Mag` never understates the
//! true magnitude it bounds. The separate exponent keeps radii like `2^-16000`
//! representable where an `f64` would flush to zero.

use rug::float::Round;
use rug::Float;
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mag {
    man: f64,
    exp: i64,
}

fn frexp(v: f64) -> (f64, i64) {
    debug_assert!(v.is_finite() && v > 0.0 && v.is_normal());
    let bits = v.to_bits();
    let e = ((bits >> 52) & 0x7ff) as i64 - 1022;
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
    (m, e)
}

impl Mag {
    pub const ZERO: Mag = Mag { man: 0.0, exp: 0 };
    pub const INF: Mag = Mag { man: f64::INFINITY, exp: 0 };

    fn norm(man: f64, exp: i64) -> Mag {
        if man == 0.0 {
            return Mag::ZERO;
        }
        if !man.is_finite() {
            return Mag::INF;
        }
        let (m, e) = frexp(man);
        Mag { man: m, exp: exp + e }
    }

    pub fn is_zero(&self) -> bool {
        self.man == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.man.is_finite()
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Mag {
        Mag { man: 0.5, exp: e + 1 }
    }

    pub fn from_f64(v: f64) -> Mag {
        let v = v.abs();
        if v == 0.0 {
            Mag::ZERO
        } else if !v.is_finite() {
            Mag::INF
        } else if !v.is_normal() {
            Mag::pow2(-1022)
        } else {
            Mag::norm(v, 0)
        }
    }

    pub fn from_u64(v: u64) -> Mag {
        let f = v as f64;
        if (f as u64) == v {
            Mag::from_f64(f)
        } else {
            Mag::norm(f.next_up(), 0)
        }
    }

    /// Upper bound on `|x|`.
    pub fn from_float(x: &Float) -> Mag {
        if x.is_zero() {
            return Mag::ZERO;
        }
        if !x.is_finite() {
            return Mag::INF;
        }
        let (m, e) = x.to_f64_exp();
        let m = m.abs();
        if m == 0.0 {
            return Mag::ZERO;
        }
        // to_f64_exp rounds to nearest, one step up covers the rounding.
        Mag::norm(m.next_up(), e as i64)
    }

    /// Lower bound on `|x|`.
    pub fn from_float_down(x: &Float) -> Mag {
        if x.is_zero() || x.is_nan() {
            return Mag::ZERO;
        }
        if x.is_infinite() {
            return Mag::INF;
        }
        let (m, e) = x.to_f64_exp();
        // to_f64_exp is within half an ulp, one step down is below the true value.
        let m = m.abs().next_down();
        if m <= 0.0 {
            return Mag::ZERO;
        }
        Mag::norm(m, e as i64)
    }

    /// Exact value as an MPFR float (53 bits suffice for the mantissa).
    pub fn to_float(&self) -> Float {
        if self.is_zero() {
            return Float::new(53);
        }
        if !self.is_finite() {
            return Float::with_val(53, rug::float::Special::Infinity);
        }
        let e = self.exp.clamp(i32::MIN as i64 / 2, i32::MAX as i64 / 2) as i32;
        Float::with_val(53, self.man) << e
    }

    /// Value as `f64`, rounded up; saturates to infinity and flushes tiny values to the
    /// smallest positive subnormal so the result stays an upper bound.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if !self.is_finite() || self.exp > 1024 {
            return f64::INFINITY;
        }
        if self.exp < -1060 {
            return f64::from_bits(1);
        }
        let v = self.man * 2f64.powi(self.exp as i32);
        if v == 0.0 {
            f64::from_bits(1)
        } else {
            v
        }
    }

    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() || !self.is_finite() {
            None
        } else {
            Some(self.exp - 1)
        }
    }

    pub fn add(&self, o: &Mag) -> Mag {
        if self.is_zero() {
            return *o;
        }
        if o.is_zero() {
            return *self;
        }
        if !self.is_finite() || !o.is_finite() {
            return Mag::INF;
        }
        let (a, b) = if self.exp >= o.exp { (self, o) } else { (o, self) };
        let d = a.exp - b.exp;
        if d > 900 {
            return Mag::norm(a.man.next_up(), a.exp);
        }
        let s = a.man + b.man * 2f64.powi(-(d as i32));
        Mag::norm(s.next_up(), a.exp)
    }

    pub fn mul(&self, o: &Mag) -> Mag {
        if self.is_zero() || o.is_zero() {
            return Mag::ZERO;
        }
        if !self.is_finite() || !o.is_finite() {
            return Mag::INF;
        }
        Mag::norm((self.man * o.man).next_up(), self.exp + o.exp)
    }

    /// Upper bound on `self / o`; `o` must be a lower bound of the true divisor.
    pub fn div_lower(&self, o: &Mag) -> Mag {
        if self.is_zero() {
            return Mag::ZERO;
        }
        if o.is_zero() || !self.is_finite() {
            return Mag::INF;
        }
        if !o.is_finite() {
            return Mag::ZERO;
        }
        Mag::norm((self.man / o.man).next_up(), self.exp - o.exp)
    }

    pub fn mul_u64(&self, k: u64) -> Mag {
        self.mul(&Mag::from_u64(k))
    }

    pub fn mul_2exp(&self, e: i64) -> Mag {
        if self.is_zero() || !self.is_finite() {
            *self
        } else {
            Mag { man: self.man, exp: self.exp + e }
        }
    }

    pub fn max(&self, o: &Mag) -> Mag {
        if self.partial_cmp(o) == Some(Ordering::Less) {
            *o
        } else {
            *self
        }
    }
}

impl PartialOrd for Mag {
    fn partial_cmp(&self, o: &Mag) -> Option<Ordering> {
        Some(match (self.is_zero(), o.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => match (self.is_finite(), o.is_finite()) {
                (false, false) => Ordering::Equal,
                (false, true) => Ordering::Greater,
                (true, false) => Ordering::Less,
                _ => self.exp.cmp(&o.exp).then(self.man.total_cmp(&o.man)),
            },
        })
    }
}

/// Upper bound of a float computed at low precision, as a `Mag`.
pub(crate) fn mag_of_up(x: Float) -> Mag {
    if x.is_sign_negative() && !x.is_zero() {
        return Mag::ZERO;
    }
    Mag::from_float(&x)
}

/// Low-precision upward rounding of an MPFR value.
pub(crate) fn up(prec: u32, x: &Float) -> Float {
    Float::with_val_round(prec, x, Round::Up).0
}

pub(crate) fn down(prec: u32, x: &Float) -> Float {
    Float::with_val_round(prec, x, Round::Down).0
}
