//! `|N^-1 sum f(y_n) - int f| <= V(f) D*_N` for functions of bounded variation
//! with known variation and integral.

use super::points::{discrepancy, discrepancy_star, PointSet};
use crate::arith::HPFloat;
use crate::error::Result;
use rug::{Float, Rational};

/// A function on `[0, 1)` with total variation and integral known in closed form.
pub trait BoundedVariation {
    fn name(&self) -> String;
    /// `f` over every point of the ball `t`, which lies in `[0, 1)` up to rounding.
    fn eval(&self, t: &HPFloat) -> HPFloat;
    /// `f(t)` exactly, when `f` maps rationals to rationals.
    fn eval_exact(&self, _t: &Rational) -> Option<Rational> {
        None
    }
    fn variation(&self) -> Rational;
    fn integral(&self) -> Rational;
}

/// `‖t‖`: variation 1, integral 1/4.
pub struct DistanceToNearest;

impl BoundedVariation for DistanceToNearest {
    fn name(&self) -> String {
        "dist_nearest".into()
    }
    fn eval(&self, t: &HPFloat) -> HPFloat {
        t.dist_nearest()
    }
    fn eval_exact(&self, t: &Rational) -> Option<Rational> {
        Some(t.clone().min(Rational::from(1 - t)))
    }
    fn variation(&self) -> Rational {
        Rational::from(1)
    }
    fn integral(&self) -> Rational {
        Rational::from((1, 4))
    }
}

/// `R(t) = t` on `[0, 1)`: variation 1, integral 1/2.
pub struct Sawtooth;

impl BoundedVariation for Sawtooth {
    fn name(&self) -> String {
        "fractional_part".into()
    }
    fn eval(&self, t: &HPFloat) -> HPFloat {
        t.clone()
    }
    fn eval_exact(&self, t: &Rational) -> Option<Rational> {
        Some(t.clone())
    }
    fn variation(&self) -> Rational {
        Rational::from(1)
    }
    fn integral(&self) -> Rational {
        Rational::from((1, 2))
    }
}

pub struct Constant(pub Rational);

impl BoundedVariation for Constant {
    fn name(&self) -> String {
        format!("constant {}", self.0)
    }
    fn eval(&self, t: &HPFloat) -> HPFloat {
        HPFloat::from_rational(t.prec(), &self.0)
    }
    fn eval_exact(&self, _t: &Rational) -> Option<Rational> {
        Some(self.0.clone())
    }
    fn variation(&self) -> Rational {
        Rational::new()
    }
    fn integral(&self) -> Rational {
        self.0.clone()
    }
}

/// Indicator of `[a, b)` with `0 <= a < b <= 1`: variation 2 (1 if `a = 0`), integral `b - a`.
pub struct Indicator {
    pub a: Rational,
    pub b: Rational,
}

impl BoundedVariation for Indicator {
    fn name(&self) -> String {
        format!("indicator [{}, {})", self.a, self.b)
    }
    fn eval(&self, t: &HPFloat) -> HPFloat {
        let p = t.prec();
        let (lo, hi) = (t.lower(), t.upper());
        if hi < self.a || lo >= self.b {
            HPFloat::zero(p)
        } else if lo >= self.a && hi < self.b {
            HPFloat::one(p)
        } else {
            HPFloat::from_interval(p, &Float::new(p), &Float::with_val(p, 1))
        }
    }
    fn eval_exact(&self, t: &Rational) -> Option<Rational> {
        Some(Rational::from((*t >= self.a && *t < self.b) as u32))
    }
    fn variation(&self) -> Rational {
        if self.a == 0 {
            Rational::from(1)
        } else {
            Rational::from(2)
        }
    }
    fn integral(&self) -> Rational {
        Rational::from(&self.b - &self.a)
    }
}

#[derive(Clone, Debug)]
pub struct KoksmaCheck {
    pub function: String,
    pub lhs: HPFloat,
    /// `V(f) D*_N`.
    pub rhs: HPFloat,
    /// `V(f) D_N`, the weaker form.
    pub rhs_full: HPFloat,
    pub holds: bool,
}

pub fn koksma_check(f: &dyn BoundedVariation, ps: &PointSet) -> Result<KoksmaCheck> {
    let p = 128;
    let n = ps.len() as u64;
    // zero variation means f is constant, so point uncertainty does not matter
    let exact: Option<Rational> = if ps.radius() == &0 || f.variation() == 0 {
        ps.points().iter().try_fold(Rational::new(), |acc, y| f.eval_exact(y).map(|v| acc + v))
    } else {
        None
    };
    let lhs = match exact {
        Some(total) => HPFloat::from_rational(p, &(total / n - f.integral()).abs()),
        None => {
            let r = HPFloat::from_rational(p, ps.radius()).mag_upper();
            let mut acc = HPFloat::zero(p);
            for y in ps.points() {
                let t = HPFloat::from_rational(p, y);
                let t = if ps.radius() == &0 { t } else { t.add_rad(r) };
                acc = acc.add_ball(&f.eval(&t));
            }
            acc.div_u64(n).sub_ball(&HPFloat::from_rational(p, &f.integral())).abs()
        }
    };
    let v = f.variation();
    let rhs = discrepancy_star(ps).mul_rational(&v);
    let rhs_full = discrepancy(ps).mul_rational(&v);
    let holds = lhs.definitely_le(&rhs);
    Ok(KoksmaCheck { function: f.name(), lhs, rhs, rhs_full, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Real;

    #[test]
    fn norm_and_sawtooth_on_golden() {
        let g = Real::golden();
        let ps = PointSet::n_alpha(&g, 10_000, 2).unwrap();
        let k = koksma_check(&DistanceToNearest, &ps).unwrap();
        assert!(k.holds && k.rhs.definitely_le(&k.rhs_full));
        let ps = PointSet::n_alpha(&g, 1000, 1).unwrap();
        assert!(koksma_check(&Sawtooth, &ps).unwrap().holds);
    }

    #[test]
    fn constant_has_zero_error() {
        let ps = PointSet::n_alpha(&Real::rational(5, 17), 100, 1).unwrap();
        let k = koksma_check(&Constant(Rational::from((2, 3))), &ps).unwrap();
        assert!(k.lhs.contains_rational(&Rational::new()) && k.lhs.is_exact() && k.holds);
        let ps = PointSet::n_alpha(&Real::pi(), 100, 1).unwrap();
        let k = koksma_check(&Constant(Rational::from((2, 3))), &ps).unwrap();
        assert!(k.lhs.is_exact() && k.holds);
    }

    #[test]
    fn indicator_counts() {
        let f = Indicator { a: Rational::from((1, 4)), b: Rational::from((1, 2)) };
        let ps = PointSet::new((0..8).map(|i| Rational::from((i, 8))).collect(), "grid").unwrap();
        // 2/8 and 3/8 fall inside, exactly the expected mass
        let k = koksma_check(&f, &ps).unwrap();
        assert!(k.lhs.contains_rational(&Rational::new()) && k.holds);
    }
}
