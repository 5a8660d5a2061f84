//! Rectangular complex balls built from two real balls.

use super::ball::HPFloat;

#[derive(Clone, Debug)]
pub struct CBall {
    pub re: HPFloat,
    pub im: HPFloat,
}

impl CBall {
    pub fn new(re: HPFloat, im: HPFloat) -> CBall {
        CBall { re, im }
    }

    pub fn real(re: HPFloat) -> CBall {
        let p = re.prec();
        CBall { re, im: HPFloat::zero(p) }
    }

    pub fn zero(prec: u32) -> CBall {
        CBall::real(HPFloat::zero(prec))
    }

    pub fn one(prec: u32) -> CBall {
        CBall::real(HPFloat::one(prec))
    }

    /// `i`
    pub fn i(prec: u32) -> CBall {
        CBall { re: HPFloat::zero(prec), im: HPFloat::one(prec) }
    }

    /// `e^{i theta}`
    pub fn cis(theta: &HPFloat) -> CBall {
        CBall { re: theta.cos(), im: theta.sin() }
    }

    /// `e^{2 pi i t}`
    pub fn cis_turns(t: &HPFloat) -> CBall {
        CBall::cis(&HPFloat::pi(t.prec()).mul_2exp(1).mul_ball(t))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn add(&self, o: &CBall) -> CBall {
        CBall { re: self.re.add_ball(&o.re), im: self.im.add_ball(&o.im) }
    }

    pub fn sub(&self, o: &CBall) -> CBall {
        CBall { re: self.re.sub_ball(&o.re), im: self.im.sub_ball(&o.im) }
    }

    pub fn neg(&self) -> CBall {
        CBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> CBall {
        CBall { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &CBall) -> CBall {
        CBall {
            re: self.re.mul_ball(&o.re).sub_ball(&self.im.mul_ball(&o.im)),
            im: self.re.mul_ball(&o.im).add_ball(&self.im.mul_ball(&o.re)),
        }
    }

    pub fn scale(&self, k: &HPFloat) -> CBall {
        CBall { re: self.re.mul_ball(k), im: self.im.mul_ball(k) }
    }

    pub fn norm_sqr(&self) -> HPFloat {
        self.re.sqr().add_ball(&self.im.sqr())
    }

    pub fn abs(&self) -> HPFloat {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> CBall {
        let n = self.norm_sqr();
        CBall { re: self.re.div_ball(&n), im: self.im.neg().div_ball(&n) }
    }

    pub fn div(&self, o: &CBall) -> CBall {
        self.mul(&o.recip())
    }

    pub fn exp(&self) -> CBall {
        CBall::cis(&self.im).scale(&self.re.exp())
    }

    pub fn pow_u64(&self, n: u64) -> CBall {
        let mut result = CBall::one(self.prec());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Principal square root. Only defined here for balls in the open right
    /// half-plane, where the branch is continuous; other inputs give an
    /// indeterminate result.
    pub fn sqrt_right_half_plane(&self) -> CBall {
        let p = self.prec();
        if !self.re.definitely_positive() {
            return CBall { re: HPFloat::indeterminate(p), im: HPFloat::indeterminate(p) };
        }
        // u = sqrt((|z| + a) / 2), v = b / (2u)
        let u = self.abs().add_ball(&self.re).mul_2exp(-1).sqrt();
        let v = self.im.div_ball(&u.mul_2exp(1));
        CBall { re: u, im: v }
    }

    /// Adds `extra` to both coordinate radii.
    pub fn inflate(&self, extra: &HPFloat) -> CBall {
        let m = extra.mag_upper();
        CBall { re: self.re.add_rad(m), im: self.im.add_rad(m) }
    }
}
