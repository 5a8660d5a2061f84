//! Point sets in `[0, 1)` and their exact discrepancies from the sorted order.

use crate::arith::{adaptive, HPFloat, Real};
use crate::contfrac::{FixedMultiples, FIX_BITS};
use crate::error::{Error, Result};
use rug::{Float, Integer, Rational};

/// Points `y_1, ..., y_N` in `[0, 1)`, each known to within `radius`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<Rational>,
    radius: Rational,
    source: String,
}

impl PointSet {
    pub fn new(points: Vec<Rational>, source: impl Into<String>) -> Result<PointSet> {
        PointSet::with_radius(points, Rational::new(), source)
    }

    pub fn with_radius(points: Vec<Rational>, radius: Rational, source: impl Into<String>) -> Result<PointSet> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("a point set needs at least one point".into()));
        }
        if let Some(bad) = points.iter().find(|p| **p < 0 || **p >= 1) {
            return Err(Error::InvalidArgument(format!("point {bad} is outside [0, 1)")));
        }
        if radius < 0 {
            return Err(Error::InvalidArgument("negative radius".into()));
        }
        Ok(PointSet { points, radius, source: source.into() })
    }

    /// `R(x), R(2x), ..., R(Nx)`, generated in parallel blocks.
    pub fn n_alpha(x: &Real, n: u64, jobs: usize) -> Result<PointSet> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be positive".into()));
        }
        let source = format!("R(n x), x = {x}, n <= {n}");
        if let Some(r) = x.as_rational() {
            let f = &r - r.clone().floor();
            let pts = (1..=n).map(|k| Rational::from(&f * k).fract_floor(Integer::new()).0).collect();
            return PointSet::new(pts, source);
        }
        let e = x.enclosure(256);
        let fixed = e.floor().ok().and_then(|fl| FixedMultiples::new(&e.sub_exact_int(&fl)));
        let jobs = jobs.clamp(1, 64) as u64;
        let block = n.div_ceil(jobs);
        let blocks: Vec<Result<Vec<(u128, u128)>>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|t| {
                    let fixed = fixed.as_ref();
                    s.spawn(move || {
                        let (a, b) = (t * block + 1, ((t + 1) * block).min(n));
                        (a..=b).map(|k| unit_bounds(x, fixed, k)).collect::<Result<Vec<_>>>()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("point worker panicked")).collect()
        });
        let mut units = Vec::with_capacity(n as usize);
        for b in blocks {
            units.extend(b?);
        }
        let width = units.iter().map(|(lo, hi)| hi - lo).max().unwrap_or(0);
        let scale = Integer::from(1) << FIX_BITS;
        let pts = units.iter().map(|(lo, _)| Rational::from((Integer::from(*lo), scale.clone()))).collect();
        // the true point lies in [lo, lo + width]; recentring costs one unit of radius
        PointSet::with_radius(pts, Rational::from((Integer::from(width), scale)), source)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    fn sorted(&self) -> Vec<Rational> {
        let mut v = self.points.clone();
        v.sort();
        v
    }

    fn widen(&self, v: Rational, prec: u32) -> HPFloat {
        // order statistics move by at most the radius, and each formula is 1-Lipschitz in them
        let b = HPFloat::from_rational(prec, &v);
        if self.radius == 0 {
            b
        } else {
            b.add_rad(crate::arith::Mag::from_float(&Float::with_val(64, &self.radius)).mul_2exp(1))
        }
    }
}

/// `[lo, hi] / 2^FIX_BITS` around `R(k x)`.
fn unit_bounds(x: &Real, fixed: Option<&FixedMultiples>, k: u64) -> Result<(u128, u128)> {
    if let (Some(f), true) = (fixed, k < 1 << 31) {
        if let Some(b) = f.frac_bounds(k) {
            return Ok(b);
        }
    }
    let bits = 64 - k.leading_zeros();
    adaptive(128, |p| {
        let t = x.enclosure(p + bits + 32).mul_u64(k);
        let n = t.floor()?;
        let f = t.sub_exact_int(&n);
        let u = |v: Float| (v << FIX_BITS as i32).floor().to_integer().expect("finite");
        let (lo, hi) = (u(f.lower()), u(f.upper()) + 1u32);
        Ok((lo.to_u128().unwrap_or(0), hi.to_u128().unwrap_or(1 << FIX_BITS).min(1 << FIX_BITS)))
    })
}

/// `D*_N` of the point values as given: `max_i max(i/N - y_i, y_i - (i-1)/N)` over sorted `y`.
pub fn discrepancy_star_exact(ps: &PointSet) -> Rational {
    let y = ps.sorted();
    let n = y.len() as u64;
    let mut best = Rational::new();
    for (i, yi) in y.iter().enumerate() {
        let i = i as u64 + 1;
        let a = Rational::from((i, n)) - yi;
        let b = yi - Rational::from((i - 1, n));
        best = best.max(a).max(b);
    }
    best
}

/// `D_N = 1/N + max_i (i/N - y_i) - min_i (i/N - y_i)` over sorted `y`.
pub fn discrepancy_exact(ps: &PointSet) -> Rational {
    let y = ps.sorted();
    let n = y.len() as u64;
    let mut hi: Option<Rational> = None;
    let mut lo: Option<Rational> = None;
    for (i, yi) in y.iter().enumerate() {
        let d = Rational::from((i as u64 + 1, n)) - yi;
        if hi.as_ref().is_none_or(|h| d > *h) {
            hi = Some(d.clone());
        }
        if lo.as_ref().is_none_or(|l| d < *l) {
            lo = Some(d);
        }
    }
    Rational::from((1, n)) + hi.expect("nonempty") - lo.expect("nonempty")
}

/// `D*_N` enclosing every point set within the radius.
pub fn discrepancy_star(ps: &PointSet) -> HPFloat {
    ps.widen(discrepancy_star_exact(ps), 128)
}

/// `D_N` enclosing every point set within the radius.
pub fn discrepancy(ps: &PointSet) -> HPFloat {
    ps.widen(discrepancy_exact(ps), 128)
}

/// `(3 + (1/log phi + K/log(K+1)) log N) / N`, the discrepancy bound for `R(n x)`
/// when every partial quotient of `x` is at most `K`.
pub fn bounded_type_discrepancy_bound(k: u64, n: u64) -> HPFloat {
    let p = 128;
    let phi = HPFloat::from_int(p, 5).sqrt().add_i64(1).mul_2exp(-1);
    let kb = HPFloat::from_int(p, k);
    let c = phi.ln().recip().add_ball(&kb.div_ball(&kb.add_i64(1).ln()));
    let nb = HPFloat::from_int(p, n);
    c.mul_ball(&nb.ln()).add_i64(3).div_ball(&nb)
}
