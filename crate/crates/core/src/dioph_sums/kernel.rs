//! Certified `‖j x‖` for consecutive `j`, and exact fixed-point accumulation.
//!
//! Each distance comes from a 96-bit fixed-point enclosure of `R(x)` when
//! that enclosure decides the term, and from an adaptive ball otherwise.
//! Reciprocal terms are rounded outward to multiples of `2^-RECIP_BITS` and
//! summed as integers, so segment sums add up exactly.

use crate::arith::{adaptive, HPFloat, Real};
use crate::contfrac::{FixedMultiples, FIX_BITS};
use crate::error::{Error, Result};
use rug::{Float, Integer};

/// Fraction bits of the reciprocal accumulators.
pub(crate) const RECIP_BITS: u32 = 62;
const ONE: u128 = 1 << FIX_BITS;
const HALF: u128 = 1 << (FIX_BITS - 1);
/// Largest index handled by the fixed-point path.
const FIXED_LIMIT: u64 = 1 << 31;
const OUT_PREC: u32 = 192;

/// Enclosure of `‖j x‖`.
#[derive(Clone, Debug)]
pub(crate) enum Norm {
    /// `[lo, hi] / 2^FIX_BITS`.
    Fixed { lo: u128, hi: u128 },
    Ball(HPFloat),
}

impl Norm {
    pub(crate) fn to_ball(&self, prec: u32) -> HPFloat {
        match self {
            Norm::Fixed { lo, hi } => {
                let s = |v: u128| Float::with_val(prec.max(130), Integer::from(v)) >> FIX_BITS;
                HPFloat::from_interval(prec, &s(*lo), &s(*hi))
            }
            Norm::Ball(b) => b.clone(),
        }
    }
}

/// `‖·‖` over a fractional-part interval `[fl, fh]`: concave, so the minimum
/// is at an endpoint and the maximum at an endpoint or at one half.
fn dist_units(fl: u128, fh: u128) -> (u128, u128) {
    let d = |f: u128| f.min(ONE - f);
    let lo = fl.min(ONE - fh);
    let hi = if fl <= HALF && HALF <= fh { HALF } else { d(fl).max(d(fh)) };
    (lo, hi)
}

/// `floor(2^(FIX_BITS + RECIP_BITS) / d)` and the matching ceiling, if they fit.
fn recip_units(d: u128) -> Option<(u128, u128)> {
    debug_assert!(d > 0 && d <= HALF);
    // two long-division steps: 2^127 / d, then the remainder shifted by 31
    let shift = FIX_BITS + RECIP_BITS - 127;
    let n = 1u128 << 127;
    let (q1, r1) = (n / d, n % d);
    if q1 >> (128 - shift) != 0 {
        return None;
    }
    let (q2, r2) = ((r1 << shift) / d, (r1 << shift) % d);
    let fl = (q1 << shift) | q2;
    Some((fl, fl + u128::from(r2 != 0)))
}

#[derive(Clone)]
pub(crate) struct MultipleNorms {
    x: Real,
    fixed: Option<FixedMultiples>,
}

impl MultipleNorms {
    pub(crate) fn new(x: &Real) -> MultipleNorms {
        let e = x.enclosure(256);
        let fixed = e.floor().ok().and_then(|n| FixedMultiples::new(&e.sub_exact_int(&n)));
        MultipleNorms { x: x.clone(), fixed }
    }

    /// `‖j x‖`, certified positive when `positive` is set.
    pub(crate) fn norm(&self, j: u64, positive: bool) -> Result<Norm> {
        if let (Some(f), true) = (&self.fixed, j < FIXED_LIMIT) {
            if let Some((fl, fh)) = f.frac_bounds(j) {
                let (lo, hi) = dist_units(fl, fh);
                if !positive || lo > 0 {
                    return Ok(Norm::Fixed { lo, hi });
                }
            }
        }
        let bits = 64 - j.leading_zeros();
        adaptive(128, |p| {
            let t = self.x.enclosure(p + bits + 32).mul_u64(j).dist_nearest();
            if positive && !t.definitely_positive() {
                return Err(Error::PrecisionExhausted(format!("cannot separate ‖{j}x‖ from 0 for x = {}", self.x)));
            }
            Ok(Norm::Ball(t.with_prec(p)))
        })
    }
}

/// Sum with an exact fixed-point part in units of `2^-bits` and a ball part.
#[derive(Clone, Debug)]
pub(crate) struct Partial {
    bits: u32,
    lo: u128,
    hi: u128,
    ball: HPFloat,
}

impl Partial {
    pub(crate) fn new(bits: u32) -> Partial {
        Partial { bits, lo: 0, hi: 0, ball: HPFloat::zero(OUT_PREC) }
    }

    fn overflow() -> Error {
        Error::HorizonExceeded { required: "a sum beyond 2^128 fixed-point units".into(), horizon: "2^128".into() }
    }

    pub(crate) fn add_fixed(&mut self, lo: u128, hi: u128) -> Result<()> {
        self.lo = self.lo.checked_add(lo).ok_or_else(Self::overflow)?;
        self.hi = self.hi.checked_add(hi).ok_or_else(Self::overflow)?;
        Ok(())
    }

    pub(crate) fn add_ball(&mut self, b: &HPFloat) {
        self.ball = self.ball.add_ball(b);
    }

    pub(crate) fn merge(&mut self, o: &Partial) -> Result<()> {
        debug_assert_eq!(self.bits, o.bits);
        self.add_fixed(o.lo, o.hi)?;
        self.add_ball(&o.ball);
        Ok(())
    }

    pub(crate) fn fixed_units(&self) -> (u128, u128) {
        (self.lo, self.hi)
    }

    pub(crate) fn value(&self) -> HPFloat {
        let s = |v: u128| Float::with_val(OUT_PREC, Integer::from(v)) >> self.bits;
        HPFloat::from_interval(OUT_PREC, &s(self.lo), &s(self.hi)).add_ball(&self.ball)
    }
}

/// What is summed over `j` in a segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Summand {
    /// `1/‖jx‖`
    Recip,
    /// `1/(j‖jx‖)`
    RecipJ,
    /// `‖jx‖`
    Norm,
    /// `1/|sin(pi j x)|`
    Sin,
}

impl Summand {
    pub(crate) fn bits(self) -> u32 {
        match self {
            Summand::Recip | Summand::RecipJ => RECIP_BITS,
            Summand::Norm => FIX_BITS,
            Summand::Sin => 0,
        }
    }
}

/// `sum_{j=start}^{end} f(j)`, empty when `start > end`.
pub(crate) fn segment(k: &MultipleNorms, what: Summand, start: u64, end: u64) -> Result<Partial> {
    let mut acc = Partial::new(what.bits());
    let positive = what != Summand::Norm;
    for j in start..=end {
        if j == 0 {
            continue;
        }
        let nrm = k.norm(j, positive)?;
        match (what, &nrm) {
            (Summand::Norm, Norm::Fixed { lo, hi }) => acc.add_fixed(*lo, *hi)?,
            (Summand::Recip | Summand::RecipJ, Norm::Fixed { lo, hi }) => match (recip_units(*hi), recip_units(*lo)) {
                (Some((r_lo, _)), Some((_, r_hi))) => {
                    if what == Summand::Recip {
                        acc.add_fixed(r_lo, r_hi)?;
                    } else {
                        let jj = u128::from(j);
                        acc.add_fixed(r_lo / jj, r_hi.div_ceil(jj))?;
                    }
                }
                _ => acc.add_ball(&recip_term(what, j, &nrm)),
            },
            (Summand::Norm, Norm::Ball(b)) => acc.add_ball(b),
            (Summand::Recip | Summand::RecipJ, Norm::Ball(_)) => acc.add_ball(&recip_term(what, j, &nrm)),
            (Summand::Sin, _) => acc.add_ball(&nrm.to_ball(OUT_PREC).sin_pi().recip()),
        }
    }
    Ok(acc)
}

fn recip_term(what: Summand, j: u64, nrm: &Norm) -> HPFloat {
    let r = nrm.to_ball(OUT_PREC).recip();
    if what == Summand::RecipJ {
        r.div_u64(j)
    } else {
        r
    }
}

/// Segment sums of `[1, m]` split across `jobs` threads, merged in order.
pub(crate) fn parallel_segments(k: &MultipleNorms, what: Summand, cuts: &[u64], jobs: usize) -> Result<Vec<Partial>> {
    // cuts are the increasing right ends; segment i is (cuts[i-1], cuts[i]]
    let bounds: Vec<(u64, u64)> =
        cuts.iter().enumerate().map(|(i, &e)| (if i == 0 { 1 } else { cuts[i - 1] + 1 }, e)).collect();
    let jobs = jobs.max(1);
    if jobs == 1 || bounds.len() == 1 && bounds[0].1 < 4096 {
        return bounds.iter().map(|&(s, e)| segment(k, what, s, e)).collect();
    }
    // split long segments so the work divides evenly
    let total = cuts.last().copied().unwrap_or(0);
    let piece = total.div_ceil(4 * jobs as u64).max(1024);
    let mut pieces = Vec::new();
    for (i, &(s, e)) in bounds.iter().enumerate() {
        let mut a = s;
        while a <= e {
            let b = e.min(a + piece - 1);
            pieces.push((i, a, b));
            a = b + 1;
        }
    }
    let done: Vec<Result<Vec<(usize, Partial)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                let pieces = &pieces;
                scope.spawn(move || {
                    (t..pieces.len())
                        .step_by(jobs)
                        .map(|n| {
                            let (_, a, b) = pieces[n];
                            segment(k, what, a, b).map(|p| (n, p))
                        })
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sum worker panicked")).collect()
    });
    let mut by_piece: Vec<Option<Partial>> = vec![None; pieces.len()];
    for r in done {
        for (n, p) in r? {
            by_piece[n] = Some(p);
        }
    }
    let mut out: Vec<Partial> = bounds.iter().map(|_| Partial::new(what.bits())).collect();
    for ((i, _, _), p) in pieces.iter().zip(by_piece) {
        out[*i].merge(&p.expect("every piece is summed"))?;
    }
    Ok(out)
}
