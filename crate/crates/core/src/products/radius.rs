//! Radius of convergence of `sum R(n x) z^n` from the continued fraction,
//! `R_x = liminf a_{n+1}^(-1/q_n)`, and the numbers built to have a given radius.

use super::sine::sine_liminf_tails;
use crate::arith::{adaptive, HPFloat, Mag, Real};
use crate::contfrac::cf_expand;
use crate::error::{Error, Result};
use rug::{Integer, Rational};

const PREC: u32 = 128;
/// Exponents `s q_n` up to this are expanded into exact quotients.
const EXACT_EXPONENT: u32 = 8192;
/// Logarithms beyond this cannot be exponentiated in the float range.
const LOG_LIMIT: f64 = 5.0e8;

/// A positive integer, exactly or through an enclosure of its logarithm.
#[derive(Clone, Debug)]
pub enum Magnitude {
    Exact(Integer),
    Log(HPFloat),
}

impl Magnitude {
    pub fn ln(&self) -> HPFloat {
        match self {
            Magnitude::Exact(v) => HPFloat::from_int(PREC, v.clone()).ln(),
            Magnitude::Log(l) => l.clone(),
        }
    }

    /// The value as a ball, when it fits the float range.
    pub fn value(&self) -> Option<HPFloat> {
        match self {
            Magnitude::Exact(v) => Some(HPFloat::from_int(PREC, v.clone())),
            Magnitude::Log(l) => (l.upper() < LOG_LIMIT).then(|| l.exp()),
        }
    }

    /// An enclosure of `1/v`.
    fn recip(&self) -> HPFloat {
        match self {
            Magnitude::Exact(v) => HPFloat::from_int(PREC, v.clone()).recip(),
            Magnitude::Log(l) => l.neg().exp(),
        }
    }
}

/// `s(n)` in `a_{n+1} = [e^(s(n) q_n)]`.
#[derive(Clone, Debug, PartialEq)]
pub enum GrowthRate {
    /// `s(n) = r`, giving radius `e^-r`.
    Constant(Rational),
    /// `s(n) = n`, giving radius 0.
    Linear,
}

impl GrowthRate {
    fn at(&self, n: usize) -> Rational {
        match self {
            GrowthRate::Constant(r) => r.clone(),
            GrowthRate::Linear => Rational::from(n as u64),
        }
    }
}

impl std::fmt::Display for GrowthRate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GrowthRate::Constant(r) => write!(f, "a_(n+1) = [e^({r} q_n)]"),
            GrowthRate::Linear => write!(f, "a_(n+1) = [e^(n q_n)]"),
        }
    }
}

/// Quotients `a_1, ..., a_m` and denominators `q_0, ..., q_m` of the number
/// with `a_{n+1} = [e^(s(n) q_n)]`, as far as the float range allows.
#[derive(Clone, Debug)]
pub struct ConstructedExpansion {
    pub rate: GrowthRate,
    pub a: Vec<Magnitude>,
    pub q: Vec<Magnitude>,
}

/// `[e^t]` for an exact `t >= 0`.
fn floor_exp(t: &Rational) -> Result<Integer> {
    let start = (t.to_f64() * std::f64::consts::LOG2_E) as u32 + 64;
    adaptive(start, |p| HPFloat::from_rational(p, t).exp().floor())
}

/// `2 e^-t` as a magnitude, for `t` at least a few units.
fn two_exp_neg(t: &HPFloat) -> Mag {
    let bits = (t.lower().to_f64() * std::f64::consts::LOG2_E).min(1.0e6);
    Mag::pow2(1 - bits as i64)
}

pub fn construct(rate: &GrowthRate, max_quotients: usize) -> Result<ConstructedExpansion> {
    if let GrowthRate::Constant(r) = rate {
        if *r < 0 {
            return Err(Error::InvalidArgument("the rate must be nonnegative".into()));
        }
    }
    let mut a: Vec<Magnitude> = Vec::new();
    let mut q = vec![Magnitude::Exact(Integer::from(1))];
    let mut q_prev = Magnitude::Exact(Integer::new());
    for n in 0..max_quotients {
        let s = rate.at(n);
        let qn = q[n].clone();
        let (an, qn1) = match &qn {
            Magnitude::Exact(v) if Rational::from(&s * v) <= EXACT_EXPONENT => {
                let an = floor_exp(&Rational::from(&s * v))?;
                let Magnitude::Exact(p) = &q_prev else { unreachable!("exact q_n follows exact q_(n-1)") };
                let next = Integer::from(&an * v) + p;
                (Magnitude::Exact(an), Magnitude::Exact(next))
            }
            _ => {
                let Some(value) = qn.value() else { break };
                let t = value.mul_rational(&s);
                if !t.is_finite() {
                    break;
                }
                // e^t - 1 < a <= e^t, so ln a lies within 2e^-t below t
                let ln_a = t.add_rad(two_exp_neg(&t));
                // q_{n+1} = a q_n (1 + q_{n-1}/(a q_n)) and q_{n-1}/(a q_n) <= 1/a < 2e^-t
                let ln_q = ln_a.add_ball(&qn.ln()).add_rad(two_exp_neg(&t));
                (Magnitude::Log(ln_a), Magnitude::Log(ln_q))
            }
        };
        a.push(an);
        q_prev = qn;
        q.push(qn1);
    }
    Ok(ConstructedExpansion { rate: rate.clone(), a, q })
}

#[derive(Clone, Debug)]
pub struct RadiusEstimate {
    pub source: String,
    /// Largest index `k` used; fewer than requested when the expansion ran out.
    pub n: usize,
    /// `exp(ln d_k / q_k)` with `d_k = |q_k R(x) - p_k|`, for `k = 0..=n`.
    pub via_norm: Vec<HPFloat>,
    /// `a_{k+1}^(-1/q_k)` for `k = 0..=n`.
    pub via_formula: Vec<HPFloat>,
    /// Minima over the tail window `n/2 <= k <= n`.
    pub tail_norm: HPFloat,
    pub tail_formula: HPFloat,
}

fn tail_min(v: &[HPFloat], n: usize) -> HPFloat {
    v[n / 2..=n].iter().skip(1).fold(v[n / 2].clone(), |m, b| m.min_ball(b))
}

fn estimate(source: String, via_norm: Vec<HPFloat>, via_formula: Vec<HPFloat>) -> RadiusEstimate {
    let n = via_norm.len() - 1;
    RadiusEstimate {
        source,
        n,
        tail_norm: tail_min(&via_norm, n),
        tail_formula: tail_min(&via_formula, n),
        via_norm,
        via_formula,
    }
}

/// Estimators over `k = 0..=n` from the exact expansion of an irrational `x`.
pub fn radius_estimate(x: &Real, n: usize) -> Result<RadiusEstimate> {
    if x.is_rational() {
        return Err(Error::InvalidArgument("x must be irrational".into()));
    }
    let e = cf_expand(x, n + 1)?;
    let mut via_norm = Vec::with_capacity(n + 1);
    let mut via_formula = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let q = HPFloat::from_int(PREC, e.q()[k].clone());
        via_norm.push(e.d(k, PREC).ln().div_ball(&q).exp());
        via_formula.push(HPFloat::from_int(PREC, e.a()[k].clone()).ln().div_ball(&q).neg().exp());
    }
    Ok(estimate(format!("{x}"), via_norm, via_formula))
}

/// `ln d_k` for the constructed number: `d_k = 1/(q_{k+1} + t q_k)` with `0 <= t < 1`,
/// so `-ln q_{k+1} - 1/a_{k+1} < ln d_k <= -ln q_{k+1}`.
fn constructed_log_d(c: &ConstructedExpansion, k: usize) -> HPFloat {
    let hi = c.q[k + 1].ln().neg();
    let lo = hi.sub_ball(&c.a[k].recip());
    HPFloat::from_interval(PREC, &lo.lower(), &hi.upper())
}

/// Estimators for the number with `a_{k+1} = [e^(s(k) q_k)]`, up to `k = n`
/// or the last index whose `q_k` fits the float range.
pub fn radius_estimate_constructed(rate: &GrowthRate, n: usize) -> Result<RadiusEstimate> {
    let c = construct(rate, n + 1)?;
    let mut via_norm = Vec::new();
    let mut via_formula = Vec::new();
    for k in 0..c.a.len().min(n + 1) {
        let Some(q) = c.q[k].value() else { break };
        via_norm.push(constructed_log_d(&c, k).div_ball(&q).exp());
        via_formula.push(c.a[k].ln().div_ball(&q).neg().exp());
    }
    if via_norm.is_empty() {
        return Err(Error::InvalidArgument("no quotients requested".into()));
    }
    Ok(estimate(rate.to_string(), via_norm, via_formula))
}

/// `R_1` and `rho_1`, the radii of `sum z^n / prod_{k<=n} (1 - q_0^k)` and
/// `sum z^n / (1 - q_0^n)` with `q_0 = e(x)`, estimated by their tail-window minima.
#[derive(Clone, Debug)]
pub struct RadiusRelation {
    pub source: String,
    pub n: u64,
    /// Minimum of `(prod_{k<=m} |sin k pi x|)^(1/m)`; absent when not computed.
    pub r1: Option<HPFloat>,
    /// Minimum of `|sin m pi x|^(1/m)`.
    pub rho1: HPFloat,
    /// `R_1 / (rho_1 / 2)`, which tends to 1.
    pub ratio: Option<HPFloat>,
}

pub fn radius_relation_check(x: &Real, n: u64) -> Result<RadiusRelation> {
    let (r1, rho1) = sine_liminf_tails(x, n)?;
    let ratio = r1.div_ball(&rho1.mul_2exp(-1));
    Ok(RadiusRelation { source: format!("{x}"), n, r1: Some(r1), rho1, ratio: Some(ratio) })
}

/// `rho_1` for the constructed number from its convergent denominators, where
/// `|sin q_k pi x| = sin(pi d_k)` is smallest. `R_1` needs about `q_n` sine
/// factors and is not computed.
pub fn radius_relation_constructed(rate: &GrowthRate, n: usize) -> Result<RadiusRelation> {
    let c = construct(rate, n + 1)?;
    let pi = HPFloat::pi(PREC);
    let mut vals = Vec::new();
    for k in 1..c.a.len().min(n + 1) {
        let Some(q) = c.q[k].value() else { break };
        // y = pi d_k <= pi/q_{k+1} <= pi/2, where ln(sin y / y) lies in [-y^2, 0]
        let ld = constructed_log_d(&c, k);
        let y2 = pi.sqr().mul_ball(&c.q[k + 1].ln().mul_2exp(1).neg().exp());
        let corr = HPFloat::from_interval(PREC, &-y2.upper(), &rug::Float::new(PREC));
        vals.push(pi.ln().add_ball(&ld).add_ball(&corr).div_ball(&q).exp());
    }
    if vals.is_empty() {
        return Err(Error::InvalidArgument("need at least two quotients".into()));
    }
    // vals[i] belongs to k = i + 1; the window is n/2 <= k <= n
    let last = vals.len();
    let lo = (last / 2).max(1) - 1;
    let rho1 = vals[lo..].iter().skip(1).fold(vals[lo].clone(), |m, b| m.min_ball(b));
    Ok(RadiusRelation { source: rate.to_string(), n: last as u64, r1: None, rho1, ratio: None })
}
