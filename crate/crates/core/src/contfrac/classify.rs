//! Diophantine type of `x`: bounded partial quotients, the table of
//! `h ‖h x‖` minima and the exponents `tau` with `q_{n+1} ~ q_n^(tau - 1)`.

use super::expansion::{cf_expand, cf_expand_until};
use crate::arith::{default_precision, Real};
use crate::error::{Error, Result};
use rug::Integer;

#[derive(Clone, Debug, PartialEq)]
pub struct TypeRow {
    /// A convergent denominator `q_k <= H`.
    pub h: Integer,
    /// `q_k ‖q_k x‖`, the minimum of `h ‖h x‖` over `q_k <= h < q_{k+1}`.
    pub h_norm: f64,
    /// Running minimum of `h ‖h x‖` over all `1 <= h <= q_k`.
    pub running_min: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiophClassification {
    pub x: Real,
    pub horizon: Integer,
    /// Whether the partial quotients stay bounded.
    pub bounded_pq: Option<bool>,
    /// True when `bounded_pq` is proved (surds, from the period) rather than guessed.
    pub certified: bool,
    /// `sup a_n` when certified bounded.
    pub max_quotient: Option<Integer>,
    pub empirical_type: Vec<TypeRow>,
    /// `(n, 1 + log q_{n+1} / log q_n)` for `q_{n+1} <= H`.
    pub tau_estimates: Vec<(usize, f64)>,
}

/// Classifies `x` from its expansion up to the horizon `H`.
///
/// For a surd the quotients are eventually periodic, so the maximum over the
/// preperiod and one period is exact. Otherwise the verdict is a heuristic:
/// growth is reported when the last third of the quotients with `q_n <= H`
/// exceeds every earlier quotient.
pub fn classify_type(x: &Real, horizon: &Integer) -> Result<DiophClassification> {
    if x.is_rational() {
        return Err(Error::InvalidArgument("rational numbers have no Diophantine type".into()));
    }
    if *horizon < 2 {
        return Err(Error::InvalidArgument("horizon must be at least 2".into()));
    }
    let e = cf_expand_until(x, horizon)?;
    let n_in = e.q().iter().skip(1).take_while(|q| *q <= horizon).count();
    let prec = default_precision();

    let mut empirical_type = Vec::new();
    let mut running = f64::INFINITY;
    for k in 0..=n_in {
        // with a_1 = 1, q_0 = q_1 and only d_1 equals ‖x‖
        if k + 1 < e.q().len() && e.q()[k] == e.q()[k + 1] {
            continue;
        }
        let h = e.q()[k].clone();
        let v = e.d(k, prec).mul_int(&h).to_f64();
        running = running.min(v);
        empirical_type.push(TypeRow { h, h_norm: v, running_min: running });
    }
    let tau_estimates = (1..n_in)
        .map(|k| {
            let lq = e.q()[k].to_f64().ln();
            let lq1 = e.q()[k + 1].to_f64().ln();
            (k, 1.0 + lq1 / lq)
        })
        .filter(|(_, t)| t.is_finite())
        .collect();

    let (bounded_pq, certified, max_quotient) = if let Some(per) = e.period() {
        let full = cf_expand(x, per.preperiod + per.length)?;
        let k = full.a().iter().max().cloned().expect("a surd has quotients");
        (Some(true), true, Some(k))
    } else {
        let a = &e.a()[..n_in];
        let cut = a.len() * 2 / 3;
        let verdict = if a.len() < 3 {
            None
        } else {
            let early = a[..cut].iter().max();
            let late = a[cut..].iter().max();
            Some(!(late > early))
        };
        (verdict, false, None)
    };
    Ok(DiophClassification {
        x: x.clone(),
        horizon: horizon.clone(),
        bounded_pq,
        certified,
        max_quotient,
        empirical_type,
        tau_estimates,
    })
}
