//! Index ranges `start:stop:step` and cumulative sweeps over them.

use super::bounds::SumRecord;
use super::sums::{cumulative_sums, m_log_m, SumKind, SUM_HORIZON};
use crate::arith::Real;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// `start, start + step, ...` up to and including `stop` when it is hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRange {
    pub start: u64,
    pub stop: u64,
    pub step: u64,
}

impl SweepRange {
    pub fn new(start: u64, stop: u64, step: u64) -> Result<SweepRange> {
        if start == 0 || step == 0 || stop < start {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= start <= stop and step >= 1, got {start}:{stop}:{step}"
            )));
        }
        if stop > SUM_HORIZON {
            return Err(Error::HorizonExceeded { required: stop.to_string(), horizon: SUM_HORIZON.to_string() });
        }
        Ok(SweepRange { start, stop, step })
    }

    pub fn single(m: u64) -> Result<SweepRange> {
        SweepRange::new(m, m, 1)
    }

    pub fn points(&self) -> Vec<u64> {
        (self.start..=self.stop).step_by(self.step as usize).collect()
    }
}

impl fmt::Display for SweepRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

impl FromStr for SweepRange {
    type Err = Error;

    /// `start:stop:step`, `start:stop` (step 1) or a single `m`.
    fn from_str(s: &str) -> Result<SweepRange> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| Error::parse(s, format!("bad index {t:?}: {e}")));
        let (a, b, c) = match parts.as_slice() {
            [m] => (num(m)?, num(m)?, 1),
            [a, b] => (num(a)?, num(b)?, 1),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(Error::parse(s, "expected start:stop:step")),
        };
        SweepRange::new(a, b, c).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// How sweep values are scaled before reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalize {
    None,
    /// Divide by `m log m`.
    MLogM,
    /// Divide by `(log m)^2`.
    LogSquared,
}

impl FromStr for Normalize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Normalize> {
        match s {
            "none" => Ok(Normalize::None),
            "mlogm" => Ok(Normalize::MLogM),
            "logsq" => Ok(Normalize::LogSquared),
            _ => Err(Error::parse(s, "expected none, mlogm or logsq")),
        }
    }
}

/// Cumulative sums at every point of `range`, as rows `value / scale(m)`.
pub fn sweep(x: &Real, kind: SumKind, range: &SweepRange, normalize: Normalize, jobs: usize) -> Result<Vec<SumRecord>> {
    let points = range.points();
    let values = cumulative_sums(x, kind, &points, jobs)?;
    points
        .into_iter()
        .zip(values)
        .map(|(m, v)| {
            let p = v.prec();
            let scale = match normalize {
                Normalize::None => crate::arith::HPFloat::one(p),
                Normalize::MLogM | Normalize::LogSquared if m < 2 => {
                    return Err(Error::InvalidArgument("log-normalized sweeps start at m = 2".into()))
                }
                Normalize::MLogM => m_log_m(m, p),
                Normalize::LogSquared => crate::arith::HPFloat::from_int(p, m).ln().sqr(),
            };
            Ok(SumRecord::new(m, v, scale))
        })
        .collect()
}
