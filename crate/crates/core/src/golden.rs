//! Frozen reference values: a JSON map from check id to
//! `{value, tolerance, provenance}`, produced by [`generate`] and checked in.

use crate::arith::{HPFloat, Real};
use crate::arith_funcs::{divisor_sum_identity, franel_landau_sum, goldbach_ratio};
use crate::contfrac::cf_expand;
use crate::dioph_sums::{
    nathanson_sums, norm_sum_drift, sum_recip_jnorm, sweep, NathansonParams, Normalize, SumKind, SweepRange,
};
use crate::equidist::{erdos_turan_row, weyl_quadratic};
use crate::error::{Error, Result};
use rug::Rational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Path of the checked-in file, relative to the core crate.
pub const GOLDEN_PATH: &str = "golden/golden_values.json";

/// The checked-in golden file of this crate.
pub fn default_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(GOLDEN_PATH)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenEntry {
    pub value: f64,
    /// A recomputed quantity matches when within `tolerance` of `value`;
    /// for band edges and fitted constants it is the allowed slack.
    pub tolerance: f64,
    /// How the value was computed.
    pub provenance: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GoldenFile {
    pub entries: BTreeMap<String, GoldenEntry>,
}

impl GoldenFile {
    pub fn parse(text: &str) -> Result<GoldenFile> {
        let g: GoldenFile = serde_json::from_str(text).map_err(|e| Error::Golden(e.to_string()))?;
        for (id, e) in &g.entries {
            if !e.value.is_finite() || !e.tolerance.is_finite() || e.tolerance < 0.0 {
                return Err(Error::Golden(format!("{id}: value and tolerance must be finite, tolerance >= 0")));
            }
        }
        Ok(g)
    }

    pub fn load(path: &std::path::Path) -> Result<GoldenFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Golden(format!("{}: {e}", path.display())))?;
        GoldenFile::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn get(&self, id: &str) -> Result<&GoldenEntry> {
        self.entries.get(id).ok_or_else(|| Error::Golden(format!("missing entry {id}")))
    }

    /// `|v - value| <= tolerance`.
    pub fn matches(&self, id: &str, v: f64) -> Result<bool> {
        let e = self.get(id)?;
        Ok((v - e.value).abs() <= e.tolerance)
    }

    fn put(&mut self, id: &str, value: f64, tolerance: f64, provenance: impl Into<String>) {
        self.entries.insert(id.into(), GoldenEntry { value, tolerance, provenance: provenance.into() });
    }
}

/// Odd `n` for the ternary Goldbach ratio.
pub const GOLDBACH_NS: [u64; 3] = [9_999, 10_001, 10_003];
/// Prime cutoff for the truncated singular series.
pub const SINGULAR_CUTOFF: u64 = 100_000;
/// Sizes for the Erdős–Turán constant; fitted on golden and sqrt 2 - 1, validated on pi.
pub const ERDOS_TURAN_NS: [u64; 3] = [100, 1_000, 10_000];
pub const QUADRATIC_NS: [u64; 3] = [100, 1_000, 10_000];
/// Sizes on which the constant in `|sum ‖n g‖ - N/4| <= C (log N)^2` is fitted; `10^5` is held out.
pub const NORM_SUM_FIT_NS: [u64; 3] = [1_000, 10_000, 50_000];

fn ln_sq(n: u64) -> f64 {
    (n as f64).ln().powi(2)
}

fn sqrt2_minus_1() -> Real {
    Real::surd(-1, 1, 2, 1).expect("valid surd")
}

/// Recomputes every golden value. Bands and fitted constants are the raw
/// extremes of the run; tolerances are fixed here and nowhere else.
pub fn generate(jobs: usize) -> Result<GoldenFile> {
    let mut g = GoldenFile::default();
    let golden = Real::golden();

    let range = SweepRange::new(5000, 40000, 100)?;
    let rows = sweep(&golden, SumKind::Recip, &range, Normalize::MLogM, jobs)?;
    let ratios: Vec<f64> = rows.iter().map(|r| r.ratio.to_f64()).collect();
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let sweep_desc = "sum_{j<=m} 1/‖j golden‖ / (m ln m), m = 5000:40000:100";
    g.put("recip_norm.band_lo", lo, 1e-9, format!("minimum of {sweep_desc}"));
    g.put("recip_norm.band_hi", hi, 1e-9, format!("maximum of {sweep_desc}"));

    let m = 10_000;
    let v = sum_recip_jnorm(&golden, m)?.to_f64() / ln_sq(m);
    g.put("jnorm.golden.1e4", v, 1e-9, "sum_{j<=10^4} 1/(j ‖j golden‖) / (ln 10^4)^2");

    let e = cf_expand(&golden, 14)?;
    let mut worst = [0f64; 4];
    for k in 6..=12 {
        let q = e.q()[k].to_u64().expect("small");
        let p = NathansonParams { a: e.p()[k].clone(), q, u: 2 * q, v: Rational::from(q), n: 10 * q, h: 3 };
        let s = nathanson_sums(&golden, &p)?;
        for (w, r) in worst.iter_mut().zip(&s.rows) {
            *w = w.max(r.constant.as_ref().map_or(0.0, HPFloat::to_f64));
        }
    }
    for (name, w) in ["half_period", "shifted_capped", "harmonic_capped", "uniform_capped"].iter().zip(worst) {
        g.put(
            &format!("nathanson.golden.{name}"),
            w,
            1e-9,
            format!("maximum {name} sum / bracket over (a, q) = (p_k, q_k), k = 6..12, U = 2q, V = q, n = 10q, h = 3"),
        );
    }

    let mut c = 0f64;
    for x in [golden.clone(), sqrt2_minus_1()] {
        for n in ERDOS_TURAN_NS {
            c = c.max(erdos_turan_row(&x, n, n, jobs)?.ratio.to_f64());
        }
    }
    g.put("erdos_turan.C", c, 0.0, "maximum D_N / bracket(m = N) over x in {golden, sqrt2 - 1}, N in {10^2, 10^3, 10^4}");

    let mut c = 0f64;
    for n in NORM_SUM_FIT_NS {
        c = c.max(norm_sum_drift(&golden, n)?.to_f64() / ln_sq(n));
    }
    g.put("norm_sum.C", c, 0.0, "maximum |sum_{n<=N} ‖n golden‖ - N/4| / (ln N)^2 over N in {10^3, 10^4, 5*10^4}");

    let x = sqrt2_minus_1();
    let vals: Vec<f64> = QUADRATIC_NS
        .iter()
        .map(|&n| Ok(weyl_quadratic(&x, n)?.lhs_squared.to_f64().sqrt() / ((n as f64) * (n as f64).ln()).sqrt()))
        .collect::<Result<_>>()?;
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let desc = "|sum_{n<=N} e(n^2 x)| / sqrt(N ln N), x = sqrt2 - 1, N in {10^2, 10^3, 10^4}";
    g.put("quadratic.sqrt2m1.band_lo", lo, 1e-9, format!("minimum of {desc}"));
    g.put("quadratic.sqrt2m1.band_hi", hi, 1e-9, format!("maximum of {desc}"));

    let n = 1000u64;
    let f = franel_landau_sum(n)?.to_f64() / (n as f64).powf(0.6);
    g.put("franel.1000", f, 1e-9, "sum |eta_{n,1000}| / 1000^0.6, monitoring only");

    let d = divisor_sum_identity(10_000)?.scaled.to_f64();
    g.put("divisor.1e4.scaled", d, 1e-9, "|sum_{k<=10^4} d(k) - n ln n - (2 gamma - 1) n| / sqrt n");

    for n in GOLDBACH_NS {
        let r = goldbach_ratio(n, SINGULAR_CUTOFF, jobs)?.ratio.to_f64();
        g.put(&format!("goldbach.{n}"), r, 1e-9, format!("2 R({n}) / ({n}^2 S({n})), S over primes <= {SINGULAR_CUTOFF}"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let mut g = GoldenFile::default();
        g.put("a.b", 1.5, 0.25, "test");
        let back = GoldenFile::parse(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert!(back.matches("a.b", 1.7).unwrap() && !back.matches("a.b", 1.8).unwrap());
        assert!(back.matches("missing", 0.0).is_err());
    }

    #[test]
    fn parse_rejects_bad_entries() {
        assert!(GoldenFile::parse(r#"{"x": {"value": 1, "tolerance": -1, "provenance": ""}}"#).is_err());
        assert!(GoldenFile::parse(r#"{"x": {"value": 1, "tolerance": 0}}"#).is_err());
        assert!(GoldenFile::parse(r#"{"x": {"value": 1, "tolerance": 0, "provenance": "", "extra": 2}}"#).is_err());
        assert!(GoldenFile::parse("[1, 2]").is_err());
    }
}
