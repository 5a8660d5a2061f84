//! The verification matrix: reference values, exact identities, certified
//! inequalities, oracle equivalences and limit checks, grouped into suites.

use crate::arith::{CBall, HPFloat, Real};
use crate::arith_funcs::{
    divisor_sum_hyperbola, divisor_sum_identity, farey, ford_tangency, franel_landau_sum, gauss_identity, gauss_mu,
    goldbach_ratio, hermite_identity, legendre, mertens_ratio, prime_sieve, s_sum, stern_sum, ternary_r,
    totient_sum, FordCircle, FordContact,
};
use crate::bernoulli::{euler_gamma, faulhaber_sum, raabe_residual, stirling_check, watson_asymptotic, watson_direct};
use crate::contfrac::{
    brown_shiue_with, cf_expand, cf_expand_until, is_legal, ostrowski_expand, ContinuedFractionExpansion,
};
use crate::dioph_sums::{
    bound_h0, bound_hhalpha, bound_jalpha, fracpart_sum, sine_sandwich, surd_certificate, sweep, Normalize, SumKind,
    SweepRange,
};
use crate::equidist::{
    discrepancy, discrepancy_exact, discrepancy_star, discrepancy_star_exact, koksma_check, weyl_bound,
    weyl_quadratic, weyl_sum, BoundedVariation, DistanceToNearest, Indicator, PointSet, Sawtooth,
};
use crate::error::{Error, Result};
use crate::golden::{GoldenFile, GOLDBACH_NS, SINGULAR_CUTOFF};
use crate::products::{
    dedekind_sum, eta_functional_residual, fibonacci_products, hecke_abel_limit, partition_dp,
    partition_rademacher, partition_table, qbinomial_residual, radius_estimate_constructed, sin_product_geomean,
    GrowthRate,
};
use rug::ops::Pow;
use rug::{Integer, Rational};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ReferenceValues,
    Identities,
    Inequalities,
    Oracles,
    Limits,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::ReferenceValues, Suite::Identities, Suite::Inequalities, Suite::Oracles, Suite::Limits];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ReferenceValues => "reference-values",
            Suite::Identities => "identities",
            Suite::Inequalities => "inequalities",
            Suite::Oracles => "oracles",
            Suite::Limits => "limits",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(s, "expected reference-values, identities, inequalities, oracles or limits"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

/// Inputs shared by the checks. Without a golden file the band checks fail.
#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub jobs: usize,
    pub golden: Option<GoldenFile>,
}

type CheckFn = fn(&VerifyConfig) -> Result<(bool, String)>;

fn run(suite: Suite, checks: &[(&str, CheckFn)], cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    checks
        .iter()
        .map(|(id, f)| {
            let (passed, detail) = match f(cfg) {
                Ok(v) => v,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckOutcome { suite, id: (*id).to_string(), passed, detail }
        })
        .collect()
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    match suite {
        Suite::ReferenceValues => run(suite, REFERENCE_VALUES, cfg),
        Suite::Identities => run(suite, IDENTITIES, cfg),
        Suite::Inequalities => run(suite, INEQUALITIES, cfg),
        Suite::Oracles => run(suite, ORACLES, cfg),
        Suite::Limits => run(suite, LIMITS, cfg),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    Suite::ALL.iter().flat_map(|&s| run_suite(s, cfg)).collect()
}

/// Check ids per suite, in run order.
pub fn check_ids(suite: Suite) -> Vec<&'static str> {
    let table = match suite {
        Suite::ReferenceValues => REFERENCE_VALUES,
        Suite::Identities => IDENTITIES,
        Suite::Inequalities => INEQUALITIES,
        Suite::Oracles => ORACLES,
        Suite::Limits => LIMITS,
    };
    table.iter().map(|(id, _)| *id).collect()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn sqrt2_minus_1() -> Real {
    Real::surd(-1, 1, 2, 1).expect("valid surd")
}

fn sqrt11_minus_3() -> Real {
    Real::surd(-3, 1, 11, 1).expect("valid surd")
}

fn e_minus_2() -> Real {
    "e-2".parse().expect("named constant")
}

fn expect_digits(v: &HPFloat, places: u32, want: &str) -> Result<(bool, String)> {
    let got = v.truncated_decimal(places)?;
    Ok((got == want, format!("{got} (expected {want})")))
}

fn within(v: f64, target: f64, tol: f64) -> (bool, String) {
    ((v - target).abs() <= tol, format!("{v:.9} (target {target} +- {tol})"))
}

const REFERENCE_VALUES: &[(&str, CheckFn)] = &[
    ("watson.direct.1000", |_| expect_digits(&watson_direct(1000, 256)?, 6, "4477.593932")),
    ("watson.asymptotic.1000", |_| expect_digits(&watson_asymptotic(1000, 0, 256)?, 6, "4477.594019")),
    ("fracpart.golden.1e6", |_| {
        expect_digits(&fracpart_sum(&Real::golden(), 1_000_000, 256)?, 6, "0.941799")
    }),
    ("fracpart.pi.1e6", |_| expect_digits(&fracpart_sum(&Real::pi(), 1_000_000, 256)?, 6, "19.223414")),
    ("farey.5", |_| {
        let f = farey(5)?;
        let want: Vec<Rational> = [(0, 1), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2), (3, 5), (2, 3), (3, 4), (4, 5), (1, 1)]
            .iter()
            .map(|&(a, b)| q(a, b))
            .collect();
        let got: Vec<Rational> = f.elements().collect();
        let phi = totient_sum(5);
        Ok((got == want && phi == 10, format!("{} fractions, Phi(5) = {phi}", got.len())))
    }),
    ("farey.5.eta", |_| {
        let f = farey(5)?;
        let phi = totient_sum(5);
        let mut eta: Vec<Rational> = f
            .elements()
            .skip(1)
            .enumerate()
            .map(|(i, r)| r - Rational::from((Integer::from(i + 1), phi.clone())))
            .collect();
        eta.sort();
        let mut want = vec![q(1, 10), q(1, 20), q(1, 30), q(0, 1), q(0, 1), q(0, 1), q(-1, 30), q(-1, 20), q(-1, 10), q(0, 1)];
        want.sort();
        let total = franel_landau_sum(5)?;
        Ok((eta == want && total == q(11, 30), format!("sum |eta| = {total}")))
    }),
    ("legendre.6_7", |_| Ok((legendre(6, 7)? == -1, format!("(6/7) = {}", legendre(6, 7)?)))),
    ("legendre.2_7", |_| Ok((legendre(2, 7)? == 1, format!("(2/7) = {}", legendre(2, 7)?)))),
    ("gauss_mu.3_13", |_| {
        let (mu, l) = (gauss_mu(3, 13)?, legendre(3, 13)?);
        Ok((mu == 2 && l == 1, format!("mu(3, 13) = {mu}, (3/13) = {l}")))
    }),
    ("partition.4", |_| {
        let p = partition_dp(4);
        Ok((p == 5, format!("p(4) = {p}")))
    }),
    ("partition.rademacher.100", |_| {
        let v = partition_rademacher(100, 10)?;
        let rounded = v.mid().to_integer().expect("finite");
        let exact = partition_dp(100);
        let close = v.sub_ball(&HPFloat::from_int(v.prec(), rounded.clone())).abs().lt_f64(0.5);
        Ok((rounded == exact && close, format!("{} rounds to {rounded}, p(100) = {exact}", v.to_fixed(6))))
    }),
    ("cf.sqrt11m3.period", |_| {
        let e = cf_expand(&sqrt11_minus_3(), 10)?;
        let a: Vec<u64> = e.a().iter().map(|v| v.to_u64().unwrap_or(0)).collect();
        let period = e.period().map(|p| (p.preperiod, p.length));
        let ok = a == [3, 6, 3, 6, 3, 6, 3, 6, 3, 6] && period == Some((0, 2));
        Ok((ok, format!("a = {a:?}, period {period:?}")))
    }),
    ("cf.e_minus_2.pattern", |_| {
        let e = cf_expand(&e_minus_2(), 60)?;
        let bad: Vec<u64> = (1..=20u64).filter(|&k| e.a()[(3 * k - 2) as usize] != 2 * k).collect();
        Ok((bad.is_empty(), format!("a_(3k-1) = 2k fails for k in {bad:?}")))
    }),
    ("cf.one_one_one", |_| {
        let e = ContinuedFractionExpansion::from_quotients(vec![Integer::from(1); 3])?;
        let v = e.convergent(e.len());
        Ok((v == q(2, 3), format!("[1, 1, 1] = {v}")))
    }),
];

fn identity_reals() -> Vec<Real> {
    vec![Real::golden(), Real::pi(), sqrt2_minus_1(), e_minus_2(), sqrt11_minus_3(), Real::rational(355, 113)]
}

const IDENTITIES: &[(&str, CheckFn)] = &[
    ("cf.determinant", |_| {
        let bad: Vec<String> = identity_reals()
            .iter()
            .filter_map(|x| match cf_expand(x, 40) {
                Ok(e) if e.determinant_identity_holds() => None,
                _ => Some(x.to_string()),
            })
            .collect();
        Ok((bad.is_empty(), format!("failures: {bad:?}")))
    }),
    ("farey.neighbors.300", |_| {
        for n in 1..=300 {
            let f = farey(n)?;
            let t = f.terms();
            let ok = t.windows(2).all(|w| {
                let ((h, k), (h2, k2)) = (w[0], w[1]);
                k as i128 * h2 as i128 - h as i128 * k2 as i128 == 1
            });
            let phi = totient_sum(n);
            if !ok || t.len() != phi + 1u32 {
                return Ok((false, format!("order {n}")));
            }
        }
        Ok((true, "kh' - hk' = 1 and |F_N| = 1 + Phi(N) for N <= 300".into()))
    }),
    ("ford.tangency", |_| {
        for n in 1..=60 {
            let f = farey(n)?;
            for w in f.terms().windows(2) {
                let c1 = FordCircle::new(w[0].0 as i64, w[0].1 as i64)?;
                let c2 = FordCircle::new(w[1].0 as i64, w[1].1 as i64)?;
                if !matches!(ford_tangency(&c1, &c2)?, FordContact::Tangent { .. }) {
                    return Ok((false, format!("neighbors {:?} {:?} in order {n}", w[0], w[1])));
                }
            }
        }
        let far = ford_tangency(&FordCircle::new(0, 1)?, &FordCircle::new(2, 5)?)?;
        Ok((matches!(far, FordContact::Disjoint), "Farey neighbors tangent for N <= 60; C(0,1), C(2,5) disjoint".into()))
    }),
    ("hermite.gauss.stern", |_| {
        let xs = [Real::rational(7, 3), Real::rational(-22, 7), sqrt2_minus_1(), Real::surd(0, 1, 2, 1)?, Real::golden()];
        for x in &xs {
            for n in 1..=40 {
                if !hermite_identity(x, n)? {
                    return Ok((false, format!("hermite x = {x}, n = {n}")));
                }
                if x.is_irrational() && !gauss_identity(x, n)? {
                    return Ok((false, format!("gauss x = {x}, n = {n}")));
                }
            }
        }
        for m in 1..=40u64 {
            for n in 1..=40u64 {
                if Integer::from(m).gcd(&Integer::from(n)) == 1 && stern_sum(m, n)? != (m - 1) * (n - 1) / 2 {
                    return Ok((false, format!("stern m = {m}, n = {n}")));
                }
            }
        }
        Ok((true, "Hermite for n <= 40, Gauss on surds, Stern for coprime m, n <= 40".into()))
    }),
    ("reciprocity.200", |_| {
        let sieve = prime_sieve(200);
        let primes: Vec<u64> = (3..=200).filter(|&p| sieve[p as usize]).collect();
        let mut pairs = 0;
        for &p in &primes {
            for &r in &primes {
                if p == r {
                    continue;
                }
                let (lp, lr) = (legendre(p as i64, r)?, legendre(r as i64, p)?);
                let e = ((p - 1) / 2) * ((r - 1) / 2);
                let sign = if e % 2 == 0 { 1 } else { -1 };
                let mu_ok = if gauss_mu(p, r)? % 2 == 0 { lp == 1 } else { lp == -1 };
                let s_ok = s_sum(p, r)? + s_sum(r, p)? == e && s_sum(p, r)? % 2 == gauss_mu(p, r)? % 2;
                if lp * lr != sign || !mu_ok || !s_ok {
                    return Ok((false, format!("p = {p}, q = {r}")));
                }
                pairs += 1;
            }
        }
        Ok((true, format!("{pairs} ordered prime pairs")))
    }),
    ("divisor.1e4", |_| {
        let n = 10_000usize;
        let mut d = vec![0u64; n + 1];
        for k in 1..=n {
            for m in (k..=n).step_by(k) {
                d[m] += 1;
            }
        }
        let mut lhs = 0u64;
        for m in 1..=n {
            lhs += d[m];
            let rhs: u64 = (1..=m as u64).map(|k| m as u64 / k).sum();
            if lhs != rhs || divisor_sum_hyperbola(m as u64) != lhs {
                return Ok((false, format!("n = {m}")));
            }
        }
        let big = divisor_sum_identity(1_000_000)?;
        Ok((big.holds() && divisor_sum_identity(10_000)?.holds(), "sum d(k) = sum [n/k] for n <= 10^4 and 10^6".into()))
    }),
    ("faulhaber", |_| {
        for k in 0..=12u32 {
            for b in 1..=60u64 {
                let brute: Integer = (1..=b).map(|m| Integer::from(m).pow(k)).sum();
                if faulhaber_sum(1, b, k)? != brute {
                    return Ok((false, format!("k = {k}, b = {b}")));
                }
            }
        }
        Ok((true, "k <= 12, b <= 60".into()))
    }),
    ("raabe", |_| {
        for x in [Real::rational(3, 7), Real::golden(), Real::pi()] {
            for k in 1..=8 {
                for m in 1..=6 {
                    let r = raabe_residual(k, m, &x, 256)?;
                    if !r.contains_zero() {
                        return Ok((false, format!("x = {x}, k = {k}, q = {m}")));
                    }
                }
            }
        }
        Ok((true, "residual enclosure contains 0 for k <= 8, q <= 6".into()))
    }),
    ("dedekind.periodicity", |_| {
        for k in 1..=60u64 {
            for h in (-60i64..=60).filter(|h| Integer::from(*h).gcd(&Integer::from(k)) == 1) {
                if dedekind_sum(h, k)?.value != dedekind_sum(h + k as i64, k)?.value {
                    return Ok((false, format!("s({h}, {k})")));
                }
            }
        }
        Ok((true, "s(h + k, k) = s(h, k) for coprime |h| <= 60, k <= 60".into()))
    }),
];

fn psi_reals() -> Vec<Real> {
    vec![Real::golden(), sqrt2_minus_1(), sqrt11_minus_3(), Real::surd(-4, 1, 19, 1).expect("valid surd")]
}

const INEQUALITIES: &[(&str, CheckFn)] = &[
    ("cf.sandwich", |_| {
        for x in identity_reals() {
            let e = cf_expand(&x, 32)?;
            let top = if x.is_rational() { e.len().saturating_sub(2) } else { 30 };
            for k in 0..=top {
                if !e.sandwich_holds(k)? {
                    return Ok((false, format!("x = {x}, k = {k}")));
                }
            }
        }
        Ok((true, "1/(q_k(q_k+1 + q_k)) < |x - p_k/q_k| < 1/(q_k q_k+1)".into()))
    }),
    ("sine.sandwich", |_| {
        for x in [Real::golden(), Real::pi(), sqrt2_minus_1()] {
            for m in [10, 1_000, 100_000] {
                let s = sine_sandwich(&x, m)?;
                if !(s.lower_holds && s.upper_holds) {
                    return Ok((false, format!("x = {x}, m = {m}")));
                }
            }
        }
        Ok((true, "three x, m up to 10^5".into()))
    }),
    ("koksma", |cfg| {
        let fs: Vec<Box<dyn BoundedVariation>> = vec![
            Box::new(DistanceToNearest),
            Box::new(Sawtooth),
            Box::new(Indicator { a: q(1, 3), b: q(3, 4) }),
            Box::new(Indicator { a: q(0, 1), b: q(1, 7) }),
        ];
        for x in [Real::golden(), Real::pi(), Real::rational(13, 31)] {
            for n in [10, 1_000, 10_000] {
                let ps = PointSet::n_alpha(&x, n, cfg.jobs)?;
                for f in &fs {
                    if !koksma_check(f.as_ref(), &ps)?.holds {
                        return Ok((false, format!("x = {x}, N = {n}, f = {}", f.name())));
                    }
                }
            }
        }
        Ok((true, "four functions, three x, N up to 10^4".into()))
    }),
    ("discrepancy.star_bracket", |cfg| {
        for x in [Real::golden(), Real::pi(), e_minus_2(), Real::rational(5, 17)] {
            for n in [1, 7, 100, 5_000] {
                let ps = PointSet::n_alpha(&x, n, cfg.jobs)?;
                let (ds, d) = (discrepancy_star_exact(&ps), discrepancy_exact(&ps));
                if !(ds <= d && d <= Rational::from(&ds * 2u32)) {
                    return Ok((false, format!("x = {x}, N = {n}")));
                }
                if !discrepancy_star(&ps).overlaps(&HPFloat::from_rational(128, &ds)) || !discrepancy(&ps).overlaps(&HPFloat::from_rational(128, &d)) {
                    return Ok((false, format!("enclosures, x = {x}, N = {n}")));
                }
            }
        }
        Ok((true, "D* <= D <= 2 D*".into()))
    }),
    ("weyl.geometric", |_| {
        for x in [Real::golden(), Real::pi(), sqrt2_minus_1()] {
            for h in [1i64, 2, -3, 7] {
                let b = weyl_bound(&x, h, 128)?;
                for n in [1, 10, 1_000, 100_000] {
                    if !weyl_sum(&x, h, n, 128)?.definitely_le(&b) {
                        return Ok((false, format!("x = {x}, h = {h}, N = {n}")));
                    }
                }
            }
        }
        Ok((true, "|sum e(h n x)| <= 1/|sin(pi h x)|".into()))
    }),
    ("weyl.quadratic", |_| {
        for x in [Real::golden(), sqrt2_minus_1(), Real::pi()] {
            for n in [1, 10, 100, 2_000] {
                if !weyl_quadratic(&x, n)?.holds {
                    return Ok((false, format!("x = {x}, N = {n}")));
                }
            }
        }
        Ok((true, "|sum e(n^2 x)|^2 <= N + 4 sum_{n<=4N} 1/|sin(pi n x)|".into()))
    }),
    ("bounds.h0", |_| {
        let mut worst = 0f64;
        for x in psi_reals() {
            let c = surd_certificate(&x)?;
            let e = cf_expand(&x, 14)?;
            for n in 1..=12 {
                for h0 in [0, 1, 5].into_iter().filter(|h| e.q()[n + 1] > *h) {
                    let r = bound_h0(&x, &c.psi, n, h0)?;
                    worst = worst.max(r.ratio.to_f64());
                    if !r.below_one() {
                        return Ok((false, format!("x = {x}, n = {n}, h0 = {h0}")));
                    }
                }
            }
        }
        Ok((true, format!("largest ratio {worst:.4}")))
    }),
    ("bounds.jalpha", |_| {
        let mut worst = 0f64;
        for x in psi_reals() {
            let c = surd_certificate(&x)?;
            for m in [2, 10, 1_000, 100_000] {
                let r = bound_jalpha(&x, &c.psi, m)?;
                worst = worst.max(r.ratio.to_f64());
                if !r.below_one() {
                    return Ok((false, format!("x = {x}, m = {m}")));
                }
            }
        }
        Ok((true, format!("largest ratio {worst:.4}")))
    }),
    ("bounds.hhalpha", |_| {
        let mut worst = 0f64;
        for x in psi_reals() {
            let c = surd_certificate(&x)?;
            for m in [2, 10, 1_000, 100_000] {
                let r = bound_hhalpha(&x, &c.psi, m)?;
                worst = worst.max(r.ratio.to_f64());
                if !r.below_one() {
                    return Ok((false, format!("x = {x}, m = {m}")));
                }
            }
        }
        Ok((true, format!("largest ratio {worst:.4}")))
    }),
];

/// `D*_N` and `D_N` by scanning every interval with endpoints among the
/// points, 0 and 1, counting points by binary search in the sorted list.
pub fn discrepancy_scan(points: &[Rational]) -> (Rational, Rational) {
    let mut y = points.to_vec();
    y.sort();
    let n = Rational::from(y.len() as u64);
    let mut ends = vec![Rational::new()];
    ends.extend(y.iter().cloned());
    ends.push(Rational::from(1));
    let closed = |a: &Rational, b: &Rational| y.partition_point(|v| v <= b) - y.partition_point(|v| v < a);
    let open = |a: &Rational, b: &Rational| y.partition_point(|v| v < b).saturating_sub(y.partition_point(|v| v <= a));
    let dev = |a: &Rational, b: &Rational, star: bool| {
        let len = Rational::from(b - a);
        let over = Rational::from(closed(a, b) as u64) / &n - &len;
        // intervals [0, t) include 0 itself
        let inner = if star { y.partition_point(|v| v < b) } else { open(a, b) };
        let under = len - Rational::from(inner as u64) / &n;
        over.max(under)
    };
    let mut star = Rational::new();
    let mut full = Rational::new();
    for (i, a) in ends.iter().enumerate() {
        for b in &ends[i..] {
            let d = dev(a, b, false);
            if d > full {
                full = d;
            }
            if i == 0 {
                let d = dev(a, b, true);
                if d > star {
                    star = d;
                }
            }
        }
    }
    (star, full)
}

fn ostrowski_exhaustive(a: &[Integer], q: &[Integer], limit: u64) -> Vec<Vec<Vec<u64>>> {
    // every legal digit string with value <= limit, indexed by value
    let mut by_value: Vec<Vec<Vec<u64>>> = vec![Vec::new(); limit as usize + 1];
    let t_max = q.iter().take_while(|v| **v <= limit).count();
    fn rec(k: usize, t_max: usize, a: &[Integer], q: &[Integer], z: &mut Vec<u64>, value: u64, limit: u64, out: &mut Vec<Vec<Vec<u64>>>) {
        if k == t_max {
            let mut d = z.clone();
            while d.last() == Some(&0) {
                d.pop();
            }
            if value > 0 && is_legal(&d, a) {
                out[value as usize].push(d);
            }
            return;
        }
        let step = q[k].to_u64().expect("q_k <= limit");
        let cap = a[k].to_u64().unwrap_or(u64::MAX);
        let mut zk = 0u64;
        while zk <= cap && value + zk * step <= limit {
            z.push(zk);
            rec(k + 1, t_max, a, q, z, value + zk * step, limit, out);
            z.pop();
            zk += 1;
        }
    }
    rec(0, t_max, a, q, &mut Vec::new(), 0, limit, &mut by_value);
    by_value
}

fn fracpart_direct_prefix(x: &Real, m: u64) -> Result<Vec<HPFloat>> {
    let p = 256;
    let xb = x.enclosure(p + 64);
    let half = HPFloat::one(p + 64).mul_2exp(-1);
    let mut acc = HPFloat::zero(p + 64);
    let mut out = Vec::with_capacity(m as usize);
    for j in 1..=m {
        acc = acc.add_ball(&xb.mul_u64(j).fract()?.sub_ball(&half));
        out.push(acc.clone());
    }
    Ok(out)
}

const ORACLES: &[(&str, CheckFn)] = &[
    ("discrepancy.scan.500", |cfg| {
        let mut sets = Vec::new();
        for x in [Real::golden(), Real::pi(), Real::rational(7, 19), e_minus_2()] {
            for n in [1, 2, 13, 144, 500] {
                sets.push(PointSet::n_alpha(&x, n, cfg.jobs)?);
            }
        }
        sets.push(PointSet::new((0..100).map(|i| q(i * i % 101, 101)).collect(), "squares mod 101")?);
        for ps in &sets {
            let (s, d) = discrepancy_scan(ps.points());
            if s != discrepancy_star_exact(ps) || d != discrepancy_exact(ps) {
                return Ok((false, ps.source().to_string()));
            }
        }
        Ok((true, format!("{} point sets, N <= 500", sets.len())))
    }),
    ("ostrowski.exhaustive.1000", |_| {
        for x in [Real::golden(), sqrt2_minus_1(), Real::pi(), e_minus_2(), sqrt11_minus_3()] {
            let e = cf_expand_until(&x, &Integer::from(10_000))?;
            let table = ostrowski_exhaustive(e.a(), e.q(), 1000);
            for m in 1..=1000u64 {
                let all = &table[m as usize];
                let greedy = ostrowski_expand(m, &e)?;
                if all.len() != 1 || all[0] != greedy.z {
                    return Ok((false, format!("x = {x}, m = {m}: {} legal strings", all.len())));
                }
            }
        }
        Ok((true, "unique legal digits equal the greedy digits for m <= 1000".into()))
    }),
    ("brown_shiue.direct.1e4", |_| {
        let m = 10_000;
        for x in [Real::golden(), sqrt2_minus_1(), Real::pi(), e_minus_2()] {
            let e = cf_expand_until(&x, &Integer::from(m))?;
            let direct = fracpart_direct_prefix(&x, m)?;
            for (i, d) in direct.iter().enumerate() {
                let f = brown_shiue_with(&e, i as u64 + 1, 256)?;
                if !f.overlaps(d) || f.rad_f64() > 1e-30 {
                    return Ok((false, format!("x = {x}, m = {}", i + 1)));
                }
            }
        }
        Ok((true, "digit formula agrees with the direct sum for every m <= 10^4".into()))
    }),
    ("ternary_r.11", |cfg| {
        // 11 = 2 + 2 + 7 = 3 + 3 + 5, three orders each
        let l = |v: u64| HPFloat::from_int(256, v).ln();
        let want = l(2).sqr().mul_ball(&l(7)).add_ball(&l(3).sqr().mul_ball(&l(5))).mul_u64(3);
        let got = ternary_r(11, cfg.jobs)?;
        Ok((got.overlaps(&want), format!("R(11) = {}", got.to_fixed(12))))
    }),
    ("partition.table", |_| {
        // p(n) by the product expansion with the coin-change recurrence
        let n = 400;
        let mut p = vec![Integer::new(); n + 1];
        p[0] = Integer::from(1);
        for part in 1..=n {
            for m in part..=n {
                let add = p[m - part].clone();
                p[m] += add;
            }
        }
        Ok((partition_table(n) == p, "pentagonal recurrence equals coin-change table for n <= 400".into()))
    }),
];

fn golden_band(cfg: &VerifyConfig) -> Result<(f64, f64)> {
    let g = cfg.golden.as_ref().ok_or_else(|| Error::InvalidArgument("no golden file loaded".into()))?;
    Ok((g.get("recip_norm.band_lo")?.value, g.get("recip_norm.band_hi")?.value))
}

const LIMITS: &[(&str, CheckFn)] = &[
    ("sine.geomean.golden.1e6", |cfg| {
        Ok(within(sin_product_geomean(&Real::golden(), 1_000_000, cfg.jobs)?.to_f64(), 0.5, 0.01))
    }),
    ("sine.fibonacci.20", |cfg| Ok(within(fibonacci_products(20, cfg.jobs)?.at_f_n.to_f64(), 2.407, 0.01))),
    ("radius.constructed.r1", |_| {
        let r = radius_estimate_constructed(&GrowthRate::Constant(Rational::from(1)), 8)?;
        Ok(within(r.tail_formula.to_f64(), (-1f64).exp(), 0.01))
    }),
    ("hecke.golden.0999", |cfg| {
        let v = hecke_abel_limit(&Real::golden(), &q(999, 1000), 100_000, cfg.jobs)?;
        let target = -1.0 / (2.0 * std::f64::consts::PI);
        let dist = v.re.to_f64().hypot(v.im.to_f64() - target);
        Ok((dist < 0.01, format!("{:.6} {:+.6} i, distance {dist:.6} from -i/(2 pi)", v.re.to_f64(), v.im.to_f64())))
    }),
    ("qbinomial.residual", |_| {
        let c = |re: f64, im: f64| CBall::new(HPFloat::from_f64(256, re), HPFloat::from_f64(256, im));
        let r = qbinomial_residual(&c(0.3, 0.2), &c(0.0, 0.5), 60)?;
        Ok((r.lt_f64(1e-10), format!("residual {:.3e}", r.to_f64())))
    }),
    ("eta.functional", |_| {
        let t = |re: f64, im: f64| CBall::new(HPFloat::from_f64(256, re), HPFloat::from_f64(256, im));
        let cases = [([1i64, 1, 0, 1], t(0.0, 1.0)), ([0, -1, 1, 0], t(0.0, 1.0)), ([2, 1, 1, 1], t(0.0, 2.0))];
        let mut worst = 0f64;
        for (m, tau) in &cases {
            let r = eta_functional_residual(*m, tau, 100)?;
            worst = worst.max(r.upper().to_f64());
            if !r.lt_f64(1e-15) {
                return Ok((false, format!("matrix {m:?}: {:.3e}", r.to_f64())));
            }
        }
        Ok((true, format!("largest residual {worst:.3e}")))
    }),
    ("mertens.1e5", |_| Ok(within(mertens_ratio(100_000)?.to_f64(), 1.0, 1e-3))),
    ("stirling.1e4", |_| Ok(within(stirling_check(10_000, 256)?.to_f64(), 1.0, 1e-4))),
    ("euler_gamma.64", |_| {
        let g = euler_gamma(64)?;
        let (lo, hi) = (g.lower().to_f64(), g.upper().to_f64());
        Ok((lo <= 0.5772156649 + 1e-10 && hi >= 0.5772156649 && hi - lo < 1e-10, format!("[{lo:.12}, {hi:.12}]")))
    }),
    ("recip_norm.band", |cfg| {
        let (lo, hi) = golden_band(cfg)?;
        let rows = sweep(&Real::golden(), SumKind::Recip, &SweepRange::new(5000, 40000, 100)?, Normalize::MLogM, cfg.jobs)?;
        let slack = 1e-9;
        let outside = rows
            .iter()
            .filter(|r| {
                let v = r.ratio.to_f64();
                v < lo - slack || v > hi + slack
            })
            .count();
        Ok((outside == 0 && hi / lo < 1.5, format!("band [{lo:.6}, {hi:.6}], width ratio {:.4}, {outside} rows outside", hi / lo)))
    }),
    ("goldbach.1e4", |cfg| {
        let mut parts = Vec::new();
        let mut ok = true;
        for n in GOLDBACH_NS {
            let r = goldbach_ratio(n, SINGULAR_CUTOFF, cfg.jobs)?.ratio.to_f64();
            ok &= (0.8..=1.2).contains(&r);
            parts.push(format!("{n}: {r:.4}"));
        }
        Ok((ok, parts.join(", ")))
    }),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_on_grids() {
        let grid: Vec<Rational> = (0..10).map(|i| q(i, 10)).collect();
        assert_eq!(discrepancy_scan(&grid), (q(1, 10), q(1, 10)));
        let one = [q(1, 2)];
        assert_eq!(discrepancy_scan(&one), (q(1, 2), q(1, 1)));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert!(!check_ids(s).is_empty());
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn exhaustive_digits_on_golden() {
        let e = cf_expand_until(&Real::golden(), &Integer::from(1000)).unwrap();
        let t = ostrowski_exhaustive(e.a(), e.q(), 100);
        assert!((1..=100).all(|m| t[m].len() == 1));
    }

    #[test]
    fn reference_value_checks_pass() {
        let cfg = VerifyConfig { jobs: 2, golden: None };
        for o in run_suite(Suite::ReferenceValues, &cfg) {
            assert!(o.passed, "{}: {}", o.id, o.detail);
        }
    }
}
