//! The singular series of the ternary Goldbach problem and the weighted count
//! `R(n) = sum_{p1+p2+p3=n} log p1 log p2 log p3`.

use crate::arith::HPFloat;
use crate::error::{Error, Result};
use rug::{Integer, Rational};

const PREC: u32 = 128;

/// `is_prime[k]` for `k <= n`.
pub fn prime_sieve(n: usize) -> Vec<bool> {
    let mut s = vec![true; n + 1];
    s[0] = false;
    if n >= 1 {
        s[1] = false;
    }
    let mut p = 2;
    while p * p <= n {
        if s[p] {
            for m in (p * p..=n).step_by(p) {
                s[m] = false;
            }
        }
        p += 1;
    }
    s
}

/// The local factor at `p`: `1 - (p-1)^-2` when `p | n`, else `1 + (p-1)^-3`.
pub fn singular_factor(p: u64, n: u64) -> Rational {
    let m = Integer::from(p - 1);
    if n.is_multiple_of(p) {
        1 - Rational::from((1, m.square()))
    } else {
        1 + Rational::from((1, Integer::from(m.square_ref()) * &m))
    }
}

/// `S(n)` from the primes up to `P` and every prime divisor of `n`; the
/// omitted factors lie in `[1, exp(1/(2 (P-1)^2))]`, which widens the ball.
pub fn singular_series(n: u64, cutoff: u64) -> Result<HPFloat> {
    if n == 0 || cutoff < 2 {
        return Err(Error::InvalidArgument("n must be positive and P at least 2".into()));
    }
    let sieve = prime_sieve(cutoff as usize);
    let mut acc = HPFloat::one(PREC);
    for p in (2..=cutoff).filter(|&p| sieve[p as usize]) {
        acc = acc.mul_rational(&singular_factor(p, n));
    }
    // prime divisors of n beyond P
    let mut rest = n;
    for p in (2..=cutoff).filter(|&p| sieve[p as usize]) {
        while rest.is_multiple_of(p) {
            rest /= p;
        }
    }
    let mut d = cutoff + 1;
    while rest > 1 && d * d <= rest {
        if rest.is_multiple_of(d) {
            acc = acc.mul_rational(&singular_factor(d, n));
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        acc = acc.mul_rational(&singular_factor(rest, n));
    }
    // the excluded p > P with p ∤ n only raise the product, by at most the integral bound
    let tail = HPFloat::from_rational(PREC, &Rational::from((1, Integer::from(cutoff - 1).square() * 2u32))).exp();
    let hi = acc.mul_ball(&tail);
    let lo = acc;
    Ok(HPFloat::from_interval(PREC, &lo.lower(), &hi.upper()))
}

/// `R(n)` over ordered prime triples, enumerating `p1 <= p2 <= p3` with
/// their arrangement counts; the outer prime is split across `jobs` threads.
pub fn ternary_r(n: u64, jobs: usize) -> Result<HPFloat> {
    if n > 10_000_000 {
        return Err(Error::InvalidArgument("n beyond the enumeration range".into()));
    }
    let len = n as usize;
    let sieve = prime_sieve(len);
    let primes: Vec<u64> = (2..=n).filter(|&p| sieve[p as usize]).collect();
    let logs: Vec<HPFloat> = primes.iter().map(|&p| HPFloat::from_int(PREC, p).ln()).collect();
    let index = |p: u64| primes.binary_search(&p).expect("prime");
    let outer: Vec<usize> = (0..primes.len()).filter(|&i| 3 * primes[i] <= n).collect();
    let jobs = jobs.clamp(1, 64);
    let parts: Vec<HPFloat> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                let (outer, primes, logs, sieve) = (&outer, &primes, &logs, &sieve);
                s.spawn(move || {
                    let mut acc = HPFloat::zero(PREC);
                    for &i in outer.iter().skip(t).step_by(jobs) {
                        let p1 = primes[i];
                        for j in i..primes.len() {
                            let p2 = primes[j];
                            if p1 + 2 * p2 > n {
                                break;
                            }
                            let p3 = n - p1 - p2;
                            if !sieve[p3 as usize] {
                                continue;
                            }
                            let arrangements = match (p1 == p2, p2 == p3) {
                                (true, true) => 1,
                                (false, false) => 6,
                                _ => 3,
                            };
                            let w = logs[i].mul_ball(&logs[j]).mul_ball(&logs[index(p3)]);
                            acc = acc.add_ball(&w.mul_u64(arrangements));
                        }
                    }
                    acc
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("triple worker panicked")).collect()
    });
    Ok(parts.iter().fold(HPFloat::zero(PREC), |a, b| a.add_ball(b)))
}

#[derive(Clone, Debug)]
pub struct GoldbachRatio {
    pub n: u64,
    pub r: HPFloat,
    pub singular: HPFloat,
    /// `2 R(n) / (n^2 S(n))`.
    pub ratio: HPFloat,
}

/// Defined for odd `n`; for even `n` the singular series vanishes.
pub fn goldbach_ratio(n: u64, cutoff: u64, jobs: usize) -> Result<GoldbachRatio> {
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("n = {n} is even, so S(n) = 0")));
    }
    let r = ternary_r(n, jobs)?;
    let singular = singular_series(n, cutoff)?;
    let nn = HPFloat::from_int(PREC, Integer::from(n) * n);
    let ratio = r.mul_2exp(1).div_ball(&nn.mul_ball(&singular));
    Ok(GoldbachRatio { n, r, singular, ratio })
}
