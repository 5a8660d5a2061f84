//! Sine products `prod_{k<=n} |sin k pi x|` and `P_n(w) = prod_{r<=n} |2 sin r pi w|`,
//! always summed as logarithms.

use crate::arith::{HPFloat, Real};
use crate::dioph_sums::MultipleNorms;
use crate::error::{Error, Result};
use rug::Integer;

const PREC: u32 = 128;

/// Rejects `x` when some `k x` with `k <= n` is an integer.
fn check_poles(x: &Real, n: u64) -> Result<()> {
    if let Some(r) = x.as_rational() {
        if *r.denom() <= n {
            return Err(Error::Pole(format!("sin({} pi x) = 0 for x = {x}", r.denom())));
        }
    }
    Ok(())
}

/// `ln |sin j pi x| = ln sin(pi ‖j x‖)`.
pub(crate) fn log_sin(k: &MultipleNorms, j: u64) -> Result<HPFloat> {
    let t = k.norm(j, true)?.to_ball(PREC);
    let s = t.sin_pi();
    if !s.definitely_positive() {
        return Err(Error::PrecisionExhausted(format!("sin(pi ‖{j}x‖) not separated from 0")));
    }
    Ok(s.ln())
}

/// `ln |2 sin j pi x|`, a separate route from `ln 2 + ln |sin j pi x|`.
fn log_two_sin(k: &MultipleNorms, j: u64) -> Result<HPFloat> {
    let t = k.norm(j, true)?.to_ball(PREC);
    Ok(t.sin_pi().mul_2exp(1).ln())
}

/// `sum_{j=1}^n f(j)` over `jobs` contiguous ranges merged in order.
fn log_sum(x: &Real, n: u64, jobs: usize, f: fn(&MultipleNorms, u64) -> Result<HPFloat>) -> Result<HPFloat> {
    let k = MultipleNorms::new(x);
    let jobs = (jobs.clamp(1, 64) as u64).min(n.max(1));
    let block = n.div_ceil(jobs);
    let parts: Vec<Result<HPFloat>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                let k = &k;
                s.spawn(move || {
                    let (a, b) = (t * block + 1, ((t + 1) * block).min(n));
                    (a..=b).try_fold(HPFloat::zero(PREC), |acc, j| Ok(acc.add_ball(&f(k, j)?)))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("product worker panicked")).collect()
    });
    parts.into_iter().try_fold(HPFloat::zero(PREC), |acc, p| Ok(acc.add_ball(&p?)))
}

/// `sum_{k<=n} ln |sin k pi x|`.
pub fn log_sine_product(x: &Real, n: u64, jobs: usize) -> Result<HPFloat> {
    check_poles(x, n)?;
    log_sum(x, n, jobs, log_sin)
}

/// `sum_{r<=n} ln |2 sin r pi w| = ln P_n(w)`.
pub fn log_two_sin_product(w: &Real, n: u64, jobs: usize) -> Result<HPFloat> {
    check_poles(w, n)?;
    log_sum(w, n, jobs, log_two_sin)
}

/// `(prod_{k<=n} |sin k pi x|)^(1/n) = exp(n^-1 sum ln |sin k pi x|)`.
pub fn sin_product_geomean(x: &Real, n: u64, jobs: usize) -> Result<HPFloat> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(log_sine_product(x, n, jobs)?.div_u64(n).exp())
}

/// `P_n(w) = prod_{r<=n} |2 sin r pi w|`.
pub fn two_sin_product(w: &Real, n: u64, jobs: usize) -> Result<HPFloat> {
    Ok(log_two_sin_product(w, n, jobs)?.exp())
}

/// `F_1 = F_2 = 1`.
pub fn fibonacci(n: u32) -> Integer {
    let (mut a, mut b) = (Integer::new(), Integer::from(1));
    for _ in 0..n {
        let c = Integer::from(&a + &b);
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// `P_m(g)` at and just below Fibonacci indices, `g = (sqrt 5 - 1)/2`.
#[derive(Clone, Debug)]
pub struct FibonacciProducts {
    pub n: u32,
    pub f_n: u64,
    /// `P_{F_n}(g)`.
    pub at_f_n: HPFloat,
    /// `P_{F_n - 1}(g) / F_n`.
    pub before_f_n_scaled: HPFloat,
    /// `P_{F_{n-1}}(g) / F_n`.
    pub at_previous_scaled: HPFloat,
}

pub fn fibonacci_products(n: u32, jobs: usize) -> Result<FibonacciProducts> {
    if n < 3 {
        return Err(Error::InvalidArgument("n must be at least 3".into()));
    }
    let f_n = fibonacci(n).to_u64().ok_or_else(|| Error::InvalidArgument(format!("F_{n} too large")))?;
    let f_prev = fibonacci(n - 1).to_u64().expect("smaller than F_n");
    let g = Real::golden();
    let before = log_two_sin_product(&g, f_n - 1, jobs)?;
    let last = log_two_sin(&MultipleNorms::new(&g), f_n)?;
    let at_f_n = before.add_ball(&last).exp();
    let before_f_n_scaled = before.exp().div_u64(f_n);
    let at_previous_scaled = log_two_sin_product(&g, f_prev, jobs)?.exp().div_u64(f_n);
    Ok(FibonacciProducts { n, f_n, at_f_n, before_f_n_scaled, at_previous_scaled })
}

/// Smallest and largest `ln P_m(w) / ln m` over `2 <= m <= n`: the exponents
/// with `m^C1 <= P_m(w) <= m^C2` on that window.
pub fn two_sin_exponents(w: &Real, n: u64) -> Result<(HPFloat, HPFloat)> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    check_poles(w, n)?;
    let k = MultipleNorms::new(w);
    let mut s = log_two_sin(&k, 1)?;
    let mut lo: Option<HPFloat> = None;
    let mut hi: Option<HPFloat> = None;
    for m in 2..=n {
        s = s.add_ball(&log_two_sin(&k, m)?);
        let e = s.div_ball(&HPFloat::from_int(PREC, m).ln());
        lo = Some(lo.map_or(e.clone(), |l| l.min_ball(&e)));
        hi = Some(hi.map_or(e.clone(), |h| h.max_ball(&e)));
    }
    Ok((lo.expect("n >= 2"), hi.expect("n >= 2")))
}

/// Tail-window proxies for `liminf (prod_{k<=m} |sin k pi x|)^(1/m)` and
/// `liminf |sin m pi x|^(1/m)`: minima over `n/2 <= m <= n`.
pub(crate) fn sine_liminf_tails(x: &Real, n: u64) -> Result<(HPFloat, HPFloat)> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    check_poles(x, u64::MAX)?;
    let k = MultipleNorms::new(x);
    let mut s = HPFloat::zero(PREC);
    let mut prod_min: Option<HPFloat> = None;
    let mut term_min: Option<HPFloat> = None;
    for m in 1..=n {
        let l = log_sin(&k, m)?;
        s = s.add_ball(&l);
        if m >= n / 2 {
            let g = s.div_u64(m).exp();
            let t = l.div_u64(m).exp();
            prod_min = Some(prod_min.map_or(g.clone(), |v| v.min_ball(&g)));
            term_min = Some(term_min.map_or(t.clone(), |v| v.min_ball(&t)));
        }
    }
    Ok((prod_min.expect("window nonempty"), term_min.expect("window nonempty")))
}
