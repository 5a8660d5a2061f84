//! Randomized invariants over exact arithmetic and certified enclosures.

use dioph::arith::Real;
use dioph::arith_funcs as af;
use dioph::contfrac as cfm;
use dioph::dioph_sums::SweepRange;
use dioph::equidist as eq;
use dioph::golden::GoldenFile;
use dioph::products as pr;
use dioph::verify::discrepancy_scan;
use proptest::prelude::*;
use rug::{Integer, Rational};

fn coprime(h: i64, k: u64) -> bool {
    Integer::from(h).gcd(&Integer::from(k)) == 1
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Irrational quadratic surds `(a + b sqrt d) / c` with non-square `d`.
fn surd() -> impl Strategy<Value = Real> {
    (-20i64..20, 1i64..6, 2i64..60, 1i64..8)
        .prop_filter("non-square d", |&(_, _, d, _)| {
            let r = (d as f64).sqrt() as i64;
            r * r != d && (r + 1) * (r + 1) != d
        })
        .prop_map(|(a, b, d, c)| Real::surd(a, b, d, c).unwrap())
}

fn odd_prime() -> impl Strategy<Value = u64> {
    prop::sample::select((3u64..400).filter(|&p| is_prime(p)).collect::<Vec<_>>())
}

fn points() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((0u32..1000, 1u32..1000), 1..40)
        .prop_map(|v| v.into_iter().map(|(n, d)| Rational::from((n % d, d))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dedekind_periodic_and_reciprocal(h in 1i64..300, k in 1u64..300) {
        prop_assume!(coprime(h, k));
        let s = pr::dedekind_sum(h, k).unwrap().value;
        prop_assert_eq!(&pr::dedekind_sum(h + k as i64, k).unwrap().value, &s);
        prop_assert_eq!(pr::dedekind_sum(-h, k).unwrap().value, Rational::from(-&s));
        // s(h, k) + s(k, h) = -1/4 + (h/k + k/h + 1/(hk)) / 12
        let t = pr::dedekind_sum(k as i64, h as u64).unwrap().value;
        let (hq, kq) = (Rational::from(h), Rational::from(k));
        let rhs = Rational::from((-1, 4))
            + (Rational::from(&hq / &kq) + Rational::from(&kq / &hq) + (hq * kq).recip()) / 12u32;
        prop_assert_eq!(s + t, rhs);
    }

    #[test]
    fn rademacher_terms_bounded(k in 1u64..60, n in 0u64..500) {
        let a = pr::rademacher_a(k, n, 128).unwrap();
        prop_assert!(!a.abs().gt_f64(k as f64));
    }

    #[test]
    fn farey_neighbors_and_ford(n in 1u64..150) {
        let f = af::farey(n).unwrap();
        prop_assert_eq!(Integer::from(f.len() as u64), af::totient_sum(n) + 1u32);
        for w in f.terms().windows(2) {
            let ((a, b), (c, d)) = (w[0], w[1]);
            prop_assert_eq!(b as i128 * c as i128 - a as i128 * d as i128, 1);
            prop_assert!(b + d > n);
            let contact = af::ford_tangency(
                &af::FordCircle::new(a as i64, b as i64).unwrap(),
                &af::FordCircle::new(c as i64, d as i64).unwrap(),
            ).unwrap();
            let tangent = matches!(contact, af::FordContact::Tangent { .. });
            prop_assert!(tangent);
        }
    }

    #[test]
    fn quadratic_reciprocity(p in odd_prime(), q in odd_prime()) {
        prop_assume!(p != q);
        let e = ((p - 1) / 2) * ((q - 1) / 2);
        let prod = af::legendre(p as i64, q).unwrap() * af::legendre(q as i64, p).unwrap();
        prop_assert_eq!(i64::from(prod), if e % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(af::s_sum(q, p).unwrap() + af::s_sum(p, q).unwrap(), e);
    }

    #[test]
    fn legendre_multiplicative(a in -200i64..200, b in -200i64..200, p in odd_prime()) {
        prop_assume!(a % p as i64 != 0 && b % p as i64 != 0);
        let lhs = af::legendre(a * b, p).unwrap();
        prop_assert_eq!(lhs, af::legendre(a, p).unwrap() * af::legendre(b, p).unwrap());
    }

    #[test]
    fn stern_closed_form(m in 1u64..200, n in 1u64..200) {
        prop_assume!(coprime(m as i64, n));
        prop_assert_eq!(af::stern_sum(m, n).unwrap(), (m - 1) * (n - 1) / 2);
    }

    #[test]
    fn hermite_and_gauss_on_surds(x in surd(), n in 1u64..40) {
        prop_assert!(af::hermite_identity(&x, n).unwrap());
        if x.to_f64() > 0.0 {
            prop_assert!(af::gauss_identity(&x, n).unwrap());
        }
    }

    #[test]
    fn determinant_identity_from_quotients(a in prop::collection::vec(1u32..1000, 1..40)) {
        let a: Vec<Integer> = a.into_iter().map(Integer::from).collect();
        let e = cfm::ContinuedFractionExpansion::from_quotients(a.clone()).unwrap();
        prop_assert!(e.determinant_identity_holds());
        prop_assert_eq!(e.a(), a.as_slice());
        // the last convergent is the rational with these quotients
        let back = cfm::cf_expand(&Real::Rational(e.convergent(a.len())), a.len() + 2).unwrap();
        let mut canon = a.clone();
        if canon.len() > 1 && *canon.last().unwrap() == 1 {
            canon.pop();
            *canon.last_mut().unwrap() += 1;
        }
        prop_assert_eq!(back.a(), canon.as_slice());
    }

    #[test]
    fn surd_expansions_sandwich(x in surd(), k in 0usize..15) {
        let e = cfm::cf_expand(&x, 18).unwrap();
        prop_assert!(e.determinant_identity_holds());
        prop_assert!(e.sandwich_holds(k).unwrap());
    }

    #[test]
    fn ostrowski_digits_legal_and_exact(x in surd(), m in 1u64..100_000) {
        let e = cfm::cf_expand_until(&x, &Integer::from(m)).unwrap();
        let d = cfm::ostrowski_expand(m, &e).unwrap();
        prop_assert!(cfm::is_legal(&d.z, e.a()));
        let total: Integer = d.z.iter().zip(e.q()).map(|(z, q)| Integer::from(q * *z)).sum();
        prop_assert_eq!(total, m);
    }

    #[test]
    fn fracpart_routes_agree(x in surd(), m in 1u64..3000) {
        let a = cfm::brown_shiue_sum(&x, m, 192).unwrap();
        let b = cfm::fracpart_sum_direct(&x, m, 192).unwrap();
        prop_assert!(a.overlaps(&b), "{} vs {}", a.to_f64(), b.to_f64());
    }

    #[test]
    fn weyl_routes_agree(x in surd(), h in 1i64..20, n in 1u64..2000) {
        let a = eq::weyl_sum(&x, h, n, 128).unwrap();
        let b = eq::weyl_sum_direct(&x, h, n, 128).unwrap();
        prop_assert!(a.overlaps(&b));
        prop_assert!(a.definitely_le(&eq::weyl_bound(&x, h, 128).unwrap()) || a.overlaps(&eq::weyl_bound(&x, h, 128).unwrap()));
    }

    #[test]
    fn discrepancy_formulas_match_scan(p in points()) {
        let ps = eq::PointSet::new(p.clone(), "random").unwrap();
        let (s, d) = (eq::discrepancy_star_exact(&ps), eq::discrepancy_exact(&ps));
        prop_assert_eq!(discrepancy_scan(&p), (s.clone(), d.clone()));
        prop_assert!(s <= d && d <= Rational::from(&s * 2u32));
        prop_assert!(d <= 1 && s >= (1, 2 * p.len() as u64));
    }

    #[test]
    fn koksma_on_random_points(p in points(), a in 0u32..50, b in 50u32..100) {
        let ps = eq::PointSet::new(p, "random").unwrap();
        let f = eq::Indicator { a: Rational::from((a, 100)), b: Rational::from((b, 100)) };
        prop_assert!(eq::koksma_check(&f, &ps).unwrap().holds);
        prop_assert!(eq::koksma_check(&eq::DistanceToNearest, &ps).unwrap().holds);
    }

    #[test]
    fn real_display_round_trips(x in surd()) {
        let back: Real = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rational_display_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
        let x = Real::rational(n, d);
        let back: Real = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn quotient_lists_round_trip(a in prop::collection::vec(1u64..u64::MAX, 1..30), sep in prop::sample::select(vec![", ", " ", ";", ","])) {
        let text = format!("[{}]", a.iter().map(u64::to_string).collect::<Vec<_>>().join(sep));
        let got = cfm::parse_quotients(&text).unwrap();
        prop_assert_eq!(got, a.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>());
    }

    #[test]
    fn sweep_ranges_round_trip(start in 1u64..10_000, len in 0u64..10_000, step in 1u64..500) {
        let r = SweepRange::new(start, start + len, step).unwrap();
        prop_assert_eq!(r.to_string().parse::<SweepRange>().unwrap(), r);
        let pts = r.points();
        prop_assert_eq!(pts[0], start);
        prop_assert!(*pts.last().unwrap() <= start + len);
        prop_assert!(pts.windows(2).all(|w| w[1] - w[0] == step));
    }

    #[test]
    fn golden_file_round_trips(entries in prop::collection::btree_map("[a-z][a-z0-9._]{0,12}", (-1e6f64..1e6, 0f64..1.0), 0..8)) {
        let mut text = String::from("{");
        let body: Vec<String> = entries
            .iter()
            .map(|(k, (v, t))| format!("{k:?}: {{\"value\": {v:?}, \"tolerance\": {t:?}, \"provenance\": \"p\"}}"))
            .collect();
        text.push_str(&body.join(","));
        text.push('}');
        let g = GoldenFile::parse(&text).unwrap();
        let again = GoldenFile::parse(&g.to_json()).unwrap();
        for (k, (v, t)) in &entries {
            let e = again.get(k).unwrap();
            prop_assert_eq!((e.value, e.tolerance), (*v, *t));
        }
    }
}
