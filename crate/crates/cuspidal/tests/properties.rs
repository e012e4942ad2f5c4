use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use cuspidal::distribution::{
    conjecture_check, cp_counts, n_of_curve, route_check, CurveRecord, Report,
};
use cuspidal::exactpoly::{
    is_symmetric, poly_exact_div, poly_mul, root_of_unity_filter, series_from_exponents, IntPoly,
    TruncSeries,
};
use cuspidal::singularity::{
    floor_sum, mult_seq_from_newton, newton_from_mult_seq, NewtonPairs, Semigroup,
};

fn newton_pairs() -> impl Strategy<Value = NewtonPairs> {
    prop::collection::vec((2u64..=7, 1u64..=7), 1..=3).prop_filter_map("invalid pairs", |mut v| {
        v[0].1 += v[0].0;
        NewtonPairs::new(v).ok()
    })
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..12).prop_map(|c| IntPoly::from_i64(&c))
}

/// Membership below `limit` by closing the generators under addition.
fn brute_members(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit];
    member[0] = true;
    for x in 1..limit {
        member[x] = gens
            .iter()
            .any(|&g| g as usize <= x && member[x - g as usize]);
    }
    member
}

fn eval(f: &TruncSeries, x: Complex64) -> Complex64 {
    f.coeffs()
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, c| acc * x + c.to_f64().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn char_poly_invariants(np in newton_pairs()) {
        let sd = np.splice().unwrap();
        let delta = sd.delta();
        let cp = sd.char_poly().unwrap();
        prop_assert_eq!(cp.eval_at_one(), BigInt::from(1));
        prop_assert_eq!(cp.derivative_at_one(), BigInt::from(delta));
        prop_assert_eq!(cp.degree(), Some(2 * delta as usize));
        prop_assert!(is_symmetric(&cp, 2 * delta as usize));
        let order = 2 * delta as usize + 1;
        let mut l = TruncSeries::from_poly(&cp, order);
        l.div_one_minus(1);
        prop_assert_eq!(l, sd.semigroup().poincare_series(order));
    }

    #[test]
    fn semigroup_matches_brute_force(np in newton_pairs()) {
        let sd = np.splice().unwrap();
        let gamma = sd.semigroup();
        let c = gamma.conductor() as usize;
        prop_assert_eq!(c as u64, 2 * sd.delta());
        prop_assert!(gamma.is_symmetric());
        let brute = brute_members(sd.beta_bar(), c + 2 * sd.beta_bar()[0] as usize);
        for (x, &m) in brute.iter().enumerate() {
            prop_assert_eq!(gamma.contains(x as u64), m, "x = {}", x);
        }
        prop_assert_eq!(gamma.gaps().len() as u64, sd.delta());
        let x = c as u64 / 2;
        prop_assert_eq!(gamma.count_le(x), brute[..=x as usize].iter().filter(|&&m| m).count() as u64);
    }

    #[test]
    fn mult_seq_round_trip(np in newton_pairs()) {
        let ms = mult_seq_from_newton(&np).unwrap();
        let delta: u64 = ms.entries().iter().map(|m| m * (m - 1) / 2).sum();
        prop_assert_eq!(delta, np.splice().unwrap().delta());
        prop_assert_eq!(newton_from_mult_seq(&ms).unwrap(), np);
    }

    #[test]
    fn binomial_division_round_trip(p in small_poly(), n in 1usize..9) {
        let q = p.mul_binomial(n);
        prop_assert_eq!(&q, &poly_mul(&p, &IntPoly::binomial(n)));
        prop_assert_eq!(q.div_binomial(n).unwrap(), p.clone());
        prop_assert_eq!(poly_exact_div(&q, &IntPoly::binomial(n)).unwrap(), p);
    }

    #[test]
    fn inexact_division_is_reported(n in 2usize..9) {
        prop_assert!(IntPoly::one().div_binomial(n).is_err());
        prop_assert!(IntPoly::one().div_t_minus_one().is_err());
    }

    #[test]
    fn root_of_unity_filter_matches_complex_average(
        coeffs in prop::collection::vec(-50i64..=50, 1..40),
        d in 1usize..8,
        re in -0.6f64..0.6,
        im in -0.6f64..0.6,
    ) {
        let f = TruncSeries::new(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        let exact = root_of_unity_filter(&f, d);
        for (k, c) in exact.coeffs().iter().enumerate() {
            if k % d != 0 {
                prop_assert!(c.is_zero());
            }
        }
        let t = Complex64::new(re, im);
        let mut avg = Complex64::zero();
        for k in 0..d {
            let xi = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / d as f64);
            avg += eval(&f, xi * t);
        }
        avg /= d as f64;
        prop_assert!((avg - eval(&exact, t)).norm() < 1e-9);
    }

    #[test]
    fn floor_sum_matches_loop(n in 0u128..200, m in 1u128..50, a in 0u128..60, b in 0u128..60) {
        let direct: u128 = (0..n).map(|i| (a * i + b) / m).sum();
        prop_assert_eq!(floor_sum(n, m, a, b), direct);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn one_pair_routes_and_interval_law(idx in 0usize..200) {
        let triples = cuspidal::criteria::one_pair_triples(40);
        let (d, a, b) = triples[idx % triples.len()];
        let rec = CurveRecord::new(d, vec![NewtonPairs::new(vec![(a, b)]).unwrap()], "t").unwrap();
        let rc = route_check(&rec).unwrap();
        prop_assert!(rc.all_agree());
        let n = n_of_curve(&rec).unwrap();
        prop_assert_eq!(&rc.n, &n);
        prop_assert_eq!(cp_counts(&rec.semigroups()[0], d).all_hold(), n.is_zero());
    }

    #[test]
    fn report_json_round_trip(idx in 0usize..200) {
        let triples = cuspidal::criteria::one_pair_triples(30);
        let (d, a, b) = triples[idx % triples.len()];
        let rec = CurveRecord::new(d, vec![NewtonPairs::new(vec![(a, b)]).unwrap()], format!("({d},{a},{b})")).unwrap();
        let report = conjecture_check(&rec).unwrap();
        let text = report.to_json();
        let back = Report::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.n_poly(), Some(n_of_curve(&rec).unwrap()));
    }
}

#[test]
fn series_from_exponents_is_semigroup_indicator() {
    for a in 1..=12u64 {
        for b in a + 1..=12 {
            if a.gcd(&b) != 1 {
                continue;
            }
            let order = (a * b) as usize + 5;
            let s = series_from_exponents(&[(a * b) as usize], &[a as usize, b as usize], order);
            let brute = brute_members(&[a, b], order);
            for (k, c) in s.coeffs().iter().enumerate() {
                assert_eq!(*c, BigInt::from(brute[k] as i64), "⟨{a},{b}⟩ at {k}");
            }
        }
    }
}

#[test]
fn semigroup_of_two_three() {
    let g = Semigroup::from_generators(&[2, 3]).unwrap();
    assert_eq!(g.gaps(), vec![1]);
    assert_eq!(g.conductor(), 2);
}
