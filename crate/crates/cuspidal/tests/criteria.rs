use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use proptest::prelude::*;

use cuspidal::criteria::{
    lattice_count, one_pair_triples, orevkov_inequality, positive_distribution_check,
    proportional_caps, search_one_pair, semicontinuity_general, semicontinuity_one_pair,
    semicontinuity_one_pair_failure, spectrum_one_pair, verdict_table, Criterion,
};
use cuspidal::singularity::Semigroup;
use cuspidal::Error;

const DIGITS: u32 = 50;

/// `⌊10^50 · ((3+√5)(a+1)/2 + √5/5)⌋` up to an error of two units.
fn orevkov_rhs_scaled(a: u64) -> BigInt {
    let scale = BigInt::from(10).pow(DIGITS);
    let sqrt5 = (BigInt::from(5) * &scale * &scale).sqrt();
    let a1 = BigInt::from(a + 1);
    (BigInt::from(3) * &scale + &sqrt5) * &a1 / 2 + &sqrt5 / 5
}

fn orevkov_oracle(d: u64, a: u64) -> Option<bool> {
    let lhs = BigInt::from(d) * BigInt::from(10).pow(DIGITS);
    let rhs = orevkov_rhs_scaled(a);
    if lhs < &rhs - 2 {
        Some(true)
    } else if lhs > &rhs + 2 {
        Some(false)
    } else {
        None
    }
}

#[test]
fn orevkov_near_boundary_exhaustive() {
    for a in 1..=1000u64 {
        let approx = (3.0 + 5f64.sqrt()) / 2.0 * (a + 1) as f64 + 1.0 / 5f64.sqrt();
        let centre = approx as u64;
        for d in centre.saturating_sub(2)..=centre + 2 {
            let oracle = orevkov_oracle(d, a).expect("the bound is irrational");
            assert_eq!(orevkov_inequality(d, a), oracle, "d = {d}, a = {a}");
        }
    }
}

proptest! {
    #[test]
    fn orevkov_matches_decimal_oracle(d in 1u64..=10_000, a in 1u64..=1_000) {
        prop_assert_eq!(Some(orevkov_inequality(d, a)), orevkov_oracle(d, a));
    }

    #[test]
    fn spectrum_symmetric(a in 2u64..30, b in 3u64..60) {
        prop_assume!(a < b && a.gcd(&b) == 1);
        let sp = spectrum_one_pair(a, b).unwrap();
        prop_assert_eq!(sp.len() as u64, (a - 1) * (b - 1));
        prop_assert!(sp.is_symmetric());
        prop_assert!(sp.values().iter().all(|v| *v > Ratio::from_integer(0) && *v < Ratio::from_integer(2)));
    }
}

#[test]
fn spectrum_of_cusp() {
    let sp = spectrum_one_pair(2, 3).unwrap();
    assert_eq!(sp.values(), &[Ratio::new(5, 6), Ratio::new(7, 6)]);
    assert_eq!(sp.count_below(Ratio::new(1, 1)), 1);
    assert!(matches!(spectrum_one_pair(4, 6), Err(Error::NotCoprime(2))));
    assert!(matches!(
        spectrum_one_pair(5, 3),
        Err(Error::InvalidParam(_))
    ));
}

#[test]
fn semicontinuity_routes_agree_up_to_forty() {
    let mut compared = 0;
    for b in 3..=40u64 {
        for a in 2..b {
            if a.gcd(&b) != 1 {
                continue;
            }
            let sp = spectrum_one_pair(a, b).unwrap();
            let g = (a - 1) * (b - 1);
            for d in 3..=42u64 {
                if (d - 1) * (d - 2) != g {
                    continue;
                }
                compared += 1;
                let (ok, first) = semicontinuity_general(&sp, d);
                assert_eq!(ok, semicontinuity_one_pair(d, a, b), "({d},{a},{b})");
                assert_eq!(first, semicontinuity_one_pair_failure(d, a, b));
            }
        }
    }
    assert!(compared > 20);
}

#[test]
fn lattice_count_is_symmetric_in_the_pair() {
    for (d, a, b) in one_pair_triples(25) {
        for l in 2..d {
            assert_eq!(lattice_count(d, a, b, l), lattice_count(d, b, a, l));
        }
    }
}

#[test]
fn triples_are_ordered_and_compatible() {
    let t = one_pair_triples(30);
    assert!(t.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
    for &(d, a, b) in &t {
        assert!(a < b && a.gcd(&b) == 1);
        assert_eq!((a - 1) * (b - 1), (d - 1) * (d - 2));
    }
    assert!(t.contains(&(5, 3, 7)) && t.contains(&(19, 7, 52)));
}

#[test]
fn criteria_disagree_somewhere() {
    let v = search_one_pair(25, &[Criterion::Semicontinuity, Criterion::Distribution]).unwrap();
    let at = |d, a, b| v.iter().find(|c| (c.d, c.a, c.b) == (d, a, b)).unwrap();
    let c = at(11, 4, 31);
    assert_eq!(
        (c.semicontinuity_ok, c.distribution_ok),
        (Some(true), Some(false))
    );
    let c = at(7, 3, 16);
    assert_eq!(
        (c.semicontinuity_ok, c.distribution_ok),
        (Some(false), Some(true))
    );
    assert!(v.iter().all(|c| c.orevkov_ok.is_none()));
}

#[test]
fn search_filters_and_table() {
    let v = search_one_pair(12, &[Criterion::Orevkov]).unwrap();
    assert!(v
        .iter()
        .all(|c| c.semicontinuity_ok.is_none() && c.orevkov_ok.is_some()));
    let table = verdict_table(&v);
    let header = table.lines().next().unwrap();
    for col in [
        "d",
        "a",
        "b",
        "genus",
        "semicontinuity",
        "orevkov",
        "distribution",
        "R≡0",
        "first_failing_l",
    ] {
        assert!(header.contains(col), "{col}");
    }
    assert_eq!(table.lines().count(), v.len() + 1);
    let c = v.iter().find(|c| (c.d, c.a, c.b) == (12, 3, 56)).unwrap();
    assert_eq!(c.orevkov_ok, Some(false));
}

#[test]
fn positive_distribution_preconditions() {
    let g = Semigroup::from_generators(&[4, 5]).unwrap();
    assert!(matches!(
        positive_distribution_check(std::slice::from_ref(&g), &[1, 2], 1, 5),
        Err(Error::PreconditionViolated(_))
    ));
    assert!(matches!(
        positive_distribution_check(std::slice::from_ref(&g), &[4], 1, 5),
        Err(Error::PreconditionViolated(_))
    ));
    assert!(matches!(
        positive_distribution_check(std::slice::from_ref(&g), &[30], 5, 5),
        Err(Error::PreconditionViolated(_))
    ));
    for l in 0..5 {
        assert!(positive_distribution_check(std::slice::from_ref(&g), &[l * 5], l, 5).unwrap());
    }
}

#[test]
fn proportional_caps_sum_to_ld() {
    let gs = [
        Semigroup::from_generators(&[3, 4]).unwrap(),
        Semigroup::from_generators(&[2, 3]).unwrap(),
        Semigroup::from_generators(&[2, 5]).unwrap(),
    ];
    for l in 0..7 {
        let caps = proportional_caps(&gs, l, 7);
        assert_eq!(caps.iter().sum::<u64>(), 7 * l);
    }
}
