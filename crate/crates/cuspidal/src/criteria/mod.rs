//! Comparison criteria for unicuspidal candidates and the one-pair search.

mod search;

pub use search::{one_pair_triples, search_one_pair, verdict_table, CandidateVerdict, Criterion};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::singularity::Semigroup;

/// Spectral numbers, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<Ratio<u64>>,
}

impl Spectrum {
    pub fn new(mut values: Vec<Ratio<u64>>) -> Self {
        values.sort();
        Spectrum { values }
    }

    pub fn values(&self) -> &[Ratio<u64>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `#{α : α < x}`.
    pub fn count_below(&self, x: Ratio<u64>) -> usize {
        self.values.partition_point(|v| *v < x)
    }

    /// Invariance under `α ↦ 2 − α`.
    pub fn is_symmetric(&self) -> bool {
        let two = Ratio::from_integer(2);
        self.values
            .iter()
            .zip(self.values.iter().rev())
            .all(|(x, y)| *x + *y == two)
    }
}

/// `{i/a + j/b : 1 ≤ i < a, 1 ≤ j < b}`.
pub fn spectrum_one_pair(a: u64, b: u64) -> Result<Spectrum> {
    let g = a.gcd(&b);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    if a < 2 || a >= b {
        return Err(Error::InvalidParam(format!(
            "need 2 ≤ a < b, got ({a}, {b})"
        )));
    }
    let mut values = Vec::with_capacity(((a - 1) * (b - 1)) as usize);
    for i in 1..a {
        for j in 1..b {
            values.push(Ratio::new(i * b + j * a, a * b));
        }
    }
    Ok(Spectrum::new(values))
}

/// `#{α < l/d} ≤ (l−2)(l−1)/2` for `l = 2..d−1`; returns the verdict and the first failing `l`.
pub fn semicontinuity_general(sp: &Spectrum, d: u64) -> (bool, Option<u64>) {
    assert!(d >= 3);
    let first = (2..d).find(|&l| sp.count_below(Ratio::new(l, d)) as u64 > (l - 2) * (l - 1) / 2);
    (first.is_none(), first)
}

/// `#{i, j ≥ 0 : (ia + jb)d < abl}`.
pub fn lattice_count(d: u64, a: u64, b: u64, l: u64) -> u128 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let (d, lo, hi, l) = (d as u128, lo as u128, hi as u128, l as u128);
    let bound = lo * hi * l;
    let mut total = 0u128;
    let mut j = 0u128;
    while j * hi * d < bound {
        total += (bound - j * hi * d - 1) / (lo * d) + 1;
        j += 1;
    }
    total
}

/// Lattice form of semicontinuity for a single pair; first failing `l`.
pub fn semicontinuity_one_pair_failure(d: u64, a: u64, b: u64) -> Option<u64> {
    (2..d).find(|&l| {
        let rhs = (l - 2) * (l - 1) / 2 + a * l / d + b * l / d + 1;
        lattice_count(d, a, b, l) > rhs as u128
    })
}

pub fn semicontinuity_one_pair(d: u64, a: u64, b: u64) -> bool {
    semicontinuity_one_pair_failure(d, a, b).is_none()
}

/// `d < (3+√5)/2·(a+1) + 1/√5`, decided in integers.
pub fn orevkov_inequality(d: u64, a: u64) -> bool {
    let lhs = 10 * d as i128 - 15 * (a as i128 + 1);
    let c = 5 * (a as i128 + 1) + 2;
    lhs < 0 || lhs * lhs < 5 * c * c
}

/// `Σ #(Γ_i ∩ [0, n_i]) ≥ (l+1)(l+2)/2` given `Σ n_i ≥ ld` and `l < d`.
pub fn positive_distribution_check(
    semigroups: &[Semigroup],
    caps: &[u64],
    l: u64,
    d: u64,
) -> Result<bool> {
    if semigroups.len() != caps.len() {
        return Err(Error::PreconditionViolated(format!(
            "{} semigroups but {} caps",
            semigroups.len(),
            caps.len()
        )));
    }
    if l >= d {
        return Err(Error::PreconditionViolated(format!("l = {l} ≥ d = {d}")));
    }
    let total: u128 = caps.iter().map(|&c| c as u128).sum();
    if total < (l * d) as u128 {
        return Err(Error::PreconditionViolated(format!(
            "caps sum to {total} < ld = {}",
            l * d
        )));
    }
    let count: u128 = semigroups
        .iter()
        .zip(caps)
        .map(|(g, &n)| g.count_le(n) as u128)
        .sum();
    Ok(count >= ((l + 1) * (l + 2) / 2) as u128)
}

/// `ld` split in proportion to the `δ` of each cusp, remainder to the first cusps.
pub fn proportional_caps(semigroups: &[Semigroup], l: u64, d: u64) -> Vec<u64> {
    let total = (l * d) as u128;
    let deltas: Vec<u128> = semigroups
        .iter()
        .map(|g| g.delta().max(1) as u128)
        .collect();
    let sum: u128 = deltas.iter().sum();
    let mut caps: Vec<u64> = deltas.iter().map(|&x| (total * x / sum) as u64).collect();
    let mut rest = total as u64 - caps.iter().sum::<u64>();
    for c in caps.iter_mut() {
        if rest == 0 {
            break;
        }
        *c += 1;
        rest -= 1;
    }
    caps
}

pub fn positive_distribution_proportional(semigroups: &[Semigroup], l: u64, d: u64) -> bool {
    let caps = proportional_caps(semigroups, l, d);
    positive_distribution_check(semigroups, &caps, l, d).expect("caps sum to ld")
}

/// Proportional-cap check for every `l < d`; one sweep for a single cusp.
pub fn positive_distribution_all(semigroups: &[Semigroup], d: u64) -> bool {
    if let [gamma] = semigroups {
        let counts = gamma.counts_at_multiples(d, d - 1);
        return counts
            .iter()
            .enumerate()
            .all(|(l, &c)| c as u128 >= ((l as u128 + 1) * (l as u128 + 2)) / 2);
    }
    (0..d).all(|l| positive_distribution_proportional(semigroups, l, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u64, d: u64) -> Ratio<u64> {
        Ratio::new(n, d)
    }

    #[test]
    fn spectra() {
        assert_eq!(
            spectrum_one_pair(2, 3).unwrap().values(),
            &[r(5, 6), r(7, 6)]
        );
        assert_eq!(
            spectrum_one_pair(2, 5).unwrap().values(),
            &[r(7, 10), r(9, 10), r(11, 10), r(13, 10)]
        );
        let sp = spectrum_one_pair(3, 4).unwrap();
        assert_eq!(sp.len(), 6);
        assert!(sp.is_symmetric());
        assert!(matches!(spectrum_one_pair(4, 6), Err(Error::NotCoprime(2))));
    }

    #[test]
    fn semicontinuity_examples() {
        assert_eq!(
            semicontinuity_general(&spectrum_one_pair(2, 3).unwrap(), 3),
            (true, None)
        );
        assert!(!semicontinuity_general(&spectrum_one_pair(3, 16).unwrap(), 7).0);
        assert!(semicontinuity_general(&spectrum_one_pair(4, 31).unwrap(), 11).0);
        assert!(semicontinuity_one_pair(11, 4, 31));
        assert!(semicontinuity_one_pair(19, 7, 52));
        assert!(!semicontinuity_one_pair(7, 3, 16));
    }

    #[test]
    fn orevkov_examples() {
        assert!(orevkov_inequality(19, 7));
        assert!(orevkov_inequality(11, 4));
        assert!(!orevkov_inequality(100, 7));
    }

    #[test]
    fn positive_distribution_examples() {
        let g = Semigroup::from_generators(&[4, 5]).unwrap();
        assert!(positive_distribution_check(std::slice::from_ref(&g), &[10], 2, 5).unwrap());
        let g = Semigroup::from_generators(&[2, 3]).unwrap();
        assert!(positive_distribution_check(std::slice::from_ref(&g), &[3], 1, 3).unwrap());
        assert!(matches!(
            positive_distribution_check(&[g], &[2], 1, 3),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn caps_sum_to_ld() {
        let gs = [
            Semigroup::from_generators(&[2, 3]).unwrap(),
            Semigroup::from_generators(&[3, 4]).unwrap(),
        ];
        let caps = proportional_caps(&gs, 3, 7);
        assert_eq!(caps.iter().sum::<u64>(), 21);
        assert_eq!(caps, vec![6, 15]);
    }
}
