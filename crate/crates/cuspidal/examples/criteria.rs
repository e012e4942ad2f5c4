//! Compares the criteria on (11, 4, 31) and (7, 3, 16).

use cuspidal::criteria::{
    orevkov_inequality, positive_distribution_proportional, semicontinuity_general,
    semicontinuity_one_pair_failure, spectrum_one_pair,
};
use cuspidal::distribution::{cp_counts, n_polynomial_from_semigroup, nonpositive};
use cuspidal::singularity::Semigroup;

fn main() -> cuspidal::Result<()> {
    for (d, a, b) in [(11, 4, 31), (7, 3, 16), (19, 7, 52)] {
        let sp = spectrum_one_pair(a, b)?;
        let (semi, first) = semicontinuity_general(&sp, d);
        assert_eq!(first, semicontinuity_one_pair_failure(d, a, b));
        let gamma = Semigroup::from_generators(&[a, b])?;
        let failing: Vec<u64> = (0..d)
            .filter(|&l| !positive_distribution_proportional(std::slice::from_ref(&gamma), l, d))
            .collect();
        let cp = cp_counts(&gamma, d);
        let n = n_polynomial_from_semigroup(&gamma, d)?;
        println!("({d}, {a}, {b})");
        println!(
            "  spectrum: {} values, symmetric: {}",
            sp.len(),
            sp.is_symmetric()
        );
        println!("  semicontinuity: {semi} (first failure {first:?})");
        println!("  Orevkov inequality: {}", orevkov_inequality(d, a));
        println!("  N(t) = {n}, all coefficients ≤ 0: {}", nonpositive(&n));
        println!("  proportional lower bound fails at l = {failing:?}");
        println!(
            "  interval counts {:?}, first failure {:?}",
            cp.counts,
            cp.first_failure()
        );
    }
    Ok(())
}
