use std::fmt::Write as _;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distribution::{cp_counts, n_polynomial_from_semigroup, nonpositive};
use crate::error::{Error, Result};
use crate::singularity::Semigroup;

use super::{orevkov_inequality, semicontinuity_one_pair_failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    Semicontinuity,
    Orevkov,
    Distribution,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [
        Criterion::Semicontinuity,
        Criterion::Orevkov,
        Criterion::Distribution,
    ];

    /// Comma-separated list; `all` selects every criterion.
    pub fn parse_list(s: &str) -> Result<Vec<Criterion>> {
        if s.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out: Vec<Criterion> = s
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semicontinuity" => Ok(Criterion::Semicontinuity),
            "orevkov" => Ok(Criterion::Orevkov),
            "distribution" => Ok(Criterion::Distribution),
            _ => Err(Error::Parse(format!("unknown criterion `{s}`"))),
        }
    }
}

/// Verdicts for one triple `(d, a, b)`; `None` means the criterion was not requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateVerdict {
    pub d: u64,
    pub a: u64,
    pub b: u64,
    pub genus_ok: bool,
    pub semicontinuity_ok: Option<bool>,
    pub semicontinuity_first_failure: Option<u64>,
    pub orevkov_ok: Option<bool>,
    pub distribution_ok: Option<bool>,
    #[serde(rename = "R_zero")]
    pub r_zero: Option<bool>,
    /// Text form of `N(t)`.
    #[serde(rename = "N")]
    pub n: Option<String>,
    /// First `l` where the interval law fails.
    pub first_failing_l: Option<u64>,
    /// Semigroup count in that interval.
    pub first_failing_count: Option<u64>,
}

impl CandidateVerdict {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

/// All `(d, a, b)` with `d ≤ d_max`, `a < b` coprime and `(a−1)(b−1) = (d−1)(d−2)`, ordered by `(d, a)`.
pub fn one_pair_triples(d_max: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for d in 3..=d_max {
        let g = (d - 1) * (d - 2);
        let mut divs = Vec::new();
        let mut k = 1;
        while k * k <= g {
            if g % k == 0 {
                divs.push(k);
                if k * k != g {
                    divs.push(g / k);
                }
            }
            k += 1;
        }
        divs.sort_unstable();
        for k in divs {
            let (a, b) = (k + 1, g / k + 1);
            if a < b && a.gcd(&b) == 1 {
                out.push((d, a, b));
            }
        }
    }
    out
}

fn evaluate(d: u64, a: u64, b: u64, filters: &[Criterion]) -> Result<CandidateVerdict> {
    let mut v = CandidateVerdict {
        d,
        a,
        b,
        genus_ok: (a - 1) * (b - 1) == (d - 1) * (d - 2),
        semicontinuity_ok: None,
        semicontinuity_first_failure: None,
        orevkov_ok: None,
        distribution_ok: None,
        r_zero: None,
        n: None,
        first_failing_l: None,
        first_failing_count: None,
    };
    for f in filters {
        match f {
            Criterion::Semicontinuity => {
                let fail = semicontinuity_one_pair_failure(d, a, b);
                v.semicontinuity_ok = Some(fail.is_none());
                v.semicontinuity_first_failure = fail;
            }
            Criterion::Orevkov => v.orevkov_ok = Some(orevkov_inequality(d, a)),
            Criterion::Distribution => {
                let gamma = Semigroup::from_generators(&[a, b])?;
                let n = n_polynomial_from_semigroup(&gamma, d)?;
                let cp = cp_counts(&gamma, d);
                v.distribution_ok = Some(nonpositive(&n));
                v.r_zero = Some(n.is_zero());
                v.n = Some(n.to_string());
                v.first_failing_l = cp.first_failure();
                v.first_failing_count = cp.first_failure().map(|l| cp.counts[l as usize]);
            }
        }
    }
    Ok(v)
}

/// Enumerates the one-pair candidates up to `d_max` and evaluates the requested criteria in parallel.
pub fn search_one_pair(d_max: u64, filters: &[Criterion]) -> Result<Vec<CandidateVerdict>> {
    if d_max < 3 {
        return Err(Error::InvalidParam(format!("d_max = {d_max} < 3")));
    }
    one_pair_triples(d_max)
        .into_par_iter()
        .map(|(d, a, b)| evaluate(d, a, b, filters))
        .collect()
}

fn flag(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

/// Fixed-width table of verdicts.
pub fn verdict_table(verdicts: &[CandidateVerdict]) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:>6} {:>6} {:>10} {:>6} {:>15} {:>8} {:>13} {:>5} {:>16}",
        "d",
        "a",
        "b",
        "genus",
        "semicontinuity",
        "orevkov",
        "distribution",
        "R≡0",
        "first_failing_l"
    )
    .unwrap();
    for v in verdicts {
        let first = v.first_failing_l.map_or("-".to_string(), |l| l.to_string());
        writeln!(
            s,
            "{:>6} {:>6} {:>10} {:>6} {:>15} {:>8} {:>13} {:>5} {:>16}",
            v.d,
            v.a,
            v.b,
            flag(Some(v.genus_ok)),
            flag(v.semicontinuity_ok),
            flag(v.orevkov_ok),
            flag(v.distribution_ok),
            flag(v.r_zero),
            first
        )
        .unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples_up_to_twenty() {
        let t = one_pair_triples(20);
        for want in [(5, 3, 7), (7, 3, 16), (11, 4, 31), (19, 7, 52)] {
            assert!(t.contains(&want), "{want:?}");
        }
        assert!(t.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
    }

    #[test]
    fn parse_filters() {
        assert_eq!(
            Criterion::parse_list("distribution,semicontinuity").unwrap(),
            vec![Criterion::Semicontinuity, Criterion::Distribution]
        );
        assert!(Criterion::parse_list("bogus").is_err());
    }
}
