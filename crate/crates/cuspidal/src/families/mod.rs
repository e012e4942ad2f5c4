//! Closed-form constructors for the classified families of rational cuspidal curves.

mod kashiwara;
mod lz;
mod tono;

pub use kashiwara::{
    kashiwara_chi_check, kashiwara_chi_closed_form, kashiwara_curve, kashiwara_generators,
    scaled_ceiling_series, KashiwaraMember, Sign,
};
pub use lz::{lz_curve, lz_identity_check, LzCase, LzRecord, SeriesSpec};
pub use tono::{tono_type1, tono_type2, tono_type2b_generators, TonoS};

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::distribution::CurveRecord;
use crate::error::{Error, Result};
use crate::singularity::{NewtonPairs, SpliceData};

/// Largest index with `φ_j < 2^128`.
pub const FIB_MAX: i32 = 185;

/// Fibonacci number `φ_j` for `−1 ≤ j ≤ FIB_MAX`, with `φ_{−1} = 1`.
pub fn fib(j: i32) -> u128 {
    assert!((-1..=FIB_MAX).contains(&j), "φ_{j} out of range");
    if j == -1 {
        return 1;
    }
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..j {
        (a, b) = (b, a + b);
    }
    a
}

/// `φ_j² − φ_{j−1}φ_{j+1} = (−1)^{j+1}`, `φ_j² − φ_{j−2}φ_{j+2} = (−1)^j` and
/// `gcd(φ_i, φ_j) = φ_{gcd(i,j)}` for `1 ≤ i, j ≤ j_max`.
pub fn fibonacci_identities(j_max: i32) -> bool {
    let f = |k: i32| fib(k) as i128;
    let sign = |e: i32| if e % 2 == 0 { 1 } else { -1 };
    (1..=j_max).all(|j| {
        f(j) * f(j) - f(j - 1) * f(j + 1) == sign(j + 1)
            && f(j) * f(j) - f(j - 2) * f(j + 2) == sign(j)
            && (1..=j_max).all(|i| fib(i).gcd(&fib(j)) == fib(i.gcd(&j)))
    })
}

pub(crate) fn fib_u64(j: i32) -> Result<u64> {
    if !(-1..=FIB_MAX).contains(&j) {
        return Err(Error::InvalidParam(format!(
            "Fibonacci index {j} out of range"
        )));
    }
    u64::try_from(fib(j)).map_err(|_| Error::Overflow("Fibonacci number"))
}

pub(crate) fn to_u64(x: u128, ctx: &'static str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow(ctx))
}

/// AMS curve with floor degrees `n_1, …, n_r`.
pub fn ams_curve(floors: &[u64]) -> Result<CurveRecord> {
    let label = format!("ams{floors:?}");
    if floors.is_empty() {
        return Err(Error::InvalidFloors("need at least one floor".into()));
    }
    if floors[0] < 3 {
        return Err(Error::InvalidFloors(format!("n_1 = {} < 3", floors[0])));
    }
    if let Some(n) = floors.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidFloors(format!("floor {n} < 2")));
    }
    let mut d: u128 = 1;
    let mut sq: u128 = 1;
    let mut p = Vec::with_capacity(floors.len());
    let mut a = Vec::with_capacity(floors.len());
    for (k, &n) in floors.iter().enumerate() {
        let n = n as u128;
        d = d.checked_mul(n).ok_or(Error::Overflow("AMS degree"))?;
        if k == 0 {
            p.push(to_u64(n - 1, "AMS splice data")?);
            a.push(to_u64(n, "AMS splice data")?);
        } else {
            let ak = sq
                .checked_mul(n)
                .ok_or(Error::Overflow("AMS splice data"))?
                - 1;
            p.push(to_u64(n, "AMS splice data")?);
            a.push(to_u64(ak, "AMS splice data")?);
        }
        sq = sq
            .checked_mul(n * n)
            .ok_or(Error::Overflow("AMS splice data"))?;
    }
    let sd = SpliceData::from_pa(p, a)?;
    CurveRecord::new(
        to_u64(d, "AMS degree")?,
        vec![NewtonPairs::from_splice(&sd)],
        label,
    )
}

/// The six one-pair families `(a, b)` of degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OnePairCase {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl OnePairCase {
    pub const ALL: [OnePairCase; 6] = [
        OnePairCase::A,
        OnePairCase::B,
        OnePairCase::C,
        OnePairCase::D,
        OnePairCase::E,
        OnePairCase::F,
    ];
}

impl FromStr for OnePairCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "a" => OnePairCase::A,
            "b" => OnePairCase::B,
            "c" => OnePairCase::C,
            "d" => OnePairCase::D,
            "e" => OnePairCase::E,
            "f" => OnePairCase::F,
            _ => return Err(Error::Parse(format!("unknown one-pair case `{s}`"))),
        })
    }
}

impl fmt::Display for OnePairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            OnePairCase::A => "a",
            OnePairCase::B => "b",
            OnePairCase::C => "c",
            OnePairCase::D => "d",
            OnePairCase::E => "e",
            OnePairCase::F => "f",
        };
        f.write_str(c)
    }
}

/// `(d, a, b)` for a one-pair family member. `param` is `d` for cases a, b and `j` for c, d.
pub fn one_pair_triple(case: OnePairCase, param: u64) -> Result<(u64, u64, u64)> {
    let odd_j = |j: u64| {
        if j < 5 || j.is_multiple_of(2) || j > 150 {
            Err(Error::InvalidParam(format!(
                "case {case} needs odd j ≥ 5, got {j}"
            )))
        } else {
            Ok(j as i32)
        }
    };
    Ok(match case {
        OnePairCase::A => {
            if param < 3 {
                return Err(Error::InvalidParam(format!(
                    "case a needs d ≥ 3, got {param}"
                )));
            }
            (param, param - 1, param)
        }
        OnePairCase::B => {
            if param < 4 || param % 2 == 1 {
                return Err(Error::InvalidParam(format!(
                    "case b needs even d ≥ 4, got {param}"
                )));
            }
            (param, param / 2, 2 * param - 1)
        }
        OnePairCase::C => {
            let j = odd_j(param)?;
            let (x, y) = (fib_u64(j - 2)?, fib_u64(j)?);
            let sq = |v: u64| v.checked_mul(v).ok_or(Error::Overflow("one-pair case c"));
            (
                x.checked_mul(y).ok_or(Error::Overflow("one-pair case c"))?,
                sq(x)?,
                sq(y)?,
            )
        }
        OnePairCase::D => {
            let j = odd_j(param)?;
            (fib_u64(j)?, fib_u64(j - 2)?, fib_u64(j + 2)?)
        }
        OnePairCase::E => (8, 3, 22),
        OnePairCase::F => (16, 6, 43),
    })
}

pub fn one_pair_curve(case: OnePairCase, param: u64) -> Result<CurveRecord> {
    let (d, a, b) = one_pair_triple(case, param)?;
    let label = match case {
        OnePairCase::E | OnePairCase::F => format!("one-pair({case})"),
        _ => format!("one-pair({case},{param})"),
    };
    CurveRecord::new(d, vec![NewtonPairs::new(vec![(a, b)])?], label)
}

/// Orevkov curve `C_j` (or `C*_j` when `star`), `4 | j`, `j ≥ 8`.
pub fn orevkov_curve(j: u64, star: bool) -> Result<CurveRecord> {
    if j < 8 || !j.is_multiple_of(4) || j + 4 > FIB_MAX as u64 {
        return Err(Error::InvalidParam(format!(
            "need 4 | j and j ≥ 8, got {j}"
        )));
    }
    let j = j as i32;
    let (fj, fj2, fj4) = (fib(j), fib(j + 2), fib(j + 4));
    if fj % 3 != 0 {
        return Err(Error::Internal(format!("3 ∤ φ_{j}")));
    }
    let c: u128 = if star { 2 } else { 1 };
    let gens = [
        to_u64(c * fj, "Orevkov generators")?,
        to_u64(c * fj4, "Orevkov generators")?,
        to_u64(1 + c * fj * fj4 / 3, "Orevkov generators")?,
    ];
    let label = format!("orevkov({}{j})", if star { "*" } else { "" });
    CurveRecord::unicuspidal(to_u64(c * fj2, "Orevkov degree")?, &gens, label)
}

/// For every `k ≤ k_max`, the only multiple of `m` among `⌈mk/d⌉ + j`, `0 ≤ j < m`, is `⌈k/d⌉·m`.
pub fn ceil_scaling_lemma_check(m: u64, d: u64, k_max: u64) -> bool {
    assert!(m >= 1 && d >= 1);
    (0..=k_max).all(|k| {
        let base = (m * k).div_ceil(d);
        let expect = k.div_ceil(d) * m;
        let mut hits = (base..base + m).filter(|x| x % m == 0);
        hits.next() == Some(expect) && hits.next().is_none()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_values() {
        assert_eq!(
            (-1..=10).map(fib).collect::<Vec<_>>(),
            vec![1, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        );
        assert!(fib(FIB_MAX) > 0);
        assert!(fibonacci_identities(40));
    }

    #[test]
    fn ams_examples() {
        let c = ams_curve(&[5]).unwrap();
        assert_eq!(c.d(), 5);
        assert_eq!(c.splices()[0].beta_bar(), &[4, 5]);
        let c = ams_curve(&[3, 2]).unwrap();
        assert_eq!(c.d(), 6);
        assert_eq!(c.splices()[0].beta_bar(), &[4, 6, 17]);
        assert!(matches!(ams_curve(&[2, 2]), Err(Error::InvalidFloors(_))));
        assert!(matches!(ams_curve(&[]), Err(Error::InvalidFloors(_))));
    }

    #[test]
    fn one_pair_examples() {
        assert_eq!(one_pair_triple(OnePairCase::D, 5).unwrap(), (5, 2, 13));
        assert_eq!(one_pair_triple(OnePairCase::C, 5).unwrap(), (10, 4, 25));
        assert_eq!(one_pair_triple(OnePairCase::E, 0).unwrap(), (8, 3, 22));
        assert!(matches!(
            one_pair_triple(OnePairCase::B, 5),
            Err(Error::InvalidParam(_))
        ));
        assert!(matches!(
            one_pair_triple(OnePairCase::C, 6),
            Err(Error::InvalidParam(_))
        ));
        for case in OnePairCase::ALL {
            let param = if matches!(case, OnePairCase::C | OnePairCase::D) {
                7
            } else {
                10
            };
            let (d, a, b) = one_pair_triple(case, param).unwrap();
            assert_eq!((a - 1) * (b - 1), (d - 1) * (d - 2), "{case}");
        }
    }

    #[test]
    fn orevkov_examples() {
        let c = orevkov_curve(8, false).unwrap();
        assert_eq!(c.d(), 55);
        assert_eq!(c.splices()[0].beta_bar(), &[21, 144, 1009]);
        let c = orevkov_curve(8, true).unwrap();
        assert_eq!(c.d(), 110);
        assert_eq!(c.splices()[0].beta_bar(), &[42, 288, 2017]);
        assert!(matches!(
            orevkov_curve(6, false),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn ceil_lemma() {
        assert!(ceil_scaling_lemma_check(3, 5, 4));
        assert!(ceil_scaling_lemma_check(1, 7, 100));
        assert!(ceil_scaling_lemma_check(6, 7, 500));
    }
}
