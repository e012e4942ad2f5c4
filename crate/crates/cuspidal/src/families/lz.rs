use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactpoly::{root_of_unity_filter, series_from_exponents, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LzCase {
    One,
    Two,
}

impl fmt::Display for LzCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == LzCase::One { "1" } else { "2" })
    }
}

impl FromStr for LzCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "one" => Ok(LzCase::One),
            "2" | "two" => Ok(LzCase::Two),
            _ => Err(Error::Parse(format!("LZ case must be 1 or 2, got `{s}`"))),
        }
    }
}

/// `∏(1 − t^{num_i}) / ∏(1 − t^{den_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub num: Vec<u64>,
    pub den: Vec<u64>,
}

impl SeriesSpec {
    pub fn series(&self, order: usize) -> Result<TruncSeries> {
        let conv = |v: &[u64]| -> Result<Vec<usize>> {
            v.iter()
                .map(|&e| usize::try_from(e).map_err(|_| Error::Overflow("series exponent")))
                .collect()
        };
        Ok(series_from_exponents(
            &conv(&self.num)?,
            &conv(&self.den)?,
            order,
        ))
    }

    /// `2δ` of the semigroup whose Poincaré series this is.
    pub fn two_delta(&self) -> i128 {
        1 + self.num.iter().map(|&x| x as i128).sum::<i128>()
            - self.den.iter().map(|&x| x as i128).sum::<i128>()
    }
}

/// Lin–Zaidenberg record: the torus cusp `⟨p, q⟩` and the cusp at infinity after the floors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LzRecord {
    pub p: u64,
    pub q: u64,
    pub floors: Vec<u64>,
    pub case: LzCase,
    pub d: u64,
    pub l1: SeriesSpec,
    pub l2: SeriesSpec,
}

impl LzRecord {
    /// `2δ₁ + 2δ₂ = (d−1)(d−2)`.
    pub fn genuine(&self) -> bool {
        let d = self.d as i128;
        self.l1.two_delta() + self.l2.two_delta() == (d - 1) * (d - 2)
    }

    pub fn label(&self) -> String {
        format!(
            "lz(p={},q={},floors={:?},case={})",
            self.p, self.q, self.floors, self.case
        )
    }
}

pub fn lz_curve(p: u64, q: u64, floors: &[u64], case: LzCase) -> Result<LzRecord> {
    let g = p.gcd(&q);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    if p < 2 || q < 2 {
        return Err(Error::InvalidParam(format!(
            "need p, q ≥ 2, got ({p}, {q})"
        )));
    }
    if let Some(n) = floors.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidParam(format!("floor {n} < 2")));
    }
    let (pp, qq) = match case {
        LzCase::One => (p as i128, q as i128),
        LzCase::Two => (q as i128, p as i128),
    };
    let ovf = || Error::Overflow("LZ exponents");
    let fl: Vec<i128> = floors.iter().map(|&n| n as i128).collect();
    let prod = |xs: &[i128]| {
        xs.iter()
            .try_fold(1i128, |acc, &x| acc.checked_mul(x))
            .ok_or_else(ovf)
    };
    let sq: Vec<i128> = fl.iter().map(|x| x * x).collect();
    let big_p = prod(&fl)?;
    let big_p2 = prod(&sq)?;

    let mut num = vec![big_p2.checked_mul(pp * pp).ok_or_else(ovf)? - pp * qq];
    let mut den = vec![big_p2.checked_mul(pp).ok_or_else(ovf)? - qq, big_p * pp];
    for i in 0..fl.len() {
        let e = prod(&sq[..i])?.checked_mul(fl[i]).ok_or_else(ovf)? - 1;
        num.push(
            e.checked_mul(prod(&fl[i..])?)
                .and_then(|x| x.checked_mul(pp))
                .ok_or_else(ovf)?,
        );
        den.push(
            e.checked_mul(prod(&fl[i + 1..])?)
                .and_then(|x| x.checked_mul(pp))
                .ok_or_else(ovf)?,
        );
    }
    if let Some(e) = num.iter().chain(&den).find(|&&e| e <= 0) {
        return Err(Error::InvalidParam(format!(
            "exponent {e} ≤ 0 at infinity (case {case} needs floors)"
        )));
    }
    let to = |v: Vec<i128>| {
        v.into_iter()
            .map(|e| u64::try_from(e).map_err(|_| ovf()))
            .collect::<Result<Vec<_>>>()
    };
    Ok(LzRecord {
        p,
        q,
        floors: floors.to_vec(),
        case,
        d: u64::try_from(pp * big_p).map_err(|_| ovf())?,
        l1: SeriesSpec {
            num: vec![p * q],
            den: vec![p, q],
        },
        l2: SeriesSpec {
            num: to(num)?,
            den: to(den)?,
        },
    })
}

/// Averages `L₁L₂` over the `d`-th roots of unity and compares with `(1−t^{d²})/(1−t^d)³` below `order`.
pub fn lz_identity_check(rec: &LzRecord, order: usize) -> Result<bool> {
    let d = usize::try_from(rec.d).map_err(|_| Error::Overflow("LZ degree"))?;
    let mut num = rec.l1.num.clone();
    num.extend(&rec.l2.num);
    let mut den = rec.l1.den.clone();
    den.extend(&rec.l2.den);
    let product = SeriesSpec { num, den }.series(order)?;
    let lhs = root_of_unity_filter(&product, d);
    let rhs = series_from_exponents(&[d * d], &[d, d, d], order);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuspidal_cubic() {
        let rec = lz_curve(3, 2, &[], LzCase::One).unwrap();
        assert_eq!(rec.d, 3);
        assert_eq!(
            rec.l2.series(20).unwrap(),
            series_from_exponents(&[], &[1], 20)
        );
        assert!(rec.genuine());
        assert!(lz_identity_check(&rec, 100).unwrap());
    }

    #[test]
    fn one_floor() {
        let rec = lz_curve(3, 2, &[2], LzCase::One).unwrap();
        assert_eq!(rec.d, 6);
        assert_eq!(
            rec.l2,
            SeriesSpec {
                num: vec![30, 6],
                den: vec![10, 6, 3]
            }
        );
        assert!(lz_identity_check(&rec, 200).unwrap());
        assert!(lz_identity_check(&lz_curve(5, 2, &[2], LzCase::One).unwrap(), 500).unwrap());
    }

    #[test]
    fn rejects() {
        assert!(matches!(
            lz_curve(4, 2, &[2], LzCase::One),
            Err(Error::NotCoprime(2))
        ));
        assert!(matches!(
            lz_curve(3, 2, &[], LzCase::Two),
            Err(Error::InvalidParam(_))
        ));
    }
}
