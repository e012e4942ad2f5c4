use std::fmt;
use std::str::FromStr;

use crate::distribution::CurveRecord;
use crate::error::{Error, Result};
use crate::exactpoly::{series_from_exponents, TruncSeries};
use crate::singularity::Semigroup;

use super::{fib, to_u64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KashiwaraMember {
    Generic,
    Special,
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("unknown sign `{s}`"))),
        }
    }
}

impl FromStr for KashiwaraMember {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ge" | "generic" => Ok(KashiwaraMember::Generic),
            "sp" | "special" => Ok(KashiwaraMember::Special),
            _ => Err(Error::Parse(format!("unknown member `{s}`"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+" } else { "-" })
    }
}

impl fmt::Display for KashiwaraMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == KashiwaraMember::Generic {
            "ge"
        } else {
            "sp"
        })
    }
}

struct Params {
    /// `φ_{2ℓ+3}`
    f3: u128,
    /// `φ_{2ℓ+5}` for `+`, `φ_{2ℓ+1}` for `−`
    fo: u128,
    n: Vec<u128>,
}

fn params(sign: Sign, ell: u64, lambda: &[u64]) -> Result<Params> {
    if lambda.is_empty() {
        return Err(Error::InvalidParam("λ must be nonempty".into()));
    }
    if ell == 0 && lambda.contains(&0) {
        return Err(Error::InvalidParam("λ_i ≥ 1 is required at ℓ = 0".into()));
    }
    if ell > 40 {
        return Err(Error::InvalidParam(format!("ℓ = {ell} too large")));
    }
    let l = ell as i32;
    let f3 = fib(2 * l + 3);
    let fm = fib(2 * l - 1);
    let fo = match sign {
        Sign::Plus => fib(2 * l + 5),
        Sign::Minus => fib(2 * l + 1),
    };
    let sq = f3 * f3;
    let mut n = Vec::with_capacity(lambda.len());
    for (i, &lam) in lambda.iter().enumerate() {
        let odd = (i % 2 == 0) == (sign == Sign::Plus);
        let tail = if odd { f3 * fm } else { f3 * (f3 - fm) };
        let v = (lam as u128)
            .checked_mul(sq)
            .and_then(|x| x.checked_add(tail))
            .ok_or(Error::Overflow("Kashiwara floors"))?;
        n.push(v - 1);
    }
    Ok(Params { f3, fo, n })
}

/// Degree and semigroup generators `β̄` of a Kashiwara curve, before minimalization.
pub fn kashiwara_generators(
    sign: Sign,
    ell: u64,
    lambda: &[u64],
    member: KashiwaraMember,
) -> Result<(u64, Vec<u64>)> {
    let Params { f3, fo, n } = params(sign, ell, lambda)?;
    let ovf = || Error::Overflow("Kashiwara splice data");
    let sq = f3 * f3;
    let big_n = n.len();
    let mut prod_n: u128 = 1;
    let mut prod_sq: u128 = 1;
    let mut a = Vec::with_capacity(big_n + 1);
    for &nk in &n {
        let num = (fo * fo)
            .checked_mul(prod_sq)
            .and_then(|x| x.checked_mul(nk))
            .ok_or_else(ovf)?
            - 1;
        if num % sq != 0 {
            return Err(Error::NonIntegralSplice(format!("{sq} ∤ {num}")));
        }
        a.push(num / sq);
        prod_n = prod_n.checked_mul(nk).ok_or_else(ovf)?;
        prod_sq = prod_sq.checked_mul(nk * nk).ok_or_else(ovf)?;
    }
    let top = (fo * fo).checked_mul(prod_sq).ok_or_else(ovf)?;
    let (d, last_p) = match member {
        KashiwaraMember::Generic => {
            a.push(top);
            (f3 * fo * prod_n, sq)
        }
        KashiwaraMember::Special => {
            if (top + 1) % f3 != 0 {
                return Err(Error::NonIntegralSplice(format!("{f3} ∤ {}", top + 1)));
            }
            a.push((top + 1) / f3);
            (fo * prod_n, f3)
        }
    };
    let mut p = n;
    p.push(last_p);
    let mut bb = Vec::with_capacity(p.len() + 1);
    bb.push(
        p.iter()
            .try_fold(1u128, |acc, &x| acc.checked_mul(x))
            .ok_or_else(ovf)?,
    );
    for k in 0..p.len() {
        let tail = p[k + 1..]
            .iter()
            .try_fold(1u128, |acc, &x| acc.checked_mul(x))
            .ok_or_else(ovf)?;
        bb.push(a[k].checked_mul(tail).ok_or_else(ovf)?);
    }
    let bb = bb
        .into_iter()
        .map(|x| to_u64(x, "Kashiwara generators"))
        .collect::<Result<Vec<_>>>()?;
    Ok((to_u64(d, "Kashiwara degree")?, bb))
}

pub fn kashiwara_curve(
    sign: Sign,
    ell: u64,
    lambda: &[u64],
    member: KashiwaraMember,
) -> Result<CurveRecord> {
    let (d, gens) = kashiwara_generators(sign, ell, lambda, member)?;
    CurveRecord::unicuspidal(
        d,
        &gens,
        format!("kashiwara({sign},{ell},{lambda:?},{member})"),
    )
}

/// Compares `Σ_{k∈Γ} t^{⌈φ_{2ℓ+3}k/d⌉}` with its closed form below `order`, generic member.
pub fn kashiwara_chi_check(sign: Sign, ell: u64, lambda: &[u64], order: usize) -> Result<bool> {
    let (d, gens) = kashiwara_generators(sign, ell, lambda, KashiwaraMember::Generic)?;
    let m = to_u64(fib(2 * ell as i32 + 3), "Kashiwara chi")?;
    let gamma = Semigroup::from_generators(&gens)?;
    Ok(scaled_ceiling_series(&gamma, m, d, order)
        == kashiwara_chi_closed_form(sign, ell, lambda, order)?)
}

/// Closed form of the generic member's `χ` series, truncated below `order`.
pub fn kashiwara_chi_closed_form(
    sign: Sign,
    ell: u64,
    lambda: &[u64],
    order: usize,
) -> Result<TruncSeries> {
    let Params { f3, fo, n } = params(sign, ell, lambda)?;
    let l = ell as i32;
    let (f1, f5) = (fib(2 * l + 1), fib(2 * l + 5));
    let prod_n = n.iter().product::<u128>();
    let e = |x: u128| usize::try_from(x).map_err(|_| Error::Overflow("Kashiwara chi exponent"));
    Ok(series_from_exponents(
        &[e(f1 * f5)?, e(f3 * f3 * fo * prod_n)?],
        &[e(f3 * f3)?, e(f1)?, e(f5)?],
        order,
    ))
}

/// `Σ_{k∈Γ} t^{⌈mk/d⌉}` below `order`.
pub fn scaled_ceiling_series(gamma: &Semigroup, m: u64, d: u64, order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order);
    let mut prev = None;
    for j in 0..order as u64 {
        let hi = gamma.count_le(j * d / m);
        coeffs.push((hi - prev.unwrap_or(0)).into());
        prev = Some(hi);
    }
    TruncSeries::new(coeffs)
}
