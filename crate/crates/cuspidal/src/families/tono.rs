use std::fmt;
use std::str::FromStr;

use crate::distribution::CurveRecord;
use crate::error::{Error, Result};
use crate::singularity::{
    mult_seq_from_splice, newton_from_mult_seq, MultSeq, NewtonPairs, SpliceData,
};

/// Type I of degree `a²s + 1`.
pub fn tono_type1(a: u64, s: u64) -> Result<CurveRecord> {
    if a < 3 || s < 1 {
        return Err(Error::InvalidParam(format!(
            "need a ≥ 3 and s ≥ 1, got a = {a}, s = {s}"
        )));
    }
    if a > 1000 || s > 1000 {
        return Err(Error::InvalidParam("parameters too large".into()));
    }
    let d = a * a * s + 1;
    let gens = [(a * a - a) * s, a * a * s, a * d, 1 + a * s * (d + 1)];
    let rec = CurveRecord::unicuspidal(d, &gens, format!("tono1(a={a},s={s})"))?;

    let mut ms = vec![(a * a - a) * s];
    ms.extend(std::iter::repeat_n(s * a, (2 * a - 1) as usize));
    ms.extend(std::iter::repeat_n(a, (2 * s) as usize));
    let quoted = MultSeq::new(ms)?;
    let sd = rec.splices().remove(0);
    if mult_seq_from_splice(&sd) != quoted || newton_from_mult_seq(&quoted)? != rec.cusps()[0] {
        return Err(Error::Internal(format!(
            "multiplicity sequence of {} disagrees with {quoted}",
            rec.label()
        )));
    }
    Ok(rec)
}

/// The `s` parameter of Type II: `Half` selects IIa.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TonoS {
    Half,
    Int(u64),
}

impl fmt::Display for TonoS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TonoS::Half => f.write_str("1/2"),
            TonoS::Int(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for TonoS {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" | "1/2" => Ok(TonoS::Half),
            _ => s.parse().map(TonoS::Int).map_err(|_| {
                Error::Parse(format!("s must be `half` or a natural number, got `{s}`"))
            }),
        }
    }
}

/// Degree and generators of Type II written with `a* = 4n+1` and `s* = 4s−1` (`s* = 1` for IIa).
pub fn tono_type2b_generators(n: u64, s_star: u64) -> Result<(u64, Vec<u64>)> {
    if n < 2 || s_star % 4 != 3 && s_star != 1 {
        return Err(Error::InvalidParam(format!(
            "need n ≥ 2 and s* ∈ {{1}} ∪ 3+4ℕ, got n = {n}, s* = {s_star}"
        )));
    }
    if n > 10_000 || s_star > 10_000 {
        return Err(Error::InvalidParam("parameters too large".into()));
    }
    let a = 4 * n + 1;
    let two_d = a * a * s_star + 1;
    let d = two_d / 2;
    let mut gens = vec![(a * a - a) * s_star / 4, a * a * s_star];
    if s_star != 1 {
        gens.push(a * d / 2);
    }
    gens.push((a * s_star * (2 * d + 1) + 1) / 4);
    Ok((d, gens))
}

/// Type IIa (`s = 1/2`) or IIb (`s ≥ 1`), `n ≥ 2`.
pub fn tono_type2(n: u64, s: TonoS) -> Result<CurveRecord> {
    if n < 2 {
        return Err(Error::InvalidParam(format!("need n ≥ 2, got {n}")));
    }
    if n > 10_000 {
        return Err(Error::InvalidParam("parameters too large".into()));
    }
    let label = format!("tono2(n={n},s={s})");
    let a_star = 4 * n + 1;
    let (d, sd) = match s {
        TonoS::Half => {
            let d = 8 * n * n + 4 * n + 1;
            let sd =
                SpliceData::from_pa(vec![n, a_star], vec![a_star, (2 * n + 1) * d - n * a_star])?;
            (d, sd)
        }
        TonoS::Int(s) => {
            if !(1..=2_500).contains(&s) {
                return Err(Error::InvalidParam(format!("need 1 ≤ s ≤ 2500, got {s}")));
            }
            let s_star = 4 * s - 1;
            let d = (a_star * a_star * s_star).div_ceil(2);
            let top = a_star * s_star * d / 2 + (s - 1) * a_star + 3 * n + 1;
            let sd = SpliceData::from_pa(vec![n, s_star, a_star], vec![a_star, d / 2, top])?;
            (d, sd)
        }
    };
    let s_star = match s {
        TonoS::Half => 1,
        TonoS::Int(s) => 4 * s - 1,
    };
    let (d2, gens) = tono_type2b_generators(n, s_star)?;
    if d2 != d || SpliceData::from_generators(&gens)? != sd {
        return Err(Error::Internal(format!(
            "{label}: splice data and generators disagree"
        )));
    }
    CurveRecord::new(d, vec![NewtonPairs::from_splice(&sd)], label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type1_examples() {
        let c = tono_type1(3, 1).unwrap();
        assert_eq!(c.d(), 10);
        assert_eq!(c.splices()[0].beta_bar(), &[6, 9, 34]);
        let c = tono_type1(3, 2).unwrap();
        assert_eq!(c.d(), 19);
        assert_eq!(c.splices()[0].beta_bar(), &[12, 18, 57, 121]);
        assert!(matches!(tono_type1(2, 1), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn type2_examples() {
        let c = tono_type2(2, TonoS::Half).unwrap();
        assert_eq!(c.d(), 41);
        let sd = &c.splices()[0];
        assert_eq!((sd.p(), sd.a()), (&[2, 9][..], &[9, 187][..]));
        assert_eq!(tono_type2(2, TonoS::Int(1)).unwrap().d(), 122);
        assert!(matches!(
            tono_type2(1, TonoS::Int(1)),
            Err(Error::InvalidParam(_))
        ));
    }
}
