//! One irreducible plane-branch singularity in three interchangeable encodings.
//!
//! [`NewtonPairs`], [`SpliceData`] and [`MultSeq`] convert into one another; the
//! characteristic polynomial comes from the A'Campo product and the semigroup
//! from its closed-form Apéry set.

mod multseq;
mod newton;
mod semigroup;

pub use multseq::{
    generators_from_puiseux, mult_seq_from_newton, mult_seq_from_splice, newton_from_mult_seq,
    MultSeq,
};
pub use newton::{NewtonPairs, SpliceData, DENSE_LIMIT};
pub use semigroup::{floor_sum, Semigroup};

use crate::error::{Error, Result};

/// Parses `newton:(p1,q1),(p2,q2)`, `mult:[m1,m2x3,…]` (also `m_3`) or `gens:[b0,b1,…]`.
pub fn parse_cusp(spec: &str) -> Result<NewtonPairs> {
    let spec = spec.trim();
    let (kind, body) = spec.split_once(':').ok_or_else(|| {
        Error::Parse(format!("`{spec}`: expected newton:, mult: or gens: prefix"))
    })?;
    match kind.trim() {
        "newton" => parse_newton(body),
        "mult" => newton_from_mult_seq(&parse_mult(body)?),
        "gens" => Ok(SpliceData::from_generators(&parse_list(body)?)?.newton_pairs()),
        other => Err(Error::Parse(format!("unknown singularity kind `{other}`"))),
    }
}

/// Parses the bracketed body of a `mult:` spec, e.g. `[4,2x4]`.
pub fn parse_mult(body: &str) -> Result<MultSeq> {
    let inner = strip_brackets(body)?;
    let mut ms = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        match tok.split_once(['x', '_']) {
            Some((m, c)) => {
                let m = parse_num(m)?;
                let c = parse_num(c)?;
                ms.extend(std::iter::repeat_n(m, c as usize));
            }
            None => ms.push(parse_num(tok)?),
        }
    }
    MultSeq::new(ms)
}

fn parse_newton(body: &str) -> Result<NewtonPairs> {
    let mut pairs = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in `{body}`")))?;
        let (inside, after) = open
            .split_once(')')
            .ok_or_else(|| Error::Parse(format!("unclosed pair in `{body}`")))?;
        let (p, q) = inside
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair `({inside})` needs two entries")))?;
        pairs.push((parse_num(p)?, parse_num(q)?));
        rest = after.trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    NewtonPairs::new(pairs)
}

fn parse_list(body: &str) -> Result<Vec<u64>> {
    strip_brackets(body)?.split(',').map(parse_num).collect()
}

fn strip_brackets(body: &str) -> Result<&str> {
    body.trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[…]`, got `{body}`")))
}

fn parse_num(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("`{}` is not a natural number", s.trim())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_cusp("newton:(3,4)").unwrap().pairs(), &[(3, 4)]);
        assert_eq!(
            parse_cusp("newton:(2,3),(2,1)").unwrap(),
            parse_cusp("mult:[4,2x2]").unwrap()
        );
        assert_eq!(
            parse_cusp("mult:[2x3]").unwrap(),
            parse_cusp("newton:(2,7)").unwrap()
        );
        assert_eq!(
            parse_cusp("mult:[2_3]").unwrap(),
            parse_cusp("gens:[2,7]").unwrap()
        );
        assert!(matches!(parse_cusp("puiseux:(2,3)"), Err(Error::Parse(_))));
        assert!(matches!(parse_cusp("mult:[4,2x]"), Err(Error::Parse(_))));
        assert!(matches!(parse_cusp("newton:(2,3"), Err(Error::Parse(_))));
    }
}
