use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

use super::newton::{NewtonPairs, SpliceData};

/// Multiplicity sequence with trailing 1's omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultSeq {
    ms: Vec<u64>,
}

impl MultSeq {
    pub fn new(ms: Vec<u64>) -> Result<Self> {
        if ms.is_empty() {
            return Err(Error::NotABranch("empty multiplicity sequence".into()));
        }
        if let Some(&m) = ms.iter().find(|&&m| m < 2) {
            return Err(Error::NotABranch(format!("entry {m} < 2")));
        }
        Ok(MultSeq { ms })
    }

    pub fn entries(&self) -> &[u64] {
        &self.ms
    }

    /// `Σ m(m−1)/2`.
    pub fn delta(&self) -> u64 {
        self.ms.iter().map(|&m| m * (m - 1) / 2).sum()
    }

    /// Run-length form, e.g. `[4,2_4]`.
    pub fn compact(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.ms.len() {
            let m = self.ms[i];
            let run = self.ms[i..].iter().take_while(|&&x| x == m).count();
            parts.push(if run == 1 {
                m.to_string()
            } else {
                format!("{m}_{run}")
            });
            i += run;
        }
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for MultSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Multiplicity sequence by iterated Euclid on the Puiseux characteristic.
pub fn mult_seq_from_newton(np: &NewtonPairs) -> Result<MultSeq> {
    let sd = np.splice()?;
    Ok(mult_seq_from_splice(&sd))
}

pub fn mult_seq_from_splice(sd: &SpliceData) -> MultSeq {
    let (b0, exps) = sd.puiseux_characteristic();
    let mut seq = Vec::new();
    let mut e = b0;
    let mut prev = 0u64;
    for &b in &exps {
        let (mut x, mut y) = (b - prev, e);
        while y > 0 {
            let h = x / y;
            seq.extend(std::iter::repeat_n(y, h as usize));
            (x, y) = (y, x % y);
        }
        e = e.gcd(&b);
        prev = b;
    }
    while seq.last() == Some(&1) {
        seq.pop();
    }
    MultSeq { ms: seq }
}

/// Inverse of [`mult_seq_from_newton`], validated by the round trip.
pub fn newton_from_mult_seq(ms: &MultSeq) -> Result<NewtonPairs> {
    let (b0, exps) = puiseux_from_mult(ms)?;
    let gens = generators_from_puiseux(b0, &exps)?;
    let sd = SpliceData::from_generators(&gens).map_err(|e| Error::NotABranch(e.to_string()))?;
    let np = sd.newton_pairs();
    if mult_seq_from_splice(&sd) != *ms {
        return Err(Error::NotABranch(format!("{ms} does not round-trip")));
    }
    Ok(np)
}

fn puiseux_from_mult(ms: &MultSeq) -> Result<(u64, Vec<u64>)> {
    let bad = || Error::NotABranch(format!("{ms} is not a branch multiplicity sequence"));
    let last = *ms.ms.last().expect("nonempty");
    let mut runs: Vec<(u64, u64)> = Vec::new();
    for &m in ms.ms.iter().chain(std::iter::repeat_n(&1, last as usize)) {
        match runs.last_mut() {
            Some((v, c)) if *v == m => *c += 1,
            _ => runs.push((m, 1)),
        }
    }
    let b0 = ms.ms[0];
    let mut b = b0;
    let mut ri = 0usize;
    let mut cur = 0u64;
    let mut exps = Vec::new();
    while b > 1 {
        let h1 = match runs.get(ri) {
            Some(&(v, c)) if v == b => {
                ri += 1;
                c
            }
            _ => 0,
        };
        let r1 = runs.get(ri).ok_or_else(bad)?.0;
        if r1 >= b {
            return Err(bad());
        }
        let a = h1 * b + r1;
        let (mut prev, mut r) = (b, r1);
        loop {
            let (v, c) = *runs.get(ri).ok_or_else(bad)?;
            if v != r {
                return Err(bad());
            }
            let (h, rem) = prev.div_rem(&r);
            if c < h {
                return Err(bad());
            }
            if rem == 0 {
                runs[ri].1 -= h;
                if runs[ri].1 == 0 {
                    ri += 1;
                }
                break;
            }
            if c != h {
                return Err(bad());
            }
            ri += 1;
            (prev, r) = (r, rem);
        }
        cur += a;
        exps.push(cur);
        b = r;
    }
    if ri != runs.len() {
        return Err(bad());
    }
    Ok((b0, exps))
}

/// Semigroup generators `β̄_k` from the Puiseux characteristic.
pub fn generators_from_puiseux(b0: u64, exps: &[u64]) -> Result<Vec<u64>> {
    let mut es = vec![b0];
    for &b in exps {
        let last = *es.last().expect("nonempty");
        es.push(last.gcd(&b));
    }
    if *es.last().expect("nonempty") != 1 {
        return Err(Error::NotABranch(
            "characteristic exponents are not coprime".into(),
        ));
    }
    let mut bar = vec![b0];
    for (k, &b) in exps.iter().enumerate() {
        if k == 0 {
            bar.push(b);
        } else {
            let n = es[k - 1] / es[k];
            bar.push(n * bar[k] + b - exps[k - 1]);
        }
    }
    Ok(bar)
}
