use std::fmt;

use num_integer::Integer;

use crate::error::{self, Error, Result};
use crate::exactpoly::IntPoly;

use super::semigroup::Semigroup;

/// Largest numerator degree `1 + Σβ_k` accepted by the dense A'Campo product.
pub const DENSE_LIMIT: u64 = 2_000_000;

/// Newton pairs `(p_k, q_k)` of one branch.
///
/// `p_k ≥ 2`, `gcd(p_k, q_k) = 1`, `q_1 ≥ 2` and `q_1 > p_1`, `q_k ≥ 1` for `k ≥ 2`.
/// A single pair with `q_1 < p_1` is swapped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonPairs {
    pairs: Vec<(u64, u64)>,
}

impl NewtonPairs {
    pub fn new(mut pairs: Vec<(u64, u64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidPairs("at least one pair is required".into()));
        }
        if pairs.len() == 1 && pairs[0].1 < pairs[0].0 {
            pairs[0] = (pairs[0].1, pairs[0].0);
        }
        for (k, &(p, q)) in pairs.iter().enumerate() {
            if p < 2 {
                return Err(Error::InvalidPairs(format!("p_{} = {p} < 2", k + 1)));
            }
            if q.gcd(&p) != 1 {
                return Err(Error::InvalidPairs(format!(
                    "gcd(p_{0}, q_{0}) ≠ 1 in ({p},{q})",
                    k + 1
                )));
            }
            if k == 0 && q <= p {
                return Err(Error::InvalidPairs(format!(
                    "q_1 = {q} must exceed p_1 = {p}"
                )));
            }
            if q == 0 {
                return Err(Error::InvalidPairs(format!("q_{} = 0", k + 1)));
            }
        }
        let np = NewtonPairs { pairs };
        np.splice()?;
        Ok(np)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Number of pairs `g`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Splice decorations: `a_1 = q_1`, `a_{k+1} = q_{k+1} + p_{k+1} p_k a_k`.
    pub fn splice(&self) -> Result<SpliceData> {
        let p: Vec<u64> = self.pairs.iter().map(|&(p, _)| p).collect();
        let mut a = Vec::with_capacity(p.len());
        for (k, &(pk, qk)) in self.pairs.iter().enumerate() {
            if k == 0 {
                a.push(qk);
            } else {
                let prev = error::mul(error::mul(pk, p[k - 1], "splice")?, a[k - 1], "splice")?;
                a.push(error::add(qk, prev, "splice")?);
            }
        }
        SpliceData::from_pa(p, a)
    }

    pub fn from_splice(sd: &SpliceData) -> Self {
        let pairs = (0..sd.g())
            .map(|k| {
                let q = if k == 0 {
                    sd.a[0]
                } else {
                    sd.a[k] - sd.p[k] * sd.p[k - 1] * sd.a[k - 1]
                };
                (sd.p[k], q)
            })
            .collect();
        NewtonPairs { pairs }
    }
}

impl fmt::Display for NewtonPairs {
    /// `newton:(p1,q1),(p2,q2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "newton:")?;
        for (k, (p, q)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({p},{q})")?;
        }
        Ok(())
    }
}

/// Splice decorations `(p_k, a_k)` with the derived `β_k` and semigroup generators `β̄_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpliceData {
    p: Vec<u64>,
    a: Vec<u64>,
    beta: Vec<u64>,
    beta_bar: Vec<u64>,
}

impl SpliceData {
    /// Validates `gcd(p_k, a_k) = 1`, `a_{k+1} > a_k p_k p_{k+1}` and derives `β`, `β̄`.
    pub fn from_pa(p: Vec<u64>, a: Vec<u64>) -> Result<Self> {
        let g = p.len();
        if g == 0 || a.len() != g {
            return Err(Error::InvalidPairs(
                "p and a must be nonempty and of equal length".into(),
            ));
        }
        for k in 0..g {
            if p[k] < 2 {
                return Err(Error::InvalidPairs(format!("p_{} = {} < 2", k + 1, p[k])));
            }
            if p[k].gcd(&a[k]) != 1 {
                return Err(Error::InvalidPairs(format!("gcd(p_{0}, a_{0}) ≠ 1", k + 1)));
            }
        }
        if a[0] <= p[0] {
            return Err(Error::InvalidPairs(format!(
                "a_1 = {} must exceed p_1 = {}",
                a[0], p[0]
            )));
        }
        for k in 1..g {
            let bound = error::mul(error::mul(a[k - 1], p[k - 1], "splice")?, p[k], "splice")?;
            if a[k] <= bound {
                return Err(Error::InvalidPairs(format!(
                    "a_{} = {} must exceed a_{} p_{} p_{} = {bound}",
                    k + 1,
                    a[k],
                    k,
                    k,
                    k + 1
                )));
            }
        }
        // tail[k] = p_{k+1} ⋯ p_g (0-based: product of p[k..])
        let mut tail = vec![1u64; g + 1];
        for k in (0..g).rev() {
            tail[k] = error::mul(tail[k + 1], p[k], "splice")?;
        }
        let mut beta = Vec::with_capacity(g);
        let mut beta_bar = vec![tail[0]];
        for k in 0..g {
            beta.push(error::mul(a[k], tail[k], "splice")?);
            beta_bar.push(error::mul(a[k], tail[k + 1], "splice")?);
        }
        Ok(SpliceData {
            p,
            a,
            beta,
            beta_bar,
        })
    }

    /// Splice data of the branch whose semigroup is generated by `gens`.
    ///
    /// Generators are sorted, duplicates and redundant elements are dropped; the rest must
    /// form the minimal system of a plane-branch semigroup.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first().is_none_or(|&x| x == 0) {
            return Err(Error::InvalidPairs(
                "generators must be positive and nonempty".into(),
            ));
        }
        let total_gcd = sorted.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if total_gcd != 1 {
            return Err(Error::NotCoprime(total_gcd));
        }
        if sorted[0] == 1 {
            return Err(Error::InvalidPairs(
                "semigroup ⟨1⟩ is a smooth branch".into(),
            ));
        }
        let mut mins = vec![sorted[0]];
        let mut e = sorted[0];
        for &x in &sorted[1..] {
            if e == 1 {
                if !prefix_contains(&mins, x) {
                    return Err(Error::InvalidPairs(format!(
                        "{x} is not a branch generator"
                    )));
                }
                continue;
            }
            let ne = e.gcd(&x);
            if ne < e {
                mins.push(x);
                e = ne;
            } else if !prefix_contains(&mins, x) {
                return Err(Error::InvalidPairs(format!(
                    "{x} does not lower the gcd chain"
                )));
            }
        }
        let mut es = vec![mins[0]];
        for &x in &mins[1..] {
            let last = *es.last().expect("nonempty");
            es.push(last.gcd(&x));
        }
        let p: Vec<u64> = (1..mins.len()).map(|k| es[k - 1] / es[k]).collect();
        let a: Vec<u64> = (1..mins.len()).map(|k| mins[k] / es[k]).collect();
        let sd = SpliceData::from_pa(p, a)?;
        debug_assert_eq!(sd.beta_bar, mins);
        Ok(sd)
    }

    pub fn g(&self) -> usize {
        self.p.len()
    }

    pub fn p(&self) -> &[u64] {
        &self.p
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `β_k = a_k p_k ⋯ p_g`, `k = 1..g`.
    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    /// `β̄_0 = p_1 ⋯ p_g`, `β̄_k = a_k p_{k+1} ⋯ p_g`.
    pub fn beta_bar(&self) -> &[u64] {
        &self.beta_bar
    }

    pub fn multiplicity(&self) -> u64 {
        self.beta_bar[0]
    }

    /// `δ = deg Δ / 2 = (1 + Σβ_k − Σβ̄_k) / 2`.
    pub fn delta(&self) -> u64 {
        let num: u128 = 1 + self.beta.iter().map(|&b| b as u128).sum::<u128>();
        let den: u128 = self.beta_bar.iter().map(|&b| b as u128).sum();
        ((num - den) / 2) as u64
    }

    pub fn newton_pairs(&self) -> NewtonPairs {
        NewtonPairs::from_splice(self)
    }

    pub fn semigroup(&self) -> Semigroup {
        Semigroup::from_splice(self)
    }

    /// Degree `1 + Σβ_k` of the A'Campo numerator.
    pub fn acampo_numerator_degree(&self) -> u64 {
        self.beta.iter().fold(1u64, |acc, &b| acc.saturating_add(b))
    }

    /// `Δ(t) = (t−1) ∏(t^{β_k} − 1) / ∏(t^{β̄_k} − 1)`.
    pub fn char_poly(&self) -> Result<IntPoly> {
        let deg = self.acampo_numerator_degree();
        if deg > DENSE_LIMIT {
            return Err(Error::TooLarge(format!("A'Campo numerator degree {deg}")));
        }
        let mut num = IntPoly::binomial(1);
        for &b in &self.beta {
            num = num.mul_binomial(b as usize);
        }
        for &b in &self.beta_bar {
            num = num.div_binomial(b as usize)?;
        }
        Ok(num)
    }

    /// Puiseux characteristic `(β_0; β_1, …, β_g)`.
    pub fn puiseux_characteristic(&self) -> (u64, Vec<u64>) {
        let bb = &self.beta_bar;
        let mut exps = vec![bb[1]];
        for k in 1..self.g() {
            let prev = exps[k - 1];
            exps.push(bb[k + 1] + prev - self.p[k - 1] * bb[k]);
        }
        (bb[0], exps)
    }

    /// `γ = k_0 β̄_0 + Σ k_j β̄_j` with `0 ≤ k_j ≤ p_j − 1`.
    pub fn unique_representation(&self, gamma: u64) -> Result<(u64, Vec<u64>)> {
        let g = self.g();
        let mut ks = vec![0u64; g];
        let mut rest = gamma as i128;
        // e_j = p_{j+1} ⋯ p_g, so β̄_j = a_j e_j.
        let mut e: i128 = 1;
        for j in (0..g).rev() {
            let pj = self.p[j] as i128;
            let aj = self.a[j] as i128;
            let reduced = (rest / e).rem_euclid(pj);
            let inv = mod_inverse(aj.rem_euclid(pj), pj);
            let kj = (reduced * inv).rem_euclid(pj);
            ks[j] = kj as u64;
            rest -= kj * self.beta_bar[j + 1] as i128;
            if rest < 0 {
                return Err(Error::NotInSemigroup(gamma));
            }
            e *= pj;
        }
        let b0 = self.beta_bar[0] as i128;
        debug_assert_eq!(rest % b0, 0);
        Ok(((rest / b0) as u64, ks))
    }
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let ext = a.extended_gcd(&m);
    debug_assert_eq!(ext.gcd, 1);
    ext.x.rem_euclid(m)
}

/// Membership of `x` in the semigroup generated by a valid branch prefix.
fn prefix_contains(prefix: &[u64], x: u64) -> bool {
    let e = prefix.iter().fold(0u64, |acc, &y| acc.gcd(&y));
    if !x.is_multiple_of(e) {
        return false;
    }
    let scaled: Vec<u64> = prefix.iter().map(|&y| y / e).collect();
    if scaled[0] == 1 {
        return true;
    }
    Semigroup::from_generators(&scaled)
        .map(|s| s.contains(x / e))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn np(pairs: &[(u64, u64)]) -> NewtonPairs {
        NewtonPairs::new(pairs.to_vec()).unwrap()
    }

    #[test]
    fn splice_examples() {
        let sd = np(&[(2, 3)]).splice().unwrap();
        assert_eq!(
            (sd.p(), sd.a(), sd.beta(), sd.beta_bar()),
            (&[2][..], &[3][..], &[6][..], &[2, 3][..])
        );
        let sd = np(&[(2, 3), (3, 2)]).splice().unwrap();
        assert_eq!(sd.a(), &[3, 20]);
        assert_eq!(sd.beta_bar(), &[6, 9, 20]);
        assert!(matches!(
            NewtonPairs::new(vec![(2, 2)]),
            Err(Error::InvalidPairs(_))
        ));
    }

    #[test]
    fn single_pair_is_swapped() {
        assert_eq!(np(&[(5, 4)]).pairs(), &[(4, 5)]);
        assert!(NewtonPairs::new(vec![(3, 2), (2, 3)]).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let d = np(&[(2, 3)]).splice().unwrap().char_poly().unwrap();
        assert_eq!(d, IntPoly::from_i64(&[1, -1, 1]));
        let d = np(&[(2, 5)]).splice().unwrap().char_poly().unwrap();
        assert_eq!(d, IntPoly::from_i64(&[1, -1, 1, -1, 1]));
        let sd = np(&[(4, 5)]).splice().unwrap();
        let d = sd.char_poly().unwrap();
        assert_eq!(d.degree(), Some(12));
        assert_eq!(d.eval_at_one(), 1.into());
        assert_eq!(d.derivative_at_one(), 6.into());
        assert_eq!(sd.delta(), 6);
    }

    #[test]
    fn generator_normalization() {
        let sd = SpliceData::from_generators(&[4, 6, 13]).unwrap();
        assert_eq!(sd.newton_pairs().pairs(), &[(2, 3), (2, 1)]);
        let sd = SpliceData::from_generators(&[20, 4, 25]).unwrap();
        assert_eq!(sd.beta_bar(), &[4, 25]);
        let sd = SpliceData::from_generators(&[10, 2, 13, 13]).unwrap();
        assert_eq!(sd.beta_bar(), &[2, 13]);
        assert_eq!(
            SpliceData::from_generators(&[4, 6]),
            Err(Error::NotCoprime(2))
        );
        assert!(SpliceData::from_generators(&[4, 6, 11]).is_err());
    }

    #[test]
    fn unique_representation_examples() {
        let sd = np(&[(4, 5)]).splice().unwrap();
        assert_eq!(sd.unique_representation(0).unwrap(), (0, vec![0]));
        assert_eq!(sd.unique_representation(13).unwrap(), (2, vec![1]));
        assert_eq!(sd.unique_representation(7), Err(Error::NotInSemigroup(7)));
        let sd = SpliceData::from_generators(&[6, 9, 20]).unwrap();
        let (k0, ks) = sd.unique_representation(38).unwrap();
        assert_eq!(k0 * 6 + ks[0] * 9 + ks[1] * 20, 38);
    }

    #[test]
    fn puiseux_characteristic_examples() {
        let sd = SpliceData::from_generators(&[4, 6, 13]).unwrap();
        assert_eq!(sd.puiseux_characteristic(), (4, vec![6, 7]));
        let sd = SpliceData::from_generators(&[6, 9, 20]).unwrap();
        assert_eq!(sd.puiseux_characteristic(), (6, vec![9, 11]));
    }
}
