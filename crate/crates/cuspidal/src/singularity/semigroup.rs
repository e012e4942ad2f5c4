use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactpoly::TruncSeries;

use super::newton::SpliceData;

/// Numerical semigroup stored through its Apéry set with respect to the multiplicity.
///
/// `apery[r]` is the least element congruent to `r` modulo `m`, so membership, counting
/// and the delta invariant are exact without a table up to the conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    conductor: u64,
    delta: u64,
}

impl Semigroup {
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first().is_none_or(|&x| x == 0) {
            return Err(Error::InvalidParam(
                "generators must be positive and nonempty".into(),
            ));
        }
        let gcd = sorted.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if gcd != 1 {
            return Err(Error::NotCoprime(gcd));
        }
        let m = sorted[0];
        let mut apery = vec![u64::MAX; m as usize];
        apery[0] = 0;
        let mut minimal = vec![m];
        for &x in &sorted[1..] {
            if apery[(x % m) as usize] <= x {
                continue;
            }
            minimal.push(x);
            round_robin(&mut apery, x);
        }
        Ok(Self::from_apery(minimal, apery))
    }

    /// Closed-form Apéry set `{Σ k_j β̄_j : 0 ≤ k_j < p_j}` of a branch semigroup.
    pub fn from_splice(sd: &SpliceData) -> Self {
        let bb = sd.beta_bar();
        let m = bb[0];
        let mut elems = vec![0u64];
        for (j, &pj) in sd.p().iter().enumerate() {
            let step = bb[j + 1];
            let mut next = Vec::with_capacity(elems.len() * pj as usize);
            for k in 0..pj {
                next.extend(elems.iter().map(|&w| w + k * step));
            }
            elems = next;
        }
        let mut apery = vec![0u64; m as usize];
        for w in elems {
            apery[(w % m) as usize] = w;
        }
        Self::from_apery(bb.to_vec(), apery)
    }

    fn from_apery(generators: Vec<u64>, apery: Vec<u64>) -> Self {
        let m = generators[0];
        let delta = apery.iter().map(|&w| w / m).sum();
        let max = apery.iter().copied().max().unwrap_or(0);
        let conductor = (max + 1).saturating_sub(m);
        Semigroup {
            generators,
            apery,
            conductor,
            delta,
        }
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Least `c` with `[c, ∞) ⊂ Γ`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.apery[(x % self.multiplicity()) as usize]
    }

    /// Membership on `[0, conductor]`.
    pub fn membership_table(&self) -> Vec<bool> {
        (0..=self.conductor).map(|x| self.contains(x)).collect()
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// `#(Γ ∩ [0, x])`.
    pub fn count_le(&self, x: u64) -> u64 {
        let m = self.multiplicity();
        self.apery
            .iter()
            .filter(|&&w| w <= x)
            .map(|&w| (x - w) / m + 1)
            .sum()
    }

    /// `#(Γ ∩ [0, l·step])` for `l = 0..=lmax`, in one sweep.
    pub fn counts_at_multiples(&self, step: u64, lmax: u64) -> Vec<u64> {
        let m = self.multiplicity();
        let mut items: Vec<(u64, usize)> = self
            .apery
            .iter()
            .enumerate()
            .map(|(r, &w)| (w / m, r))
            .collect();
        items.sort_unstable();
        let mut fen = Fenwick::new(m as usize);
        let (mut cnt, mut sum_q, mut next) = (0u128, 0u128, 0usize);
        let mut out = Vec::with_capacity(lmax as usize + 1);
        for l in 0..=lmax {
            let x = l as u128 * step as u128;
            let (q, rho) = ((x / m as u128) as u64, (x % m as u128) as usize);
            while next < items.len() && items[next].0 <= q {
                cnt += 1;
                sum_q += items[next].0 as u128;
                fen.add(items[next].1);
                next += 1;
            }
            let above = cnt - fen.prefix(rho) as u128;
            out.push((cnt * (q as u128 + 1) - sum_q - above) as u64);
        }
        out
    }

    /// `Σ_{k ∉ Γ} ⌈k/d⌉`.
    pub fn gap_ceil_sum(&self, d: u64) -> u128 {
        let m = self.multiplicity() as u128;
        let d = d as u128;
        self.apery
            .iter()
            .map(|&w| {
                let (q, r) = (w as u128 / m, w as u128 % m);
                // gaps w − j m for j = 1..q, i.e. r + i m for i = 0..q-1
                floor_sum(q, d, m, r + d - 1)
            })
            .sum()
    }

    /// `k ∈ Γ ⇔ c − 1 − k ∉ Γ`, via the Apéry criterion.
    pub fn is_symmetric(&self) -> bool {
        let max = self.apery.iter().copied().max().unwrap_or(0);
        self.apery.iter().all(|&w| self.contains(max - w))
    }

    /// Poincaré series `Σ_{k∈Γ} t^k` below `order`.
    pub fn poincare_series(&self, order: usize) -> TruncSeries {
        TruncSeries::new(
            (0..order as u64)
                .map(|k| if self.contains(k) { 1.into() } else { 0.into() })
                .collect(),
        )
    }
}

/// Inserts generator `x` into an Apéry table by walking each residue cycle of `+x` from its minimum.
fn round_robin(apery: &mut [u64], x: u64) {
    let m = apery.len() as u64;
    let cycles = x.gcd(&m);
    let len = m / cycles;
    for start in 0..cycles {
        let mut best = start;
        let mut r = start;
        for _ in 0..len {
            if apery[r as usize] < apery[best as usize] {
                best = r;
            }
            r = (r + x) % m;
        }
        if apery[best as usize] == u64::MAX {
            continue;
        }
        let mut r = best;
        for _ in 0..len {
            let nr = (r + x) % m;
            let cand = apery[r as usize] + x;
            if cand < apery[nr as usize] {
                apery[nr as usize] = cand;
            }
            r = nr;
        }
    }
}

/// `Σ_{i=0}^{n-1} ⌊(a·i + b) / m⌋`.
pub fn floor_sum(n: u128, m: u128, a: u128, b: u128) -> u128 {
    let (mut n, mut m, mut a, mut b) = (n, m, a, b);
    let mut acc = 0u128;
    loop {
        if a >= m {
            acc += n * (n.saturating_sub(1)) / 2 * (a / m);
            a %= m;
        }
        if b >= m {
            acc += n * (b / m);
            b %= m;
        }
        let y_max = a * n + b;
        if y_max < m {
            return acc;
        }
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
}

struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![0; n + 1],
        }
    }

    fn add(&mut self, i: usize) {
        let mut i = i + 1;
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Count of inserted indices `≤ i`.
    fn prefix(&self, i: usize) -> u64 {
        let mut i = i + 1;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let s = Semigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!((s.gaps(), s.delta(), s.conductor()), (vec![1], 1, 2));
        let s = Semigroup::from_generators(&[4, 5]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 3, 6, 7, 11]);
        assert_eq!((s.delta(), s.conductor()), (6, 12));
        assert_eq!(
            Semigroup::from_generators(&[4, 6]),
            Err(Error::NotCoprime(2))
        );
    }

    #[test]
    fn redundant_generators_dropped() {
        let s = Semigroup::from_generators(&[4, 5, 8, 9, 13]).unwrap();
        assert_eq!(s.generators(), &[4, 5]);
    }

    #[test]
    fn splice_and_generic_agree() {
        let sd = SpliceData::from_generators(&[6, 9, 20]).unwrap();
        assert_eq!(
            Semigroup::from_splice(&sd),
            Semigroup::from_generators(&[6, 9, 20]).unwrap()
        );
        assert_eq!(sd.delta(), sd.semigroup().delta());
    }

    #[test]
    fn counting_sweep_matches_direct() {
        let s = Semigroup::from_generators(&[6, 9, 20]).unwrap();
        let sweep = s.counts_at_multiples(7, 12);
        for (l, &c) in sweep.iter().enumerate() {
            let direct = (0..=7 * l as u64).filter(|&x| s.contains(x)).count() as u64;
            assert_eq!(c, direct);
            assert_eq!(s.count_le(7 * l as u64), direct);
        }
    }

    #[test]
    fn gap_ceil_sum_matches_direct() {
        let s = Semigroup::from_generators(&[4, 5]).unwrap();
        let direct: u128 = s.gaps().iter().map(|&k| k.div_ceil(5) as u128).sum();
        assert_eq!(s.gap_ceil_sum(5), direct);
        assert_eq!(direct, 10);
    }

    #[test]
    fn floor_sum_matches_naive() {
        for n in 0..12u128 {
            for m in 1..9u128 {
                for a in 0..11u128 {
                    for b in 0..13u128 {
                        let naive: u128 = (0..n).map(|i| (a * i + b) / m).sum();
                        assert_eq!(floor_sum(n, m, a, b), naive);
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_criterion() {
        assert!(Semigroup::from_generators(&[4, 5]).unwrap().is_symmetric());
        assert!(!Semigroup::from_generators(&[3, 4, 5])
            .unwrap()
            .is_symmetric());
    }
}
