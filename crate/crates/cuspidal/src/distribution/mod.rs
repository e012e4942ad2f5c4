//! The curve pipeline: `Δ`, the `P/Q` decomposition, `N(t)`, `D(t)`, `R(t)`, interval
//! counts and the Seiberg–Witten-side scalars.
//!
//! `N` is reachable three ways: coefficients of `Q` at multiples of `d`, the root-of-unity
//! filtered series `R = N(t^d)`, and `D = N(1−t)` from the coefficients of `P`. One-cusp
//! records also admit a fourth route through semigroup counting, which is the only one
//! that scales to the largest family members.

mod report;

pub use report::{conjecture_check, CuspSummary, PolyJson, Report, SwJson};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{
    is_symmetric, root_of_unity_filter, series_from_exponents, series_from_rational, IntPoly,
    TruncSeries,
};
use crate::singularity::{NewtonPairs, Semigroup, SpliceData, DENSE_LIMIT};

/// A candidate curve: degree and cusps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    d: u64,
    cusps: Vec<NewtonPairs>,
    label: String,
}

impl CurveRecord {
    pub fn new(d: u64, cusps: Vec<NewtonPairs>, label: impl Into<String>) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidParam(format!("degree {d} < 3")));
        }
        if cusps.is_empty() {
            return Err(Error::InvalidParam(
                "a curve record needs at least one cusp".into(),
            ));
        }
        Ok(CurveRecord {
            d,
            cusps,
            label: label.into(),
        })
    }

    /// One-cusp record from semigroup generators.
    pub fn unicuspidal(d: u64, gens: &[u64], label: impl Into<String>) -> Result<Self> {
        let np = SpliceData::from_generators(gens)?.newton_pairs();
        Self::new(d, vec![np], label)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn cusps(&self) -> &[NewtonPairs] {
        &self.cusps
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of cusps `ν`.
    pub fn nu(&self) -> usize {
        self.cusps.len()
    }

    pub fn splices(&self) -> Vec<SpliceData> {
        self.cusps
            .iter()
            .map(|np| np.splice().expect("validated on construction"))
            .collect()
    }

    pub fn semigroups(&self) -> Vec<Semigroup> {
        self.splices().iter().map(Semigroup::from_splice).collect()
    }

    pub fn total_delta(&self) -> u64 {
        self.splices().iter().map(SpliceData::delta).sum()
    }

    /// Degree of the A'Campo numerator of the total characteristic polynomial.
    pub fn dense_size(&self) -> u64 {
        self.splices().iter().fold(0u64, |acc, sd| {
            acc.saturating_add(sd.acampo_numerator_degree())
        })
    }

    pub fn dense_feasible(&self) -> bool {
        self.dense_size() <= DENSE_LIMIT
    }

    fn expected_two_delta(&self) -> u64 {
        (self.d - 1) * (self.d - 2)
    }
}

/// `Δ(t) = ∏ Δ_i(t)`, built as one A'Campo product over all cusps.
pub fn total_char_poly(c: &CurveRecord) -> Result<IntPoly> {
    let size = c.dense_size();
    if size > DENSE_LIMIT {
        return Err(Error::TooLarge(format!("A'Campo numerator degree {size}")));
    }
    let splices = c.splices();
    let mut poly = IntPoly::one();
    for sd in &splices {
        poly = poly.mul_binomial(1);
        for &b in sd.beta() {
            poly = poly.mul_binomial(b as usize);
        }
    }
    for sd in &splices {
        for &b in sd.beta_bar() {
            poly = poly.div_binomial(b as usize)?;
        }
    }
    Ok(poly)
}

/// `2 Σ δ_i = (d−1)(d−2)`.
pub fn genus_check(c: &CurveRecord) -> bool {
    2 * c.total_delta() == c.expected_two_delta()
}

/// `Δ = 1 + (t−1)δ + (t−1)² Q`, `P = δ + (t−1)Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQDecomposition {
    pub delta: BigInt,
    pub p: IntPoly,
    pub q: IntPoly,
}

impl PQDecomposition {
    /// `c_l`: coefficient of `t^{(d−3−l)d}` in `Q`.
    pub fn c_coeff(&self, l: u64, d: u64) -> BigInt {
        self.q.coeff(((d - 3 - l) * d) as usize)
    }

    /// `Q` split into the part at exponents divisible by `d` and the rest (`b` part).
    pub fn split_bc(&self, d: u64) -> (IntPoly, IntPoly) {
        let mut c = Vec::with_capacity(self.q.coeffs().len());
        let mut b = Vec::with_capacity(self.q.coeffs().len());
        for (k, x) in self.q.coeffs().iter().enumerate() {
            if (k as u64).is_multiple_of(d) {
                c.push(x.clone());
                b.push(BigInt::zero());
            } else {
                c.push(BigInt::zero());
                b.push(x.clone());
            }
        }
        (IntPoly::new(c), IntPoly::new(b))
    }

    /// `Δ` rebuilt from `δ` and a replacement `Q`.
    pub fn rebuild_char_poly(delta: &BigInt, q: &IntPoly) -> IntPoly {
        let t_minus_one = IntPoly::from_i64(&[-1, 1]);
        let linear = t_minus_one.scale(delta);
        let quad = &(&t_minus_one * &t_minus_one) * q;
        &(&IntPoly::one() + &linear) + &quad
    }
}

pub fn decompose_pq(delta_poly: &IntPoly) -> Result<PQDecomposition> {
    let at_one = delta_poly.eval_at_one();
    if !at_one.is_one() {
        return Err(Error::DecompositionFailure(at_one.to_string()));
    }
    let p = (delta_poly - &IntPoly::one()).div_t_minus_one()?;
    let delta = p.eval_at_one();
    let q = (&p - &IntPoly::new(vec![delta.clone()])).div_t_minus_one()?;
    Ok(PQDecomposition { delta, p, q })
}

fn genus_guard(two_delta: &BigInt, d: u64) -> Result<()> {
    let expected = (d - 1) * (d - 2);
    if *two_delta != BigInt::from(expected) {
        let two_delta = two_delta.try_into().unwrap_or(u64::MAX);
        return Err(Error::GenusMismatch {
            two_delta,
            expected,
        });
    }
    Ok(())
}

fn triangular(l: u64) -> BigInt {
    BigInt::from((l + 1) * (l + 2) / 2)
}

/// `N(t) = Σ_{l=0}^{d−3} (c_l − (l+1)(l+2)/2) t^{d−3−l}`.
pub fn n_polynomial(pq: &PQDecomposition, d: u64) -> Result<IntPoly> {
    genus_guard(&(&pq.delta * 2), d)?;
    let mut coeffs = vec![BigInt::zero(); (d - 2) as usize];
    for l in 0..=d - 3 {
        coeffs[(d - 3 - l) as usize] = pq.c_coeff(l, d) - triangular(l);
    }
    Ok(IntPoly::new(coeffs))
}

/// `N` of a one-cusp record: coefficient of `t^l` is `#(Γ ∩ [0, ld]) − (l+1)(l+2)/2`.
pub fn n_polynomial_from_semigroup(gamma: &Semigroup, d: u64) -> Result<IntPoly> {
    genus_guard(&BigInt::from(2 * gamma.delta()), d)?;
    let counts = gamma.counts_at_multiples(d, d - 3);
    let coeffs = counts
        .iter()
        .enumerate()
        .map(|(l, &c)| BigInt::from(c) - triangular(l as u64))
        .collect();
    Ok(IntPoly::new(coeffs))
}

/// `N_l` for `l = 0..d−3`, where `N_l` multiplies `t^{d−3−l}`.
pub fn n_coeffs(n: &IntPoly, d: u64) -> Vec<BigInt> {
    (0..=d - 3).map(|l| n.coeff((d - 3 - l) as usize)).collect()
}

/// `N` by the dense route when feasible, else by semigroup counting for one cusp.
pub fn n_of_curve(c: &CurveRecord) -> Result<IntPoly> {
    if c.dense_feasible() {
        n_polynomial(&decompose_pq(&total_char_poly(c)?)?, c.d)
    } else if c.nu() == 1 {
        n_polynomial_from_semigroup(&c.semigroups()[0], c.d)
    } else {
        Err(Error::TooLarge(format!(
            "{}-cusp record with A'Campo degree {}",
            c.nu(),
            c.dense_size()
        )))
    }
}

/// `D(t) = Σ_k (1 − a_k) t^{⌈k/d⌉} − (1 − t^d)/(1 − t)²` from the coefficients `a_k` of `P`.
pub fn d_polynomial_from_p(pq: &PQDecomposition, d: u64) -> Result<IntPoly> {
    genus_guard(&(&pq.delta * 2), d)?;
    let deg_p = pq.p.degree().unwrap_or(0) as u64;
    let lmax = (deg_p + 1).div_ceil(d) + 1;
    let mut out = Vec::with_capacity(lmax as usize + 1);
    for l in 0..=lmax {
        let (lo, hi) = if l == 0 {
            (0, 0)
        } else {
            ((l - 1) * d + 1, l * d)
        };
        let mut s = BigInt::zero();
        for k in lo..=hi {
            s += BigInt::one() - pq.p.coeff(k as usize);
        }
        out.push(s - BigInt::from((l + 1).min(d)));
    }
    Ok(IntPoly::new(out))
}

/// `D(t)` of a one-cusp record: `D_l = #(Γ ∩ I_l) − min(l+1, d)`.
pub fn d_polynomial_from_semigroup(gamma: &Semigroup, d: u64) -> Result<IntPoly> {
    genus_guard(&BigInt::from(2 * gamma.delta()), d)?;
    let counts = interval_counts(gamma, d, d + 1);
    let out = counts
        .iter()
        .enumerate()
        .map(|(l, &c)| BigInt::from(c) - BigInt::from((l as u64 + 1).min(d)))
        .collect();
    Ok(IntPoly::new(out))
}

pub fn d_polynomial(c: &CurveRecord) -> Result<IntPoly> {
    if c.dense_feasible() {
        d_polynomial_from_p(&decompose_pq(&total_char_poly(c)?)?, c.d)
    } else if c.nu() == 1 {
        d_polynomial_from_semigroup(&c.semigroups()[0], c.d)
    } else {
        Err(Error::TooLarge(format!(
            "{}-cusp record with A'Campo degree {}",
            c.nu(),
            c.dense_size()
        )))
    }
}

/// Smallest truncation order at which `R` is fully visible.
pub fn r_order(d: u64) -> usize {
    (d * (d - 3) + 2 * d) as usize
}

/// `R(t)`: the `d`-filter of `Δ/(1−t)²` minus `(1 − t^{d²})/(1 − t^d)³`.
pub fn r_series_from_char_poly(delta_poly: &IntPoly, d: u64, order: usize) -> Result<TruncSeries> {
    let need = r_order(d);
    if order < need {
        return Err(Error::TruncationExceeded {
            order,
            requested: need,
        });
    }
    let lhs = root_of_unity_filter(
        &series_from_rational(delta_poly, &[1, 1], order),
        d as usize,
    );
    let d = d as usize;
    let rhs = series_from_exponents(&[d * d], &[d, d, d], order);
    Ok(lhs.sub(&rhs))
}

pub fn r_series(c: &CurveRecord, order: usize) -> Result<TruncSeries> {
    r_series_from_char_poly(&total_char_poly(c)?, c.d, order)
}

/// `#(Γ ∩ I_l)` with `I_0 = {0}` and `I_l = ((l−1)d, ld]`, for `l = 0..len`.
pub fn interval_counts(gamma: &Semigroup, d: u64, len: u64) -> Vec<u64> {
    let cum = gamma.counts_at_multiples(d, len.saturating_sub(1));
    (0..cum.len())
        .map(|l| if l == 0 { cum[0] } else { cum[l] - cum[l - 1] })
        .collect()
}

/// Interval counts `#(Γ ∩ I_l)` for `l = 0..d−1` against the law `min(l+1, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpCounts {
    pub d: u64,
    pub counts: Vec<u64>,
}

impl CpCounts {
    pub fn expected(&self, l: u64) -> u64 {
        (l + 1).min(self.d)
    }

    pub fn holds(&self, l: u64) -> bool {
        self.counts[l as usize] == self.expected(l)
    }

    pub fn all_hold(&self) -> bool {
        (0..self.counts.len() as u64).all(|l| self.holds(l))
    }

    pub fn first_failure(&self) -> Option<u64> {
        (0..self.counts.len() as u64).find(|&l| !self.holds(l))
    }
}

pub fn cp_counts(gamma: &Semigroup, d: u64) -> CpCounts {
    CpCounts {
        d,
        counts: interval_counts(gamma, d, d),
    }
}

/// `K² + s`, `p_g` and `sw`, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwQuantities {
    pub k2s: BigInt,
    pub pg: BigInt,
    pub sw: BigRational,
}

impl SwQuantities {
    /// `sw − (K²+s)/8 − p_g`, which equals `N(1)`.
    pub fn defect(&self) -> BigRational {
        &self.sw
            - BigRational::new(self.k2s.clone(), 8.into())
            - BigRational::from_integer(self.pg.clone())
    }
}

/// `sw = N(1) + (K²+s)/8 + p_g` with `K²+s = −(d−1)(d²−3d+1)`, `p_g = d(d−1)(d−2)/6`.
pub fn sw_from_n(d: u64, n_at_one: &BigInt) -> SwQuantities {
    let d = BigInt::from(d);
    let one = BigInt::one();
    let k2s = -(&d - &one) * (&d * &d - BigInt::from(3) * &d + &one);
    let pg = &d * (&d - &one) * (&d - BigInt::from(2)) / BigInt::from(6);
    let sw = BigRational::from_integer(n_at_one.clone())
        + BigRational::new(k2s.clone(), 8.into())
        + BigRational::from_integer(pg.clone());
    SwQuantities { k2s, pg, sw }
}

pub fn sw_quantities(c: &CurveRecord) -> Result<SwQuantities> {
    if !genus_check(c) {
        return Err(Error::GenusMismatch {
            two_delta: 2 * c.total_delta(),
            expected: c.expected_two_delta(),
        });
    }
    Ok(sw_from_n(c.d, &n_of_curve(c)?.eval_at_one()))
}

/// Agreement of the independent `N` routes on one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteCheck {
    pub n: IntPoly,
    /// `R = N(t^d)` on the whole window, so `R` also vanishes past `d(d−3)`.
    pub r_matches: bool,
    /// `D = N·(1−t)`.
    pub d_matches: bool,
    /// `N` recomputed after zeroing the `b` part of `Q` is unchanged.
    pub b_irrelevant: bool,
    /// One-cusp semigroup route agrees (`None` for several cusps).
    pub semigroup_matches: Option<bool>,
    pub symmetric: bool,
}

impl RouteCheck {
    pub fn all_agree(&self) -> bool {
        self.r_matches
            && self.d_matches
            && self.b_irrelevant
            && self.semigroup_matches != Some(false)
            && self.symmetric
    }
}

pub fn route_check(c: &CurveRecord) -> Result<RouteCheck> {
    let d = c.d;
    let delta_poly = total_char_poly(c)?;
    let pq = decompose_pq(&delta_poly)?;
    let n = n_polynomial(&pq, d)?;
    let order = r_order(d);
    let r = r_series_from_char_poly(&delta_poly, d, order)?;
    let r_matches = r == TruncSeries::from_poly(&n.inflate(d as usize), order);
    let one_minus_t = IntPoly::from_i64(&[1, -1]);
    let d_matches = d_polynomial_from_p(&pq, d)? == &n * &one_minus_t;
    let (c_part, _) = pq.split_bc(d);
    let rebuilt = PQDecomposition::rebuild_char_poly(&pq.delta, &c_part);
    let b_irrelevant = n_polynomial(&decompose_pq(&rebuilt)?, d)? == n;
    let semigroup_matches = if c.nu() == 1 {
        let gamma = &c.semigroups()[0];
        Some(
            n_polynomial_from_semigroup(gamma, d)? == n
                && d_polynomial_from_semigroup(gamma, d)? == &n * &one_minus_t,
        )
    } else {
        None
    };
    let symmetric = is_symmetric(&n, (d - 3) as usize) && n.coeff(0).is_zero();
    Ok(RouteCheck {
        n,
        r_matches,
        d_matches,
        b_irrelevant,
        semigroup_matches,
        symmetric,
    })
}

/// `Σ_{k∉Γ} ⌈k/d⌉ = d(d−1)(d−2)/6`.
pub fn fact_one_holds(gamma: &Semigroup, d: u64) -> bool {
    gamma.gap_ceil_sum(d) == (d as u128) * (d as u128 - 1) * (d as u128 - 2) / 6
}

/// `−N`, the quantity printed in the curve tables.
pub fn minus_n(n: &IntPoly) -> IntPoly {
    -n
}

/// True iff every coefficient of `N` is `≤ 0`.
pub fn nonpositive(n: &IntPoly) -> bool {
    n.coeffs().iter().all(|c| !c.is_positive())
}
