//! Exact integer polynomials and truncated power series.
//!
//! Both carriers are dense vectors of [`BigInt`], index = exponent.
//! Multiplication and division by binomials `t^n - 1` run in linear time,
//! which is what the A'Campo product and the Poincaré-series expansions need.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with exact integer coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t^n - 1`.
    pub fn binomial(n: usize) -> Self {
        Self::one().mul_binomial(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p'(1)`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(k))
            .sum()
    }

    /// `p(t^n)`.
    pub fn inflate(&self, n: usize) -> Self {
        assert!(n >= 1, "inflate by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * n] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product with `t^n - 1`.
    pub fn mul_binomial(&self, n: usize) -> Self {
        assert!(n >= 1, "binomial exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + n;
        let mut out = vec![BigInt::zero(); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + n] += c;
            out[k] -= c;
        }
        Self::new(out)
    }

    /// Exact quotient by `t^n - 1`.
    pub fn div_binomial(&self, n: usize) -> Result<Self> {
        assert!(n >= 1, "binomial exponent must be positive");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let len = self.coeffs.len();
        if len <= n {
            return Err(Error::InexactDivision);
        }
        // f_k = q_{k-n} - q_k, solved from the top down.
        let mut q = vec![BigInt::zero(); len - n];
        for k in (n..len).rev() {
            let upper = if k < q.len() {
                q[k].clone()
            } else {
                BigInt::zero()
            };
            q[k - n] = &self.coeffs[k] + upper;
        }
        for k in 0..n {
            let qk = q.get(k).cloned().unwrap_or_default();
            if self.coeffs[k] != -qk {
                return Err(Error::InexactDivision);
            }
        }
        Ok(Self::new(q))
    }

    /// Exact quotient by `t - 1`.
    pub fn div_t_minus_one(&self) -> Result<Self> {
        self.div_binomial(1)
    }
}

impl fmt::Display for IntPoly {
    /// Ascending order, `t^k` for powers, e.g. `3t+4t^2+3t^3` or `-t-t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = c.abs();
            let mag = if k > 0 && abs.is_one() {
                String::new()
            } else {
                abs.to_string()
            };
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            write!(f, "{sign}{mag}{var}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        poly_mul(self, rhs)
    }
}

/// Schoolbook product.
pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    IntPoly::new(out)
}

/// Quotient `num / den`, failing unless the division is exact over the integers.
pub fn poly_exact_div(num: &IntPoly, den: &IntPoly) -> Result<IntPoly> {
    let dd = den
        .degree()
        .ok_or_else(|| Error::PreconditionViolated("division by the zero polynomial".into()))?;
    let Some(nd) = num.degree() else {
        return Ok(IntPoly::zero());
    };
    if nd < dd {
        return Err(Error::InexactDivision);
    }
    let lead = &den.coeffs[dd];
    let mut rem = num.coeffs.clone();
    let mut q = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let top = &rem[k + dd];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        for (j, dc) in den.coeffs.iter().enumerate() {
            rem[k + j] -= &c * dc;
        }
        q[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(IntPoly::new(q))
}

/// True iff the coefficient of `t^k` equals that of `t^(deg-k)` for all `k`.
pub fn is_symmetric(p: &IntPoly, deg: usize) -> bool {
    match p.degree() {
        None => true,
        Some(pd) if pd > deg => false,
        Some(_) => (0..=deg / 2).all(|k| p.coeff(k) == p.coeff(deg - k)),
    }
}

/// Power series known exactly below `order`; higher coefficients are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    /// The order is the length of `coeffs`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        TruncSeries {
            coeffs: (0..order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::TruncationExceeded {
            order: self.order(),
            requested: k,
        })
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::TruncationExceeded {
                order: self.order(),
                requested: order,
            });
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Difference, known up to the smaller of the two orders.
    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }

    /// In-place product with `1 - t^n`.
    pub fn mul_one_minus(&mut self, n: usize) {
        assert!(n >= 1, "exponent must be positive");
        for k in (n..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            hi[0] -= &lo[k - n];
        }
    }

    /// In-place product with `1 / (1 - t^n)`.
    pub fn div_one_minus(&mut self, n: usize) {
        assert!(n >= 1, "exponent must be positive");
        for k in n..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            hi[0] += &lo[k - n];
        }
    }

    /// Polynomial of the known coefficients.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }
}

/// Expansion of `num / ∏(1 - t^n_i)` below `order`.
pub fn series_from_rational(num: &IntPoly, den_exponents: &[usize], order: usize) -> TruncSeries {
    let mut s = TruncSeries::from_poly(num, order);
    for &n in den_exponents {
        s.div_one_minus(n);
    }
    s
}

/// Expansion of `∏(1 - t^a_i) / ∏(1 - t^b_j)` below `order`.
pub fn series_from_exponents(
    num_exponents: &[usize],
    den_exponents: &[usize],
    order: usize,
) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    if order == 0 {
        return s;
    }
    s.coeffs[0] = BigInt::one();
    for &a in num_exponents {
        s.mul_one_minus(a);
    }
    for &b in den_exponents {
        s.div_one_minus(b);
    }
    s
}

/// Keeps the coefficients whose exponent is divisible by `d`: the average of `f(ξt)` over `ξ^d = 1`.
pub fn root_of_unity_filter(f: &TruncSeries, d: usize) -> TruncSeries {
    assert!(d >= 1, "filter modulus must be positive");
    TruncSeries {
        coeffs: f
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k % d == 0 {
                    c.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect(),
    }
}
