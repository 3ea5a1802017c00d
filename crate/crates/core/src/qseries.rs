//! Exact truncated power series in one variable `q`.
//!
//! Every generating function in this crate is a [`TruncatedSeries`]: a dense
//! vector of arbitrary-precision integer coefficients `c_0..=c_order`. There is
//! no floating point anywhere. Arithmetic between series of different orders
//! truncates to the smaller order.
//!
//! Besides the ring operations the module provides the constructors the
//! identities need: q-Pochhammer products ([`poch`], [`poch_step`]), Gaussian
//! binomial coefficients ([`gauss_binom`]) and bilateral theta sums
//! ([`theta_sum`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {0} is not a unit; only series with constant term +1 or -1 are invertible")]
    NonUnitConstant(BigInt),
    #[error("theta sum exponent is not an integer at n = {0}")]
    NonIntegralExponent(i64),
    #[error("theta sum exponent is negative at n = {0}")]
    NegativeExponent(i64),
    #[error("theta sum needs a positive quadratic coefficient, got 2A = {0}")]
    NonPositiveQuadratic(i64),
}

/// Power series `c_0 + c_1 q + ... + c_order q^order`, known exactly up to
/// `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

/// Sign of the base in `(±q^start; q^step)_count`.
///
/// `Pos` gives factors `1 - q^e`, `Neg` gives factors `1 + q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

/// Number of factors in a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl From<usize> for Count {
    fn from(n: usize) -> Self {
        Count::Finite(n)
    }
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, zero-padded (or truncated)
    /// to `order`.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut v: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        v.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs: v }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `coeff * q^exp`; vanishes when `exp > order`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`. Panics if `n > order`.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Orders above the current one
    /// are clamped: truncation never invents coefficients.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Re-reads `self` as a polynomial and pads it with zeros to `order`.
    ///
    /// Only meaningful when every coefficient above the current order is
    /// known to vanish, e.g. for [`gauss_binom`] results.
    pub fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        coeffs.truncate(order + 1);
        TruncatedSeries { coeffs }
    }

    /// Cauchy product truncated to `min(self.order, other.order)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse. The constant term must be `+1` or `-1`, which
    /// keeps every coefficient of the inverse integral.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(SeriesError::NonUnitConstant(c0.clone()));
        }
        let negative = c0.is_negative();
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &inv[n - i];
                }
            }
            // a_0 * b_n = -acc, with a_0 = ±1
            inv.push(if negative { acc } else { -acc });
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// In place multiplication by `1 - q^exp` (`Sign::Pos`) or `1 + q^exp`
    /// (`Sign::Neg`).
    pub fn mul_binomial(&mut self, sign: Sign, exp: usize) {
        if exp == 0 {
            match sign {
                Sign::Pos => self.coeffs.iter_mut().for_each(|c| *c = BigInt::zero()),
                Sign::Neg => self.coeffs.iter_mut().for_each(|c| *c *= 2),
            }
            return;
        }
        let order = self.order();
        if exp > order {
            return;
        }
        for n in (exp..=order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Pos => hi[0] -= &lo[n - exp],
                Sign::Neg => hi[0] += &lo[n - exp],
            }
        }
    }

    /// In place division by `1 - q^exp` (`Sign::Pos`) or `1 + q^exp`
    /// (`Sign::Neg`). `exp` must be positive.
    pub fn div_binomial(&mut self, sign: Sign, exp: usize) {
        assert!(exp > 0, "division by 1 ± q^0 is not a unit division");
        let order = self.order();
        for n in exp..=order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Pos => hi[0] += &lo[n - exp],
                Sign::Neg => hi[0] -= &lo[n - exp],
            }
        }
    }

    /// Multiplies by `q^exp`, discarding what falls past the order.
    pub fn shift(&self, exp: usize) -> Self {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        if exp <= order {
            out[exp..].clone_from_slice(&self.coeffs[..=order - exp]);
        }
        TruncatedSeries { coeffs: out }
    }

    /// First exponent (up to the common order) where the coefficients
    /// differ, together with both coefficients.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, BigInt, BigInt)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(n, (a, b))| (n, a.clone(), b.clone()))
    }

    /// True when both series agree on their common prefix.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(order {}, {})", self.order(), self)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// `(±q^start; q)_count`, i.e. [`poch_step`] with step 1.
pub fn poch(sign: Sign, start: usize, count: impl Into<Count>, order: usize) -> TruncatedSeries {
    poch_step(sign, start, 1, count, order)
}

/// `Π_{i < count} (1 ∓ q^{start + i·step})` truncated to `order`.
///
/// An infinite product stops contributing once the exponent passes `order`.
pub fn poch_step(
    sign: Sign,
    start: usize,
    step: usize,
    count: impl Into<Count>,
    order: usize,
) -> TruncatedSeries {
    assert!(start > 0 && step > 0, "q-Pochhammer start and step must be positive");
    let mut s = TruncatedSeries::one(order);
    let limit = match count.into() {
        Count::Finite(n) => n,
        Count::Infinite => usize::MAX,
    };
    let mut exp = start;
    let mut i = 0;
    while i < limit && exp <= order {
        s.mul_binomial(sign, exp);
        exp += step;
        i += 1;
    }
    s
}

/// `1 / (±q^start; q^step)_count`, computed by repeated binomial division.
pub fn inv_poch_step(
    sign: Sign,
    start: usize,
    step: usize,
    count: impl Into<Count>,
    order: usize,
) -> TruncatedSeries {
    assert!(start > 0 && step > 0, "q-Pochhammer start and step must be positive");
    let mut s = TruncatedSeries::one(order);
    let limit = match count.into() {
        Count::Finite(n) => n,
        Count::Infinite => usize::MAX,
    };
    let mut exp = start;
    let mut i = 0;
    while i < limit && exp <= order {
        s.div_binomial(sign, exp);
        exp += step;
        i += 1;
    }
    s
}

/// Gaussian binomial coefficient `[m choose r]_q` as an exact polynomial of
/// degree `r(m - r)`, built with the q-Pascal recurrence
/// `[m, r] = [m-1, r-1] + q^r [m-1, r]`. Returns the zero polynomial when
/// `r > m`.
pub fn gauss_binom(m: usize, r: usize) -> TruncatedSeries {
    if r > m {
        return TruncatedSeries::zero(0);
    }
    // row[j] holds [i, j] for the current i, as a plain coefficient vector
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=m {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(i + 1);
        for j in 0..=i.min(r) {
            let deg = j * (i - j);
            let mut poly = vec![BigInt::zero(); deg + 1];
            if j >= 1 {
                for (e, c) in row[j - 1].iter().enumerate() {
                    poly[e] += c;
                }
            }
            if j < i {
                for (e, c) in row[j].iter().enumerate() {
                    poly[e + j] += c;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    let coeffs = row.swap_remove(r);
    let order = coeffs.len() - 1;
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// Bilateral theta sum `Σ_{n ∈ Z} (-1)^n q^{A n² + B n}` truncated to `order`.
///
/// The coefficients are passed doubled (`twice_a = 2A`, `twice_b = 2B`) so
/// half-integral `A`, `B` need no rational arithmetic. Every exponent that
/// lands at or below `order` must be a nonnegative integer.
pub fn theta_sum(twice_a: i64, twice_b: i64, order: usize) -> Result<TruncatedSeries, SeriesError> {
    if twice_a <= 0 {
        return Err(SeriesError::NonPositiveQuadratic(twice_a));
    }
    let twice_order = 2 * order as i64;
    let twice_exp = |n: i64| twice_a * n * n + twice_b * n;
    // past this radius the quadratic dominates and every exponent exceeds order
    let mut radius: i64 = 0;
    while twice_a * radius * radius - twice_b.abs() * radius <= twice_order + 1 {
        radius += 1;
    }
    let mut s = TruncatedSeries::zero(order);
    for n in -radius..=radius {
        let e2 = twice_exp(n);
        if e2 > twice_order + 1 {
            continue;
        }
        if e2 < 0 {
            return Err(SeriesError::NegativeExponent(n));
        }
        if e2 % 2 != 0 {
            return Err(SeriesError::NonIntegralExponent(n));
        }
        let e = (e2 / 2) as usize;
        if e <= order {
            if n % 2 == 0 {
                s.coeffs[e] += 1;
            } else {
                s.coeffs[e] -= 1;
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn from_coeffs_pads() {
        assert_eq!(ints(&TruncatedSeries::from_coeffs([1], 3)), vec![1, 0, 0, 0]);
        assert_eq!(ints(&TruncatedSeries::from_coeffs([0, 1], 2)), vec![0, 1, 0]);
        assert_eq!(ints(&TruncatedSeries::from_coeffs([1, -1], 4)), vec![1, -1, 0, 0, 0]);
    }

    #[test]
    fn mul_examples() {
        let a = TruncatedSeries::from_coeffs([1, -1], 3);
        let b = TruncatedSeries::from_coeffs([1, 1, 1, 1], 3);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, 0, 0]);

        let c = TruncatedSeries::from_coeffs([1, 1], 2);
        assert_eq!(ints(&(&c * &c)), vec![1, 2, 1]);

        let d = TruncatedSeries::from_coeffs([1, 1, 2], 2);
        assert_eq!(ints(&(&d * &TruncatedSeries::one(2))), vec![1, 1, 2]);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = TruncatedSeries::from_coeffs([1, 1, 1, 1, 1], 4);
        let b = TruncatedSeries::from_coeffs([1, 1], 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn inverse_examples() {
        let geo = TruncatedSeries::from_coeffs([1, -1], 5).inverse().unwrap();
        assert_eq!(ints(&geo), vec![1; 6]);
        assert_eq!(ints(&TruncatedSeries::one(3).inverse().unwrap()), vec![1, 0, 0, 0]);
        // partitions into parts 1 and 2
        let p = poch(Sign::Pos, 1, 2, 4).inverse().unwrap();
        assert_eq!(ints(&p), vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn inverse_of_negative_unit() {
        let a = TruncatedSeries::from_coeffs([-1, 1], 4);
        let inv = a.inverse().unwrap();
        assert_eq!(ints(&(&a * &inv)), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn inverse_rejects_non_unit() {
        let a = TruncatedSeries::from_coeffs([2, 1], 3);
        assert_eq!(a.inverse(), Err(SeriesError::NonUnitConstant(BigInt::from(2))));
        assert!(TruncatedSeries::zero(3).inverse().is_err());
    }

    #[test]
    fn poch_examples() {
        assert_eq!(ints(&poch(Sign::Pos, 1, 2, 4)), vec![1, -1, -1, 1, 0]);
        // distinct-part partitions 1,1,1,2,2,3
        assert_eq!(ints(&poch(Sign::Neg, 1, Count::Infinite, 5)), vec![1, 1, 1, 2, 2, 3]);
        // parts ≡ ±1 mod 5: 4 = 4 = 1+1+1+1
        let rr = &inv_poch_step(Sign::Pos, 1, 5, Count::Infinite, 4)
            * &inv_poch_step(Sign::Pos, 4, 5, Count::Infinite, 4);
        assert_eq!(ints(&rr)[4], 2);
    }

    #[test]
    fn binomial_division_matches_inverse() {
        let mut s = TruncatedSeries::from_coeffs([1, 3, -2, 5, 7, 1], 5);
        let orig = s.clone();
        s.div_binomial(Sign::Neg, 2);
        let viaf = &orig * &TruncatedSeries::from_coeffs([1, 0, 1], 5).inverse().unwrap();
        assert_eq!(s, viaf);
        s.mul_binomial(Sign::Neg, 2);
        assert_eq!(s, orig);
    }

    #[test]
    fn gauss_binom_examples() {
        assert_eq!(ints(&gauss_binom(4, 2)), vec![1, 1, 2, 1, 1]);
        for n in 0..6 {
            assert_eq!(ints(&gauss_binom(n, 0)), vec![1]);
            assert_eq!(ints(&gauss_binom(n, n)), vec![1]);
        }
        assert!(gauss_binom(2, 3).is_zero());
    }

    #[test]
    fn theta_sum_examples() {
        // k = 2: A = 2, B = 1 against (q;q^4)(q^3;q^4)(q^4;q^4)
        let th = theta_sum(4, 2, 7).unwrap();
        let prod = &(&poch_step(Sign::Pos, 1, 4, Count::Infinite, 7)
            * &poch_step(Sign::Pos, 3, 4, Count::Infinite, 7))
            * &poch_step(Sign::Pos, 4, 4, Count::Infinite, 7);
        assert_eq!(th, prod);

        assert_eq!(ints(&theta_sum(4, 2, 0).unwrap()), vec![1]);

        // k = 2: A = 3/2, B = 1/2 against (q;q^3)(q^2;q^3)(q^3;q^3)
        let th = theta_sum(3, 1, 6).unwrap();
        let prod = poch(Sign::Pos, 1, Count::Infinite, 6);
        assert_eq!(th, prod);
    }

    #[test]
    fn theta_sum_rejects_half_integers() {
        assert_eq!(theta_sum(1, 0, 3), Err(SeriesError::NonIntegralExponent(-1)));
        assert!(matches!(theta_sum(2, -6, 5), Err(SeriesError::NegativeExponent(_))));
        assert!(matches!(theta_sum(0, 1, 5), Err(SeriesError::NonPositiveQuadratic(0))));
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_coeffs([1, -1, 0, 2], 3);
        assert_eq!(s.to_string(), "1 - q + 2q^3 + O(q^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(q^2)");
    }
}
