//! Property checks shared by the proptest suite and the acceptance runner.

#![allow(dead_code)]

use alhc::qseries::{gauss_binom, poch, Sign, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// A unit series: constant term `±1`, small random tail.
pub fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (any::<bool>(), prop::collection::vec(-20i64..=20, 0..=30)).prop_map(|(neg, tail)| {
        let order = tail.len();
        let c0 = if neg { -1 } else { 1 };
        TruncatedSeries::from_coeffs(std::iter::once(c0).chain(tail), order)
    })
}

pub fn any_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..=50, 1..=25).prop_map(|c| {
        let order = c.len() - 1;
        TruncatedSeries::from_coeffs(c, order)
    })
}

pub fn check_inverse(s: &TruncatedSeries) -> Result<(), TestCaseError> {
    let inv = s.inverse().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(s * &inv, TruncatedSeries::one(s.order()));
    prop_assert_eq!(&inv * s, TruncatedSeries::one(s.order()));
    prop_assert_eq!(inv.inverse().unwrap(), s.clone());
    Ok(())
}

pub fn check_ring_laws(a: &TruncatedSeries, b: &TruncatedSeries, c: &TruncatedSeries) -> Result<(), TestCaseError> {
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    let order = a.order().min(b.order());
    prop_assert_eq!(&(a - b) + b, a.truncate(order));
    Ok(())
}

/// Dividing by `1 ± q^e` in place agrees with multiplying by the inverse.
pub fn check_binomial_division(s: &TruncatedSeries, e: usize, neg: bool) -> Result<(), TestCaseError> {
    let sign = if neg { Sign::Neg } else { Sign::Pos };
    let mut factor = TruncatedSeries::one(s.order());
    factor.mul_binomial(sign, e);
    let mut divided = s.clone();
    divided.div_binomial(sign, e);
    prop_assert_eq!(&divided, &(s * &factor.inverse().unwrap()));
    let mut back = divided;
    back.mul_binomial(sign, e);
    prop_assert_eq!(&back, s);
    Ok(())
}

/// `[m, r] (q)_r (q)_{m-r} = (q)_m`, symmetry, and `[m, r](1) = C(m, r)`.
pub fn check_gauss_product(m: usize, r: usize) -> Result<(), TestCaseError> {
    let deg = m * (m + 1) / 2;
    let g = gauss_binom(m, r);
    prop_assert_eq!(g.order(), r * (m - r));
    let lhs = &(&g.padded(deg) * &poch(Sign::Pos, 1, r, deg)) * &poch(Sign::Pos, 1, m - r, deg);
    prop_assert_eq!(lhs, poch(Sign::Pos, 1, m, deg));
    prop_assert_eq!(&g, &gauss_binom(m, m - r));
    let at_one: BigInt = g.coeffs().iter().sum();
    prop_assert_eq!(at_one, binomial(m, r));
    Ok(())
}

pub fn binomial(m: usize, r: usize) -> BigInt {
    (0..r).fold(BigInt::from(1), |acc, i| acc * (m - i) / (i + 1))
}

pub fn check_nonnegative(s: &TruncatedSeries, what: &str) -> Result<(), TestCaseError> {
    if let Some((n, c)) = s.coeffs().iter().enumerate().find(|(_, c)| **c < BigInt::from(0)) {
        return Err(TestCaseError::fail(format!("{what}: coefficient of q^{n} is {c}")));
    }
    Ok(())
}
