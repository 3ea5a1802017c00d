//! Both sides of every identity checked by the crate, and a registry that
//! compares them coefficient by coefficient.
//!
//! Multi-sums run over `N_1 ≥ N_2 ≥ ... ≥ N_{k-1} ≥ 0`. The exponent of each
//! summand grows with every `N_i`, so the search stops at the first `N_i`
//! whose partial exponent passes the truncation order. Each term is a
//! monomial times finite q-Pochhammer factors, the denominators applied by
//! in-place division by `1 - q^e` or `1 + q^e`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::bijection::convolution_check;
use crate::enumerate::{family_gf, Family};
use crate::qseries::{inv_poch_step, poch, poch_step, theta_sum, Count, SeriesError, Sign, TruncatedSeries};
use crate::triangle::{check_si2, si2_sides};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    Unknown(String),
    #[error("identity `{id}` needs parameter `{param}`")]
    MissingParameter { id: &'static str, param: &'static str },
    #[error("identity `{id}`: {reason}")]
    BadParameter { id: &'static str, reason: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// First coefficient where the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

impl Mismatch {
    fn from_series(m: Option<(usize, BigInt, BigInt)>) -> Option<Mismatch> {
        m.map(|(exponent, l, r)| Mismatch { exponent, lhs: l.to_string(), rhs: r.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: BTreeMap<String, usize>,
    pub order: usize,
    pub passed: bool,
    pub first_mismatch: Option<Mismatch>,
    pub wall_time_ms: u64,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.id)?;
        for (name, value) in &self.params {
            write!(f, " {name}={value}")?;
        }
        write!(f, " order={}", self.order)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " first mismatch at q^{}: lhs {} rhs {}", m.exponent, m.lhs, m.rhs)?;
        }
        Ok(())
    }
}

/// Parameters an identity may read; unused ones are ignored.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<usize>,
}

impl Params {
    pub fn k(k: usize) -> Self {
        Params { k: Some(k), ..Default::default() }
    }

    pub fn ka(k: usize, a: usize) -> Self {
        Params { k: Some(k), a: Some(a), ..Default::default() }
    }

    pub fn mp(m: usize, p: usize) -> Self {
        Params { m: Some(m), p: Some(p), ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiVariant {
    /// `Σ (-1)^n q^{k n² + (k-1) n}` against modulus `2k`.
    Even,
    /// `Σ (-1)^n q^{n((2k-1)n + 2k-3)/2}` against modulus `2k - 1`.
    Odd,
}

/// Every registered identity id with a one-line description.
pub const IDENTITIES: &[(&str, &str)] = &[
    ("anti_k", "ALHCs of length <= k against prod_{i<=k} (1+q^i)/(1-q^{i+1})"),
    ("anti", "all ALHCs against prod_{i>=1} (1+q^i)/(1-q^{i+1})"),
    ("mthm1", "ALHCs with first part <= k-2 against the overpartition product, k >= 3"),
    ("main", "|F_{k-2}(n)| = |H_k(n)| by enumeration of both sides, k >= 3"),
    ("generr", "Andrews' multi-sum against the modulus 2k+1 product, 1 <= a <= k"),
    ("rr1", "first Rogers-Ramanujan identity"),
    ("rr2", "second Rogers-Ramanujan identity"),
    ("even3", "overpartition multi-sum against the modulus 2k product"),
    ("odd2", "overpartition multi-sum with (-q;q)_{N_{k-1}} against the modulus 2k-1 product"),
    ("jacobi_even", "triple product for modulus 2k, bilateral and folded sums"),
    ("jacobi_odd", "triple product for modulus 2k-1, bilateral and folded sums"),
    ("even1", "ALHCs with first part <= 2k-2 against the even multi-sum"),
    ("odd1", "ALHCs with first part <= 2k-3 against the odd multi-sum"),
    ("DE", "Durfee-rectangle partitions R_k against the a = 1 multi-sum"),
    ("DE2", "Durfee-rectangle partitions R_k against the modulus 2k+1 product"),
    ("F", "ALHCs with first part <= 2k-1 against (-q;q)_inf times the R_k product"),
    ("si2", "finite distinct-parts identity in M and P"),
    ("even3_sum", "even multi-sum against (-q;q)_inf/(q;q)_inf times the folded theta sum"),
    ("odd2_sum", "odd multi-sum against (-q;q)_inf/(q;q)_inf times the folded theta sum"),
    ("conv", "|F_{2k-1}(n)| = sum_m |D(m)| |Q_{2k-2}(n-m)| by enumeration"),
];

/// Sums `term(N, order - e)` shifted by `q^e` over all tuples
/// `N_1 ≥ ... ≥ N_levels ≥ 0`, where `e = Σ level_exp(i, N_i)` and each
/// `level_exp(i, ·)` is non-decreasing.
fn multisum(
    levels: usize,
    order: usize,
    level_exp: &impl Fn(usize, usize) -> usize,
    term: &impl Fn(&[usize], usize) -> TruncatedSeries,
) -> TruncatedSeries {
    fn go(
        ns: &mut Vec<usize>,
        levels: usize,
        partial: usize,
        order: usize,
        level_exp: &impl Fn(usize, usize) -> usize,
        term: &impl Fn(&[usize], usize) -> TruncatedSeries,
        acc: &mut TruncatedSeries,
    ) {
        let level = ns.len() + 1;
        if level > levels {
            let t = term(ns, order - partial);
            *acc = &*acc + &t.padded(order).shift(partial);
            return;
        }
        let cap = ns.last().copied().unwrap_or(usize::MAX);
        let mut n = 0;
        while n <= cap {
            let e = partial + level_exp(level, n);
            if e > order {
                break;
            }
            ns.push(n);
            go(ns, levels, e, order, level_exp, term, acc);
            ns.pop();
            n += 1;
        }
    }
    let mut acc = TruncatedSeries::zero(order);
    go(&mut Vec::with_capacity(levels), levels, 0, order, level_exp, term, &mut acc);
    acc
}

/// `(-q;q)_{N_1} / Π (q)_{N_i - N_{i+1}}`, optionally over `(-q;q)_{N_{k-1}}`.
fn overpartition_term(ns: &[usize], order: usize, odd: bool) -> TruncatedSeries {
    let mut t = poch(Sign::Neg, 1, ns[0], order);
    divide_by_gaps(&mut t, ns);
    if odd {
        for e in 1..=(*ns.last().unwrap()).min(order) {
            t.div_binomial(Sign::Neg, e);
        }
    }
    t
}

fn divide_by_gaps(t: &mut TruncatedSeries, ns: &[usize]) {
    let order = t.order();
    for (i, &n) in ns.iter().enumerate() {
        let gap = n - ns.get(i + 1).copied().unwrap_or(0);
        for e in 1..=gap.min(order) {
            t.div_binomial(Sign::Pos, e);
        }
    }
}

fn overpartition_exp(level: usize, n: usize) -> usize {
    if level == 1 {
        n * (n + 1) / 2
    } else {
        n * n + n
    }
}

fn require_k(id: &'static str, k: usize, min: usize) -> Result<(), IdentityError> {
    if k < min {
        return Err(IdentityError::BadParameter { id, reason: format!("k must be at least {min}, got {k}") });
    }
    Ok(())
}

/// Left side of the even overpartition identity:
/// `Σ q^{N_1(N_1+1)/2 + N_2² + ... + N_{k-1}² + N_2 + ... + N_{k-1}} (-q;q)_{N_1} / Π (q)_{n_i}`.
pub fn lhs_even3(k: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    require_k("even3", k, 2)?;
    Ok(multisum(k - 1, order, &overpartition_exp, &|ns, o| overpartition_term(ns, o, false)))
}

/// `(-q;q)_∞ (q, q^{2k-1}, q^{2k}; q^{2k})_∞ / (q;q)_∞`.
pub fn rhs_even3(k: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    require_k("even3", k, 2)?;
    Ok(overpartition_product(2 * k, order))
}

/// Left side of the odd overpartition identity: the even summand divided
/// by `(-q;q)_{N_{k-1}}`.
pub fn lhs_odd2(k: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    require_k("odd2", k, 2)?;
    Ok(multisum(k - 1, order, &overpartition_exp, &|ns, o| overpartition_term(ns, o, true)))
}

/// `(-q;q)_∞ (q, q^{2k-2}, q^{2k-1}; q^{2k-1})_∞ / (q;q)_∞`.
pub fn rhs_odd2(k: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    require_k("odd2", k, 2)?;
    Ok(overpartition_product(2 * k - 1, order))
}

/// `(q, q^{m-1}, q^m; q^m)_∞`.
fn triple_product(modulus: usize, order: usize) -> TruncatedSeries {
    let mut s = poch_step(Sign::Pos, 1, modulus, Count::Infinite, order);
    s = &s * &poch_step(Sign::Pos, modulus - 1, modulus, Count::Infinite, order);
    &s * &poch_step(Sign::Pos, modulus, modulus, Count::Infinite, order)
}

/// Multiplies by `(-q;q)_∞ / (q;q)_∞` in place.
fn times_overpartitions(s: &mut TruncatedSeries) {
    for e in 1..=s.order() {
        s.mul_binomial(Sign::Neg, e);
        s.div_binomial(Sign::Pos, e);
    }
}

/// Generating function of overpartitions whose non-overlined parts avoid
/// `0, ±1 mod modulus`.
fn overpartition_product(modulus: usize, order: usize) -> TruncatedSeries {
    let mut s = triple_product(modulus, order);
    times_overpartitions(&mut s);
    s
}

/// Andrews' multi-sum
/// `Σ q^{N_1² + ... + N_{k-1}² + N_a + ... + N_{k-1}} / Π (q)_{n_i}`.
pub fn lhs_generr(k: usize, a: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    check_generr("generr", k, a)?;
    let level_exp = |level: usize, n: usize| n * n + if level >= a { n } else { 0 };
    Ok(multisum(k - 1, order, &level_exp, &|ns, o| {
        let mut t = TruncatedSeries::one(o);
        divide_by_gaps(&mut t, ns);
        t
    }))
}

/// `(q^a, q^{2k+1-a}, q^{2k+1}; q^{2k+1})_∞ / (q;q)_∞`.
pub fn rhs_generr(k: usize, a: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    check_generr("generr", k, a)?;
    let m = 2 * k + 1;
    let mut s = poch_step(Sign::Pos, a, m, Count::Infinite, order);
    s = &s * &poch_step(Sign::Pos, m - a, m, Count::Infinite, order);
    s = &s * &poch_step(Sign::Pos, m, m, Count::Infinite, order);
    for e in 1..=order {
        s.div_binomial(Sign::Pos, e);
    }
    Ok(s)
}

fn check_generr(id: &'static str, k: usize, a: usize) -> Result<(), IdentityError> {
    require_k(id, k, 2)?;
    if a < 1 || a > k {
        return Err(IdentityError::BadParameter { id, reason: format!("a must lie in 1..={k}, got {a}") });
    }
    Ok(())
}

/// `Σ_{n≥0} q^{n² + shift·n} / (q)_n`, written out directly.
fn rr_sum(shift: usize, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    let mut n = 0;
    while n * n + shift * n <= order {
        let e = n * n + shift * n;
        let mut t = TruncatedSeries::one(order - e);
        for i in 1..=n.min(order - e) {
            t.div_binomial(Sign::Pos, i);
        }
        acc = &acc + &t.padded(order).shift(e);
        n += 1;
    }
    acc
}

/// `1 / ((q^r; q^5)_∞ (q^{5-r}; q^5)_∞)`.
fn rr_product(r: usize, order: usize) -> TruncatedSeries {
    &inv_poch_step(Sign::Pos, r, 5, Count::Infinite, order) * &inv_poch_step(Sign::Pos, 5 - r, 5, Count::Infinite, order)
}

pub fn lhs_rr1(order: usize) -> TruncatedSeries {
    rr_sum(0, order)
}

pub fn rhs_rr1(order: usize) -> TruncatedSeries {
    rr_product(1, order)
}

pub fn lhs_rr2(order: usize) -> TruncatedSeries {
    rr_sum(1, order)
}

pub fn rhs_rr2(order: usize) -> TruncatedSeries {
    rr_product(2, order)
}

/// Doubled coefficients `(2A, 2B)` of the theta exponent `A n² + B n`.
fn theta_params(variant: JacobiVariant, k: usize) -> (i64, i64) {
    let k = k as i64;
    match variant {
        JacobiVariant::Even => (2 * k, 2 * k - 2),
        JacobiVariant::Odd => (2 * k - 1, 2 * k - 3),
    }
}

fn theta_modulus(variant: JacobiVariant, k: usize) -> usize {
    match variant {
        JacobiVariant::Even => 2 * k,
        JacobiVariant::Odd => 2 * k - 1,
    }
}

/// `Σ_{n≥0} (-1)^n (1 - q^{2n+1}) q^{A n² + B n}`.
pub fn folded_theta(variant: JacobiVariant, k: usize, order: usize) -> Result<TruncatedSeries, IdentityError> {
    require_k("jacobi", k, 2)?;
    let (a2, b2) = theta_params(variant, k);
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let mut n: i64 = 0;
    loop {
        let twice = a2 * n * n + b2 * n;
        if twice % 2 != 0 {
            return Err(SeriesError::NonIntegralExponent(n).into());
        }
        let e = (twice / 2) as usize;
        if e > order {
            break;
        }
        let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
        coeffs[e] += sign;
        let tail = e + 2 * n as usize + 1;
        if tail <= order {
            coeffs[tail] -= sign;
        }
        n += 1;
    }
    Ok(TruncatedSeries::from_coeffs(coeffs, order))
}

/// Compares the bilateral theta sum and its folded one-sided form with the
/// triple product of matching modulus.
pub fn jacobi_check(variant: JacobiVariant, k: usize, order: usize) -> Result<IdentityReport, IdentityError> {
    require_k("jacobi", k, 2)?;
    let start = Instant::now();
    let (a2, b2) = theta_params(variant, k);
    let bilateral = theta_sum(a2, b2, order)?;
    let folded = folded_theta(variant, k, order)?;
    let product = triple_product(theta_modulus(variant, k), order);
    let mismatch = bilateral.first_mismatch(&product).or_else(|| folded.first_mismatch(&product));
    let id = match variant {
        JacobiVariant::Even => "jacobi_even",
        JacobiVariant::Odd => "jacobi_odd",
    };
    Ok(report(id, params_map(&[("k", k)]), order, Mismatch::from_series(mismatch), start))
}

fn params_map(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|(n, v)| (n.to_string(), *v)).collect()
}

fn report(
    id: &str,
    params: BTreeMap<String, usize>,
    order: usize,
    first_mismatch: Option<Mismatch>,
    start: Instant,
) -> IdentityReport {
    IdentityReport {
        id: id.to_string(),
        params,
        order,
        passed: first_mismatch.is_none(),
        first_mismatch,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// `Π_{i=1}^{len} (1 + q^i) / (1 - q^{i+1})`, with `len = None` for the
/// infinite product.
fn anti_product(len: Option<usize>, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let last = len.unwrap_or(order).min(order);
    for i in 1..=last {
        s.mul_binomial(Sign::Neg, i);
        s.div_binomial(Sign::Pos, i + 1);
    }
    s
}

/// The two series compared by an identity, with the parameters it read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub id: &'static str,
    pub params: BTreeMap<String, usize>,
    pub order: usize,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

fn lookup(id: &str) -> Result<&'static str, IdentityError> {
    IDENTITIES
        .iter()
        .find(|(name, _)| *name == id)
        .map(|&(name, _)| name)
        .ok_or_else(|| IdentityError::Unknown(id.to_string()))
}

/// Computes both sides of identity `id` to `order`. For `jacobi_*` the left
/// side is the folded theta sum; `conv` compares counts, not series.
pub fn sides(id: &str, params: Params, order: usize) -> Result<Sides, IdentityError> {
    let id = lookup(id)?;
    let need_k = |min: usize| -> Result<usize, IdentityError> {
        let k = params.k.ok_or(IdentityError::MissingParameter { id, param: "k" })?;
        require_k(id, k, min)?;
        Ok(k)
    };
    let enumerated = |family: Family| family_gf(family, order);
    let with_k = |k: usize, lhs, rhs| (params_map(&[("k", k)]), order, lhs, rhs);
    let (params, order, lhs, rhs) = match id {
        "anti_k" => {
            let k = need_k(0)?;
            with_k(k, enumerated(Family::AK { len: k }), anti_product(Some(k), order))
        }
        "anti" => (BTreeMap::new(), order, enumerated(Family::A), anti_product(None, order)),
        "mthm1" => {
            let k = need_k(3)?;
            with_k(k, enumerated(Family::F { bound: k - 2 }), overpartition_product(k, order))
        }
        "main" => {
            let k = need_k(3)?;
            with_k(k, enumerated(Family::F { bound: k - 2 }), enumerated(Family::H { modulus: k }))
        }
        "generr" => {
            let k = need_k(2)?;
            let a = params.a.ok_or(IdentityError::MissingParameter { id, param: "a" })?;
            let lhs = lhs_generr(k, a, order)?;
            let rhs = rhs_generr(k, a, order)?;
            (params_map(&[("a", a), ("k", k)]), order, lhs, rhs)
        }
        "rr1" => (BTreeMap::new(), order, lhs_rr1(order), rhs_rr1(order)),
        "rr2" => (BTreeMap::new(), order, lhs_rr2(order), rhs_rr2(order)),
        "even3" => {
            let k = need_k(2)?;
            with_k(k, lhs_even3(k, order)?, rhs_even3(k, order)?)
        }
        "odd2" => {
            let k = need_k(2)?;
            with_k(k, lhs_odd2(k, order)?, rhs_odd2(k, order)?)
        }
        "jacobi_even" | "jacobi_odd" => {
            let variant = if id == "jacobi_even" { JacobiVariant::Even } else { JacobiVariant::Odd };
            let k = need_k(2)?;
            with_k(k, folded_theta(variant, k, order)?, triple_product(theta_modulus(variant, k), order))
        }
        "even1" => {
            let k = need_k(2)?;
            with_k(k, enumerated(Family::F { bound: 2 * k - 2 }), lhs_even3(k, order)?)
        }
        "odd1" => {
            let k = need_k(2)?;
            with_k(k, enumerated(Family::F { bound: 2 * k - 3 }), lhs_odd2(k, order)?)
        }
        "DE" => {
            let k = need_k(2)?;
            with_k(k, enumerated(Family::R { k }), lhs_generr(k, 1, order)?)
        }
        "DE2" => {
            let k = need_k(2)?;
            with_k(k, enumerated(Family::R { k }), rhs_generr(k, 1, order)?)
        }
        "F" => {
            let k = need_k(2)?;
            let mut rhs = rhs_generr(k, 1, order)?;
            for e in 1..=order {
                rhs.mul_binomial(Sign::Neg, e);
            }
            with_k(k, enumerated(Family::F { bound: 2 * k - 1 }), rhs)
        }
        "si2" => {
            let m = params.m.ok_or(IdentityError::MissingParameter { id, param: "m" })?;
            let p = params.p.ok_or(IdentityError::MissingParameter { id, param: "p" })?;
            let degree = m * p + m * (m + 1) / 2;
            let (lhs, rhs) = si2_sides(m, p, degree);
            (params_map(&[("m", m), ("p", p)]), degree, lhs, rhs)
        }
        "even3_sum" | "odd2_sum" => {
            let k = need_k(2)?;
            let (lhs, variant) = if id == "even3_sum" {
                (lhs_even3(k, order)?, JacobiVariant::Even)
            } else {
                (lhs_odd2(k, order)?, JacobiVariant::Odd)
            };
            let mut rhs = folded_theta(variant, k, order)?;
            times_overpartitions(&mut rhs);
            with_k(k, lhs, rhs)
        }
        "conv" => {
            return Err(IdentityError::BadParameter { id, reason: "compares counts, not series".to_string() })
        }
        _ => unreachable!("registry and dispatch disagree on `{id}`"),
    };
    Ok(Sides { id, params, order, lhs, rhs })
}

/// Evaluates identity `id` to `order` and compares both sides exactly.
pub fn verify(id: &str, params: Params, order: usize) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let id = lookup(id)?;
    match id {
        "jacobi_even" | "jacobi_odd" => {
            let variant = if id == "jacobi_even" { JacobiVariant::Even } else { JacobiVariant::Odd };
            let k = params.k.ok_or(IdentityError::MissingParameter { id, param: "k" })?;
            jacobi_check(variant, k, order)
        }
        "si2" => {
            let m = params.m.ok_or(IdentityError::MissingParameter { id, param: "m" })?;
            let p = params.p.ok_or(IdentityError::MissingParameter { id, param: "p" })?;
            let degree = m * p + m * (m + 1) / 2;
            let mismatch = check_si2(m, p).err();
            Ok(report(id, params_map(&[("m", m), ("p", p)]), degree, Mismatch::from_series(mismatch), start))
        }
        "conv" => {
            let k = params.k.ok_or(IdentityError::MissingParameter { id, param: "k" })?;
            require_k(id, k, 2)?;
            let r = convolution_check(k, order).map_err(|e| IdentityError::BadParameter { id, reason: e.to_string() })?;
            let mismatch = r.first_failure.map(|(n, l, r)| Mismatch { exponent: n, lhs: l.to_string(), rhs: r.to_string() });
            Ok(report(id, params_map(&[("k", k)]), order, mismatch, start))
        }
        _ => {
            let s = sides(id, params, order)?;
            Ok(report(s.id, s.params, s.order, Mismatch::from_series(s.lhs.first_mismatch(&s.rhs)), start))
        }
    }
}

/// The parameter grid run by `verify-all`: every identity at moderate
/// orders.
pub fn default_grid() -> Vec<(&'static str, Params, usize)> {
    let mut grid = Vec::new();
    for k in 1..=8 {
        grid.push(("anti_k", Params::k(k), 40));
    }
    grid.push(("anti", Params::default(), 30));
    for k in 3..=8 {
        grid.push(("mthm1", Params::k(k), 30));
        grid.push(("main", Params::k(k), 30));
    }
    for k in 2..=4 {
        for a in 1..=k {
            grid.push(("generr", Params::ka(k, a), 80));
        }
    }
    grid.push(("rr1", Params::default(), 100));
    grid.push(("rr2", Params::default(), 100));
    for k in 2..=5 {
        grid.push(("even3", Params::k(k), 60));
        grid.push(("odd2", Params::k(k), 60));
        grid.push(("even3_sum", Params::k(k), 60));
        grid.push(("odd2_sum", Params::k(k), 60));
    }
    for k in 2..=6 {
        grid.push(("jacobi_even", Params::k(k), 200));
        grid.push(("jacobi_odd", Params::k(k), 200));
    }
    for k in 2..=4 {
        grid.push(("even1", Params::k(k), 40));
        grid.push(("odd1", Params::k(k), 40));
    }
    for k in 2..=3 {
        grid.push(("DE", Params::k(k), 30));
        grid.push(("DE2", Params::k(k), 30));
        grid.push(("F", Params::k(k), 40));
        grid.push(("conv", Params::k(k), 40));
    }
    for m in 0..=12 {
        for p in 0..=12 {
            grid.push(("si2", Params::mp(m, p), 0));
        }
    }
    grid
}
