//! A-triangular representation of anti-lecture hall compositions and the
//! decompositions used to derive the multi-sum generating functions for
//! `F_{2k-2}` and `F_{2k-3}`.
//!
//! Column `j` of `T(λ)` has `j` entries. Its diagonal entry is
//! `⌊λ_j / j⌋` and its first `λ_j mod j` entries are one larger, so the
//! column sums to `λ_j`.
//!
//! For a bound `2k - 2` (even) or `2k - 3` (odd) the triangle splits as
//!
//! ```text
//! T(λ) = R(N_1, 1) + R(N_2, 2) + ... + R(N_{k-1}, 2) + S  (first N_1 columns)
//!        + tail                                          (columns past N_1)
//! ```
//!
//! where `N_i` counts diagonal entries `≥ 2i - 1`, `R(N, c)` is the size `N`
//! triangle with every entry `c`, and the tail is the partition
//! `(λ_{N_1+1}, λ_{N_1+2}, ...)`.

use std::fmt;

use thiserror::Error;

use crate::enumerate::{Composition, Partition};
use crate::qseries::{gauss_binom, poch, Sign, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("{0} is not an anti-lecture hall composition")]
    NotAlhc(Composition),
    #[error("property (1) fails: diagonal increases at column {column}")]
    DiagonalIncreases { column: usize },
    #[error("property (2) fails: column {column} is not of the form t_jj+1, ..., t_jj+1, t_jj, ..., t_jj")]
    BadColumn { column: usize },
    #[error("property (3) fails: equal diagonal at columns {column} and {next}, but row {row} increases")]
    RowIncreases { column: usize, next: usize, row: usize },
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("first part {first} exceeds the bound {bound}")]
    BoundExceeded { first: usize, bound: usize },
    #[error("decomposition sizes are inconsistent: {0}")]
    IncompatibleSizes(String),
    #[error("S array violates its segment properties: {0}")]
    BadS(String),
    #[error("block index {index} out of range 1..={blocks}")]
    BadBlock { index: usize, blocks: usize },
}

/// Upper triangular array `t_{i,j}`, `1 ≤ i ≤ j ≤ size`, stored by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TriangularArray {
    columns: Vec<Vec<usize>>,
}

impl TriangularArray {
    pub fn zeros(size: usize) -> Self {
        TriangularArray { columns: (1..=size).map(|j| vec![0; j]).collect() }
    }

    /// The size `n` triangle with every entry equal to `value`.
    pub fn constant(size: usize, value: usize) -> Self {
        TriangularArray { columns: (1..=size).map(|j| vec![value; j]).collect() }
    }

    /// Builds a triangle from its columns; column `j` must have `j` entries.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self, TriangleError> {
        for (j, col) in columns.iter().enumerate() {
            if col.len() != j + 1 {
                return Err(TriangleError::IncompatibleSizes(format!(
                    "column {} has {} entries",
                    j + 1,
                    col.len()
                )));
            }
        }
        Ok(TriangularArray { columns })
    }

    /// Builds a triangle from its rows; row `i` lists `t_{i,i}..t_{i,size}`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TriangleError> {
        let size = rows.len();
        let mut t = TriangularArray::zeros(size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size - i {
                return Err(TriangleError::IncompatibleSizes(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    size - i
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                t.columns[i + c][i] = v;
            }
        }
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    /// Entry `t_{i,j}` with 1-based indices, `i ≤ j`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.columns[j - 1][i - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.columns[j - 1][i - 1] = value;
    }

    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 1]
    }

    pub fn diagonal(&self) -> Vec<usize> {
        self.columns.iter().map(|c| *c.last().unwrap()).collect()
    }

    /// Row `i` from the diagonal rightwards.
    pub fn row(&self, i: usize) -> Vec<usize> {
        (i..=self.size()).map(|j| self.get(i, j)).collect()
    }

    pub fn weight(&self) -> usize {
        self.columns.iter().flatten().sum()
    }

    /// Entrywise sum with `other` placed at the top-left corner; the result
    /// has the larger size.
    pub fn add_corner(&self, other: &TriangularArray) -> TriangularArray {
        let mut out = if self.size() >= other.size() { self.clone() } else { other.clone() };
        let small = if self.size() >= other.size() { other } else { self };
        for (j, col) in small.columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                out.columns[j][i] += v;
            }
        }
        out
    }

    /// Entrywise difference with `other` at the top-left corner, or `None`
    /// if some entry would go negative or `other` is larger.
    pub fn sub_corner(&self, other: &TriangularArray) -> Option<TriangularArray> {
        if other.size() > self.size() {
            return None;
        }
        let mut out = self.clone();
        for (j, col) in other.columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                out.columns[j][i] = out.columns[j][i].checked_sub(*v)?;
            }
        }
        Some(out)
    }

    /// Top-left sub-triangle of the given size.
    pub fn leading(&self, size: usize) -> TriangularArray {
        TriangularArray { columns: self.columns[..size.min(self.size())].to_vec() }
    }

    /// Checks the three A-triangle properties, naming the first failure.
    pub fn check_a_triangle(&self) -> Result<(), TriangleError> {
        let diag = self.diagonal();
        for j in 1..self.size() {
            if diag[j] > diag[j - 1] {
                return Err(TriangleError::DiagonalIncreases { column: j + 1 });
            }
        }
        for (j, col) in self.columns.iter().enumerate() {
            let d = diag[j];
            let non_increasing = col.windows(2).all(|w| w[0] >= w[1]);
            let two_valued = col.iter().all(|&v| v == d || v == d + 1);
            if !(non_increasing && two_valued) {
                return Err(TriangleError::BadColumn { column: j + 1 });
            }
        }
        for j in 1..self.size() {
            if diag[j - 1] == diag[j] {
                for i in 1..=j {
                    if self.get(i, j) < self.get(i, j + 1) {
                        return Err(TriangleError::RowIncreases { column: j, next: j + 1, row: i });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_a_triangle(&self) -> bool {
        self.check_a_triangle().is_ok()
    }
}

impl fmt::Display for TriangularArray {
    /// Row-aligned text: row `i` is indented by `i - 1` cells.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.columns.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 1..=self.size() {
            let mut line = String::new();
            for j in 1..=self.size() {
                if j > 1 {
                    line.push(' ');
                }
                if j < i {
                    line.push_str(&" ".repeat(width));
                } else {
                    line.push_str(&format!("{:>width$}", self.get(i, j)));
                }
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// `T(λ)` for an anti-lecture hall composition `λ`.
pub fn to_triangle(lambda: &Composition) -> Result<TriangularArray, TriangleError> {
    if !lambda.is_alhc() {
        return Err(TriangleError::NotAlhc(lambda.clone()));
    }
    let columns = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            let j = idx + 1;
            let (l, r) = (p / j, p % j);
            (0..j).map(|i| if i < r { l + 1 } else { l }).collect()
        })
        .collect();
    Ok(TriangularArray { columns })
}

/// Inverse of [`to_triangle`]: `λ_j` is the sum of column `j`.
pub fn from_triangle(t: &TriangularArray) -> Result<Composition, TriangleError> {
    t.check_a_triangle()?;
    Ok(Composition::new(t.columns.iter().map(|c| c.iter().sum()).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// First part bounded by `2k - 2`.
    Even,
    /// First part bounded by `2k - 3`.
    Odd,
}

impl Parity {
    pub fn bound(self, k: usize) -> usize {
        match self {
            Parity::Even => 2 * k - 2,
            Parity::Odd => 2 * k - 3,
        }
    }
}

/// The split of `T(λ)` into `R(N_1,1)`, the `R(N_i,2)`, `S` and the tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parity: Parity,
    /// `N_1 ≥ N_2 ≥ ... ≥ N_{k-1}`.
    pub ns: Vec<usize>,
    /// `m_i`: leading ones on the diagonal of column block `i`
    /// (columns `N_{i+1}+1 ..= N_i`).
    pub ms: Vec<usize>,
    pub r1: TriangularArray,
    /// `R(N_2,2), ..., R(N_{k-1},2)`.
    pub r2s: Vec<TriangularArray>,
    pub s: TriangularArray,
    /// `λ^(2) = (λ_{N_1+1}, ...)`, a partition with parts at most `N_1`.
    pub tail: Partition,
}

impl Decomposition {
    pub fn k(&self) -> usize {
        self.ns.len() + 1
    }

    pub fn weight(&self) -> usize {
        self.r1.weight() + self.r2s.iter().map(TriangularArray::weight).sum::<usize>() + self.s.weight()
            + self.tail.weight()
    }

    /// The one-counts of the diagonal segments of `S`, read from `s_{1,1}`
    /// rightwards (block `k-1` first, block 1 last).
    pub fn segment_ones_left_to_right(&self) -> Vec<usize> {
        self.ms.iter().rev().copied().collect()
    }

    /// The tail drawn as the columns `N_1+1, N_1+2, ...` of a triangle whose
    /// first `N_1` columns are zero.
    pub fn tail_triangle(&self) -> TriangularArray {
        let n1 = self.ns.first().copied().unwrap_or(0);
        let size = n1 + self.tail.len();
        let mut t = TriangularArray::zeros(size);
        for (c, &p) in self.tail.parts().iter().enumerate() {
            for i in 1..=p {
                t.set(i, n1 + c + 1, 1);
            }
        }
        t
    }
}

/// `N_i` = number of diagonal entries `≥ 2i - 1`, for `i = 1..k-1`.
fn count_levels(diag: &[usize], k: usize) -> Vec<usize> {
    (1..k).map(|i| diag.iter().filter(|&&d| d >= 2 * i - 1).count()).collect()
}

/// `N_{i+1}` with the convention `N_k = 0`.
fn next_level(ns: &[usize], i: usize) -> usize {
    ns.get(i).copied().unwrap_or(0)
}

/// Splits `λ` with first part at most `2k-2` (even) or `2k-3` (odd).
pub fn decompose(lambda: &Composition, k: usize, parity: Parity) -> Result<Decomposition, TriangleError> {
    if k < 2 {
        return Err(TriangleError::BadK(k));
    }
    let t = to_triangle(lambda)?;
    let bound = parity.bound(k);
    if lambda.part(1) > bound {
        return Err(TriangleError::BoundExceeded { first: lambda.part(1), bound });
    }
    let ns = count_levels(&t.diagonal(), k);
    let n1 = ns[0];
    let t1 = t.leading(n1);
    let mut s = t1.sub_corner(&TriangularArray::constant(n1, 1)).expect("first N_1 diagonal entries are ≥ 1");
    let r2s: Vec<_> = ns[1..].iter().map(|&n| TriangularArray::constant(n, 2)).collect();
    for r in &r2s {
        s = s.sub_corner(r).expect("R(N_i,2) fits under T");
    }
    let diag_s = s.diagonal();
    let ms = (1..k)
        .map(|i| {
            let (lo, hi) = (next_level(&ns, i), ns[i - 1]);
            diag_s[lo..hi].iter().take_while(|&&d| d == 1).count()
        })
        .collect();
    let tail = Partition::new(lambda.parts()[n1.min(lambda.len())..].to_vec())
        .expect("parts past N_1 form a partition");
    Ok(Decomposition {
        parity,
        r1: TriangularArray::constant(n1, 1),
        r2s,
        s,
        tail,
        ns,
        ms,
    })
}

/// Rebuilds `λ` from a decomposition.
pub fn recompose(d: &Decomposition) -> Result<Composition, TriangleError> {
    let bad = |msg: String| Err(TriangleError::IncompatibleSizes(msg));
    let Some(&n1) = d.ns.first() else {
        return bad("no levels".into());
    };
    if d.ns.windows(2).any(|w| w[0] < w[1]) {
        return bad(format!("levels {:?} are not weakly decreasing", d.ns));
    }
    if d.r1 != TriangularArray::constant(n1, 1) {
        return bad("R(N_1,1) is not the all-ones triangle of size N_1".into());
    }
    if d.r2s.len() != d.ns.len() - 1 {
        return bad(format!("{} R(N_i,2) arrays for {} levels", d.r2s.len(), d.ns.len()));
    }
    for (r, &n) in d.r2s.iter().zip(&d.ns[1..]) {
        if *r != TriangularArray::constant(n, 2) {
            return bad(format!("expected R({n},2)"));
        }
    }
    if d.s.size() != n1 {
        return bad(format!("S has size {} but N_1 = {n1}", d.s.size()));
    }
    if d.tail.largest() > n1 {
        return bad(format!("tail part {} exceeds N_1 = {n1}", d.tail.largest()));
    }
    let mut t1 = d.s.add_corner(&d.r1);
    for r in &d.r2s {
        t1 = t1.add_corner(r);
    }
    let head = from_triangle(&t1)?;
    if head.len() != n1 {
        return bad("S leaves a zero column inside the first N_1 columns".into());
    }
    let mut parts = head.parts().to_vec();
    parts.extend_from_slice(d.tail.parts());
    let lambda = Composition::new(parts);
    if !lambda.is_alhc() {
        return Err(TriangleError::NotAlhc(lambda));
    }
    Ok(lambda)
}

/// Checks that `s` is a valid remainder array for the levels `ns`:
/// diagonal entries 0/1 with each segment of the form `1..1 0..0`, columns
/// two-valued and non-increasing, rows weakly decreasing across equal
/// diagonal entries inside a block, and (odd) the first `N_{k-1}` columns
/// zero.
pub fn check_s(s: &TriangularArray, ns: &[usize], parity: Parity) -> Result<(), TriangleError> {
    let err = |m: String| Err(TriangleError::BadS(m));
    let Some(&n1) = ns.first() else { return err("no levels".into()) };
    if s.size() != n1 {
        return err(format!("size {} differs from N_1 = {n1}", s.size()));
    }
    if ns.windows(2).any(|w| w[0] < w[1]) {
        return err(format!("levels {ns:?} are not weakly decreasing"));
    }
    let diag = s.diagonal();
    if diag.iter().any(|&d| d > 1) {
        return err("diagonal entry above 1".into());
    }
    for i in 1..=ns.len() {
        let (lo, hi) = (next_level(ns, i), ns[i - 1]);
        let seg = &diag[lo..hi];
        if seg.windows(2).any(|w| w[0] < w[1]) {
            return err(format!("segment {i} is not ones followed by zeros"));
        }
        for j in lo + 1..=hi {
            let col = s.column(j);
            let d = diag[j - 1];
            if !(col.windows(2).all(|w| w[0] >= w[1]) && col.iter().all(|&v| v == d || v == d + 1)) {
                return err(format!("column {j} is not two-valued and non-increasing"));
            }
            if j < hi && diag[j - 1] == diag[j] && (1..=j).any(|r| s.get(r, j) < s.get(r, j + 1)) {
                return err(format!("row increases between columns {j} and {}", j + 1));
            }
        }
    }
    if parity == Parity::Odd {
        let last = *ns.last().unwrap();
        if (1..=last).any(|j| s.column(j).iter().any(|&v| v != 0)) {
            return err(format!("odd case needs the first {last} columns to vanish"));
        }
    }
    Ok(())
}

/// A run of triangle columns `first_col, first_col+1, ...`; column `j` holds
/// rows `1..=j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trapezoid {
    pub first_col: usize,
    pub columns: Vec<Vec<usize>>,
}

impl Trapezoid {
    pub fn weight(&self) -> usize {
        self.columns.iter().flatten().sum()
    }

    /// Number of ones per column, read as a partition (the conjugate of the
    /// Ferrers diagram the 0/1 trapezoid draws).
    pub fn column_counts(&self) -> Partition {
        Partition::from_unsorted(self.columns.iter().map(|c| c.iter().sum()).collect())
    }
}

/// The three pieces of column block `i` of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SBlockSplit {
    pub m: usize,
    /// Ones in the first `m` columns.
    pub s1: Trapezoid,
    /// First `m` columns of `S_i - S1`.
    pub s2: Trapezoid,
    /// Remaining columns of `S_i - S1`.
    pub s3: Trapezoid,
    /// `(N_{i+1}+m, ..., N_{i+1}+1)`.
    pub alpha1: Partition,
    /// Parts at most `N_{i+1}`, at most `m` of them.
    pub alpha2: Partition,
    /// Parts at most `N_{i+1}+m`, at most `N_i - N_{i+1} - m` of them.
    pub alpha3: Partition,
}

impl SBlockSplit {
    pub fn reassemble(&self) -> Trapezoid {
        let mut columns: Vec<Vec<usize>> = self.s2.columns.iter().chain(&self.s3.columns).cloned().collect();
        for (col, ones) in columns.iter_mut().zip(&self.s1.columns) {
            for (v, o) in col.iter_mut().zip(ones) {
                *v += o;
            }
        }
        Trapezoid { first_col: self.s1.first_col, columns }
    }

    pub fn weight(&self) -> usize {
        self.s1.weight() + self.s2.weight() + self.s3.weight()
    }
}

/// Columns `N_{i+1}+1 ..= N_i` of `S` (block `i`, 1-based).
pub fn s_block(s: &TriangularArray, ns: &[usize], i: usize) -> Result<Trapezoid, TriangleError> {
    if i == 0 || i > ns.len() {
        return Err(TriangleError::BadBlock { index: i, blocks: ns.len() });
    }
    let (lo, hi) = (next_level(ns, i), ns[i - 1]);
    if hi > s.size() || lo > hi {
        return Err(TriangleError::IncompatibleSizes(format!("block {i} spans columns {}..={hi}", lo + 1)));
    }
    Ok(Trapezoid { first_col: lo + 1, columns: (lo + 1..=hi).map(|j| s.column(j).to_vec()).collect() })
}

/// Splits block `i` of `S` into the ones trapezoid `S1` and the 0/1 pieces
/// `S2` (first `m_i` columns) and `S3` (the rest).
pub fn split_s_block(s: &TriangularArray, ns: &[usize], i: usize) -> Result<SBlockSplit, TriangleError> {
    let block = s_block(s, ns, i)?;
    let lower = block.first_col - 1;
    let m = block.columns.iter().take_while(|c| c.last() == Some(&1)).count();
    if block.columns[m..].iter().any(|c| c.last() != Some(&0)) {
        return Err(TriangleError::BadS(format!("block {i} diagonal is not ones followed by zeros")));
    }
    let s1 = Trapezoid {
        first_col: block.first_col,
        columns: block.columns[..m].iter().map(|c| vec![1; c.len()]).collect(),
    };
    let mut primed = block.columns.clone();
    for col in primed.iter_mut().take(m) {
        for v in col.iter_mut() {
            *v = v.checked_sub(1).ok_or_else(|| TriangleError::BadS(format!("block {i} has a zero above a one")))?;
        }
    }
    if primed.iter().flatten().any(|&v| v > 1) {
        return Err(TriangleError::BadS(format!("block {i} entries exceed their diagonal by more than one")));
    }
    let s3 = Trapezoid { first_col: block.first_col + m, columns: primed.split_off(m) };
    let s2 = Trapezoid { first_col: block.first_col, columns: primed };
    let alpha1 = Partition::from_unsorted((1..=m).rev().map(|c| lower + c).collect());
    Ok(SBlockSplit { m, alpha2: s2.column_counts(), alpha3: s3.column_counts(), s1, s2, s3, alpha1 })
}

/// Closed-form generating function of the valid `S` arrays for levels
/// `ns`:
/// `(q)_{N_1} (-q;q)_{N_1} / ((q)_{N_1-N_2} ... (q)_{N_{k-1}})`, with an
/// extra `1/(-q;q)_{N_{k-1}}` in the odd case.
pub fn gf_s(ns: &[usize], order: usize, parity: Parity) -> TruncatedSeries {
    let n1 = ns.first().copied().unwrap_or(0);
    let mut gf = &poch(Sign::Pos, 1, n1, order) * &poch(Sign::Neg, 1, n1, order);
    for i in 1..=ns.len() {
        let gap = ns[i - 1] - next_level(ns, i);
        for e in 1..=gap.min(order) {
            gf.div_binomial(Sign::Pos, e);
        }
    }
    if parity == Parity::Odd {
        let last = ns.last().copied().unwrap_or(0);
        for e in 1..=last.min(order) {
            gf.div_binomial(Sign::Neg, e);
        }
    }
    gf
}

/// Per-block form of [`gf_s`]: the product over blocks of
/// `[N_i choose N_{i+1}]_q (-q^{N_{i+1}+1}; q)_{N_i - N_{i+1}}`, skipping
/// block `k-1` in the odd case. Every factor is a polynomial.
pub fn gf_s_blockwise(ns: &[usize], order: usize, parity: Parity) -> TruncatedSeries {
    let mut gf = TruncatedSeries::one(order);
    let blocks = match parity {
        Parity::Even => ns.len(),
        Parity::Odd => ns.len().saturating_sub(1),
    };
    for i in 1..=blocks {
        let (hi, lo) = (ns[i - 1], next_level(ns, i));
        let factor = &gauss_binom(hi, lo).padded(order) * &poch(Sign::Neg, lo + 1, hi - lo, order);
        gf = &gf * &factor;
    }
    gf
}

/// Finite identity
/// `Σ_{m=0}^{M} q^{(2P+1+m)m/2} [M choose m]_q = (-q^{P+1}; q)_M`,
/// compared as exact polynomials. Returns the first mismatch
/// `(exponent, lhs, rhs)` on failure.
pub fn check_si2(big_m: usize, p: usize) -> Result<(), (usize, num_bigint::BigInt, num_bigint::BigInt)> {
    let degree = big_m * p + big_m * (big_m + 1) / 2;
    let (lhs, rhs) = si2_sides(big_m, p, degree);
    match lhs.first_mismatch(&rhs) {
        None => Ok(()),
        Some(m) => Err(m),
    }
}

/// Both sides of the distinct-parts finite identity at the given order.
pub fn si2_sides(big_m: usize, p: usize, order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let mut lhs = TruncatedSeries::zero(order);
    for m in 0..=big_m {
        let e = (2 * p + 1 + m) * m / 2;
        lhs = &lhs + &gauss_binom(big_m, m).padded(order).shift(e);
    }
    let rhs = poch(Sign::Neg, p + 1, big_m, order);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &TriangularArray) -> Vec<Vec<usize>> {
        (1..=t.size()).map(|i| t.row(i)).collect()
    }

    fn section3() -> Composition {
        Composition::new(vec![4, 8, 11, 14, 16, 15, 11, 10, 5, 2])
    }

    fn section4() -> Composition {
        Composition::new(vec![5, 10, 14, 17, 18, 20, 18, 15, 12, 3])
    }

    #[test]
    fn to_triangle_worked_example() {
        let t = to_triangle(&section3()).unwrap();
        let expect: Vec<Vec<usize>> = vec![
            vec![4, 4, 4, 4, 4, 3, 2, 2, 1, 1],
            vec![4, 4, 4, 3, 3, 2, 2, 1, 1],
            vec![3, 3, 3, 3, 2, 1, 1, 0],
            vec![3, 3, 2, 2, 1, 1, 0],
            vec![3, 2, 1, 1, 1, 0],
            vec![2, 1, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![1, 0, 0],
            vec![0, 0],
            vec![0],
        ];
        assert_eq!(rows(&t), expect);
        assert_eq!(t.diagonal(), vec![4, 4, 3, 3, 3, 2, 1, 1, 0, 0]);
        assert_eq!(t.weight(), 96);
        assert_eq!(from_triangle(&t).unwrap(), section3());
    }

    #[test]
    fn to_triangle_second_example() {
        let t = to_triangle(&section4()).unwrap();
        assert_eq!(t.diagonal(), vec![5, 5, 4, 4, 3, 3, 2, 1, 1, 0]);
        assert_eq!(t.weight(), 132);
        assert_eq!(t.row(1), vec![5, 5, 5, 5, 4, 4, 3, 2, 2, 1]);
    }

    #[test]
    fn empty_cases() {
        let t = to_triangle(&Composition::empty()).unwrap();
        assert_eq!(t.size(), 0);
        assert_eq!(from_triangle(&t).unwrap(), Composition::empty());
        let d = decompose(&Composition::empty(), 3, Parity::Even).unwrap();
        assert_eq!(d.ns, vec![0, 0]);
        assert_eq!(d.ms, vec![0, 0]);
        assert!(d.tail.is_empty());
        assert_eq!(recompose(&d).unwrap(), Composition::empty());
    }

    #[test]
    fn all_twos_reconstructs() {
        let t = TriangularArray::constant(3, 2);
        assert_eq!(from_triangle(&t).unwrap().parts(), &[2, 4, 6]);
    }

    #[test]
    fn from_triangle_names_failing_property() {
        let t = TriangularArray::from_rows(&[vec![1, 2], vec![2]]).unwrap();
        assert_eq!(from_triangle(&t), Err(TriangleError::DiagonalIncreases { column: 2 }));
        let t = TriangularArray::from_rows(&[vec![1, 3], vec![1]]).unwrap();
        assert_eq!(from_triangle(&t), Err(TriangleError::BadColumn { column: 2 }));
        let t = TriangularArray::from_rows(&[vec![1, 2, 1], vec![1, 1], vec![1]]).unwrap();
        assert_eq!(from_triangle(&t), Err(TriangleError::RowIncreases { column: 1, next: 2, row: 1 }));
    }

    #[test]
    fn to_triangle_rejects_non_alhc() {
        assert!(matches!(to_triangle(&Composition::new(vec![0, 2])), Err(TriangleError::NotAlhc(_))));
    }

    #[test]
    fn decompose_section3_example() {
        let d = decompose(&section3(), 3, Parity::Even).unwrap();
        assert_eq!(d.ns, vec![8, 5]);
        assert_eq!(d.tail.parts(), &[5, 2]);
        assert_eq!(d.ms, vec![1, 2]);
        assert_eq!(d.segment_ones_left_to_right(), vec![2, 1]);
        let s_rows: Vec<Vec<usize>> = vec![
            vec![1, 1, 1, 1, 1, 2, 1, 1],
            vec![1, 1, 1, 0, 2, 1, 1],
            vec![0, 0, 0, 2, 1, 0],
            vec![0, 0, 1, 1, 0],
            vec![0, 1, 0, 0],
            vec![1, 0, 0],
            vec![0, 0],
            vec![0],
        ];
        assert_eq!(rows(&d.s), s_rows);
        assert_eq!(d.weight(), 96);
        check_s(&d.s, &d.ns, Parity::Even).unwrap();
        assert_eq!(recompose(&d).unwrap(), section3());
    }

    #[test]
    fn decompose_checks_bounds() {
        assert_eq!(
            decompose(&section3(), 2, Parity::Even),
            Err(TriangleError::BoundExceeded { first: 4, bound: 2 })
        );
        assert_eq!(
            decompose(&section3(), 3, Parity::Odd),
            Err(TriangleError::BoundExceeded { first: 4, bound: 3 })
        );
        assert_eq!(decompose(&section3(), 1, Parity::Even), Err(TriangleError::BadK(1)));
    }

    #[test]
    fn recompose_rejects_mismatched_sizes() {
        let mut d = decompose(&section3(), 3, Parity::Even).unwrap();
        d.r2s[0] = TriangularArray::constant(4, 2);
        assert!(matches!(recompose(&d), Err(TriangleError::IncompatibleSizes(_))));
        let mut d = decompose(&section3(), 3, Parity::Even).unwrap();
        d.tail = Partition::new(vec![9]).unwrap();
        assert!(matches!(recompose(&d), Err(TriangleError::IncompatibleSizes(_))));
    }

    #[test]
    fn split_section3_block_one() {
        let d = decompose(&section3(), 3, Parity::Even).unwrap();
        let split = split_s_block(&d.s, &d.ns, 1).unwrap();
        assert_eq!(split.m, 1);
        assert_eq!(split.s1.first_col, 6);
        assert_eq!(split.alpha1.parts(), &[6]);
        assert_eq!(split.reassemble(), s_block(&d.s, &d.ns, 1).unwrap());
        let split2 = split_s_block(&d.s, &d.ns, 2).unwrap();
        assert_eq!(split2.m, 2);
        assert_eq!(split2.alpha1.parts(), &[2, 1]);
        assert_eq!(split.weight() + split2.weight(), d.s.weight());
    }

    #[test]
    fn split_zero_block() {
        let s = TriangularArray::zeros(3);
        let split = split_s_block(&s, &[3, 1], 1).unwrap();
        assert_eq!(split.m, 0);
        assert!(split.s1.columns.is_empty() && split.s2.columns.is_empty());
        assert_eq!(split.s3.weight(), 0);
        assert!(split.alpha1.is_empty() && split.alpha2.is_empty() && split.alpha3.is_empty());
        assert!(matches!(split_s_block(&s, &[3, 1], 3), Err(TriangleError::BadBlock { .. })));
    }

    #[test]
    fn gf_s_small_cases() {
        // single block collapses to (-q;q)_{N_1}
        assert_eq!(gf_s(&[3], 10, Parity::Even), poch(Sign::Neg, 1, 3, 10));
        assert_eq!(gf_s(&[2, 2], 10, Parity::Odd), TruncatedSeries::one(10));
        for ns in [vec![3, 1], vec![4, 2, 1], vec![2, 2]] {
            for parity in [Parity::Even, Parity::Odd] {
                assert_eq!(gf_s(&ns, 20, parity), gf_s_blockwise(&ns, 20, parity), "{ns:?} {parity:?}");
            }
        }
    }

    #[test]
    fn si2_examples() {
        assert!(check_si2(0, 5).is_ok());
        let (l, r) = si2_sides(1, 0, 1);
        assert_eq!(l, TruncatedSeries::from_coeffs([1, 1], 1));
        assert_eq!(r, l);
        assert!(check_si2(3, 2).is_ok());
        let (l, _) = si2_sides(3, 2, 12);
        assert_eq!(l.order(), 12);
        assert_eq!(*l.coeff(12), 1.into());
    }

    #[test]
    fn display_is_row_aligned() {
        let t = TriangularArray::from_rows(&[vec![2, 2, 1], vec![2, 1], vec![0]]).unwrap();
        assert_eq!(t.to_string(), "2 2 1\n  2 1\n    0\n");
    }
}
