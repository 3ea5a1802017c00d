//! Exhaustive generation and counting of the combinatorial families.
//!
//! All families are produced by depth-first walks that visit every object of
//! weight at most some bound exactly once. Generators collect the objects of
//! one weight; counters and tallies walk the same trees without storing
//! anything, so the counts are genuine enumeration counts.

mod objects;

pub use objects::{Composition, Overpartition, ParseError, Partition};

use std::fmt;

use thiserror::Error;

use crate::qseries::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("family `{family}` needs parameter `{param}`")]
    MissingParameter { family: &'static str, param: &'static str },
    #[error("family `{family}`: {reason}")]
    BadParameter { family: &'static str, reason: String },
}

/// The families counted by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Anti-lecture hall compositions with `λ_1 ≤ bound` (`F_bound`).
    F { bound: usize },
    /// ALHCs with every floor `⌊λ_i/i⌋` even and `λ_1 ≤ bound` (`Q_bound`).
    Q { bound: usize },
    /// All anti-lecture hall compositions.
    A,
    /// ALHCs of length at most `len` (`A_len`).
    AK { len: usize },
    /// ALHCs with every floor even.
    E,
    /// Overpartitions whose non-overlined parts avoid `0, ±1 mod modulus`.
    H { modulus: usize },
    Overpartitions,
    /// Partitions into distinct parts.
    D,
    /// Partitions with every part greater than one.
    P,
    Partitions,
    /// Partitions with at most `k - 1` successive Durfee rectangles and no
    /// part below the last one.
    R { k: usize },
}

impl Family {
    /// Parses a family name; `k` supplies the bound, length or modulus.
    pub fn from_name(name: &str, k: Option<usize>) -> Result<Family, FamilyError> {
        let need = |family: &'static str, param: &'static str| {
            k.ok_or(FamilyError::MissingParameter { family, param })
        };
        let fam = match name {
            "F" => Family::F { bound: need("F", "k")? },
            "Q" => Family::Q { bound: need("Q", "k")? },
            "A" => Family::A,
            "A_k" | "AK" => Family::AK { len: need("A_k", "k")? },
            "E" => Family::E,
            "H" => Family::H { modulus: need("H", "k")? },
            "O" | "overpartitions" => Family::Overpartitions,
            "D" => Family::D,
            "P" => Family::P,
            "partitions" => Family::Partitions,
            "R" => Family::R { k: need("R", "k")? },
            other => return Err(FamilyError::Unknown(other.to_string())),
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            Family::H { modulus } if modulus < 3 => Err(FamilyError::BadParameter {
                family: "H",
                reason: format!("modulus must be at least 3, got {modulus}"),
            }),
            Family::R { k } if k < 2 => Err(FamilyError::BadParameter {
                family: "R",
                reason: format!("k must be at least 2, got {k}"),
            }),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::F { .. } => "F",
            Family::Q { .. } => "Q",
            Family::A => "A",
            Family::AK { .. } => "A_k",
            Family::E => "E",
            Family::H { .. } => "H",
            Family::Overpartitions => "overpartitions",
            Family::D => "D",
            Family::P => "P",
            Family::Partitions => "partitions",
            Family::R { .. } => "R",
        }
    }

    /// The numeric parameter, if the family has one.
    pub fn param(&self) -> Option<usize> {
        match *self {
            Family::F { bound } | Family::Q { bound } => Some(bound),
            Family::AK { len } => Some(len),
            Family::H { modulus } => Some(modulus),
            Family::R { k } => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(p) => write!(f, "{}({})", self.name(), p),
            None => write!(f, "{}", self.name()),
        }
    }
}

/// Constraints on an anti-lecture hall walk.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct AlhcShape {
    pub max_first: Option<usize>,
    pub max_len: Option<usize>,
    pub even_floors: bool,
}

impl AlhcShape {
    /// Visits every ALHC of weight at most `max_weight`, in lexicographic
    /// order, passing its parts and weight.
    pub fn walk(&self, max_weight: usize, visit: &mut impl FnMut(&[usize], usize)) {
        let mut parts = Vec::new();
        visit(&parts, 0);
        self.extend(&mut parts, 0, max_weight, visit);
    }

    fn extend(
        &self,
        parts: &mut Vec<usize>,
        weight: usize,
        max_weight: usize,
        visit: &mut impl FnMut(&[usize], usize),
    ) {
        let i = parts.len();
        if self.max_len.is_some_and(|len| i >= len) {
            return;
        }
        let room = max_weight - weight;
        // position i + 1 (1-based); λ_{i+1} ≤ (i+1)·λ_i / i
        let cap = match parts.last() {
            None => self.max_first.map_or(room, |m| m.min(room)),
            Some(&prev) => ((i + 1) * prev / i).min(room),
        };
        for v in 1..=cap {
            if self.even_floors && (v / (i + 1)) % 2 == 1 {
                continue;
            }
            parts.push(v);
            visit(parts, weight + v);
            self.extend(parts, weight + v, max_weight, visit);
            parts.pop();
        }
    }
}

/// One value of an overpartition: `mult` copies of `value`, the first of them
/// overlined when `overlined` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Block {
    pub value: usize,
    pub mult: usize,
    pub overlined: bool,
}

/// Which non-overlined parts an overpartition walk admits.
#[derive(Debug, Clone, Copy)]
pub(crate) struct OverpartitionShape {
    pub modulus: Option<usize>,
}

impl OverpartitionShape {
    fn plain_allowed(&self, v: usize) -> bool {
        match self.modulus {
            None => true,
            Some(k) => {
                let r = v % k;
                r != 0 && r != 1 && r != k - 1
            }
        }
    }

    pub fn walk(&self, max_weight: usize, visit: &mut impl FnMut(&[Block], usize)) {
        let mut blocks = Vec::new();
        visit(&blocks, 0);
        self.extend(&mut blocks, max_weight, 0, max_weight, visit);
    }

    fn extend(
        &self,
        blocks: &mut Vec<Block>,
        max_value: usize,
        weight: usize,
        max_weight: usize,
        visit: &mut impl FnMut(&[Block], usize),
    ) {
        let room = max_weight - weight;
        for v in (1..=max_value.min(room)).rev() {
            let plain = self.plain_allowed(v);
            for mult in 1..=room / v {
                let w = weight + mult * v;
                // all copies plain, or the first overlined and the rest plain
                for overlined in [false, true] {
                    let ok = if overlined { mult == 1 || plain } else { plain };
                    if !ok {
                        continue;
                    }
                    blocks.push(Block { value: v, mult, overlined });
                    visit(blocks, w);
                    self.extend(blocks, v - 1, w, max_weight, visit);
                    blocks.pop();
                }
            }
        }
    }
}

pub(crate) fn blocks_to_overpartition(blocks: &[Block]) -> Overpartition {
    let mut parts = Vec::new();
    let mut overlined = Vec::new();
    for b in blocks {
        parts.extend(std::iter::repeat_n(b.value, b.mult));
        if b.overlined {
            overlined.push(b.value);
        }
    }
    Overpartition::new(parts, overlined).expect("walk yields canonical overpartitions")
}

/// Which partitions a partition walk admits.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PartitionShape {
    pub min_part: usize,
    pub distinct: bool,
}

impl PartitionShape {
    pub fn walk(&self, max_weight: usize, visit: &mut impl FnMut(&[usize], usize)) {
        let mut parts = Vec::new();
        visit(&parts, 0);
        self.extend(&mut parts, max_weight, 0, max_weight, visit);
    }

    fn extend(
        &self,
        parts: &mut Vec<usize>,
        max_value: usize,
        weight: usize,
        max_weight: usize,
        visit: &mut impl FnMut(&[usize], usize),
    ) {
        let room = max_weight - weight;
        let top = max_value.min(room);
        if top < self.min_part {
            return;
        }
        for v in (self.min_part..=top).rev() {
            parts.push(v);
            visit(parts, weight + v);
            let next_max = if self.distinct { v - 1 } else { v };
            self.extend(parts, next_max, weight + v, max_weight, visit);
            parts.pop();
        }
    }
}

fn alhc_shape(family: Family) -> Option<AlhcShape> {
    let shape = match family {
        Family::F { bound } => AlhcShape { max_first: Some(bound), ..Default::default() },
        Family::Q { bound } => AlhcShape { max_first: Some(bound), even_floors: true, ..Default::default() },
        Family::A => AlhcShape::default(),
        Family::AK { len } => AlhcShape { max_len: Some(len), ..Default::default() },
        Family::E => AlhcShape { even_floors: true, ..Default::default() },
        _ => return None,
    };
    Some(shape)
}

fn partition_shape(family: Family) -> Option<PartitionShape> {
    match family {
        Family::D => Some(PartitionShape { min_part: 1, distinct: true }),
        Family::P | Family::R { .. } => Some(PartitionShape { min_part: 2, distinct: false }),
        Family::Partitions => Some(PartitionShape { min_part: 1, distinct: false }),
        _ => None,
    }
}

/// Visits every object of `family` with weight at most `max_weight`, handing
/// only its weight to `visit`.
fn walk_weights(family: Family, max_weight: usize, visit: &mut impl FnMut(usize)) {
    if let Some(shape) = alhc_shape(family) {
        shape.walk(max_weight, &mut |_, w| visit(w));
        return;
    }
    match family {
        Family::H { modulus } => {
            OverpartitionShape { modulus: Some(modulus) }.walk(max_weight, &mut |_, w| visit(w))
        }
        Family::Overpartitions => OverpartitionShape { modulus: None }.walk(max_weight, &mut |_, w| visit(w)),
        Family::R { k } => {
            let shape = partition_shape(family).unwrap();
            shape.walk(max_weight, &mut |parts, w| {
                if crate::bijection::in_r_k_parts(parts, k) {
                    visit(w)
                }
            })
        }
        _ => {
            let shape = partition_shape(family).expect("every family has a walk");
            shape.walk(max_weight, &mut |_, w| visit(w))
        }
    }
}

/// All ALHCs of weight `n` with `λ_1 ≤ max_first`, in lexicographic order.
pub fn gen_f(max_first: usize, n: usize) -> Vec<Composition> {
    collect_alhc(AlhcShape { max_first: Some(max_first), ..Default::default() }, n)
}

/// All ALHCs of weight `n` with `λ_1 ≤ max_first` and every floor even.
pub fn gen_q(max_first: usize, n: usize) -> Vec<Composition> {
    collect_alhc(AlhcShape { max_first: Some(max_first), even_floors: true, ..Default::default() }, n)
}

/// All ALHCs of weight `n`.
pub fn gen_a(n: usize) -> Vec<Composition> {
    collect_alhc(AlhcShape::default(), n)
}

/// All ALHCs of weight `n` and length at most `len`.
pub fn gen_a_k(len: usize, n: usize) -> Vec<Composition> {
    collect_alhc(AlhcShape { max_len: Some(len), ..Default::default() }, n)
}

/// All ALHCs of weight `n` with every floor even.
pub fn gen_e(n: usize) -> Vec<Composition> {
    collect_alhc(AlhcShape { even_floors: true, ..Default::default() }, n)
}

fn collect_alhc(shape: AlhcShape, n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    shape.walk(n, &mut |parts, w| {
        if w == n {
            out.push(Composition::new(parts.to_vec()));
        }
    });
    out
}

/// All overpartitions of `n`; with `Some(k)`, only those whose non-overlined
/// parts are not congruent to `0, ±1` modulo `k`.
pub fn gen_overpartitions(n: usize, modulus: Option<usize>) -> Vec<Overpartition> {
    let mut out = Vec::new();
    OverpartitionShape { modulus }.walk(n, &mut |blocks, w| {
        if w == n {
            out.push(blocks_to_overpartition(blocks));
        }
    });
    out
}

/// Partitions of `n` into distinct parts.
pub fn gen_distinct(n: usize) -> Vec<Partition> {
    collect_partitions(PartitionShape { min_part: 1, distinct: true }, n)
}

/// Partitions of `n` with every part at least 2.
pub fn gen_no_ones(n: usize) -> Vec<Partition> {
    collect_partitions(PartitionShape { min_part: 2, distinct: false }, n)
}

pub fn gen_partitions(n: usize) -> Vec<Partition> {
    collect_partitions(PartitionShape { min_part: 1, distinct: false }, n)
}

fn collect_partitions(shape: PartitionShape, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    shape.walk(n, &mut |parts, w| {
        if w == n {
            out.push(Partition::from_sorted(parts.to_vec()));
        }
    });
    out
}

/// Number of objects of weight `n` in `family`, by enumeration.
pub fn count_family(family: Family, n: usize) -> u64 {
    let mut count = 0;
    walk_weights(family, n, &mut |w| {
        if w == n {
            count += 1
        }
    });
    count
}

/// Counts for every weight `0..=max_n` from a single enumeration pass.
pub fn tally_family(family: Family, max_n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_n + 1];
    walk_weights(family, max_n, &mut |w| counts[w] += 1);
    counts
}

/// Generating function of `family` truncated to `order`, assembled from
/// enumeration counts (no product formulas involved).
pub fn family_gf(family: Family, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(tally_family(family, order), order)
}
