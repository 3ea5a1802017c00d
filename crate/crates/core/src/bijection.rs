//! Durfee-rectangle dissection, the sets `R_k(n)`, and the bijection
//! `θ : R_k(n) → Q_{2k-2}(n)`.
//!
//! A partition is cut into successive maximal `N × (N+1)` rectangles. Block
//! `i` is the `i`-th rectangle together with the dots to its right. Under
//! `θ`, block `i` becomes the all-twos triangle of size `N_i` plus a one in
//! cell `(r, N_i + c)` for every residue dot `c` of row `r`; the blocks are
//! added entrywise and read back as an anti-lecture hall composition.

use std::fmt;

use thiserror::Error;

use crate::enumerate::{tally_family, Composition, Family, Partition};
use crate::triangle::{from_triangle, to_triangle, TriangleError, TriangularArray};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("{partition} is not in R_{k}")]
    NotInR { partition: Partition, k: usize },
    #[error("{composition} is not in Q_{bound}")]
    NotInQ { composition: Composition, bound: usize },
    #[error(transparent)]
    Triangle(#[from] TriangleError),
}

/// Successive maximal `N × (N+1)` rectangles of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DurfeeDissection {
    /// `N_1 ≥ N_2 ≥ ...`, all positive.
    pub rect_sizes: Vec<usize>,
    /// Dots right of rectangle `i`, one row length per rectangle row.
    pub right_residues: Vec<Partition>,
    /// Rows below the last rectangle.
    pub below_last: Partition,
}

impl DurfeeDissection {
    pub fn reassemble(&self) -> Partition {
        let mut parts = Vec::new();
        for (&n, res) in self.rect_sizes.iter().zip(&self.right_residues) {
            for r in 0..n {
                parts.push(n + 1 + res.parts().get(r).copied().unwrap_or(0));
            }
        }
        parts.extend_from_slice(self.below_last.parts());
        Partition::from_unsorted(parts)
    }
}

/// Greedy dissection into at most `max_rects` rectangles. Each `N` is the
/// largest value with `N` remaining rows of length at least `N + 1`; `N = 0`
/// ends the dissection.
pub fn durfee_dissect(p: &Partition, max_rects: usize) -> DurfeeDissection {
    let (rect_sizes, below) = dissect_parts(p.parts(), max_rects);
    let mut right_residues = Vec::with_capacity(rect_sizes.len());
    let mut idx = 0;
    for &n in &rect_sizes {
        right_residues.push(Partition::from_unsorted(
            p.parts()[idx..idx + n].iter().map(|&row| row - (n + 1)).collect(),
        ));
        idx += n;
    }
    DurfeeDissection {
        rect_sizes,
        right_residues,
        below_last: Partition::from_unsorted(p.parts()[below..].to_vec()),
    }
}

/// Rectangle sizes and the index of the first row below the last rectangle.
fn dissect_parts(parts: &[usize], max_rects: usize) -> (Vec<usize>, usize) {
    let mut sizes = Vec::new();
    let mut idx = 0;
    while sizes.len() < max_rects {
        let rest = &parts[idx..];
        let n = (0..rest.len()).take_while(|&i| rest[i] >= i + 2).count();
        if n == 0 {
            break;
        }
        sizes.push(n);
        idx += n;
    }
    (sizes, idx)
}

/// Membership in `R_k`: parts at least 2, at most `k - 1` rectangles and no
/// rows below the last one.
pub fn in_r_k(p: &Partition, k: usize) -> bool {
    in_r_k_parts(p.parts(), k)
}

pub(crate) fn in_r_k_parts(parts: &[usize], k: usize) -> bool {
    if k < 1 || parts.last().is_some_and(|&p| p < 2) {
        return false;
    }
    dissect_parts(parts, k - 1).1 == parts.len()
}

/// The partitions of `n` in `R_k`.
pub fn gen_r(k: usize, n: usize) -> Vec<Partition> {
    crate::enumerate::gen_no_ones(n).into_iter().filter(|p| in_r_k(p, k)).collect()
}

/// Membership in `Q_bound`: an ALHC with every floor even and first part at
/// most `bound`.
pub fn in_q(mu: &Composition, bound: usize) -> bool {
    mu.is_alhc() && mu.part(1) <= bound && mu.floors().iter().all(|l| l % 2 == 0)
}

/// Intermediate arrays of `θ`: one triangle per block and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTrace {
    pub dissection: DurfeeDissection,
    pub blocks: Vec<TriangularArray>,
    pub combined: TriangularArray,
    pub image: Composition,
}

fn block_triangle(n: usize, residue: &Partition) -> TriangularArray {
    let size = n + residue.largest();
    let mut t = TriangularArray::zeros(size);
    for j in 1..=n {
        for r in 1..=j {
            t.set(r, j, 2);
        }
    }
    for (r, &len) in residue.parts().iter().enumerate() {
        for c in 1..=len {
            t.set(r + 1, n + c, 1);
        }
    }
    t
}

pub fn theta_trace(p: &Partition, k: usize) -> Result<ThetaTrace, BijectionError> {
    if k < 2 {
        return Err(BijectionError::BadK(k));
    }
    if !in_r_k(p, k) {
        return Err(BijectionError::NotInR { partition: p.clone(), k });
    }
    let dissection = durfee_dissect(p, k - 1);
    let blocks: Vec<_> = dissection
        .rect_sizes
        .iter()
        .zip(&dissection.right_residues)
        .map(|(&n, res)| block_triangle(n, res))
        .collect();
    let combined = blocks.iter().fold(TriangularArray::zeros(0), |acc, b| acc.add_corner(b));
    let image = from_triangle(&combined)?;
    Ok(ThetaTrace { dissection, blocks, combined, image })
}

pub fn theta(p: &Partition, k: usize) -> Result<Composition, BijectionError> {
    theta_trace(p, k).map(|t| t.image)
}

/// Inverse of [`theta`]. `N_i` counts diagonal entries `≥ 2i`; the ones in
/// columns `N_i + 1 ..= N_{i-1}` give the conjugate of block `i`'s residue.
pub fn theta_inv(mu: &Composition, k: usize) -> Result<Partition, BijectionError> {
    if k < 2 {
        return Err(BijectionError::BadK(k));
    }
    let bound = 2 * k - 2;
    if !in_q(mu, bound) {
        return Err(BijectionError::NotInQ { composition: mu.clone(), bound });
    }
    let t = to_triangle(mu)?;
    let diag = t.diagonal();
    let rems = mu.remainders();
    let ns: Vec<usize> = (1..k).map(|i| diag.iter().filter(|&&d| d >= 2 * i).count()).collect();
    let mut parts = Vec::with_capacity(mu.weight() / 2);
    for (i, &n) in ns.iter().enumerate() {
        if n == 0 {
            break;
        }
        let hi = if i == 0 { mu.len() } else { ns[i - 1] };
        let residue = Partition::from_unsorted(rems[n..hi].to_vec()).conjugate();
        parts.extend((0..n).map(|r| n + 1 + residue.parts().get(r).copied().unwrap_or(0)));
    }
    Ok(Partition::from_unsorted(parts))
}

/// Ferrers diagram with rectangle cells drawn as `#`, residue dots as `o`,
/// rows below the last rectangle as `.`, and a rule between blocks.
pub struct FerrersView<'a>(pub &'a DurfeeDissection);

impl fmt::Display for FerrersView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.0;
        let width = d.reassemble().largest();
        for (b, (&n, res)) in d.rect_sizes.iter().zip(&d.right_residues).enumerate() {
            if b > 0 {
                writeln!(f, "{}", "-".repeat(2 * width - 1))?;
            }
            for r in 0..n {
                let extra = res.parts().get(r).copied().unwrap_or(0);
                let cells: Vec<&str> = std::iter::repeat_n("#", n + 1).chain(std::iter::repeat_n("o", extra)).collect();
                writeln!(f, "{}", cells.join(" "))?;
            }
        }
        if !d.below_last.is_empty() {
            if !d.rect_sizes.is_empty() {
                writeln!(f, "{}", "-".repeat(2 * width - 1))?;
            }
            for &row in d.below_last.parts() {
                writeln!(f, "{}", vec!["."; row].join(" "))?;
            }
        }
        Ok(())
    }
}

/// Outcome of comparing `|F_{2k-1}(n)|` with the convolution
/// `Σ_m |D(m)| |Q_{2k-2}(n-m)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionReport {
    pub k: usize,
    pub n_max: usize,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    /// `(n, lhs, rhs)` at the first disagreement.
    pub first_failure: Option<(usize, u64, u64)>,
}

impl ConvolutionReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn convolution_check(k: usize, n_max: usize) -> Result<ConvolutionReport, BijectionError> {
    if k < 2 {
        return Err(BijectionError::BadK(k));
    }
    let lhs = tally_family(Family::F { bound: 2 * k - 1 }, n_max);
    let d = tally_family(Family::D, n_max);
    let q = tally_family(Family::Q { bound: 2 * k - 2 }, n_max);
    let rhs: Vec<u64> = (0..=n_max).map(|n| (0..=n).map(|m| d[m] * q[n - m]).sum()).collect();
    let first_failure = (0..=n_max).find(|&n| lhs[n] != rhs[n]).map(|n| (n, lhs[n], rhs[n]));
    Ok(ConvolutionReport { k, n_max, lhs, rhs, first_failure })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn worked() -> Partition {
        part("10,10,9,8,7,7,7,7,5,4,3")
    }

    #[test]
    fn dissect_worked_example() {
        let d = durfee_dissect(&worked(), 3);
        assert_eq!(d.rect_sizes, vec![6, 3, 2]);
        assert_eq!(d.right_residues[0].parts(), &[3, 3, 2, 1]);
        assert_eq!(d.right_residues[1].parts(), &[3, 3, 1]);
        assert_eq!(d.right_residues[2].parts(), &[1]);
        assert!(d.below_last.is_empty());
        assert_eq!(d.reassemble(), worked());
    }

    #[test]
    fn dissect_small_cases() {
        assert_eq!(durfee_dissect(&Partition::empty(), 3), DurfeeDissection::default());
        let d = durfee_dissect(&part("2,2"), 5);
        assert_eq!(d.rect_sizes, vec![1, 1]);
        assert!(d.below_last.is_empty());
        let d = durfee_dissect(&part("2,2"), 1);
        assert_eq!(d.rect_sizes, vec![1]);
        assert_eq!(d.below_last.parts(), &[2]);
        let d = durfee_dissect(&part("3,1"), 4);
        assert_eq!(d.rect_sizes, vec![1]);
        assert_eq!(d.right_residues[0].parts(), &[1]);
        assert_eq!(d.below_last.parts(), &[1]);
    }

    #[test]
    fn r_k_membership() {
        assert!(in_r_k(&worked(), 4));
        assert!(!in_r_k(&worked(), 3));
        assert!(in_r_k(&Partition::empty(), 2));
        assert!(!in_r_k(&part("1"), 5));
        assert!(in_r_k(&part("2,2"), 3));
        assert!(!in_r_k(&part("2,2"), 2));
    }

    #[test]
    fn theta_worked_example() {
        let trace = theta_trace(&worked(), 4).unwrap();
        assert_eq!(trace.image.parts(), &[6, 12, 13, 11, 12, 14, 4, 3, 2]);
        assert_eq!(trace.image.weight(), 77);
        assert_eq!(trace.combined.row(1), vec![6, 6, 5, 3, 3, 3, 1, 1, 1]);
        assert_eq!(trace.combined.row(3), vec![4, 3, 2, 2, 1, 1, 0]);
        assert_eq!(trace.blocks[1].row(1), vec![2, 2, 2, 1, 1, 1]);
        assert_eq!(theta_inv(&trace.image, 4).unwrap(), worked());
    }

    #[test]
    fn theta_trivial_cases() {
        assert_eq!(theta(&Partition::empty(), 3).unwrap(), Composition::empty());
        assert_eq!(theta(&part("2"), 2).unwrap().parts(), &[2]);
        assert_eq!(theta_inv(&Composition::empty(), 2).unwrap(), Partition::empty());
        assert_eq!(theta_inv(&Composition::new(vec![2]), 2).unwrap(), part("2"));
    }

    #[test]
    fn theta_rejects_outside_domain() {
        assert!(matches!(theta(&part("3,1"), 3), Err(BijectionError::NotInR { .. })));
        assert!(matches!(theta_inv(&Composition::new(vec![1]), 3), Err(BijectionError::NotInQ { .. })));
        assert!(matches!(theta_inv(&Composition::new(vec![4]), 2), Err(BijectionError::NotInQ { .. })));
        assert_eq!(theta(&part("2"), 1), Err(BijectionError::BadK(1)));
    }

    #[test]
    fn convolution_small() {
        let r = convolution_check(2, 12).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lhs[0], 1);
    }

    #[test]
    fn ferrers_view() {
        let d = durfee_dissect(&part("3,2,2"), 3);
        assert_eq!(FerrersView(&d).to_string(), "# # o\n-----\n# #\n-----\n# #\n");
    }
}
