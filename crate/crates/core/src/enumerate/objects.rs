use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("`{0}` is not a nonnegative integer")]
    BadInteger(String),
    #[error("partition parts must be positive and weakly decreasing: {0}")]
    NotAPartition(String),
    #[error("overpartition parts must be positive and weakly decreasing, with one overline per value: {0}")]
    NotAnOverpartition(String),
}

fn parse_list(s: &str) -> Result<Vec<usize>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| ParseError::BadInteger(t.trim().to_string())))
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A finite sequence of nonnegative integers with trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Floor vector `l_i = ⌊λ_i / i⌋`.
    pub fn floors(&self) -> Vec<usize> {
        self.parts.iter().enumerate().map(|(i, &p)| p / (i + 1)).collect()
    }

    /// Remainder vector `r_i = λ_i - i·l_i`.
    pub fn remainders(&self) -> Vec<usize> {
        self.parts.iter().enumerate().map(|(i, &p)| p % (i + 1)).collect()
    }

    /// Anti-lecture hall condition `λ_1/1 ≥ λ_2/2 ≥ ... ≥ 0`, compared by
    /// cross-multiplication.
    pub fn is_alhc(&self) -> bool {
        is_alhc_slice(&self.parts)
    }
}

pub(crate) fn is_alhc_slice(parts: &[usize]) -> bool {
    parts
        .windows(2)
        .enumerate()
        .all(|(i, w)| (i + 1) * w[1] <= (i + 2) * w[0])
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list(s).map(Composition::new)
    }
}

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ParseError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(ParseError::NotAPartition(format!("{parts:?}")))
        }
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Sorts the given positive parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        let parts = (1..=cols).map(|c| self.parts.iter().take_while(|&&p| p >= c).count()).collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_list(s)?)
    }
}

/// An overpartition: a partition in which the first occurrence of each part
/// value may carry an overline.
///
/// The overline is stored per distinct value; the text form marks the
/// overlined occurrence with a trailing `~`, e.g. `3~,2,1~,1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Overpartition {
    parts: Vec<usize>,
    /// Overlined values, strictly decreasing.
    overlined: Vec<usize>,
}

impl Overpartition {
    pub fn new(parts: Vec<usize>, mut overlined: Vec<usize>) -> Result<Self, ParseError> {
        overlined.sort_unstable_by(|a, b| b.cmp(a));
        let sorted = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        let distinct = overlined.windows(2).all(|w| w[0] > w[1]);
        let present = overlined.iter().all(|v| parts.contains(v));
        if sorted && distinct && present {
            Ok(Overpartition { parts, overlined })
        } else {
            Err(ParseError::NotAnOverpartition(format!("{parts:?} overlined {overlined:?}")))
        }
    }

    pub fn empty() -> Self {
        Overpartition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn overlined(&self) -> &[usize] {
        &self.overlined
    }

    pub fn is_overlined(&self, value: usize) -> bool {
        self.overlined.contains(&value)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts that carry no overline (every occurrence except the overlined
    /// first one of its value).
    pub fn non_overlined_parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut prev = None;
        for &p in &self.parts {
            let first = prev != Some(p);
            prev = Some(p);
            if !(first && self.is_overlined(p)) {
                out.push(p);
            }
        }
        out
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prev = None;
        for (i, &p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            if prev != Some(p) && self.is_overlined(p) {
                write!(f, "~")?;
            }
            prev = Some(p);
        }
        Ok(())
    }
}

impl FromStr for Overpartition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut parts = Vec::new();
        let mut overlined = Vec::new();
        if !s.is_empty() {
            for tok in s.split(',') {
                let tok = tok.trim();
                let (num, over) = match tok.strip_suffix('~') {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                let v: usize = num.parse().map_err(|_| ParseError::BadInteger(tok.to_string()))?;
                if over {
                    // the overline belongs to the first occurrence of the value
                    if parts.last() == Some(&v) || overlined.contains(&v) {
                        return Err(ParseError::NotAnOverpartition(s.to_string()));
                    }
                    overlined.push(v);
                }
                parts.push(v);
            }
        }
        Overpartition::new(parts, overlined)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_trims_trailing_zeros() {
        let c = Composition::new(vec![1, 2, 0, 0]);
        assert_eq!(c.parts(), &[1, 2]);
        assert_eq!(c.weight(), 3);
        assert_eq!(Composition::new(vec![0, 0]), Composition::empty());
    }

    #[test]
    fn alhc_examples() {
        assert!(Composition::new(vec![1, 2]).is_alhc());
        assert!(Composition::new(vec![4, 8, 11, 14, 16, 15, 11, 10, 5, 2]).is_alhc());
        assert!(!Composition::new(vec![0, 2]).is_alhc());
        assert!(Composition::empty().is_alhc());
    }

    #[test]
    fn floors_and_remainders() {
        let c = Composition::new(vec![4, 8, 11, 14, 16, 15, 11, 10, 5, 2]);
        assert_eq!(c.floors(), vec![4, 4, 3, 3, 3, 2, 1, 1, 0, 0]);
        assert_eq!(c.remainders(), vec![0, 0, 2, 2, 1, 3, 4, 2, 5, 2]);
    }

    #[test]
    fn overpartition_text_form() {
        let o: Overpartition = "3~,2,1~,1".parse().unwrap();
        assert_eq!(o.parts(), &[3, 2, 1, 1]);
        assert_eq!(o.overlined(), &[3, 1]);
        assert_eq!(o.non_overlined_parts(), vec![2, 1]);
        assert_eq!(o.to_string(), "3~,2,1~,1");
        assert!("2,2~".parse::<Overpartition>().is_err());
        assert!("1,2".parse::<Overpartition>().is_err());
        assert_eq!("".parse::<Overpartition>().unwrap(), Overpartition::empty());
    }

    #[test]
    fn partition_checks() {
        assert!("3,3,1".parse::<Partition>().is_ok());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        let p: Partition = "4,2,1".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }
}
