//! Partitions and compositions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Does the diagram of `self` contain that of `other`?
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.iter().enumerate().all(|(i, &p)| self.part(i) >= p)
    }

    /// Cells `(row, col)`, 1-based, in row-reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Text form `3,2,1`; the empty partition prints as `0`.
    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        join(&self.0, ",")
    }

    /// Accepts `3,2,1`, or digit shorthand `321` when every part is below ten.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Partition::empty());
        }
        Partition::new(parse_parts(s)?)
    }
}

pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parse(format!("bad part list {s:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

fn join(parts: &[usize], sep: &str) -> String {
    parts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

/// Sequence of positive parts. Orders lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The composition of `n` whose partial sums are the elements of `set`.
    pub fn from_descent_set(n: usize, set: &BTreeSet<usize>) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in set.iter().filter(|&&d| d > 0 && d < n) {
            parts.push(d - prev);
            prev = d;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Composition(parts)
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.insert(acc);
        }
        out
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition(self.0.clone()))
    }

    /// Text form `1|3|2`.
    pub fn to_text(&self) -> String {
        join(&self.0, "|")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad composition {s:?}"));
        let parts = s
            .trim()
            .split('|')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugates() {
        let l = Partition::parse("4,2,1").unwrap();
        assert_eq!(l.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn descent_sets() {
        let set: BTreeSet<usize> = [1, 3].into_iter().collect();
        let c = Composition::from_descent_set(5, &set);
        assert_eq!(c.parts(), &[1, 2, 2]);
        assert_eq!(c.descent_set(), set);
        assert_eq!(Composition::parse("1|3|2").unwrap().to_text(), "1|3|2");
    }

    #[test]
    fn shorthand() {
        assert_eq!(Partition::parse("222").unwrap().parts(), &[2, 2, 2]);
        assert!(Partition::parse("1,2").is_err());
    }
}
