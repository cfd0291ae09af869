use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition stored without trailing zeros, parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into weakly decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The full `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `m` (0-based), zero past the end.
    pub fn part(&self, m: usize) -> usize {
        self.0.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.0.len() <= rows && self.0.iter().all(|&p| p <= cols)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Complement inside the `rows x cols` box, rotated back to English position.
    pub fn complement(&self, rows: usize, cols: usize) -> Partition {
        debug_assert!(self.fits(rows, cols));
        Partition::new((0..rows).rev().map(|m| cols - self.part(m)).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition::new((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Reads a 0/1 word where the m-th 1 contributes the number of 0s after it.
    pub fn from_word(word: &[bool]) -> Partition {
        let mut parts = Vec::new();
        let mut zeros_after = word.iter().filter(|&&b| !b).count();
        for &b in word {
            if b {
                parts.push(zeros_after);
            } else {
                zeros_after -= 1;
            }
        }
        Partition::new(parts)
    }

    /// Inverse of [`Partition::from_word`] for a word with `ones` ones and `zeros` zeros.
    pub fn to_word(&self, ones: usize, zeros: usize) -> Vec<bool> {
        debug_assert!(self.fits(ones, zeros));
        let mut word = Vec::with_capacity(ones + zeros);
        let mut remaining = zeros;
        for m in 0..ones {
            let p = self.part(m);
            while remaining > p {
                word.push(false);
                remaining -= 1;
            }
            word.push(true);
        }
        word.extend(std::iter::repeat_n(false, remaining));
        word
    }

    /// Every partition inside the `rows x cols` box, by size then reverse lexicographic.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rows);
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == rows {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (0..=max).rev() {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (m, p) in self.0.iter().enumerate() {
            if m > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        assert_eq!(Partition::new(vec![1, 0, 2]).parts(), &[2, 1]);
        assert!(Partition::new(vec![0, 0]).is_empty());
    }

    #[test]
    fn word_round_trip() {
        for p in Partition::all_in_box(2, 3) {
            let w = p.to_word(2, 3);
            assert_eq!(Partition::from_word(&w), p);
        }
        assert_eq!(Partition::from_word(&[true, true, false, false]).parts(), &[2, 2]);
        assert!(Partition::from_word(&[false, false, true, true]).is_empty());
    }

    #[test]
    fn box_enumeration_counts() {
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(2, 3).len(), 10);
        assert_eq!(Partition::all_in_box(0, 3).len(), 1);
    }

    #[test]
    fn complement_and_conjugate() {
        let p = Partition::new(vec![2, 1]);
        assert_eq!(p.complement(2, 3).parts(), &[2, 1]);
        assert_eq!(p.complement(2, 2).parts(), &[1]);
        assert_eq!(Partition::new(vec![3, 1]).conjugate().parts(), &[2, 1, 1]);
    }
}
