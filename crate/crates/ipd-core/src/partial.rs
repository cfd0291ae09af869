use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::partition::Partition;

/// A box `(i, j)` of the upper triangle, 1-based, `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }
}

/// A Northeast corner of a diagram together with its rank bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EssentialBox {
    pub cell: Cell,
    pub bound: usize,
}

/// Upper-triangular partial permutation: `f(i) = j` puts a dot at `(i, j)` with `j >= i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialPermutation {
    n: usize,
    target: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PartialPermutationJson {
    n: usize,
    dots: Vec<[usize; 2]>,
}

impl Serialize for PartialPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PartialPermutationJson {
            n: self.n,
            dots: self.dots().into_iter().map(|(a, b)| [a, b]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PartialPermutationJson::deserialize(d)?;
        let dots: Vec<(usize, usize)> = raw.dots.iter().map(|&[a, b]| (a, b)).collect();
        PartialPermutation::from_dots(raw.n, &dots).map_err(serde::de::Error::custom)
    }
}

impl PartialPermutation {
    pub fn new(n: usize, target: Vec<Option<usize>>) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::EmptySize);
        }
        if target.len() != n {
            return Err(CoreError::Length { expected: n, got: target.len() });
        }
        let mut seen = vec![false; n + 1];
        for (idx, t) in target.iter().enumerate() {
            let row = idx + 1;
            if let Some(col) = *t {
                if col < row || col > n {
                    return Err(CoreError::NotUpperTriangular { row, col, n });
                }
                if seen[col] {
                    return Err(CoreError::RepeatedColumn(col));
                }
                seen[col] = true;
            }
        }
        Ok(PartialPermutation { n, target })
    }

    pub fn from_dots(n: usize, dots: &[(usize, usize)]) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::EmptySize);
        }
        let mut target = vec![None; n];
        for &(row, col) in dots {
            if row == 0 || row > n {
                return Err(CoreError::NotUpperTriangular { row, col, n });
            }
            if target[row - 1].is_some() {
                return Err(CoreError::RepeatedRow(row));
            }
            target[row - 1] = Some(col);
        }
        Self::new(n, target)
    }

    pub fn empty(n: usize) -> Self {
        PartialPermutation { n, target: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        PartialPermutation { n, target: (1..=n).map(Some).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.target.iter().flatten().count()
    }

    /// Dimension of the ambient k-planes, `n - rank`.
    pub fn k(&self) -> usize {
        self.n - self.rank()
    }

    pub fn get(&self, row: usize) -> Option<usize> {
        self.target[row - 1]
    }

    /// Row of the dot in column `col`, if any.
    pub fn row_of(&self, col: usize) -> Option<usize> {
        self.target.iter().position(|&t| t == Some(col)).map(|r| r + 1)
    }

    pub fn target(&self) -> &[Option<usize>] {
        &self.target
    }

    /// Dots in reading order (by row).
    pub fn dots(&self) -> Vec<(usize, usize)> {
        self.target
            .iter()
            .enumerate()
            .filter_map(|(r, t)| t.map(|c| (r + 1, c)))
            .collect()
    }

    pub fn has_dot(&self, i: usize, j: usize) -> bool {
        self.target[i - 1] == Some(j)
    }

    /// True when the dots run NW/SE: rows and columns increase together.
    pub fn is_nw_se(&self) -> bool {
        self.dots().windows(2).all(|w| w[0].1 < w[1].1)
    }

    /// Number of dots weakly Southwest of `(i, j)`: rows `>= i`, columns `<= j`.
    pub fn dots_southwest(&self, i: usize, j: usize) -> usize {
        (i..=self.n)
            .filter(|&r| matches!(self.target[r - 1], Some(c) if c <= j))
            .count()
    }

    pub fn rank_matrix(&self) -> RankMatrix {
        let n = self.n;
        let mut r = vec![0; n * n];
        for i in 1..=n {
            for j in i..=n {
                r[(i - 1) * n + (j - 1)] = (j - i + 1) - self.dots_southwest(i, j);
            }
        }
        RankMatrix { n, r }
    }

    /// A box survives when no dot lies strictly East of it in its row or strictly North
    /// of it in its column; dotless rows and columns are crossed out entirely.
    pub fn in_diagram(&self, i: usize, j: usize) -> bool {
        let row_ok = matches!(self.target[i - 1], Some(c) if c <= j);
        let col_ok = matches!(self.row_of(j), Some(r) if r >= i);
        row_ok && col_ok
    }

    /// Northeast corners of the diagram carrying a non-vacuous bound (below `k`).
    pub fn essential_boxes(&self) -> Vec<EssentialBox> {
        let n = self.n;
        let k = self.k();
        let rm = self.rank_matrix();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                if !self.in_diagram(i, j) {
                    continue;
                }
                let north_out = i == 1 || !self.in_diagram(i - 1, j);
                let east_out = j == n || !self.in_diagram(i, j + 1);
                let bound = rm.get(i, j);
                if north_out && east_out && bound < k {
                    out.push(EssentialBox { cell: Cell::new(i, j), bound });
                }
            }
        }
        out
    }

    /// `lambda` with `Pi_f = X^lambda` when the dots fill the first `n - k` rows NW/SE.
    pub fn opposite_schubert_partition(&self) -> Option<Partition> {
        let r = self.rank();
        if !self.target[..r].iter().all(Option::is_some) || !self.is_nw_se() {
            return None;
        }
        Some(Partition::from_word(&self.column_word()))
    }

    /// `true` at dotless columns, read left to right.
    pub fn column_word(&self) -> Vec<bool> {
        let mut used = vec![false; self.n + 1];
        for c in self.target.iter().flatten() {
            used[*c] = true;
        }
        (1..=self.n).map(|c| !used[c]).collect()
    }

    /// `true` at dotless rows, read top to bottom.
    pub fn row_word(&self) -> Vec<bool> {
        self.target.iter().map(Option::is_none).collect()
    }

    /// Every upper-triangular partial permutation of size `n`, in a fixed order.
    pub fn all(n: usize) -> Vec<PartialPermutation> {
        let mut out = Vec::new();
        let mut target = vec![None; n];
        let mut used = vec![false; n + 1];
        fn rec(
            row: usize,
            n: usize,
            target: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            out: &mut Vec<PartialPermutation>,
        ) {
            if row > n {
                out.push(PartialPermutation { n, target: target.clone() });
                return;
            }
            target[row - 1] = None;
            rec(row + 1, n, target, used, out);
            for c in row..=n {
                if !used[c] {
                    used[c] = true;
                    target[row - 1] = Some(c);
                    rec(row + 1, n, target, used, out);
                    used[c] = false;
                }
            }
            target[row - 1] = None;
        }
        if n > 0 {
            rec(1, n, &mut target, &mut used, &mut out);
        }
        out
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dots = self.dots();
        if dots.is_empty() {
            return write!(f, "empty[n={}]", self.n);
        }
        for (m, (a, b)) in dots.iter().enumerate() {
            if m > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}->{b}")?;
        }
        write!(f, "[n={}]", self.n)
    }
}

/// Upper-triangular matrix of interval rank bounds, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankMatrix {
    n: usize,
    r: Vec<usize>,
}

impl RankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= self.n);
        self.r[(i - 1) * self.n + (j - 1)]
    }

    /// Checks the bounds and unit-step monotonicity of a rank matrix.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in i..=n {
                let v = self.get(i, j);
                if v > j - i + 1 {
                    return false;
                }
                let below = if i < j { self.get(i + 1, j) } else { 0 };
                let left = if i < j { self.get(i, j - 1) } else { 0 };
                if v < below || v - below > 1 || v < left || v - left > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &RankMatrix) -> bool {
        self.n == other.n && self.r.iter().zip(&other.r).all(|(a, b)| a <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(n: usize, dots: &[(usize, usize)]) -> PartialPermutation {
        PartialPermutation::from_dots(n, dots).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            PartialPermutation::from_dots(3, &[(2, 1)]),
            Err(CoreError::NotUpperTriangular { row: 2, col: 1, n: 3 })
        );
        assert_eq!(PartialPermutation::from_dots(3, &[(1, 3), (2, 3)]), Err(CoreError::RepeatedColumn(3)));
        assert_eq!(PartialPermutation::from_dots(3, &[(1, 2), (1, 3)]), Err(CoreError::RepeatedRow(1)));
        assert_eq!(PartialPermutation::from_dots(0, &[]), Err(CoreError::EmptySize));
    }

    #[test]
    fn rank_matrix_examples() {
        let f = pp(4, &[(1, 2), (3, 4)]);
        assert_eq!(f.rank_matrix().get(1, 2), 1);
        assert_eq!(f.k(), 2);
        let e = PartialPermutation::empty(5).rank_matrix();
        for i in 1..=5 {
            for j in i..=5 {
                assert_eq!(e.get(i, j), j - i + 1);
            }
        }
        let id = PartialPermutation::identity(4).rank_matrix();
        for i in 1..=4 {
            for j in i..=4 {
                assert_eq!(id.get(i, j), 0);
            }
        }
    }

    #[test]
    fn essential_examples() {
        assert!(PartialPermutation::identity(4).essential_boxes().is_empty());
        assert!(PartialPermutation::empty(4).essential_boxes().is_empty());
        let f = pp(4, &[(1, 2), (3, 4)]);
        let ess: Vec<_> = f.essential_boxes().iter().map(|e| (e.cell.i, e.cell.j, e.bound)).collect();
        assert_eq!(ess, vec![(1, 2, 1), (3, 4, 1)]);
    }

    #[test]
    fn opposite_schubert_examples() {
        assert_eq!(PartialPermutation::empty(4).opposite_schubert_partition(), Some(Partition::rectangle(4, 0)));
        assert_eq!(pp(4, &[(1, 2), (2, 4)]).opposite_schubert_partition(), Some(Partition::new(vec![2, 1])));
        assert_eq!(pp(3, &[(1, 1), (2, 2)]).opposite_schubert_partition(), Some(Partition::new(vec![0])));
        assert_eq!(pp(4, &[(1, 2), (3, 4)]).opposite_schubert_partition(), None);
        assert_eq!(pp(4, &[(1, 4), (2, 3)]).opposite_schubert_partition(), None);
    }

    #[test]
    fn enumeration_counts() {
        // rook placements on the staircase: 2, 5, 15, 52, 203 (Bell numbers)
        let counts: Vec<usize> = (1..=5).map(|n| PartialPermutation::all(n).len()).collect();
        assert_eq!(counts, vec![2, 5, 15, 52, 203]);
    }

    #[test]
    fn json_form() {
        let f = pp(4, &[(1, 2), (3, 4)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"n":4,"dots":[[1,2],[3,4]]}"#);
        let back: PartialPermutation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<PartialPermutation>(r#"{"n":2,"dots":[[2,1]]}"#).is_err());
    }
}
