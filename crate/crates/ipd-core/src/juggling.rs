use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::partial::{Cell, EssentialBox, PartialPermutation};
use crate::partition::Partition;

/// Bounded juggling pattern: `J(i + n) = J(i) + n` and `i <= J(i) <= i + n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedAffinePermutation {
    n: usize,
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    n: usize,
    window: Vec<i64>,
}

impl Serialize for BoundedAffinePermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PatternJson { n: self.n, window: self.window.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundedAffinePermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PatternJson::deserialize(d)?;
        if raw.window.len() != raw.n {
            return Err(serde::de::Error::custom(CoreError::Length {
                expected: raw.n,
                got: raw.window.len(),
            }));
        }
        BoundedAffinePermutation::new(raw.window).map_err(serde::de::Error::custom)
    }
}

/// A Bruhat cover together with the rectangle on which the rank matrices differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cover {
    pub pattern: BoundedAffinePermutation,
    /// Rows `[rows.0, rows.1]` of the rectangle, with `rows.0 >= 1`.
    pub rows: (i64, i64),
    pub cols: (i64, i64),
}

impl BoundedAffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self, CoreError> {
        let n = window.len();
        if n == 0 {
            return Err(CoreError::EmptySize);
        }
        let nn = n as i64;
        let mut seen = vec![false; n];
        for (idx, &v) in window.iter().enumerate() {
            let i = idx as i64 + 1;
            if v < i || v > i + nn {
                return Err(CoreError::Unbounded { i, value: v });
            }
            let res = v.rem_euclid(nn) as usize;
            if seen[res] {
                return Err(CoreError::NotBijective);
            }
            seen[res] = true;
        }
        Ok(BoundedAffinePermutation { n, window })
    }

    pub fn identity(n: usize) -> Self {
        BoundedAffinePermutation { n, window: (1..=n as i64).collect() }
    }

    /// The unique bounded pattern agreeing with `f` on the first triangle, with its
    /// remaining dots running NW/SE through the second triangle.
    pub fn from_partial(f: &PartialPermutation) -> Self {
        let n = f.n();
        let mut used_col = vec![false; n + 1];
        for c in f.target().iter().flatten() {
            used_col[*c] = true;
        }
        let free_cols: Vec<usize> = (1..=n).filter(|&c| !used_col[c]).collect();
        let mut window = vec![0i64; n];
        let mut next = free_cols.iter();
        for r in 1..=n {
            window[r - 1] = match f.get(r) {
                Some(c) => c as i64,
                None => (*next.next().expect("row and column counts agree") + n) as i64,
            };
        }
        BoundedAffinePermutation { n, window }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `J(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        let nn = self.n as i64;
        let q = (i - 1).div_euclid(nn);
        let r = (i - 1).rem_euclid(nn) as usize;
        self.window[r] + q * nn
    }

    /// The row `r` with `J(r) = c`.
    pub fn inverse(&self, c: i64) -> i64 {
        let nn = self.n as i64;
        for (idx, &v) in self.window.iter().enumerate() {
            if (v - c).rem_euclid(nn) == 0 {
                return idx as i64 + 1 + (c - v);
            }
        }
        unreachable!("window is a bijection modulo n")
    }

    pub fn siteswap(&self) -> Vec<i64> {
        self.window.iter().enumerate().map(|(idx, &v)| v - idx as i64 - 1).collect()
    }

    /// Ball number.
    pub fn k(&self) -> usize {
        let total: i64 = self.siteswap().iter().sum();
        (total / self.n as i64) as usize
    }

    /// `#{(i, j) : i in [n], j > i, J(i) > J(j)}`.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.n as i64 {
            let ji = self.apply(i);
            for j in (i + 1)..ji {
                if self.apply(j) < ji {
                    count += 1;
                }
            }
        }
        count
    }

    /// `k(n-k) - length`.
    pub fn dim(&self) -> usize {
        let k = self.k();
        k * (self.n - k) - self.length()
    }

    /// Rank bound on the cyclic interval `[i, j]`, `i <= j <= i + n`.
    pub fn rank(&self, i: i64, j: i64) -> i64 {
        debug_assert!(i <= j + 1 && j <= i + self.n as i64);
        let sw = (i..=j).filter(|&r| self.apply(r) <= j).count() as i64;
        (j - i + 1) - sw
    }

    /// Rank bounds for `i in [1, n]`, `j in [i, i + n]`, row-major.
    pub fn rank_table(&self) -> Vec<i64> {
        let nn = self.n as i64;
        let mut out = Vec::with_capacity(self.n * (self.n + 1));
        for i in 1..=nn {
            for j in i..=i + nn {
                out.push(self.rank(i, j));
            }
        }
        out
    }

    /// The dot of row `i` lies weakly West of column `j` and the dot of column `j`
    /// lies weakly South of row `i`.
    pub fn in_diagram(&self, i: i64, j: i64) -> bool {
        self.apply(i) <= j && self.inverse(j) >= i
    }

    /// Northeast corners of the diagram with `i in [1, n]`, `i <= j < i + n`, whose
    /// bound is below `k`.
    pub fn essential_boxes(&self) -> Vec<EssentialBox> {
        let nn = self.n as i64;
        let k = self.k() as i64;
        let mut out = Vec::new();
        for i in 1..=nn {
            for j in i..i + nn {
                if !self.in_diagram(i, j) {
                    continue;
                }
                let north_out = !self.in_diagram(i - 1, j);
                let east_out = !self.in_diagram(i, j + 1);
                let bound = self.rank(i, j);
                if north_out && east_out && bound < k {
                    out.push(EssentialBox { cell: Cell::new(i as usize, j as usize), bound: bound as usize });
                }
            }
        }
        out
    }

    /// Exchanges the values in rows `a` and `b` (with their periodic copies).
    pub fn swap_rows(&self, a: i64, b: i64) -> Option<Self> {
        let nn = self.n as i64;
        if (a - b).rem_euclid(nn) == 0 {
            return None;
        }
        let (ja, jb) = (self.apply(a), self.apply(b));
        let mut window = self.window.clone();
        let ra = (a - 1).rem_euclid(nn);
        let rb = (b - 1).rem_euclid(nn);
        window[ra as usize] = jb - (a - 1 - ra);
        window[rb as usize] = ja - (b - 1 - rb);
        BoundedAffinePermutation::new(window).ok()
    }

    /// Rows with dots strictly inside the rectangle spanned by rows `(a, b)` and
    /// values `(lo, hi)`.
    fn rectangle_empty(&self, a: i64, b: i64, lo: i64, hi: i64) -> bool {
        ((a + 1)..b).all(|r| {
            let v = self.apply(r);
            v <= lo || v >= hi
        })
    }

    /// Patterns of length one less, obtained by turning a NE/SW pair of dots with an
    /// empty rectangle between them into a NW/SE pair. The rank matrix goes up by one
    /// on the reported rectangle.
    pub fn bruhat_covers_up(&self) -> Vec<Cover> {
        let nn = self.n as i64;
        let mut out = Vec::new();
        for a in 1..=nn {
            for b in (a + 1)..(a + nn) {
                let (ja, jb) = (self.apply(a), self.apply(b));
                if ja <= jb || !self.rectangle_empty(a, b, jb, ja) {
                    continue;
                }
                if let Some(p) = self.swap_rows(a, b) {
                    out.push(Cover { pattern: p, rows: (a + 1, b), cols: (jb, ja - 1) });
                }
            }
        }
        out
    }

    /// Patterns of length one more, obtained by turning a NW/SE pair of dots with an
    /// empty rectangle between them into a NE/SW pair. The rank matrix drops by one on
    /// the reported rectangle.
    pub fn bruhat_covers_down(&self) -> Vec<Cover> {
        let nn = self.n as i64;
        let mut out = Vec::new();
        for a in 1..=nn {
            for b in (a + 1)..(a + nn) {
                let (ja, jb) = (self.apply(a), self.apply(b));
                if ja >= jb || !self.rectangle_empty(a, b, ja, jb) {
                    continue;
                }
                if let Some(p) = self.swap_rows(a, b) {
                    out.push(Cover { pattern: p, rows: (a + 1, b), cols: (ja, jb - 1) });
                }
            }
        }
        out
    }

    /// Dots `(i, J(i))` with `i in [1, n]` and `J(i) <= n`.
    pub fn left_half(&self) -> PartialPermutation {
        let target = self
            .window
            .iter()
            .map(|&v| (v <= self.n as i64).then_some(v as usize))
            .collect();
        PartialPermutation::new(self.n, target).expect("left half of a bounded pattern")
    }

    /// Dots of the right half, `(i, J(i) - n)` for `J(i) > n`, read by row.
    fn right_half(&self) -> Vec<(usize, i64)> {
        let nn = self.n as i64;
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > nn)
            .map(|(idx, &v)| (idx + 1, v - nn))
            .collect()
    }

    /// True when the pattern comes from a partial permutation (right half NW/SE).
    pub fn is_interval(&self) -> bool {
        self.right_half().windows(2).all(|w| w[0].1 < w[1].1)
    }

    pub fn to_partial(&self) -> Option<PartialPermutation> {
        self.is_interval().then(|| self.left_half())
    }

    /// The smallest Richardson variety `X_mu ∩ X^nu` containing the positroid variety,
    /// and whether it is equal to it.
    pub fn richardson_envelope(&self) -> (Partition, Partition, bool) {
        let f = self.left_half();
        let nu = Partition::from_word(&f.column_word());
        let mut rows = f.row_word();
        rows.reverse();
        let mu = Partition::from_word(&rows);
        let exact = f.is_nw_se() && self.is_interval();
        (mu, nu, exact)
    }

    /// Every bounded pattern of size `n` (all ball numbers).
    pub fn all(n: usize) -> Vec<BoundedAffinePermutation> {
        let nn = n as i64;
        let mut out = Vec::new();
        let mut window = vec![0i64; n];
        let mut seen = vec![false; n];
        fn rec(idx: usize, nn: i64, window: &mut Vec<i64>, seen: &mut Vec<bool>, out: &mut Vec<BoundedAffinePermutation>) {
            if idx == window.len() {
                out.push(BoundedAffinePermutation { n: window.len(), window: window.clone() });
                return;
            }
            let i = idx as i64 + 1;
            for v in i..=i + nn {
                let res = v.rem_euclid(nn) as usize;
                if seen[res] {
                    continue;
                }
                seen[res] = true;
                window[idx] = v;
                rec(idx + 1, nn, window, seen, out);
                seen[res] = false;
            }
        }
        if n > 0 {
            rec(0, nn, &mut window, &mut seen, &mut out);
        }
        out
    }
}

impl fmt::Display for BoundedAffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (m, v) in self.window.iter().enumerate() {
            if m > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
