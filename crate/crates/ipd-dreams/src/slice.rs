use std::fmt;

use ipd_core::{Cell, PartialPermutation};

use crate::{DreamError, Label, TheoryMode, Tile, Word};

/// The frontier of a partly built dream: labels on the staircase below the untiled "top half".
///
/// Column `c` carries one horizontal edge, sitting below row [`Slice::height`]`(c)`.
/// Rows above the kink carry their East boundary label; the kink row carries `kink_east`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slice {
    n: usize,
    i: usize,
    j: usize,
    horizontal: Vec<Label>,
    east_boundary: Vec<Label>,
    kink_east: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabeledDot {
    pub cell: Cell,
    pub label: Label,
}

/// The partial permutation g(s) of a viable slice, with the label of each dot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceDots {
    pub perm: PartialPermutation,
    /// In row order.
    pub dots: Vec<LabeledDot>,
}

impl SliceDots {
    pub fn label_at(&self, cell: Cell) -> Option<Label> {
        self.dots.iter().find(|d| d.cell == cell).map(|d| d.label)
    }
}

type Unviable = &'static str;

impl Slice {
    /// The slice at (n,n) whose edges are the South and East boundary dictated by `f`.
    pub fn initial(f: &PartialPermutation) -> Slice {
        let n = f.n();
        let mut horizontal = vec![Label::One; n];
        let mut east_boundary = vec![Label::Zero; n];
        for (m, (a, b)) in f.dots().into_iter().enumerate() {
            let letter = Label::Letter(u8::try_from(m + 1).expect("at most 255 dots"));
            horizontal[b - 1] = letter;
            east_boundary[a - 1] = letter;
        }
        let kink_east = Word::single(east_boundary[n - 1]);
        Slice { n, i: n, j: n, horizontal, east_boundary, kink_east }
    }

    /// Builds a slice from raw labels; `i = 0` means the terminal slice.
    pub fn from_parts(
        n: usize,
        kink: (usize, usize),
        horizontal: Vec<Label>,
        east_boundary: Vec<Label>,
        kink_east: Word,
    ) -> Result<Slice, DreamError> {
        let (i, j) = kink;
        let shape_ok = horizontal.len() == n
            && east_boundary.len() == n
            && (if i == 0 { j == n } else { i <= j && j <= n });
        if !shape_ok {
            return Err(DreamError::BadSlice(format!("kink ({i},{j}) with n={n}")));
        }
        Ok(Slice { n, i, j, horizontal, east_boundary, kink_east })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The kink box, or `None` for the terminal slice.
    pub fn kink(&self) -> Option<(usize, usize)> {
        (self.i > 0).then_some((self.i, self.j))
    }

    pub fn is_terminal(&self) -> bool {
        self.i == 0
    }

    /// Horizontal label in column `c` (1-based).
    pub fn horizontal(&self, c: usize) -> Label {
        self.horizontal[c - 1]
    }

    pub fn horizontals(&self) -> &[Label] {
        &self.horizontal
    }

    pub fn kink_east(&self) -> &Word {
        &self.kink_east
    }

    pub fn east_boundary(&self) -> &[Label] {
        &self.east_boundary
    }

    /// Row whose South edge in column `c` belongs to the slice (0 for the top line).
    pub fn height(&self, c: usize) -> usize {
        if self.i == 0 {
            0
        } else if c < self.i {
            c
        } else if c <= self.j {
            self.i
        } else {
            self.i - 1
        }
    }

    /// Strips a multi-letter kink word by virtually placing the forced tiles West of the kink.
    fn reduce(&self) -> Result<Slice, Unviable> {
        if self.i == 0 || self.kink_east.len() == 1 {
            return Ok(self.clone());
        }
        let mut s = self.clone();
        let mut v = self.kink_east.clone();
        let mut c = self.j;
        while c >= self.i {
            if c == self.i {
                return Err("multi-letter word reaches the diagonal");
            }
            let a = s.horizontal[c - 1];
            if !a.is_zero() {
                if a == v.last() {
                    v = v.without_last().ok_or("word emptied")?;
                    s.horizontal[c - 1] = v.last();
                    if v.len() == 1 {
                        s.j = c - 1;
                        s.kink_east = v;
                        return Ok(s);
                    }
                } else if v.contains(a) {
                    return Err("word meets one of its inner labels");
                } else if v.last() == Label::One {
                    return Err("word ending in 1 crosses a nonzero label");
                }
            }
            c -= 1;
        }
        Err("word never reduced")
    }

    /// Rays and dots for a slice whose kink word has one label.
    fn flat_dots(&self) -> Result<Vec<LabeledDot>, Unviable> {
        let (n, i, j) = (self.n, self.i, self.j);
        let kink_label = if i > 0 { self.kink_east.as_single().ok_or("multi-letter kink")? } else { Label::Zero };
        // (row, start column, label) for West-pointing rays
        let mut verticals: Vec<(usize, usize, Label)> =
            (1..i).map(|m| (m, n, self.east_boundary[m - 1])).filter(|v| !v.2.is_zero()).collect();
        if i > 0 && !kink_label.is_zero() {
            verticals.push((i, j, kink_label));
        }
        let mut used = vec![false; n + 1];
        let mut dots = Vec::new();
        verticals.sort_by(|a, b| b.0.cmp(&a.0));
        for &(r, start, label) in &verticals {
            let hit = (1..=start)
                .rev()
                .find(|&c| !used[c] && self.horizontal[c - 1] == label && self.height(c) >= r)
                .ok_or("West-pointing ray finds no partner")?;
            used[hit] = true;
            dots.push(LabeledDot { cell: Cell::new(r, hit), label });
        }
        for c in 1..=n {
            if self.horizontal[c - 1].is_letter() && !used[c] {
                return Err("North-pointing letter ray finds no partner");
            }
        }
        let reach = |d: &LabeledDot| if d.cell.i == i { j } else { n };
        for (x, p) in dots.iter().enumerate() {
            for q in &dots[x + 1..] {
                if p.label != q.label {
                    continue;
                }
                let crosses = |p: &LabeledDot, q: &LabeledDot| {
                    let (r, c) = (p.cell.i, p.cell.j);
                    r <= q.cell.i && q.cell.i <= self.height(c) && q.cell.j <= c && c <= reach(q)
                };
                if crosses(p, q) || crosses(q, p) {
                    return Err("rays with equal labels cross");
                }
            }
        }
        if kink_label == Label::One {
            let c1 = dots.iter().find(|d| d.cell.i == i).map(|d| d.cell.j).ok_or("no 1-dot")?;
            if (c1 + 1..=j).any(|c| self.horizontal[c - 1].is_letter()) {
                return Err("1-ray crosses a letter ray");
            }
        }
        // East-pointing 0 rays, top down, each stopping at the first South-pointing 0 ray.
        let mut east_rows: Vec<(usize, usize)> = Vec::new();
        if i > 0 && kink_label.is_zero() {
            east_rows.push((i, j + 1));
        }
        east_rows.extend((i + 1..=n).map(|r| (r, r)));
        let mut zero_used = vec![false; n + 1];
        for (r, start) in east_rows {
            let hit = (start..=n).find(|&c| {
                !zero_used[c] && self.horizontal[c - 1].is_zero() && self.height(c) < r && r <= c
            });
            if let Some(c) = hit {
                zero_used[c] = true;
                dots.push(LabeledDot { cell: Cell::new(r, c), label: Label::Zero });
            }
        }
        if (1..=n).any(|c| self.horizontal[c - 1].is_zero() && !zero_used[c]) {
            return Err("South-pointing 0 ray finds no partner");
        }
        dots.sort_by_key(|d| d.cell.i);
        Ok(dots)
    }

    fn compute_dots(&self) -> Result<SliceDots, Unviable> {
        let dots = self.reduce()?.flat_dots()?;
        let pairs: Vec<(usize, usize)> = dots.iter().map(|d| (d.cell.i, d.cell.j)).collect();
        let perm = PartialPermutation::from_dots(self.n, &pairs).map_err(|_| "dots do not form a partial permutation")?;
        Ok(SliceDots { perm, dots })
    }

    pub fn is_viable(&self) -> bool {
        self.compute_dots().is_ok()
    }

    /// The partial permutation g(s) read off from the rays of the slice.
    pub fn slice_permutation(&self) -> Result<SliceDots, DreamError> {
        self.compute_dots().map_err(|why| DreamError::NotViable(why.to_string()))
    }

    /// The slice after tile `t` is placed at the kink, if the boundary rules allow it.
    pub fn place(&self, t: &Tile) -> Option<Slice> {
        let (i, j) = self.kink()?;
        if t.south != self.horizontal[j - 1] || t.east != self.kink_east {
            return None;
        }
        if i == 1 && !matches!(t.north, Label::Zero | Label::One) {
            return None;
        }
        let mut s = self.clone();
        s.horizontal[j - 1] = t.north;
        if j > i {
            s.j = j - 1;
            s.kink_east = t.west.clone();
        } else {
            if !t.west.is_zero() {
                return None;
            }
            s.i = i - 1;
            s.j = self.n;
            s.kink_east = if s.i == 0 { Word::zero() } else { Word::single(self.east_boundary[s.i - 1]) };
        }
        Some(s)
    }

    /// Labels of the dots of g(s) minimally NW of the kink in columns [i,j], SW to NE,
    /// then 1 if the labels West of the kink end in 1 0...0.
    pub fn fusible_labels(&self, g: &SliceDots) -> Vec<Label> {
        let Some((i, j)) = self.kink() else { return Vec::new() };
        let nw: Vec<Cell> = g.dots.iter().map(|d| d.cell).filter(|c| c.i < i && c.j < j).collect();
        let mut minimal: Vec<Cell> = nw
            .iter()
            .copied()
            .filter(|c| !nw.iter().any(|o| o.i > c.i && o.j > c.j))
            .filter(|c| c.j >= i)
            .collect();
        minimal.sort_by_key(|c| c.j);
        let mut out: Vec<Label> = minimal.iter().filter_map(|&c| g.label_at(c)).collect();
        let west = self.horizontal[i - 1..j - 1].iter().rev().find(|l| !l.is_zero());
        if west == Some(&Label::One) {
            out.push(Label::One);
        }
        out
    }

    /// Tiles allowed by the local rules and `mode`, before checking the viability of the result.
    pub fn candidate_tiles(&self, mode: TheoryMode) -> Vec<Tile> {
        let Some((_, j)) = self.kink() else { return Vec::new() };
        let south = self.horizontal[j - 1];
        let candidates: Vec<Tile> = if !(south.is_zero() && self.kink_east.is_zero()) {
            Tile::forced(south, &self.kink_east).into_iter().collect()
        } else {
            let Ok(g) = self.slice_permutation() else { return Vec::new() };
            let c = self.fusible_labels(&g);
            let mut v = vec![Tile::equivariant()];
            for subset in sublists(c.len()) {
                if let Ok(w) = Word::new(subset.iter().map(|&x| c[x]).collect()) {
                    v.push(Tile::fusor(w));
                }
            }
            v
        };
        candidates.into_iter().filter(|t| mode.allows(t)).collect()
    }

    /// Every tile the slice admits in `mode`, with the slice each produces, in canonical order.
    pub fn admitted_tiles(&self, mode: TheoryMode) -> Vec<(Tile, Slice)> {
        self.candidate_tiles(mode)
            .into_iter()
            .filter_map(|t| {
                let s = self.place(&t)?;
                s.is_viable().then_some((t, s))
            })
            .collect()
    }

    /// True if the kink's South and East labels are both 0.
    pub fn is_branching(&self) -> bool {
        self.kink().is_some_and(|(_, j)| self.horizontal[j - 1].is_zero() && self.kink_east.is_zero())
    }
}

/// Nonempty index sublists of `0..len` in lexicographic order.
fn sublists(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for x in start..len {
            cur.push(x);
            out.push(cur.clone());
            rec(x + 1, len, cur, out);
            cur.pop();
        }
    }
    rec(0, len, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kink ({},{}) south [", self.i, self.j)?;
        for (c, l) in self.horizontal.iter().enumerate() {
            if c > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}@{}", self.height(c + 1))?;
        }
        write!(f, "] east [")?;
        for m in 1..self.i {
            write!(f, "{} ", self.east_boundary[m - 1])?;
        }
        write!(f, "| {}]", self.kink_east)
    }
}
