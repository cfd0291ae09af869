use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use ipd_core::{BoundedAffinePermutation, Cell, Partition, PartialPermutation};
use serde::{Deserialize, Serialize};

use crate::{DreamError, Label, Tile, TileKind, Word};

/// A tiling of the upper triangle of an n x n grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PipeDream {
    n: usize,
    tiles: Vec<Tile>,
}

pub(crate) fn index(n: usize, i: usize, j: usize) -> usize {
    // rows 1..i-1 hold n, n-1, ... tiles
    (i - 1) * (2 * n + 2 - i) / 2 + (j - i)
}

/// Where a pipe leaves the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    South(usize),
    West(usize),
    North(usize),
    East(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipe {
    pub start: End,
    pub end: End,
    pub label: Label,
    /// Tiles passed through, in order.
    pub path: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipeSystem {
    pub pipes: Vec<Pipe>,
    /// Crossing count for each pair of pipe indices `(a, b)`, `a < b`.
    pub crossings: BTreeMap<(usize, usize), usize>,
    /// The pipe on the East edge of each tile.
    pub east_edge: BTreeMap<Cell, usize>,
    /// The pipe entering each row from the West boundary.
    pub west_edge: BTreeMap<usize, usize>,
}

impl PipeSystem {
    pub fn crossings_between(&self, a: usize, b: usize) -> usize {
        let key = if a < b { (a, b) } else { (b, a) };
        self.crossings.get(&key).copied().unwrap_or(0)
    }

    pub fn pipe_with_label(&self, l: Label) -> Vec<usize> {
        (0..self.pipes.len()).filter(|&p| self.pipes[p].label == l).collect()
    }
}

impl PipeDream {
    /// Tiles listed row by row, each row from the diagonal East.
    pub fn new(n: usize, tiles: Vec<Tile>) -> Result<PipeDream, DreamError> {
        if n == 0 || tiles.len() != n * (n + 1) / 2 {
            return Err(DreamError::BadDream(format!("{} tiles for n={n}", tiles.len())));
        }
        Ok(PipeDream { n, tiles })
    }

    /// Builds a dream from `(cell, tile)` pairs covering the triangle once each.
    pub fn from_cells(n: usize, placed: &[(Cell, Tile)]) -> Result<PipeDream, DreamError> {
        let mut slots: Vec<Option<Tile>> = vec![None; n * (n + 1) / 2];
        for (cell, t) in placed {
            if cell.i == 0 || cell.i > cell.j || cell.j > n {
                return Err(DreamError::BadDream(format!("cell {cell:?} outside the triangle")));
            }
            let slot = &mut slots[index(n, cell.i, cell.j)];
            if slot.is_some() {
                return Err(DreamError::BadDream(format!("cell {cell:?} tiled twice")));
            }
            *slot = Some(t.clone());
        }
        let tiles = slots
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| DreamError::BadDream("untiled cell".to_string()))?;
        PipeDream::new(n, tiles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tile(&self, i: usize, j: usize) -> &Tile {
        &self.tiles[index(self.n, i, j)]
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, &Tile)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (i..=n).map(move |j| (Cell::new(i, j), self.tile(i, j))))
    }

    pub fn north_boundary(&self) -> Vec<Label> {
        (1..=self.n).map(|j| self.tile(1, j).north).collect()
    }

    pub fn south_boundary(&self) -> Vec<Label> {
        (1..=self.n).map(|c| self.tile(c, c).south).collect()
    }

    pub fn east_boundary(&self) -> Vec<&Word> {
        (1..=self.n).map(|r| &self.tile(r, self.n).east).collect()
    }

    pub fn west_boundary(&self) -> Vec<&Word> {
        (1..=self.n).map(|r| &self.tile(r, r).west).collect()
    }

    /// The partial permutation read from letters on the South and East boundary.
    pub fn partial_permutation(&self) -> Result<PartialPermutation, DreamError> {
        let mut south: BTreeMap<Label, usize> = BTreeMap::new();
        for (c, l) in self.south_boundary().into_iter().enumerate() {
            if l.is_letter() && south.insert(l, c + 1).is_some() {
                return Err(DreamError::BadDream(format!("letter {l} twice on the South boundary")));
            }
        }
        let mut dots = Vec::new();
        for (r, w) in self.east_boundary().into_iter().enumerate() {
            let l = w.as_single().ok_or_else(|| DreamError::BadDream("word on the East boundary".into()))?;
            if l.is_letter() {
                let c = south.remove(&l).ok_or_else(|| DreamError::BadDream(format!("letter {l} only on East")))?;
                dots.push((r + 1, c));
            }
        }
        if let Some(l) = south.keys().next() {
            return Err(DreamError::BadDream(format!("letter {l} only on South")));
        }
        PartialPermutation::from_dots(self.n, &dots).map_err(|e| DreamError::BadDream(e.to_string()))
    }

    /// lambda_m = number of 0s right of the m-th 1 on the North boundary.
    pub fn lambda(&self) -> Partition {
        let word: Vec<bool> = self.north_boundary().iter().map(|&l| l == Label::One).collect();
        Partition::from_word(&word)
    }

    pub fn fusing(&self) -> usize {
        self.tiles.iter().map(Tile::fused_count).sum()
    }

    pub fn equivariant_positions(&self) -> Vec<Cell> {
        self.cells().filter(|(_, t)| t.kind() == Some(TileKind::Equivariant)).map(|(c, _)| c).collect()
    }

    /// Tiles with 0 on both South and East, excluding the all-0 tile.
    pub fn fusor_positions(&self) -> Vec<Cell> {
        self.cells().filter(|(_, t)| t.kind() == Some(TileKind::Fusor)).map(|(c, _)| c).collect()
    }

    pub fn count_kind(&self, kind: TileKind) -> usize {
        self.tiles.iter().filter(|t| t.kind() == Some(kind)).count()
    }

    /// dim of the interval positroid variety of f(P).
    pub fn variety_dim(&self) -> Result<usize, DreamError> {
        Ok(BoundedAffinePermutation::from_partial(&self.partial_permutation()?).dim())
    }

    /// Follows every pipe, erasing all but the last label of each edge.
    pub fn pipes(&self) -> Result<PipeSystem, DreamError> {
        let n = self.n;
        let mut starts: Vec<(End, usize, usize, bool)> = Vec::new();
        for c in 1..=n {
            starts.push((End::South(c), c, c, true));
        }
        for r in 1..=n {
            starts.push((End::West(r), r, r, false));
        }
        let mut pipes = Vec::new();
        let mut at_crossing: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        let mut east_edge = BTreeMap::new();
        let mut west_edge = BTreeMap::new();
        for (start, mut i, mut j, mut from_south) in starts {
            if let End::West(r) = start {
                west_edge.insert(r, pipes.len());
            }
            let first = self.tile(i, j);
            let label = if from_south { first.south } else { first.west.last() };
            let mut path = Vec::new();
            let end = loop {
                let t = self.tile(i, j);
                let kind = t.kind().ok_or_else(|| DreamError::BadDream(format!("no tile fits at ({i},{j}): {t}")))?;
                let here = if from_south { t.south } else { t.west.last() };
                if here != label {
                    return Err(DreamError::BadDream(format!("pipe label changes at ({i},{j})")));
                }
                path.push(Cell::new(i, j));
                let straight = kind == TileKind::Crossing;
                if straight {
                    at_crossing.entry(Cell::new(i, j)).or_default().push(pipes.len());
                }
                let go_north = from_south == straight;
                let out = if go_north { t.north } else { t.east.last() };
                if out != label {
                    return Err(DreamError::BadDream(format!("pipe label changes inside ({i},{j})")));
                }
                if go_north {
                    if i == 1 {
                        break End::North(j);
                    }
                    i -= 1;
                    from_south = true;
                } else {
                    east_edge.insert(Cell::new(i, j), pipes.len());
                    if j == n {
                        break End::East(i);
                    }
                    j += 1;
                    from_south = false;
                }
            };
            pipes.push(Pipe { start, end, label, path });
        }
        let mut crossings = BTreeMap::new();
        for (cell, ps) in at_crossing {
            let [a, b] = ps[..] else {
                return Err(DreamError::BadDream(format!("crossing at {cell:?} not traversed twice")));
            };
            *crossings.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        Ok(PipeSystem { pipes, crossings, east_edge, west_edge })
    }

    /// All tiling conditions; `west_rule` toggles the requirement that West edges are 0.
    pub fn check(&self, west_rule: bool) -> Result<(), DreamError> {
        let n = self.n;
        let bad = |msg: String| Err(DreamError::BadDream(msg));
        for (cell, t) in self.cells() {
            if t.kind().is_none() {
                return bad(format!("no tile fits at {cell:?}: {t}"));
            }
            if cell.i > 1 && self.tile(cell.i - 1, cell.j).south != t.north {
                return bad(format!("North edge mismatch at {cell:?}"));
            }
            if cell.j > cell.i && self.tile(cell.i, cell.j - 1).east != t.west {
                return bad(format!("West edge mismatch at {cell:?}"));
            }
        }
        for r in 1..=n {
            let e = &self.tile(r, n).east;
            if e.len() != 1 || e.last() == Label::One {
                return bad(format!("East boundary of row {r} is {e}"));
            }
            if self.tile(r, r).south.is_zero() {
                return bad(format!("0 on the South boundary of column {r}"));
            }
            if west_rule && !self.tile(r, r).west.is_zero() {
                return bad(format!("West boundary of row {r} is not 0"));
            }
            if !matches!(self.tile(1, r).north, Label::Zero | Label::One) {
                return bad(format!("letter on the North boundary of column {r}"));
            }
        }
        let sys = self.pipes()?;
        for (&(a, b), &count) in &sys.crossings {
            let (la, lb) = (sys.pipes[a].label, sys.pipes[b].label);
            if la == lb {
                return bad(format!("two {la} pipes cross"));
            }
            if la.is_lettered() && lb.is_lettered() && count > 1 {
                return bad(format!("{la} and {lb} pipes cross {count} times"));
            }
        }
        let mut edge_of: BTreeMap<Label, usize> = BTreeMap::new();
        for (p, pipe) in sys.pipes.iter().enumerate() {
            if pipe.label.is_letter() && edge_of.insert(pipe.label, p).is_some() {
                return bad(format!("two pipes labeled {}", pipe.label));
            }
        }
        let mut words: BTreeSet<Vec<usize>> = BTreeSet::new();
        let edges = self
            .cells()
            .map(|(c, t)| (&t.east, sys.east_edge[&c]))
            .chain((1..=n).map(|r| (&self.tile(r, r).west, sys.west_edge[&r])));
        for (w, own) in edges {
            if w.len() < 2 {
                continue;
            }
            let mut members = vec![own];
            for l in &w.labels()[..w.len() - 1] {
                match edge_of.get(l) {
                    Some(&p) => members.push(p),
                    None => return bad(format!("no pipe carries hidden label {l}")),
                }
            }
            members.sort_unstable();
            words.insert(members);
        }
        for members in words {
            for (x, &a) in members.iter().enumerate() {
                for &b in &members[x + 1..] {
                    if sys.crossings_between(a, b) != 1 {
                        return bad(format!(
                            "{} and {} share a word but cross {} times",
                            sys.pipes[a].label,
                            sys.pipes[b].label,
                            sys.crossings_between(a, b)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check(true).is_ok()
    }

    /// One text block: North labels, then per row its West word, tiles and East words.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        let glyph = |t: &Tile| match t.kind() {
            Some(TileKind::Crossing) => '+',
            Some(TileKind::Dot) => '*',
            Some(TileKind::Fusor) => 'f',
            Some(TileKind::Displacer) => 'd',
            Some(TileKind::Equivariant) => 'e',
            None => '?',
        };
        let width = self.tiles.iter().map(|t| t.east.len().max(t.west.len())).max().unwrap_or(1);
        let cell_w = width + 2;
        let pad = |s: String| format!("{s:>w$}", w = width);
        let mut out = String::new();
        let mut line = " ".repeat(width);
        for j in 1..=n {
            line.push_str(&format!("{:>w$}", self.tile(1, j).north.to_string(), w = cell_w));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for i in 1..=n {
            let mut row = " ".repeat((i - 1) * cell_w);
            row.push_str(&pad(self.tile(i, i).west.to_string()));
            for j in i..=n {
                let t = self.tile(i, j);
                row.push(' ');
                row.push(glyph(t));
                row.push_str(&pad(t.east.to_string()));
            }
            out.push_str(row.trim_end());
            out.push('\n');
            let mut below = " ".repeat(width);
            below.push_str(&" ".repeat((i - 1) * cell_w));
            for j in i..=n {
                below.push_str(&format!("{:>w$}", self.tile(i, j).south.to_string(), w = cell_w));
            }
            out.push_str(below.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct TileJson {
    i: usize,
    j: usize,
    south: Label,
    east: Word,
    north: Label,
    west: Word,
}

#[derive(Serialize, Deserialize)]
struct DreamJson {
    n: usize,
    tiles: Vec<TileJson>,
}

impl Serialize for PipeDream {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let tiles = self
            .cells()
            .map(|(c, t)| TileJson {
                i: c.i,
                j: c.j,
                south: t.south,
                east: t.east.clone(),
                north: t.north,
                west: t.west.clone(),
            })
            .collect();
        DreamJson { n: self.n, tiles }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PipeDream {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DreamJson::deserialize(d)?;
        let placed: Vec<(Cell, Tile)> = raw
            .tiles
            .into_iter()
            .map(|t| (Cell::new(t.i, t.j), Tile { south: t.south, east: t.east, north: t.north, west: t.west }))
            .collect();
        PipeDream::from_cells(raw.n, &placed).map_err(serde::de::Error::custom)
    }
}
