use std::collections::BTreeSet;

use ipd_core::{Cell, PartialPermutation};

use crate::{DreamError, Label, PipeDream, Slice, TheoryMode, Tile, Word};

/// Boundary labels for an exhaustive search: South of each (c,c) and East of each (r,n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub south: Vec<Label>,
    pub east: Vec<Label>,
}

impl Boundary {
    pub fn of(f: &PartialPermutation) -> Boundary {
        let s = Slice::initial(f);
        Boundary { south: s.horizontals().to_vec(), east: s.east_boundary().to_vec() }
    }

    fn universe(&self) -> Vec<Label> {
        let mut u: BTreeSet<Label> = self.south.iter().chain(&self.east).copied().filter(|l| l.is_letter()).collect();
        u.insert(Label::One);
        u.into_iter().collect()
    }
}

pub const BRUTE_FORCE_MAX_N: usize = 5;

/// Every dream with the boundary of `f` found by exhaustive tiling, filtered by `mode`.
pub fn brute_force_enumerate(f: &PartialPermutation, mode: TheoryMode) -> Result<Vec<PipeDream>, DreamError> {
    if f.n() > BRUTE_FORCE_MAX_N {
        return Err(DreamError::TooLarge { n: f.n(), max: BRUTE_FORCE_MAX_N });
    }
    let found = brute_force_tilings(&Boundary::of(f), mode, true)?;
    Ok(found.into_iter().filter(|p| p.partial_permutation().as_ref() == Ok(f)).collect())
}

/// Exhaustive search over tilings with the given South and East boundary.
/// With `west_rule` false the West boundary words are unconstrained.
pub fn brute_force_tilings(b: &Boundary, mode: TheoryMode, west_rule: bool) -> Result<Vec<PipeDream>, DreamError> {
    let n = b.south.len();
    if n == 0 || b.east.len() != n {
        return Err(DreamError::BadDream("boundary lengths differ".into()));
    }
    if n > BRUTE_FORCE_MAX_N {
        return Err(DreamError::TooLarge { n, max: BRUTE_FORCE_MAX_N });
    }
    let universe = b.universe();
    let words = all_words(&universe);
    let mut search = Search { n, b, mode, west_rule, universe, words, placed: Vec::new(), out: Vec::new() };
    search.fill(1, 1);
    Ok(search.out)
}

struct Search<'a> {
    n: usize,
    b: &'a Boundary,
    mode: TheoryMode,
    west_rule: bool,
    universe: Vec<Label>,
    words: Vec<Word>,
    placed: Vec<(Cell, Tile)>,
    out: Vec<PipeDream>,
}

impl Search<'_> {
    fn tile_at(&self, i: usize, j: usize) -> &Tile {
        // tiles are placed in reading order, so the position is the triangle index
        &self.placed[crate::dream::index(self.n, i, j)].1
    }

    fn fill(&mut self, i: usize, j: usize) {
        if i > self.n {
            if let Ok(p) = PipeDream::from_cells(self.n, &self.placed) {
                if p.check(self.west_rule).is_ok() {
                    self.out.push(p);
                }
            }
            return;
        }
        let norths: Vec<Label> = if i == 1 { vec![Label::Zero, Label::One] } else { vec![self.tile_at(i - 1, j).south] };
        let wests: Vec<Word> = if j > i {
            vec![self.tile_at(i, j - 1).east.clone()]
        } else if self.west_rule {
            vec![Word::zero()]
        } else {
            self.words.clone()
        };
        let (ni, nj) = if j == self.n { (i + 1, i + 1) } else { (i, j + 1) };
        for north in &norths {
            for west in &wests {
                for t in self.tiles_with(*north, west) {
                    if i == j && t.south != self.b.south[j - 1] {
                        continue;
                    }
                    if j == self.n && t.east != Word::single(self.b.east[i - 1]) {
                        continue;
                    }
                    if !self.mode.allows(&t) {
                        continue;
                    }
                    self.placed.push((Cell::new(i, j), t));
                    self.fill(ni, nj);
                    self.placed.pop();
                }
            }
        }
    }

    /// Every tile with the given North and West labels.
    fn tiles_with(&self, north: Label, west: &Word) -> Vec<Tile> {
        let mut out = Vec::new();
        let cross = Tile::crossing(north, west.clone());
        if cross.kind() == Some(crate::TileKind::Crossing) {
            out.push(cross);
        }
        if north.is_zero() && west.is_zero() {
            out.push(Tile::equivariant());
            out.extend(self.universe.iter().map(|&b| Tile::dot(b)));
        }
        if !west.is_zero() && west.last() == north {
            out.push(Tile::fusor(west.clone()));
            out.extend(self.universe.iter().filter_map(|&c| Tile::displacer(west.clone(), c)));
        }
        out
    }
}

/// `[0]` and every word of distinct labels from `universe` with any 1 last.
fn all_words(universe: &[Label]) -> Vec<Word> {
    let mut out = vec![Word::zero()];
    fn rec(universe: &[Label], cur: &mut Vec<Label>, out: &mut Vec<Word>) {
        for &l in universe {
            if cur.contains(&l) || cur.last() == Some(&Label::One) {
                continue;
            }
            cur.push(l);
            if let Ok(w) = Word::new(cur.clone()) {
                out.push(w);
            }
            rec(universe, cur, out);
            cur.pop();
        }
    }
    rec(universe, &mut Vec::new(), &mut out);
    out
}
