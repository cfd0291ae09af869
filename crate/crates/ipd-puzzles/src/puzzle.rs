use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::PuzzleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PuzzleLabel {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    R,
}

use PuzzleLabel::{One, Zero, R};

impl PuzzleLabel {
    pub const ALL: [PuzzleLabel; 3] = [Zero, One, R];

    pub fn from_bit(b: bool) -> PuzzleLabel {
        if b {
            One
        } else {
            Zero
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Zero => '0',
            One => '1',
            R => 'R',
        }
    }
}

impl fmt::Display for PuzzleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Clockwise edge labels of a unit triangle are allowed when all equal 0, all
/// equal 1, or a rotation of (1, 0, R).
pub fn triangle_ok(a: PuzzleLabel, b: PuzzleLabel, c: PuzzleLabel) -> bool {
    matches!((a, b, c), (Zero, Zero, Zero) | (One, One, One) | (One, Zero, R) | (Zero, R, One) | (R, One, Zero))
}

/// The three sides of a puzzle as 0/1 words, each read left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PuzzleBoundary {
    pub nw: Vec<bool>,
    pub ne: Vec<bool>,
    pub s: Vec<bool>,
}

fn parse_word(s: &str) -> Result<Vec<bool>, PuzzleError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(PuzzleError::BadBoundary(format!("'{s}' is not a 0/1 word"))),
        })
        .collect()
}

fn word_string(w: &[bool]) -> String {
    w.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl PuzzleBoundary {
    pub fn new(nw: Vec<bool>, ne: Vec<bool>, s: Vec<bool>) -> Result<PuzzleBoundary, PuzzleError> {
        let n = nw.len();
        if n == 0 || ne.len() != n || s.len() != n {
            return Err(PuzzleError::BadBoundary("sides must have the same positive length".into()));
        }
        let ones = |w: &[bool]| w.iter().filter(|&&b| b).count();
        if ones(&nw) != ones(&ne) || ones(&ne) != ones(&s) {
            return Err(PuzzleError::BadBoundary("sides carry different numbers of 1s".into()));
        }
        Ok(PuzzleBoundary { nw, ne, s })
    }

    pub fn parse(nw: &str, ne: &str, s: &str) -> Result<PuzzleBoundary, PuzzleError> {
        PuzzleBoundary::new(parse_word(nw)?, parse_word(ne)?, parse_word(s)?)
    }

    pub fn n(&self) -> usize {
        self.nw.len()
    }

    pub fn k(&self) -> usize {
        self.nw.iter().filter(|&&b| b).count()
    }

    /// The boundary of the puzzle turned a third of a turn clockwise.
    pub fn rotated(&self) -> PuzzleBoundary {
        let rev = |w: &[bool]| w.iter().rev().copied().collect::<Vec<_>>();
        PuzzleBoundary { nw: rev(&self.s), ne: self.nw.clone(), s: rev(&self.ne) }
    }
}

impl fmt::Display for PuzzleBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nw={} ne={} s={}", word_string(&self.nw), word_string(&self.ne), word_string(&self.s))
    }
}

impl FromStr for PuzzleBoundary {
    type Err = PuzzleError;

    /// `"nw/ne/s"`, e.g. `"0101/0101/0011"`.
    fn from_str(s: &str) -> Result<Self, PuzzleError> {
        let parts: Vec<&str> = s.split('/').collect();
        match parts.as_slice() {
            [a, b, c] => PuzzleBoundary::parse(a, b, c),
            _ => Err(PuzzleError::BadBoundary(format!("expected nw/ne/s, got '{s}'"))),
        }
    }
}

pub(crate) fn index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * (2 * n + 2 - i) / 2 + (j - i)
}

/// A puzzle drawn on the sheared grid: the unit rhombus made of an up triangle
/// over a down triangle becomes the square `(i, j)`, `i < j`; the up triangles
/// along the bottom side become the squares `(i, i)`. The NW side is the top
/// edge, the NE side the right edge, and the S side the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Puzzle {
    n: usize,
    /// Top edge of each square (the up triangle's left edge).
    north: Vec<PuzzleLabel>,
    /// Right edge of each square (the up triangle's right edge).
    east: Vec<PuzzleLabel>,
    /// Shared horizontal edge of the two triangles; `None` for the equivariant piece.
    diag: Vec<Option<PuzzleLabel>>,
}

impl Puzzle {
    pub fn from_parts(
        n: usize,
        north: Vec<PuzzleLabel>,
        east: Vec<PuzzleLabel>,
        diag: Vec<Option<PuzzleLabel>>,
    ) -> Result<Puzzle, PuzzleError> {
        let size = n * (n + 1) / 2;
        if n == 0 || north.len() != size || east.len() != size || diag.len() != size {
            return Err(PuzzleError::BadPuzzle(format!("wrong number of edges for n={n}")));
        }
        let p = Puzzle { n, north, east, diag };
        p.check()?;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn north(&self, i: usize, j: usize) -> PuzzleLabel {
        self.north[index(self.n, i, j)]
    }

    pub fn east(&self, i: usize, j: usize) -> PuzzleLabel {
        self.east[index(self.n, i, j)]
    }

    /// Left edge of the down triangle, for `i < j`.
    pub fn west(&self, i: usize, j: usize) -> PuzzleLabel {
        self.east(i, j - 1)
    }

    /// Right edge of the down triangle, for `i < j`.
    pub fn south(&self, i: usize, j: usize) -> PuzzleLabel {
        self.north(i + 1, j)
    }

    pub fn diag(&self, i: usize, j: usize) -> Option<PuzzleLabel> {
        self.diag[index(self.n, i, j)]
    }

    pub fn is_equivariant_piece(&self, i: usize, j: usize) -> bool {
        i < j && self.diag(i, j).is_none()
    }

    pub fn equivariant_positions(&self) -> Vec<(usize, usize)> {
        self.cells().filter(|&(i, j)| self.is_equivariant_piece(i, j)).collect()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (i..=n).map(move |j| (i, j)))
    }

    pub fn boundary(&self) -> PuzzleBoundary {
        let n = self.n;
        let bit = |l: PuzzleLabel| l == One;
        PuzzleBoundary {
            nw: (1..=n).map(|j| bit(self.north(1, j))).collect(),
            ne: (1..=n).map(|i| bit(self.east(i, n))).collect(),
            s: (1..=n).map(|i| self.diag(i, i).is_some_and(bit)).collect(),
        }
    }

    fn check(&self) -> Result<(), PuzzleError> {
        let n = self.n;
        let bad = |what: String| Err(PuzzleError::BadPuzzle(what));
        for j in 1..=n {
            if self.north(1, j) == R || self.east(j, n) == R || self.diag(j, j).is_none_or(|d| d == R) {
                return bad(format!("R or a rhombus on the boundary near {j}"));
            }
        }
        for (i, j) in self.cells() {
            match self.diag(i, j) {
                Some(d) => {
                    if !triangle_ok(self.north(i, j), self.east(i, j), d) {
                        return bad(format!("up triangle at ({i},{j})"));
                    }
                    if i < j && !triangle_ok(d, self.south(i, j), self.west(i, j)) {
                        return bad(format!("down triangle at ({i},{j})"));
                    }
                }
                None => {
                    let labels = (self.north(i, j), self.east(i, j), self.west(i, j), self.south(i, j));
                    if labels != (Zero, One, One, Zero) {
                        return bad(format!("equivariant piece at ({i},{j})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Row by row: each square as `N/E/D` (with `*` for the equivariant piece).
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            out.push_str(&" ".repeat(6 * (i - 1)));
            let cells: Vec<String> = (i..=self.n)
                .map(|j| {
                    let d = self.diag(i, j).map_or('*', PuzzleLabel::as_char);
                    format!("{}{}{}", self.north(i, j), d, self.east(i, j))
                })
                .collect();
            out.push_str(&cells.join("   "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Puzzle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_ascii())
    }
}
