use ipd_classes::YPolynomial;

use crate::puzzle::{index, triangle_ok, Puzzle, PuzzleBoundary, PuzzleLabel};

/// Every puzzle with boundary `b`, with its weight: the product of `y_i - y_j`
/// over equivariant pieces at `(i, j)`. Without `equivariant`, only puzzles
/// without that piece.
pub fn enumerate_puzzles(b: &PuzzleBoundary, equivariant: bool) -> Vec<(Puzzle, YPolynomial)> {
    let n = b.n();
    let size = n * (n + 1) / 2;
    let mut st = State {
        n,
        b,
        equivariant,
        north: vec![PuzzleLabel::Zero; size],
        east: vec![PuzzleLabel::Zero; size],
        diag: vec![None; size],
        out: Vec::new(),
    };
    for j in 1..=n {
        st.north[index(n, 1, j)] = PuzzleLabel::from_bit(b.nw[j - 1]);
    }
    st.fill(1, 1);
    st.out
        .into_iter()
        .map(|p| {
            let w = p.equivariant_positions().into_iter().map(|(i, j)| YPolynomial::root(i, j)).product();
            (p, w)
        })
        .collect()
}

pub fn count_puzzles(b: &PuzzleBoundary, equivariant: bool) -> usize {
    enumerate_puzzles(b, equivariant).len()
}

struct State<'a> {
    n: usize,
    b: &'a PuzzleBoundary,
    equivariant: bool,
    north: Vec<PuzzleLabel>,
    east: Vec<PuzzleLabel>,
    diag: Vec<Option<PuzzleLabel>>,
    out: Vec<Puzzle>,
}

impl State<'_> {
    fn east_choices(&self, i: usize, j: usize) -> Vec<PuzzleLabel> {
        if j == self.n {
            vec![PuzzleLabel::from_bit(self.b.ne[i - 1])]
        } else {
            PuzzleLabel::ALL.to_vec()
        }
    }

    fn fill(&mut self, i: usize, j: usize) {
        let n = self.n;
        if i > n {
            let p = Puzzle::from_parts(n, self.north.clone(), self.east.clone(), self.diag.clone())
                .expect("enumerated puzzles are valid");
            self.out.push(p);
            return;
        }
        let (ni, nj) = if j == n { (i + 1, i + 1) } else { (i, j + 1) };
        let at = index(n, i, j);
        let north = self.north[at];
        if i == j {
            let d = PuzzleLabel::from_bit(self.b.s[i - 1]);
            for e in self.east_choices(i, j) {
                if triangle_ok(north, e, d) {
                    self.east[at] = e;
                    self.diag[at] = Some(d);
                    self.fill(ni, nj);
                }
            }
            return;
        }
        let west = self.east[index(n, i, j - 1)];
        let below = index(n, i + 1, j);
        for e in self.east_choices(i, j) {
            for d in PuzzleLabel::ALL {
                if !triangle_ok(north, e, d) {
                    continue;
                }
                for s in PuzzleLabel::ALL {
                    if triangle_ok(d, s, west) {
                        self.east[at] = e;
                        self.diag[at] = Some(d);
                        self.north[below] = s;
                        self.fill(ni, nj);
                    }
                }
            }
        }
        if self.equivariant && north == PuzzleLabel::Zero && west == PuzzleLabel::One && self.east_choices(i, j).contains(&PuzzleLabel::One) {
            self.east[at] = PuzzleLabel::One;
            self.diag[at] = None;
            self.north[below] = PuzzleLabel::Zero;
            self.fill(ni, nj);
        }
    }
}

/// Every 0/1 word of length `n` with `k` ones, in increasing binary order.
pub fn binary_words(n: usize, k: usize) -> Vec<Vec<bool>> {
    (0u64..1 << n)
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| (0..n).map(|t| b >> (n - 1 - t) & 1 == 1).collect())
        .collect()
}

/// Nonequivariant puzzle counts for every boundary of size `n` with `k` ones per side.
pub fn count_table(n: usize, k: usize) -> Vec<(PuzzleBoundary, usize)> {
    use rayon::prelude::*;
    let words = binary_words(n, k);
    words
        .par_iter()
        .flat_map_iter(|nw| {
            let words = &words;
            words.iter().flat_map(move |ne| {
                words.iter().map(move |s| {
                    let b = PuzzleBoundary { nw: nw.clone(), ne: ne.clone(), s: s.clone() };
                    let c = count_puzzles(&b, false);
                    (b, c)
                })
            })
        })
        .collect()
}
