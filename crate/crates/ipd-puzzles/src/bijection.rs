use ipd_dreams::{Label, PipeDream, Tile, Word};

use crate::puzzle::{triangle_ok, Puzzle, PuzzleLabel};
use crate::PuzzleError;

use PuzzleLabel::{One, Zero, R};

/// The letter carried by one-letter dreams.
pub const LETTER: Label = Label::Letter(1);

fn horizontal_to_dream(l: PuzzleLabel) -> Label {
    match l {
        Zero => Label::Zero,
        One => Label::One,
        R => LETTER,
    }
}

fn vertical_to_dream(l: PuzzleLabel) -> Label {
    match l {
        R => Label::One,
        One => Label::Zero,
        Zero => LETTER,
    }
}

fn horizontal_to_puzzle(l: Label) -> PuzzleLabel {
    match l {
        Label::Zero => Zero,
        Label::One => One,
        Label::Letter(_) => R,
    }
}

fn vertical_to_puzzle(l: Label) -> PuzzleLabel {
    match l {
        Label::One => R,
        Label::Zero => One,
        Label::Letter(_) => Zero,
    }
}

/// Replaces every letter of the dream by [`LETTER`].
pub fn merge_letters(p: &PipeDream) -> Result<PipeDream, PuzzleError> {
    let merge = |l: Label| if l.is_letter() { LETTER } else { l };
    let tiles = p
        .cells()
        .map(|(_, t)| {
            let word = |w: &Word| Word::new(w.labels().iter().map(|&l| merge(l)).collect());
            Ok(Tile { south: merge(t.south), east: word(&t.east)?, north: merge(t.north), west: word(&t.west)? })
        })
        .collect::<Result<Vec<_>, ipd_dreams::DreamError>>()
        .map_err(|e| PuzzleError::NotOneLetter(e.to_string()))?;
    PipeDream::new(p.n(), tiles).map_err(|e| PuzzleError::NotOneLetter(e.to_string()))
}

fn single(w: &Word, at: (usize, usize)) -> Result<Label, PuzzleError> {
    w.as_single().ok_or_else(|| PuzzleError::NotOneLetter(format!("edge word {w} at {at:?}")))
}

pub fn dream_to_puzzle(p: &PipeDream) -> Result<Puzzle, PuzzleError> {
    let n = p.n();
    let letters: std::collections::BTreeSet<Label> = p
        .cells()
        .flat_map(|(_, t)| {
            let mut v = vec![t.south, t.north];
            v.extend(t.east.labels());
            v.extend(t.west.labels());
            v
        })
        .filter(|l| l.is_letter())
        .collect();
    if letters.len() > 1 {
        return Err(PuzzleError::NotOneLetter(format!("{} letters", letters.len())));
    }
    let (mut north, mut east, mut diag) = (Vec::new(), Vec::new(), Vec::new());
    for (c, t) in p.cells() {
        let (i, j) = (c.i, c.j);
        let nl = horizontal_to_puzzle(t.north);
        let el = vertical_to_puzzle(single(&t.east, (i, j))?);
        let d = if i == j {
            match t.south {
                Label::One => Some(One),
                Label::Letter(_) => Some(Zero),
                Label::Zero => return Err(PuzzleError::BadPuzzle(format!("South 0 on the diagonal at {i}"))),
            }
        } else if t.kind() == Some(ipd_dreams::TileKind::Equivariant) {
            None
        } else {
            let d = PuzzleLabel::ALL.into_iter().find(|&d| triangle_ok(nl, el, d));
            Some(d.ok_or_else(|| PuzzleError::BadPuzzle(format!("tile {t} at ({i},{j})")))?)
        };
        north.push(nl);
        east.push(el);
        diag.push(d);
    }
    let z = Puzzle::from_parts(n, north, east, diag)?;
    // labels not stored in the puzzle must still agree
    for (c, t) in p.cells() {
        let (i, j) = (c.i, c.j);
        let west_ok = if i == j {
            t.west.is_zero()
        } else {
            single(&t.west, (i, j))? == vertical_to_dream(z.west(i, j))
        };
        let south_ok = i == j || t.south == horizontal_to_dream(z.south(i, j));
        if !west_ok || !south_ok {
            return Err(PuzzleError::BadPuzzle(format!("tile {t} at ({i},{j}) disagrees with its neighbours")));
        }
    }
    Ok(z)
}

pub fn puzzle_to_dream(z: &Puzzle) -> PipeDream {
    let n = z.n();
    let tiles = z
        .cells()
        .map(|(i, j)| {
            let north = horizontal_to_dream(z.north(i, j));
            let east = Word::single(vertical_to_dream(z.east(i, j)));
            if i == j {
                let south = if z.diag(i, i) == Some(One) { Label::One } else { LETTER };
                Tile { south, east, north, west: Word::zero() }
            } else {
                let south = horizontal_to_dream(z.south(i, j));
                let west = Word::single(vertical_to_dream(z.west(i, j)));
                Tile { south, east, north, west }
            }
        })
        .collect();
    PipeDream::new(n, tiles).expect("one tile per square")
}
