use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{DreamError, Label, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TileKind {
    Crossing,
    Dot,
    Fusor,
    Displacer,
    Equivariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    pub south: Label,
    pub east: Word,
    pub north: Label,
    pub west: Word,
}

impl Tile {
    pub fn crossing(a: Label, v: Word) -> Tile {
        Tile { south: a, east: v.clone(), north: a, west: v }
    }

    pub fn dot(b: Label) -> Tile {
        Tile { south: b, east: Word::single(b), north: Label::Zero, west: Word::zero() }
    }

    pub fn equivariant() -> Tile {
        Tile { south: Label::Zero, east: Word::zero(), north: Label::Zero, west: Word::zero() }
    }

    pub fn fusor(w: Word) -> Tile {
        Tile { south: Label::Zero, east: Word::zero(), north: w.last(), west: w }
    }

    /// East edge `w·c`, South `c`.
    pub fn displacer(w: Word, c: Label) -> Option<Tile> {
        let east = w.pushed(c)?;
        Some(Tile { south: c, east, north: w.last(), west: w })
    }

    /// The kind of tile, or `None` if the four labels fit no tile.
    pub fn kind(&self) -> Option<TileKind> {
        let Tile { south, east, north, west } = self;
        if south.is_zero() && east.is_zero() {
            if north.is_zero() && west.is_zero() {
                return Some(TileKind::Equivariant);
            }
            if !west.is_zero() && *north == west.last() {
                return Some(TileKind::Fusor);
            }
            return None;
        }
        if north == south && east == west {
            let ok = !east.contains(*south) && (!east.contains(Label::One) || south.is_zero());
            return ok.then_some(TileKind::Crossing);
        }
        if !south.is_zero() && east.as_single() == Some(*south) && north.is_zero() && west.is_zero() {
            return Some(TileKind::Dot);
        }
        if east.len() >= 2 && east.last() == *south && east.without_last().as_ref() == Some(west) && *north == west.last()
        {
            return Some(TileKind::Displacer);
        }
        None
    }

    /// Number of strands a fusor terminates beyond the first.
    pub fn fused_count(&self) -> usize {
        match self.kind() {
            Some(TileKind::Fusor) => self.west.len() - 1,
            _ => 0,
        }
    }

    /// The unique tile with these South and East labels, unless both are 0 or none fits.
    pub fn forced(south: Label, east: &Word) -> Option<Tile> {
        if south.is_zero() && east.is_zero() {
            return None;
        }
        if east.as_single() == Some(south) {
            return Some(Tile::dot(south));
        }
        if east.len() >= 2 && east.last() == south {
            return Tile::displacer(east.without_last()?, south);
        }
        let t = Tile::crossing(south, east.clone());
        (t.kind() == Some(TileKind::Crossing)).then_some(t)
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[S={} E={} N={} W={}]", self.south, self.east, self.north, self.west)
    }
}

/// Which of the four theories an enumeration computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoryMode {
    H,
    HT,
    K,
    KT,
}

impl TheoryMode {
    pub const ALL: [TheoryMode; 4] = [TheoryMode::H, TheoryMode::HT, TheoryMode::K, TheoryMode::KT];

    pub fn allows_equivariant(self) -> bool {
        matches!(self, TheoryMode::HT | TheoryMode::KT)
    }

    pub fn allows_fusing(self) -> bool {
        matches!(self, TheoryMode::K | TheoryMode::KT)
    }

    pub fn allows(self, t: &Tile) -> bool {
        match t.kind() {
            Some(TileKind::Equivariant) => self.allows_equivariant(),
            Some(TileKind::Fusor) => self.allows_fusing() || t.fused_count() == 0,
            Some(TileKind::Displacer) => self.allows_fusing(),
            Some(_) => true,
            None => false,
        }
    }
}

impl fmt::Display for TheoryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoryMode::H => "H",
            TheoryMode::HT => "HT",
            TheoryMode::K => "K",
            TheoryMode::KT => "KT",
        };
        f.write_str(s)
    }
}

impl FromStr for TheoryMode {
    type Err = DreamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "H" => Ok(TheoryMode::H),
            "HT" => Ok(TheoryMode::HT),
            "K" => Ok(TheoryMode::K),
            "KT" => Ok(TheoryMode::KT),
            _ => Err(DreamError::BadMode(s.to_string())),
        }
    }
}
