use ipd_core::{Cell, PartialPermutation};
use rayon::prelude::*;

use crate::{PipeDream, Slice, TheoryMode, Tile};

/// Bookkeeping from one enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub branch_points: usize,
    /// Forced kinks with no tile, or candidate tiles whose slice was not viable.
    pub rejected: usize,
}

impl EnumerationStats {
    fn merge(self, o: EnumerationStats) -> EnumerationStats {
        EnumerationStats { branch_points: self.branch_points + o.branch_points, rejected: self.rejected + o.rejected }
    }
}

/// All dreams for `f` admissible in `mode`, in the canonical order.
pub fn enumerate(f: &PartialPermutation, mode: TheoryMode) -> Vec<PipeDream> {
    enumerate_with_stats(f, mode).0
}

pub fn enumerate_with_stats(f: &PartialPermutation, mode: TheoryMode) -> (Vec<PipeDream>, EnumerationStats) {
    explore(Slice::initial(f), Vec::new(), mode)
}

fn explore(mut s: Slice, mut placed: Vec<(Cell, Tile)>, mode: TheoryMode) -> (Vec<PipeDream>, EnumerationStats) {
    let mut stats = EnumerationStats::default();
    loop {
        let Some((i, j)) = s.kink() else {
            let dream = PipeDream::from_cells(s.n(), &placed).expect("enumeration tiles every cell once");
            return (vec![dream], stats);
        };
        let candidates = s.candidate_tiles(mode);
        let branching = s.is_branching();
        if !branching && candidates.is_empty() {
            stats.rejected += 1;
        }
        let mut next: Vec<(Tile, Slice)> = Vec::with_capacity(candidates.len());
        for t in candidates {
            match s.place(&t).filter(Slice::is_viable) {
                Some(s2) => next.push((t, s2)),
                None => stats.rejected += 1,
            }
        }
        let cell = Cell::new(i, j);
        if branching {
            stats.branch_points += 1;
            let results: Vec<(Vec<PipeDream>, EnumerationStats)> = next
                .into_par_iter()
                .map(|(t, s2)| {
                    let mut p = placed.clone();
                    p.push((cell, t));
                    explore(s2, p, mode)
                })
                .collect();
            let mut dreams = Vec::new();
            for (d, st) in results {
                dreams.extend(d);
                stats = stats.merge(st);
            }
            return (dreams, stats);
        }
        match next.pop() {
            Some((t, s2)) if next.is_empty() => {
                placed.push((cell, t));
                s = s2;
            }
            _ => return (Vec::new(), stats),
        }
    }
}
