use ipd_core::{BoundedAffinePermutation, PartialPermutation};

use crate::collection::{k_subsets, Collection, Subset};

/// Maximum matching of intervals `[a, b]` into the points of `s`, by augmenting paths.
/// Returns the matched point for each interval, when every interval is matched.
pub fn interval_matching(intervals: &[(usize, usize)], s: &[usize]) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; s.len()];
    fn augment(
        x: usize,
        intervals: &[(usize, usize)],
        s: &[usize],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        let (a, b) = intervals[x];
        for (p, &m) in s.iter().enumerate() {
            if m < a || m > b || seen[p] {
                continue;
            }
            seen[p] = true;
            if owner[p].is_none_or(|y| augment(y, intervals, s, owner, seen)) {
                owner[p] = Some(x);
                return true;
            }
        }
        false
    }
    for x in 0..intervals.len() {
        let mut seen = vec![false; s.len()];
        if !augment(x, intervals, s, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut out = vec![0; intervals.len()];
    for (p, o) in owner.iter().enumerate() {
        if let Some(x) = o {
            out[*x] = s[p];
        }
    }
    Some(out)
}

/// Bases `B` whose complement admits a matching sending each dot `(a, b)` of `f`
/// into `[a, b]`.
pub fn matroid_of(f: &PartialPermutation) -> Collection {
    let n = f.n();
    let dots = f.dots();
    let bases = k_subsets(n, f.k())
        .into_iter()
        .filter(|b| interval_matching(&dots, &complement(n, b)).is_some())
        .collect();
    Collection { n, k: f.k(), bases }
}

/// Bases `B` satisfying `|B ∩ [a, b]| <= rank_J(a, b)` on every cyclic interval.
pub fn matroid_of_pattern(j: &BoundedAffinePermutation) -> Collection {
    let n = j.n();
    let nn = n as i64;
    let k = j.k();
    let bases = k_subsets(n, k)
        .into_iter()
        .filter(|b| {
            (1..=nn).all(|a| {
                (a..a + nn - 1).all(|e| {
                    let hits = (a..=e).filter(|&c| b.contains(&(((c - 1).rem_euclid(nn)) as usize + 1))).count();
                    hits as i64 <= j.rank(a, e)
                })
            })
        })
        .collect();
    Collection { n, k, bases }
}

pub fn complement(n: usize, b: &[usize]) -> Subset {
    (1..=n).filter(|m| !b.contains(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_matroid() {
        let f = PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).unwrap();
        let m = matroid_of(&f);
        let mut want = Collection::all(4, 2);
        want.bases.remove(&vec![1, 2]);
        want.bases.remove(&vec![3, 4]);
        assert_eq!(m, want);
        assert_eq!(matroid_of_pattern(&BoundedAffinePermutation::from_partial(&f)), want);
    }

    #[test]
    fn extremes() {
        assert_eq!(matroid_of(&PartialPermutation::empty(4)), Collection::all(4, 4));
        let id = matroid_of(&PartialPermutation::identity(3));
        assert_eq!(id.k, 0);
        assert_eq!(id.bases.len(), 1);
        assert!(id.contains(&[]));
    }

    #[test]
    fn matching_needs_room() {
        assert!(interval_matching(&[(1, 2), (1, 2)], &[1, 2]).is_some());
        assert!(interval_matching(&[(1, 2), (1, 2)], &[1, 3]).is_none());
        assert_eq!(interval_matching(&[(2, 3), (1, 2)], &[2, 3]), Some(vec![3, 2]));
    }
}
