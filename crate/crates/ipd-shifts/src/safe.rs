use std::collections::BTreeMap;

use ipd_classes::{expand_pattern, Coefficient, ExpLaurent, SchubertExpansion, YPolynomial};
use ipd_core::{BoundedAffinePermutation, EssentialBox};
use ipd_dreams::TheoryMode;
use serde::Serialize;

use crate::collection::{Collection, ShiftOp};
use crate::matroid::matroid_of_pattern;
use crate::monk::minimal_northwest_dots;
use crate::ShiftError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Safety {
    /// Every essential interval is invariant under the shift.
    Trivial,
    /// `(i+1, j)` is essential and every other essential interval is invariant.
    Nontrivial,
    Unsafe(EssentialBox),
}

fn in_cyclic(n: i64, x: i64, a: i64, b: i64) -> bool {
    (0..=1).any(|t| a <= x + t * n && x + t * n <= b)
}

/// Safety of `sh_{i->j}` for `Π_J`, judged on the essential boxes of the
/// partial permutation of `J` (intervals inside `[1, n]`).
pub fn safety(j: &BoundedAffinePermutation, op: ShiftOp) -> Safety {
    let nn = j.n() as i64;
    let (si, sj) = (op.i as i64, op.j as i64);
    let mut nontrivial = false;
    for e in j.left_half().essential_boxes() {
        let (a, b) = (e.cell.i as i64, e.cell.j as i64);
        if (a, b) == (si + 1, sj) {
            nontrivial = true;
        } else if !in_cyclic(nn, si, a, b) && in_cyclic(nn, sj, a, b) {
            return Safety::Unsafe(e);
        }
    }
    if nontrivial {
        Safety::Nontrivial
    } else {
        Safety::Trivial
    }
}

/// The sweep of a safe shift, the components of the shift, and the
/// intersections of each nonempty set of components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SafeShift {
    pub op: ShiftOp,
    pub trivial: bool,
    pub sweep: BoundedAffinePermutation,
    /// The minimally Northwest dots of the sweep that yield components, by column.
    pub dots: Vec<(i64, i64)>,
    pub components: Vec<BoundedAffinePermutation>,
    /// Keyed by increasing index lists into `components`.
    #[serde(serialize_with = "as_pairs")]
    pub intersections: BTreeMap<Vec<usize>, BoundedAffinePermutation>,
}

fn as_pairs<S: serde::Serializer>(
    m: &BTreeMap<Vec<usize>, BoundedAffinePermutation>,
    s: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        components: &'a [usize],
        pattern: &'a BoundedAffinePermutation,
    }
    s.collect_seq(m.iter().map(|(k, v)| Entry { components: k, pattern: v }))
}

fn set_value(window: &mut [i64], r: i64, v: i64) {
    let nn = window.len() as i64;
    let idx = (r - 1).rem_euclid(nn);
    window[idx as usize] = v - (r - 1 - idx);
}

/// Nonempty index sublists of `0..len`, in lexicographic order.
pub fn sublists(len: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for x in start..len {
            cur.push(x);
            out.push(cur.clone());
            rec(x + 1, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, &mut Vec::new(), &mut out);
    out
}

pub fn safe_shift_components(j: &BoundedAffinePermutation, i: usize, jj: usize) -> Result<SafeShift, ShiftError> {
    let n = j.n();
    if i >= jj || jj > n || i == 0 {
        return Err(ShiftError::BadOp { i, j: jj, n });
    }
    if !j.is_interval() {
        return Err(ShiftError::NotInterval(j.to_string()));
    }
    let op = ShiftOp { i, j: jj };
    match safety(j, op) {
        Safety::Unsafe(e) => Err(ShiftError::Unsafe { i, j: jj, bi: e.cell.i, bj: e.cell.j }),
        Safety::Trivial => Ok(SafeShift {
            op,
            trivial: true,
            sweep: j.clone(),
            dots: Vec::new(),
            components: vec![j.clone()],
            intersections: BTreeMap::from([(vec![0], j.clone())]),
        }),
        Safety::Nontrivial => {
            let (si, sj) = (i as i64, jj as i64);
            let p = j.inverse(sj);
            let sweep = j.swap_rows(si, p).ok_or_else(|| ShiftError::Invalid(format!("sweep of {j} at {op}")))?;
            let dots: Vec<(i64, i64)> = minimal_northwest_dots(&sweep, si, sj)
                .into_iter()
                .filter(|&(r, c)| c >= si && sweep.swap_rows(si, r).is_some())
                .collect();
            let components = dots.iter().map(|&(r, _)| sweep.swap_rows(si, r).expect("filtered")).collect();
            let mut intersections = BTreeMap::new();
            for s in sublists(dots.len()) {
                let mut window = sweep.window().to_vec();
                set_value(&mut window, si, dots[s[0]].1);
                for w in s.windows(2) {
                    set_value(&mut window, dots[w[0]].0, dots[w[1]].1);
                }
                set_value(&mut window, dots[*s.last().expect("nonempty")].0, sj);
                let pattern = BoundedAffinePermutation::new(window)
                    .map_err(|e| ShiftError::Invalid(format!("intersection {s:?} of {j} at {op}: {e}")))?;
                intersections.insert(s, pattern);
            }
            Ok(SafeShift { op, trivial: false, sweep, dots, components, intersections })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TconvexReport {
    pub shifted: Collection,
    pub components: Collection,
    pub missing: Collection,
    pub extra: Collection,
}

impl TconvexReport {
    pub fn holds(&self) -> bool {
        self.shifted == self.components
    }
}

/// Compares the combinatorial shift of the fixed points of `Π_J` with the fixed
/// points of the union of the shift's components.
pub fn tconvex_fixed_point_check(j: &BoundedAffinePermutation, i: usize, jj: usize) -> Result<TconvexReport, ShiftError> {
    let s = safe_shift_components(j, i, jj)?;
    let shifted = s.op.collection(&matroid_of_pattern(j));
    let components = s
        .components
        .iter()
        .map(matroid_of_pattern)
        .fold(Collection::empty(j.n(), j.k()), |acc, c| acc.union(&c));
    let diff = |a: &Collection, b: &Collection| Collection { bases: a.bases.difference(&b.bases).cloned().collect(), ..a.clone() };
    Ok(TconvexReport { missing: diff(&shifted, &components), extra: diff(&components, &shifted), shifted, components })
}

/// Both sides of a class identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub lhs: SchubertExpansion,
    pub rhs: SchubertExpansion,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs.terms == self.rhs.terms
    }
}

/// `[Π_J] = Σ [component]` in H.
pub fn transition_identity(j: &BoundedAffinePermutation, i: usize, jj: usize) -> Result<IdentityCheck, ShiftError> {
    let s = safe_shift_components(j, i, jj)?;
    let lhs = expand_pattern(j, TheoryMode::H)?;
    let mut rhs = SchubertExpansion::zero(TheoryMode::H, lhs.k, lhs.n);
    for c in &s.components {
        rhs = rhs.add_scaled(&expand_pattern(c, TheoryMode::H)?, 1)?;
    }
    Ok(IdentityCheck { lhs, rhs })
}

/// `[Π_J] = (y_i - y_j)[sweep] + Σ [component]` in H_T, for a nontrivially safe shift.
pub fn equivariant_transition_identity(
    j: &BoundedAffinePermutation,
    i: usize,
    jj: usize,
) -> Result<IdentityCheck, ShiftError> {
    let s = safe_shift_components(j, i, jj)?;
    let lhs = expand_pattern(j, TheoryMode::HT)?;
    if s.trivial {
        return Ok(IdentityCheck { rhs: lhs.clone(), lhs });
    }
    let sweep = expand_pattern(&s.sweep, TheoryMode::HT)?;
    let mut rhs = times(&sweep, &Coefficient::Poly(YPolynomial::root(i, jj)));
    for c in &s.components {
        rhs = rhs.add_scaled(&expand_pattern(c, TheoryMode::HT)?, 1)?;
    }
    Ok(IdentityCheck { lhs, rhs })
}

fn times(e: &SchubertExpansion, c: &Coefficient) -> SchubertExpansion {
    let mut out = SchubertExpansion::zero(e.mode, e.k, e.n);
    for (lambda, a) in &e.terms {
        let prod = match (a, c) {
            (Coefficient::Poly(p), Coefficient::Poly(q)) => Coefficient::Poly(p * q),
            (Coefficient::Laurent(p), Coefficient::Laurent(q)) => Coefficient::Laurent(p * q),
            (Coefficient::Int(p), Coefficient::Int(q)) => Coefficient::Int(p * q),
            _ => panic!("coefficient kinds differ"),
        };
        if !prod.is_zero() {
            out.terms.insert(lambda.clone(), prod);
        }
    }
    out
}

/// `[Π_J] = exp(y_i - y_j) [shift] + (1 - exp(y_i - y_j)) [sweep]` in K_T, where
/// the shift's class is assembled by inclusion-exclusion over its components.
pub fn equivariant_k_shift_identity(
    j: &BoundedAffinePermutation,
    i: usize,
    jj: usize,
) -> Result<IdentityCheck, ShiftError> {
    let s = safe_shift_components(j, i, jj)?;
    let lhs = expand_pattern(j, TheoryMode::KT)?;
    if s.trivial {
        return Ok(IdentityCheck { rhs: lhs.clone(), lhs });
    }
    let shift = inclusion_exclusion(j, i, jj, TheoryMode::KT)?.rhs;
    let sweep = expand_pattern(&s.sweep, TheoryMode::KT)?;
    let e = ExpLaurent::exp_root(i, jj);
    let rhs = times(&shift, &Coefficient::Laurent(e.clone()))
        .add_scaled(&times(&sweep, &Coefficient::Laurent(&ExpLaurent::one() - &e)), 1)?;
    Ok(IdentityCheck { lhs, rhs })
}

/// `[Π_J] = Σ_{S ≠ ∅} (-1)^{|S|-1} [∩_S components]` in `mode` (H or K).
pub fn inclusion_exclusion(
    j: &BoundedAffinePermutation,
    i: usize,
    jj: usize,
    mode: TheoryMode,
) -> Result<IdentityCheck, ShiftError> {
    let s = safe_shift_components(j, i, jj)?;
    let lhs = expand_pattern(j, mode)?;
    let mut rhs = SchubertExpansion::zero(mode, lhs.k, lhs.n);
    for (set, p) in &s.intersections {
        let sign = if set.len() % 2 == 1 { 1 } else { -1 };
        rhs = rhs.add_scaled(&expand_pattern(p, mode)?, sign)?;
    }
    Ok(IdentityCheck { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure() -> BoundedAffinePermutation {
        BoundedAffinePermutation::new(vec![2, 5, 4, 7]).unwrap()
    }

    #[test]
    fn figure_branch() {
        let s = safe_shift_components(&figure(), 2, 4).unwrap();
        assert!(!s.trivial);
        assert_eq!(s.sweep.window(), &[2, 4, 5, 7]);
        assert_eq!(s.dots, vec![(1, 2), (0, 3)]);
        let windows: Vec<&[i64]> = s.components.iter().map(|p| p.window()).collect();
        assert_eq!(windows, vec![&[4, 2, 5, 7][..], &[2, 3, 5, 8][..]]);
        assert_eq!(s.intersections[&vec![0, 1]].window(), &[3, 2, 5, 8]);
    }

    #[test]
    fn sublist_order() {
        assert_eq!(sublists(2), vec![vec![0], vec![0, 1], vec![1]]);
        assert_eq!(sublists(3).len(), 7);
        assert!(sublists(0).is_empty());
    }

    #[test]
    fn bad_ops() {
        assert!(matches!(safe_shift_components(&figure(), 3, 2), Err(ShiftError::BadOp { .. })));
        assert!(matches!(safe_shift_components(&figure(), 1, 5), Err(ShiftError::BadOp { .. })));
    }
}
