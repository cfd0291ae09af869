use std::collections::BTreeSet;

use ipd_core::{BoundedAffinePermutation, Cell, PartialPermutation};
use ipd_dreams::{
    brute_force_tilings, enumerate, Boundary, Label, PipeDream, Slice, SliceDots, TheoryMode, TileKind,
};

fn all_dreams(max_n: usize, mode: TheoryMode) -> Vec<(PartialPermutation, PipeDream)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in PartialPermutation::all(n) {
            for p in enumerate(&f, mode) {
                out.push((f.clone(), p));
            }
        }
    }
    out
}

/// Walks the Vakil order through `p`, handing each slice and the tile placed there to `visit`.
fn replay(f: &PartialPermutation, p: &PipeDream, mut visit: impl FnMut(&Slice, &Slice, Cell)) -> Slice {
    let mut s = Slice::initial(f);
    while let Some((i, j)) = s.kink() {
        let t = p.tile(i, j);
        let admitted = s.admitted_tiles(TheoryMode::KT);
        assert!(admitted.iter().any(|(a, _)| a == t), "tile at ({i},{j}) not admitted");
        let next = s.place(t).unwrap();
        visit(&s, &next, Cell::new(i, j));
        s = next;
    }
    s
}

fn g(s: &Slice) -> SliceDots {
    s.slice_permutation().unwrap()
}

fn sweep(j: &BoundedAffinePermutation, row: usize, col: usize) -> BoundedAffinePermutation {
    let n = j.n() as i64;
    let (row, col) = (row as i64, col as i64);
    let mut w = j.window().to_vec();
    let old = j.apply(row);
    let p = j.inverse(col);
    assert!(p > row);
    w[(row - 1) as usize] = col;
    let p0 = (p - 1).rem_euclid(n) + 1;
    w[(p0 - 1) as usize] = old - (p - p0);
    BoundedAffinePermutation::new(w).unwrap()
}

#[test]
fn every_dream_passes_all_checks() {
    for (f, p) in all_dreams(5, TheoryMode::KT) {
        p.check(true).unwrap_or_else(|e| panic!("{f}: {e}\n{p}"));
        assert_eq!(p.partial_permutation().unwrap(), f);
        let k = f.k();
        assert!(p.lambda().fits(k, f.n() - k));
    }
}

#[test]
fn jordan_curve_law() {
    for (f, p) in all_dreams(5, TheoryMode::KT) {
        let sys = p.pipes().unwrap();
        let letters: Vec<usize> = (0..sys.pipes.len()).filter(|&x| sys.pipes[x].label.is_letter()).collect();
        let dot = |x: usize| {
            let ipd_dreams::End::South(b) = sys.pipes[x].start else { panic!("letter pipe starts off the South edge") };
            let ipd_dreams::End::East(a) = sys.pipes[x].end else { panic!("letter pipe ends off the East edge") };
            (a, b)
        };
        for (m, &x) in letters.iter().enumerate() {
            for &y in &letters[m + 1..] {
                let ((a1, b1), (a2, b2)) = (dot(x), dot(y));
                let interleave = (b1 < b2) == (a1 > a2);
                assert_eq!(sys.crossings_between(x, y), usize::from(interleave), "{f}\n{p}");
            }
        }
    }
}

#[test]
fn fusing_and_degree_laws() {
    for (f, p) in all_dreams(5, TheoryMode::KT) {
        let dim = BoundedAffinePermutation::from_partial(&f).dim();
        let eq = p.count_kind(TileKind::Equivariant);
        assert_eq!(p.fusing() + p.lambda().size(), dim + eq, "{f}\n{p}");
        if eq == 0 {
            assert_eq!(p.fusing() + p.lambda().size(), dim);
        }
        if p.fusing() == 0 {
            assert_eq!(p.lambda().size(), dim + eq);
        }
    }
}

#[test]
fn equivariant_free_dreams_have_full_dimension() {
    for (f, p) in all_dreams(5, TheoryMode::H) {
        assert_eq!(p.lambda().size(), BoundedAffinePermutation::from_partial(&f).dim(), "{f}");
    }
}

#[test]
fn initial_slices_recover_f() {
    for n in 1..=6 {
        for f in PartialPermutation::all(n) {
            let s = Slice::initial(&f);
            assert_eq!(g(&s).perm, f);
        }
    }
}

#[test]
fn slice_transport() {
    for (f, p) in all_dreams(5, TheoryMode::KT) {
        let end = replay(&f, &p, |s, next, cell| {
            let t = p.tile(cell.i, cell.j);
            let (before, after) = (g(s), g(next));
            match t.kind().unwrap() {
                TileKind::Equivariant => {
                    let j0 = BoundedAffinePermutation::from_partial(&before.perm);
                    let j1 = BoundedAffinePermutation::from_partial(&after.perm);
                    assert_eq!(j1, sweep(&j0, cell.i, cell.j), "{f} at {cell:?}");
                    assert_eq!(j1.length() + 1, j0.length());
                }
                TileKind::Fusor => {
                    let j0 = BoundedAffinePermutation::from_partial(&before.perm);
                    let j1 = BoundedAffinePermutation::from_partial(&after.perm);
                    assert_eq!(j1.dim() + t.west.len(), j0.dim() + 1, "{f} at {cell:?}");
                }
                _ => assert_eq!(before.perm, after.perm, "{f} at {cell:?}"),
            }
        });
        assert!(end.is_terminal());
        assert_eq!(g(&end).perm.opposite_schubert_partition(), Some(p.lambda()), "{f}");
    }
}

#[test]
fn branching_kinks_are_exactly_zero_zero() {
    for (f, p) in all_dreams(4, TheoryMode::KT) {
        replay(&f, &p, |s, _, cell| {
            let options = s.admitted_tiles(TheoryMode::KT).len();
            if s.is_branching() {
                assert!(options >= 1);
                let ess = g(s).perm.essential_boxes();
                assert!(ess.iter().any(|e| e.cell == Cell::new(cell.i + 1, cell.j)), "{f} at {cell:?}");
            } else {
                assert_eq!(options, 1);
            }
        });
    }
}

#[test]
fn enumeration_is_deterministic() {
    let f = PartialPermutation::from_dots(5, &[(1, 3), (2, 4)]).unwrap();
    let a = enumerate(&f, TheoryMode::KT);
    for _ in 0..3 {
        assert_eq!(enumerate(&f, TheoryMode::KT), a);
    }
}

#[test]
fn west_edges_are_automatically_zero() {
    let letters = [Label::Letter(1), Label::Letter(2), Label::Letter(3)];
    for n in 1..=3usize {
        let south_choices = boundary_choices(n, Label::One, &letters);
        let east_choices = boundary_choices(n, Label::Zero, &letters);
        for south in &south_choices {
            for east in &east_choices {
                let b = Boundary { south: south.clone(), east: east.clone() };
                let count = |v: &[Label]| v.iter().filter(|l| l.is_letter()).count();
                let balanced = count(south) == count(east);
                for p in brute_force_tilings(&b, TheoryMode::KT, false).unwrap() {
                    let west_zero = p.west_boundary().iter().all(|w| w.is_zero());
                    assert_eq!(west_zero, balanced, "south {south:?} east {east:?}\n{p}");
                }
            }
        }
    }
    for f in PartialPermutation::all(4) {
        let b = Boundary::of(&f);
        let loose: BTreeSet<String> = brute_force_tilings(&b, TheoryMode::KT, false)
            .unwrap()
            .iter()
            .map(|p| serde_json::to_string(p).unwrap())
            .collect();
        let strict: BTreeSet<String> = brute_force_tilings(&b, TheoryMode::KT, true)
            .unwrap()
            .iter()
            .map(|p| serde_json::to_string(p).unwrap())
            .collect();
        assert_eq!(loose, strict, "{f}");
    }
}

/// Each position gets `filler` or a letter, letters used at most once.
fn boundary_choices(n: usize, filler: Label, letters: &[Label]) -> Vec<Vec<Label>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let mut a = v.clone();
            a.push(filler);
            next.push(a);
            for &l in letters {
                if !v.contains(&l) {
                    let mut b = v.clone();
                    b.push(l);
                    next.push(b);
                }
            }
        }
        out = next;
    }
    out
}

#[test]
fn figure_dreams_in_canonical_order() {
    let f = PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).unwrap();
    let dreams = enumerate(&f, TheoryMode::KT);
    let lambdas: Vec<String> = dreams.iter().map(|p| p.lambda().to_string()).collect();
    assert_eq!(lambdas, ["(2,1)", "(2,1)", "(1,1)", "(2)", "(1)", "(2)"]);
    let fusing: Vec<usize> = dreams.iter().map(PipeDream::fusing).collect();
    assert_eq!(fusing, [0, 0, 0, 1, 1, 0]);
    let eq: Vec<Vec<Cell>> = dreams.iter().map(PipeDream::equivariant_positions).collect();
    assert_eq!(eq[0], [Cell::new(2, 4)]);
    assert_eq!(eq[1], [Cell::new(1, 2)]);
    assert_eq!(eq[3], [Cell::new(1, 2)]);
    // the two dreams that fuse an A pipe with a 1 pipe at (2,4)
    for p in &dreams[3..5] {
        assert_eq!(p.tile(2, 4).west.to_string(), "A1");
        assert_eq!(p.count_kind(TileKind::Displacer), 1);
    }
    let h: Vec<String> = enumerate(&f, TheoryMode::H).iter().map(|p| p.lambda().to_string()).collect();
    assert_eq!(h, ["(1,1)", "(2)"]);
}

#[test]
fn json_round_trip_and_rendering() {
    let f = PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).unwrap();
    for p in enumerate(&f, TheoryMode::KT) {
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<PipeDream>(&json).unwrap(), p);
        let art = p.render_ascii();
        assert!(art.contains('A') && art.contains('B'));
        assert_eq!(art.lines().count(), 1 + 2 * 4);
    }
    let first = serde_json::to_value(&enumerate(&f, TheoryMode::H)[0]).unwrap();
    assert_eq!(first["n"], 4);
    assert_eq!(first["tiles"][0]["i"], 1);
    assert_eq!(first["tiles"][0]["south"], "1");
}
