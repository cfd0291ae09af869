use std::collections::{BTreeMap, BTreeSet};

use ipd_classes::{expand, wt_h, YPolynomial};
use ipd_core::{BoundedAffinePermutation, PartialPermutation, Partition};
use ipd_dreams::{enumerate, PipeDream, TheoryMode};
use ipd_puzzles::*;
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

fn boundary(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize, n: usize) -> PuzzleBoundary {
    PuzzleBoundary::new(lambda.to_word(k, n - k), mu.to_word(k, n - k), nu.to_word(k, n - k)).unwrap()
}

fn dotless(f: &PartialPermutation) -> (Vec<bool>, Vec<bool>) {
    let n = f.n();
    let dots = f.dots();
    let rows = (1..=n).map(|r| !dots.iter().any(|d| d.0 == r)).collect();
    let cols = (1..=n).map(|c| !dots.iter().any(|d| d.1 == c)).collect();
    (rows, cols)
}

#[test]
fn trivial_boundaries() {
    for n in 1..=4 {
        let b = PuzzleBoundary::new(vec![false; n], vec![false; n], vec![false; n]).unwrap();
        let all = enumerate_puzzles(&b, true);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].1, YPolynomial::one());
    }
    for lambda in Partition::all_in_box(2, 3) {
        let b = boundary(&lambda, &p(&[]), &lambda, 2, 5);
        assert_eq!(count_puzzles(&b, false), 1, "{lambda}");
        assert_eq!(lr_coefficient(&lambda, &p(&[]), &lambda), 1);
    }
}

#[test]
fn two_planes_in_four_space() {
    assert_eq!(count_puzzles(&boundary(&p(&[1]), &p(&[1]), &p(&[2]), 2, 4), false), 1);
    assert_eq!(count_puzzles(&boundary(&p(&[1]), &p(&[1]), &p(&[1, 1]), 2, 4), false), 1);
    assert_eq!(count_puzzles(&boundary(&p(&[1]), &p(&[1]), &p(&[2, 1]), 2, 4), false), 0);
    assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2, 1])), 0);
    // the sum of the two classes above picks up one equivariant correction
    let eq = enumerate_puzzles(&boundary(&p(&[1]), &p(&[1]), &p(&[1]), 2, 4), true);
    let total: YPolynomial = eq.iter().map(|(_, w)| w.clone()).sum();
    assert_eq!(total.to_string(), "y2 - y3");
}

#[test]
fn counts_are_littlewood_richardson_numbers() {
    for n in 1..=6 {
        for k in 0..=n {
            for (b, c) in count_table(n, k) {
                let (l, m, v) = (Partition::from_word(&b.nw), Partition::from_word(&b.ne), Partition::from_word(&b.s));
                assert_eq!(c as u64, lr_coefficient(&l, &m, &v), "{b}");
            }
        }
    }
}

#[test]
fn nonequivariant_counts_have_rotational_symmetry() {
    for n in 1..=5 {
        for k in 0..=n {
            let table: BTreeMap<PuzzleBoundary, usize> = count_table(n, k).into_iter().collect();
            for (b, c) in &table {
                assert_eq!(table[&b.rotated()], *c, "{b}");
            }
            let (rows, cols) = (k, n - k);
            for l in Partition::all_in_box(rows, cols) {
                for m in Partition::all_in_box(rows, cols) {
                    for v in Partition::all_in_box(rows, cols) {
                        let lhs = lr_coefficient(&l, &m, &v.complement(rows, cols));
                        let rhs = lr_coefficient(&m, &v, &l.complement(rows, cols));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

fn one_letter_dreams(n: usize, mode: TheoryMode) -> Vec<(PipeDream, PipeDream)> {
    PartialPermutation::all(n)
        .into_iter()
        .filter(PartialPermutation::is_nw_se)
        .flat_map(|f| enumerate(&f, mode))
        .map(|d| {
            let merged = merge_letters(&d).unwrap();
            (d, merged)
        })
        .collect()
}

#[test]
fn dreams_and_puzzles_round_trip() {
    for n in 1..=5 {
        for mode in [TheoryMode::H, TheoryMode::HT] {
            for (original, merged) in one_letter_dreams(n, mode) {
                let z = dream_to_puzzle(&merged).unwrap();
                assert_eq!(puzzle_to_dream(&z), merged);
                let weight: YPolynomial =
                    z.equivariant_positions().into_iter().map(|(i, j)| YPolynomial::root(i, j)).product();
                assert_eq!(wt_h(&original).unwrap(), weight);
                if mode == TheoryMode::H {
                    assert!(z.equivariant_positions().is_empty());
                }
                assert_eq!(Partition::from_word(&z.boundary().nw), original.lambda());
            }
        }
        for k in 0..=n {
            for (b, _) in count_table(n, k) {
                for (z, _) in enumerate_puzzles(&b, true) {
                    assert_eq!(dream_to_puzzle(&puzzle_to_dream(&z)).unwrap(), z);
                }
            }
        }
    }
}

#[test]
fn puzzles_are_exactly_the_one_letter_dreams() {
    for n in 1..=5 {
        for f in PartialPermutation::all(n).into_iter().filter(PartialPermutation::is_nw_se) {
            let (k, (rows, cols)) = (f.k(), dotless(&f));
            for (mode, equivariant) in [(TheoryMode::H, false), (TheoryMode::HT, true)] {
                let mut dreams: BTreeMap<Partition, BTreeSet<String>> = BTreeMap::new();
                for d in enumerate(&f, mode) {
                    let merged = merge_letters(&d).unwrap();
                    dreams.entry(d.lambda()).or_default().insert(merged.render_ascii());
                }
                for lambda in Partition::all_in_box(k, n - k) {
                    let b = PuzzleBoundary::new(lambda.to_word(k, n - k), rows.clone(), cols.clone()).unwrap();
                    let puzzles: BTreeSet<String> =
                        enumerate_puzzles(&b, equivariant).iter().map(|(z, _)| puzzle_to_dream(z).render_ascii()).collect();
                    assert_eq!(puzzles, dreams.remove(&lambda).unwrap_or_default(), "{f} {mode} {lambda}");
                }
                assert!(dreams.is_empty(), "{f}");
            }
        }
    }
}

#[test]
fn rhombus_in_row_four_weighs_y4_minus_y5() {
    let mut found = false;
    'outer: for k in 1..5 {
        for (b, _) in count_table(5, k) {
            for (z, w) in enumerate_puzzles(&b, true) {
                if z.equivariant_positions() == [(4, 5)] {
                    assert_eq!(w.to_string(), "y4 - y5");
                    let d = puzzle_to_dream(&z);
                    let eq: Vec<_> = d.equivariant_positions().iter().map(|c| (c.i, c.j)).collect();
                    assert_eq!(eq, [(4, 5)]);
                    found = true;
                    break 'outer;
                }
            }
        }
    }
    assert!(found);
}

#[test]
fn multi_letter_and_fused_dreams_are_rejected() {
    let g = PartialPermutation::from_dots(3, &[(1, 3), (2, 2)]).unwrap();
    assert!(!g.is_nw_se());
    let dreams = enumerate(&g, TheoryMode::H);
    assert!(!dreams.is_empty());
    for d in &dreams {
        assert!(matches!(dream_to_puzzle(d), Err(PuzzleError::NotOneLetter(_))));
        assert!(dream_to_puzzle(&merge_letters(d).unwrap()).is_err());
    }
    let fig = PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).unwrap();
    for d in enumerate(&fig, TheoryMode::K).into_iter().filter(|d| d.fusing() > 0) {
        assert!(dream_to_puzzle(&merge_letters(&d).unwrap()).is_err());
    }
}

#[test]
fn richardson_closure() {
    for n in 1..=6 {
        for f in PartialPermutation::all(n) {
            let j = BoundedAffinePermutation::from_partial(&f);
            let (mu, nu, exact) = j.richardson_envelope();
            if !exact {
                continue;
            }
            let (k, (rows, cols)) = (f.k(), dotless(&f));
            let e = expand(&f, TheoryMode::H);
            for lambda in Partition::all_in_box(k, n - k) {
                let c = e.coefficient(&lambda).as_int().unwrap_or(0);
                let lr = lr_coefficient(&lambda, &mu.complement(k, n - k), &nu);
                assert_eq!(c, lr as i64, "{f} {lambda}");
                let b = PuzzleBoundary::new(lambda.to_word(k, n - k), rows.clone(), cols.clone()).unwrap();
                assert_eq!(count_puzzles(&b, false) as i64, c, "{f} {lambda}");
            }
        }
    }
}

#[test]
fn crossed_dots_are_not_richardson() {
    let f = PartialPermutation::from_dots(4, &[(1, 4), (2, 3)]).unwrap();
    let (mu, nu, exact) = BoundedAffinePermutation::from_partial(&f).richardson_envelope();
    assert!(!exact);
    let (k, n) = (f.k(), f.n());
    let e = expand(&f, TheoryMode::H);
    let differs = Partition::all_in_box(k, n - k).into_iter().any(|lambda| {
        e.coefficient(&lambda).as_int().unwrap_or(0) != lr_coefficient(&lambda, &mu.complement(k, n - k), &nu) as i64
    });
    assert!(differs);
}

fn any_boundary() -> impl Strategy<Value = PuzzleBoundary> {
    (1usize..=6).prop_flat_map(|n| (Just(n), 0..=n)).prop_flat_map(|(n, k)| {
        let words = binary_words(n, k);
        let m = words.len();
        (0..m, 0..m, 0..m).prop_map(move |(a, b, c)| {
            PuzzleBoundary::new(words[a].clone(), words[b].clone(), words[c].clone()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn enumerated_puzzles_have_their_boundary(b in any_boundary()) {
        let all = enumerate_puzzles(&b, true);
        let plain = all.iter().filter(|(z, _)| z.equivariant_positions().is_empty()).count();
        prop_assert_eq!(plain, count_puzzles(&b, false));
        let distinct: BTreeSet<_> = all.iter().map(|(z, _)| z.clone()).collect();
        prop_assert_eq!(distinct.len(), all.len());
        for (z, w) in &all {
            prop_assert_eq!(&z.boundary(), &b);
            let d = Some(z.equivariant_positions().len() as i64);
            prop_assert!(w.min_degree() == d && w.max_degree() == d);
            let json = serde_json::to_string(z).unwrap();
            prop_assert_eq!(&serde_json::from_str::<Puzzle>(&json).unwrap(), z);
        }
        let text = format!("{}/{}/{}", word(&b.nw), word(&b.ne), word(&b.s));
        prop_assert_eq!(text.parse::<PuzzleBoundary>().unwrap(), b);
    }
}

fn word(w: &[bool]) -> String {
    w.iter().map(|&x| if x { '1' } else { '0' }).collect()
}
