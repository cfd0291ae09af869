use std::collections::BTreeSet;

use ipd_core::PartialPermutation;
use ipd_dreams::{brute_force_enumerate, enumerate, enumerate_with_stats, PipeDream, TheoryMode};

fn figure_f() -> PartialPermutation {
    PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).unwrap()
}

fn as_set(v: &[PipeDream]) -> BTreeSet<String> {
    v.iter().map(|p| serde_json::to_string(p).unwrap()).collect()
}

#[test]
fn figure_counts() {
    let f = figure_f();
    assert_eq!(enumerate(&f, TheoryMode::HT).len(), 4);
    assert_eq!(enumerate(&f, TheoryMode::KT).len(), 6);
    assert_eq!(enumerate(&f, TheoryMode::H).len(), 2);
    assert_eq!(enumerate(&f, TheoryMode::K).len(), 3);
}

#[test]
fn identity_has_one_forced_dream() {
    for n in 1..=5 {
        let (dreams, stats) = enumerate_with_stats(&PartialPermutation::identity(n), TheoryMode::KT);
        assert_eq!(dreams.len(), 1);
        assert_eq!(stats.branch_points, 0);
    }
}

fn check_against_oracle(max_n: usize) {
    for n in 1..=max_n {
        for f in PartialPermutation::all(n) {
            for mode in TheoryMode::ALL {
                let fast = enumerate(&f, mode);
                let slow = brute_force_enumerate(&f, mode).unwrap();
                let (a, b) = (as_set(&fast), as_set(&slow));
                assert_eq!(a.len(), fast.len(), "{f} {mode}: duplicates");
                if a != b {
                    for p in &fast {
                        if !b.contains(&serde_json::to_string(p).unwrap()) {
                            eprintln!("only enumerated:\n{p}");
                        }
                    }
                    for p in &slow {
                        if !a.contains(&serde_json::to_string(p).unwrap()) {
                            eprintln!("only brute force:\n{p}");
                        }
                    }
                    panic!("{f} {mode}: {} enumerated vs {} brute force", fast.len(), slow.len());
                }
            }
        }
    }
}

#[test]
fn matches_brute_force_small() {
    check_against_oracle(4);
}

#[test]
fn matches_brute_force_five() {
    for f in PartialPermutation::all(5) {
        for mode in [TheoryMode::HT, TheoryMode::KT] {
            assert_eq!(as_set(&enumerate(&f, mode)), as_set(&brute_force_enumerate(&f, mode).unwrap()), "{f} {mode}");
        }
    }
}
