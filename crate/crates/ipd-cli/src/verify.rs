use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use ipd_classes::{expand, wt_h, wt_k, Coefficient, ExpLaurent, YPolynomial};
use ipd_core::{BoundedAffinePermutation, PartialPermutation, Partition};
use ipd_dreams::{brute_force_enumerate, enumerate, PipeDream, Slice, TheoryMode, TileKind, BRUTE_FORCE_MAX_N};
use ipd_puzzles::{count_puzzles, dream_to_puzzle, lr_coefficient, merge_letters, puzzle_to_dream, PuzzleBoundary};
use ipd_shifts::{
    inclusion_exclusion, safe_shift_components, safety, tconvex_fixed_point_check, transition_identity, Safety,
    ShiftOp,
};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Figures,
    Specialize,
    Fusing,
    Richardson,
    Shifting,
    Oracle,
}

/// Number of checks run and a line per failure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Report) -> Report {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} checks, {} failures", self.checks, self.failures.len())?;
        for line in self.failures.iter().take(20) {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn merge_all(reports: impl IntoIterator<Item = Report>) -> Report {
    reports.into_iter().fold(Report::default(), Report::merge)
}

pub fn figure() -> PartialPermutation {
    PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).expect("valid dots")
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

fn all_upto(max_n: usize) -> Vec<PartialPermutation> {
    (1..=max_n).flat_map(PartialPermutation::all).collect()
}

pub fn figure_counts() -> Report {
    let mut r = Report::default();
    let f = figure();
    for (mode, want) in [(TheoryMode::H, 2), (TheoryMode::HT, 4), (TheoryMode::K, 3), (TheoryMode::KT, 6)] {
        let got = enumerate(&f, mode).len();
        r.check(got == want, || format!("{mode}: {got} dreams, expected {want}"));
    }
    r
}

pub fn figure_ht_expansion() -> Report {
    let mut r = Report::default();
    let e = expand(&figure(), TheoryMode::HT);
    let want = [
        (p(&[2]), Coefficient::Poly(YPolynomial::one())),
        (p(&[1, 1]), Coefficient::Poly(YPolynomial::one())),
        (p(&[2, 1]), Coefficient::Poly(YPolynomial::root(1, 4))),
    ];
    r.check(e.terms.len() == want.len(), || format!("HT expansion {e}"));
    for (lambda, c) in want {
        r.check(e.coefficient(&lambda) == c, || format!("HT coefficient of {lambda}: {}", e.coefficient(&lambda)));
    }
    r
}

pub fn figure_k_expansion() -> Report {
    let mut r = Report::default();
    let e = expand(&figure(), TheoryMode::K);
    let want = [(p(&[2]), 1), (p(&[1, 1]), 1), (p(&[1]), -1)];
    r.check(e.terms.len() == want.len(), || format!("K expansion {e}"));
    for (lambda, c) in want {
        r.check(e.coefficient(&lambda).as_int() == Some(c), || {
            format!("K coefficient of {lambda}: {}", e.coefficient(&lambda))
        });
    }
    r
}

fn sorted(v: Vec<ExpLaurent>) -> Vec<String> {
    let mut out: Vec<String> = v.iter().map(ToString::to_string).collect();
    out.sort();
    out
}

/// Compares the weights of the six K_T dreams of the figure with `want`.
pub fn figure_kt_weights(want: Vec<ExpLaurent>) -> Report {
    let mut r = Report::default();
    let got = sorted(enumerate(&figure(), TheoryMode::KT).iter().map(wt_k).collect());
    let want = sorted(want);
    r.check(got == want, || format!("K_T weights {got:?}, expected {want:?}"));
    r
}

fn e(i: usize, j: usize) -> ExpLaurent {
    ExpLaurent::exp_root(i, j)
}

/// The reference list for the six weights.
pub fn reference_kt_weights() -> Vec<ExpLaurent> {
    let one = ExpLaurent::one();
    vec![e(2, 4), e(1, 2), &one - &e(1, 2), &one - &e(2, 4), e(1, 4), &e(2, 4) - &e(1, 4)]
}

/// The weight list obtained from the tile weights, confirmed by localization.
pub fn computed_kt_weights() -> Vec<ExpLaurent> {
    let one = ExpLaurent::one();
    vec![e(2, 4), e(1, 4), &e(2, 4) - &e(1, 4), &one - &e(2, 4), e(1, 4), &e(2, 4) - &e(1, 4)]
}

pub fn figure_puzzles() -> Report {
    let mut r = Report::default();
    let b = |l: &[usize], m: &[usize], v: &[usize]| {
        PuzzleBoundary::new(p(l).to_word(2, 2), p(m).to_word(2, 2), p(v).to_word(2, 2)).expect("valid boundary")
    };
    for (v, want) in [(&[2][..], 1), (&[1, 1][..], 1), (&[2, 1][..], 0)] {
        let got = count_puzzles(&b(&[1], &[1], v), false);
        r.check(got == want, || format!("puzzles for (1),(1),{v:?}: {got}"));
    }
    r
}

pub fn specialization(max_n: usize) -> Report {
    merge_all(all_upto(max_n).par_iter().map(|f| {
        let mut r = Report::default();
        let kt = expand(f, TheoryMode::KT);
        match kt.specialize_kt_to_k() {
            Ok(k) => r.check(k.terms == expand(f, TheoryMode::K).terms, || format!("{f}: K_T to K")),
            Err(err) => r.check(false, || format!("{f}: {err}")),
        }
        match kt.specialize_kt_to_ht() {
            Ok(ht) => r.check(ht.terms == expand(f, TheoryMode::HT).terms, || format!("{f}: K_T to H_T")),
            Err(err) => r.check(false, || format!("{f}: {err}")),
        }
        r
    }).collect::<Vec<_>>())
}

fn dream_laws(d: &PipeDream, dim: usize, mode: TheoryMode) -> Report {
    let mut r = Report::default();
    let size = d.lambda().size();
    let eq = d.equivariant_positions().len();
    r.check(size + d.fusing() == dim + eq, || format!("|λ| + fusing ≠ dim + #eq for\n{d}"));
    if mode == TheoryMode::HT {
        r.check(size == dim + eq, || format!("|λ| ≠ dim + #eq for\n{d}"));
    }
    if !mode.allows_equivariant() {
        r.check(d.fusing() + size == dim, || format!("fusing ≠ dim - |λ| for\n{d}"));
    }
    if let Ok(w) = wt_h(d) {
        let deg = Some(eq as i64);
        r.check(w.min_degree() == deg && w.max_degree() == deg, || format!("wt_H degree for\n{d}"));
    }
    r
}

/// Degree and fusing laws for every dream of every f with `n ≤ max_n`.
pub fn fusing_laws(max_n: usize) -> Report {
    merge_all(all_upto(max_n).par_iter().map(|f| {
        let dim = BoundedAffinePermutation::from_partial(f).dim();
        let mut r = Report::default();
        for mode in TheoryMode::ALL {
            for d in enumerate(f, mode) {
                r = r.merge(dream_laws(&d, dim, mode));
            }
        }
        r
    }).collect::<Vec<_>>())
}

fn as_set(v: &[PipeDream]) -> BTreeSet<String> {
    v.iter().map(PipeDream::render_ascii).collect()
}

/// The slice recursion against brute-force tilings.
pub fn oracle(max_n: usize) -> Report {
    let max_n = max_n.min(BRUTE_FORCE_MAX_N);
    merge_all(all_upto(max_n).par_iter().map(|f| {
        let mut r = Report::default();
        for mode in TheoryMode::ALL {
            let fast = enumerate(f, mode);
            match brute_force_enumerate(f, mode) {
                Ok(slow) => {
                    r.check(as_set(&fast).len() == fast.len(), || format!("{f} {mode}: duplicate dreams"));
                    r.check(as_set(&fast) == as_set(&slow), || {
                        format!("{f} {mode}: {} enumerated, {} by brute force", fast.len(), slow.len())
                    });
                }
                Err(err) => r.check(false, || format!("{f} {mode}: {err}")),
            }
        }
        r
    }).collect::<Vec<_>>())
}

fn dotless(f: &PartialPermutation) -> (Vec<bool>, Vec<bool>) {
    let dots = f.dots();
    let rows = (1..=f.n()).map(|x| !dots.iter().any(|d| d.0 == x)).collect();
    let cols = (1..=f.n()).map(|x| !dots.iter().any(|d| d.1 == x)).collect();
    (rows, cols)
}

/// H coefficients of exact Richardson f against tableau counts and puzzle counts.
pub fn richardson(max_n: usize) -> Report {
    merge_all(all_upto(max_n).par_iter().map(|f| {
        let mut r = Report::default();
        let (mu, nu, exact) = BoundedAffinePermutation::from_partial(f).richardson_envelope();
        if !exact {
            return r;
        }
        let (n, k) = (f.n(), f.k());
        let (rows, cols) = dotless(f);
        let e = expand(f, TheoryMode::H);
        for lambda in Partition::all_in_box(k, n - k) {
            let c = e.coefficient(&lambda).as_int().unwrap_or(0);
            let lr = lr_coefficient(&lambda, &mu.complement(k, n - k), &nu) as i64;
            r.check(c == lr, || format!("{f} {lambda}: H gives {c}, tableaux give {lr}"));
            let b = PuzzleBoundary::new(lambda.to_word(k, n - k), rows.clone(), cols.clone());
            let puzzles = b.map(|b| count_puzzles(&b, false) as i64);
            r.check(puzzles == Ok(c), || format!("{f} {lambda}: H gives {c}, puzzles give {puzzles:?}"));
        }
        r
    }).collect::<Vec<_>>())
}

/// Round trip and weights between one-letter dreams and puzzles.
pub fn bijection(max_n: usize) -> Report {
    let cases: Vec<PartialPermutation> = all_upto(max_n).into_iter().filter(PartialPermutation::is_nw_se).collect();
    merge_all(cases.par_iter().map(|f| {
        let mut r = Report::default();
        for mode in [TheoryMode::H, TheoryMode::HT] {
            for d in enumerate(f, mode) {
                let merged = match merge_letters(&d) {
                    Ok(m) => m,
                    Err(err) => {
                        r.check(false, || format!("{f}: {err}"));
                        continue;
                    }
                };
                let z = match dream_to_puzzle(&merged) {
                    Ok(z) => z,
                    Err(err) => {
                        r.check(false, || format!("{f}: {err}\n{d}"));
                        continue;
                    }
                };
                r.check(puzzle_to_dream(&z) == merged, || format!("{f}: round trip fails\n{d}"));
                r.check(dream_to_puzzle(&puzzle_to_dream(&z)).as_ref() == Ok(&z), || format!("{f}: reverse trip\n{z}"));
                let weight: YPolynomial =
                    z.equivariant_positions().into_iter().map(|(i, j)| YPolynomial::root(i, j)).product();
                r.check(wt_h(&d).as_ref() == Ok(&weight), || format!("{f}: weights differ\n{d}"));
            }
        }
        r
    }).collect::<Vec<_>>())
}

fn safe_cases(max_n: usize) -> Vec<(BoundedAffinePermutation, usize, usize)> {
    let mut out = Vec::new();
    for f in all_upto(max_n) {
        let n = f.n();
        let j = BoundedAffinePermutation::from_partial(&f);
        for a in 1..n {
            for b in a + 1..=n {
                if !matches!(safety(&j, ShiftOp { i: a, j: b }), Safety::Unsafe(_)) {
                    out.push((j.clone(), a, b));
                }
            }
        }
    }
    out
}

fn walk(slice: &Slice, visit: &mut dyn FnMut(&Slice)) {
    if slice.is_terminal() {
        return;
    }
    visit(slice);
    for (_, next) in slice.admitted_tiles(TheoryMode::KT) {
        walk(&next, visit);
    }
}

fn slice_pattern(s: &Slice) -> Option<BoundedAffinePermutation> {
    s.slice_permutation().ok().map(|d| BoundedAffinePermutation::from_partial(&d.perm))
}

/// Branching kinks against safe shifts, the K inclusion–exclusion, and fixed points.
pub fn shifting(max_n: usize) -> Report {
    let kinks = merge_all(all_upto(max_n).par_iter().map(|f| {
        let mut r = Report::default();
        walk(&Slice::initial(f), &mut |slice| {
            if !slice.is_branching() {
                return;
            }
            let (i, j) = slice.kink().expect("branching slices have a kink");
            let Some(g) = slice_pattern(slice) else {
                r.check(false, || format!("{f}: slice at ({i},{j}) has no permutation"));
                return;
            };
            let s = match safe_shift_components(&g, i, j) {
                Ok(s) => s,
                Err(err) => {
                    r.check(false, || format!("{f}: {g} at ({i},{j}): {err}"));
                    return;
                }
            };
            let admitted = slice.admitted_tiles(TheoryMode::KT);
            let (eq, fusors): (Vec<_>, Vec<_>) =
                admitted.iter().partition(|(t, _)| t.kind() == Some(TileKind::Equivariant));
            let sweep_ok = eq.len() == 1 && slice_pattern(&eq[0].1).as_ref() == Some(&s.sweep);
            r.check(sweep_ok, || format!("{g} at ({i},{j}): equivariant tile is not the sweep"));
            let got: Vec<_> = fusors.iter().map(|(_, x)| slice_pattern(x)).collect();
            let want: Vec<_> = s.intersections.values().cloned().map(Some).collect();
            r.check(got == want, || format!("{g} at ({i},{j}): fusors do not match the intersections"));
        });
        r
    }).collect::<Vec<_>>());
    let identities = merge_all(safe_cases(max_n).par_iter().map(|(j, a, b)| {
        let mut r = Report::default();
        match inclusion_exclusion(j, *a, *b, TheoryMode::K) {
            Ok(c) => r.check(c.holds(), || format!("{j} {a}->{b}: K inclusion-exclusion {} vs {}", c.lhs, c.rhs)),
            Err(err) => r.check(false, || format!("{j} {a}->{b}: {err}")),
        }
        match tconvex_fixed_point_check(j, *a, *b) {
            Ok(t) => r.check(t.holds(), || format!("{j} {a}->{b}: missing {} extra {}", t.missing, t.extra)),
            Err(err) => r.check(false, || format!("{j} {a}->{b}: {err}")),
        }
        r
    }).collect::<Vec<_>>());
    kinks.merge(identities)
}

/// `[Π_J] = Σ [component]` in H for every safe shift with `n ≤ max_n`.
pub fn transition(max_n: usize) -> Report {
    merge_all(safe_cases(max_n).par_iter().map(|(j, a, b)| {
        let mut r = Report::default();
        match transition_identity(j, *a, *b) {
            Ok(c) => r.check(c.holds(), || format!("{j} {a}->{b}: {} vs {}", c.lhs, c.rhs)),
            Err(err) => r.check(false, || format!("{j} {a}->{b}: {err}")),
        }
        r
    }).collect::<Vec<_>>())
}

pub fn run_suite(suite: Suite, max_n: usize) -> Report {
    match suite {
        Suite::Figures => merge_all([
            figure_counts(),
            figure_ht_expansion(),
            figure_k_expansion(),
            figure_kt_weights(computed_kt_weights()),
            figure_puzzles(),
        ]),
        Suite::Specialize => specialization(max_n),
        Suite::Fusing => fusing_laws(max_n),
        Suite::Richardson => richardson(max_n).merge(bijection(max_n)),
        Suite::Shifting => shifting(max_n).merge(transition(max_n)),
        Suite::Oracle => oracle(max_n),
    }
}
