use ipd_core::BoundedAffinePermutation;

/// Dots `(r, J(r))` strictly Northwest of `(row, col)` with no other such dot
/// strictly Southeast of them, sorted by column (so from Southwest to Northeast).
pub fn minimal_northwest_dots(j: &BoundedAffinePermutation, row: i64, col: i64) -> Vec<(i64, i64)> {
    let nn = j.n() as i64;
    let nw: Vec<(i64, i64)> =
        ((row - 2 * nn)..row).map(|r| (r, j.apply(r))).filter(|&(_, c)| c < col).collect();
    let mut out: Vec<(i64, i64)> = nw
        .iter()
        .copied()
        .filter(|&(r, c)| !nw.iter().any(|&(r2, c2)| r2 > r && c2 > c))
        .collect();
    out.sort_by_key(|&(_, c)| c);
    out
}

/// Components of `Π_J ∩ {rank [i, J(i)-1] < r_J(i, J(i)-1)}`: exchange the dot of
/// row `i` with each minimally Northwest dot, keeping the bounded results.
pub fn monk_components(j: &BoundedAffinePermutation, i: i64) -> Vec<BoundedAffinePermutation> {
    monk_components_with_dots(j, i).into_iter().map(|(_, p)| p).collect()
}

pub fn monk_components_with_dots(
    j: &BoundedAffinePermutation,
    i: i64,
) -> Vec<((i64, i64), BoundedAffinePermutation)> {
    let col = j.apply(i);
    minimal_northwest_dots(j, i, col)
        .into_iter()
        .filter_map(|d| j.swap_rows(i, d.0).map(|p| (d, p)))
        .collect()
}
