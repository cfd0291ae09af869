use ipd_core::Partition;

/// The Littlewood–Richardson number `c^ν_{λμ}`: skew tableaux of shape ν/λ and
/// content μ whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    let rows = nu.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0usize; nu.part(0)]; rows];
    let mut content = vec![0usize; mu.len() + 1];
    fill(&cells, 0, lambda, mu, &mut filling, &mut content)
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    lambda: &Partition,
    mu: &Partition,
    filling: &mut [Vec<usize>],
    content: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(at) else {
        return 1;
    };
    let mut total = 0;
    for v in 1..=mu.len() {
        if content[v] == mu.part(v - 1) {
            continue;
        }
        if v > 1 && content[v] + 1 > content[v - 1] {
            continue;
        }
        // rows weakly increase left to right; the cell to the right is already filled
        if filling[r].get(c + 1).is_some_and(|&x| x != 0 && v > x) {
            continue;
        }
        // columns strictly increase downward
        if r > 0 && c >= lambda.part(r - 1) && filling[r - 1][c] >= v {
            continue;
        }
        filling[r][c] = v;
        content[v] += 1;
        total += fill(cells, at + 1, lambda, mu, filling, content);
        content[v] -= 1;
        filling[r][c] = 0;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn small_values() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[]), &p(&[]), &p(&[])), 1);
    }

    #[test]
    fn pieri_rule() {
        // multiplying by a single row adds a horizontal strip
        for nu in Partition::all_in_box(3, 3) {
            for lambda in Partition::all_in_box(3, 3) {
                if !nu.contains(&lambda) || nu.size() < lambda.size() {
                    continue;
                }
                let d = nu.size() - lambda.size();
                let strip = (0..3).all(|r| r + 1 >= 3 || nu.part(r + 1) <= lambda.part(r));
                let want = u64::from(strip);
                assert_eq!(lr_coefficient(&lambda, &p(&[d]), &nu), want, "{lambda} {nu}");
            }
        }
    }
}
