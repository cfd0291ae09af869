use ipd_dreams::{PipeDream, TileKind};

use crate::{ClassError, ExpLaurent, YPolynomial};

/// Product of y_i - y_j over equivariant tiles at (i, j).
pub fn wt_h(p: &PipeDream) -> Result<YPolynomial, ClassError> {
    if p.fusing() > 0 {
        return Err(ClassError::FusedDream);
    }
    Ok(p.equivariant_positions().into_iter().map(|c| YPolynomial::root(c.i, c.j)).product())
}

/// Product over tiles: a fusor at (i, j) gives exp(y_i - y_j), an equivariant
/// tile gives 1 - exp(y_i - y_j).
pub fn wt_k(p: &PipeDream) -> ExpLaurent {
    p.cells()
        .filter_map(|(c, t)| match t.kind() {
            Some(TileKind::Fusor) => Some(ExpLaurent::exp_root(c.i, c.j)),
            Some(TileKind::Equivariant) => Some(&ExpLaurent::one() - &ExpLaurent::exp_root(c.i, c.j)),
            _ => None,
        })
        .product()
}

pub fn sign(p: &PipeDream) -> i64 {
    if p.fusing().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
