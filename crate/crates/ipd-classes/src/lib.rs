//! Schubert expansions of interval positroid classes in H, H_T, K and K_T.

mod coefficient;
mod error;
mod expansion;
mod poly;
mod weights;

pub use coefficient::Coefficient;
pub use error::ClassError;
pub use expansion::{expand, expand_pattern, DreamRecord, PositivityReport, PositivityViolation, SchubertExpansion};
pub use poly::{Coeff, Exp, Laurent, Monomial, Poly, YPoly};
pub use weights::{sign, wt_h, wt_k};

/// Integer polynomials in y_1, ..., y_n.
pub type YPolynomial = YPoly<i64>;
/// Integer Laurent polynomials in exp(y_1), ..., exp(y_n).
pub type ExpLaurent = Laurent<i64>;
