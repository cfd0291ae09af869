use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{ExpLaurent, YPolynomial};

/// A coefficient of a Schubert expansion: an integer (H, K), a polynomial in
/// the y's (H_T), or a Laurent polynomial in the exp(y)'s (K_T).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficient {
    Int(i64),
    Poly(YPolynomial),
    Laurent(ExpLaurent),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Int(c) => *c == 0,
            Coefficient::Poly(p) => p.is_zero(),
            Coefficient::Laurent(p) => p.is_zero(),
        }
    }

    /// Sum, promoting integers to constants.
    pub fn plus(&self, other: &Coefficient) -> Option<Coefficient> {
        use Coefficient::*;
        Some(match (self, other) {
            (Int(a), Int(b)) => Int(a + b),
            (Poly(a), Poly(b)) => Poly(a + b),
            (Laurent(a), Laurent(b)) => Laurent(a + b),
            (Int(a), Poly(b)) | (Poly(b), Int(a)) => Poly(&YPolynomial::constant(*a) + b),
            (Int(a), Laurent(b)) | (Laurent(b), Int(a)) => Laurent(&ExpLaurent::constant(*a) + b),
            _ => return None,
        })
    }

    pub fn scaled(&self, c: i64) -> Coefficient {
        match self {
            Coefficient::Int(a) => Coefficient::Int(a * c),
            Coefficient::Poly(p) => Coefficient::Poly(p.scale(&c)),
            Coefficient::Laurent(p) => Coefficient::Laurent(p.scale(&c)),
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Coefficient::Int(a) => Some(*a),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&YPolynomial> {
        match self {
            Coefficient::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_laurent(&self) -> Option<&ExpLaurent> {
        match self {
            Coefficient::Laurent(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Int(a) => write!(f, "{a}"),
            Coefficient::Poly(p) => write!(f, "{p}"),
            Coefficient::Laurent(p) => write!(f, "{p}"),
        }
    }
}
