use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ShiftError;

/// A sorted subset of [n].
pub type Subset = Vec<usize>;

/// `sh_{i->j}`: turn `i` into `j`, unless something's in the way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftOp {
    pub i: usize,
    pub j: usize,
}

impl ShiftOp {
    pub fn new(i: usize, j: usize, n: usize) -> Result<ShiftOp, ShiftError> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(ShiftError::BadOp { i, j, n });
        }
        Ok(ShiftOp { i, j })
    }

    pub fn reversed(self) -> ShiftOp {
        ShiftOp { i: self.j, j: self.i }
    }

    pub fn element(self, m: usize) -> usize {
        if m == self.i {
            self.j
        } else {
            m
        }
    }

    pub fn set(self, s: &[usize]) -> Subset {
        let members: BTreeSet<usize> = s.iter().copied().collect();
        let mut out: Vec<usize> = members
            .iter()
            .map(|&m| {
                let t = self.element(m);
                if members.contains(&t) && t != m {
                    m
                } else {
                    t
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn collection(self, c: &Collection) -> Collection {
        let bases = c
            .bases
            .iter()
            .map(|s| {
                let t = self.set(s);
                if c.bases.contains(&t) {
                    s.clone()
                } else {
                    t
                }
            })
            .collect();
        Collection { n: c.n, k: c.k, bases }
    }
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.i, self.j)
    }
}

pub fn shift_set(op: ShiftOp, s: &[usize]) -> Subset {
    op.set(s)
}

pub fn shift_collection(op: ShiftOp, c: &Collection) -> Collection {
    op.collection(c)
}

/// A collection of `k`-subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CollectionJson")]
pub struct Collection {
    pub n: usize,
    pub k: usize,
    pub bases: BTreeSet<Subset>,
}

#[derive(Deserialize)]
struct CollectionJson {
    n: usize,
    k: usize,
    bases: Vec<Subset>,
}

impl TryFrom<CollectionJson> for Collection {
    type Error = ShiftError;

    fn try_from(raw: CollectionJson) -> Result<Self, ShiftError> {
        Collection::new(raw.n, raw.k, raw.bases)
    }
}

impl Collection {
    pub fn new(n: usize, k: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Collection, ShiftError> {
        let mut out = BTreeSet::new();
        for mut s in bases {
            s.sort_unstable();
            let distinct = s.windows(2).all(|w| w[0] < w[1]);
            if s.len() != k || !distinct || s.iter().any(|&m| m == 0 || m > n) {
                return Err(ShiftError::BadSubset(s));
            }
            out.insert(s);
        }
        Ok(Collection { n, k, bases: out })
    }

    pub fn empty(n: usize, k: usize) -> Collection {
        Collection { n, k, bases: BTreeSet::new() }
    }

    /// All `k`-subsets of `[n]`.
    pub fn all(n: usize, k: usize) -> Collection {
        Collection { n, k, bases: k_subsets(n, k).into_iter().collect() }
    }

    /// Fixed points of `{rank(columns S) <= r}`.
    pub fn rank_bounded(n: usize, k: usize, s: &[usize], r: usize) -> Collection {
        let bases = k_subsets(n, k).into_iter().filter(|b| b.iter().filter(|m| s.contains(m)).count() <= r).collect();
        Collection { n, k, bases }
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.bases.contains(s)
    }

    pub fn union(&self, other: &Collection) -> Collection {
        Collection { bases: self.bases.union(&other.bases).cloned().collect(), ..self.clone() }
    }

    pub fn intersection(&self, other: &Collection) -> Collection {
        Collection { bases: self.bases.intersection(&other.bases).cloned().collect(), ..self.clone() }
    }

    pub fn is_shift_invariant(&self, op: ShiftOp) -> bool {
        op.collection(self) == *self
    }
}

impl fmt::Display for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (x, s) in self.bases.iter().enumerate() {
            if x > 0 {
                write!(f, ", ")?;
            }
            let body: Vec<String> = s.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", body.join(","))?;
        }
        write!(f, "}}")
    }
}

/// `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for m in start..=n {
            if n - m + 1 < k - cur.len() {
                break;
            }
            cur.push(m);
            rec(m + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}
