use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, PrimInt, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficient rings usable in [`Poly`].
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

/// Exponent types: unsigned for polynomials, signed for Laurent polynomials.
pub trait Exp: PrimInt + Into<i64> + fmt::Debug + fmt::Display + Send + Sync {}

impl<T> Exp for T where T: PrimInt + Into<i64> + fmt::Debug + fmt::Display + Send + Sync {}

/// A monomial in variables numbered from 1, stored sparsely without zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial<E>(BTreeMap<usize, E>);

impl<E: Exp> Monomial<E> {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, E)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m.bump(v, e);
        }
        m
    }

    fn bump(&mut self, v: usize, e: E) {
        let cur = self.0.get(&v).copied().unwrap_or_else(E::zero);
        let next = cur + e;
        if next.is_zero() {
            self.0.remove(&v);
        } else {
            self.0.insert(v, next);
        }
    }

    pub fn exponent(&self, v: usize) -> E {
        self.0.get(&v).copied().unwrap_or_else(E::zero)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, E)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> i64 {
        self.0.values().map(|&e| e.into()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (&v, &e) in &other.0 {
            m.bump(v, e);
        }
        m
    }
}

impl<E: Exp> Ord for Monomial<E> {
    /// Graded lexicographic with y_1 > y_2 > ...
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let vars: std::collections::BTreeSet<usize> = self.0.keys().chain(other.0.keys()).copied().collect();
            for v in vars {
                match self.exponent(v).cmp(&other.exponent(v)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl<E: Exp> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial (or Laurent polynomial, for signed `E`) with coefficients in `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C, E> {
    terms: BTreeMap<Monomial<E>, C>,
}

impl<C: Coeff, E: Exp> Poly<C, E> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn term(m: Monomial<E>, c: C) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// The variable with index `v`.
    pub fn var(v: usize) -> Self {
        Poly::term(Monomial::from_pairs([(v, E::one())]), C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial<E>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<E>, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial<E>) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut p = Poly::zero();
        for (m, a) in &self.terms {
            p.add_term(m.clone(), a.clone() * c.clone());
        }
        p
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: i64) -> Self {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The value with every variable set to 1.
    pub fn at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl<C: Coeff, E: Exp> Default for Poly<C, E> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coeff, E: Exp> Add for &Poly<C, E> {
    type Output = Poly<C, E>;

    fn add(self, rhs: &Poly<C, E>) -> Poly<C, E> {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl<C: Coeff, E: Exp> Sub for &Poly<C, E> {
    type Output = Poly<C, E>;

    fn sub(self, rhs: &Poly<C, E>) -> Poly<C, E> {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

impl<C: Coeff, E: Exp> Mul for &Poly<C, E> {
    type Output = Poly<C, E>;

    fn mul(self, rhs: &Poly<C, E>) -> Poly<C, E> {
        let mut p = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                p.add_term(m1.times(m2), c1.clone() * c2.clone());
            }
        }
        p
    }
}

impl<C: Coeff, E: Exp> Neg for &Poly<C, E> {
    type Output = Poly<C, E>;

    fn neg(self) -> Poly<C, E> {
        self.scale(&-C::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<C: Coeff, E: Exp> $tr for Poly<C, E> {
            type Output = Poly<C, E>;

            fn $f(self, rhs: Poly<C, E>) -> Poly<C, E> {
                (&self).$f(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Coeff, E: Exp> Neg for Poly<C, E> {
    type Output = Poly<C, E>;

    fn neg(self) -> Poly<C, E> {
        -&self
    }
}

impl<C: Coeff, E: Exp> std::iter::Sum for Poly<C, E> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl<C: Coeff, E: Exp> std::iter::Product for Poly<C, E> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C, E> {
    c: C,
    exp: BTreeMap<usize, E>,
}

impl<C: Coeff + Serialize, E: Exp + Serialize> Serialize for Poly<C, E> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<C, E>> =
            self.terms().map(|(m, c)| TermRepr { c: c.clone(), exp: m.0.clone() }).collect();
        terms.serialize(s)
    }
}

impl<'de, C: Coeff + Deserialize<'de>, E: Exp + Deserialize<'de>> Deserialize<'de> for Poly<C, E> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms: Vec<TermRepr<C, E>> = Vec::deserialize(d)?;
        let mut p = Poly::zero();
        for t in terms {
            p.add_term(Monomial::from_pairs(t.exp), t.c);
        }
        Ok(p)
    }
}

/// Polynomials in y_1, ..., y_n.
pub type YPoly<C> = Poly<C, u32>;
/// Laurent polynomials in E_i = exp(y_i).
pub type Laurent<C> = Poly<C, i32>;

impl<C: Coeff> YPoly<C> {
    /// y_i - y_j.
    pub fn root(i: usize, j: usize) -> Self {
        &Poly::var(i) - &Poly::var(j)
    }
}

impl<C: Coeff> Laurent<C> {
    /// exp(y_i - y_j).
    pub fn exp_root(i: usize, j: usize) -> Self {
        Poly::term(Monomial::from_pairs([(i, 1), (j, -1)]), C::one())
    }
}

impl<C: Coeff + From<i64>> Laurent<C> {
    /// Lowest-degree part after E_i = 1 - y_i, with (1 - y)^a expanded as a power series.
    pub fn lowest_degree_under(&self, max_degree: u32) -> Option<YPoly<C>> {
        for d in 0..=max_degree {
            let mut part = YPoly::zero();
            for (m, c) in &self.terms {
                let series = m
                    .exponents()
                    .map(|(v, a)| one_minus_y_power(v, a.into(), d))
                    .fold(YPoly::one(), |acc, s| truncate(&(&acc * &s), d));
                part = &part + &series.homogeneous_part(i64::from(d)).scale(c);
            }
            if !part.is_zero() {
                return Some(part);
            }
        }
        None
    }
}

fn truncate<C: Coeff>(p: &YPoly<C>, d: u32) -> YPoly<C> {
    let mut out = YPoly::zero();
    for (m, c) in p.terms() {
        if m.degree() <= i64::from(d) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// (1 - y_v)^a through degree `d`; for a < 0 this is the geometric-type series.
fn one_minus_y_power<C: Coeff + From<i64>>(v: usize, a: i64, d: u32) -> YPoly<C> {
    let mut out = YPoly::zero();
    let mut binom: i64 = 1;
    for m in 0..=i64::from(d) {
        if m > 0 {
            binom = binom * (a - m + 1) / m;
        }
        if binom == 0 {
            break;
        }
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let mono = Monomial::from_pairs([(v, u32::try_from(m).expect("small degree"))]);
        out.add_term(mono, C::from(sign * binom));
    }
    out
}

impl<C: Coeff> fmt::Display for YPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |f, m| {
            let mut first = true;
            for (v, e) in m.exponents() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "y{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            Ok(())
        })
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |f, m| {
            write!(f, "exp(")?;
            let mut first = true;
            for (v, e) in m.exponents() {
                let e: i64 = e.into();
                let sign = if e < 0 { "-" } else if first { "" } else { "+" };
                let mag = e.abs();
                if mag == 1 {
                    write!(f, "{sign}y{v}")?;
                } else {
                    write!(f, "{sign}{mag}y{v}")?;
                }
                first = false;
            }
            write!(f, ")")
        })
    }
}

fn write_terms<C: Coeff, E: Exp>(
    f: &mut fmt::Formatter<'_>,
    p: &Poly<C, E>,
    mono: impl Fn(&mut fmt::Formatter<'_>, &Monomial<E>) -> fmt::Result,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (x, (m, c)) in p.terms().enumerate() {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        match (x, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if m.is_one() {
            write!(f, "{mag}")?;
        } else {
            if mag != "1" {
                write!(f, "{mag}*")?;
            }
            mono(f, m)?;
        }
    }
    Ok(())
}
