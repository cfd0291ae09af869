use std::collections::BTreeMap;
use std::fmt;

use ipd_core::{BoundedAffinePermutation, Cell, Partition, PartialPermutation};
use ipd_dreams::{enumerate, PipeDream, TheoryMode};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::weights::{sign, wt_h, wt_k};
use crate::{ClassError, Coefficient, YPolynomial};

/// Where one summand of an expansion came from.
#[derive(Debug, Clone, PartialEq)]
pub struct DreamRecord {
    pub index: usize,
    pub lambda: Partition,
    pub fusing: usize,
    pub sign: i64,
    pub equivariant: Vec<Cell>,
    pub fusors: Vec<Cell>,
    /// Unsigned weight: 1 for H and K, wt_H for H_T, wt_K for K_T.
    pub weight: Coefficient,
}

impl DreamRecord {
    pub fn contribution(&self) -> Coefficient {
        self.weight.scaled(self.sign)
    }
}

/// A class written in the Schubert basis [X^λ] of Gr(k, n).
#[derive(Debug, Clone, PartialEq)]
pub struct SchubertExpansion {
    pub mode: TheoryMode,
    pub k: usize,
    pub n: usize,
    pub terms: BTreeMap<Partition, Coefficient>,
    pub records: Vec<DreamRecord>,
}

fn record(index: usize, p: &PipeDream, mode: TheoryMode) -> Result<DreamRecord, ClassError> {
    let weight = match mode {
        TheoryMode::H | TheoryMode::K => Coefficient::Int(1),
        TheoryMode::HT => Coefficient::Poly(wt_h(p)?),
        TheoryMode::KT => Coefficient::Laurent(wt_k(p)),
    };
    let signed = matches!(mode, TheoryMode::K | TheoryMode::KT);
    Ok(DreamRecord {
        index,
        lambda: p.lambda(),
        fusing: p.fusing(),
        sign: if signed { sign(p) } else { 1 },
        equivariant: p.equivariant_positions(),
        fusors: p.fusor_positions(),
        weight,
    })
}

/// Sum of signed dream weights, grouped by λ.
pub fn expand(f: &PartialPermutation, mode: TheoryMode) -> SchubertExpansion {
    let dreams = enumerate(f, mode);
    let records: Vec<DreamRecord> = dreams
        .par_iter()
        .enumerate()
        .map(|(x, p)| record(x, p, mode).expect("dreams of this mode carry weights"))
        .collect();
    SchubertExpansion::from_records(mode, f.k(), f.n(), records)
}

/// Expansion of an interval-type juggling pattern through its partial permutation.
pub fn expand_pattern(j: &BoundedAffinePermutation, mode: TheoryMode) -> Result<SchubertExpansion, ClassError> {
    let f = j.to_partial().ok_or_else(|| ClassError::NotInterval(j.to_string()))?;
    Ok(expand(&f, mode))
}

fn zero_of(mode: TheoryMode) -> Coefficient {
    match mode {
        TheoryMode::H | TheoryMode::K => Coefficient::Int(0),
        TheoryMode::HT => Coefficient::Poly(YPolynomial::zero()),
        TheoryMode::KT => Coefficient::Laurent(crate::ExpLaurent::zero()),
    }
}

impl SchubertExpansion {
    pub fn from_records(mode: TheoryMode, k: usize, n: usize, records: Vec<DreamRecord>) -> Self {
        let mut e = SchubertExpansion { mode, k, n, terms: BTreeMap::new(), records: Vec::new() };
        for r in &records {
            e.accumulate(r.lambda.clone(), &r.contribution()).expect("one coefficient kind per mode");
        }
        e.records = records;
        e
    }

    pub fn zero(mode: TheoryMode, k: usize, n: usize) -> Self {
        SchubertExpansion { mode, k, n, terms: BTreeMap::new(), records: Vec::new() }
    }

    fn accumulate(&mut self, lambda: Partition, c: &Coefficient) -> Result<(), ClassError> {
        let cur = self.terms.remove(&lambda).unwrap_or_else(|| zero_of(self.mode));
        let sum = cur.plus(c).ok_or(ClassError::CoefficientMismatch)?;
        if !sum.is_zero() {
            self.terms.insert(lambda, sum);
        }
        Ok(())
    }

    pub fn coefficient(&self, lambda: &Partition) -> Coefficient {
        self.terms.get(lambda).cloned().unwrap_or_else(|| zero_of(self.mode))
    }

    /// `self + c * other`; per-dream records are dropped.
    pub fn add_scaled(&self, other: &SchubertExpansion, c: i64) -> Result<SchubertExpansion, ClassError> {
        if (self.mode, self.k, self.n) != (other.mode, other.k, other.n) {
            return Err(ClassError::Incompatible);
        }
        let mut out = SchubertExpansion { records: Vec::new(), ..self.clone() };
        for (lambda, coeff) in &other.terms {
            out.accumulate(lambda.clone(), &coeff.scaled(c))?;
        }
        Ok(out)
    }

    /// Set every exp(y_i) to 1.
    pub fn specialize_kt_to_k(&self) -> Result<SchubertExpansion, ClassError> {
        self.expect_mode(TheoryMode::KT)?;
        let records = self
            .records
            .iter()
            .map(|r| {
                let w = r.weight.as_laurent().ok_or(ClassError::CoefficientMismatch)?;
                Ok(DreamRecord { weight: Coefficient::Int(w.at_one()), ..r.clone() })
            })
            .collect::<Result<Vec<_>, ClassError>>()?;
        let mut e = SchubertExpansion::zero(TheoryMode::K, self.k, self.n);
        for (lambda, c) in &self.terms {
            let w = c.as_laurent().ok_or(ClassError::CoefficientMismatch)?;
            e.accumulate(lambda.clone(), &Coefficient::Int(w.at_one()))?;
        }
        e.records = records;
        Ok(e)
    }

    /// Drop fused summands and keep the lowest-degree part of each remaining
    /// weight under exp(y_i) = 1 - y_i + ...
    pub fn specialize_kt_to_ht(&self) -> Result<SchubertExpansion, ClassError> {
        self.expect_mode(TheoryMode::KT)?;
        if self.records.is_empty() && !self.terms.is_empty() {
            return Err(ClassError::MissingRecords);
        }
        let records = self
            .records
            .iter()
            .filter(|r| r.fusing == 0)
            .map(|r| {
                let w = r.weight.as_laurent().ok_or(ClassError::CoefficientMismatch)?;
                let bound = u32::try_from(r.equivariant.len()).expect("few tiles");
                let low = w.lowest_degree_under(bound).unwrap_or_else(YPolynomial::zero);
                Ok(DreamRecord { sign: 1, weight: Coefficient::Poly(low), ..r.clone() })
            })
            .collect::<Result<Vec<_>, ClassError>>()?;
        Ok(SchubertExpansion::from_records(TheoryMode::HT, self.k, self.n, records))
    }

    fn expect_mode(&self, expected: TheoryMode) -> Result<(), ClassError> {
        if self.mode == expected {
            Ok(())
        } else {
            Err(ClassError::WrongMode { expected, found: self.mode })
        }
    }

    /// Checks that each H_T coefficient is a sum over dreams of products of
    /// pairwise distinct positive roots y_i - y_j, i < j.
    pub fn check_graham_positive(&self) -> Result<PositivityReport, ClassError> {
        self.expect_mode(TheoryMode::HT)?;
        if self.records.is_empty() && !self.terms.is_empty() {
            return Err(ClassError::MissingRecords);
        }
        let mut report = PositivityReport { dreams_checked: self.records.len(), violations: Vec::new() };
        let mut flag = |dream: Option<usize>, reason: String| report.violations.push(PositivityViolation { dream, reason });
        let mut sums: BTreeMap<Partition, YPolynomial> = BTreeMap::new();
        for r in &self.records {
            let Some(w) = r.weight.as_poly() else {
                flag(Some(r.index), "weight is not a polynomial".into());
                continue;
            };
            if r.sign != 1 {
                flag(Some(r.index), "negative sign".into());
            }
            let roots: Vec<(usize, usize)> = r.equivariant.iter().map(|c| (c.i, c.j)).collect();
            if let Some(&(i, j)) = roots.iter().find(|(i, j)| i >= j) {
                flag(Some(r.index), format!("factor y{i} - y{j} is not a positive root"));
            }
            let distinct: std::collections::BTreeSet<_> = roots.iter().collect();
            if distinct.len() != roots.len() {
                flag(Some(r.index), "repeated root factor".into());
            }
            let product: YPolynomial = roots.iter().map(|&(i, j)| YPolynomial::root(i, j)).product();
            if &product != w {
                flag(Some(r.index), format!("weight {w} is not the product of its roots"));
            }
            let slot = sums.entry(r.lambda.clone()).or_default();
            *slot = &*slot + w;
        }
        for (lambda, c) in &self.terms {
            let expected = sums.remove(lambda).unwrap_or_default();
            if c.as_poly() != Some(&expected) {
                flag(None, format!("coefficient of {lambda} is not the sum of its dream weights"));
            }
        }
        for (lambda, rest) in sums {
            if !rest.is_zero() {
                flag(None, format!("dreams for {lambda} do not appear in the terms"));
            }
        }
        Ok(report)
    }

    /// Every dream satisfies |λ| + fusing = dim + #equivariant, and every H_T
    /// coefficient is homogeneous of degree |λ| - dim.
    pub fn degree_law_holds(&self, dim: usize) -> bool {
        let dreams = self.records.iter().all(|r| r.lambda.size() + r.fusing == dim + r.equivariant.len());
        let terms = self.terms.iter().all(|(lambda, c)| match c {
            Coefficient::Poly(p) => {
                p.is_homogeneous() && p.min_degree() == Some(lambda.size() as i64 - dim as i64)
            }
            _ => true,
        });
        dreams && terms
    }

    /// In K, the coefficient of [X^λ] has sign (-1)^(|λ| - dim) or vanishes.
    pub fn sign_law_holds(&self, dim: usize) -> bool {
        self.terms.iter().all(|(lambda, c)| match c.as_int() {
            Some(v) => {
                let parity = (lambda.size() + dim).is_multiple_of(2);
                (v > 0) == parity
            }
            None => true,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityViolation {
    pub dream: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PositivityReport {
    pub dreams_checked: usize,
    pub violations: Vec<PositivityViolation>,
}

impl PositivityReport {
    pub fn is_positive(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.cmp(a.0)));
        for (x, (lambda, c)) in terms.into_iter().enumerate() {
            let (neg, body) = match c {
                Coefficient::Int(v) => (*v < 0, v.unsigned_abs().to_string()),
                other => (false, format!("({other})")),
            };
            match (x, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if body != "1" && body != "(1)" {
                write!(f, "{body}")?;
            }
            write!(f, "[X{lambda}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: Coefficient,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    mode: TheoryMode,
    k: usize,
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SchubertExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExpansionRepr {
            mode: self.mode,
            k: self.k,
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| TermRepr { partition: p.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchubertExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ExpansionRepr::deserialize(d)?;
        let mut e = SchubertExpansion::zero(r.mode, r.k, r.n);
        for t in r.terms {
            e.accumulate(t.partition, &t.coeff).map_err(serde::de::Error::custom)?;
        }
        Ok(e)
    }
}
