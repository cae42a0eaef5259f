//! ℤ-span equality of restricted character values and basic-set
//! verification.
//!
//! A set of rows is a basic set when its restrictions to the p-regular
//! classes form a ℤ-basis of the lattice spanned by all restricted rows of
//! the block. Only the `z`-flag 0 classes are used: every spin value at
//! `z·t` is the negative of the value at `t`, so an integer relation between
//! rows on the `z`-flag 0 columns holds verbatim on the `z`-flag 1 columns.
//!
//! Entries are expanded over the ℚ-basis `{√d, i·√d}` of the radicals that
//! occur in the matrix and scaled by one common denominator, which turns the
//! question into one about integer matrices, settled with Hermite normal
//! forms.

mod hnf;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub use hnf::Hnf;

use crate::algnum::{AlgNum, BasisKey, Part};
use crate::barcomb::OddPrime;
use crate::blocks::{basic_set, block_labels, block_partition, BlockId};
use crate::error::{Error, Result};
use crate::spinchar::{split_classes, CharacterTable, Cover, SpinLabel, SplitClass};

/// Character values of some labels on the p-regular split classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueMatrix {
    pub rows: Vec<SpinLabel>,
    pub columns: Vec<SplitClass>,
    pub entries: Vec<Vec<AlgNum>>,
}

impl ValueMatrix {
    pub fn row(&self, x: &SpinLabel) -> Option<&[AlgNum]> {
        self.rows.iter().position(|y| y == x).map(|i| self.entries[i].as_slice())
    }

    /// The submatrix on the given labels, in the given order.
    pub fn select(&self, labels: &[SpinLabel]) -> Result<ValueMatrix> {
        let entries = labels
            .iter()
            .map(|x| {
                self.row(x)
                    .map(<[AlgNum]>::to_vec)
                    .ok_or_else(|| Error::InvalidArgument(format!("{x} is not a row of the matrix")))
            })
            .collect::<Result<_>>()?;
        Ok(ValueMatrix { rows: labels.to_vec(), columns: self.columns.clone(), entries })
    }
}

/// Restricted value matrix of `b`, rows in label order.
pub fn restricted_matrix(b: &BlockId) -> Result<ValueMatrix> {
    restricted_matrix_in(&CharacterTable::new(b.cover, b.n)?, b)
}

/// As [`restricted_matrix`], reading values from a prebuilt table.
pub fn restricted_matrix_in(table: &CharacterTable, b: &BlockId) -> Result<ValueMatrix> {
    if table.cover() != b.cover || table.n() != b.n {
        return Err(Error::InvalidArgument(format!("table does not belong to block {b}")));
    }
    let columns: Vec<SplitClass> = split_classes(b.cover, b.n, Some(b.p)).into_iter().filter(|c| !c.z).collect();
    let rows = block_labels(b);
    let entries = rows
        .iter()
        .map(|x| {
            columns
                .iter()
                .map(|c| table.value(x, c).ok_or_else(|| Error::Internal(format!("no value for {x} at {c}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(ValueMatrix { rows, columns, entries })
}

/// Whether `v / denominator` is integral at `p`.
pub fn p_integrality(v: &AlgNum, p: OddPrime, denominator: u64) -> bool {
    v.is_p_integral_over(p.get(), denominator)
}

/// The integer matrix of `rows` over the basis of radicals they use.
fn integer_expansion(rows: &[Vec<AlgNum>]) -> (Vec<BasisKey>, Vec<Vec<BigInt>>) {
    let keys: BTreeSet<BasisKey> = rows.iter().flatten().flat_map(|v| v.terms().map(|(k, _)| k)).collect();
    let keys: Vec<BasisKey> = keys.into_iter().collect();
    let mut lcm = BigInt::one();
    for v in rows.iter().flatten() {
        for (_, q) in v.terms() {
            lcm = lcm.lcm(q.denom());
        }
    }
    let scale = BigRational::from_integer(lcm);
    let ints = rows
        .iter()
        .map(|row| row.iter().flat_map(|v| keys.iter().map(|&k| (v.coefficient(k) * &scale).to_integer())).collect())
        .collect();
    (keys, ints)
}

fn basis_name((part, d): BasisKey) -> String {
    match (part, d) {
        (Part::Re, 1) => "1".into(),
        (Part::Re, d) => format!("√{d}"),
        (Part::Im, 1) => "i".into(),
        (Part::Im, d) => format!("i√{d}"),
    }
}

/// Outcome of a ℤ-span comparison on plain row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub candidates_independent: bool,
    /// For each non-candidate row (in row order): its index and its
    /// coordinates in the candidate rows, `None` when outside their ℚ-span.
    pub coordinates: Vec<(usize, Option<Vec<BigRational>>)>,
    pub candidate_rank: usize,
    pub full_rank: usize,
    /// Whether the candidate and full row lattices have the same HNF.
    pub hnf_equal: bool,
    pub basis: Vec<BasisKey>,
}

impl SpanReport {
    pub fn pass(&self) -> bool {
        self.candidates_independent
            && self.coordinates.iter().all(|(_, c)| c.as_ref().is_some_and(|c| c.iter().all(BigRational::is_integer)))
    }
}

/// Compares the ℤ-span of `rows[candidates]` with the ℤ-span of all `rows`.
pub fn span_report(rows: &[Vec<AlgNum>], candidates: &[usize]) -> Result<SpanReport> {
    if candidates.iter().any(|&i| i >= rows.len()) {
        return Err(Error::InvalidArgument("candidate index out of range".into()));
    }
    let (basis, ints) = integer_expansion(rows);
    let cand: Vec<Vec<BigInt>> = candidates.iter().map(|&i| ints[i].clone()).collect();
    let cand_hnf = Hnf::new(&cand);
    let full_hnf = Hnf::new(&ints);
    let candidates_independent = cand_hnf.rank() == candidates.len();
    let coordinates =
        (0..rows.len()).filter(|i| !candidates.contains(i)).map(|i| (i, cand_hnf.solve(&ints[i]))).collect();
    Ok(SpanReport {
        candidates_independent,
        coordinates,
        candidate_rank: cand_hnf.rank(),
        full_rank: full_hnf.rank(),
        hnf_equal: cand_hnf.basis() == full_hnf.basis(),
        basis,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

fn serialize_rationals<S: Serializer>(v: &Option<Vec<BigRational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(ToString::to_string)),
    }
}

/// A non-candidate row expressed in the candidate rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub label: SpinLabel,
    /// Rational coordinates as strings such as `"1"` or `"-1/2"`.
    #[serde(serialize_with = "serialize_rationals")]
    pub coordinates: Option<Vec<BigRational>>,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankData {
    pub candidate_rank: usize,
    pub full_rank: usize,
    pub hnf_equal: bool,
    /// The ℚ-basis the entries were expanded over.
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<BlockId>,
    pub columns: Vec<SplitClass>,
    pub candidates: Vec<SpinLabel>,
    pub verdict: Verdict,
    pub candidates_independent: bool,
    pub relations: Vec<Relation>,
    pub rank: RankData,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl Relation {
    /// The relation as text, e.g. `ξ(3) = ξ(2,1)+ + ξ(2,1)-`.
    pub fn expression(&self, candidates: &[SpinLabel]) -> String {
        let Some(coords) = &self.coordinates else {
            return format!("{} is outside the rational span", self.label);
        };
        let mut rhs = String::new();
        for (c, x) in coords.iter().zip(candidates) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if mag.is_one() { x.to_string() } else { format!("{mag}·{x}") };
            if rhs.is_empty() {
                if c.is_negative() {
                    rhs.push('-');
                }
            } else {
                rhs.push_str(if c.is_negative() { " - " } else { " + " });
            }
            rhs.push_str(&term);
        }
        if rhs.is_empty() {
            rhs.push('0');
        }
        format!("{} = {rhs}", self.label)
    }
}

/// Tests whether the rows of `candidate` span the same lattice as the rows
/// of `full`; every candidate row must also be a row of `full`.
pub fn z_span_equal(candidate: &ValueMatrix, full: &ValueMatrix) -> Result<VerificationReport> {
    let idx: Vec<usize> = candidate
        .rows
        .iter()
        .zip(&candidate.entries)
        .map(|(x, v)| match full.row(x) {
            Some(w) if w == v.as_slice() => Ok(full.rows.iter().position(|y| y == x).expect("row exists")),
            _ => Err(Error::InvalidArgument(format!("candidate row {x} is not a row of the full matrix"))),
        })
        .collect::<Result<_>>()?;
    if full.columns != candidate.columns {
        return Err(Error::InvalidArgument("candidate and full matrices have different columns".into()));
    }
    let span = span_report(&full.entries, &idx)?;
    let relations = span
        .coordinates
        .iter()
        .map(|(i, c)| Relation {
            label: full.rows[*i].clone(),
            integral: c.as_ref().is_some_and(|c| c.iter().all(BigRational::is_integer)),
            coordinates: c.clone(),
        })
        .collect();
    Ok(VerificationReport {
        block: None,
        columns: full.columns.clone(),
        candidates: candidate.rows.clone(),
        verdict: if span.pass() { Verdict::Pass } else { Verdict::Fail },
        candidates_independent: span.candidates_independent,
        relations,
        rank: RankData {
            candidate_rank: span.candidate_rank,
            full_rank: span.full_rank,
            hnf_equal: span.hnf_equal,
            basis: span.basis.into_iter().map(basis_name).collect(),
        },
    })
}

/// Checks that [`basic_set`] of `b` is a p-basic set.
pub fn verify_basic_set(b: &BlockId) -> Result<VerificationReport> {
    verify_basic_set_in(&CharacterTable::new(b.cover, b.n)?, b)
}

pub fn verify_basic_set_in(table: &CharacterTable, b: &BlockId) -> Result<VerificationReport> {
    let full = restricted_matrix_in(table, b)?;
    let candidate = full.select(&basic_set(b))?;
    let mut report = z_span_equal(&candidate, &full)?;
    report.block = Some(b.clone());
    Ok(report)
}

/// Verifies every spin block of the cover at `(n, p)`, in block order.
pub fn verify_all(cover: Cover, n: u32, p: OddPrime) -> Result<Vec<VerificationReport>> {
    let table = CharacterTable::new(cover, n)?;
    block_partition(cover, n, p).iter().map(|(b, _)| verify_basic_set_in(&table, b)).collect()
}
