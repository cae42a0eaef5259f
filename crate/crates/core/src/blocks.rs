//! Spin p-blocks, basic-set labels, local labels and Brauer character counts.
//!
//! Two spin characters lie in the same p-block exactly when their labels
//! have the same p̄-core. A character whose label is itself a p̄-core has
//! defect zero and is alone in its block, so the two members of an associate
//! pair with a p̄-core label form two blocks; [`BlockId::assoc`] tells them
//! apart.

use std::fmt;

use serde::Serialize;

use crate::barcomb::{bar_core_quotient, BarPartition, BarQuotient, OddPrime, Sign};
use crate::spinchar::{labels, Assoc, Cover, SpinLabel};

/// A spin p-block of one cover.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockId {
    #[serde(rename = "group")]
    pub cover: Cover,
    pub p: OddPrime,
    pub n: u32,
    pub core: BarPartition,
    pub weight: u32,
    /// `σ(B) = σ(core)`.
    pub sign: Sign,
    /// For defect-zero blocks of an associate pair, which member.
    #[serde(rename = "tag", skip_serializing_if = "Option::is_none")]
    pub assoc: Option<Assoc>,
}

impl BlockId {
    pub fn is_defect_zero(&self) -> bool {
        self.weight == 0
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} p={} core {} w={}", self.cover, self.n, self.p, self.core, self.weight)?;
        match self.assoc {
            Some(Assoc::Plus) => f.write_str(" (+)"),
            Some(Assoc::Minus) => f.write_str(" (-)"),
            _ => Ok(()),
        }
    }
}

pub fn block_of(x: &SpinLabel, p: OddPrime) -> BlockId {
    let (core, q) = bar_core_quotient(&x.shape, p);
    let weight = q.weight();
    let assoc = (weight == 0 && x.assoc != Assoc::SelfAssoc).then_some(x.assoc);
    BlockId { cover: x.cover, p, n: x.n(), sign: core.sigma(), core, weight, assoc }
}

/// All spin blocks with their labels, in order of first appearance in
/// [`labels`].
pub fn block_partition(cover: Cover, n: u32, p: OddPrime) -> Vec<(BlockId, Vec<SpinLabel>)> {
    let mut out: Vec<(BlockId, Vec<SpinLabel>)> = Vec::new();
    for x in labels(cover, n) {
        let b = block_of(&x, p);
        match out.iter_mut().find(|(id, _)| *id == b) {
            Some((_, members)) => members.push(x),
            None => out.push((b, vec![x])),
        }
    }
    out
}

pub fn block_labels(b: &BlockId) -> Vec<SpinLabel> {
    labels(b.cover, b.n).into_iter().filter(|x| block_of(x, b.p) == *b).collect()
}

/// Labels of `b` whose p̄-quotient has `λ⁰ = ∅`.
pub fn basic_set(b: &BlockId) -> Vec<SpinLabel> {
    block_labels(b).into_iter().filter(|x| bar_core_quotient(&x.shape, b.p).1.lambda0.is_empty()).collect()
}

/// The local group a block is compared with: `G` for blocks of sign `+1`,
/// `H` for sign `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn for_sign(sign: Sign) -> Side {
        match sign {
            Sign::Plus => Side::G,
            Sign::Minus => Side::H,
        }
    }

    /// Quotients of this sign label an associate pair on this side.
    fn paired_sign(self) -> Sign {
        match self {
            Side::G => Sign::Minus,
            Side::H => Sign::Plus,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::G => "G",
            Side::H => "H",
        })
    }
}

/// A spin character of a local group, labelled by a p̄-quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LocalLabel {
    pub quotient: BarQuotient,
    #[serde(rename = "tag")]
    pub assoc: Assoc,
}

impl fmt::Display for LocalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.quotient)?;
        match self.assoc {
            Assoc::SelfAssoc => Ok(()),
            Assoc::Plus => f.write_str("+"),
            Assoc::Minus => f.write_str("-"),
        }
    }
}

fn expand(quotients: Vec<BarQuotient>, side: Side) -> Vec<LocalLabel> {
    let mut out = Vec::new();
    for q in quotients {
        if q.sigma() == side.paired_sign() {
            out.push(LocalLabel { quotient: q.clone(), assoc: Assoc::Plus });
            out.push(LocalLabel { quotient: q, assoc: Assoc::Minus });
        } else {
            out.push(LocalLabel { quotient: q, assoc: Assoc::SelfAssoc });
        }
    }
    out
}

/// Spin characters of the local group on `side`, one or two per p̄-quotient
/// of weight `w`.
pub fn local_labels(w: u32, p: OddPrime, side: Side) -> Vec<LocalLabel> {
    expand(BarQuotient::all(w, p), side)
}

/// The local labels whose quotient has `λ⁰ = ∅`.
pub fn local_basic_labels(w: u32, p: OddPrime, side: Side) -> Vec<LocalLabel> {
    let qs = BarQuotient::all(w, p).into_iter().filter(|q| q.lambda0.is_empty()).collect();
    expand(qs, side)
}

/// Number of irreducible Brauer characters in `b`.
pub fn brauer_count(b: &BlockId) -> usize {
    if b.weight == 0 {
        return 1;
    }
    let tuples = BarQuotient::all(b.weight, b.p).iter().filter(|q| q.lambda0.is_empty()).count();
    let s = Sign::from_parity(b.weight as u64) * b.sign;
    let doubled = match b.cover {
        Cover::Sym => s == Sign::Minus,
        Cover::Alt => s == Sign::Plus,
    };
    if doubled {
        2 * tuples
    } else {
        tuples
    }
}
