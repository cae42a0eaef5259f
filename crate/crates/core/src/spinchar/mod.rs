//! Spin characters of the double covers `S̃_n` and `Ã_n`: labels, split
//! classes and exact values.
//!
//! A spin character vanishes off the split classes, and its value at `z·t`
//! is the negative of its value at `t`. Tables therefore store one value per
//! class type (the `z`-flag 0 class) and derive the rest.
//!
//! Split class types:
//!
//! * symmetric cover: `π ∈ O_n` (odd parts) then `π ∈ D_n⁻`;
//! * alternating cover: `π ∈ O_n`, where a `π` with distinct parts gives two
//!   types (the two `Ã_n`-classes over it), then `π ∈ D_n⁺ \ O_n`.
//!
//! Each group is listed lexicographically descending.

mod values;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algnum::AlgNum;
use crate::barcomb::{BarPartition, OddPrime, Partition, Sign};
use crate::error::{Error, Result};

/// Which double cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cover {
    Sym,
    Alt,
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cover::Sym => "sym",
            Cover::Alt => "alt",
        })
    }
}

/// Association tag of a spin label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Assoc {
    #[serde(rename = "self")]
    SelfAssoc,
    Plus,
    Minus,
}

impl Assoc {
    /// Swaps `Plus` and `Minus`.
    pub fn twist(self) -> Assoc {
        match self {
            Assoc::SelfAssoc => Assoc::SelfAssoc,
            Assoc::Plus => Assoc::Minus,
            Assoc::Minus => Assoc::Plus,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Assoc::SelfAssoc => "",
            Assoc::Plus => "+",
            Assoc::Minus => "-",
        }
    }
}

/// An irreducible spin character: `ξ_λ`, `ξ_λ^±` (symmetric cover) or
/// `ζ_λ`, `ζ_λ^±` (alternating cover).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinLabel {
    #[serde(rename = "group")]
    pub cover: Cover,
    pub shape: BarPartition,
    #[serde(rename = "tag")]
    pub assoc: Assoc,
}

impl SpinLabel {
    pub fn new(cover: Cover, shape: BarPartition, assoc: Assoc) -> Result<SpinLabel> {
        let expected_self = match cover {
            Cover::Sym => shape.sigma() == Sign::Plus,
            Cover::Alt => shape.sigma() == Sign::Minus || shape.parts() == [1],
        };
        if shape.is_empty() || expected_self != (assoc == Assoc::SelfAssoc) {
            return Err(Error::InvalidArgument(format!("no {cover} spin label {shape} with tag {assoc:?}")));
        }
        Ok(SpinLabel { cover, shape, assoc })
    }

    pub fn n(&self) -> u32 {
        self.shape.size()
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.cover {
            Cover::Sym => "ξ",
            Cover::Alt => "ζ",
        };
        write!(f, "{letter}{}{}", self.shape, self.assoc.suffix())
    }
}

/// The two `Ã_n`-classes lying over an `S̃_n`-class with distinct odd parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    First,
    Second,
}

/// A pair of split classes `{t, z·t}` of a cover, by cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassType {
    #[serde(rename = "group")]
    pub cover: Cover,
    pub cycle_type: Partition,
    pub half: Option<Half>,
}

impl ClassType {
    /// Whether every part is prime to `p`.
    pub fn is_p_regular(&self, p: OddPrime) -> bool {
        self.cycle_type.parts().iter().all(|x| x % p.get() != 0)
    }

    pub fn is_identity(&self) -> bool {
        self.cycle_type.parts().iter().all(|&x| x == 1)
    }
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_type)?;
        match self.half {
            None => Ok(()),
            Some(Half::First) => f.write_str("a"),
            Some(Half::Second) => f.write_str("b"),
        }
    }
}

/// One split class `t` (`z = false`) or `z·t` (`z = true`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitClass {
    #[serde(flatten)]
    pub ty: ClassType,
    #[serde(serialize_with = "serialize_flag")]
    pub z: bool,
    #[serde(rename = "centralizer")]
    pub centralizer_order: u64,
}

fn serialize_flag<S: serde::Serializer>(z: &bool, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u8(u8::from(*z))
}

impl SplitClass {
    pub fn is_p_regular(&self, p: OddPrime) -> bool {
        self.ty.is_p_regular(p)
    }
}

impl fmt::Display for SplitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z {
            f.write_str("z")?;
        }
        write!(f, "t{}", self.ty)
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Order of the cover.
pub fn group_order(cover: Cover, n: u32) -> u64 {
    match cover {
        Cover::Sym => 2 * factorial(n),
        Cover::Alt if n <= 1 => 2,
        Cover::Alt => factorial(n),
    }
}

/// Spin labels in canonical order: bar partitions lexicographically
/// descending, `+` before `-`.
pub fn labels(cover: Cover, n: u32) -> Vec<SpinLabel> {
    let mut out = Vec::new();
    for shape in BarPartition::all(n) {
        if n == 0 {
            break;
        }
        let paired = match cover {
            Cover::Sym => shape.sigma() == Sign::Minus,
            Cover::Alt => shape.sigma() == Sign::Plus && n > 1,
        };
        if paired {
            out.push(SpinLabel { cover, shape: shape.clone(), assoc: Assoc::Plus });
            out.push(SpinLabel { cover, shape, assoc: Assoc::Minus });
        } else {
            out.push(SpinLabel { cover, shape, assoc: Assoc::SelfAssoc });
        }
    }
    out
}

/// Twist by the sign lift `ε`.
pub fn epsilon_twist(x: &SpinLabel) -> SpinLabel {
    SpinLabel { assoc: x.assoc.twist(), ..x.clone() }
}

/// Split class types in canonical order.
pub fn class_types(cover: Cover, n: u32) -> Vec<ClassType> {
    let mut out = Vec::new();
    for pi in Partition::all_odd_parts(n) {
        if cover == Cover::Alt && pi.has_distinct_parts() && n > 1 {
            for h in [Half::First, Half::Second] {
                out.push(ClassType { cover, cycle_type: pi.clone(), half: Some(h) });
            }
        } else {
            out.push(ClassType { cover, cycle_type: pi, half: None });
        }
    }
    let second_sign = match cover {
        Cover::Sym => Sign::Minus,
        Cover::Alt => Sign::Plus,
    };
    for lambda in BarPartition::all(n) {
        let pi = lambda.as_partition();
        if lambda.sigma() == second_sign && !pi.all_odd() {
            out.push(ClassType { cover, cycle_type: pi, half: None });
        }
    }
    out
}

/// Centraliser order of either class of the type.
pub fn centralizer_order(ty: &ClassType) -> u64 {
    let z = ty.cycle_type.z();
    match ty.cover {
        Cover::Sym => 2 * z,
        Cover::Alt if ty.half.is_some() => 2 * z,
        Cover::Alt if ty.cycle_type.parts() == [1] => 2,
        Cover::Alt => z,
    }
}

/// Split classes, both `z`-flags per type; restricted to `p`-regular
/// classes when `p` is given.
pub fn split_classes(cover: Cover, n: u32, regular_only_for: Option<OddPrime>) -> Vec<SplitClass> {
    class_types(cover, n)
        .into_iter()
        .filter(|ty| regular_only_for.is_none_or(|p| ty.is_p_regular(p)))
        .flat_map(|ty| {
            let c = centralizer_order(&ty);
            [false, true].map(|z| SplitClass { ty: ty.clone(), z, centralizer_order: c })
        })
        .collect()
}

/// A conjugacy class of the cover, split or not, with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverClass {
    pub cycle_type: Partition,
    pub half: Option<Half>,
    /// `Some(flag)` for a split class, `None` when `t` and `z·t` are conjugate.
    pub z: Option<bool>,
    pub size: u64,
}

/// Every conjugacy class of the cover.
pub fn all_classes(cover: Cover, n: u32) -> Vec<CoverClass> {
    let split: Vec<ClassType> = class_types(cover, n);
    let order = group_order(cover, n);
    let mut out = Vec::new();
    for pi in Partition::all(n) {
        let even = (n as usize - pi.len()).is_multiple_of(2);
        if cover == Cover::Alt && !even {
            continue;
        }
        let types: Vec<&ClassType> = split.iter().filter(|t| t.cycle_type == pi).collect();
        if types.is_empty() {
            let size = 2 * factorial(n) / pi.z();
            out.push(CoverClass { cycle_type: pi, half: None, z: None, size });
        } else {
            for ty in types {
                let size = order / centralizer_order(ty);
                for z in [false, true] {
                    out.push(CoverClass { cycle_type: pi.clone(), half: ty.half, z: Some(z), size });
                }
            }
        }
    }
    out
}

/// `2^{⌊(n-ℓ)/2⌋} · n!/Πλ_i! · Π_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`, the degree
/// of any symmetric-cover spin character labelled by `λ`.
pub fn bar_length_degree(lambda: &BarPartition) -> u64 {
    let n = lambda.size();
    let parts = lambda.parts();
    let mut g = BigRational::from_integer(BigInt::from(factorial(n)));
    for &x in parts {
        g /= BigRational::from_integer(BigInt::from(factorial(x)));
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            g *= BigRational::new(BigInt::from(parts[i] - parts[j]), BigInt::from(parts[i] + parts[j]));
        }
    }
    let power = 1u64 << ((n as usize - parts.len()) / 2);
    let g: u64 = g.to_integer().try_into().expect("degree fits in u64");
    power * g
}

/// `ξ_λ(t_ρ)` for `ρ` with odd parts, computed by the bar-strip recursion.
pub fn odd_class_value(lambda: &BarPartition, rho: &Partition) -> Result<i64> {
    if !rho.all_odd() || rho.size() != lambda.size() {
        return Err(Error::InvalidArgument(format!("{rho} is not a partition of {} into odd parts", lambda.size())));
    }
    Ok(values::odd_class_value(lambda, rho.parts(), &mut values::Memo::default()))
}

/// Character degree.
pub fn degree(x: &SpinLabel) -> u64 {
    let d = bar_length_degree(&x.shape);
    match (x.cover, x.assoc) {
        (Cover::Alt, Assoc::Plus | Assoc::Minus) => d / 2,
        _ => d,
    }
}

/// Value of a spin character at a split class.
pub fn char_value(x: &SpinLabel, c: &SplitClass) -> Result<AlgNum> {
    if x.cover != c.ty.cover || x.n() != c.ty.cycle_type.size() {
        return Err(Error::InvalidArgument(format!("label {x} and class {c} belong to different groups")));
    }
    let v = values::value(x, &c.ty, &mut values::Memo::default());
    Ok(if c.z { -v } else { v })
}

/// Hermitian inner product `(1/|G|) Σ |class|·f·ḡ` of two class functions
/// given on `split_classes(cover, n, None)`; both must vanish off split
/// classes.
pub fn inner_product(cover: Cover, n: u32, f: &[AlgNum], g: &[AlgNum]) -> Result<BigRational> {
    let classes = split_classes(cover, n, None);
    if f.len() != classes.len() || g.len() != classes.len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} values, got {} and {}",
            classes.len(),
            f.len(),
            g.len()
        )));
    }
    let order = group_order(cover, n);
    let mut acc = AlgNum::zero();
    for ((c, a), b) in classes.iter().zip(f).zip(g) {
        acc += (a * b.conj()).scale_int((order / c.centralizer_order) as i64);
    }
    let acc = acc
        .to_rational()
        .ok_or_else(|| Error::InvalidArgument("inner product of these vectors is not rational".into()))?;
    Ok(acc / BigRational::from_integer(BigInt::from(order)))
}

/// All spin character values of one cover at one `n`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    cover: Cover,
    n: u32,
    labels: Vec<SpinLabel>,
    types: Vec<ClassType>,
    /// `values[label][type]` at `z`-flag 0.
    values: Vec<Vec<AlgNum>>,
}

impl CharacterTable {
    pub fn new(cover: Cover, n: u32) -> Result<CharacterTable> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let labels = labels(cover, n);
        let types = class_types(cover, n);
        let mut memo = values::Memo::default();
        let values = labels.iter().map(|x| types.iter().map(|t| values::value(x, t, &mut memo)).collect()).collect();
        Ok(CharacterTable { cover, n, labels, types, values })
    }

    pub fn cover(&self) -> Cover {
        self.cover
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[SpinLabel] {
        &self.labels
    }

    pub fn class_types(&self) -> &[ClassType] {
        &self.types
    }

    pub fn label_index(&self, x: &SpinLabel) -> Option<usize> {
        self.labels.iter().position(|y| y == x)
    }

    pub fn type_index(&self, t: &ClassType) -> Option<usize> {
        self.types.iter().position(|u| u == t)
    }

    /// Values at the `z`-flag 0 classes, in class-type order.
    pub fn row(&self, x: &SpinLabel) -> Option<&[AlgNum]> {
        self.label_index(x).map(|i| self.values[i].as_slice())
    }

    pub fn value(&self, x: &SpinLabel, c: &SplitClass) -> Option<AlgNum> {
        let v = self.values[self.label_index(x)?][self.type_index(&c.ty)?].clone();
        Some(if c.z { -v } else { v })
    }

    /// Values over `split_classes(cover, n, None)`.
    pub fn full_row(&self, x: &SpinLabel) -> Option<Vec<AlgNum>> {
        let row = self.row(x)?;
        Some(row.iter().flat_map(|v| [v.clone(), -v]).collect())
    }

    pub fn split_classes(&self) -> Vec<SplitClass> {
        split_classes(self.cover, self.n, None)
    }
}
