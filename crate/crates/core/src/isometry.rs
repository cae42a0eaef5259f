//! Signed label bijections between blocks, their kernels `Î = Σ χ̄ ⊗ I(χ)`,
//! kernel composition and the Broué conditions.
//!
//! Only the symmetric and alternating covers have character values here.
//! Isometries towards a local group are handled at the level of labels.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algnum::AlgNum;
use crate::barcomb::{bar_core_quotient, delta_bar, OddPrime, Sign};
use crate::blocks::{block_labels, BlockId, LocalLabel, Side};
use crate::error::{Error, Result};
use crate::spinchar::{group_order, labels, Assoc, CharacterTable, Cover, SpinLabel, SplitClass};
use crate::zverify::p_integrality;

/// An irreducible character on either end of an isometry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Character {
    Spin(SpinLabel),
    Local { side: Side, label: LocalLabel },
}

impl Character {
    fn spin(&self) -> Option<&SpinLabel> {
        match self {
            Character::Spin(x) => Some(x),
            Character::Local { .. } => None,
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Character::Spin(x) => write!(f, "{x}"),
            Character::Local { side, label } => write!(f, "{side}:{label}"),
        }
    }
}

/// `I(source) = sign · target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryEntry {
    pub source: Character,
    pub target: Character,
    pub sign: Sign,
}

/// A signed bijection between two sets of irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometrySpec {
    pub entries: Vec<IsometryEntry>,
}

impl IsometrySpec {
    /// Builds a spec, checking that sources and targets are both duplicate
    /// free.
    pub fn new(entries: Vec<IsometryEntry>) -> Result<IsometrySpec> {
        for (i, e) in entries.iter().enumerate() {
            if entries[..i].iter().any(|f| f.source == e.source || f.target == e.target) {
                return Err(Error::InvalidArgument(format!("{} or {} occurs twice", e.source, e.target)));
            }
        }
        Ok(IsometrySpec { entries })
    }

    pub fn identity(b: &BlockId) -> IsometrySpec {
        IsometrySpec {
            entries: block_labels(b)
                .into_iter()
                .map(|x| IsometryEntry {
                    source: Character::Spin(x.clone()),
                    target: Character::Spin(x),
                    sign: Sign::Plus,
                })
                .collect(),
        }
    }

    /// The image of `x`, with its sign.
    pub fn apply(&self, x: &Character) -> Option<(&Character, Sign)> {
        self.entries.iter().find(|e| e.source == *x).map(|e| (&e.target, e.sign))
    }

    pub fn inverse(&self) -> IsometrySpec {
        IsometrySpec {
            entries: self
                .entries
                .iter()
                .map(|e| IsometryEntry { source: e.target.clone(), target: e.source.clone(), sign: e.sign })
                .collect(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &IsometrySpec) -> Result<IsometrySpec> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let (t, s) = next
                    .apply(&e.target)
                    .ok_or_else(|| Error::InvalidArgument(format!("{} is not in the domain", e.target)))?;
                Ok(IsometryEntry { source: e.source.clone(), target: t.clone(), sign: e.sign * s })
            })
            .collect::<Result<_>>()?;
        if self.entries.len() != next.entries.len() {
            return Err(Error::InvalidArgument("isometries have domains of different sizes".into()));
        }
        Ok(IsometrySpec { entries })
    }

    pub fn sources(&self) -> impl Iterator<Item = &Character> {
        self.entries.iter().map(|e| &e.source)
    }

    pub fn targets(&self) -> impl Iterator<Item = &Character> {
        self.entries.iter().map(|e| &e.target)
    }
}

/// The isometry exchanging the associate pair labelled `lambda` and fixing
/// the rest of `b`.
pub fn swap_j(b: &BlockId, lambda: &crate::barcomb::BarPartition) -> Result<IsometrySpec> {
    let members = block_labels(b);
    let paired =
        [Assoc::Plus, Assoc::Minus].iter().all(|&a| members.iter().any(|x| x.shape == *lambda && x.assoc == a));
    if !paired {
        return Err(Error::InvalidArgument(format!("{lambda} does not label an associate pair in block {b}")));
    }
    let entries = members
        .into_iter()
        .map(|x| {
            let target = if x.shape == *lambda { SpinLabel { assoc: x.assoc.twist(), ..x.clone() } } else { x.clone() };
            IsometryEntry { source: Character::Spin(x), target: Character::Spin(target), sign: Sign::Plus }
        })
        .collect();
    Ok(IsometrySpec { entries })
}

/// The isometry sending `ξ_λ` to `δ_p̄(λ)·(-1)^{|λ⁰|}` times the local
/// character labelled by the p̄-quotient of `λ`, on side `G` when
/// `σ(B) = 1` and `H` otherwise. Associate pairs go to associate pairs,
/// `+` to `+`.
pub fn iso_i(b: &BlockId) -> Result<IsometrySpec> {
    if b.cover != Cover::Sym {
        return Err(Error::Unsupported("the local isometry is defined for the symmetric cover only".into()));
    }
    if b.weight == 0 {
        return Err(Error::InvalidArgument(format!("block {b} has weight 0")));
    }
    let side = Side::for_sign(b.sign);
    let entries = block_labels(b)
        .into_iter()
        .map(|x| {
            let (_, q) = bar_core_quotient(&x.shape, b.p);
            let sign = delta_bar(&x.shape, b.p) * Sign::from_parity(q.lambda0.size() as u64);
            let label = LocalLabel { quotient: q, assoc: x.assoc };
            IsometryEntry { source: Character::Spin(x), target: Character::Local { side, label }, sign }
        })
        .collect();
    IsometrySpec::new(entries)
}

/// A class function on (split classes of one cover) × (split classes of
/// another), stored on class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Kernel {
    pub rows: Vec<SplitClass>,
    pub columns: Vec<SplitClass>,
    pub row_group_order: u64,
    pub column_group_order: u64,
    pub entries: Vec<Vec<AlgNum>>,
}

impl Kernel {
    pub fn zero(
        rows: Vec<SplitClass>,
        row_group_order: u64,
        columns: Vec<SplitClass>,
        column_group_order: u64,
    ) -> Kernel {
        let entries = vec![vec![AlgNum::zero(); columns.len()]; rows.len()];
        Kernel { rows, columns, row_group_order, column_group_order, entries }
    }

    pub fn get(&self, x: &SplitClass, y: &SplitClass) -> Option<&AlgNum> {
        let i = self.rows.iter().position(|c| c == x)?;
        let j = self.columns.iter().position(|c| c == y)?;
        Some(&self.entries[i][j])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(AlgNum::is_zero)
    }
}

fn spin_row(table: &CharacterTable, x: &Character) -> Result<Vec<AlgNum>> {
    let label = x.spin().ok_or_else(|| Error::Unsupported(format!("no character values for local character {x}")))?;
    table
        .full_row(label)
        .ok_or_else(|| Error::InvalidArgument(format!("{label} is not a character of the given table")))
}

/// `Î(x, y) = Σ_χ sign(χ)·conj(χ(x))·I(χ)(y)` over all split classes.
pub fn kernel_of(spec: &IsometrySpec, source: &CharacterTable, target: &CharacterTable) -> Result<Kernel> {
    let mut k = Kernel::zero(
        source.split_classes(),
        group_order(source.cover(), source.n()),
        target.split_classes(),
        group_order(target.cover(), target.n()),
    );
    for e in &spec.entries {
        let a: Vec<AlgNum> = spin_row(source, &e.source)?.iter().map(AlgNum::conj).collect();
        let b: Vec<AlgNum> = spin_row(target, &e.target)?.into_iter().map(|v| v.scale_int(e.sign.to_i64())).collect();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                k.entries[i][j] += ai * bj;
            }
        }
    }
    Ok(k)
}

/// `(A∘B)(x, z) = (1/|G'|) Σ_y |y^{G'}|·A(x, y)·B(y, z)`.
pub fn compose_kernel(a: &Kernel, b: &Kernel) -> Result<Kernel> {
    if a.columns != b.rows || a.column_group_order != b.row_group_order {
        return Err(Error::InvalidArgument("kernels do not share the middle group".into()));
    }
    let order = a.column_group_order;
    let inv = BigRational::new(BigInt::from(1), BigInt::from(order));
    let mut out = Kernel::zero(a.rows.clone(), a.row_group_order, b.columns.clone(), b.column_group_order);
    for (i, arow) in a.entries.iter().enumerate() {
        for (y, ay) in arow.iter().enumerate() {
            if ay.is_zero() {
                continue;
            }
            let weighted =
                ay.scale(&(BigRational::from_integer(BigInt::from(order / a.columns[y].centralizer_order)) * &inv));
            for (j, byz) in b.entries[y].iter().enumerate() {
                if !byz.is_zero() {
                    out.entries[i][j] += &weighted * byz;
                }
            }
        }
    }
    Ok(out)
}

/// A class pair at which a Broué condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BroueFailure {
    pub x: SplitClass,
    pub y: SplitClass,
    pub value: AlgNum,
    pub condition: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BroueReport {
    pub p: OddPrime,
    pub integrality: bool,
    pub support: bool,
    pub failures: Vec<BroueFailure>,
}

impl BroueReport {
    pub fn passed(&self) -> bool {
        self.integrality && self.support
    }
}

/// (i) `K(x, y)/|C(x)|` and `K(x, y)/|C(y)|` are integral at `p`;
/// (ii) `K(x, y) = 0` when exactly one of `x`, `y` is p-regular.
pub fn broue_check(k: &Kernel, p: OddPrime) -> BroueReport {
    let mut failures = Vec::new();
    for (x, row) in k.rows.iter().zip(&k.entries) {
        for (y, v) in k.columns.iter().zip(row) {
            if !(p_integrality(v, p, x.centralizer_order) && p_integrality(v, p, y.centralizer_order)) {
                failures.push(BroueFailure { x: x.clone(), y: y.clone(), value: v.clone(), condition: "integrality" });
            }
            if x.is_p_regular(p) != y.is_p_regular(p) && !v.is_zero() {
                failures.push(BroueFailure { x: x.clone(), y: y.clone(), value: v.clone(), condition: "support" });
            }
        }
    }
    BroueReport {
        p,
        integrality: failures.iter().all(|f| f.condition != "integrality"),
        support: failures.iter().all(|f| f.condition != "support"),
        failures,
    }
}

fn alg_inner(order: u64, classes: &[SplitClass], f: &[AlgNum], g: &[AlgNum]) -> AlgNum {
    let inv = BigRational::new(BigInt::from(1), BigInt::from(order));
    classes
        .iter()
        .zip(f)
        .zip(g)
        .map(|((c, a), b)| {
            (a * b.conj()).scale(&(BigRational::from_integer(BigInt::from(order / c.centralizer_order)) * &inv))
        })
        .sum()
}

/// Whether `I ∘ res = res ∘ I`, with `res` the restriction to p-regular
/// classes, for a self-isometry of a cover block.
pub fn perfect_check(spec: &IsometrySpec, p: OddPrime) -> Result<bool> {
    let first = spec.entries.first().ok_or_else(|| Error::InvalidArgument("empty isometry".into()))?;
    let cover_label = first.source.spin().ok_or_else(|| Error::Unsupported("source is a local group".into()))?;
    for e in &spec.entries {
        if e.source.spin().is_none() || e.target.spin().is_none() {
            return Err(Error::Unsupported(format!("no character values for {} or {}", e.source, e.target)));
        }
    }
    let table = CharacterTable::new(cover_label.cover, cover_label.n())?;
    let classes = table.split_classes();
    let order = group_order(table.cover(), table.n());
    let restrict = |v: Vec<AlgNum>| -> Vec<AlgNum> {
        v.into_iter().zip(&classes).map(|(a, c)| if c.is_p_regular(p) { a } else { AlgNum::zero() }).collect()
    };
    let all: Vec<SpinLabel> = labels(table.cover(), table.n());
    let rows: Vec<Vec<AlgNum>> = all.iter().map(|x| table.full_row(x).expect("label of the table")).collect();
    for e in &spec.entries {
        let res = restrict(spin_row(&table, &e.source)?);
        let mut image = vec![AlgNum::zero(); classes.len()];
        let mut reconstructed = vec![AlgNum::zero(); classes.len()];
        for (psi, row) in all.iter().zip(&rows) {
            let c = alg_inner(order, &classes, &res, row);
            if c.is_zero() {
                continue;
            }
            for (r, v) in reconstructed.iter_mut().zip(row) {
                *r += &c * v;
            }
            let Some((t, s)) = spec.apply(&Character::Spin(psi.clone())) else {
                return Ok(false);
            };
            let c = c.scale_int(s.to_i64());
            for (r, v) in image.iter_mut().zip(spin_row(&table, t)?) {
                *r += &c * &v;
            }
        }
        if reconstructed != res {
            return Err(Error::Internal(format!("restriction of {} is not in the span of the characters", e.source)));
        }
        let expected: Vec<AlgNum> =
            restrict(spin_row(&table, &e.target)?).into_iter().map(|v| v.scale_int(e.sign.to_i64())).collect();
        if image != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
