//! Partitions, bar partitions and their abaci.

mod abacus;
mod ordinary;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use abacus::{
    bar_core_quotient, bar_removals, bar_weight, delta_bar, from_core_quotient, has_removable_bar, BarKind, BarRemoval,
};
pub use ordinary::{doubling, partition_core_quotient, partition_from_core_quotient};

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^e`.
    pub fn from_parity(e: u64) -> Sign {
        if e.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            v => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {v}"))),
        }
    }
}

/// An odd prime, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OddPrime(u32);

impl OddPrime {
    pub fn new(p: u32) -> Result<OddPrime> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !prime || p == 2 {
            return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
        }
        Ok(OddPrime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of partition components `(p - 1) / 2` in a p̄-quotient besides `λ⁰`.
    pub fn half(self) -> usize {
        (self.0 as usize - 1) / 2
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// An ordinary partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a weakly decreasing list of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 1)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `Π i^{m_i} m_i!`, the order of the centraliser of an element of this
    /// cycle type in the symmetric group.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i] as u64;
            let mut m = 0u64;
            while i < self.0.len() && self.0[i] as u64 == part {
                m += 1;
                i += 1;
                z *= part * m;
            }
        }
        z
    }

    /// All partitions of `n` in lexicographically descending order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, false, &mut cur, &mut out);
        out.into_iter().map(Partition).collect()
    }

    /// Partitions of `n` into odd parts, lexicographically descending.
    pub fn all_odd_parts(n: u32) -> Vec<Partition> {
        Partition::all(n).into_iter().filter(Partition::all_odd).collect()
    }

    /// Strictly decreasing parts, if they are.
    pub fn to_bar(&self) -> Option<BarPartition> {
        self.has_distinct_parts().then(|| BarPartition(self.0.clone()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

fn gen_partitions(n: u32, max: u32, strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for a in (1..=n.min(max)).rev() {
        cur.push(a);
        let next_max = if strict { a - 1 } else { a };
        gen_partitions(n - a, next_max, strict, cur, out);
        cur.pop();
    }
}

/// A bar partition: strictly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BarPartition(Vec<u32>);

impl BarPartition {
    pub fn new(parts: Vec<u32>) -> Result<BarPartition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a strictly decreasing list of positive integers"
            )));
        }
        Ok(BarPartition(parts))
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> BarPartition {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]) && !parts.contains(&0));
        BarPartition(parts)
    }

    pub fn empty() -> BarPartition {
        BarPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_part(&self, x: u32) -> bool {
        self.0.contains(&x)
    }

    /// `σ(λ) = (-1)^{|λ| - ℓ(λ)}`; `λ ∈ D_n^{σ(λ)}`.
    pub fn sigma(&self) -> Sign {
        Sign::from_parity((self.size() as u64) - self.len() as u64)
    }

    /// Product of the parts.
    pub fn part_product(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).product()
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// All bar partitions of `n`, lexicographically descending.
    pub fn all(n: u32) -> Vec<BarPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, true, &mut cur, &mut out);
        out.into_iter().map(BarPartition).collect()
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl<'de> Deserialize<'de> for BarPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BarPartition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// The p̄-quotient `(λ⁰; λ¹, …, λ^{(p-1)/2})` of a bar partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarQuotient {
    pub lambda0: BarPartition,
    pub components: Vec<Partition>,
}

impl BarQuotient {
    /// The quotient with every component empty.
    pub fn empty(p: OddPrime) -> BarQuotient {
        BarQuotient { lambda0: BarPartition::empty(), components: vec![Partition::empty(); p.half()] }
    }

    pub fn weight(&self) -> u32 {
        self.lambda0.size() + self.components.iter().map(Partition::size).sum::<u32>()
    }

    /// `σ(q) = (-1)^{w - ℓ(λ⁰)}`.
    pub fn sigma(&self) -> Sign {
        Sign::from_parity(self.weight() as u64 + self.lambda0.len() as u64)
    }

    /// All p̄-quotients of weight `w`.
    ///
    /// Ordered by the vector of component sizes `(|λ⁰|, |λ¹|, …)` in
    /// lexicographically descending order, then by each component in turn.
    pub fn all(w: u32, p: OddPrime) -> Vec<BarQuotient> {
        let mut out = Vec::new();
        for sizes in compositions(w, p.half() + 1) {
            let mut acc = vec![BarQuotient { lambda0: BarPartition::empty(), components: Vec::new() }];
            for (slot, &s) in sizes.iter().enumerate() {
                let mut next = Vec::new();
                for q in &acc {
                    if slot == 0 {
                        for l0 in BarPartition::all(s) {
                            next.push(BarQuotient { lambda0: l0, components: Vec::new() });
                        }
                    } else {
                        for c in Partition::all(s) {
                            let mut q = q.clone();
                            q.components.push(c);
                            next.push(q);
                        }
                    }
                }
                acc = next;
            }
            out.extend(acc);
        }
        out
    }
}

impl fmt::Display for BarQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.lambda0)?;
        for c in &self.components {
            write!(f, "; {c}")?;
        }
        f.write_str("]")
    }
}

/// Weak compositions of `w` into `k` parts, lexicographically descending.
fn compositions(w: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if w == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if k == 1 {
        return vec![vec![w]];
    }
    let mut out = Vec::new();
    for first in (0..=w).rev() {
        for mut rest in compositions(w - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Bar partitions of `n`; alias kept for callers that think in operations.
pub fn enumerate_bar_partitions(n: u32) -> Vec<BarPartition> {
    BarPartition::all(n)
}

pub fn sigma(lambda: &BarPartition) -> Sign {
    lambda.sigma()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bar(v: &[u32]) -> BarPartition {
        BarPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(BarPartition::all(0), vec![BarPartition::empty()]);
        let six: Vec<_> = BarPartition::all(6);
        assert_eq!(six, vec![bar(&[6]), bar(&[5, 1]), bar(&[4, 2]), bar(&[3, 2, 1])]);
        assert_eq!(BarPartition::all(7).len(), 5);
    }

    /// Brute force over subsets of {1..n}.
    #[test]
    fn enumerate_matches_subset_oracle() {
        for n in 0..=16u32 {
            let mut brute: Vec<Vec<u32>> = (0u32..(1 << n))
                .map(|mask| (1..=n).rev().filter(|i| mask >> (i - 1) & 1 == 1).collect::<Vec<_>>())
                .filter(|v| v.iter().sum::<u32>() == n)
                .collect();
            brute.sort_by(|a, b| b.cmp(a));
            let ours: Vec<Vec<u32>> = BarPartition::all(n).iter().map(|b| b.parts().to_vec()).collect();
            assert_eq!(ours, brute, "n = {n}");
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(BarPartition::empty().sigma(), Sign::Plus);
        assert_eq!(bar(&[3, 2, 1]).sigma(), Sign::Minus);
        assert_eq!(bar(&[7]).sigma(), Sign::Plus);
    }

    /// σ(λ) = +1 exactly when λ has an even number of even parts.
    #[test]
    fn sigma_counts_even_parts() {
        for n in 0..=20 {
            for l in BarPartition::all(n) {
                let evens = l.parts().iter().filter(|x| *x % 2 == 0).count();
                assert_eq!(l.sigma(), Sign::from_parity(evens as u64));
            }
        }
    }

    #[test]
    fn validation() {
        assert!(BarPartition::new(vec![2, 2]).is_err());
        assert!(BarPartition::new(vec![1, 2]).is_err());
        assert!(BarPartition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![2, 2, 1]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(OddPrime::new(2).is_err());
        assert!(OddPrime::new(9).is_err());
        assert!(OddPrime::new(1).is_err());
        assert_eq!(OddPrime::new(11).unwrap().half(), 5);
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::new(vec![1, 1, 1]).unwrap().z(), 6);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().z(), 2);
        assert_eq!(Partition::new(vec![3, 3, 1]).unwrap().z(), 18);
        assert_eq!(Partition::new(vec![2, 2, 2]).unwrap().z(), 48);
    }

    #[test]
    fn quotient_counts() {
        let p3 = OddPrime::new(3).unwrap();
        let p5 = OddPrime::new(5).unwrap();
        // (λ⁰; λ¹): Σ_{a+b=w} q(a) p(b) with q the strict partition count
        assert_eq!(BarQuotient::all(1, p3).len(), 2);
        assert_eq!(BarQuotient::all(2, p3).len(), 1 + 1 + 2);
        let w3: Vec<_> = BarQuotient::all(3, p5).into_iter().filter(|q| q.lambda0.is_empty()).collect();
        assert_eq!(w3.len(), 10);
        assert!(BarQuotient::all(4, p5).iter().all(|q| q.weight() == 4));
    }
}
