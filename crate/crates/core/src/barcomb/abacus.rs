//! The bar abacus: removing `r`-bars, p̄-cores, p̄-quotients and the
//! relative sign.
//!
//! Runner convention. Parts divisible by `p` give `λ⁰` after division by `p`.
//! For `1 ≤ i ≤ (p-1)/2` the runners of residue `i` and `p - i` are merged
//! into a single bead set on ℤ: a part `jp + i` is a bead at position `j`,
//! and a part `jp + (p - i)` is a *gap* at position `-1 - j` (every other
//! negative position holds a bead). Sliding a bead one step down is exactly
//! the removal of a `p`-bar: subtracting `p` from a part on either runner, or
//! deleting the two parts `i` and `p - i`. The ordinary partition read off
//! this bead set is `λⁱ`, and its charge
//! `#{parts ≡ i} - #{parts ≡ -i}` is preserved by bar removal, so it pins
//! down the core.

use std::collections::BTreeSet;

use super::{BarPartition, BarQuotient, OddPrime, Partition, Sign};
use crate::error::{Error, Result};

/// The three shapes an `r`-bar can take, for odd `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarKind {
    /// Subtract `r` from a part larger than `r`.
    Shift,
    /// Delete a part equal to `r`.
    Delete,
    /// Delete two parts summing to `r`.
    Pair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarRemoval {
    pub result: BarPartition,
    pub kind: BarKind,
    /// Leg length; the sign of the removal is `(-1)^leg`.
    pub leg: u32,
}

/// Every way of removing an `r`-bar from `lambda`, with its leg length.
///
/// Leg lengths: for a shift `x ↦ x - r` the number of parts strictly between
/// `x - r` and `x`; for deleting the part `r` the number of parts below `r`;
/// for deleting `a > b` with `a + b = r`, the number of parts strictly
/// between `b` and `a`, plus `b`.
pub fn bar_removals(lambda: &BarPartition, r: u32) -> Vec<BarRemoval> {
    let parts = lambda.parts();
    let between = |lo: u32, hi: u32| parts.iter().filter(|&&y| lo < y && y < hi).count() as u32;
    let mut out = Vec::new();
    for &x in parts {
        if x > r && !lambda.contains_part(x - r) {
            let mut v: Vec<u32> = parts.iter().copied().filter(|&y| y != x).collect();
            v.push(x - r);
            v.sort_unstable_by(|a, b| b.cmp(a));
            out.push(BarRemoval {
                result: BarPartition::from_sorted_unchecked(v),
                kind: BarKind::Shift,
                leg: between(x - r, x),
            });
        } else if x == r {
            let v = parts.iter().copied().filter(|&y| y != x).collect();
            out.push(BarRemoval {
                result: BarPartition::from_sorted_unchecked(v),
                kind: BarKind::Delete,
                leg: between(0, r),
            });
        }
    }
    for &a in parts {
        if a < r && 2 * a > r && lambda.contains_part(r - a) {
            let b = r - a;
            let v = parts.iter().copied().filter(|&y| y != a && y != b).collect();
            out.push(BarRemoval {
                result: BarPartition::from_sorted_unchecked(v),
                kind: BarKind::Pair,
                leg: between(b, a) + b,
            });
        }
    }
    out
}

pub fn has_removable_bar(lambda: &BarPartition, p: OddPrime) -> bool {
    let p = p.get();
    let parts = lambda.parts();
    parts.iter().any(|&x| {
        x == p || (x > p && !lambda.contains_part(x - p)) || (x < p && 2 * x > p && lambda.contains_part(p - x))
    })
}

/// Bead positions of the merged runner pair `(i, p - i)`, together with the
/// charge. Positions below `-depth` are all beads and are omitted.
fn runner_pair(lambda: &BarPartition, p: u32, i: u32) -> (BTreeSet<i64>, i64, i64) {
    let plus: Vec<i64> = lambda.parts().iter().filter(|&&x| x % p == i).map(|&x| (x / p) as i64).collect();
    let minus: BTreeSet<i64> = lambda.parts().iter().filter(|&&x| x % p == p - i).map(|&x| (x / p) as i64).collect();
    let depth = minus.iter().next_back().map_or(0, |m| m + 1);
    let mut beads: BTreeSet<i64> = plus.iter().copied().collect();
    for j in 0..depth {
        if !minus.contains(&j) {
            beads.insert(-1 - j);
        }
    }
    let charge = plus.len() as i64 - minus.len() as i64;
    (beads, charge, depth)
}

/// Reads an ordinary partition off a bead set of the given charge.
fn partition_of_beads(beads: &BTreeSet<i64>, charge: i64) -> Partition {
    let parts = beads
        .iter()
        .rev()
        .enumerate()
        .map(|(k, &b)| b - (charge - 1 - k as i64))
        .filter(|&x| x > 0)
        .map(|x| x as u32)
        .collect();
    Partition::new(parts).expect("bead set reading is weakly decreasing")
}

/// The bar core with the given runner charges (index `i - 1` holds the charge
/// of the runner pair `(i, p - i)`).
fn core_from_charges(charges: &[i64], p: u32) -> Vec<u32> {
    let mut parts = Vec::new();
    for (idx, &c) in charges.iter().enumerate() {
        let i = idx as u32 + 1;
        if c > 0 {
            parts.extend((0..c as u32).map(|j| j * p + i));
        } else {
            parts.extend((1..=(-c) as u32).map(|j| j * p - i));
        }
    }
    parts
}

fn sorted_bar(mut parts: Vec<u32>) -> BarPartition {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    BarPartition::new(parts).expect("abacus produced repeated parts")
}

/// The p̄-core and p̄-quotient of `lambda`.
pub fn bar_core_quotient(lambda: &BarPartition, p: OddPrime) -> (BarPartition, BarQuotient) {
    let pv = p.get();
    let lambda0 =
        BarPartition::from_sorted_unchecked(lambda.parts().iter().filter(|&&x| x % pv == 0).map(|&x| x / pv).collect());
    let mut charges = Vec::with_capacity(p.half());
    let mut components = Vec::with_capacity(p.half());
    for i in 1..=p.half() as u32 {
        let (beads, charge, _) = runner_pair(lambda, pv, i);
        components.push(partition_of_beads(&beads, charge));
        charges.push(charge);
    }
    let core = sorted_bar(core_from_charges(&charges, pv));
    (core, BarQuotient { lambda0, components })
}

/// The p̄-weight of `lambda`.
pub fn bar_weight(lambda: &BarPartition, p: OddPrime) -> u32 {
    bar_core_quotient(lambda, p).1.weight()
}

/// Rebuilds the bar partition with the given p̄-core and p̄-quotient.
pub fn from_core_quotient(core: &BarPartition, q: &BarQuotient, p: OddPrime) -> Result<BarPartition> {
    if has_removable_bar(core, p) {
        return Err(Error::InvalidCore(core.to_string(), p.get()));
    }
    if q.components.len() != p.half() {
        return Err(Error::InvalidArgument(format!(
            "quotient has {} components, expected {} for p = {p}",
            q.components.len(),
            p.half()
        )));
    }
    let pv = p.get();
    let mut parts: Vec<u32> = q.lambda0.parts().iter().map(|&x| x * pv).collect();
    for (idx, comp) in q.components.iter().enumerate() {
        let i = idx as u32 + 1;
        let (_, charge, _) = runner_pair(core, pv, i);
        // positions λ_k + charge - k for k = 1..=len; below that the beads are
        // consecutive, so the lowest listed position bounds the gaps
        let len = comp.len() as i64 + charge.abs() + 1;
        let beads: BTreeSet<i64> =
            (1..=len).map(|k| comp.parts().get(k as usize - 1).copied().unwrap_or(0) as i64 + charge - k).collect();
        let floor = charge - len;
        for pos in floor..0 {
            if !beads.contains(&pos) {
                parts.push((-1 - pos) as u32 * pv + (pv - i));
            }
        }
        parts.extend(beads.iter().filter(|&&b| b >= 0).map(|&b| b as u32 * pv + i));
    }
    Ok(sorted_bar(parts))
}

/// The relative sign `δ_p̄(λ)`: the parity of the total leg length along any
/// sequence of `p`-bar removals from `lambda` down to its core.
///
/// The value does not depend on the removal sequence; the greedy sequence
/// below always removes the first available bar.
pub fn delta_bar(lambda: &BarPartition, p: OddPrime) -> Sign {
    let mut cur = lambda.clone();
    let mut legs = 0u64;
    loop {
        let mut removals = bar_removals(&cur, p.get());
        if removals.is_empty() {
            return Sign::from_parity(legs);
        }
        let first = removals.swap_remove(0);
        legs += first.leg as u64;
        cur = first.result;
    }
}
