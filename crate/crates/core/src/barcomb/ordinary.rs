//! Ordinary p-cores and p-quotients, and the doubling map from bar
//! partitions of `n` to partitions of `2n`.
//!
//! Quotient numbering: components are indexed `1..=p`, and component `j`
//! collects the beads `μ_k - k` whose residue mod `p` is `j - (p + 1) / 2`.
//! The middle component `(p + 1) / 2` is therefore the residue-0 runner; for
//! a doubled bar partition `D(λ)` it carries the beads `±λ_k` with `p | λ_k`.

use super::{BarPartition, Partition};
use crate::error::{Error, Result};

/// Number of beads used for the finite abacus: a multiple of `p` leaving
/// every runner with at least `extra` beads.
fn bead_count(len: usize, extra: usize, p: u32) -> usize {
    let p = p as usize;
    (len + p * (extra + 1)).div_ceil(p) * p
}

/// Component index (0-based) for a bead at `x - bead_count`, i.e. for
/// residue `x mod p` of the charge-0 position.
fn component_of_residue(r: u32, p: u32) -> usize {
    ((r + (p - 1) / 2) % p) as usize
}

fn runner_partition(positions: &[usize]) -> Partition {
    // positions sorted descending
    let m = positions.len();
    Partition::from_unsorted(positions.iter().enumerate().map(|(k, &y)| (y - (m - 1 - k)) as u32).collect())
}

/// The p-core and p-quotient `(μ¹, …, μᵖ)` of an ordinary partition.
pub fn partition_core_quotient(mu: &Partition, p: u32) -> Result<(Partition, Vec<Partition>)> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p = {p} must be at least 2")));
    }
    let n_beads = bead_count(mu.len(), 0, p);
    let beads: Vec<usize> =
        (0..n_beads).map(|k| mu.parts().get(k).copied().unwrap_or(0) as usize + n_beads - 1 - k).collect();
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); p as usize];
    for &b in &beads {
        runners[b % p as usize].push(b / p as usize);
    }
    let mut quotient = vec![Partition::empty(); p as usize];
    let mut core_beads = Vec::with_capacity(n_beads);
    for (r, pos) in runners.iter().enumerate() {
        quotient[component_of_residue(r as u32, p)] = runner_partition(pos);
        core_beads.extend((0..pos.len()).map(|j| j * p as usize + r));
    }
    core_beads.sort_unstable_by(|a, b| b.cmp(a));
    let core =
        Partition::from_unsorted(core_beads.iter().enumerate().map(|(k, &b)| (b + k + 1 - n_beads) as u32).collect());
    Ok((core, quotient))
}

/// Inverse of [`partition_core_quotient`].
pub fn partition_from_core_quotient(core: &Partition, quotient: &[Partition], p: u32) -> Result<Partition> {
    if p < 2 || quotient.len() != p as usize {
        return Err(Error::InvalidArgument(format!(
            "need p >= 2 and exactly p quotient components (p = {p}, got {})",
            quotient.len()
        )));
    }
    let (c, q) = partition_core_quotient(core, p)?;
    if c != *core {
        return Err(Error::InvalidArgument(format!("{core} is not a {p}-core")));
    }
    debug_assert!(q.iter().all(Partition::is_empty));
    let extra = quotient.iter().map(Partition::len).max().unwrap_or(0);
    let n_beads = bead_count(core.len(), extra, p);
    let mut counts = vec![0usize; p as usize];
    for k in 0..n_beads {
        let b = core.parts().get(k).copied().unwrap_or(0) as usize + n_beads - 1 - k;
        counts[b % p as usize] += 1;
    }
    let mut beads = Vec::with_capacity(n_beads);
    for (r, &m) in counts.iter().enumerate() {
        let comp = &quotient[component_of_residue(r as u32, p)];
        if comp.len() > m {
            return Err(Error::Internal("abacus too short for quotient".into()));
        }
        for k in 0..m {
            let pos = comp.parts().get(k).copied().unwrap_or(0) as usize + m - 1 - k;
            beads.push(pos * p as usize + r);
        }
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition::from_unsorted(beads.iter().enumerate().map(|(k, &b)| (b + k + 1 - n_beads) as u32).collect()))
}

/// The doubled partition `D(λ)` of `2|λ|`, with Frobenius symbol
/// `(λ₁, …, λ_k | λ₁ - 1, …, λ_k - 1)`.
pub fn doubling(lambda: &BarPartition) -> Partition {
    let k = lambda.len();
    let parts = lambda.parts();
    let mut rows: Vec<u32> = (0..k).map(|i| parts[i] + i as u32 + 1).collect();
    // column i (0-based) has length λ_i + i
    let cols: Vec<u32> = (0..k).map(|i| parts[i] + i as u32).collect();
    let mut j = k as u32;
    loop {
        let c = cols.iter().filter(|&&len| len > j).count() as u32;
        if c == 0 {
            break;
        }
        rows.push(c);
        j += 1;
    }
    Partition::new(rows).expect("Frobenius symbol gives a partition")
}
