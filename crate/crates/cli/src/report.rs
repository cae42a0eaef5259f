//! The computations behind each verb and their serialized reports.

use barspin_core::barcomb::{
    bar_core_quotient, delta_bar, enumerate_bar_partitions, from_core_quotient, has_removable_bar,
};
use barspin_core::blocks::{basic_set, block_partition, brauer_count};
use barspin_core::isometry::{broue_check, iso_i, kernel_of, perfect_check, swap_j, BroueReport};
use barspin_core::zverify::{verify_basic_set_in, VerificationReport};
use barspin_core::{
    Assoc, BarPartition, BarQuotient, BlockId, CharacterTable, Cover, Error, IsometrySpec, OddPrime, Sign, SpinLabel,
};
use rayon::prelude::*;
use serde::Serialize;

pub struct Query {
    pub cover: Cover,
    pub n: u32,
    pub p: OddPrime,
    pub core: Option<BarPartition>,
}

pub enum Failure {
    Usage(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Internal(e)
    }
}

type Result<T> = std::result::Result<T, Failure>;

#[derive(Serialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Output {
    Cores(CoresReport),
    Blocks(BlocksReport),
    BasicSet(BasicSetReport),
    Verify(VerifyReport),
    Counts(CountsReport),
    Isometry(IsometryReport),
    Selftest(SelftestReport),
}

impl Output {
    pub fn passed(&self) -> bool {
        match self {
            Output::Verify(r) => r.summary.failed == 0,
            Output::Counts(r) => r.blocks.iter().all(|b| b.consistent),
            Output::Isometry(r) => r.blocks.iter().flat_map(|b| &b.swaps).all(|s| s.perfect && s.broue.passed()),
            Output::Selftest(r) => r.checks.iter().all(|c| c.passed),
            Output::Cores(_) | Output::Blocks(_) | Output::BasicSet(_) => true,
        }
    }
}

#[derive(Serialize)]
pub struct CoreEntry {
    pub partition: BarPartition,
    pub core: BarPartition,
    pub weight: u32,
    pub quotient: BarQuotient,
    pub relative_sign: Sign,
}

#[derive(Serialize)]
pub struct CoresReport {
    pub n: u32,
    pub p: OddPrime,
    pub partitions: Vec<CoreEntry>,
}

#[derive(Serialize)]
pub struct BlockEntry {
    pub block: BlockId,
    pub defect_zero: bool,
    pub characters: Vec<SpinLabel>,
}

#[derive(Serialize)]
pub struct BlocksReport {
    pub group: Cover,
    pub n: u32,
    pub p: OddPrime,
    pub blocks: Vec<BlockEntry>,
}

#[derive(Serialize)]
pub struct BasicSetEntry {
    pub block: BlockId,
    pub basic_set: Vec<SpinLabel>,
    pub brauer_count: usize,
}

#[derive(Serialize)]
pub struct BasicSetReport {
    pub group: Cover,
    pub n: u32,
    pub p: OddPrime,
    pub blocks: Vec<BasicSetEntry>,
}

#[derive(Serialize)]
pub struct Summary {
    pub blocks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub group: Cover,
    pub n: u32,
    pub p: OddPrime,
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct CountEntry {
    pub block: BlockId,
    pub characters: usize,
    pub basic_set: usize,
    pub brauer_count: usize,
    pub rank: usize,
    pub verified: bool,
    pub consistent: bool,
}

#[derive(Serialize)]
pub struct CountsReport {
    pub group: Cover,
    pub n: u32,
    pub p: OddPrime,
    pub blocks: Vec<CountEntry>,
}

#[derive(Serialize)]
pub struct SwapReport {
    pub pair: BarPartition,
    pub perfect: bool,
    pub broue: BroueReport,
}

#[derive(Serialize)]
pub struct BlockIsometries {
    pub block: BlockId,
    /// The signed bijection to the local labels; symmetric cover, positive
    /// weight only.
    pub local: Option<IsometrySpec>,
    pub swaps: Vec<SwapReport>,
}

#[derive(Serialize)]
pub struct IsometryReport {
    pub group: Cover,
    pub n: u32,
    pub p: OddPrime,
    pub blocks: Vec<BlockIsometries>,
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

fn check_core(q: &Query) -> Result<()> {
    if let Some(core) = &q.core {
        if has_removable_bar(core, q.p) {
            return Err(Failure::Usage(format!("{core} is not a {}-bar core", q.p)));
        }
    }
    Ok(())
}

fn selected_blocks(q: &Query) -> Result<Vec<(BlockId, Vec<SpinLabel>)>> {
    check_core(q)?;
    let blocks: Vec<_> = block_partition(q.cover, q.n, q.p)
        .into_iter()
        .filter(|(b, _)| q.core.as_ref().is_none_or(|c| *c == b.core))
        .collect();
    match &q.core {
        Some(c) if blocks.is_empty() => {
            Err(Failure::Usage(format!("no {} block with n = {} and p = {} has core {c}", q.cover, q.n, q.p)))
        }
        _ => Ok(blocks),
    }
}

pub fn cores(q: &Query) -> Result<CoresReport> {
    check_core(q)?;
    let partitions = enumerate_bar_partitions(q.n)
        .into_iter()
        .map(|lambda| {
            let (core, quotient) = bar_core_quotient(&lambda, q.p);
            CoreEntry {
                weight: quotient.weight(),
                relative_sign: delta_bar(&lambda, q.p),
                partition: lambda,
                core,
                quotient,
            }
        })
        .filter(|e| q.core.as_ref().is_none_or(|c| *c == e.core))
        .collect();
    Ok(CoresReport { n: q.n, p: q.p, partitions })
}

pub fn blocks(q: &Query) -> Result<BlocksReport> {
    let blocks = selected_blocks(q)?
        .into_iter()
        .map(|(block, characters)| BlockEntry { defect_zero: block.is_defect_zero(), block, characters })
        .collect();
    Ok(BlocksReport { group: q.cover, n: q.n, p: q.p, blocks })
}

pub fn basic_sets(q: &Query) -> Result<BasicSetReport> {
    let blocks = selected_blocks(q)?
        .into_iter()
        .map(|(block, _)| BasicSetEntry { basic_set: basic_set(&block), brauer_count: brauer_count(&block), block })
        .collect();
    Ok(BasicSetReport { group: q.cover, n: q.n, p: q.p, blocks })
}

fn verify_blocks(q: &Query) -> Result<Vec<(BlockId, Vec<SpinLabel>, VerificationReport)>> {
    let selected = selected_blocks(q)?;
    let table = CharacterTable::new(q.cover, q.n)?;
    let reports =
        selected.par_iter().map(|(b, _)| verify_basic_set_in(&table, b)).collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(selected.into_iter().zip(reports).map(|((b, m), r)| (b, m, r)).collect())
}

pub fn verify(q: &Query) -> Result<VerifyReport> {
    let reports: Vec<_> = verify_blocks(q)?.into_iter().map(|(_, _, r)| r).collect();
    let passed = reports.iter().filter(|r| r.passed()).count();
    let summary = Summary { blocks: reports.len(), passed, failed: reports.len() - passed };
    Ok(VerifyReport { group: q.cover, n: q.n, p: q.p, reports, summary })
}

pub fn counts(q: &Query) -> Result<CountsReport> {
    let blocks = verify_blocks(q)?
        .into_iter()
        .map(|(block, members, r)| {
            let basic = basic_set(&block).len();
            let brauer = brauer_count(&block);
            let rank = r.rank.full_rank;
            CountEntry {
                characters: members.len(),
                basic_set: basic,
                brauer_count: brauer,
                rank,
                verified: r.passed(),
                consistent: r.passed() && basic == brauer && brauer == rank,
                block,
            }
        })
        .collect();
    Ok(CountsReport { group: q.cover, n: q.n, p: q.p, blocks })
}

fn block_isometries(table: &CharacterTable, block: &BlockId, members: &[SpinLabel]) -> Result<BlockIsometries> {
    let local = match iso_i(block) {
        Ok(spec) => Some(spec),
        Err(Error::Unsupported(_) | Error::InvalidArgument(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut swaps = Vec::new();
    for x in members.iter().filter(|x| x.assoc == Assoc::Plus && block.weight > 0) {
        let j = swap_j(block, &x.shape)?;
        let k = kernel_of(&j, table, table)?;
        swaps.push(SwapReport {
            pair: x.shape.clone(),
            perfect: perfect_check(&j, block.p)?,
            broue: broue_check(&k, block.p),
        });
    }
    Ok(BlockIsometries { block: block.clone(), local, swaps })
}

pub fn isometry(q: &Query) -> Result<IsometryReport> {
    let selected = selected_blocks(q)?;
    let table = CharacterTable::new(q.cover, q.n)?;
    let blocks = selected.par_iter().map(|(b, m)| block_isometries(&table, b, m)).collect::<Result<Vec<_>>>()?;
    Ok(IsometryReport { group: q.cover, n: q.n, p: q.p, blocks })
}

fn prime(p: u32) -> OddPrime {
    OddPrime::new(p).expect("odd prime")
}

fn run_check(name: &str, f: impl FnOnce() -> std::result::Result<String, String>) -> Check {
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { name: name.to_string(), passed, detail }
}

pub fn selftest() -> SelftestReport {
    let worked = run_check("n = 3, p = 3 worked instance", || {
        let q = Query { cover: Cover::Sym, n: 3, p: prime(3), core: Some(BarPartition::empty()) };
        let r = verify(&q).map_err(|_| "verification errored".to_string())?;
        let report = &r.reports[0];
        let relation = report.relations.first().map(|rel| rel.expression(&report.candidates)).unwrap_or_default();
        if report.passed() && relation == "ξ(3) = ξ(2,1)+ + ξ(2,1)-" {
            Ok(relation)
        } else {
            Err(format!("got {relation:?}"))
        }
    });
    let roundtrip = run_check("core and quotient determine the bar partition, n <= 20", || {
        let mut count = 0;
        for p in [3, 5, 7] {
            for n in 0..=20 {
                for lambda in enumerate_bar_partitions(n) {
                    let (core, quotient) = bar_core_quotient(&lambda, prime(p));
                    let back = from_core_quotient(&core, &quotient, prime(p)).map_err(|e| e.to_string())?;
                    if back != lambda {
                        return Err(format!("{lambda} at p = {p} came back as {back}"));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!("{count} (λ, p) pairs"))
    });
    let mut verified = 0;
    let mut failures = Vec::new();
    for cover in [Cover::Sym, Cover::Alt] {
        for p in [3, 5, 7] {
            for n in 1..=8 {
                match counts(&Query { cover, n, p: prime(p), core: None }) {
                    Ok(r) => {
                        for b in r.blocks {
                            verified += 1;
                            if !b.consistent {
                                failures.push(b.block.to_string());
                            }
                        }
                    }
                    Err(_) => failures.push(format!("{cover} n={n} p={p}")),
                }
            }
        }
    }
    let blocks = run_check("basic sets verify and counts agree, n <= 8", || {
        if failures.is_empty() {
            Ok(format!("{verified} blocks"))
        } else {
            Err(format!("failed: {}", failures.join(", ")))
        }
    });
    SelftestReport { checks: vec![worked, roundtrip, blocks] }
}
