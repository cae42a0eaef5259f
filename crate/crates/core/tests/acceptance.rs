//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use barspin_core::barcomb::{bar_core_quotient, doubling, from_core_quotient, partition_core_quotient};
use barspin_core::blocks::{basic_set, block_partition, brauer_count, local_basic_labels};
use barspin_core::isometry::{broue_check, iso_i, kernel_of, swap_j, Character};
use barspin_core::spinchar::{inner_product, odd_class_value, CharacterTable};
use barspin_core::zverify::{restricted_matrix_in, verify_all, verify_basic_set};
use barspin_core::{AlgNum, Assoc, BarPartition, Cover, IsometrySpec, OddPrime, Partition, Sign, SpinLabel};
use num_rational::BigRational;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

fn prime(p: u32) -> OddPrime {
    OddPrime::new(p).expect("odd prime")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Every spin block of both covers verifies for n ≤ 12 and p ∈ {3, 5, 7}.
fn basic_sets_verify() -> Outcome {
    let start = Instant::now();
    let jobs: Vec<(Cover, u32, u32)> = [Cover::Sym, Cover::Alt]
        .into_iter()
        .flat_map(|c| [3, 5, 7].into_iter().flat_map(move |p| (1..=12).map(move |n| (c, n, p))))
        .collect();
    let results: Vec<Result<(usize, Vec<String>), String>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .chunks(jobs.len().div_ceil(8))
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .iter()
                        .map(|&(cover, n, p)| {
                            let reports = verify_all(cover, n, prime(p)).map_err(err)?;
                            let failed = reports
                                .iter()
                                .filter(|r| !r.passed())
                                .map(|r| r.block.as_ref().map_or_else(String::new, ToString::to_string))
                                .collect();
                            Ok((reports.len(), failed))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut blocks = 0;
    let mut failed = Vec::new();
    for r in results {
        let (count, f) = r?;
        blocks += count;
        failed.extend(f);
    }
    ensure(failed.is_empty(), || format!("failing blocks: {}", failed.join("; ")))?;
    Ok(format!("{blocks} blocks verified in {:.1?}", start.elapsed()))
}

/// The n = 3, p = 3 block in full.
fn micro_instance() -> Outcome {
    let table = CharacterTable::new(Cover::Sym, 3).map_err(err)?;
    let blocks = block_partition(Cover::Sym, 3, prime(3));
    ensure(blocks.len() == 1, || format!("expected one block, got {}", blocks.len()))?;
    let b = &blocks[0].0;
    let m = restricted_matrix_in(&table, b).map_err(err)?;
    let cols: Vec<String> = m.columns.iter().map(|c| c.ty.cycle_type.to_string()).collect();
    ensure(cols == ["(1,1,1)", "(2,1)"], || format!("columns {cols:?}"))?;
    let i = AlgNum::i();
    let expected =
        vec![vec![AlgNum::from_int(2), AlgNum::zero()], vec![AlgNum::one(), i.clone()], vec![AlgNum::one(), -i]];
    ensure(m.entries == expected, || format!("rows {:?}", m.entries))?;
    let rows: Vec<String> = m.rows.iter().map(ToString::to_string).collect();
    ensure(rows == ["ξ(3)", "ξ(2,1)+", "ξ(2,1)-"], || format!("row labels {rows:?}"))?;
    let report = verify_basic_set(b).map_err(err)?;
    let basic: Vec<String> = report.candidates.iter().map(ToString::to_string).collect();
    ensure(basic == ["ξ(2,1)+", "ξ(2,1)-"], || format!("basic set {basic:?}"))?;
    ensure(report.passed(), || "verification failed".into())?;
    let one = BigRational::one();
    ensure(report.relations.len() == 1 && report.relations[0].coordinates == Some(vec![one.clone(), one]), || {
        format!("relations {:?}", report.relations)
    })?;
    Ok(report.relations[0].expression(&report.candidates))
}

/// `σ(λ) = σ(core)·(-1)^{w - ℓ(λ⁰)}` and the core/quotient roundtrip.
fn sign_identity() -> Outcome {
    let mut checked = 0;
    for p in [3, 5, 7, 11] {
        let p = prime(p);
        for n in 0..=30 {
            for lambda in BarPartition::all(n) {
                let (core, q) = bar_core_quotient(&lambda, p);
                let rhs = core.sigma() * Sign::from_parity(q.weight() as u64 + q.lambda0.len() as u64);
                ensure(lambda.sigma() == rhs, || format!("sign identity fails for {lambda}, p = {p}"))?;
                ensure(core.size() + p.get() * q.weight() == n, || format!("size of {lambda}"))?;
                let back = from_core_quotient(&core, &q, p).map_err(err)?;
                ensure(back == lambda, || format!("roundtrip of {lambda} gave {back}, p = {p}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (λ, p) pairs"))
}

/// `λ⁰ = ∅` exactly when component `(p+1)/2` of the p-quotient of `D(λ)`
/// is empty.
fn doubling_property() -> Outcome {
    let mut checked = 0;
    for p in [3, 5, 7] {
        let op = prime(p);
        for n in 0..=20 {
            for lambda in BarPartition::all(n) {
                let (_, q) = bar_core_quotient(&lambda, op);
                let d = doubling(&lambda);
                ensure(d.size() == 2 * n, || format!("|D({lambda})| = {}", d.size()))?;
                let (_, quotient) = partition_core_quotient(&d, p).map_err(err)?;
                // component (p+1)/2, counting from 1
                let middle = &quotient[(p as usize - 1) / 2];
                ensure(q.lambda0.is_empty() == middle.is_empty(), || {
                    format!("λ = {lambda}, p = {p}: λ⁰ = {}, middle component {middle}", q.lambda0)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (λ, p) pairs"))
}

/// `|basic set| = Brauer count = ℤ-rank` for every block.
fn counting() -> Outcome {
    let mut blocks = 0;
    for cover in [Cover::Sym, Cover::Alt] {
        for n in 1..=12 {
            let table = CharacterTable::new(cover, n).map_err(err)?;
            for p in [3, 5, 7] {
                for (b, _) in block_partition(cover, n, prime(p)) {
                    let m = restricted_matrix_in(&table, &b).map_err(err)?;
                    let rank = rank_of(&m.entries);
                    let basic = basic_set(&b).len();
                    let count = brauer_count(&b);
                    ensure(basic == count && count == rank, || {
                        format!("{b}: basic set {basic}, Brauer count {count}, rank {rank}")
                    })?;
                    blocks += 1;
                }
            }
        }
    }
    let fixture = |shape: &[u32]| -> Result<usize, String> {
        let x = SpinLabel {
            cover: Cover::Sym,
            shape: BarPartition::new(shape.to_vec()).map_err(err)?,
            assoc: Assoc::SelfAssoc,
        };
        let b = barspin_core::blocks::block_of(&x, prime(3));
        Ok(brauer_count(&b))
    };
    let a = fixture(&[3])?;
    let b = fixture(&[7])?;
    ensure(a == 2 && b == 2, || format!("fixtures gave {a} and {b}"))?;
    Ok(format!("{blocks} blocks; fixtures 2 and 2"))
}

/// Rank of an algebraic matrix by Gaussian elimination on its rational
/// coordinates over the radicals it uses.
fn rank_of(rows: &[Vec<AlgNum>]) -> usize {
    let keys: BTreeSet<_> = rows.iter().flatten().flat_map(|v| v.terms().map(|(k, _)| k)).collect();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().flat_map(|v| keys.iter().map(|&k| v.coefficient(k)).collect::<Vec<_>>()).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in bottom {
            let f = &row[c] / &pivot[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// Broué conditions for the swap kernel on blocks with an associate pair.
fn broue() -> Outcome {
    let mut kernels = 0;
    for p in [3, 5] {
        for n in 1..=9 {
            let table = CharacterTable::new(Cover::Sym, n).map_err(err)?;
            for (b, members) in block_partition(Cover::Sym, n, prime(p)) {
                for x in members.iter().filter(|x| x.assoc == Assoc::Plus && b.weight > 0) {
                    let j = swap_j(&b, &x.shape).map_err(err)?;
                    let k = kernel_of(&j, &table, &table).map_err(err)?;
                    let report = broue_check(&k, prime(p));
                    ensure(report.passed(), || format!("{b}, pair {}: {:?}", x.shape, report.failures.first()))?;
                    kernels += 1;
                }
            }
        }
    }
    let table = CharacterTable::new(Cover::Sym, 4).map_err(err)?;
    let four = BarPartition::new(vec![4]).map_err(err)?;
    let (b, _) = block_partition(Cover::Sym, 4, prime(3))
        .into_iter()
        .find(|(_, m)| m.iter().any(|x| x.shape == four))
        .ok_or("no block contains (4)")?;
    let i = kernel_of(&IsometrySpec::identity(&b), &table, &table).map_err(err)?;
    let j = kernel_of(&swap_j(&b, &four).map_err(err)?, &table, &table).map_err(err)?;
    let mut seen = Vec::new();
    for (r, x) in i.rows.iter().enumerate() {
        for (c, y) in i.columns.iter().enumerate() {
            let d = &j.entries[r][c] - &i.entries[r][c];
            let at = |c: &barspin_core::SplitClass| c.ty.cycle_type.parts() == [4];
            if at(x) && at(y) {
                let v = d.to_i64().ok_or_else(|| format!("discrepancy {d} is not an integer"))?;
                ensure(v.abs() == 8 && v % x.centralizer_order as i64 == 0 && x.centralizer_order == 8, || {
                    format!("discrepancy {v} at ({x}, {y}), centraliser {}", x.centralizer_order)
                })?;
                seen.push(format!("{v:+} at ({x},{y})"));
            } else {
                ensure(d.is_zero(), || format!("kernels differ at ({x}, {y})"))?;
            }
        }
    }
    ensure(seen.len() == 4, || format!("expected four discrepancies, got {seen:?}"))?;
    Ok(format!("{kernels} swap kernels; n = 4 discrepancy {}", seen[..2].join(", ")))
}

/// Row orthogonality for n ≤ 8 and agreement with Q-functions for n ≤ 6.
fn character_integrity() -> Outcome {
    let mut pairs = 0;
    for cover in [Cover::Sym, Cover::Alt] {
        for n in 1..=8 {
            let t = CharacterTable::new(cover, n).map_err(err)?;
            let rows: Vec<Vec<AlgNum>> = t.labels().iter().map(|x| t.full_row(x).expect("row")).collect();
            for (a, f) in rows.iter().enumerate() {
                for (b, g) in rows.iter().enumerate() {
                    let ip = inner_product(cover, n, f, g).map_err(err)?;
                    let expected = if a == b { BigRational::one() } else { BigRational::zero() };
                    ensure(ip == expected, || format!("⟨{}, {}⟩ = {ip}", t.labels()[a], t.labels()[b]))?;
                    pairs += 1;
                }
            }
        }
    }
    let q = common::QFunctions::new(6);
    let mut values = 0;
    for n in 1..=6 {
        for lambda in BarPartition::all(n) {
            for rho in Partition::all_odd_parts(n) {
                let ours = odd_class_value(&lambda, &rho).map_err(err)?;
                let oracle = q.value(&lambda, &rho);
                ensure(BigRational::from_integer(ours.into()) == oracle, || {
                    format!("ξ_{lambda}({rho}): recursion {ours}, Q-functions {oracle}")
                })?;
                values += 1;
            }
        }
    }
    Ok(format!("{pairs} inner products, {values} oracle values"))
}

/// The local isometry maps each basic set bijectively onto the local basic
/// labels.
fn label_transport() -> Outcome {
    let mut blocks = 0;
    for p in [3, 5, 7] {
        let op = prime(p);
        for n in 1..=12 {
            for (b, _) in block_partition(Cover::Sym, n, op) {
                if b.weight == 0 {
                    continue;
                }
                let spec = iso_i(&b).map_err(err)?;
                let basic = basic_set(&b);
                let images: Vec<Character> = basic
                    .iter()
                    .map(|x| {
                        spec.apply(&Character::Spin(x.clone())).map(|(t, _)| t.clone()).ok_or(format!("{x} unmapped"))
                    })
                    .collect::<Result<_, _>>()?;
                let image_set: BTreeSet<&Character> = images.iter().collect();
                let side = barspin_core::Side::for_sign(b.sign);
                let local: Vec<Character> = local_basic_labels(b.weight, op, side)
                    .into_iter()
                    .map(|label| Character::Local { side, label })
                    .collect();
                let local_set: BTreeSet<&Character> = local.iter().collect();
                ensure(image_set.len() == images.len() && image_set == local_set, || {
                    format!("{b}: basic set image differs from the local basic labels")
                })?;
                blocks += 1;
            }
        }
    }
    Ok(format!("{blocks} blocks of positive weight"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("basic sets verify for all blocks, n <= 12, p in {3,5,7}", basic_sets_verify),
        ("n = 3, p = 3 worked instance", micro_instance),
        ("sign identity and core/quotient roundtrip, n <= 30", sign_identity),
        ("doubling property, n <= 20", doubling_property),
        ("basic set size = Brauer count = Z-rank, n <= 12", counting),
        ("Broue conditions for swap kernels, n <= 9, p in {3,5}", broue),
        ("orthogonality n <= 8 and Q-function agreement n <= 6", character_integrity),
        ("local isometry transports basic sets, n <= 12", label_transport),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", k + 1),
            Err(e) => {
                failures += 1;
                println!("[FAIL] {}. {name}: {e}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
