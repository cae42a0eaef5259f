//! Plain-text rendering of the reports.

use std::fmt::Write;

use barspin_core::SpinLabel;

use crate::report::Output;

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn render(output: &Output) -> String {
    let mut s = String::new();
    match output {
        Output::Cores(r) => {
            writeln!(s, "{} bar partitions of {} (p = {})", r.partitions.len(), r.n, r.p).unwrap();
            for e in &r.partitions {
                writeln!(
                    s,
                    "{:<16} core {:<12} w={} quotient {} δ={}",
                    e.partition, e.core, e.weight, e.quotient, e.relative_sign
                )
                .unwrap();
            }
        }
        Output::Blocks(r) => {
            writeln!(s, "{} blocks", r.blocks.len()).unwrap();
            for e in &r.blocks {
                let dz = if e.defect_zero { ", defect zero" } else { "" };
                let n = e.characters.len();
                let noun = if n == 1 { "character" } else { "characters" };
                writeln!(s, "{} sign {}: {n} {noun}{dz}", e.block, e.block.sign).unwrap();
                writeln!(s, "  {}", list(&e.characters)).unwrap();
            }
        }
        Output::BasicSet(r) => {
            for e in &r.blocks {
                writeln!(s, "{}: {{{}}} ({} Brauer characters)", e.block, list(&e.basic_set), e.brauer_count).unwrap();
            }
        }
        Output::Verify(r) => {
            for v in &r.reports {
                let name = v.block.as_ref().map(ToString::to_string).unwrap_or_default();
                writeln!(s, "{name}: {}", verdict(v.passed())).unwrap();
                writeln!(s, "  basic set {{{}}}, rank {}", list(&v.candidates), v.rank.full_rank).unwrap();
                for rel in &v.relations {
                    let mark = if rel.integral { "" } else { "  (not integral)" };
                    writeln!(s, "  {}{mark}", rel.expression(&v.candidates)).unwrap();
                }
            }
            let m = &r.summary;
            writeln!(s, "{} blocks: {} passed, {} failed", m.blocks, m.passed, m.failed).unwrap();
        }
        Output::Counts(r) => {
            writeln!(s, "{:<40} {:>5} {:>5} {:>6} {:>5}", "block", "chars", "basic", "brauer", "rank").unwrap();
            for e in &r.blocks {
                let flag = if e.consistent { "" } else { "  MISMATCH" };
                writeln!(
                    s,
                    "{:<40} {:>5} {:>5} {:>6} {:>5}{flag}",
                    e.block.to_string(),
                    e.characters,
                    e.basic_set,
                    e.brauer_count,
                    e.rank
                )
                .unwrap();
            }
        }
        Output::Isometry(r) => {
            for e in &r.blocks {
                writeln!(s, "{}", e.block).unwrap();
                match &e.local {
                    Some(spec) => {
                        for x in &spec.entries {
                            writeln!(s, "  {} ↦ {}{}", x.source, sign_prefix(x.sign.is_plus()), x.target).unwrap();
                        }
                    }
                    None => writeln!(s, "  no local isometry").unwrap(),
                }
                for w in &e.swaps {
                    let label =
                        SpinLabel { cover: e.block.cover, shape: w.pair.clone(), assoc: barspin_core::Assoc::Plus };
                    writeln!(s, "  swap {label}: perfect {}, Broué {}", verdict(w.perfect), verdict(w.broue.passed()))
                        .unwrap();
                }
            }
        }
        Output::Selftest(r) => {
            for c in &r.checks {
                writeln!(s, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
        }
    }
    s
}

fn sign_prefix(plus: bool) -> &'static str {
    if plus {
        ""
    } else {
        "-"
    }
}
