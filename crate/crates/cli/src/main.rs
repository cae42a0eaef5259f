//! `barspin`: enumerate bar cores and spin blocks, verify basic sets and
//! inspect the signed isometries between blocks.

mod report;
mod table;

use std::io::Write;
use std::process::ExitCode;

use barspin_core::{BarPartition, Cover, OddPrime};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use report::Output;

#[derive(Parser, Debug)]
#[command(name = "barspin", version, about = "Spin blocks, basic sets and isometries of the double covers")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List every bar partition of n with its p-bar core, weight and quotient.
    Cores(Options),
    /// List the spin p-blocks and their characters.
    Blocks(Options),
    /// List the basic-set labels of each block.
    BasicSet(Options),
    /// Verify that each basic set spans the block's lattice over the integers.
    Verify(Options),
    /// Compare basic-set size, Brauer character count and rank per block.
    Counts(Options),
    /// Show the local isometry and check the associate swaps of each block.
    Isometry(Options),
    /// Run a quick battery of internal consistency checks.
    Selftest(SelftestOptions),
}

#[derive(Args, Debug)]
struct Options {
    #[arg(long)]
    n: u32,
    /// An odd prime.
    #[arg(long, value_parser = parse_prime)]
    p: OddPrime,
    #[arg(long, value_enum, default_value_t = Group::Sym)]
    group: Group,
    /// Restrict to blocks with this p-bar core, e.g. "5,2"; "" is the empty core.
    #[arg(long, value_parser = parse_bar)]
    core: Option<BarPartition>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct SelftestOptions {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Sym,
    Alt,
}

impl From<Group> for Cover {
    fn from(g: Group) -> Cover {
        match g {
            Group::Sym => Cover::Sym,
            Group::Alt => Cover::Alt,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn parse_prime(s: &str) -> Result<OddPrime, String> {
    let p: u32 = s.trim().parse().map_err(|_| format!("{s:?} is not a number"))?;
    OddPrime::new(p).map_err(|e| e.to_string())
}

fn parse_bar(s: &str) -> Result<BarPartition, String> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() {
        return Ok(BarPartition::empty());
    }
    let parts = inner
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("{x:?} is not a positive integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.windows(2).any(|w| w[0] <= w[1]) {
        return Err(format!("{s:?} is not strictly decreasing"));
    }
    BarPartition::new(parts).map_err(|e| e.to_string())
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    exit_with(Cli::command().error(kind, msg))
}

/// Prints a parse error followed by the usage line and exits with status 2;
/// help and version requests go to stdout with status 0.
fn exit_with(e: clap::Error) -> ! {
    if !e.use_stderr() {
        e.exit()
    }
    let rendered = e.render().to_string();
    eprint!("{rendered}");
    if !rendered.contains("Usage:") {
        eprintln!("\n{}", Cli::command().render_usage());
    }
    std::process::exit(2)
}

fn configure_threads() {
    let Ok(v) = std::env::var("BARSPIN_THREADS") else {
        return;
    };
    let threads = match v.trim().parse::<usize>() {
        Ok(t) if t > 0 => t,
        _ => usage_error(ErrorKind::InvalidValue, format!("BARSPIN_THREADS must be a positive integer, got {v:?}")),
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().expect("the global pool is configured once");
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| exit_with(e));
    configure_threads();
    let (output, format) = match cli.verb {
        Verb::Selftest(o) => (Output::Selftest(report::selftest()), o.format),
        verb => {
            let (name, o) = match verb {
                Verb::Cores(o) => ("cores", o),
                Verb::Blocks(o) => ("blocks", o),
                Verb::BasicSet(o) => ("basic-set", o),
                Verb::Verify(o) => ("verify", o),
                Verb::Counts(o) => ("counts", o),
                Verb::Isometry(o) => ("isometry", o),
                Verb::Selftest(_) => unreachable!(),
            };
            if o.n == 0 && name != "cores" {
                usage_error(ErrorKind::ValueValidation, format!("{name} needs --n at least 1"));
            }
            let query = report::Query { cover: o.group.into(), n: o.n, p: o.p, core: o.core };
            let out = match name {
                "cores" => report::cores(&query).map(Output::Cores),
                "blocks" => report::blocks(&query).map(Output::Blocks),
                "basic-set" => report::basic_sets(&query).map(Output::BasicSet),
                "verify" => report::verify(&query).map(Output::Verify),
                "counts" => report::counts(&query).map(Output::Counts),
                _ => report::isometry(&query).map(Output::Isometry),
            };
            match out {
                Ok(out) => (out, o.format),
                Err(report::Failure::Usage(msg)) => usage_error(ErrorKind::ValueValidation, msg),
                Err(report::Failure::Internal(e)) => {
                    eprintln!("barspin: {e}");
                    return ExitCode::from(1);
                }
            }
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&output).expect("reports serialize") + "\n",
        Format::Table => table::render(&output),
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|()| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    if output.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
