//! `fibsym`: classify Fibonacci and Lucas semigroup triples from the command line.
//!
//! Exit codes: 0 success, 1 discrepancies found by `verify`, 2 usage error,
//! 3 formula and oracle disagree in `analyze` or `sweep`.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fibsym::classify::sweep::{cross_check, sweep, OracleCheck, SweepOptions, SweepSummary};
use fibsym::{classify, classify_generic, BigUint, Family, GenSet3, IndexTriple};

use render::{AnalyzeReport, SweepReport, VerifyReport};

const EXIT_DISCREPANCY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fibsym",
    version,
    about = "Symmetry of numerical semigroups generated by Fibonacci and Lucas triples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one triple of indices or explicit generators.
    Analyze(AnalyzeArgs),
    /// Classify every ascending index triple up to a ceiling.
    Sweep(RangeArgs),
    /// Cross-check every closed form in a range against the sieve.
    Verify(RangeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Fibonacci,
    Lucas,
    Raw,
}

impl FamilyArg {
    fn family(self) -> Option<Family> {
        match self {
            FamilyArg::Fibonacci => Some(Family::Fibonacci),
            FamilyArg::Lucas => Some(Family::Lucas),
            FamilyArg::Raw => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Largest conductor the sieve will enumerate.
    #[arg(
        long,
        env = "FIBSYM_CONDUCTOR_CEILING",
        default_value_t = fibsym::oracle::DEFAULT_CONDUCTOR_CEILING,
        value_parser = clap::value_parser!(u64).range(1000..)
    )]
    conductor_ceiling: u64,
    /// Skip the sieve and report closed forms only.
    #[arg(long)]
    no_oracle: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, value_enum, required_unless_present = "raw")]
    family: Option<FamilyArg>,
    /// Treat the three numbers as generator values (same as `--family raw`).
    #[arg(long, conflicts_with = "family")]
    raw: bool,
    /// Three sequence indices, or three generators with `--raw`.
    #[arg(num_args = 3, required = true, value_name = "N")]
    values: Vec<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
    max_index: u32,
    /// Defaults to the family's smallest admissible index.
    #[arg(long)]
    min_index: Option<u32>,
    /// Worker threads for the sweep.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1024))]
    workers: Option<u64>,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fibsym: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn emit(common: &Common, document: &str) -> anyhow::Result<()> {
    match &common.output {
        Some(path) => std::fs::write(path, document).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{document}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn analyze(args: AnalyzeArgs) -> anyhow::Result<u8> {
    let family_arg = if args.raw { FamilyArg::Raw } else { args.family.expect("required unless --raw") };
    let family = family_arg.family();
    let (indices, verdict) = match family {
        Some(f) => {
            let mut ix = [0u32; 3];
            for (slot, s) in ix.iter_mut().zip(&args.values) {
                *slot = s.parse().with_context(|| format!("index {s:?} is not a nonnegative integer"))?;
            }
            let t = IndexTriple::new(f, ix)?;
            (Some(t.indices.map(|i| i.get())), classify(&t))
        }
        None => {
            let mut d: [BigUint; 3] = Default::default();
            for (slot, s) in d.iter_mut().zip(&args.values) {
                *slot = s.parse().with_context(|| format!("generator {s:?} is not a nonnegative integer"))?;
            }
            (None, classify_generic(&GenSet3::new(d)?))
        }
    };
    let oracle =
        if args.common.no_oracle { OracleCheck::Skipped } else { cross_check(&verdict, args.common.conductor_ceiling) };
    let report = AnalyzeReport { family: render::family_label(family), indices, verdict, oracle };
    let document = match args.common.format {
        Format::Text => render::analyze_text(&report, family),
        Format::Json => json(&report)?,
        Format::Csv => render::csv_document([render::csv_record(family, indices, &report.verdict, &report.oracle)])?,
    };
    emit(&args.common, &document)?;
    Ok(match report.oracle {
        OracleCheck::Disagrees { .. } => EXIT_INTERNAL,
        _ => 0,
    })
}

fn sweep_report(args: &RangeArgs) -> anyhow::Result<SweepReport> {
    let Some(family) = args.family.family() else {
        bail!("sweeps need a sequence family, not raw generators");
    };
    let min_index = args.min_index.unwrap_or(family.min_index()).max(family.min_index());
    if min_index > args.max_index {
        bail!("--min-index {min_index} is above --max-index {}", args.max_index);
    }
    let options = SweepOptions {
        min_index: Some(min_index),
        max_index: args.max_index,
        conductor_ceiling: args.common.conductor_ceiling,
        oracle: !args.common.no_oracle,
        workers: args.workers.map(|w| w as usize),
    };
    let rows = sweep(family, &options);
    let summary = SweepSummary::of(&rows);
    Ok(SweepReport {
        family,
        min_index,
        max_index: args.max_index,
        conductor_ceiling: args.common.conductor_ceiling,
        rows,
        summary,
    })
}

fn run_sweep(args: RangeArgs) -> anyhow::Result<u8> {
    let report = sweep_report(&args)?;
    let document = match args.common.format {
        Format::Text => render::sweep_text(&report),
        Format::Json => json(&report)?,
        Format::Csv => {
            // The footer goes to stderr so the CSV stays a plain table.
            eprint!("{}", render::sweep_summary_text(&report));
            render::csv_document(report.rows.iter().map(|r| {
                render::csv_record(Some(report.family), Some(r.triple.indices.map(|i| i.get())), &r.verdict, &r.oracle)
            }))?
        }
    };
    emit(&args.common, &document)?;
    Ok(if report.summary.disagreements() > 0 { EXIT_INTERNAL } else { 0 })
}

fn verify(args: RangeArgs) -> anyhow::Result<u8> {
    if args.common.no_oracle {
        bail!("verify needs the oracle; drop --no-oracle");
    }
    let sweep = sweep_report(&args)?;
    let report = VerifyReport::from_sweep(&sweep);
    let document = match args.common.format {
        Format::Text => render::verify_text(&report),
        Format::Json => json(&report)?,
        Format::Csv => render::csv_document(sweep.rows.iter().map(|r| {
            render::csv_record(Some(sweep.family), Some(r.triple.indices.map(|i| i.get())), &r.verdict, &r.oracle)
        }))?,
    };
    emit(&args.common, &document)?;
    Ok(if report.discrepancies.is_empty() { 0 } else { EXIT_DISCREPANCY })
}
