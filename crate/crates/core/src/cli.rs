//! Command-line front end. [`run`] returns the process exit status: 0 on
//! success, 1 for bad input data, 2 for usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchConfig, BenchRow, Engine};
use crate::corpus::{generate, GenSpec};
use crate::naive::{brute_apr, ed_to_prefix, edit_distance};
use crate::recovery::{
    recover_with_jobs, report_json, report_tsv, tau, PeriodReport, RecoveryParams,
};

/// Environment variable holding the default `--jobs` for `recover`.
pub const JOBS_ENV: &str = "APERIOD_JOBS";

#[derive(Debug, Parser)]
#[command(name = "aperiod", version, about = "Approximate periods under edit distance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recover all approximate word-periods of a file.
    Recover(RecoverArgs),
    /// Distances from a text to the powers of a pattern's rotations.
    Apm(ApmArgs),
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Write a seeded periodic corpus with random edits.
    Gen(GenArgs),
    /// Time the APM engines over a range of text lengths.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Kangaroo,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BenchEngineArg {
    Kangaroo,
    Full,
    Both,
}

#[derive(Debug, Args)]
struct RecoverArgs {
    #[arg(long)]
    input: PathBuf,
    /// ε as NUM/DEN.
    #[arg(long, default_value = "1/20")]
    epsilon: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Verification threads; defaults to $APERIOD_JOBS or 1.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct ApmArgs {
    #[arg(long)]
    text: PathBuf,
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "kangaroo")]
    engine: EngineArg,
    /// Report per rotation start instead of per last-row column.
    #[arg(long)]
    per_rotation: bool,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Plain edit distance between two files.
    Ed {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Least edit distance from a text to a prefix of a pattern's power.
    Prefix {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Approximate word-periods by exhaustive subword enumeration.
    Apr {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "1/20")]
        epsilon: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    edits: usize,
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated text lengths.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "both")]
    engine: BenchEngineArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    edits: usize,
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    /// Timed runs per point; the median is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
    runs: u64,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))
}

fn params(epsilon: &str) -> Result<RecoveryParams, Failure> {
    epsilon.parse().map_err(|e: crate::Error| Failure::Usage(e.to_string()))
}

fn write_periods(out: &mut dyn Write, n: usize, p: RecoveryParams, periods: &[PeriodReport], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report_json(n, p, periods)),
        Format::Tsv => write!(out, "{}", report_tsv(periods)),
    }
}

fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&j| j >= 1)
        .unwrap_or(1)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Data(format!("write failed: {e}"));
    match cli.command {
        Command::Recover(args) => {
            let params = params(&args.epsilon)?;
            let s = read(&args.input)?;
            let jobs = args.jobs.unwrap_or_else(default_jobs);
            let periods = recover_with_jobs(&s, params, jobs);
            write_periods(out, s.len(), params, &periods, args.format).map_err(io)?;
        }
        Command::Apm(args) => {
            let s = read(&args.text)?;
            let p_word = read(&args.pattern)?;
            let engine = match args.engine {
                EngineArg::Kangaroo => Engine::Kangaroo,
                EngineArg::Full => Engine::Full,
            };
            let row = if args.per_rotation {
                bench::rotation_row(engine, &s, &p_word, args.k)?
            } else {
                bench::last_row(engine, &s, &p_word, args.k)?
            };
            writeln!(out, "j\tvalue").map_err(io)?;
            for (j, v) in row.iter().enumerate() {
                match v {
                    Some(d) => writeln!(out, "{j}\t{d}"),
                    None => writeln!(out, "{j}\t*"),
                }
                .map_err(io)?;
            }
        }
        Command::Oracle(OracleCommand::Ed { a, b }) => {
            let d = edit_distance(&read(&a)?, &read(&b)?);
            writeln!(out, "{d}").map_err(io)?;
        }
        Command::Oracle(OracleCommand::Prefix { text, pattern }) => {
            let d = ed_to_prefix(&read(&text)?, &read(&pattern)?)?;
            writeln!(out, "{d}").map_err(io)?;
        }
        Command::Oracle(OracleCommand::Apr { input, epsilon, format }) => {
            let params = params(&epsilon)?;
            let s = read(&input)?;
            let n = s.len();
            let periods: Vec<PeriodReport> = brute_apr(&s, params)
                .into_iter()
                .map(|(word, distance)| PeriodReport {
                    p: word.len(),
                    tau: tau(n, word.len(), params),
                    word,
                    distance,
                    block: 0,
                    offset: 0,
                })
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            write_periods(out, n, params, &periods, format).map_err(io)?;
        }
        Command::Gen(args) => {
            let spec = GenSpec {
                p: args.p,
                n: args.n,
                edits: args.edits,
                alphabet_size: args.sigma,
                seed: args.seed,
            };
            let bytes = generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
            std::fs::write(&args.out, bytes)
                .map_err(|e| Failure::Data(format!("cannot write {}: {e}", args.out.display())))?;
        }
        Command::Bench(args) => {
            let engines = match args.engine {
                BenchEngineArg::Kangaroo => vec![Engine::Kangaroo],
                BenchEngineArg::Full => vec![Engine::Full],
                BenchEngineArg::Both => vec![Engine::Kangaroo, Engine::Full],
            };
            let cfg = BenchConfig {
                p: args.p,
                k: args.k,
                sizes: args.sizes,
                engines,
                seed: args.seed,
                edits: args.edits,
                alphabet_size: args.sigma,
                runs: args.runs as usize,
            };
            let rows = bench::run(&cfg).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{}", BenchRow::HEADER).map_err(io)?;
            for row in rows {
                writeln!(out, "{}", row.tsv()).map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
