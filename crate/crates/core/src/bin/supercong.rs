use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use supercong::arith::{rat, Rational};
use supercong::congruences::{all_check_names, run_suite, RunOptions, SamplingPolicy};
use supercong::identities::{run_identity_sweeps, SweepBounds};
use supercong::report::{Format, IdentityReport, Report, VerifyConfig};
use supercong::sequences::{
    bernoulli_exact, delannoy, euler_number, h2_prefix, harmonic, legendre_polynomial, path_oracle,
    schroder,
};

#[derive(Parser)]
#[command(
    name = "supercong",
    version,
    about = "Delannoy/Schroder supercongruence toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact sequence value as num/den.
    Compute(ComputeArgs),
    /// Run congruence checks over a prime range.
    Verify(VerifyArgs),
    /// Run the exact identity sweeps.
    Identities(IdentityArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    Delannoy,
    Schroder,
    Harmonic,
    H2prefix,
    Bernoulli,
    Euler,
    LegendrePoly,
    PathOracle,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(value_enum)]
    sequence: Sequence,
    index: u64,
    /// Evaluation point for the polynomial sequences, e.g. 3 or -1/2.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rational>,
    /// Harmonic order.
    #[arg(long, default_value_t = 1)]
    order: u32,
    /// Alternating harmonic sum.
    #[arg(long)]
    alternating: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Human,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Human => Format::Human,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Inclusive prime range LO..HI.
    #[arg(long, default_value = "5..61", value_parser = parse_range)]
    primes: (u64, u64),
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    /// x values: a comma list and/or LO..HI ranges.
    #[arg(long, default_value = "1..10", allow_hyphen_values = true, value_parser = parse_x_list)]
    x: XList,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also run the checks of results quoted from earlier work.
    #[arg(long)]
    include_quoted: bool,
    /// Record wall-clock time in the summary. Off by default so that reports
    /// stay byte-identical across runs.
    #[arg(long)]
    timing: bool,
    #[arg(long, hide = true)]
    inject_failure: Option<String>,
}

#[derive(Args)]
struct IdentityArgs {
    #[arg(long, default_value_t = SweepBounds::default().max_m)]
    max_m: u64,
    #[arg(long, default_value_t = SweepBounds::default().max_k)]
    max_k: u64,
    #[arg(long, default_value_t = SweepBounds::default().max_n)]
    max_n: u64,
    #[arg(long, default_value_t = SweepBounds::default().max_r)]
    max_r: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    timing: bool,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    if lo < 3 {
        return Err(format!("lower bound must be at least 3, got {lo}"));
    }
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Clone)]
struct XList(Vec<i64>);

fn parse_x_list(s: &str) -> Result<XList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        // A leading '-' belongs to the first bound, so split after it.
        match part[1..].find("..") {
            Some(i) => {
                let (lo, hi) = (&part[..i + 1], &part[i + 3..]);
                let lo: i64 = lo.parse().map_err(|e| format!("bad x '{lo}': {e}"))?;
                let hi: i64 = hi.parse().map_err(|e| format!("bad x '{hi}': {e}"))?;
                if lo > hi {
                    return Err(format!("empty x range {part}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|e| format!("bad x '{part}': {e}"))?),
        }
    }
    Ok(XList(out))
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), ExitCode> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(2)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn compute(args: ComputeArgs) -> ExitCode {
    let n = args.index;
    let x = args.x.clone().unwrap_or_else(|| rat(1));
    let value = match args.sequence {
        Sequence::Delannoy => delannoy(n, &x),
        Sequence::Schroder => schroder(n, &x),
        Sequence::Harmonic => {
            if args.order == 0 {
                return usage_error("--order must be at least 1");
            }
            harmonic(n, args.order, args.alternating)
        }
        Sequence::H2prefix => h2_prefix(n),
        Sequence::Bernoulli => bernoulli_exact(n as usize),
        Sequence::Euler => euler_number(n as usize).into(),
        Sequence::LegendrePoly => match args.x {
            Some(x) => legendre_polynomial(n, &x),
            None => return usage_error("legendre-poly needs --x"),
        },
        Sequence::PathOracle => match path_oracle(n as usize) {
            Ok((d, s)) => {
                println!("{d} {s}");
                return ExitCode::SUCCESS;
            }
            Err(e) => return usage_error(e),
        },
    };
    println!("{value}");
    ExitCode::SUCCESS
}

fn verify(args: VerifyArgs) -> ExitCode {
    let names: Vec<String> = if args.checks.trim() == "all" {
        all_check_names(args.include_quoted)
            .into_iter()
            .map(String::from)
            .collect()
    } else {
        args.checks
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    };
    if names.is_empty() {
        return usage_error("no checks selected");
    }
    let workers = args.workers.map(|w| w as usize).unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let sampling = SamplingPolicy {
        seed: args.seed,
        ..SamplingPolicy::default()
    };
    let options = RunOptions {
        sampling,
        workers,
        inject_failure: args.inject_failure,
    };

    let start = Instant::now();
    let results = run_suite(&names, args.primes, &args.x.0, &options);
    let elapsed_ms = if args.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };

    let config = VerifyConfig {
        primes: [args.primes.0, args.primes.1],
        checks: names,
        x: args.x.0,
        seed: args.seed,
        include_quoted: args.include_quoted,
        exhaustive_up_to: sampling.exhaustive_up_to,
        sample_size: sampling.sample_size,
    };
    let report = Report::new(config, &results, elapsed_ms);
    if let Err(code) = emit(&report.render(args.format.into()), args.out.as_ref()) {
        return code;
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn identities(args: IdentityArgs) -> ExitCode {
    let bounds = SweepBounds {
        max_m: args.max_m,
        max_k: args.max_k,
        max_n: args.max_n,
        max_r: args.max_r,
    };
    let start = Instant::now();
    let outcomes = run_identity_sweeps(bounds);
    let elapsed_ms = if args.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let report = IdentityReport::new(bounds, outcomes, elapsed_ms);
    if let Err(code) = emit(&report.render(args.format.into()), args.out.as_ref()) {
        return code;
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Identities(args) => identities(args),
    }
}
