//! Thin command-line front end: parses flags into a `Config`, dispatches
//! to the library suites, prints the report, and maps the outcome to the
//! exit-code contract (0 pass, 1 verification failure, 2 bad configuration).

use clap::{Args, Parser, Subcommand};
use invariant_chain::{report, Char, Config, ReportFormat};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "invariant-chain",
    about = "Exact verification suites for a truncated power-series ring under a cyclic automorphism action",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite.
    Verify(CommonArgs),
    /// Build non-membership certificates for depths 1..=depth.
    Certify(CommonArgs),
    /// Time the arithmetic kernels.
    Bench(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Coefficient characteristic: 0 or a prime below 2^31.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,

    /// Series truncation degree (at least 4).
    #[arg(long, default_value_t = 6)]
    trunc: u32,

    /// Largest certificate depth.
    #[arg(long, default_value_t = 5)]
    depth: u32,

    /// Power bound for automorphism iteration checks.
    #[arg(long, default_value_t = 7)]
    kmax: u32,

    /// Sample count for the randomized suites.
    #[arg(long, default_value_t = 100)]
    samples: u32,

    /// Seed for every randomized suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Report format.
    #[arg(long, value_parser = parse_format, default_value = "text")]
    format: ReportFormat,

    /// Use randomized evaluation for congruence zero tests; flagged in the
    /// report and never consulted by `certify`.
    #[arg(long)]
    fast_probabilistic: bool,

    /// Per-check wall-clock budget in milliseconds.
    #[arg(long)]
    budget_ms: Option<u64>,

    /// Run over a deliberately perturbed generator table; the suite must
    /// fail. Exists to prove the checks can detect a broken action.
    #[arg(long, hide = true)]
    negative_control: bool,
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    match s {
        "json" => Ok(ReportFormat::Json),
        "text" => Ok(ReportFormat::Text),
        other => Err(format!("unknown format '{other}' (expected json or text)")),
    }
}

fn build_config(args: &CommonArgs) -> Result<Config, invariant_chain::Error> {
    let cfg = Config {
        characteristic: Char::new(args.characteristic)?,
        trunc: args.trunc,
        depth_max: args.depth,
        power_max: args.kmax,
        samples: args.samples,
        seed: args.seed,
        format: args.format,
        fast_probabilistic: args.fast_probabilistic,
        negative_control: args.negative_control,
        budget_ms: args.budget_ms,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, run): (&CommonArgs, fn(&Config) -> report::Report) = match &cli.command {
        Command::Verify(args) => (args, report::run_verify),
        Command::Certify(args) => (args, report::run_certify),
        Command::Bench(args) => (args, report::run_bench),
    };
    let cfg = match build_config(args) {
        Ok(cfg) => cfg,
        Err(err) => {
            eprintln!("configuration error: {err}");
            return ExitCode::from(2);
        }
    };
    let report = run(&cfg);
    println!("{}", report.render(cfg.format));
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
