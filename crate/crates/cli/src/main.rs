use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, ValueEnum};
use sodlab::{render, run, Format, JobConfig, Subcommand};

#[derive(Parser)]
#[command(name = "sodlab", version, about = "Weight combinatorics of semi-orthogonal decompositions for linear quotient stacks")]
enum Cli {
    /// Stability analysis of the representation.
    Analyze(Common),
    /// Partition of the dominant weights in the search box by face signature.
    Partition(Common),
    /// Ordered components of the decomposition.
    Sod(Common),
    /// Crepant-resolution certificates for every component.
    Nccr(Common),
    /// Graded dimensions of the Hom blocks of selected components.
    Hilbert(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// JSON job configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Example family, e.g. pfaffian:n=1,h=3, determinantal:2,3, sl2:1,2 or toric.
    #[arg(long)]
    preset: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("sodlab: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let (sub, args) = match Cli::parse() {
        Cli::Analyze(a) => (Subcommand::Analyze, a),
        Cli::Partition(a) => (Subcommand::Partition, a),
        Cli::Sod(a) => (Subcommand::Sod, a),
        Cli::Nccr(a) => (Subcommand::Nccr, a),
        Cli::Hilbert(a) => (Subcommand::Hilbert, a),
    };
    let mut config = match &args.config {
        Some(path) => match JobConfig::load(path) {
            Ok(c) => c,
            Err(e) => return fail(e),
        },
        None => JobConfig::from_json("{}").expect("empty configuration parses"),
    };
    if let Some(p) = args.preset {
        if config.preset.as_ref().is_some_and(|q| q != &p) {
            return fail(format!("--preset {p:?} conflicts with the configured preset {:?}", config.preset.unwrap()));
        }
        config.preset = Some(p);
    }
    let job = match config.resolve() {
        Ok(j) => j,
        Err(e) => return fail(e),
    };
    let outcome = match run(sub, &job) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let format = match args.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let text = render(&outcome.document, format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return fail(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    if let Some(e) = outcome.document.get("error") {
        eprintln!("sodlab: {}", e["message"].as_str().unwrap_or_default());
    }
    ExitCode::from(outcome.exit_code() as u8)
}
