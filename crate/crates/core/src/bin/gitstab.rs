use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gitstab::cli::{error_json, run, AnalysisRequest, Command, Source, DEFAULT_SEED};
use gitstab::Error;

#[derive(Parser)]
#[command(name = "gitstab", version, about = "Exact GIT stability analysis of rational maps of projective space")]
struct Cli {
    /// Seed for randomized sampling; echoed in every report.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MapInput {
    /// File holding a map.
    #[arg(long = "map", value_name = "FILE")]
    file: Option<PathBuf>,
    /// Map given inline, e.g. "[y*z : x*z + y^2 : z^2]".
    #[arg(long = "map-expr", value_name = "TEXT")]
    expr: Option<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct SpecInput {
    /// File holding a Hénon spec.
    #[arg(long = "spec", value_name = "FILE")]
    file: Option<PathBuf>,
    /// Spec given inline, e.g. "henon N=2 k=2 d=2 b=(1,1) P3=(x2^2)".
    #[arg(long = "spec-expr", value_name = "TEXT")]
    expr: Option<String>,
}

fn source(file: Option<PathBuf>, expr: Option<String>) -> Option<Source> {
    file.map(Source::File).or(expr.map(Source::Inline))
}

impl MapInput {
    fn source(self) -> Source {
        source(self.file, self.expr).expect("clap enforces one input")
    }
}

impl SpecInput {
    fn source(self) -> Option<Source> {
        source(self.file, self.expr)
    }
}

#[derive(Subcommand)]
enum Sub {
    /// mu(f, L) for a diagonal one-parameter subgroup.
    Mu {
        #[command(flatten)]
        map: MapInput,
        /// Comma-separated integer weights summing to zero.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Search diagonal weights with all exponents > 0 (strict, the default) or >= 0.
    Destab {
        #[command(flatten)]
        map: MapInput,
        #[arg(long, conflicts_with = "nonstrict")]
        strict: bool,
        #[arg(long)]
        nonstrict: bool,
    },
    /// Build a Hénon map from a spec and check its block certificate.
    HenonBuild {
        #[command(flatten)]
        spec: SpecInput,
    },
    /// Degrees of the first n iterates.
    Iterate {
        #[command(flatten)]
        map: MapInput,
        #[arg(long)]
        n: usize,
    },
    /// Fibering, degree drop and the semistability verdict for a quadratic map of P^2.
    Classify22 {
        #[command(flatten)]
        map: MapInput,
    },
    /// Image of a line under a quadratic map of P^2.
    LineImage {
        #[command(flatten)]
        map: MapInput,
        /// e.g. "line: y - 2*z"
        #[arg(long, allow_hyphen_values = true)]
        line: String,
    },
    /// Exponent rows for Hénon maps of shape (N, k, d).
    Table {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u32,
    },
    /// Line-image checks for a quadratic planar Hénon map (random from the seed if no spec).
    AuditHenon22 {
        #[command(flatten)]
        spec: SpecInput,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Sub::Mu { map, weights } => Command::Mu {
            map: map.source(),
            weights,
        },
        Sub::Destab { map, strict, nonstrict } => Command::Destab {
            map: map.source(),
            strict: strict || !nonstrict,
        },
        Sub::HenonBuild { spec } => match spec.source() {
            Some(spec) => Command::HenonBuild { spec },
            None => return fail(&Error::InvalidHenon("--spec or --spec-expr is required".into())),
        },
        Sub::Iterate { map, n } => Command::Iterate { map: map.source(), n },
        Sub::Classify22 { map } => Command::Classify22 { map: map.source() },
        Sub::LineImage { map, line } => Command::LineImage {
            map: map.source(),
            line,
        },
        Sub::Table { n, k, d } => Command::Table { n, k, d },
        Sub::AuditHenon22 { spec, samples } => Command::AuditHenon22 {
            spec: spec.source(),
            samples,
        },
    };
    match run(&AnalysisRequest {
        command,
        seed: cli.seed,
    }) {
        Ok(report) => {
            // A closed stdout (e.g. piped into `head`) is not an analysis failure.
            let _ = writeln!(std::io::stdout(), "{}", report.to_json());
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("{}", error_json(e));
    ExitCode::from(2)
}
