//! `cdgraph`: character degrees, divisor graphs and corpus verification.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use cdgraph_core::group::DEFAULT_ENUMERATION_BOUND;
use cdgraph_core::{Error, GraphKind, Limits};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "cdgraph",
    version,
    about = "Character degree sets of finite groups and their divisor graphs"
)]
struct Cli {
    /// Largest group order that is enumerated element by element.
    #[arg(
        long,
        global = true,
        env = "CDGRAPH_ENUMERATION_BOUND",
        default_value_t = DEFAULT_ENUMERATION_BOUND
    )]
    enumeration_bound: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible character degrees, cd(G), ρ(G) and the derived series.
    Degrees {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit B, Δ or Γ for a group or an explicit degree set.
    Graph {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Kind::B)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Shape of B, Δ or Γ; with `--claim`, test a shape claim against it.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Kind::B)]
        kind: Kind,
        /// Claim such as `path:4` or `union_paths:5,1&components:2`.
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every entry of a claims corpus.
    Verify {
        /// Corpus file; the built-in corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupInput {
    /// Constructor expression, e.g. "DirectProduct(Sym(3),Alt(4))".
    #[arg(value_name = "SPEC")]
    positional: Option<String>,
    #[arg(long = "spec", value_name = "SPEC")]
    flag: Option<String>,
}

impl GroupInput {
    fn text(&self) -> &str {
        self.positional
            .as_deref()
            .or(self.flag.as_deref())
            .expect("clap requires one input")
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    #[arg(value_name = "SPEC")]
    positional: Option<String>,
    #[arg(long = "spec", value_name = "SPEC")]
    flag: Option<String>,
    /// Comma-separated degrees; 1 is dropped, so cd(G) and cd(G)* both work.
    #[arg(long, value_name = "INTS", allow_hyphen_values = true)]
    set: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "Delta", alias = "delta")]
    Delta,
    #[value(name = "Gamma", alias = "gamma")]
    Gamma,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::B => GraphKind::B,
            Kind::Delta => GraphKind::Delta,
            Kind::Gamma => GraphKind::Gamma,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

/// Anything that ends the command with exit status 2.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn report(&self) {
        match self {
            Failure::Usage(m) => eprintln!("error: usage: {m}"),
            Failure::Core(e) => eprintln!("error: {}: {e}", e.category()),
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let limits = Limits {
        enumeration_bound: cli.enumeration_bound,
    };
    match cli.command {
        Command::Degrees { group, format } => commands::degrees(group.text(), format, limits),
        Command::Graph {
            input,
            kind,
            format,
        } => commands::graph(&input, kind.into(), format, limits),
        Command::Classify {
            input,
            kind,
            claim,
            format,
        } => commands::classify(&input, kind.into(), claim.as_deref(), format, limits),
        Command::Verify {
            corpus,
            report,
            format,
        } => commands::verify(corpus.as_deref(), report.as_deref(), format, limits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.render().to_string();
            let mut lines = rendered.lines();
            let first = lines.next().unwrap_or_default();
            eprintln!("error: usage: {}", first.trim_start_matches("error: "));
            for line in lines {
                eprintln!("{line}");
            }
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            f.report();
            ExitCode::from(2)
        }
    }
}
