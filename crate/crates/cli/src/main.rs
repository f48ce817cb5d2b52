use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use singlab::{CliResult, PgSource, Report};
use singlab_core::artinian::DEFAULT_SATURATION_CAP;

#[derive(Parser)]
#[command(name = "singlab", version, about = "Exact invariants of elliptic surface singularities")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Resolution graph diagnostics.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Elliptic sequence computations.
    Elliptic {
        #[command(subcommand)]
        action: EllipticAction,
    },
    /// Elliptic ideals with Gorenstein normal tangent cone.
    Classify {
        file: PathBuf,
        /// Geometric genus.
        #[arg(long, required_unless_present = "poly", conflicts_with = "poly")]
        pg: Option<i64>,
        /// Take p_g from this weighted homogeneous equation instead.
        #[arg(long, requires = "weights")]
        poly: Option<String>,
        #[arg(long, value_parser = singlab::parse_weights, requires = "poly")]
        weights: Option<[i64; 3]>,
        /// Refuse the non-maximal case, which needs characteristic zero.
        #[arg(long)]
        no_char0: bool,
    },
    /// p_g, a-invariant and br of x^a + y^b + z^c.
    Brieskorn { a: i64, b: i64, c: i64 },
    /// p_g of a weighted homogeneous hypersurface.
    Wh {
        #[arg(long, value_parser = singlab::parse_weights)]
        weights: [i64; 3],
        #[arg(long)]
        poly: String,
    },
    /// Colengths over k[x,y,z].
    Artinian {
        #[command(subcommand)]
        action: ArtinianAction,
    },
    /// Built-in graph families.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run the full acceptance suite.
    VerifyPaper {
        /// Also validate the stored snapshot files in this directory.
        #[arg(long)]
        corpus_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphAction {
    Analyze { file: PathBuf },
}

#[derive(Subcommand)]
enum EllipticAction {
    Sequence { file: PathBuf },
}

#[derive(Subcommand)]
enum ArtinianAction {
    Colength {
        #[arg(long)]
        poly: String,
        /// Comma-separated monomials, e.g. x,y,z^2.
        #[arg(long)]
        ideal: String,
        /// Truncate with (x^N, y^N, z^N) until the value stabilises.
        #[arg(long)]
        saturate: bool,
        #[arg(long, default_value_t = DEFAULT_SATURATION_CAP, requires = "saturate")]
        cap: u32,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Print a family member as a graph file.
    Emit { name: String, param: usize },
}

fn run(command: Command) -> CliResult<Report> {
    match command {
        Command::Graph { action: GraphAction::Analyze { file } } => singlab::graph_analyze(&singlab::read_graph(&file)?),
        Command::Elliptic { action: EllipticAction::Sequence { file } } => {
            singlab::elliptic_sequence_report(&singlab::read_graph(&file)?)
        }
        Command::Classify { file, pg, poly, weights, no_char0 } => {
            let source = match (pg, poly, weights) {
                (Some(p), _, _) => PgSource::Given(p),
                (None, Some(poly), Some(weights)) => PgSource::Equation { weights, poly },
                _ => unreachable!("clap enforces --pg or --poly with --weights"),
            };
            singlab::classify(&singlab::read_graph(&file)?, &source, !no_char0)
        }
        Command::Brieskorn { a, b, c } => singlab::brieskorn(a, b, c),
        Command::Wh { weights, poly } => singlab::weighted_homogeneous(weights, &poly),
        Command::Artinian { action: ArtinianAction::Colength { poly, ideal, saturate, cap } } => {
            singlab::artinian_colength(&poly, &ideal, saturate.then_some(cap))
        }
        Command::Corpus { action: CorpusAction::Emit { name, param } } => singlab::corpus_emit(&name, param),
        Command::VerifyPaper { corpus_dir } => singlab::verify_paper(corpus_dir.as_deref()),
    }
}

fn main() -> ExitCode {
    // usage errors share exit code 1 with other input problems
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("JSON output"),
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => eprintln!("{}", serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() })),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
