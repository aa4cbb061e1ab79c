//! Command-line front end: argument parsing, dispatch, run reports and the
//! exit-code contract (0 ok, 1 check failed or inconclusive, 2 usage,
//! 3 data error).

mod commands;
mod groups;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub use groups::parse_group;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "octoplane", version, about = "Search, certify and analyze symmetric combinatorial manifolds")]
pub struct Cli {
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Directory for result files and the run report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// A complex on disk and the group whose orbits of its rows make up the
/// complex (`trivial` reads the rows as the full facet list).
#[derive(Debug, Args, Clone)]
pub struct Input {
    #[arg(long)]
    pub complex: PathBuf,
    /// trivial | a | b | c3 | c3^2 | c3^3 | c13 | g351 | normalizer | a5 | file:<path>
    #[arg(long, default_value = "trivial")]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit-selection search for invariant weak pseudomanifolds.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "trivial")]
        group: String,
        #[arg(long)]
        min_facets: u64,
        #[arg(long, default_value_t = 10)]
        branch_weight: u64,
        #[arg(long, default_value_t = 5)]
        budget_factor: u64,
        /// Keep only solutions satisfying complementarity.
        #[arg(long)]
        complementary: bool,
    },
    /// Certify a combinatorial manifold by nonevasive links.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Write nonevasiveness traces as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    #[command(subcommand)]
    Flips(FlipsCommand),
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Export the embedded reference complexes after a self-check.
    Fixtures,
}

#[derive(Debug, Subcommand)]
pub enum FlipsCommand {
    /// ν-parameters of every facet, or of one facet given as a 0/1 row.
    Nu {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        facet: Option<String>,
    },
    /// Distinguished triples.
    Triples {
        #[command(flatten)]
        input: Input,
    },
    /// Flip one distinguished triple, given as three 0/1 rows.
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 3, value_names = ["D1", "D2", "D3"])]
        triple: Vec<String>,
    },
    /// Build K_S from K2 and a file of group-element indices.
    Ks {
        #[command(flatten)]
        input: Input,
        /// Whitespace-separated indices into the elements of the group,
        /// ordered lexicographically by image array.
        #[arg(long)]
        subset_file: PathBuf,
    },
    /// Counts of K_S by symmetry group.
    Census,
    /// Bistellar moves of the link of a vertex, or of the complex itself.
    Options {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: Option<usize>,
        /// Skip moves whose τ has at most this many vertices.
        #[arg(long)]
        neighborly: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    /// Distribution of s(ρ) over codimension-two simplices.
    Sdist {
        #[command(flatten)]
        input: Input,
    },
    /// N_pq matrix of a directed edge.
    Npq {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long, default_value_t = 2)]
        b: usize,
    },
    /// Symmetry group, by filtering a supergroup or by backtracking.
    Sym {
        #[command(flatten)]
        input: Input,
        /// Supergroup to filter; omit for the backtracking search.
        #[arg(long)]
        within: Option<String>,
    },
    /// Fixed-point complex of a subgroup.
    Fixed {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        subgroup: String,
    },
    /// Shared facet orbits between complexes and their images under the
    /// normaliser elements 1, S, F and SF.
    Intersect {
        /// Orbit-representative files, one per complex.
        #[arg(long = "complex", required = true)]
        complexes: Vec<PathBuf>,
        #[arg(long, default_value = "g351")]
        group: String,
    },
    /// Automorphisms of the residue tournament.
    Tournament,
}

/// Failure kinds with their exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Data(#[from] crate::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Data(e.into())
    }
}

/// What a command produced.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    /// `false` when a mathematical check failed or was inconclusive.
    pub ok: bool,
    pub files: Vec<PathBuf>,
    pub counters: serde_json::Map<String, serde_json::Value>,
}

impl Output {
    pub fn new(text: String, json: serde_json::Value) -> Self {
        Output { text, json, ok: true, files: Vec::new(), counters: Default::default() }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config: Vec<String>,
    pub jobs: usize,
    pub phase_seconds: Vec<(String, f64)>,
    pub counters: serde_json::Map<String, serde_json::Value>,
    pub files: Vec<PathBuf>,
    pub ok: bool,
    pub result: serde_json::Value,
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Search { .. } => "search".into(),
        Command::Verify { .. } => "verify".into(),
        Command::Flips(f) => {
            let n = match f {
                FlipsCommand::Nu { .. } => "nu",
                FlipsCommand::Triples { .. } => "triples",
                FlipsCommand::Apply { .. } => "apply",
                FlipsCommand::Ks { .. } => "ks",
                FlipsCommand::Census => "census",
                FlipsCommand::Options { .. } => "options",
            };
            format!("flips {n}")
        }
        Command::Analyze(a) => {
            let n = match a {
                AnalyzeCommand::Sdist { .. } => "sdist",
                AnalyzeCommand::Npq { .. } => "npq",
                AnalyzeCommand::Sym { .. } => "sym",
                AnalyzeCommand::Fixed { .. } => "fixed",
                AnalyzeCommand::Intersect { .. } => "intersect",
                AnalyzeCommand::Tournament => "tournament",
            };
            format!("analyze {n}")
        }
        Command::Fixtures => "fixtures".into(),
    }
}

pub(crate) fn out_dir(cli: &Cli) -> Option<&Path> {
    cli.out.as_deref()
}

/// Run the command line `args` (program name first) and return the exit
/// code.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if cli.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    let start = Instant::now();
    match pool.install(|| commands::run(&cli)) {
        Ok(out) => {
            let report = RunReport {
                command: command_name(&cli.command),
                config: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
                jobs: cli.jobs,
                phase_seconds: vec![("total".into(), start.elapsed().as_secs_f64())],
                counters: out.counters,
                files: out.files,
                ok: out.ok,
                result: out.json,
            };
            if let Err(e) = finish(&cli, &out.text, report) {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            if out.ok {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn finish(cli: &Cli, text: &str, mut report: RunReport) -> Result<(), CliError> {
    if let Some(dir) = out_dir(cli) {
        std::fs::create_dir_all(dir)?;
        let p = dir.join("report.json");
        report.files.push(p.clone());
        std::fs::write(&p, serde_json::to_string_pretty(&report)?)?;
    }
    match cli.format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(())
}
