//! Command-line surface of the `foldloop` binary.
//!
//! Every command writes one JSON object (or one diagram) to stdout and
//! diagnostics to stderr. Exit status 0 is success, 2 a parse or bounds
//! error, 3 a domain error such as asking for an even fold.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::band::FlatBand;
use crate::braid::BraidWord;
use crate::cli::render::{render_diagram, Format};
use crate::cli::report::report;
use crate::cli::text::parse_word;
use crate::error::Error;
use crate::folds::{make_fold, nest, search_folds};

/// Caps the worker threads used by `search`.
pub const THREADS_ENV: &str = "FOLDLOOP_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "foldloop",
    version,
    about = "Closed braids, flat bands and odd folds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Braid word such as "m=3 1 -2"
    #[arg(allow_hyphen_values = true, conflicts_with = "file")]
    pub word: Option<String>,
    /// Read the word from a file instead
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report loops, crossings, writhe and fold validity of a core word
    Analyze(WordInput),
    /// 2-cable a core into its two boundary circles
    Double {
        #[command(flatten)]
        input: WordInput,
        /// Full twists added to the band
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twists: i64,
    },
    /// Exhaustively search for the shortest untwisted fold on each loop count
    Search {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// The alternating fold on an odd number of loops
    MakeFold { loops: usize },
    /// Shrink INNER into the last loop of OUTER
    Nest {
        #[arg(allow_hyphen_values = true, required_unless_present = "file")]
        outer: Option<String>,
        #[arg(allow_hyphen_values = true, required_unless_present = "file")]
        inner: Option<String>,
        /// File with the outer word on its first line and the inner on its second
        #[arg(long, conflicts_with_all = ["outer", "inner"])]
        file: Option<PathBuf>,
    },
    /// Draw the closed braid
    Render {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(e) if !e.is_input_error() => EXIT_DOMAIN,
            _ => EXIT_INPUT,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

impl WordInput {
    fn load(&self) -> Result<BraidWord, CliError> {
        match (&self.word, &self.file) {
            (Some(text), _) => Ok(parse_word(text)?),
            (None, Some(path)) => Ok(parse_word(&read_file(path)?)?),
            (None, None) => Err(CliError::Usage("expected a word or --file".into())),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(value) => match value.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {value:?}"
            ))),
        },
        Err(_) => Ok(None),
    }
}

/// Runs one parsed command and returns what belongs on stdout.
pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Analyze(input) => Ok(to_json(&report(&input.load()?))),
        Command::Double { input, twists } => {
            let band = FlatBand::new(input.load()?, *twists)?;
            let doubled = band.double();
            Ok(to_json(&json!({
                "core": band.core(),
                "full_twists": band.full_twists(),
                "doubled": doubled.word,
                "left_component": doubled.left_component.0,
                "right_component": doubled.right_component.0,
                "boundary_linking_number": band.boundary_linking_number(),
                "boundary_linking_number_fast": band.boundary_linking_number_fast(),
            })))
        }
        Command::Search { m_max, n_max } => {
            let summary = match thread_cap()? {
                Some(threads) => rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(|| search_folds(*m_max, *n_max)),
                None => search_folds(*m_max, *n_max),
            };
            Ok(to_json(&summary))
        }
        Command::MakeFold { loops } => {
            let fold = make_fold(*loops)?;
            Ok(to_json(&json!({ "loops": loops, "fold": fold })))
        }
        Command::Nest { outer, inner, file } => {
            let (outer, inner) = match (outer, inner, file) {
                (Some(o), Some(i), _) => (parse_word(o)?, parse_word(i)?),
                (_, _, Some(path)) => {
                    let text = read_file(path)?;
                    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
                    match (lines.next(), lines.next(), lines.next()) {
                        (Some(o), Some(i), None) => (parse_word(o)?, parse_word(i)?),
                        _ => {
                            return Err(CliError::Usage(format!(
                                "{} must hold exactly two words, one per line",
                                path.display()
                            )))
                        }
                    }
                }
                _ => return Err(CliError::Usage("expected OUTER and INNER or --file".into())),
            };
            let nested = nest(&outer, &inner)?;
            Ok(to_json(&json!({
                "outer": outer,
                "inner": inner,
                "nested": nested,
                "loops": nested.strands(),
            })))
        }
        Command::Render { input, format } => Ok(render_diagram(&input.load()?, *format)),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
