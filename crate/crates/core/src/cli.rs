//! The `decomp` command line: build objects, transform them, and check
//! criteria, exchanging the JSON documents of [`crate::io`].
//!
//! Exit codes: 0 when a check holds (or a build/transform succeeds), 1 when a
//! check fails, 2 for usage errors, unreadable or schema-violating input and
//! input that is not simplicial, 3 for level shortfalls and builder failures.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::builders::{
    bounded_words, free_decomposition, from_partial_category, from_partial_monoid, graph_paths, length_map, nerve,
    twisted_arrow, FiniteCategory, OuterFaceComplex, PartialCategory, PartialMonoid,
};
use crate::criteria::{
    check_2segal_polygonal, check_culf, check_decomposition, check_decomposition_direct, check_lower_2segal,
    check_segal, check_upper_2segal, DirectOptions, PolygonalMode,
};
use crate::error::{Error, Result};
use crate::io::{self, Document};
use crate::operators::{dec_bot, dec_top, sd};
use crate::pullback::CheckReport;
use crate::sset::{SimplicialMap, TruncatedSSet};

#[derive(Parser, Debug)]
#[command(name = "decomp", version)]
#[command(about = "Build, transform and check finite truncated simplicial sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an object from a description file or from flags.
    Build {
        kind: BuildKind,
        /// Input document (category, partial monoid, partial category, ofc or graph).
        input: Option<PathBuf>,
        /// Truncation level of the simplicial set to produce.
        #[arg(long)]
        level: Option<usize>,
        /// Grade bound for words, graph paths and the terminal complex.
        #[arg(long, visible_alias = "max-len")]
        bound: Option<usize>,
        /// Letters for `words`: one character per letter, or comma-separated.
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a criterion on a serialized simplicial set or map.
    Check {
        criterion: Criterion,
        input: PathBuf,
        /// Largest rank examined: the pushout apex bound for `decomp-direct`,
        /// a truncation of the input for every other criterion.
        #[arg(long)]
        rank_cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply an operator to a serialized simplicial set.
    Transform {
        op: TransformOp,
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Where to write the projection map of `dec-top` / `dec-bot`.
        #[arg(long)]
        map_output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuildKind {
    Nerve,
    Pmonoid,
    Pcategory,
    Free,
    Words,
    GraphPaths,
    TwistedArrow,
    TerminalOfc,
    LengthMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Criterion {
    Validate,
    Segal,
    #[value(name = "upper2segal")]
    Upper2Segal,
    #[value(name = "lower2segal")]
    Lower2Segal,
    #[value(name = "twosegal")]
    TwoSegal,
    Decomp,
    DecompDirect,
    Culf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransformOp {
    DecTop,
    DecBot,
    Sd,
    Op,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Machine,
}

/// Exit code for an error class.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_)
        | Error::Schema { .. }
        | Error::Io { .. }
        | Error::NotSimplicial(_)
        | Error::NonCommutingSquare(_) => 2,
        Error::LevelShortfall { .. } | Error::Structural(_) | Error::Precondition(_) => 3,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Build { kind, input, level, bound, alphabet, output } => {
            let doc = build(kind, input.as_deref(), level, bound, alphabet.as_deref())?;
            emit(output.as_deref(), &io::to_string(&doc))?;
            Ok(0)
        }
        Command::Check { criterion, input, rank_cap, format, output } => {
            let report = check(criterion, &input, rank_cap)?;
            let text = match format {
                ReportFormat::Text => report.to_string(),
                ReportFormat::Machine => io::to_string(&Document::Report(report.clone())),
            };
            emit(output.as_deref(), &text)?;
            Ok(if report.holds() { 0 } else { 1 })
        }
        Command::Transform { op, input, output, map_output } => {
            let x = io::read_sset(&input)?;
            let (y, projection) = match op {
                TransformOp::DecTop => {
                    let (y, p) = dec_top(&x)?;
                    (y, Some(p))
                }
                TransformOp::DecBot => {
                    let (y, p) = dec_bot(&x)?;
                    (y, Some(p))
                }
                TransformOp::Sd => (sd(&x)?, None),
                TransformOp::Op => (x.opposite(), None),
            };
            match (map_output, projection) {
                (Some(path), Some(p)) => io::write(&path, &Document::Map(p))?,
                (Some(_), None) => {
                    return Err(Error::InvalidArgument("--map-output only applies to dec-top and dec-bot".into()))
                }
                _ => {}
            }
            emit(output.as_deref(), &io::to_string(&Document::SSet(y)))?;
            Ok(0)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => io::write_atomic(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn require<T>(value: Option<T>, flag: &str, kind: BuildKind) -> Result<T> {
    value.ok_or_else(|| {
        let name = kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Error::InvalidArgument(format!("build {name} needs {flag}"))
    })
}

fn read_input(input: Option<&Path>, kind: BuildKind) -> Result<Document> {
    io::read(require(input, "an input file", kind)?)
}

fn wrong_input(kind: BuildKind, doc: &Document) -> Error {
    let name = kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Error::schema("/kind", format!("build {name} cannot read a {} document", doc.kind()))
}

fn read_category(input: Option<&Path>, kind: BuildKind) -> Result<FiniteCategory> {
    match read_input(input, kind)? {
        Document::Category(spec) => FiniteCategory::from_spec(&spec),
        other => Err(wrong_input(kind, &other)),
    }
}

fn read_ofc(input: Option<&Path>, kind: BuildKind) -> Result<OuterFaceComplex> {
    match read_input(input, kind)? {
        Document::Ofc(a) => Ok(a),
        other => Err(wrong_input(kind, &other)),
    }
}

/// An outer face complex, or its free decomposition space when a level is given.
fn ofc_or_free(a: OuterFaceComplex, level: Option<usize>) -> Result<Document> {
    match level {
        Some(l) => Ok(Document::SSet(free_decomposition(&a, l)?)),
        None => Ok(Document::Ofc(a)),
    }
}

fn build(
    kind: BuildKind,
    input: Option<&Path>,
    level: Option<usize>,
    bound: Option<usize>,
    alphabet: Option<&str>,
) -> Result<Document> {
    match kind {
        BuildKind::Nerve => {
            let c = read_category(input, kind)?;
            Ok(Document::SSet(nerve(&c, require(level, "--level", kind)?)?))
        }
        BuildKind::Pmonoid => {
            let m = match read_input(input, kind)? {
                Document::PartialMonoid(spec) => PartialMonoid::from_spec(&spec)?,
                other => return Err(wrong_input(kind, &other)),
            };
            Ok(Document::SSet(from_partial_monoid(&m, require(level, "--level", kind)?)?))
        }
        BuildKind::Pcategory => {
            let c = match read_input(input, kind)? {
                Document::PartialCategory(spec) | Document::Category(spec) => PartialCategory::from_spec(&spec)?,
                other => return Err(wrong_input(kind, &other)),
            };
            Ok(Document::SSet(from_partial_category(&c, require(level, "--level", kind)?)?))
        }
        BuildKind::Free => {
            let a = read_ofc(input, kind)?;
            Ok(Document::SSet(free_decomposition(&a, require(level, "--level", kind)?)?))
        }
        BuildKind::Words => {
            let alphabet = require(alphabet, "--alphabet", kind)?;
            let letters: Vec<String> = if alphabet.contains(',') {
                alphabet.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
            } else {
                alphabet.chars().map(String::from).collect()
            };
            let letters: Vec<&str> = letters.iter().map(String::as_str).collect();
            ofc_or_free(bounded_words(&letters, require(bound, "--bound", kind)?)?, level)
        }
        BuildKind::GraphPaths => {
            let graph = match read_input(input, kind)? {
                Document::Graph(g) => g,
                other => return Err(wrong_input(kind, &other)),
            };
            ofc_or_free(graph_paths(&graph, require(bound, "--bound", kind)?)?, level)
        }
        BuildKind::TwistedArrow => {
            let tw = twisted_arrow(&read_category(input, kind)?)?;
            match level {
                Some(l) => Ok(Document::SSet(nerve(&tw, l)?)),
                None => Ok(Document::Category(tw.to_spec())),
            }
        }
        BuildKind::TerminalOfc => ofc_or_free(OuterFaceComplex::terminal(require(bound, "--bound", kind)?), level),
        BuildKind::LengthMap => {
            let a = read_ofc(input, kind)?;
            Ok(Document::Map(length_map(&a, require(level, "--level", kind)?)?))
        }
    }
}

fn truncated(x: TruncatedSSet, rank_cap: Option<usize>) -> Result<TruncatedSSet> {
    match rank_cap {
        Some(cap) if cap < x.level() => x.truncate(cap),
        Some(cap) if cap > x.level() => Err(Error::LevelShortfall { required: cap, available: x.level() }),
        _ => Ok(x),
    }
}

fn truncated_map(f: SimplicialMap, rank_cap: Option<usize>) -> Result<SimplicialMap> {
    match rank_cap {
        Some(cap) if cap > f.level() => Err(Error::LevelShortfall { required: cap, available: f.level() }),
        Some(cap) => {
            let source = f.source().truncate(cap)?;
            let target = f.target().truncate(cap)?;
            SimplicialMap::new(Arc::new(source), Arc::new(target), f.components()[..=cap].to_vec())
        }
        None => Ok(f),
    }
}

fn check(criterion: Criterion, input: &Path, rank_cap: Option<usize>) -> Result<CheckReport> {
    let doc = io::read(input)?;
    match (criterion, doc) {
        (Criterion::Validate, Document::SSet(x)) => Ok(truncated(x, rank_cap)?.validate()),
        (Criterion::Validate, Document::Map(f)) => {
            let f = truncated_map(f, rank_cap)?;
            let sides = f.source().validate().and(f.target().validate(), "simplicial sets");
            Ok(sides.and(f.validate(), "simplicial map"))
        }
        (Criterion::Culf, Document::Map(f)) => check_culf(&truncated_map(f, rank_cap)?),
        (Criterion::DecompDirect, Document::SSet(x)) => {
            let options = DirectOptions { rank_cap, ..DirectOptions::from_env()? };
            check_decomposition_direct(&x, options)
        }
        (Criterion::Culf, other) => Err(Error::schema("/kind", format!("culf needs a map, found {}", other.kind()))),
        (c, Document::SSet(x)) => {
            let x = truncated(x, rank_cap)?;
            match c {
                Criterion::Segal => check_segal(&x),
                Criterion::Upper2Segal => check_upper_2segal(&x),
                Criterion::Lower2Segal => check_lower_2segal(&x),
                Criterion::TwoSegal => check_2segal_polygonal(&x, PolygonalMode::Full),
                Criterion::Decomp => check_decomposition(&x),
                Criterion::Validate | Criterion::DecompDirect | Criterion::Culf => unreachable!(),
            }
        }
        (_, other) => Err(Error::schema("/kind", format!("expected an sset document, found {}", other.kind()))),
    }
}
