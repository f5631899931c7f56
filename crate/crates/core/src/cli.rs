//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis;
use crate::error::{Error, Result};
use crate::fusion::{self, ComparativeConfig, ComparisonReport, WeightVector};
use crate::io;
use crate::measures::{self, AlphaGrid, Direction, GridSpec, LevelScheme};
use crate::set::{self, FuzzySet, SetProfile, Universe};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 1;
pub const EXIT_IO: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-compare",
    version,
    about = "Compare fuzzy sets with a fused similarity/distance measure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a fuzzy set from one numeric CSV column.
    Build(BuildArgs),
    /// Compare two fuzzy sets.
    Compare(CompareArgs),
    /// Compare every ordered pair of sets.
    Matrix(MatrixArgs),
    /// Rank candidates by closeness to a reference set.
    Rank(RankArgs),
    /// Pick the prototype that best matches an input set.
    Classify(ClassifyArgs),
    /// Tabulate the comparative value over a range of weights.
    SweepWeights(SweepArgs),
    /// Check set files and print their profiles.
    Validate(ValidateArgs),
    /// Sample membership curves for plotting.
    PlotData(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Measure {
    All,
    Jaccard,
    Distance,
    Comparative,
    Complement,
}

#[derive(Debug, Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Significant digits for numeric output.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=17))]
    precision: u32,
}

#[derive(Debug, Args)]
struct MeasureOpts {
    /// OWA weights as W1,W2.
    #[arg(long, default_value = "0.7,0.3")]
    weights: String,
    #[arg(long, default_value_t = 100)]
    alpha_levels: usize,
    /// Placement of alpha levels.
    #[arg(long, value_enum, default_value = "midpoint")]
    alpha_scheme: SchemeArg,
    /// Normalizing distance; defaults to the universe width.
    #[arg(long)]
    lambda: Option<f64>,
    /// Signed distance (default).
    #[arg(long, conflicts_with = "symmetric")]
    directional: bool,
    /// Unsigned distance.
    #[arg(long)]
    symmetric: bool,
    /// Similarity sample grid: `integers` or `uniform:N`.
    #[arg(long, default_value = "uniform:201")]
    grid: String,
    /// Reject non-convex sets.
    #[arg(long)]
    strict_convex: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Upper,
    Midpoint,
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Ratings CSV with a header row.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "rating")]
    column: String,
    /// Universe bounds as MIN,MAX.
    #[arg(long)]
    universe: String,
    /// Comma-separated bin centres; defaults to the integers in the universe.
    #[arg(long)]
    bins: Option<String>,
    /// Set name; defaults to the output file stem.
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Two set files: first and second argument of the comparison.
    #[arg(num_args = 0..=2)]
    sets: Vec<PathBuf>,
    /// Precomputed similarity (use with --distance and --lambda instead of files).
    #[arg(long, requires_all = ["distance", "lambda"], conflicts_with = "sets")]
    similarity: Option<f64>,
    #[arg(long, requires = "similarity", allow_negative_numbers = true)]
    distance: Option<f64>,
    #[arg(long, value_enum, default_value = "all")]
    measure: Measure,
    #[command(flatten)]
    opts: MeasureOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(required = true, num_args = 2..)]
    sets: Vec<PathBuf>,
    #[command(flatten)]
    opts: MeasureOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[arg(long)]
    reference: PathBuf,
    #[arg(required = true, num_args = 1..)]
    candidates: Vec<PathBuf>,
    #[command(flatten)]
    opts: MeasureOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Prototype set files; each set's name is its label.
    #[arg(required = true, num_args = 2..)]
    prototypes: Vec<PathBuf>,
    #[command(flatten)]
    opts: MeasureOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, requires = "normalized_distance", conflicts_with = "sets")]
    similarity: Option<f64>,
    #[arg(long, requires = "similarity", allow_negative_numbers = true)]
    normalized_distance: Option<f64>,
    /// Two set files to measure instead of precomputed values.
    #[arg(long, num_args = 2)]
    sets: Vec<PathBuf>,
    #[arg(long, default_value_t = 11)]
    steps: usize,
    #[command(flatten)]
    opts: MeasureOpts,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=17))]
    precision: u32,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[arg(required = true, num_args = 1..)]
    sets: Vec<PathBuf>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[arg(required = true, num_args = 1..)]
    sets: Vec<PathBuf>,
    /// Number of uniform x samples across the universe.
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=17))]
    precision: u32,
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return EXIT_VALIDATION;
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    if e.is_io() {
        EXIT_IO
    } else {
        EXIT_VALIDATION
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Build(a) => cmd_build(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Matrix(a) => cmd_matrix(a, out),
        Command::Rank(a) => cmd_rank(a, out),
        Command::Classify(a) => cmd_classify(a, out),
        Command::SweepWeights(a) => cmd_sweep(a, out),
        Command::Validate(a) => cmd_validate(a, out),
        Command::PlotData(a) => cmd_plotdata(a, out),
    }
}

fn stdout_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(stdout_err)
    };
}

/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x + 0.0;
    }
    let s = format!("{:.*e}", digits as usize - 1, x);
    s.parse::<f64>().expect("formatted float parses") + 0.0
}

/// Formats with `digits` significant digits, trimming trailing zeros but
/// keeping at least one decimal place.
pub fn format_num(x: f64, digits: u32) -> String {
    let s = round_sig(x, digits).to_string();
    if s.contains(['.', 'e', 'i', 'N']) {
        s
    } else {
        format!("{s}.0")
    }
}

fn parse_list(raw: &str, what: &str) -> Result<Vec<f64>> {
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::NotEnoughInputs(format!("cannot parse {what} entry `{t}`")))
        })
        .collect()
}

fn parse_grid(raw: &str) -> Result<GridSpec> {
    if raw == "integers" {
        return Ok(GridSpec::Integers);
    }
    raw.strip_prefix("uniform:")
        .and_then(|n| n.parse::<usize>().ok())
        .map(GridSpec::Uniform)
        .ok_or_else(|| {
            Error::InvalidGrid(format!("expected `integers` or `uniform:N`, got `{raw}`"))
        })
}

impl MeasureOpts {
    fn config(&self) -> Result<ComparativeConfig> {
        let weights = WeightVector::new(parse_list(&self.weights, "weights")?)?;
        let config = ComparativeConfig {
            weights,
            alpha_levels: self.alpha_levels,
            level_scheme: match self.alpha_scheme {
                SchemeArg::Upper => LevelScheme::Upper,
                SchemeArg::Midpoint => LevelScheme::Midpoint,
            },
            lambda_override: self.lambda,
            direction: if self.symmetric {
                Direction::Symmetric
            } else {
                Direction::Directional
            },
            convexity: if self.strict_convex {
                measures::Convexity::Strict
            } else {
                measures::Convexity::Span
            },
            grid: parse_grid(&self.grid)?,
        };
        config.validate()?;
        Ok(config)
    }
}

fn rounded(v: f64, p: u32) -> Value {
    json!(round_sig(v, p))
}

fn report_json(r: &ComparisonReport, p: u32) -> Value {
    json!({
        "similarity": rounded(r.similarity, p),
        "distance": rounded(r.distance, p),
        "normalized_distance": rounded(r.normalized_distance, p),
        "comparative": rounded(r.comparative, p),
        "complement": rounded(r.complement, p),
        "lambda": rounded(r.lambda, p),
    })
}

fn report_fields(r: &ComparisonReport) -> [(&'static str, f64); 6] {
    [
        ("similarity", r.similarity),
        ("distance", r.distance),
        ("normalized_distance", r.normalized_distance),
        ("comparative", r.comparative),
        ("complement", r.complement),
        ("lambda", r.lambda),
    ]
}

fn config_fields(c: &ComparativeConfig) -> Vec<(&'static str, String)> {
    vec![
        (
            "weights",
            c.weights
                .as_slice()
                .iter()
                .map(f64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("alpha_levels", c.alpha_levels.to_string()),
        (
            "alpha_scheme",
            format!("{:?}", c.level_scheme).to_lowercase(),
        ),
        (
            "lambda_override",
            c.lambda_override
                .map_or("universe width".to_string(), |l| l.to_string()),
        ),
        ("direction", format!("{:?}", c.direction).to_lowercase()),
        ("convexity", format!("{:?}", c.convexity).to_lowercase()),
        (
            "grid",
            match c.grid {
                GridSpec::Integers => "integers".to_string(),
                GridSpec::Uniform(n) => format!("uniform:{n}"),
            },
        ),
    ]
}

fn profile_json(p: &SetProfile, digits: u32) -> Value {
    json!({
        "height": rounded(p.height, digits),
        "is_normal": p.is_normal,
        "is_convex": p.is_convex,
        "support": [rounded(p.support.left(), digits), rounded(p.support.right(), digits)],
    })
}

fn profile_text(p: &SetProfile, digits: u32) -> String {
    format!(
        "height={} normal={} convex={} support=[{}, {}]",
        format_num(p.height, digits),
        p.is_normal,
        p.is_convex,
        format_num(p.support.left(), digits),
        format_num(p.support.right(), digits)
    )
}

fn read_sets(paths: &[PathBuf]) -> Result<Vec<FuzzySet>> {
    paths.iter().map(|p| io::read_set(p)).collect()
}

fn cmd_build(a: BuildArgs, out: &mut dyn Write) -> Result<()> {
    let bounds = parse_list(&a.universe, "universe")?;
    let [min, max] = bounds[..] else {
        return Err(Error::InvalidGrid(format!(
            "universe needs MIN,MAX, got `{}`",
            a.universe
        )));
    };
    let universe = Universe::new(min, max)?;
    let bins = match &a.bins {
        Some(raw) => parse_list(raw, "bins")?,
        None => measures::SampleGrid::integers(&universe)?.xs().to_vec(),
    };
    let samples = io::read_column_file(&a.input, &a.column)?;
    let name = a.name.clone().unwrap_or_else(|| stem(&a.out));
    let set = set::build_from_samples(name, &samples, universe, &bins)?;
    io::write_set(&a.out, &set)?;

    let p = a.output.precision;
    let profile = set.profile();
    match a.output.format {
        Format::Json => emit!(
            out,
            "{}",
            json!({"name": set.name(), "out": a.out.display().to_string(), "samples": samples.len(), "profile": profile_json(&profile, p)})
        ),
        _ => emit!(
            out,
            "wrote {} ({} samples): {} {}",
            a.out.display(),
            samples.len(),
            set.name(),
            profile_text(&profile, p)
        ),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "set".into())
}

fn cmd_compare(a: CompareArgs, out: &mut dyn Write) -> Result<()> {
    let config = a.opts.config()?;
    let (labels, report) = match a.similarity {
        Some(s) => {
            let d = a.distance.expect("clap enforces --distance");
            let lambda = a.opts.lambda.expect("clap enforces --lambda");
            (None, fusion::fuse(s, d, lambda, &config.weights)?)
        }
        None => {
            if a.sets.len() != 2 {
                return Err(Error::NotEnoughInputs(format!(
                    "compare needs two set files, got {}",
                    a.sets.len()
                )));
            }
            let sets = read_sets(&a.sets)?;
            if a.measure == Measure::Jaccard {
                let grid = config.grid.build(sets[0].universe())?;
                let s = measures::jaccard(&sets[0], &sets[1], &grid)?;
                return emit_single(out, a.output, "similarity", s);
            }
            if a.measure == Measure::Distance {
                let grid = AlphaGrid::with_scheme(config.alpha_levels, config.level_scheme)?;
                let d = measures::alpha_distance(
                    &sets[0],
                    &sets[1],
                    &grid,
                    config.direction,
                    config.convexity,
                )?;
                return emit_single(out, a.output, "distance", d);
            }
            let r = fusion::comparative(&sets[0], &sets[1], &config)?;
            (
                Some((sets[0].name().to_owned(), sets[1].name().to_owned())),
                r,
            )
        }
    };

    match a.measure {
        Measure::Jaccard => return emit_single(out, a.output, "similarity", report.similarity),
        Measure::Distance => return emit_single(out, a.output, "distance", report.distance),
        Measure::Comparative => {
            return emit_single(out, a.output, "comparative", report.comparative)
        }
        Measure::Complement => return emit_single(out, a.output, "complement", report.complement),
        Measure::All => {}
    }

    let p = a.output.precision;
    match a.output.format {
        Format::Json => {
            let mut doc = json!({
                "report": report_json(&report, p),
                "config": serde_json::to_value(&config)?,
            });
            if let Some((x, y)) = &labels {
                doc["a"] = json!(x);
                doc["b"] = json!(y);
            }
            emit!(out, "{doc}")
        }
        Format::Csv => {
            let fields = report_fields(&report);
            emit!(
                out,
                "{}",
                fields.iter().map(|f| f.0).collect::<Vec<_>>().join(",")
            )?;
            emit!(
                out,
                "{}",
                fields
                    .iter()
                    .map(|f| format_num(f.1, p))
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
        Format::Text => {
            if let Some((x, y)) = &labels {
                emit!(out, "{:<20} {x} -> {y}", "pair")?;
            }
            for (k, v) in report_fields(&report) {
                emit!(out, "{k:<20} {}", format_num(v, p))?;
            }
            for (k, v) in config_fields(&config) {
                emit!(out, "{k:<20} {v}")?;
            }
            Ok(())
        }
    }
}

fn emit_single(out: &mut dyn Write, o: OutputOpts, key: &str, v: f64) -> Result<()> {
    match o.format {
        Format::Json => emit!(out, "{}", json!({ key: round_sig(v, o.precision) })),
        Format::Csv => emit!(out, "{key}\n{}", format_num(v, o.precision)),
        Format::Text => emit!(out, "{}", format_num(v, o.precision)),
    }
}

fn cmd_matrix(a: MatrixArgs, out: &mut dyn Write) -> Result<()> {
    let config = a.opts.config()?;
    let sets = read_sets(&a.sets)?;
    let m = analysis::matrix(&sets, &config)?;
    let p = a.output.precision;
    let n = m.names.len();
    match a.output.format {
        Format::Json => {
            let entries: Vec<Vec<Value>> = m
                .entries
                .iter()
                .map(|row| row.iter().map(|r| report_json(r, p)).collect())
                .collect();
            emit!(out, "{}", json!({"names": m.names, "entries": entries}))
        }
        Format::Csv => {
            emit!(
                out,
                "a,b,similarity,distance,normalized_distance,comparative,complement,lambda"
            )?;
            for i in 0..n {
                for j in 0..n {
                    let vals: Vec<String> = report_fields(m.get(i, j))
                        .iter()
                        .map(|f| format_num(f.1, p))
                        .collect();
                    emit!(out, "{},{},{}", m.names[i], m.names[j], vals.join(","))?;
                }
            }
            Ok(())
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| format_num(m.get(i, j).comparative, p))
                        .collect()
                })
                .collect();
            let width = cells
                .iter()
                .flatten()
                .map(String::len)
                .chain(m.names.iter().map(String::len))
                .max()
                .unwrap_or(1);
            let header: Vec<String> = m.names.iter().map(|s| format!("{s:>width$}")).collect();
            emit!(out, "{:width$}  {}", "", header.join("  "))?;
            for (name, cells) in m.names.iter().zip(&cells) {
                let row: Vec<String> = cells.iter().map(|c| format!("{c:>width$}")).collect();
                emit!(out, "{:width$}  {}", name, row.join("  "))?;
            }
            Ok(())
        }
    }
}

fn cmd_rank(a: RankArgs, out: &mut dyn Write) -> Result<()> {
    let config = a.opts.config()?;
    let reference = io::read_set(&a.reference)?;
    let candidates = read_sets(&a.candidates)?;
    let ranked = analysis::rank(&reference, &candidates, &config)?;
    let p = a.output.precision;
    match a.output.format {
        Format::Json => {
            let rows: Vec<Value> = ranked
                .iter()
                .enumerate()
                .map(|(i, c)| json!({"rank": i + 1, "label": c.label, "report": report_json(&c.report, p)}))
                .collect();
            emit!(
                out,
                "{}",
                json!({"reference": reference.name(), "ranking": rows})
            )
        }
        Format::Csv => {
            emit!(
                out,
                "rank,label,comparative,complement,similarity,distance,normalized_distance"
            )?;
            for (i, c) in ranked.iter().enumerate() {
                let r = &c.report;
                emit!(
                    out,
                    "{},{},{},{},{},{},{}",
                    i + 1,
                    c.label,
                    format_num(r.comparative, p),
                    format_num(r.complement, p),
                    format_num(r.similarity, p),
                    format_num(r.distance, p),
                    format_num(r.normalized_distance, p)
                )?;
            }
            Ok(())
        }
        Format::Text => {
            let width = ranked
                .iter()
                .map(|c| c.label.len())
                .max()
                .unwrap_or(5)
                .max(5);
            emit!(
                out,
                "{:>4}  {:<width$}  {:>12}  {:>12}",
                "rank",
                "label",
                "comparative",
                "complement"
            )?;
            for (i, c) in ranked.iter().enumerate() {
                emit!(
                    out,
                    "{:>4}  {:<width$}  {:>12}  {:>12}",
                    i + 1,
                    c.label,
                    format_num(c.report.comparative, p),
                    format_num(c.report.complement, p)
                )?;
            }
            Ok(())
        }
    }
}

fn cmd_classify(a: ClassifyArgs, out: &mut dyn Write) -> Result<()> {
    let config = a.opts.config()?;
    let input = io::read_set(&a.input)?;
    let prototypes: Vec<(String, FuzzySet)> = read_sets(&a.prototypes)?
        .into_iter()
        .map(|s| (s.name().to_owned(), s))
        .collect();
    let result = analysis::classify(&input, &prototypes, &config)?;
    let p = a.output.precision;
    match a.output.format {
        Format::Json => {
            let scores: serde_json::Map<String, Value> = result
                .scores
                .iter()
                .map(|(k, v)| (k.clone(), rounded(*v, p)))
                .collect();
            emit!(
                out,
                "{}",
                json!({"best_label": result.best_label, "margin": rounded(result.margin, p), "scores": scores})
            )
        }
        Format::Csv => {
            emit!(out, "label,complement,best")?;
            for (label, score) in &result.scores {
                emit!(
                    out,
                    "{label},{},{}",
                    format_num(*score, p),
                    *label == result.best_label
                )?;
            }
            Ok(())
        }
        Format::Text => {
            emit!(out, "{:<8} {}", "best", result.best_label)?;
            emit!(out, "{:<8} {}", "margin", format_num(result.margin, p))?;
            for (label, score) in &result.scores {
                emit!(out, "  {label:<12} {}", format_num(*score, p))?;
            }
            Ok(())
        }
    }
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write) -> Result<()> {
    let (s, nd) = match (a.similarity, a.normalized_distance) {
        (Some(s), Some(nd)) => (s, nd),
        _ => {
            if a.sets.len() != 2 {
                return Err(Error::NotEnoughInputs(
                    "sweep-weights needs --similarity/--normalized-distance or --sets A B".into(),
                ));
            }
            let config = a.opts.config()?;
            let sets = read_sets(&a.sets)?;
            let r = fusion::comparative(&sets[0], &sets[1], &config)?;
            (r.similarity, r.normalized_distance)
        }
    };
    let rows = analysis::weight_sweep(s, nd, a.steps)?;
    emit!(out, "w1,w2,c")?;
    for r in rows {
        emit!(
            out,
            "{},{},{}",
            format_num(r.w1, a.precision),
            format_num(r.w2, a.precision),
            format_num(r.c, a.precision)
        )?;
    }
    Ok(())
}

fn cmd_validate(a: ValidateArgs, out: &mut dyn Write) -> Result<()> {
    let mut failure: Option<Error> = None;
    let p = a.output.precision;
    for path in &a.sets {
        match io::read_set(path) {
            Ok(set) => {
                let profile = set.profile();
                match a.output.format {
                    Format::Json => emit!(
                        out,
                        "{}",
                        json!({"path": path.display().to_string(), "valid": true, "name": set.name(), "profile": profile_json(&profile, p)})
                    )?,
                    _ => emit!(
                        out,
                        "{}: ok {} {}",
                        path.display(),
                        set.name(),
                        profile_text(&profile, p)
                    )?,
                }
            }
            Err(e) => {
                match a.output.format {
                    Format::Json => emit!(
                        out,
                        "{}",
                        json!({"path": path.display().to_string(), "valid": false, "error": e.to_string()})
                    )?,
                    _ => emit!(out, "{}: invalid: {e}", path.display())?,
                }
                // an I/O failure outranks a validation failure
                if failure.as_ref().is_none_or(|f| !f.is_io()) {
                    failure = Some(e);
                }
            }
        }
    }
    failure.map_or(Ok(()), Err)
}

fn cmd_plotdata(a: PlotArgs, out: &mut dyn Write) -> Result<()> {
    let sets = read_sets(&a.sets)?;
    for s in &sets[1..] {
        if s.universe() != sets[0].universe() {
            return Err(Error::UniverseMismatch {
                left: sets[0].name().to_owned(),
                right: s.name().to_owned(),
            });
        }
    }
    let grid = measures::SampleGrid::uniform(sets[0].universe(), a.samples)?;
    let header: Vec<&str> = std::iter::once("x")
        .chain(sets.iter().map(|s| s.name()))
        .collect();
    emit!(out, "{}", header.join(","))?;
    for &x in grid.xs() {
        let row: Vec<String> = std::iter::once(format_num(x, a.precision))
            .chain(
                sets.iter()
                    .map(|s| format_num(s.membership(x), a.precision)),
            )
            .collect();
        emit!(out, "{}", row.join(","))?;
    }
    Ok(())
}
