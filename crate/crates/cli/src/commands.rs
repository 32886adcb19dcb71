//! Argument parsing and the six subcommand implementations behind the
//! `ngon` binary, plus the exit-code contract.
//!
//! Output files land in `--out` when given, otherwise in `$NGON_OUT_DIR`
//! (falling back to the working directory) under a name derived from the
//! command. All randomness enters through `--seed`, which defaults to 0 —
//! never the clock — so repeated invocations are byte-identical.

use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use ngon_core::bounds::{self, InequalityId};
use ngon_core::optimizer::{
    self, Constraint, Objective, OptimizationProblem, OptimizationResult, OptimizerError,
    RegularSpec, SolveConfig,
};
use ngon_core::reinhardt::{
    self, Composition, ReinhardtError, SymmetryKind, ValidityMode, DEFAULT_CAP,
};
use ngon_core::{tol, ConvexPolygon};

use crate::document::{config_hash, DocumentError, DocumentKind, PolygonDocument, Provenance};
use crate::render::{self, RenderError, RenderOptions};
use crate::report;

/// Failures carrying the documented exit codes. Argument parsing itself
/// exits 2 through clap; everything else funnels through here.
#[derive(Debug, Error)]
pub enum CliError {
    /// Exit 2: arguments that parse but don't make sense (also covers
    /// unwritable output paths).
    #[error("{0}")]
    Args(String),
    /// Exit 3: a Reinhardt signature that does not exist or does not close.
    #[error("{0}")]
    Signature(String),
    /// Exit 4: enumeration size cap exceeded without `--cap`.
    #[error("{0}")]
    Cap(String),
    /// Exit 5: the optimizer could not produce a feasible polygon.
    #[error("{0}")]
    Infeasible(String),
    /// Exit 6: unreadable, unparsable, or schema-invalid document.
    #[error("{0}")]
    Malformed(String),
    /// Exit 7: a verification report with negative slack (a geometry bug,
    /// never valid input).
    #[error("{0}")]
    Violations(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Args(_) => 2,
            CliError::Signature(_) => 3,
            CliError::Cap(_) => 4,
            CliError::Infeasible(_) => 5,
            CliError::Malformed(_) => 6,
            CliError::Violations(_) => 7,
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> CliError {
        match e {
            // Failing to write the output file is an environment problem,
            // not a malformed document.
            DocumentError::Write { .. } => CliError::Args(e.to_string()),
            _ => CliError::Malformed(e.to_string()),
        }
    }
}

impl From<ReinhardtError> for CliError {
    fn from(e: ReinhardtError) -> CliError {
        match e {
            ReinhardtError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Signature(e.to_string()),
        }
    }
}

impl From<OptimizerError> for CliError {
    fn from(e: OptimizerError) -> CliError {
        match e {
            OptimizerError::BadProblem(_) => CliError::Args(e.to_string()),
            OptimizerError::Infeasible(_) => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<RenderError> for CliError {
    fn from(e: RenderError) -> CliError {
        match e {
            RenderError::Options(_) => CliError::Args(e.to_string()),
            RenderError::Geometry(_) => CliError::Malformed(e.to_string()),
        }
    }
}

/// Extremal convex polygon toolkit: closed-form bounds, Reinhardt
/// constructions, signature enumeration, numeric search, SVG rendering, and
/// verification reports.
#[derive(Debug, Parser)]
#[command(name = "ngon", version, about, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the bound catalog for one side count
    Bounds(BoundsArgs),
    /// Build a named polygon and write it as a document
    Construct(ConstructArgs),
    /// List the valid Reinhardt signatures of n, or count them
    Enumerate(EnumerateArgs),
    /// Search for an extremal polygon and write the best one found
    Optimize(OptimizeArgs),
    /// Draw a polygon document as SVG
    Render(RenderArgs),
    /// Check a polygon document against every cataloged inequality
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Side count
    #[arg(long)]
    pub n: usize,
    /// Fix the diameter
    #[arg(long)]
    pub d: Option<f64>,
    /// Fix the width
    #[arg(long)]
    pub w: Option<f64>,
    /// Fix the perimeter
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Clipped Reuleaux polygon attaining the diameter-bound equalities
    Reinhardt {
        /// Side count
        #[arg(long)]
        n: usize,
        /// Comma-separated arc multipliers, or "auto-regular"
        #[arg(long, default_value = "auto-regular")]
        signature: String,
        /// Diameter
        #[arg(long, default_value_t = 1.0)]
        d: f64,
        /// Append a verification report to stdout
        #[arg(long)]
        verify: bool,
        /// Output path (default <out-dir>/reinhardt-<n>.json)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reuleaux star polygon underlying a Reinhardt construction
    Reuleaux {
        /// Arc multiplier total (the n of the matching Reinhardt polygon)
        #[arg(long)]
        n: usize,
        /// Comma-separated arc multipliers, or "auto-regular"
        #[arg(long, default_value = "auto-regular")]
        signature: String,
        /// Width of the constant-width body
        #[arg(long, default_value_t = 1.0)]
        d: f64,
        /// Append a verification report to stdout
        #[arg(long)]
        verify: bool,
        /// Output path (default <out-dir>/reuleaux-<n>.json)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular polygon
    Regular {
        /// Side count
        #[arg(long)]
        n: usize,
        /// Fix the diameter (exactly one of --d, --w, --side)
        #[arg(long)]
        d: Option<f64>,
        /// Fix the width
        #[arg(long)]
        w: Option<f64>,
        /// Fix the side length
        #[arg(long)]
        side: Option<f64>,
        /// Append a verification report to stdout
        #[arg(long)]
        verify: bool,
        /// Output path (default <out-dir>/regular-<n>.json)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equilateral minimum-perimeter polygon of fixed width (odd n)
    AudetNinin {
        /// Side count (odd)
        #[arg(long)]
        n: usize,
        /// Width
        #[arg(long, default_value_t = 1.0)]
        w: f64,
        /// Append a verification report to stdout
        #[arg(long)]
        verify: bool,
        /// Output path (default <out-dir>/audet-ninin-<n>.json)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Arc multiplier total
    #[arg(long)]
    pub n: usize,
    /// Print aggregate counts instead of one row per class
    #[arg(long)]
    pub census: bool,
    /// How signature validity is decided
    #[arg(long, value_enum, default_value_t = ModeArg::Numeric)]
    pub mode: ModeArg,
    /// Raise the size cap (default 100)
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Closure defect below 1e-9
    Numeric,
    /// Exact cyclotomic divisibility over the integers
    Exact,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    /// Quantity to maximize
    #[arg(long, value_enum)]
    pub objective: ObjectiveArg,
    /// diameter=<v> caps the diameter, width=<v> floors the width,
    /// perimeter=<v> caps the perimeter
    #[arg(long)]
    pub constraint: String,
    /// Side count
    #[arg(long)]
    pub n: usize,
    /// Restrict the search to equal side lengths
    #[arg(long)]
    pub equilateral: bool,
    /// Reduced diameter-graph parameterization (area at diameter=1, even n)
    #[arg(long)]
    pub graham: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 64)]
    pub starts: usize,
    /// One machine-readable progress line per start on stderr
    #[arg(long)]
    pub progress: bool,
    /// Output path (default derived from the problem)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Area,
    Perimeter,
    Width,
}

impl ObjectiveArg {
    fn core(self) -> Objective {
        match self {
            ObjectiveArg::Area => Objective::MaximizeArea,
            ObjectiveArg::Perimeter => Objective::MaximizePerimeter,
            ObjectiveArg::Width => Objective::MaximizeWidth,
        }
    }

    fn slug(self) -> &'static str {
        match self {
            ObjectiveArg::Area => "area",
            ObjectiveArg::Perimeter => "perimeter",
            ObjectiveArg::Width => "width",
        }
    }
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Polygon document to draw
    pub doc: PathBuf,
    /// Output path (default <out-dir>/<document stem>.svg)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Canvas size in pixels
    #[arg(long, default_value_t = 800)]
    pub size: u32,
    /// Stroke width as a fraction of the diameter
    #[arg(long, default_value_t = 0.008)]
    pub stroke: f64,
    /// Overlay the circumscribing Reuleaux arcs
    #[arg(long)]
    pub show_arcs: bool,
    /// Overlay the diameter-graph chords
    #[arg(long)]
    pub show_diameter_graph: bool,
    /// Label vertices with their indices
    #[arg(long)]
    pub labels: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Polygon document to check
    pub doc: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Bounds(a) => {
            print!("{}", cmd_bounds(a)?);
            Ok(())
        }
        Command::Construct(a) => cmd_construct(a),
        Command::Enumerate(a) => {
            print!("{}", cmd_enumerate(a)?);
            Ok(())
        }
        Command::Optimize(a) => cmd_optimize(a),
        Command::Render(a) => cmd_render(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// `--out` wins; otherwise `$NGON_OUT_DIR` or the working directory.
fn resolve_out(explicit: Option<PathBuf>, default_name: &str) -> PathBuf {
    match explicit {
        Some(p) => p,
        None => env::var_os("NGON_OUT_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."))
            .join(default_name),
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::Args(format!("cannot write {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Serialize)]
struct BoundRow {
    inequality: InequalityId,
    bound: Option<f64>,
    attainable: bool,
}

fn cmd_bounds(args: &BoundsArgs) -> Result<String, CliError> {
    let n = args.n;
    if n < 3 {
        return Err(CliError::Args(format!("need n >= 3, got {n}")));
    }
    for (flag, v) in [("--d", args.d), ("--w", args.w), ("--p", args.p)] {
        if let Some(v) = v {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Args(format!(
                    "{flag} must be positive and finite, got {v}"
                )));
            }
        }
    }
    if args.d.is_none() && args.w.is_none() && args.p.is_none() {
        return Err(CliError::Args(
            "pass at least one of --d, --w, --p to fix a normalization".into(),
        ));
    }

    // The formulas only fail on n < 3 or non-positive inputs, both already
    // rejected above; rows whose input quantity was not given stay empty.
    let rows: Vec<BoundRow> = InequalityId::ALL
        .iter()
        .map(|&id| {
            let bound = match id {
                InequalityId::ZenodorusIsoperimetric => args
                    .p
                    .map(|p| bounds::max_area_given_perimeter(n, p).unwrap()),
                InequalityId::ReinhardtPerimeterDiameter => args
                    .d
                    .map(|d| bounds::max_perimeter_given_diameter(n, d).unwrap()),
                InequalityId::ReinhardtAreaDiameter => {
                    args.d.map(|d| bounds::max_area_given_diameter(n, d).unwrap())
                }
                InequalityId::GashkovPerimeterWidth => {
                    args.w.map(|w| bounds::min_perimeter_given_width(n, w).unwrap())
                }
                InequalityId::GashkovWidthDiameter => {
                    args.d.map(|d| bounds::max_width_given_diameter(n, d).unwrap())
                }
                InequalityId::PalAreaWidth => {
                    args.w.map(|w| bounds::min_area_given_width(w).unwrap())
                }
                InequalityId::EquilateralAreaDiameter => args
                    .d
                    .map(|d| bounds::equilateral_max_area_given_diameter(n, d).unwrap()),
            };
            BoundRow {
                inequality: id,
                bound,
                attainable: bounds::attainable(id, n),
            }
        })
        .collect();

    Ok(match args.format {
        Format::Csv => {
            let mut out = String::from("inequality,bound,attainable\n");
            for r in &rows {
                let bound = r.bound.map(|b| b.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{},{}", r.inequality, bound, r.attainable);
            }
            out
        }
        Format::Human => {
            let mut fixed = Vec::new();
            if let Some(d) = args.d {
                fixed.push(format!("d={d}"));
            }
            if let Some(w) = args.w {
                fixed.push(format!("w={w}"));
            }
            if let Some(p) = args.p {
                fixed.push(format!("p={p}"));
            }
            let mut out = format!("bound catalog for n={n} ({})\n", fixed.join(", "));
            let _ = writeln!(out, "{:<28} {:>18} {:>10}", "inequality", "bound", "attainable");
            for r in &rows {
                match r.bound {
                    Some(b) => {
                        let _ = writeln!(
                            out,
                            "{:<28} {:>18.12} {:>10}",
                            r.inequality.name(),
                            b,
                            if r.attainable { "yes" } else { "no" }
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "{:<28} {:>18} {:>10}",
                            r.inequality.name(),
                            "-",
                            if r.attainable { "yes" } else { "no" }
                        );
                    }
                }
            }
            out
        }
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&rows).expect("row serialization is total");
            s.push('\n');
            s
        }
    })
}

// ---------------------------------------------------------------------------
// construct

fn parse_signature(n: usize, text: &str) -> Result<Composition, CliError> {
    if text == "auto-regular" {
        return Composition::auto_regular(n).ok_or_else(|| {
            CliError::Signature(format!(
                "no valid signature for n={n}: a power of 2 admits none"
            ))
        });
    }
    let parts = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| {
            CliError::Signature(format!("signature {text:?} is not a list of integers: {e}"))
        })?;
    Ok(Composition::new(n, parts)?)
}

#[derive(Serialize)]
struct ConstructConfig<'a> {
    kind: &'a str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<&'a [u32]>,
    /// Which measurement fixes the scale: "d", "w", or "side".
    param: &'a str,
    value: f64,
}

fn cmd_construct(args: &ConstructArgs) -> Result<(), CliError> {
    let (polygon, kind, signature, name, command, config, verify, out) = match &args.kind {
        ConstructKind::Reinhardt {
            n,
            signature,
            d,
            verify,
            out,
        } => {
            let c = parse_signature(*n, signature)?;
            let built = reinhardt::reinhardt_polygon(&c, *d)?;
            let sig = c.parts().to_vec();
            let command = format!(
                "construct reinhardt --n {} --signature {} --d {}",
                n,
                join_parts(&sig),
                d
            );
            let config = config_hash(&ConstructConfig {
                kind: "reinhardt",
                n: *n,
                signature: Some(c.parts()),
                param: "d",
                value: *d,
            });
            (
                built.polygon,
                DocumentKind::Reinhardt,
                Some(sig),
                format!("reinhardt-{n}"),
                command,
                config,
                *verify,
                out.clone(),
            )
        }
        ConstructKind::Reuleaux {
            n,
            signature,
            d,
            verify,
            out,
        } => {
            let c = parse_signature(*n, signature)?;
            let star = reinhardt::build_reuleaux(&c, *d)?;
            let polygon = ConvexPolygon::new(star.vertices.clone()).map_err(|e| {
                CliError::Signature(format!("star vertices are not convex: {e}"))
            })?;
            let sig = c.parts().to_vec();
            let command = format!(
                "construct reuleaux --n {} --signature {} --d {}",
                n,
                join_parts(&sig),
                d
            );
            let config = config_hash(&ConstructConfig {
                kind: "reuleaux",
                n: *n,
                signature: Some(c.parts()),
                param: "d",
                value: *d,
            });
            (
                polygon,
                DocumentKind::Reuleaux,
                Some(sig),
                format!("reuleaux-{n}"),
                command,
                config,
                *verify,
                out.clone(),
            )
        }
        ConstructKind::Regular {
            n,
            d,
            w,
            side,
            verify,
            out,
        } => {
            let (spec, param, value) = match (d, w, side) {
                (Some(d), None, None) => (RegularSpec::Diameter(*d), "d", *d),
                (None, Some(w), None) => (RegularSpec::Width(*w), "w", *w),
                (None, None, Some(s)) => (RegularSpec::Side(*s), "side", *s),
                _ => {
                    return Err(CliError::Args(
                        "pass exactly one of --d, --w, --side".into(),
                    ))
                }
            };
            let polygon = optimizer::regular_polygon(*n, spec)?;
            let command = format!("construct regular --n {n} --{param} {value}");
            let config = config_hash(&ConstructConfig {
                kind: "regular",
                n: *n,
                signature: None,
                param,
                value,
            });
            (
                polygon,
                DocumentKind::Generic,
                None,
                format!("regular-{n}"),
                command,
                config,
                *verify,
                out.clone(),
            )
        }
        ConstructKind::AudetNinin { n, w, verify, out } => {
            let polygon = optimizer::audet_ninin_polygon(*n, *w)?;
            let command = format!("construct audet-ninin --n {n} --w {w}");
            let config = config_hash(&ConstructConfig {
                kind: "audet-ninin",
                n: *n,
                signature: None,
                param: "w",
                value: *w,
            });
            (
                polygon,
                DocumentKind::Generic,
                None,
                format!("audet-ninin-{n}"),
                command,
                config,
                *verify,
                out.clone(),
            )
        }
    };

    let doc = PolygonDocument::new(
        kind,
        &polygon,
        signature,
        Provenance {
            command,
            seed: 0,
            config_hash: config,
        },
    );
    let path = resolve_out(out, &format!("{name}.json"));
    doc.save(&path)?;
    print!("document={}\n", path.display());
    if verify {
        print!("{}", report::report_human(&bounds::verify(&polygon, name)));
    }
    Ok(())
}

fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// enumerate

fn cmd_enumerate(args: &EnumerateArgs) -> Result<String, CliError> {
    let mode = match args.mode {
        ModeArg::Numeric => ValidityMode::default(),
        ModeArg::Exact => ValidityMode::Exact,
    };
    let classes = reinhardt::enumerate_with_cap(args.n, mode, args.cap.unwrap_or(DEFAULT_CAP))?;
    if args.census {
        let c = reinhardt::census(args.n, &classes);
        return Ok(format!(
            "n,periodic,sporadic\n{},{},{}\n",
            c.n, c.periodic, c.sporadic
        ));
    }
    let mut out = String::from("signature,class,k\n");
    for (c, class) in &classes {
        let sig = c
            .parts()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join("-");
        let (label, k) = match class.kind {
            SymmetryKind::Periodic(k) => ("periodic", k),
            SymmetryKind::Sporadic => ("sporadic", 1),
        };
        let _ = writeln!(out, "{sig},{label},{k}");
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// optimize

#[derive(Serialize)]
struct OptimizeConfig {
    objective: Objective,
    constraint: Constraint,
    n: usize,
    equilateral: bool,
    graham: bool,
    seed: u64,
    starts: usize,
}

fn parse_constraint(text: &str) -> Result<Constraint, CliError> {
    let (name, value) = text.split_once('=').ok_or_else(|| {
        CliError::Args(format!("constraint must look like diameter=1, got {text:?}"))
    })?;
    let v: f64 = value
        .trim()
        .parse()
        .map_err(|_| CliError::Args(format!("constraint value {value:?} is not a number")))?;
    match name.trim() {
        "diameter" => Ok(Constraint::DiameterAtMost(v)),
        "width" => Ok(Constraint::WidthAtLeast(v)),
        "perimeter" => Ok(Constraint::PerimeterAtMost(v)),
        other => Err(CliError::Args(format!(
            "unknown constraint {other:?}; expected diameter, width or perimeter"
        ))),
    }
}

fn constraint_slug(c: Constraint) -> &'static str {
    match c {
        Constraint::DiameterAtMost(_) => "diameter",
        Constraint::WidthAtLeast(_) => "width",
        Constraint::PerimeterAtMost(_) => "perimeter",
    }
}

fn cmd_optimize(args: &OptimizeArgs) -> Result<(), CliError> {
    let constraint = parse_constraint(&args.constraint)?;
    let config = SolveConfig {
        starts: args.starts,
        seed: args.seed,
        progress: args.progress,
        ..SolveConfig::default()
    };

    let (result, default_name): (OptimizationResult, String) = if args.graham {
        if args.objective != ObjectiveArg::Area {
            return Err(CliError::Args("--graham searches area only".into()));
        }
        if constraint != Constraint::DiameterAtMost(1.0) {
            return Err(CliError::Args(
                "--graham runs at diameter=1; rescale the result instead".into(),
            ));
        }
        if args.equilateral {
            return Err(CliError::Args(
                "--graham and --equilateral do not combine".into(),
            ));
        }
        (
            optimizer::graham_solve(args.n, &config)?,
            format!("graham-{}.json", args.n),
        )
    } else {
        let problem = OptimizationProblem {
            objective: args.objective.core(),
            constraint,
            n: args.n,
            equilateral: args.equilateral,
        };
        (
            optimizer::solve(&problem, &config)?,
            format!(
                "{}-{}-{}.json",
                args.objective.slug(),
                constraint_slug(constraint),
                args.n
            ),
        )
    };

    let command = format!(
        "optimize --objective {} --constraint {}={} --n {}{}{} --seed {} --starts {}",
        args.objective.slug(),
        constraint_slug(constraint),
        constraint.value(),
        args.n,
        if args.equilateral { " --equilateral" } else { "" },
        if args.graham { " --graham" } else { "" },
        args.seed,
        args.starts
    );
    let doc = PolygonDocument::new(
        DocumentKind::Optimized,
        &result.best,
        None,
        Provenance {
            command,
            seed: args.seed,
            config_hash: config_hash(&OptimizeConfig {
                objective: args.objective.core(),
                constraint,
                n: args.n,
                equilateral: args.equilateral,
                graham: args.graham,
                seed: args.seed,
                starts: args.starts,
            }),
        },
    );
    let path = resolve_out(args.out.clone(), &default_name);
    doc.save(&path)?;

    let mut summary = format!("value={}\n", result.value);
    match result.bound {
        Some(b) => {
            let _ = writeln!(summary, "bound={b}");
        }
        None => summary.push_str("bound=none\n"),
    }
    match result.gap {
        Some(g) => {
            let _ = writeln!(summary, "gap={g}");
        }
        None => summary.push_str("gap=none\n"),
    }
    let _ = writeln!(summary, "converged={}", result.converged);
    let _ = writeln!(summary, "starts={}", result.starts);
    let _ = writeln!(summary, "seed={}", result.seed);
    let _ = writeln!(summary, "document={}", path.display());
    print!("{summary}");
    Ok(())
}

// ---------------------------------------------------------------------------
// render and verify

fn cmd_render(args: &RenderArgs) -> Result<(), CliError> {
    let doc = PolygonDocument::load(&args.doc)?;
    let opts = RenderOptions {
        size: args.size,
        stroke: args.stroke,
        show_arcs: args.show_arcs,
        show_diameter_graph: args.show_diameter_graph,
        labels: args.labels,
    };
    let svg = render::render(&doc, &opts)?;
    let stem = args
        .doc
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "polygon".into());
    let path = resolve_out(args.out.clone(), &format!("{stem}.svg"));
    write_text(&path, &svg)?;
    print!("svg={}\n", path.display());
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let doc = PolygonDocument::load(&args.doc)?;
    let polygon = doc.to_polygon().map_err(|e| {
        CliError::Violations(format!("document does not describe a convex polygon: {e}"))
    })?;
    let id = args
        .doc
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "polygon".into());
    let report = bounds::verify(&polygon, id);
    match args.format {
        Format::Human => print!("{}", report::report_human(&report)),
        Format::Csv => print!("{}", report::report_csv(&report)),
        Format::Json => print!("{}", report::report_json(&report)),
    }
    let violated: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| e.slack < -tol::METRIC_EPS)
        .map(|e| e.inequality.name())
        .collect();
    if !violated.is_empty() {
        return Err(CliError::Violations(format!(
            "{} inequality violation(s): {}",
            violated.len(),
            violated.join(", ")
        )));
    }
    Ok(())
}
