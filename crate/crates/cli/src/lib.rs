//! Command-line front end for `severi-census`.
//!
//! [`run`] parses an argument vector (program name first, as in
//! `std::env::args`), dispatches to the library and returns a
//! [`CommandResult`]. JSON payloads are deterministic: object keys are
//! sorted and numbers use the shortest round-trip representation.
//!
//! Exit codes: 0 on success, 1 on a domain or I/O error, 2 on a usage
//! error.

pub mod svg;

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use severi_census::census::{
    admissible_pairs, general_lower_bound, genus1_closed_form, intermediate_lattices, kite_count,
    kite_sublattices, CensusError,
};
use severi_census::lattice::{delta_m, severi_dimension};
use severi_census::numerics::{
    amoeba_sample, nodal_partition, passport, LaurentPoly, LogGrid, NumericsError, Tolerances,
};
use severi_census::triangulation::{
    curve_lattices, dual_tropical_curve, incremental_triangulation, kite_triangulation,
    Triangulation, TriangulationError,
};
use severi_census::{IntPoint, KiteSpec, LatticeError, LatticePolygon, Sublattice};

use crate::svg::{emit_svg, Figure};

pub const ENV_TOL_RES: &str = "SEVERI_CENSUS_TOL_RES";
pub const ENV_TOL_VAL: &str = "SEVERI_CENSUS_TOL_VAL";
pub const ENV_TOL_CLUSTER: &str = "SEVERI_CENSUS_TOL_CLUSTER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub artifacts: Vec<PathBuf>,
    pub exit_code: i32,
    /// What the binary prints on stdout: pretty JSON, or the table view.
    pub output: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "severi-census", version, about = "Sublattice censuses, kite counts, convex triangulations and passports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Relative residual tolerance for polynomial roots.
    #[arg(long, global = true)]
    tol_res: Option<f64>,
    /// Relative tolerance for equal critical values.
    #[arg(long, global = true)]
    tol_val: Option<f64>,
    /// Relative distance below which roots are merged.
    #[arg(long, global = true)]
    tol_cluster: Option<f64>,
    /// TOML or JSON file with keys tol_res, tol_val, tol_cluster.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Also write the output to this file (amoeba: `.csv` writes CSV).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write an SVG figure (triangulate, dual-curve, amoeba).
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug, Clone, Copy)]
struct KiteArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    kprime: u64,
}

#[derive(Args, Debug)]
struct TriangulateArgs {
    /// Polygon file; alternatively give a kite with --k and --kprime.
    #[arg(long, conflicts_with_all = ["k", "kprime"])]
    polygon: Option<PathBuf>,
    #[arg(long, requires = "kprime")]
    k: Option<u64>,
    #[arg(long, requires = "k")]
    kprime: Option<u64>,
    #[arg(long)]
    genus: u64,
    /// Index of the sublattice M.
    #[arg(long, default_value_t = 1)]
    index: u64,
    /// Signature (kites only); defaults to the smallest admissible value.
    #[arg(long)]
    kappa: Option<u64>,
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[arg(long)]
    poly: PathBuf,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    a: Complex64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    b: Complex64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Census of intermediate lattices with enough interior points.
    PolygonBound {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        genus: u64,
    },
    /// Multiplicity-weighted kite count.
    KiteCount {
        #[command(flatten)]
        kite: KiteArgs,
        #[arg(long)]
        genus: u64,
    },
    /// Admissible (index, signature) pairs of a kite.
    Admissible {
        #[command(flatten)]
        kite: KiteArgs,
        #[arg(long)]
        genus: u64,
    },
    /// The sublattices ⟨(1, k), (0, r)⟩ of a kite.
    KiteSublattices {
        #[command(flatten)]
        kite: KiteArgs,
    },
    /// Genus-one count against its closed form.
    Genus1Check {
        #[command(flatten)]
        kite: KiteArgs,
    },
    /// Convex triangulation with lifting heights.
    Triangulate(TriangulateArgs),
    /// Triangulation together with its dual tropical curve.
    DualCurve(TriangulateArgs),
    /// Nodal partition and signature of a/z + p(w) + b·z.
    Signature(CurveArgs),
    /// Passport of a Laurent polynomial.
    Passport {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Amoeba sample of a/z + p(w) + b·z.
    Amoeba {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 400)]
        samples: usize,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("expected RE,IM, got {s:?}"))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected RE,IM, got {s:?}")),
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io { path: PathBuf, message: String },
    Parse { path: PathBuf, message: String },
    Domain { code: &'static str, message: String },
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
            CliError::Parse { .. } => "ParseError",
            CliError::Domain { code, .. } => code,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Io { path, message } | CliError::Parse { path, message } => {
                format!("{}: {message}", path.display())
            }
            CliError::Domain { message, .. } => message.clone(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

macro_rules! domain_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain { code: e.code(), message: e.to_string() }
            }
        }
    )*};
}

domain_error!(LatticeError, CensusError, TriangulationError, NumericsError);

/// Runs the command line `argv` with tolerance overrides read from the
/// process environment.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with_env(argv, |key| std::env::var(key).ok())
}

/// As [`run`], with the environment supplied by `env`.
pub fn run_with_env<I, S>(argv: I, env: impl Fn(&str) -> Option<String>) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let text = e.to_string();
            return CommandResult {
                status: Status::Ok,
                payload: json!({ "help": text }),
                artifacts: Vec::new(),
                exit_code: 0,
                output: text,
            };
        }
        Err(e) => return failure(CliError::Usage(e.to_string())),
    };
    let format = cli.common.format;
    match execute(&cli, &env) {
        Ok((payload, mut artifacts)) => {
            let output = render(&payload, format);
            if let Some(path) = &cli.common.out {
                let text = match (&cli.command, path.extension().and_then(|e| e.to_str())) {
                    (Command::Amoeba { .. }, Some("csv")) => amoeba_csv(&payload),
                    _ => output.clone(),
                };
                if let Err(e) = fs::write(path, text) {
                    return failure(io_error(path, e));
                }
                artifacts.push(path.clone());
            }
            CommandResult { status: Status::Ok, payload, artifacts, exit_code: 0, output }
        }
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> CommandResult {
    let payload = json!({ "error": { "code": e.code(), "message": e.message() } });
    let output = render(&payload, Format::Json);
    CommandResult { status: Status::Error, payload, artifacts: Vec::new(), exit_code: e.exit_code(), output }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io { path: path.to_path_buf(), message: e.to_string() }
}

fn render(payload: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(payload).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Table => table(payload),
    }
}

// ---------------------------------------------------------------------------
// Tolerances

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct TolConfig {
    tol_res: Option<f64>,
    tol_val: Option<f64>,
    tol_cluster: Option<f64>,
}

fn read_config(path: &Path) -> Result<TolConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let parsed = if path.extension().and_then(|e| e.to_str()) == Some("json") {
        serde_json::from_str(&text).map_err(|e| e.to_string())
    } else {
        toml::from_str(&text).map_err(|e| e.to_string())
    };
    parsed.map_err(|m| CliError::Usage(format!("config {}: {m}", path.display())))
}

/// Flags win over the environment, which wins over the config file, which
/// wins over the defaults.
fn tolerances(common: &Common, env: &impl Fn(&str) -> Option<String>) -> Result<Tolerances, CliError> {
    let config = match &common.config {
        Some(path) => read_config(path)?,
        None => TolConfig::default(),
    };
    let from_env = |key: &str| -> Result<Option<f64>, CliError> {
        env(key)
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Usage(format!("{key}={v:?} is not a number")))
            })
            .transpose()
    };
    let defaults = Tolerances::default();
    let pick = |flag: Option<f64>, key: &str, file: Option<f64>, default: f64| -> Result<f64, CliError> {
        let v = match flag {
            Some(v) => v,
            None => from_env(key)?.or(file).unwrap_or(default),
        };
        if v.is_finite() && v > 0.0 {
            Ok(v)
        } else {
            Err(CliError::Usage(format!("tolerance must be positive and finite, got {v}")))
        }
    };
    Ok(Tolerances {
        res: pick(common.tol_res, ENV_TOL_RES, config.tol_res, defaults.res)?,
        val: pick(common.tol_val, ENV_TOL_VAL, config.tol_val, defaults.val)?,
        cluster: pick(common.tol_cluster, ENV_TOL_CLUSTER, config.tol_cluster, defaults.cluster)?,
    })
}

// ---------------------------------------------------------------------------
// Inputs

/// A polygon file is either a bare list of vertices or an object with a
/// `vertices` field (as emitted in census and triangulation payloads).
#[derive(Deserialize)]
#[serde(untagged)]
enum PolygonFile {
    Points(Vec<IntPoint>),
    Object { vertices: Vec<IntPoint> },
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse { path: path.to_path_buf(), message: e.to_string() })
}

fn read_polygon(path: &Path) -> Result<LatticePolygon, CliError> {
    let pts = match read_json::<PolygonFile>(path)? {
        PolygonFile::Points(p) => p,
        PolygonFile::Object { vertices } => vertices,
    };
    Ok(LatticePolygon::normalize(&pts)?)
}

fn read_poly(path: &Path) -> Result<LaurentPoly, CliError> {
    read_json(path)
}

fn kite_of(k: u64, kp: u64) -> Result<KiteSpec, CliError> {
    Ok(KiteSpec::new(k, kp)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

fn with_field(mut v: Value, key: &str, extra: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert(key.to_string(), extra);
    }
    v
}

// ---------------------------------------------------------------------------
// Dispatch

type Outcome = Result<(Value, Vec<PathBuf>), CliError>;

fn execute(cli: &Cli, env: &impl Fn(&str) -> Option<String>) -> Outcome {
    let common = &cli.common;
    let none = |v: Value| Ok((v, Vec::new()));
    match &cli.command {
        Command::PolygonBound { polygon, genus } => {
            let poly = read_polygon(polygon)?;
            let census = general_lower_bound(&poly, *genus)?;
            none(with_field(to_value(&census), "severi_dimension", json!(severi_dimension(&poly, *genus))))
        }
        Command::KiteCount { kite, genus } => {
            let kt = kite_of(kite.k, kite.kprime)?;
            let census = kite_count(&kt, *genus)?;
            none(with_field(
                to_value(&census),
                "severi_dimension",
                json!(severi_dimension(&kt.polygon(), *genus)),
            ))
        }
        Command::Admissible { kite, genus } => {
            let kt = kite_of(kite.k, kite.kprime)?;
            let pairs: Vec<Value> = admissible_pairs(&kt, *genus)?
                .into_iter()
                .map(|(r, kappa)| json!({ "r": r, "kappa": kappa }))
                .collect();
            none(json!({ "k": kt.k, "k_prime": kt.k_prime, "genus": genus, "pairs": pairs }))
        }
        Command::KiteSublattices { kite } => {
            let kt = kite_of(kite.k, kite.kprime)?;
            let poly = kt.polygon();
            let lats: Vec<Value> = kite_sublattices(&kt)
                .into_iter()
                .map(|(_, lat)| with_field(to_value(&lat), "interior_points", json!(delta_m(&poly, &lat, 0))))
                .collect();
            none(json!({ "k": kt.k, "k_prime": kt.k_prime, "sublattices": lats }))
        }
        Command::Genus1Check { kite } => {
            let kt = kite_of(kite.k, kite.kprime)?;
            let closed = genus1_closed_form(&kt);
            let enumerated = kite_count(&kt, 1)?.total;
            none(json!({ "closed_form": closed, "enumerated": enumerated, "match": closed == enumerated }))
        }
        Command::Triangulate(args) => {
            let tri = triangulate(args)?;
            let mut artifacts = Vec::new();
            if let Some(path) = &common.svg {
                write_svg(&Figure::Lattice { triangulation: &tri, curve: None }, path)?;
                artifacts.push(path.clone());
            }
            Ok((to_value(&tri), artifacts))
        }
        Command::DualCurve(args) => {
            let tri = triangulate(args)?;
            let curve = dual_tropical_curve(&tri)?;
            let (n, m) = curve_lattices(&curve, &tri)?;
            let mut artifacts = Vec::new();
            if let Some(path) = &common.svg {
                write_svg(&Figure::Lattice { triangulation: &tri, curve: Some(&curve) }, path)?;
                artifacts.push(path.clone());
            }
            let payload = json!({
                "triangulation": to_value(&tri),
                "curve": to_value(&curve),
                "N": to_value(&n),
                "M": to_value(&m),
                "trivalent": curve.is_trivalent(),
                "balanced": curve.is_balanced(),
            });
            Ok((payload, artifacts))
        }
        Command::Signature(c) => {
            let tol = tolerances(common, env)?;
            let p = read_poly(&c.poly)?;
            let nodal = nodal_partition(&p, c.a, c.b, &tol)?;
            none(with_field(to_value(&nodal), "degree", json!(p.degree())))
        }
        Command::Passport { poly } => {
            let tol = tolerances(common, env)?;
            let p = read_poly(poly)?;
            let pp = passport(&p, &tol)?;
            none(with_field(to_value(&pp), "ramification_total", json!(pp.ramification_total())))
        }
        Command::Amoeba { curve, samples } => {
            let tol = tolerances(common, env)?;
            let p = read_poly(&curve.poly)?;
            let grid = LogGrid::default();
            let points = amoeba_sample(&p, curve.a, curve.b, *samples, &grid, &tol);
            let mut artifacts = Vec::new();
            if let Some(path) = &common.svg {
                write_svg(&Figure::Amoeba { points: &points, grid }, path)?;
                artifacts.push(path.clone());
            }
            let payload = json!({ "samples": samples, "grid": to_value(&grid), "points": to_value(&points) });
            Ok((payload, artifacts))
        }
    }
}

fn write_svg(figure: &Figure<'_>, path: &Path) -> Result<(), CliError> {
    emit_svg(figure, path).map_err(|e| io_error(path, e))
}

fn triangulate(args: &TriangulateArgs) -> Result<Triangulation, CliError> {
    let g = args.genus;
    let r = args.index;
    if let Some(path) = &args.polygon {
        if args.kappa.is_some() {
            return Err(CliError::Usage("--kappa applies to kites only".into()));
        }
        let poly = read_polygon(path)?;
        let lat = pick_lattice(&poly, r, g)?;
        return Ok(incremental_triangulation(&poly, &lat, g)?);
    }
    let (Some(k), Some(kp)) = (args.k, args.kprime) else {
        return Err(CliError::Usage("give either --polygon or --k and --kprime".into()));
    };
    let kt = kite_of(k, kp)?;
    let kappa = match args.kappa {
        Some(kappa) => kappa,
        None => admissible_pairs(&kt, g)?
            .into_iter()
            .find(|&(s, _)| s == r)
            .map(|(_, kappa)| kappa)
            .ok_or(TriangulationError::NotAdmissible { r, kappa: 0, g })?,
    };
    if r.is_multiple_of(2) {
        // The explicit construction covers odd indices; for even ones the
        // incremental construction on the same lattice is used.
        if !admissible_pairs(&kt, g)?.contains(&(r, kappa)) {
            return Err(TriangulationError::NotAdmissible { r, kappa, g }.into());
        }
        let lat = kite_sublattices(&kt)
            .into_iter()
            .find(|&(s, _)| s == r)
            .map(|(_, l)| l)
            .expect("admissible index is a kite sublattice");
        return Ok(incremental_triangulation(&kt.polygon(), &lat, g)?);
    }
    Ok(kite_triangulation(&kt, g, r, kappa)?)
}

/// First intermediate lattice of index `r` (in normal-form order) with at
/// least `g` interior points.
fn pick_lattice(poly: &LatticePolygon, r: u64, g: u64) -> Result<Sublattice, CliError> {
    let candidates: Vec<Sublattice> = intermediate_lattices(poly).into_iter().filter(|l| l.index() == r).collect();
    if candidates.is_empty() {
        return Err(CliError::Domain {
            code: "NoSuchLattice",
            message: format!("no lattice of index {r} contains the boundary lattice points"),
        });
    }
    candidates
        .iter()
        .copied()
        .find(|l| delta_m(poly, l, g) >= 0)
        .ok_or_else(|| TriangulationError::GenusOutOfRange { g, min: 1, max: candidates.iter().map(|l| delta_m(poly, l, 0) as u64).max().unwrap_or(0) }.into())
}

// ---------------------------------------------------------------------------
// Plain-text views

fn amoeba_csv(payload: &Value) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["u", "v"]).expect("in-memory write");
    for p in payload["points"].as_array().into_iter().flatten() {
        w.write_record([p["u"].to_string(), p["v"].to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Scalars as `key: value` lines; arrays of objects as aligned tables.
fn table(payload: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = payload else {
        return format!("{}\n", cell(payload));
    };
    let (rows, scalars): (Vec<_>, Vec<_>) = map.iter().partition(|(_, v)| {
        v.as_array().is_some_and(|a| !a.is_empty() && a.iter().all(Value::is_object))
    });
    for (k, v) in scalars {
        out.push_str(&format!("{k}: {}\n", cell(v)));
    }
    for (k, v) in rows {
        out.push_str(&format!("\n{k}:\n"));
        out.push_str(&grid(v.as_array().unwrap()));
    }
    out
}

fn grid(items: &[Value]) -> String {
    let empty = Map::new();
    let headers: Vec<&String> = items[0].as_object().unwrap_or(&empty).keys().collect();
    let body: Vec<Vec<String>> = items
        .iter()
        .map(|it| headers.iter().map(|h| cell(&it[h.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| body.iter().map(|r| r[i].chars().count()).chain([h.chars().count()]).max().unwrap())
        .collect();
    let line = |cells: Vec<String>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.iter().map(|h| h.to_string()).collect());
    for r in body {
        out.push_str(&line(r));
    }
    out
}
