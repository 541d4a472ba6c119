//! Subcommands of the `gyrograph` binary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use gyrograph::distance::{
    detour_matrix_bounded, distance_degree_sequence, distance_matrix, eccentricity_profile,
    DEFAULT_DETOUR_BOUND,
};
use gyrograph::graph::classify_gn_shape;
use gyrograph::hamiltonian::is_hamiltonian;
use gyrograph::hosoya::{hosoya_polynomial, reciprocal_status_hosoya};
use gyrograph::planarity::is_planar;
use gyrograph::resolving::{
    metric_basis, resolving_polynomial_with_budget, twin_partition, DEFAULT_SUBSET_BUDGET,
};
use gyrograph::spectral::{adjacency_matrix, char_poly_exact, spectral_radius, DEFAULT_TOLERANCE};
use gyrograph::table_io::{self, Bundled, TableFormat, DATA_DIR_ENV};
use gyrograph::{power_graph, Error, Graph, GyroGroup};

use crate::report::{build_report, ReportOptions, ReportRequest};

#[derive(Debug, Parser)]
#[command(
    name = "gyrograph",
    version,
    about = "Gyrogroups, power graphs and their invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a gyrogroup, write its canonical JSON table and check the axioms.
    Build(BuildArgs),
    /// Write the power graph of a gyrogroup (or a graph file) as DOT or JSON.
    Export(ExportArgs),
    /// Compute selected invariants of a power graph or graph file.
    Invariants(InvariantsArgs),
    /// Check the closed forms for G(n) and the table examples.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GyroSource {
    /// Build G(n) of order 2^n.
    #[arg(long, value_name = "N")]
    pub gn: Option<u32>,
    /// Read a Cayley table (.csv or .json); bare names of bundled tables
    /// such as k1.csv also resolve.
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    #[arg(long, value_name = "N")]
    pub gn: Option<u32>,
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
    /// Read a graph in the JSON edge-list format written by `export`.
    #[arg(long, value_name = "PATH")]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub source: GyroSource,
    /// Where to write the canonical JSON table.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Shortest-path distance matrix and eccentricities.
    #[arg(long)]
    pub distances: bool,
    /// Detour (longest path) distances, radius and diameter.
    #[arg(long)]
    pub detour: bool,
    #[arg(long)]
    pub hosoya: bool,
    #[arg(long)]
    pub rs_hosoya: bool,
    /// Distance degree sequences (shortest and detour).
    #[arg(long)]
    pub dds: bool,
    #[arg(long)]
    pub twins: bool,
    #[arg(long)]
    pub metric_dimension: bool,
    #[arg(long)]
    pub resolving: bool,
    /// Characteristic polynomial and spectral radius.
    #[arg(long)]
    pub spectral: bool,
    #[arg(long)]
    pub planarity: bool,
    #[arg(long)]
    pub hamiltonicity: bool,
    /// Every invariant above.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_DETOUR_BOUND)]
    pub detour_bound: usize,
    /// Maximum number of candidate subsets for resolving-set enumeration.
    #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
    pub budget: u128,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Range of n, e.g. `3..4` (inclusive) or `5`.
    #[arg(long, value_name = "RANGE")]
    pub n: Option<String>,
    /// Include the bundled tables and the isomorphism examples.
    #[arg(long)]
    pub examples: bool,
    /// Also check the axioms of these tables.
    #[arg(long, value_name = "PATH")]
    pub table: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_DETOUR_BOUND)]
    pub detour_bound: usize,
}

/// What a command prints and how it exits.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }
}

/// Usage and precondition errors exit 2, bounds exit 3.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } | Error::BudgetExceeded { .. } | Error::NoConvergence(_) => 3,
        _ => 2,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: exit_code_for(e),
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Build(a) => build(&a),
        Command::Export(a) => export(&a),
        Command::Invariants(a) => invariants(&a),
        Command::VerifyPaper(a) => verify_paper(&a),
    };
    result.unwrap_or_else(|e| failure(&e))
}

/// Reads a table from `path`, then from `$GYROGRAPH_DATA_DIR/path`, then
/// from the bundled copy whose name matches the file stem.
pub fn load_table(path: &Path) -> gyrograph::Result<GyroGroup> {
    if path.exists() {
        return table_io::read_table(path);
    }
    if let Some(dir) = std::env::var_os(DATA_DIR_ENV) {
        let candidate = Path::new(&dir).join(path);
        if candidate.exists() {
            return table_io::read_table(&candidate);
        }
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    match Bundled::from_name(stem) {
        Some(b) if path.parent().is_none_or(|p| p.as_os_str().is_empty()) => {
            match TableFormat::from_path(path) {
                TableFormat::Csv => table_io::parse_table(b.csv(), TableFormat::Csv),
                TableFormat::Json => table_io::parse_table(b.json(), TableFormat::Json),
            }
        }
        _ => table_io::read_table(path),
    }
}

fn gyrogroup(gn: Option<u32>, table: Option<&Path>) -> gyrograph::Result<GyroGroup> {
    match (gn, table) {
        (Some(n), _) => GyroGroup::gn(n),
        (None, Some(p)) => load_table(p),
        (None, None) => Err(Error::Parse("no input given".into())),
    }
}

fn graph(source: &GraphSource) -> gyrograph::Result<Graph> {
    match &source.graph {
        Some(p) => Graph::from_json(&std::fs::read_to_string(p)?),
        None => Ok(power_graph(&gyrogroup(source.gn, source.table.as_deref())?)),
    }
}

fn emit(value: &Value, format: Format, out: Option<&Path>) -> gyrograph::Result<String> {
    let json = serde_json::to_string_pretty(value)? + "\n";
    if let Some(path) = out {
        std::fs::write(path, &json)?;
    }
    Ok(match format {
        Format::Text => text_table(value),
        _ => json,
    })
}

/// Human-readable rendering of a JSON object: one line per key, using the
/// `text` field of nested objects when present.
pub fn text_table(value: &Value) -> String {
    let mut out = String::new();
    let Some(obj) = value.as_object() else {
        return format!("{value}\n");
    };
    let width = obj.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in obj {
        let shown = match v {
            Value::String(s) => s.clone(),
            Value::Object(o) => match o.get("text") {
                Some(Value::String(s)) => s.clone(),
                _ => v.to_string(),
            },
            _ => v.to_string(),
        };
        let _ = writeln!(out, "{k:<width$}  {shown}");
    }
    out
}

fn build(a: &BuildArgs) -> gyrograph::Result<Outcome> {
    let g = gyrogroup(a.source.gn, a.source.table.as_deref())?;
    let table_json = table_io::to_json(&g);
    if let Some(path) = &a.out {
        std::fs::write(path, &table_json)?;
    }
    let report = g.verify_axioms();
    let code = if report.is_gyrogroup() { 0 } else { 1 };
    let value = json!({
        "order": g.order(),
        "identity": g.identity(),
        "table": serde_json::from_str::<Value>(&table_json)?,
        "axioms": report,
    });
    let stdout = match a.format {
        Format::Text => {
            let mut s = format!("order {}  identity {}\n", g.order(), g.identity());
            for (name, ok) in [
                ("left identity", report.left_identity_ok),
                ("left inverse", report.left_inverse_ok),
                ("gyroassociativity", report.gyroassociativity_ok),
                ("left loop", report.left_loop_ok),
                ("gyrations are automorphisms", report.gyr_is_automorphism_ok),
                ("gyrocommutative", report.gyrocommutative),
                ("group", report.is_group),
            ] {
                let _ = writeln!(s, "{name:<28} {ok}");
            }
            for c in &report.counterexamples {
                let _ = writeln!(s, "counterexample {:?}: {:?}", c.axiom, c.witness);
            }
            s
        }
        _ => serde_json::to_string_pretty(&value)? + "\n",
    };
    let stderr = if code == 0 {
        String::new()
    } else {
        let mut s = String::from("axiom failure\n");
        for c in report
            .counterexamples
            .iter()
            .filter(|c| !report.flag(c.axiom))
        {
            let _ = writeln!(s, "counterexample {:?}: {:?}", c.axiom, c.witness);
        }
        s
    };
    Ok(Outcome {
        stdout,
        stderr,
        code,
    })
}

fn export(a: &ExportArgs) -> gyrograph::Result<Outcome> {
    let g = graph(&a.source)?;
    let text = match a.format {
        Format::Dot => g.to_dot("power_graph"),
        _ => g.to_json() + "\n",
    };
    if let Some(path) = &a.out {
        std::fs::write(path, &text)?;
    }
    Ok(Outcome::ok(text))
}

fn invariants(a: &InvariantsArgs) -> gyrograph::Result<Outcome> {
    let g = graph(&a.source)?;
    let sel = |flag: bool| flag || a.all;
    let mut map = Map::new();
    map.insert("order".into(), json!(g.order()));
    map.insert("edge_count".into(), json!(g.edge_count()));
    map.insert(
        "structure".into(),
        serde_json::to_value(classify_gn_shape(&g))?,
    );
    if sel(a.distances) {
        let dm = distance_matrix(&g);
        map.insert(
            "distances".into(),
            json!({ "matrix": dm.rows(), "eccentricity": eccentricity_profile(&dm)? }),
        );
    }
    let detour = if sel(a.detour) || sel(a.dds) {
        Some(detour_matrix_bounded(&g, a.detour_bound)?)
    } else {
        None
    };
    if let (true, Some(d)) = (sel(a.detour), &detour) {
        map.insert(
            "detour".into(),
            json!({ "matrix": d.rows(), "eccentricity": eccentricity_profile(d)? }),
        );
    }
    if sel(a.hosoya) {
        let p = hosoya_polynomial(&g)?;
        map.insert(
            "hosoya".into(),
            json!({ "polynomial": p, "text": p.to_string() }),
        );
    }
    if sel(a.rs_hosoya) {
        let r = reciprocal_status_hosoya(&g)?;
        map.insert(
            "rs_hosoya".into(),
            json!({
                "polynomial": r.polynomial,
                "fractional_terms": r.fractional_terms,
                "text": r.polynomial.to_string(),
            }),
        );
    }
    if sel(a.dds) {
        let shortest = distance_degree_sequence(&distance_matrix(&g))?;
        let detour = distance_degree_sequence(detour.as_ref().expect("computed above"))?;
        map.insert(
            "dds".into(),
            json!({ "shortest": shortest, "detour": detour }),
        );
    }
    if sel(a.twins) {
        map.insert("twins".into(), serde_json::to_value(twin_partition(&g))?);
    }
    if sel(a.metric_dimension) {
        let (psi, basis) = metric_basis(&g, a.budget)?;
        map.insert(
            "metric_dimension".into(),
            json!({ "psi": psi, "basis": basis, "text": psi.to_string() }),
        );
    }
    if sel(a.resolving) {
        let p = resolving_polynomial_with_budget(&g, a.budget)?;
        let text = p.polynomial.to_string();
        let mut v = serde_json::to_value(&p)?;
        v["text"] = json!(text);
        map.insert("resolving".into(), v);
    }
    if sel(a.spectral) {
        let adj = adjacency_matrix(&g);
        let p = char_poly_exact(&adj)?;
        let r = spectral_radius(&adj, a.tol)?;
        map.insert(
            "spectral".into(),
            json!({
                "charpoly": p,
                "charpoly_text": p.to_string(),
                "spectral_radius": r.value,
                "residual": r.residual,
                "iterations": r.iterations,
                "text": format!("lambda_1 = {:.12}; charpoly {}", r.value, p),
            }),
        );
    }
    if sel(a.planarity) {
        let p = is_planar(&g)?;
        let verified = p.verify(&g);
        let mut v = serde_json::to_value(&p)?;
        v["certificate_verified"] = json!(verified);
        v["text"] = json!(format!(
            "planar: {} (certificate verified: {verified})",
            p.planar
        ));
        map.insert("planarity".into(), v);
    }
    if sel(a.hamiltonicity) {
        let h = is_hamiltonian(&g)?;
        let mut v = serde_json::to_value(&h)?;
        v["text"] = json!(format!("hamiltonian: {}", h.hamiltonian));
        map.insert("hamiltonicity".into(), v);
    }
    let stdout = emit(&Value::Object(map), a.format, a.out.as_deref())?;
    Ok(Outcome::ok(stdout))
}

/// Parses `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> gyrograph::Result<Vec<u32>> {
    let bad = || Error::Parse(format!("invalid range {s:?}; expected A..B or N"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse::<u32>().map_err(|_| bad())?,
            b.trim_start_matches('=')
                .trim()
                .parse::<u32>()
                .map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse::<u32>().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    if lo < 3 {
        return Err(Error::OrderParameterTooSmall(lo));
    }
    if hi > gyrograph::gyro::MAX_GN_PARAMETER {
        return Err(Error::BoundExceeded {
            what: "G(n) construction",
            order: hi as usize,
            bound: gyrograph::gyro::MAX_GN_PARAMETER as usize,
        });
    }
    Ok((lo..=hi).collect())
}

fn verify_paper(a: &VerifyArgs) -> gyrograph::Result<Outcome> {
    let ns = match (&a.n, a.examples || !a.table.is_empty()) {
        (Some(r), _) => parse_range(r)?,
        (None, true) => Vec::new(),
        (None, false) => vec![3, 4],
    };
    let tables = a
        .table
        .iter()
        .map(|p| (p.display().to_string(), load_table(p)))
        .collect();
    let req = ReportRequest {
        ns,
        examples: a.examples,
        tables,
    };
    let opts = ReportOptions {
        tol: a.tol,
        detour_bound: a.detour_bound,
    };
    let report = build_report(&req, opts);
    let json = serde_json::to_string_pretty(&report)? + "\n";
    if let Some(path) = &a.out {
        std::fs::write(path, &json)?;
    }
    let stdout = match a.format {
        Format::Text => report.to_text(),
        _ => json,
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: report.exit_code(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_range("4").unwrap(), vec![4]);
        assert_eq!(parse_range("3..=4").unwrap(), vec![3, 4]);
        assert!(matches!(
            parse_range("2..4"),
            Err(Error::OrderParameterTooSmall(2))
        ));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code_for(&Error::OrderParameterTooSmall(2)), 2);
        assert_eq!(
            exit_code_for(&Error::BoundExceeded {
                what: "x",
                order: 1,
                bound: 0
            }),
            3
        );
    }

    #[test]
    fn bundled_names_resolve() {
        let g = load_table(Path::new("k1.csv")).unwrap();
        assert_eq!(g.order(), 8);
        assert!(load_table(Path::new("no/such/k1.csv")).is_err());
    }
}
