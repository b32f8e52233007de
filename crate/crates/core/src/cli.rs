//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for usage and input errors, 3 when a size
//! limit or search budget is exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value as Json};

use crate::audit::{
    audit_spectrum_point, sandwich_report, strassen_axiom_check, AuditReport, SpectrumPoint,
};
use crate::error::Error;
use crate::exact::{
    capacity_lower_bound, clique_cover_number, independence_number, DEFAULT_CLIQUE_COVER_LIMIT,
    DEFAULT_INDEPENDENCE_LIMIT,
};
use crate::frac::{fractional_clique_cover, DEFAULT_MAXIMAL_CLIQUE_LIMIT};
use crate::graph::graph6::{parse_graph6, write_graph6};
use crate::graph::{cohom_leq, parse_name, CohomOutcome, Graph, DEFAULT_HOM_BUDGET};
use crate::haemers::{fractional_haemers, haemers_rank, MAX_HAEMERS_VERTICES};
use crate::theta::{lovasz_theta_with_limit, DEFAULT_THETA_LIMIT, DEFAULT_THETA_TOL};
use crate::value::{round_significant, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "spectrum", version, about = "Graph parameters from the asymptotic spectrum of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Include wall-clock runtimes in the metadata (output is then not reproducible byte for byte).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args, Debug, Clone)]
struct GraphArg {
    /// A short name (K5, K3bar, C7, P4, petersen, optionally prefixed `name:`) or `@file.g6`.
    #[arg(long)]
    graph: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph in graph6.
    Gen {
        /// Graph to emit (same syntax as --graph).
        name: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Exact and spectral bounds for one graph.
    Bounds {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
        tol: f64,
        /// Vertex limit for the exact solvers.
        #[arg(long)]
        max_vertices: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Capacity lower bound from strong powers, with the capacity sandwich.
    Capacity {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 2)]
        power: usize,
        #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
        tol: f64,
        /// Vertex limit for the largest power.
        #[arg(long, default_value_t = 64)]
        max_vertices: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide `lhs <= rhs` in the cohomomorphism preorder.
    Preorder {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
    /// The Lovász theta number.
    Theta {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_THETA_LIMIT)]
        max_vertices: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The Haemers bound over GF(p), and its fractional version up to --dmax.
    Haemers {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 2)]
        field: u8,
        #[arg(long, default_value_t = 1)]
        dmax: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Property-test a spectrum point or the preorder on seeded random graphs.
    Audit {
        #[arg(long, value_enum, default_value_t = PointName::FracCliqueCover)]
        point: PointName,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 2)]
        field: u8,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PointName {
    Theta,
    FracCliqueCover,
    FracHaemers,
    Alpha,
    CliqueCover,
    /// The preorder axioms rather than a point.
    Strassen,
}

/// A finished command: parameters in a fixed order plus metadata.
#[derive(Serialize)]
struct Report {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<Json>,
    parameters: Map<String, Json>,
    metadata: Map<String, Json>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_limit() { EXIT_LIMIT } else { EXIT_USAGE },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Resolves `--graph` syntax.
pub fn load_graph(spec: &str) -> Result<Graph, String> {
    if let Some(path) = spec.strip_prefix('@') {
        let bytes = std::fs::read(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let line = bytes
            .split(|&b| b == b'\n')
            .find(|l| !l.iter().all(u8::is_ascii_whitespace))
            .ok_or_else(|| format!("{path}: no graph found"))?;
        return parse_graph6(line).map_err(|e| format!("{path}: {e}"));
    }
    let name = spec.strip_prefix("name:").unwrap_or(spec);
    parse_name(name).map_err(|e| e.to_string())
}

fn graph_json(spec: &str, g: &Graph) -> Json {
    json!({
        "name": spec,
        "graph6": write_graph6(g).ok(),
        "vertices": g.n(),
        "edges": g.edge_count(),
    })
}

fn real(x: f64) -> Json {
    json!(round_significant(x, 7))
}

fn value(v: &Value) -> Json {
    serde_json::to_value(v).expect("values serialize")
}

fn metadata(extra: &[(&str, Json)]) -> Map<String, Json> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("spectrum"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m
}

/// Runs the CLI on `args` (including the program name). Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let started = Instant::now();
    let (common, result) = dispatch(cli.command);
    match result {
        Ok(mut report) => {
            if common.timings {
                report.metadata.insert(
                    "runtime_ms".into(),
                    real(started.elapsed().as_secs_f64() * 1e3),
                );
            }
            match emit(&report, common.format, out) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write output: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command) -> (Common, Result<Report, Failure>) {
    match command {
        Command::Gen { name, graph, common } => (common, gen(name, graph)),
        Command::Bounds {
            graph,
            tol,
            max_vertices,
            common,
        } => (common, bounds(&graph.graph, tol, max_vertices)),
        Command::Capacity {
            graph,
            power,
            tol,
            max_vertices,
            common,
        } => (common, capacity(&graph.graph, power, tol, max_vertices)),
        Command::Preorder {
            lhs,
            rhs,
            budget,
            common,
        } => (common, preorder(&lhs, &rhs, budget)),
        Command::Theta {
            graph,
            tol,
            max_vertices,
            common,
        } => (common, theta(&graph.graph, tol, max_vertices)),
        Command::Haemers {
            graph,
            field,
            dmax,
            common,
        } => (common, haemers(&graph.graph, field, dmax)),
        Command::Audit {
            point,
            seed,
            trials,
            max_n,
            tol,
            field,
            budget,
            common,
        } => (common, audit(point, seed, trials, max_n, tol, field, budget)),
    }
}

fn load(spec: &str) -> Result<Graph, Failure> {
    load_graph(spec).map_err(usage)
}

fn gen(name: Option<String>, graph: Option<String>) -> Result<Report, Failure> {
    let spec = name.or(graph).ok_or_else(|| usage("gen needs a graph name"))?;
    let g = load(&spec)?;
    let mut parameters = Map::new();
    parameters.insert("graph6".into(), json!(write_graph6(&g)?));
    Ok(Report {
        command: "gen",
        graph: Some(graph_json(&spec, &g)),
        parameters,
        metadata: metadata(&[]),
    })
}

fn bounds(spec: &str, tol: f64, max_vertices: Option<usize>) -> Result<Report, Failure> {
    let g = load(spec)?;
    let alpha_limit = max_vertices.unwrap_or(DEFAULT_INDEPENDENCE_LIMIT);
    let cover_limit = max_vertices.unwrap_or(DEFAULT_CLIQUE_COVER_LIMIT);
    let alpha = independence_number(&g, alpha_limit)?;
    let cover = clique_cover_number(&g, cover_limit)?;
    let theta = lovasz_theta_with_limit(&g, tol, max_vertices.unwrap_or(DEFAULT_THETA_LIMIT))?;
    let frac = fractional_clique_cover(&g, max_vertices.unwrap_or(DEFAULT_MAXIMAL_CLIQUE_LIMIT))?;
    let haemers = if g.n() <= MAX_HAEMERS_VERTICES {
        json!(haemers_rank(&g, 2)?.rank)
    } else {
        Json::Null
    };
    let mut p = Map::new();
    p.insert("alpha".into(), json!(alpha.size));
    p.insert("clique_cover".into(), json!(cover.number));
    p.insert("theta".into(), real(theta.value));
    p.insert("frac_clique_cover".into(), value(&Value::Exact(frac)));
    p.insert("haemers_gf2".into(), haemers);
    Ok(Report {
        command: "bounds",
        graph: Some(graph_json(spec, &g)),
        parameters: p,
        metadata: metadata(&[("tolerance", json!(tol))]),
    })
}

fn capacity(spec: &str, power: usize, tol: f64, max_vertices: usize) -> Result<Report, Failure> {
    let g = load(spec)?;
    let est = capacity_lower_bound(&g, power, max_vertices)?;
    let points = [SpectrumPoint::theta(tol), SpectrumPoint::frac_clique_cover()];
    let sandwich = sandwich_report(&g, power, &points, max_vertices)?;
    let mut p = Map::new();
    p.insert("power".into(), json!(est.power));
    p.insert("alpha_of_power".into(), json!(est.alpha_of_power));
    p.insert("lower_bound".into(), real(est.lower_bound));
    p.insert("witness".into(), json!(est.witness));
    for u in &sandwich.uppers {
        let v = u.value.as_ref().map_or(Json::Null, value);
        p.insert(u.point.clone(), v);
    }
    p.insert("min_upper".into(), sandwich.min_upper.map_or(Json::Null, real));
    p.insert("gap".into(), sandwich.gap.map_or(Json::Null, real));
    p.insert("resolved".into(), json!(sandwich.resolved));
    Ok(Report {
        command: "capacity",
        graph: Some(graph_json(spec, &g)),
        parameters: p,
        metadata: metadata(&[("max_power", json!(power)), ("tolerance", json!(tol))]),
    })
}

fn preorder(lhs: &str, rhs: &str, budget: u64) -> Result<Report, Failure> {
    let (g, h) = (load(lhs)?, load(rhs)?);
    let outcome = cohom_leq(&g, &h, budget);
    if outcome == CohomOutcome::BudgetExceeded {
        return Err(Failure {
            code: EXIT_LIMIT,
            message: format!("UNKNOWN: search budget of {budget} nodes exceeded"),
        });
    }
    let mut p = Map::new();
    p.insert("lhs".into(), json!(lhs));
    p.insert("rhs".into(), json!(rhs));
    p.insert(
        "relation".into(),
        json!(if outcome.is_leq() { "TRUE" } else { "FALSE" }),
    );
    p.insert(
        "certificate".into(),
        outcome.certificate().map_or(Json::Null, |c| json!(c.mapping())),
    );
    Ok(Report {
        command: "preorder",
        graph: None,
        parameters: p,
        metadata: metadata(&[("budget", json!(budget))]),
    })
}

fn theta(spec: &str, tol: f64, max_vertices: usize) -> Result<Report, Failure> {
    let g = load(spec)?;
    let t = lovasz_theta_with_limit(&g, tol, max_vertices)?;
    let mut p = Map::new();
    p.insert("theta".into(), real(t.value));
    p.insert("lower_bound".into(), real(t.lower_bound));
    p.insert("converged".into(), json!(t.converged));
    p.insert("iterations".into(), json!(t.iterations));
    Ok(Report {
        command: "theta",
        graph: Some(graph_json(spec, &g)),
        parameters: p,
        metadata: metadata(&[("tolerance", json!(tol))]),
    })
}

fn haemers(spec: &str, field: u8, dmax: usize) -> Result<Report, Failure> {
    let g = load(spec)?;
    if dmax == 0 {
        return Err(usage("--dmax must be at least 1"));
    }
    let rank = haemers_rank(&g, field)?;
    let frac = fractional_haemers(&g, field, dmax)?;
    let mut p = Map::new();
    p.insert("rank".into(), json!(rank.rank));
    p.insert("witness".into(), json!(rank.witness_rows()));
    p.insert("frac_haemers".into(), value(&frac.value));
    p.insert("best_d".into(), json!(frac.best_d));
    Ok(Report {
        command: "haemers",
        graph: Some(graph_json(spec, &g)),
        parameters: p,
        metadata: metadata(&[("field", json!(field)), ("d_max", json!(dmax))]),
    })
}

fn audit(
    point: PointName,
    seed: u64,
    trials: usize,
    max_n: usize,
    tol: f64,
    field: u8,
    budget: u64,
) -> Result<Report, Failure> {
    let report: AuditReport = match point {
        PointName::Strassen => strassen_axiom_check(seed, trials, max_n, budget)?,
        other => {
            let point = match other {
                PointName::Theta => SpectrumPoint::theta(tol),
                PointName::FracCliqueCover => SpectrumPoint::frac_clique_cover(),
                PointName::FracHaemers => {
                    crate::haemers::FieldPattern::new(&Graph::edgeless(0), field)?;
                    SpectrumPoint::frac_haemers(field)
                }
                PointName::Alpha => SpectrumPoint::independence(),
                PointName::CliqueCover => SpectrumPoint::clique_cover(),
                PointName::Strassen => unreachable!(),
            };
            audit_spectrum_point(&point, seed, trials, max_n)?
        }
    };
    let mut p = match serde_json::to_value(&report).expect("reports serialize") {
        Json::Object(m) => m,
        _ => unreachable!(),
    };
    p.insert("passed".into(), json!(report.passed()));
    Ok(Report {
        command: "audit",
        graph: None,
        parameters: p,
        metadata: metadata(&[("seed", json!(seed)), ("tolerance", json!(tol))]),
    })
}

/// Scalars print as themselves; lists of tuples as `(a,b) (c,d)`.
fn text(v: &Json) -> String {
    match v {
        Json::Null => "-".into(),
        Json::String(s) => s.clone(),
        Json::Array(items) if items.iter().all(|i| i.is_array()) => items
            .iter()
            .map(|i| format!("({})", text(i).replace(' ', ",")))
            .collect::<Vec<_>>()
            .join(" "),
        Json::Array(items) if items.iter().all(|i| !i.is_object()) => {
            items.iter().map(text).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit(report: &Report, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => {
            writeln!(out, "parameter,value")?;
            for (k, v) in &report.parameters {
                writeln!(out, "{},{}", csv_field(k), csv_field(&text(v)))?;
            }
            Ok(())
        }
        Format::Table if report.command == "gen" => {
            writeln!(out, "{}", text(&report.parameters["graph6"]))
        }
        Format::Table => {
            if let Some(g) = &report.graph {
                writeln!(out, "graph: {} ({} vertices, {} edges)", g["name"].as_str().unwrap_or("?"), g["vertices"], g["edges"])?;
            }
            let width = report.parameters.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in &report.parameters {
                writeln!(out, "{k:<width$}  {}", text(v))?;
            }
            Ok(())
        }
    }
}
