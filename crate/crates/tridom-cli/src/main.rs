//! Command-line front end: construct, verify, search, classify, table, and
//! render commands over the tridom library.
//!
//! Reports go to stdout (or --out) as a JSON envelope
//! `{version, command, input, result}`; identical flags produce identical
//! bytes. Exit codes: 0 success, 1 domain error, 2 budget exhausted,
//! 64 usage error.

mod args;
mod document;
mod family;
mod render;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::Parser as _;
use serde::Serialize;
use serde_json::json;

use args::{Cli, ClassifyArgs, Command, ConstructArgs, Format, RenderArgs, SearchArgs, TableArgs};
use document::{PatternDocument, RealizeError};
use render::RenderStyle;

use tridom::analysis::{
    classify_k2, gamma_graph, mixed_triples, sandwich_bisequence, triple_period, type_table,
    K2FamilyVerdict, TriplePeriod, TypeTable,
};
use tridom::constructions::{construct, PatternSpec};
use tridom::domination::{classify, DominationReport, Shape, VertexSet};
use tridom::lattice::{build_torus, Coord, TorusSpec};
use tridom::search::{
    enumerate, existence_table, Budget, ImposedSymmetry, Predicate, SearchProblem, SearchResult,
    Verdict,
};

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;

enum AppError {
    /// Bad flags or flag combinations.
    Usage(String),
    /// Unreadable or inconsistent input files.
    Data(String),
    /// The library rejected the request.
    Lib(tridom::Error),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Usage(_) => EXIT_USAGE,
            AppError::Lib(tridom::Error::BudgetExceeded) => EXIT_BUDGET,
            _ => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> String {
        match self {
            AppError::Usage(m) | AppError::Data(m) => m.clone(),
            AppError::Lib(e) => e.to_string(),
        }
    }
}

impl From<tridom::Error> for AppError {
    fn from(e: tridom::Error) -> Self {
        AppError::Lib(e)
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8, AppError> {
    match &cli.command {
        Command::Construct(a) => cmd_construct(cli, a),
        Command::Verify => cmd_verify(cli),
        Command::Search(a) => cmd_search(cli, a),
        Command::Classify(a) => cmd_classify(cli, a),
        Command::Table(a) => cmd_table(cli, a),
        Command::Render(a) => cmd_render(cli, a),
    }
}

// ---- shared plumbing ----

#[derive(Serialize)]
struct Envelope {
    version: &'static str,
    command: &'static str,
    input: serde_json::Value,
    result: serde_json::Value,
}

fn envelope_json(
    command: &'static str,
    input: serde_json::Value,
    result: serde_json::Value,
) -> String {
    let env = Envelope {
        version: env!("CARGO_PKG_VERSION"),
        command,
        input,
        result,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("report is serializable");
    s.push('\n');
    s
}

fn emit(cli: &Cli, payload: &str) -> Result<(), AppError> {
    match &cli.out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| AppError::Data(format!("{}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn torus_spec(cli: &Cli) -> Result<TorusSpec, AppError> {
    let (m, n) = cli
        .torus
        .ok_or_else(|| AppError::Usage("--torus M,N is required for this command".to_string()))?;
    TorusSpec::new(m, n).map_err(AppError::Lib)
}

fn budget_from(cli: &Cli) -> Budget {
    cli.budget
        .map(|(max_nodes, max_seconds)| Budget { max_nodes, max_seconds })
        .unwrap_or_default()
}

fn load_pattern(cli: &Cli, spec: TorusSpec) -> Result<(VertexSet, String), AppError> {
    let path = cli
        .seedfile
        .as_ref()
        .ok_or_else(|| AppError::Usage("--seedfile is required for this command".to_string()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::Data(format!("{}: {e}", path.display())))?;
    let doc = PatternDocument::parse(&text)
        .map_err(|e| AppError::Data(format!("{}: {e}", path.display())))?;
    let set = doc.realize(spec).map_err(|e| match e {
        RealizeError::Document(msg) => AppError::Data(format!("{}: {msg}", path.display())),
        RealizeError::Construction(err) => AppError::Lib(err),
    })?;
    Ok((set, path.display().to_string()))
}

fn parse_predicate(s: &str) -> Result<Predicate, String> {
    match s {
        "pds" => Ok(Predicate::Pds),
        "perfect-code" => Ok(Predicate::PerfectCode),
        "spds" => Ok(Predicate::Spds),
        "qpds" => Ok(Predicate::Qpds),
        _ => {
            if let Some(mid) = s.strip_prefix('k').and_then(|r| r.strip_suffix("-qpds")) {
                if let Ok(nu) = mid.parse::<u8>() {
                    if (1..=3).contains(&nu) {
                        return Ok(Predicate::KQpds(nu));
                    }
                }
            }
            Err(format!(
                "unknown predicate `{s}`; expected pds, perfect-code, spds, qpds, or k<nu>-qpds with nu in 1..=3"
            ))
        }
    }
}

// ---- commands ----

fn cmd_construct(cli: &Cli, a: &ConstructArgs) -> Result<u8, AppError> {
    let spec = torus_spec(cli)?;
    let mut params: Vec<(String, String)> = Vec::new();
    if a.mirror {
        params.push(("mirror".to_string(), "true".to_string()));
    }
    if let Some(v) = &a.axis {
        params.push(("axis".to_string(), v.clone()));
    }
    if let Some(v) = a.hex_type {
        params.push(("hex-type".to_string(), v.to_string()));
    }
    if let Some(v) = a.t {
        params.push(("t".to_string(), v.to_string()));
    }
    if let Some((i, j)) = a.types {
        params.push(("types".to_string(), format!("{i},{j}")));
    }
    if let Some(v) = &a.xi {
        params.push(("xi".to_string(), v.clone()));
    }
    if let Some(v) = &a.eta {
        params.push(("eta".to_string(), v.clone()));
    }
    let fam = family::build_family(&a.family, &params).map_err(AppError::Usage)?;
    let (ox, oy) = a.offset.unwrap_or((0, 0));
    let pattern = PatternSpec { family: fam, offset: Coord::new(ox, oy) };
    let set = construct(&pattern, spec)?;
    let g = build_torus(spec)?;
    let report = classify(&g, &set);
    let payload = match cli.format {
        Format::Json => envelope_json(
            "construct",
            json!({
                "torus": [spec.m, spec.n],
                "family": a.family,
                "params": params,
                "offset": [ox, oy],
            }),
            json!({
                "set": &set,
                "report": &report,
                "document": PatternDocument::from_pattern(&pattern).serialize(),
            }),
        ),
        Format::Text => text_summary(&set, &report),
        Format::Svg => render::render_svg(&g, &set, RenderStyle::default()),
    };
    emit(cli, &payload)?;
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli) -> Result<u8, AppError> {
    let spec = torus_spec(cli)?;
    let g = build_torus(spec)?;
    let (set, seedfile) = load_pattern(cli, spec)?;
    let report = classify(&g, &set);
    let payload = match cli.format {
        Format::Json => envelope_json(
            "verify",
            json!({ "torus": [spec.m, spec.n], "seedfile": seedfile }),
            json!({ "set": &set, "report": &report }),
        ),
        Format::Text => text_summary(&set, &report),
        Format::Svg => render::render_svg(&g, &set, RenderStyle::default()),
    };
    emit(cli, &payload)?;
    Ok(EXIT_OK)
}

fn cmd_search(cli: &Cli, a: &SearchArgs) -> Result<u8, AppError> {
    let spec = torus_spec(cli)?;
    let predicate = parse_predicate(&a.predicate).map_err(AppError::Usage)?;
    let g = build_torus(spec)?;
    let mut problem = SearchProblem::new(spec, predicate);
    problem.budget = budget_from(cli);
    problem.limit = a.limit;
    problem.canonicalize = a.canonicalize;
    problem.shape_filter = a.shape_filter.into();
    if let Some((u1, u2, v1, v2)) = a.impose {
        problem.imposed_symmetry = Some(ImposedSymmetry {
            u: Coord::new(u1, u2),
            v: Coord::new(v1, v2),
        });
    }
    let result = enumerate(&g, &problem)?;
    let exit = if result.budget_hit { EXIT_BUDGET } else { EXIT_OK };
    let payload = match cli.format {
        Format::Json => envelope_json(
            "search",
            json!({
                "torus": [spec.m, spec.n],
                "predicate": predicate.name(),
                "limit": a.limit,
                "canonicalize": a.canonicalize,
                "shape_filter": a.shape_filter.as_str(),
                "impose": a.impose.map(|(u1, u2, v1, v2)| [[u1, u2], [v1, v2]]),
                "budget": &problem.budget,
            }),
            json!(&result),
        ),
        Format::Text => search_text(&result),
        Format::Svg => {
            return Err(AppError::Usage(
                "--format svg does not apply to search; render a solution instead".to_string(),
            ))
        }
    };
    emit(cli, &payload)?;
    Ok(exit)
}

fn cmd_classify(cli: &Cli, a: &ClassifyArgs) -> Result<u8, AppError> {
    let spec = torus_spec(cli)?;
    let g = build_torus(spec)?;
    let (set, seedfile) = load_pattern(cli, spec)?;
    let verdict = classify_k2(&g, &set)?;
    let link = gamma_graph(&g, &set)?;
    let triples = mixed_triples(&link);
    let table = type_table(&g, &set)?;
    // An explicit anchor override must fail loudly; the default probe is
    // allowed to come back empty (single-type and sandwiched patterns).
    let period = match a.low_type {
        Some(_) => Some(triple_period(&g, &set, a.low_type)?),
        None => triple_period(&g, &set, None).ok(),
    };
    let biseq = sandwich_bisequence(&g, &set).ok();
    let payload = match cli.format {
        Format::Json => envelope_json(
            "classify",
            json!({ "torus": [spec.m, spec.n], "seedfile": seedfile, "low_type": a.low_type }),
            json!({
                "verdict": &verdict,
                "link_graph": &link,
                "mixed_triples": &triples,
                "type_table": {
                    "cells": &table.cells,
                    "contiguity": &table.contiguity,
                    "rendered": table.render(),
                },
                "triple_period": &period,
                "bisequence": &biseq,
            }),
        ),
        Format::Text => classify_text(&verdict, triples.len(), &period, &biseq, &table),
        Format::Svg => {
            return Err(AppError::Usage(
                "--format svg does not apply to classify; use render".to_string(),
            ))
        }
    };
    emit(cli, &payload)?;
    Ok(EXIT_OK)
}

fn cmd_table(cli: &Cli, a: &TableArgs) -> Result<u8, AppError> {
    let predicate = parse_predicate(&a.predicate).map_err(AppError::Usage)?;
    let budget = budget_from(cli);
    let table = existence_table(predicate, &a.m.0, &a.n.0, budget, a.shape_filter.into())?;
    let unknown = table
        .cells
        .iter()
        .flatten()
        .any(|c| matches!(c, Verdict::Unknown));
    let payload = match cli.format {
        Format::Json => envelope_json(
            "table",
            json!({
                "predicate": predicate.name(),
                "m": &a.m.0,
                "n": &a.n.0,
                "shape_filter": a.shape_filter.as_str(),
                "budget": &budget,
            }),
            json!({ "table": &table, "rendered": table.render() }),
        ),
        Format::Text => table.render(),
        Format::Svg => {
            return Err(AppError::Usage("--format svg does not apply to table".to_string()))
        }
    };
    emit(cli, &payload)?;
    Ok(if unknown { EXIT_BUDGET } else { EXIT_OK })
}

fn cmd_render(cli: &Cli, a: &RenderArgs) -> Result<u8, AppError> {
    let spec = torus_spec(cli)?;
    let g = build_torus(spec)?;
    let (set, seedfile) = match &cli.seedfile {
        Some(_) => {
            let (set, path) = load_pattern(cli, spec)?;
            (set, Some(path))
        }
        None => (VertexSet::empty(spec), None),
    };
    let style = RenderStyle { labels: a.labels, overlay: a.overlay };
    let svg = render::render_svg(&g, &set, style);
    let payload = match cli.format {
        Format::Svg => svg,
        Format::Json => envelope_json(
            "render",
            json!({
                "torus": [spec.m, spec.n],
                "seedfile": seedfile,
                "labels": a.labels,
                "overlay": a.overlay,
            }),
            json!({ "svg": svg }),
        ),
        Format::Text => {
            return Err(AppError::Usage(
                "render emits SVG; use --format svg or --format json".to_string(),
            ))
        }
    };
    emit(cli, &payload)?;
    Ok(EXIT_OK)
}

// ---- text renderings ----

fn shape_name(shape: Shape) -> String {
    match shape {
        Shape::K1 => "K1".to_string(),
        Shape::K2 => "K2".to_string(),
        Shape::K3 => "K3".to_string(),
        Shape::Path(n) => format!("P{n}"),
        Shape::Cycle(n) => format!("C{n}"),
        Shape::Other => "other".to_string(),
    }
}

fn flags_line(report: &DominationReport) -> String {
    let mut flags: Vec<String> = Vec::new();
    if report.is_pds {
        flags.push("pds".to_string());
    }
    if report.is_proper {
        flags.push("proper".to_string());
    }
    if report.is_perfect_code {
        flags.push("perfect-code".to_string());
    }
    if report.is_spds {
        flags.push("spds".to_string());
    }
    if report.is_qpds {
        flags.push("qpds".to_string());
    }
    if let Some(nu) = report.h_qpds_nu {
        flags.push(format!("k{nu}-qpds"));
    }
    if flags.is_empty() {
        "none".to_string()
    } else {
        flags.join(" ")
    }
}

fn text_summary(set: &VertexSet, report: &DominationReport) -> String {
    let spec = set.spec();
    let mut out = String::new();
    let coords: Vec<String> = set
        .coords()
        .iter()
        .map(|c| format!("({},{})", c.x1, c.x2))
        .collect();
    let _ = writeln!(out, "torus {}x{}", spec.m, spec.n);
    let _ = writeln!(out, "vertices {}: {}", set.len(), coords.join(" "));
    let mut shapes: BTreeMap<String, usize> = BTreeMap::new();
    for c in &report.components {
        *shapes.entry(shape_name(c.shape)).or_insert(0) += 1;
    }
    let shape_list = shapes
        .iter()
        .map(|(k, v)| format!("{v} {k}"))
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(
        out,
        "components {}: {}",
        report.components.len(),
        if shape_list.is_empty() { "-".to_string() } else { shape_list }
    );
    let _ = match report.delta {
        Some(d) => writeln!(out, "delta {d}"),
        None => writeln!(out, "delta -"),
    };
    let _ = writeln!(out, "flags: {}", flags_line(report));
    out
}

fn search_text(result: &SearchResult) -> String {
    let status = if result.budget_hit {
        "budget hit"
    } else if result.exhausted {
        "exhausted"
    } else {
        "stopped at limit"
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "solutions {} of {} ({status}); nodes expanded {}",
        result.solutions.len(),
        result.total_count,
        result.nodes_expanded
    );
    for s in &result.solutions {
        let coords: Vec<String> = s
            .coords()
            .iter()
            .map(|c| format!("({},{})", c.x1, c.x2))
            .collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    out
}

fn verdict_line(v: &K2FamilyVerdict) -> String {
    match v {
        K2FamilyVerdict::Parallel { hex_type } => format!("parallel hex-type={hex_type}"),
        K2FamilyVerdict::TLinear { t, types: (i, j) } => format!("t-linear t={t} types={i},{j}"),
        K2FamilyVerdict::Sandwiched { xi } => {
            format!("sandwiched xi={}", family::word_to_string(xi))
        }
        K2FamilyVerdict::Diagonal { axis, eta } => {
            format!("diagonal axis={axis} eta={}", family::word_to_string(eta))
        }
        K2FamilyVerdict::Mixed => "mixed".to_string(),
    }
}

fn classify_text(
    verdict: &K2FamilyVerdict,
    mixed_count: usize,
    period: &Option<TriplePeriod>,
    biseq: &Option<Vec<u8>>,
    table: &TypeTable,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", verdict_line(verdict));
    let _ = writeln!(out, "mixed triples: {mixed_count}");
    let _ = match period {
        Some(p) => writeln!(out, "triple period: diag={} vert={} anti={}", p.diag, p.vert, p.anti),
        None => writeln!(out, "triple period: -"),
    };
    let _ = match biseq {
        Some(b) => writeln!(out, "bisequence: {}", family::word_to_string(b)),
        None => writeln!(out, "bisequence: -"),
    };
    out.push('\n');
    out.push_str(&table.render());
    out
}
