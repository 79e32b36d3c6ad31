//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or invalid input, 2 computation
//! infeasible (memory budget, partial search), 3 reference-table mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::bounds::{self, known_value, Quantity, TableId, TableRow};
use crate::error::{Error, Result};
use crate::lattice::{Board, Vertex};
use crate::metrics::{self, MetricCheckReport, MetricKind};
use crate::pieces::{PieceId, PieceRule, Subject};
use crate::search::{self, write_field, Distance, MemoryBudget, PieceGraph, RadiusDiameterReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hyperchess",
    version,
    about = "Distances, radii and diameters of k-dimensional chess piece graphs"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Evaluate every vertex instead of one per symmetry orbit.
    #[arg(long, global = true)]
    pub no_symmetry: bool,
    /// Drop the parity filter from the tilde bishop (and tilde queen).
    #[arg(long, global = true)]
    pub bishop_tilde_literal: bool,
    /// Memory budget in bytes (overrides HYPERCHESS_MEM_BUDGET).
    #[arg(long, global = true)]
    pub memory_budget: Option<u64>,
    /// Report elapsed_ms as null so outputs can be compared byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BoardArgs {
    /// Vertices per axis.
    #[arg(long)]
    pub n: u32,
    /// Dimension.
    #[arg(long)]
    pub k: u32,
}

impl BoardArgs {
    fn board(&self) -> Result<Board> {
        Board::new(self.n, self.k)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shortest move count between two vertices.
    Distance {
        #[arg(long)]
        piece: PieceId,
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
    },
    /// Every vertex within t moves, the start included.
    Reach {
        #[arg(long)]
        piece: PieceId,
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        t: u32,
    },
    /// Greatest distance from a vertex.
    Eccentricity {
        #[arg(long)]
        piece: PieceId,
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long)]
        from: Vertex,
    },
    /// Radius, diameter and witnesses of a piece graph or composite metric.
    RadiusDiameter {
        /// A piece id, bishop-metric or pawn-metric.
        #[arg(long)]
        piece: Subject,
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Whether every vertex reaches every other vertex.
    Connectivity {
        #[arg(long)]
        piece: PieceId,
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Exhaustive check of the metric axioms.
    VerifyMetric {
        /// A piece id, bishop-metric or pawn-metric.
        #[arg(long)]
        metric: Subject,
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Pawn-metric distance (with --from/--to) or radius and diameter.
    PawnMetric {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, requires = "to")]
        from: Option<Vertex>,
        #[arg(long, requires = "from")]
        to: Option<Vertex>,
    },
    /// Moves for a promoting pawn; worst case over targets without --to.
    PawnTrip {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, default_value = "pawn-bar")]
        pawn: PieceId,
        #[arg(long, default_value = "queen-tilde")]
        queen: PieceId,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Option<Vertex>,
    },
    /// Closed forms, lower bounds and reference values for one board size.
    Bounds {
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Compare a reference table with fresh oracle runs.
    Table {
        #[arg(long)]
        id: TableId,
        #[arg(long)]
        n_max: u32,
    },
    /// Least n whose queen diameter equals k.
    Nstar {
        #[arg(long)]
        piece: PieceId,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// Write a single-source distance field as a binary dump.
    DumpField {
        #[arg(long)]
        piece: PieceId,
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        output: PathBuf,
    },
}

/// The fixed-schema radius/diameter record used by every output format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub piece: String,
    pub n: u32,
    pub k: u32,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    pub center_witness: Vec<u32>,
    pub peripheral_pair: (Vec<u32>, Vec<u32>),
    pub sources_examined: u64,
    pub elapsed_ms: Option<f64>,
}

impl ReportRecord {
    pub fn new(report: &RadiusDiameterReport, elapsed_ms: Option<f64>) -> Self {
        ReportRecord {
            piece: report.piece.to_string(),
            n: report.n,
            k: report.k,
            radius: report.radius.finite(),
            diameter: report.diameter.finite(),
            center_witness: report.center_witness.0.clone(),
            peripheral_pair: (report.peripheral_pair.0 .0.clone(), report.peripheral_pair.1 .0.clone()),
            sources_examined: report.sources_examined,
            elapsed_ms,
        }
    }
}

pub const REPORT_FIELDS: [&str; 9] = [
    "piece",
    "n",
    "k",
    "radius",
    "diameter",
    "center_witness",
    "peripheral_pair",
    "sources_examined",
    "elapsed_ms",
];

/// One output row: field names in order with JSON values.
type Row = Vec<(&'static str, Value)>;

fn vertex_value(v: &Vertex) -> Value {
    json!(v.0)
}

fn distance_value(d: Distance) -> Value {
    json!(d.finite())
}

fn is_vertex(items: &[Value]) -> bool {
    items.iter().all(Value::is_u64)
}

/// CSV cell: vertices as `1,0,0`, members of a pair or triple joined with
/// `;`, lists of such tuples with `|`.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if is_vertex(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        Value::Array(items) if items.iter().all(|x| matches!(x, Value::Array(t) if !is_vertex(t))) => {
            items.iter().map(cell).collect::<Vec<_>>().join("|")
        }
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

const DISTANCE_KEYS: [&str; 7] = ["radius", "diameter", "distance", "eccentricity", "computed", "moves", "worst_case"];

/// Text cell: vertices as `(1,0,0)`, null distances as `unreachable`.
fn text_cell(key: &str, v: &Value) -> String {
    match v {
        Value::Null if DISTANCE_KEYS.contains(&key) => "unreachable".into(),
        Value::Null => "-".into(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) if is_vertex(items) => format!("({})", cell(v)),
        // A list of tuples: members joined by `->`, tuples by `, `.
        Value::Array(items) if items.iter().all(|x| matches!(x, Value::Array(t) if !is_vertex(t))) => items
            .iter()
            .map(|t| match t {
                Value::Array(m) => m.iter().map(|x| text_cell(key, x)).collect::<Vec<_>>().join("->"),
                _ => unreachable!(),
            })
            .collect::<Vec<_>>()
            .join(", "),
        Value::Array(items) => items.iter().map(|x| text_cell(key, x)).collect::<Vec<_>>().join(" "),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit_rows(headers: &[&'static str], rows: &[Row], format: Format, single: bool) -> Result<String> {
    match format {
        Format::Json => {
            let objs: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(r.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<Map<_, _>>()))
                .collect();
            let value = if single && objs.len() == 1 {
                objs.into_iter().next().unwrap()
            } else {
                Value::Array(objs)
            };
            Ok(serde_json::to_string_pretty(&value).map_err(|e| Error::Io(e.to_string()))? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(headers).map_err(io)?;
            for r in rows {
                w.write_record(r.iter().map(|(_, v)| cell(v))).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
        Format::Text => {
            let mut out = String::new();
            if single && rows.len() == 1 {
                for (key, v) in &rows[0] {
                    if *key == "elapsed_ms" && v.is_null() {
                        continue;
                    }
                    out.push_str(&format!("{key}: {}\n", text_cell(key, v)));
                }
            } else {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| r.iter().map(|(k, v)| text_cell(k, v)).collect())
                    .collect();
                let widths: Vec<usize> = headers
                    .iter()
                    .enumerate()
                    .map(|(i, h)| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap_or(0))
                    .collect();
                let line = |items: Vec<&str>| {
                    let parts: Vec<String> = items
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:<w$}"))
                        .collect();
                    parts.join("  ").trim_end().to_string() + "\n"
                };
                out.push_str(&line(headers.to_vec()));
                for c in &cells {
                    out.push_str(&line(c.iter().map(String::as_str).collect()));
                }
            }
            Ok(out)
        }
    }
}

fn report_row(record: &ReportRecord) -> Row {
    let value = serde_json::to_value(record).expect("report records serialize");
    let Value::Object(map) = value else { unreachable!() };
    REPORT_FIELDS.iter().map(|&f| (f, map[f].clone())).collect()
}

pub fn emit_report(report: &RadiusDiameterReport, format: Format, elapsed_ms: Option<f64>) -> Result<String> {
    let record = ReportRecord::new(report, elapsed_ms);
    emit_rows(&REPORT_FIELDS, &[report_row(&record)], format, true)
}

pub const TABLE_FIELDS: [&str; 10] = [
    "table",
    "piece",
    "n",
    "k",
    "quantity",
    "expected",
    "relation",
    "computed",
    "provenance",
    "status",
];

fn table_row(r: &TableRow) -> Row {
    vec![
        ("table", json!(r.table.as_str())),
        ("piece", json!(r.piece.as_str())),
        ("n", json!(r.n)),
        ("k", json!(r.k)),
        ("quantity", json!(r.quantity.to_string())),
        ("expected", json!(r.expected)),
        ("relation", json!(r.relation)),
        ("computed", distance_value(r.computed)),
        ("provenance", json!(r.provenance)),
        ("status", json!(if r.pass { "PASS" } else { "FAIL" })),
    ]
}

pub fn emit_table(rows: &[TableRow], format: Format) -> Result<String> {
    let rows: Vec<Row> = rows.iter().map(table_row).collect();
    emit_rows(&TABLE_FIELDS, &rows, format, false)
}

fn metric_rows(r: &MetricCheckReport) -> Row {
    let pairs = |list: &[(Vertex, Vertex)]| json!(list.iter().map(|(a, b)| json!([a.0, b.0])).collect::<Vec<_>>());
    vec![
        ("metric", json!(r.metric.as_str())),
        ("n", json!(r.n)),
        ("k", json!(r.k)),
        ("verdict", json!(r.verdict)),
        ("axiom1_count", json!(r.axiom1_count)),
        ("symmetry_count", json!(r.symmetry_count)),
        ("triangle_count", json!(r.triangle_count)),
        ("unreachable_count", json!(r.unreachable_count)),
        ("isolated_count", json!(r.isolated_count)),
        ("axiom1_violations", pairs(&r.axiom1_violations)),
        ("symmetry_violations", pairs(&r.symmetry_violations)),
        (
            "triangle_violations",
            json!(r
                .triangle_violations
                .iter()
                .map(|(a, b, c)| json!([a.0, b.0, c.0]))
                .collect::<Vec<_>>()),
        ),
        ("unreachable_pairs", pairs(&r.unreachable_pairs)),
        ("isolated_vertices", json!(r.isolated_vertices.iter().map(vertex_value).collect::<Vec<_>>())),
    ]
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ComputationInfeasible(_) | Error::PartialResult { .. } => EXIT_INFEASIBLE,
        _ => EXIT_USAGE,
    }
}

struct Ctx {
    format: Format,
    use_symmetry: bool,
    literal: bool,
    timing: bool,
}

impl Ctx {
    fn rule(&self, id: PieceId) -> PieceRule {
        PieceRule {
            id,
            bishop_tilde_literal: self.literal,
        }
    }

    fn single(&self, row: Row) -> Result<String> {
        let headers: Vec<&'static str> = row.iter().map(|(k, _)| *k).collect();
        emit_rows(&headers, &[row], self.format, true)
    }
}

fn execute(cfg: &RunConfig) -> Result<(String, i32)> {
    let ctx = Ctx {
        format: cfg.format,
        use_symmetry: !cfg.no_symmetry,
        literal: cfg.bishop_tilde_literal,
        timing: !cfg.no_timing,
    };
    let ok = |s: String| Ok((s, EXIT_OK));
    match &cfg.command {
        Command::Distance { piece, board, from, to } => {
            let b = board.board()?;
            b.check_vertex(from)?;
            b.check_vertex(to)?;
            let d = search::distance(ctx.rule(*piece), &b, from, to)?;
            ok(ctx.single(vec![
                ("piece", json!(piece.as_str())),
                ("n", json!(b.n())),
                ("k", json!(b.k())),
                ("from", vertex_value(from)),
                ("to", vertex_value(to)),
                ("distance", distance_value(d)),
            ])?)
        }
        Command::Reach { piece, board, from, t } => {
            let b = board.board()?;
            let set = search::reach_set(ctx.rule(*piece), &b, from, *t)?;
            ok(ctx.single(vec![
                ("piece", json!(piece.as_str())),
                ("n", json!(b.n())),
                ("k", json!(b.k())),
                ("from", vertex_value(from)),
                ("t", json!(t)),
                ("count", json!(set.len())),
                ("vertices", json!(set.iter().map(vertex_value).collect::<Vec<_>>())),
            ])?)
        }
        Command::Eccentricity { piece, board, from } => {
            let b = board.board()?;
            let e = search::eccentricity(ctx.rule(*piece), &b, from)?;
            ok(ctx.single(vec![
                ("piece", json!(piece.as_str())),
                ("n", json!(b.n())),
                ("k", json!(b.k())),
                ("from", vertex_value(from)),
                ("eccentricity", distance_value(e)),
            ])?)
        }
        Command::RadiusDiameter { piece, board } => {
            let b = board.board()?;
            let start = Instant::now();
            let report = match piece {
                Subject::Piece(id) => {
                    PieceGraph::new(ctx.rule(*id), b)?.radius_diameter(ctx.use_symmetry)?
                }
                Subject::BishopMetric => metrics::bishop_metric_radius_diameter(&b, ctx.literal)?,
                Subject::PawnMetric => metrics::pawn_metric_radius_diameter(&b)?,
            };
            let elapsed = ctx.timing.then(|| round_ms(start));
            ok(emit_report(&report, ctx.format, elapsed)?)
        }
        Command::Connectivity { piece, board } => {
            let b = board.board()?;
            let c = search::connectivity(ctx.rule(*piece), &b)?;
            ok(ctx.single(vec![
                ("piece", json!(piece.as_str())),
                ("n", json!(b.n())),
                ("k", json!(b.k())),
                ("connected", json!(c.connected)),
                ("source", vertex_value(&c.source)),
                ("unreachable_count", json!(c.unreachable_count)),
            ])?)
        }
        Command::VerifyMetric { metric, board } => {
            let b = board.board()?;
            let kind = match metric {
                Subject::Piece(id) => MetricKind::Piece(ctx.rule(*id)),
                Subject::BishopMetric => MetricKind::BishopMetric { literal: ctx.literal },
                Subject::PawnMetric => MetricKind::PawnMetric,
            };
            let report = metrics::verify_metric(kind, &b)?;
            ok(ctx.single(metric_rows(&report))?)
        }
        Command::PawnMetric { board, from, to } => {
            let b = board.board()?;
            match (from, to) {
                (Some(a), Some(z)) => {
                    let d = metrics::pawn_metric_distance(&b, a, z)?;
                    ok(ctx.single(vec![
                        ("n", json!(b.n())),
                        ("k", json!(b.k())),
                        ("from", vertex_value(a)),
                        ("to", vertex_value(z)),
                        ("distance", distance_value(d)),
                    ])?)
                }
                _ => {
                    let start = Instant::now();
                    let report = metrics::pawn_metric_radius_diameter(&b)?;
                    let elapsed = ctx.timing.then(|| round_ms(start));
                    ok(emit_report(&report, ctx.format, elapsed)?)
                }
            }
        }
        Command::PawnTrip { board, pawn, queen, from, to } => {
            let b = board.board()?;
            let trip = metrics::PawnTrip::new(&b, *pawn, *queen)?;
            let field = trip.field(from)?;
            let mut row: Row = vec![
                ("n", json!(b.n())),
                ("k", json!(b.k())),
                ("pawn", json!(pawn.as_str())),
                ("queen", json!(queen.as_str())),
                ("from", vertex_value(from)),
            ];
            match to {
                Some(z) => {
                    row.push(("to", vertex_value(z)));
                    row.push(("moves", distance_value(field.get(z)?)));
                }
                None => {
                    let worst = field.max();
                    let target = (0..field.len())
                        .filter(|&i| field.at(i) == worst)
                        .map(|i| crate::lattice::index_vertex(&b, i))
                        .min()
                        .unwrap_or_else(|| from.clone());
                    row.push(("worst_case", distance_value(worst)));
                    row.push(("worst_target", vertex_value(&target)));
                }
            }
            ok(ctx.single(row)?)
        }
        Command::Bounds { board } => {
            let b = board.board()?;
            ok(emit_rows(&BOUND_FIELDS, &bound_rows(&b), ctx.format, false)?)
        }
        Command::Table { id, n_max } => {
            let rows = bounds::table(*id, *n_max, ctx.literal)?;
            let code = if rows.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_MISMATCH };
            Ok((emit_table(&rows, ctx.format)?, code))
        }
        Command::Nstar { piece, k, n_max } => {
            let found = bounds::queen_nstar_search_with(ctx.rule(*piece), *k, *n_max, MemoryBudget::default())?;
            ok(ctx.single(vec![
                ("piece", json!(piece.as_str())),
                ("k", json!(k)),
                ("n_max", json!(n_max)),
                ("n_star", json!(found)),
            ])?)
        }
        Command::DumpField { piece, board, from, output } => {
            let b = board.board()?;
            let field = search::bfs_distances(ctx.rule(*piece), &b, from)?;
            let mut buf = Vec::with_capacity(field.len() + 19);
            write_field(&field, &mut buf)?;
            std::fs::write(output, &buf)?;
            ok(ctx.single(vec![
                ("piece", json!(piece.as_str())),
                ("n", json!(b.n())),
                ("k", json!(b.k())),
                ("from", vertex_value(from)),
                ("output", json!(output.display().to_string())),
                ("bytes", json!(buf.len())),
            ])?)
        }
    }
}

const BOUND_FIELDS: [&str; 6] = ["name", "piece", "quantity", "value", "provenance", "conflict"];

fn bound_rows(b: &Board) -> Vec<Row> {
    let (n, k) = (b.n(), b.k());
    let mut rows = Vec::new();
    let knight = Subject::Piece(PieceId::Knight).as_str();
    let formula = |name, q: Quantity, v: Result<u32>, tag| -> Option<Row> {
        v.ok().map(|v| {
            vec![
                ("name", json!(name)),
                ("piece", json!(knight)),
                ("quantity", json!(q.to_string())),
                ("value", json!(v)),
                ("provenance", json!(tag)),
                ("conflict", Value::Null),
            ]
        })
    };
    if k == 2 {
        rows.extend(formula("barker-recurrence", Quantity::Diameter, bounds::barker_knight_diameter(n), "eq7"));
    }
    rows.extend(formula("diameter-lower", Quantity::Diameter, bounds::knight_diameter_lower(n, k), "knight-diameter-lower"));
    rows.extend(formula(
        "diameter-lower-weak",
        Quantity::Diameter,
        bounds::knight_diameter_lower_weak(n, k),
        "knight-diameter-lower-weak",
    ));
    rows.extend(formula("radius-lower", Quantity::Radius, bounds::knight_radius_lower(n, k), "knight-radius-lower"));
    let subjects = PieceId::ALL
        .into_iter()
        .map(Subject::Piece)
        .chain([Subject::BishopMetric, Subject::PawnMetric]);
    for s in subjects {
        for q in [Quantity::Radius, Quantity::Diameter] {
            if let Some(kv) = known_value(s, n, k, q) {
                rows.push(vec![
                    ("name", json!("known-value")),
                    ("piece", json!(s.as_str())),
                    ("quantity", json!(q.to_string())),
                    ("value", json!(kv.value)),
                    ("provenance", json!(kv.provenance)),
                    ("conflict", json!(kv.conflict.map(|c| format!("{} ({})", c.value, c.provenance)))),
                ]);
            }
        }
    }
    rows
}

fn round_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let budget = match MemoryBudget::resolve(cfg.memory_budget) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    MemoryBudget::set_process_default(budget);
    let result = match cfg.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(|| execute(&cfg)),
            Err(e) => Err(Error::Io(format!("cannot start {t} worker threads: {e}"))),
        },
        None => execute(&cfg),
    };
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if code == EXIT_MISMATCH {
                let _ = writeln!(err, "error: reference table disagrees with the oracle");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
