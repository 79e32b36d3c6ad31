//! Python bindings: pieces and metrics are named by their CLI strings,
//! vertices are tuples, unreachable distances are `None`.

use hyperchess::metrics::{self, MetricKind};
use hyperchess::search::{self, Distance};
use hyperchess::{Board, PieceId, PieceRule, Subject, Vertex};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: hyperchess::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn board(n: u32, k: u32) -> PyResult<Board> {
    Board::new(n, k).map_err(err)
}

fn rule(piece: &str, literal: bool) -> PyResult<PieceRule> {
    let id: PieceId = piece.parse().map_err(err)?;
    Ok(if literal { PieceRule::literal(id) } else { PieceRule::new(id) })
}

fn dist(d: Distance) -> Option<u32> {
    d.finite()
}

fn tuple(v: &Vertex) -> Vec<u32> {
    v.coords().to_vec()
}

#[pyfunction]
#[pyo3(signature = (piece, n, k, a, b, literal = false))]
fn distance(piece: &str, n: u32, k: u32, a: Vec<u32>, b: Vec<u32>, literal: bool) -> PyResult<Option<u32>> {
    let board = board(n, k)?;
    let (a, b) = (Vertex::new(a), Vertex::new(b));
    let d = match piece.parse::<Subject>().map_err(err)? {
        Subject::BishopMetric => metrics::bishop_metric_distance(&board, &a, &b, literal),
        Subject::PawnMetric => metrics::pawn_metric_distance(&board, &a, &b),
        Subject::Piece(_) => search::distance(rule(piece, literal)?, &board, &a, &b),
    };
    d.map(dist).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (piece, n, k, v, literal = false))]
fn eccentricity(piece: &str, n: u32, k: u32, v: Vec<u32>, literal: bool) -> PyResult<Option<u32>> {
    search::eccentricity(rule(piece, literal)?, &board(n, k)?, &Vertex::new(v)).map(dist).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (piece, n, k, v, t, literal = false))]
fn reach(piece: &str, n: u32, k: u32, v: Vec<u32>, t: u32, literal: bool) -> PyResult<Vec<Vec<u32>>> {
    let set = search::reach_set(rule(piece, literal)?, &board(n, k)?, &Vertex::new(v), t).map_err(err)?;
    Ok(set.iter().map(tuple).collect())
}

#[pyfunction]
fn connected(piece: &str, n: u32, k: u32) -> PyResult<bool> {
    Ok(search::connectivity(rule(piece, false)?, &board(n, k)?).map_err(err)?.connected)
}

#[pyfunction]
#[pyo3(signature = (piece, n, k, symmetry = true, literal = false))]
fn radius_diameter<'py>(
    py: Python<'py>,
    piece: &str,
    n: u32,
    k: u32,
    symmetry: bool,
    literal: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let board = board(n, k)?;
    let rep = match piece.parse::<Subject>().map_err(err)? {
        Subject::BishopMetric => metrics::bishop_metric_radius_diameter(&board, literal),
        Subject::PawnMetric => metrics::pawn_metric_radius_diameter(&board),
        Subject::Piece(_) => search::radius_diameter(rule(piece, literal)?, &board, symmetry),
    }
    .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("piece", rep.piece.as_str())?;
    d.set_item("n", rep.n)?;
    d.set_item("k", rep.k)?;
    d.set_item("radius", dist(rep.radius))?;
    d.set_item("diameter", dist(rep.diameter))?;
    d.set_item("center_witness", tuple(&rep.center_witness))?;
    d.set_item("peripheral_pair", (tuple(&rep.peripheral_pair.0), tuple(&rep.peripheral_pair.1)))?;
    d.set_item("sources_examined", rep.sources_examined)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (metric, n, k, literal = false))]
fn is_metric(metric: &str, n: u32, k: u32, literal: bool) -> PyResult<bool> {
    let kind = match metric.parse::<Subject>().map_err(err)? {
        Subject::BishopMetric => MetricKind::BishopMetric { literal },
        Subject::PawnMetric => MetricKind::PawnMetric,
        Subject::Piece(_) => MetricKind::Piece(rule(metric, literal)?),
    };
    Ok(metrics::verify_metric(kind, &board(n, k)?).map_err(err)?.verdict)
}

#[pyfunction]
#[pyo3(signature = (n, k, a, b, pawn = "pawn-bar", queen = "queen-tilde"))]
fn pawn_trip(n: u32, k: u32, a: Vec<u32>, b: Vec<u32>, pawn: &str, queen: &str) -> PyResult<Option<u32>> {
    let pawn: PieceId = pawn.parse().map_err(err)?;
    let queen: PieceId = queen.parse().map_err(err)?;
    metrics::pawn_trip_moves(&board(n, k)?, pawn, queen, &Vertex::new(a), &Vertex::new(b))
        .map(dist)
        .map_err(err)
}

#[pymodule]
fn pyhyperchess(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(eccentricity, m)?)?;
    m.add_function(wrap_pyfunction!(reach, m)?)?;
    m.add_function(wrap_pyfunction!(connected, m)?)?;
    m.add_function(wrap_pyfunction!(radius_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(is_metric, m)?)?;
    m.add_function(wrap_pyfunction!(pawn_trip, m)?)?;
    Ok(())
}
