//! Composite metrics built on top of the piece graphs: the bishop metric
//! (cross-colour moves cost a flat `2^k`), the pawn metric (a promotion
//! constant plus the cheaper of the tilde queen and the knight), the pawn
//! promotion automaton, and an exhaustive metric-axiom checker.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{canonical_vertices, color_of_coords, index_vertex, vertex_index, Board, SymmetryClass, Vertex};
use crate::pieces::{PieceId, PieceRule, Subject};
use crate::search::{lex_least, Distance, DistanceField, MemoryBudget, PieceGraph, RadiusDiameterReport, UNREACHED};

/// Largest vertex count `verify_metric` accepts by default.
pub const VERIFY_VERTEX_LIMIT: usize = 1296;
/// Witnesses kept per violation kind.
pub const WITNESS_CAP: usize = 16;

fn need_k2(board: &Board, what: &str) -> Result<()> {
    if board.k() < 2 {
        return Err(Error::Domain(format!("{what} needs k >= 2 (got {board})")));
    }
    Ok(())
}

fn bishop_rule(literal: bool) -> PieceRule {
    PieceRule {
        id: PieceId::BishopTilde,
        bishop_tilde_literal: literal,
    }
}

/// Cost of any cross-colour bishop-metric move.
pub fn bishop_cross_color(k: u32) -> Result<u32> {
    1u32.checked_shl(k)
        .filter(|&c| c < u32::from(UNREACHED))
        .ok_or_else(|| Error::ComputationInfeasible(format!("2^{k} overflows the distance range")))
}

fn bishop_checks(board: &Board) -> Result<u32> {
    if board.n() < 2 || board.k() < 2 {
        return Err(Error::Domain(format!("the bishop metric needs n, k >= 2 (got {board})")));
    }
    bishop_cross_color(board.k())
}

/// One row of the bishop metric: BFS distances on same-colour targets,
/// `2^k` elsewhere, 0 on the diagonal.
fn bishop_row(graph: &PieceGraph, a: usize, cross: u16, coords: &mut [u32]) -> Vec<u16> {
    let board = graph.board();
    board.decode_into(a, coords);
    let ca = color_of_coords(coords);
    let mut row = graph.bfs(a);
    for (b, d) in row.iter_mut().enumerate() {
        board.decode_into(b, coords);
        if color_of_coords(coords) != ca {
            *d = cross;
        }
    }
    row
}

pub fn bishop_metric_distance(board: &Board, a: &Vertex, b: &Vertex, literal: bool) -> Result<Distance> {
    let cross = bishop_checks(board)?;
    let ia = vertex_index(board, a)?;
    let ib = vertex_index(board, b)?;
    if ia == ib {
        return Ok(Distance::Finite(0));
    }
    if color_of_coords(a.coords()) != color_of_coords(b.coords()) {
        return Ok(Distance::Finite(cross));
    }
    let graph = PieceGraph::new(bishop_rule(literal), *board)?;
    Ok(Distance::from_raw(graph.bfs(ia)[ib]))
}

/// Radius and diameter of a metric given per-source rows, evaluated on
/// fully-symmetric canonical sources.
fn metric_radius_diameter(
    board: &Board,
    subject: Subject,
    row: impl Fn(usize) -> Vec<u16> + Sync,
) -> RadiusDiameterReport {
    let mut sources: Vec<usize> = canonical_vertices(board, SymmetryClass::Full)
        .iter()
        .map(|v| board.encode(v.coords()))
        .collect();
    sources.sort_by_key(|&s| board.lex_key(s));
    let ecc: Vec<(u16, usize)> = sources
        .par_iter()
        .map(|&s| {
            let r = row(s);
            let e = r.iter().copied().max().unwrap_or(0);
            let far = lex_least(board, &r, |d| d == e).unwrap_or(s);
            (e, far)
        })
        .collect();
    let (mut ci, mut pi) = (0, 0);
    for i in 1..ecc.len() {
        if ecc[i].0 < ecc[ci].0 {
            ci = i;
        }
        if ecc[i].0 > ecc[pi].0 {
            pi = i;
        }
    }
    RadiusDiameterReport {
        piece: subject,
        n: board.n(),
        k: board.k(),
        radius: Distance::from_raw(ecc[ci].0),
        diameter: Distance::from_raw(ecc[pi].0),
        center_witness: index_vertex(board, sources[ci]),
        peripheral_pair: (index_vertex(board, sources[pi]), index_vertex(board, ecc[pi].1)),
        sources_examined: sources.len() as u64,
        symmetry_used: Some(SymmetryClass::Full),
    }
}

pub fn bishop_metric_radius_diameter(board: &Board, literal: bool) -> Result<RadiusDiameterReport> {
    let cross = bishop_checks(board)? as u16;
    let graph = PieceGraph::new(bishop_rule(literal), *board)?;
    let k = board.k() as usize;
    Ok(metric_radius_diameter(board, Subject::BishopMetric, |a| {
        bishop_row(&graph, a, cross, &mut vec![0; k])
    }))
}

/// The promotion-trip constant of the pawn metric.
pub fn pawn_metric_base(n: u32) -> u32 {
    match n {
        0 | 1 => 0,
        2 => 1,
        3 => 3,
        4 => 7,
        _ => n - 2 + (2 * n).div_ceil(3),
    }
}

struct PawnMetric {
    queen: PieceGraph,
    knight: PieceGraph,
    base: u16,
}

impl PawnMetric {
    fn new(board: &Board, budget: MemoryBudget) -> Result<Self> {
        need_k2(board, "the pawn metric")?;
        let base = pawn_metric_base(board.n());
        let queen = PieceGraph::with_budget(PieceRule::new(PieceId::QueenTilde), *board, budget)?;
        let knight = PieceGraph::with_budget(PieceRule::new(PieceId::Knight), *board, budget)?;
        if base + 2 * board.n() * board.k() >= u32::from(UNREACHED) {
            return Err(Error::ComputationInfeasible(format!(
                "{board}: pawn-metric values may exceed the distance range"
            )));
        }
        Ok(PawnMetric {
            queen,
            knight,
            base: base as u16,
        })
    }

    /// `base + min(δQ̃, δÑ)` with an unreachable leg losing to a finite one.
    fn row(&self, a: usize) -> Vec<u16> {
        let q = self.queen.bfs(a);
        let nk = self.knight.bfs(a);
        q.iter()
            .zip(&nk)
            .enumerate()
            .map(|(b, (&dq, &dn))| {
                let m = dq.min(dn);
                if b == a {
                    0
                } else if m == UNREACHED {
                    UNREACHED
                } else {
                    self.base + m
                }
            })
            .collect()
    }
}

pub fn pawn_metric_distance(board: &Board, a: &Vertex, b: &Vertex) -> Result<Distance> {
    let ia = vertex_index(board, a)?;
    let ib = vertex_index(board, b)?;
    let metric = PawnMetric::new(board, MemoryBudget::default())?;
    Ok(Distance::from_raw(metric.row(ia)[ib]))
}

pub fn pawn_metric_radius_diameter(board: &Board) -> Result<RadiusDiameterReport> {
    if board.n() < 2 {
        return Err(Error::Domain(format!("pawn-metric radius/diameter needs n >= 2 (got {board})")));
    }
    let metric = PawnMetric::new(board, MemoryBudget::default())?;
    Ok(metric_radius_diameter(board, Subject::PawnMetric, |a| metric.row(a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TripPhase {
    Pawn,
    PromotedQueen,
    PromotedKnight,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PawnTripState {
    pub position: Vertex,
    pub phase: TripPhase,
}

/// The pawn-promotion automaton on one board.
pub struct PawnTrip {
    board: Board,
    pawn: PieceRule,
    queen: PieceRule,
    knight: PieceRule,
    strides: Vec<usize>,
}

impl PawnTrip {
    pub fn new(board: &Board, pawn: PieceId, queen: PieceId) -> Result<Self> {
        if !pawn.directed() {
            return Err(Error::UnsupportedPiece(format!("{pawn} is not a pawn variant")));
        }
        if !matches!(queen, PieceId::QueenMillennium | PieceId::QueenTilde) {
            return Err(Error::UnsupportedPiece(format!(
                "{queen} is not a promotion queen (queen-millennium or queen-tilde)"
            )));
        }
        let pawn = PieceRule::new(pawn);
        let queen = PieceRule::new(queen);
        pawn.check_board(board)?;
        queen.check_board(board)?;
        MemoryBudget::default().check("pawn-trip states", board.vertex_count() as u64 * 3 * 6)?;
        Ok(PawnTrip {
            board: *board,
            pawn,
            queen,
            knight: PieceRule::new(PieceId::Knight),
            strides: board.strides(),
        })
    }

    /// Minimum moves from `a` to every position, any phase.
    pub fn field(&self, a: &Vertex) -> Result<DistanceField> {
        let s = vertex_index(&self.board, a)?;
        let v = self.board.vertex_count();
        let last = self.board.n() - 1;
        let mut dist = vec![UNREACHED; 3 * v];
        let mut queue: Vec<u32> = Vec::new();
        // State id = phase * V + ordinal.
        let seed = |state: usize, dist: &mut Vec<u16>, queue: &mut Vec<u32>| {
            dist[state] = 0;
            queue.push(state as u32);
        };
        if a.coords()[1] == last {
            seed(v + s, &mut dist, &mut queue);
            seed(2 * v + s, &mut dist, &mut queue);
        } else {
            seed(s, &mut dist, &mut queue);
        }
        let mut coords = vec![0u32; self.board.k() as usize];
        let mut head = 0;
        while head < queue.len() {
            let state = queue[head] as usize;
            head += 1;
            let (phase, u) = (state / v, state % v);
            let next = dist[state] + 1;
            self.board.decode_into(u, &mut coords);
            let rule = [&self.pawn, &self.queen, &self.knight][phase];
            let board = &self.board;
            rule.for_each_neighbor(board, &self.strides, &coords, &mut |w| {
                // A pawn landing on the last rank promotes at no extra cost.
                let promotes = phase == 0 && (w / self.strides[1]) % board.n() as usize == last as usize;
                let targets = if promotes { 1..3 } else { phase..phase + 1 };
                for p in targets {
                    let t = p * v + w;
                    if dist[t] == UNREACHED {
                        dist[t] = next;
                        queue.push(t as u32);
                    }
                }
            });
        }
        let values = (0..v)
            .map(|i| dist[i].min(dist[v + i]).min(dist[2 * v + i]))
            .collect();
        Ok(DistanceField::from_raw(self.board, self.pawn.id, a.clone(), values))
    }
}

pub fn pawn_trip_moves(board: &Board, pawn: PieceId, queen: PieceId, a: &Vertex, b: &Vertex) -> Result<Distance> {
    board.check_vertex(b)?;
    PawnTrip::new(board, pawn, queen)?.field(a)?.get(b)
}

/// Worst case over all targets of the trip from `a`.
pub fn pawn_trip_eccentricity(board: &Board, pawn: PieceId, queen: PieceId, a: &Vertex) -> Result<Distance> {
    Ok(PawnTrip::new(board, pawn, queen)?.field(a)?.max())
}

/// A distance function that `verify_metric` can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Piece(PieceRule),
    BishopMetric { literal: bool },
    PawnMetric,
}

impl MetricKind {
    pub fn subject(&self) -> Subject {
        match self {
            MetricKind::Piece(r) => Subject::Piece(r.id),
            MetricKind::BishopMetric { .. } => Subject::BishopMetric,
            MetricKind::PawnMetric => Subject::PawnMetric,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricCheckReport {
    pub metric: Subject,
    pub n: u32,
    pub k: u32,
    pub axiom1_violations: Vec<(Vertex, Vertex)>,
    pub axiom1_count: u64,
    pub symmetry_violations: Vec<(Vertex, Vertex)>,
    pub symmetry_count: u64,
    pub triangle_violations: Vec<(Vertex, Vertex, Vertex)>,
    pub triangle_count: u64,
    pub unreachable_pairs: Vec<(Vertex, Vertex)>,
    pub unreachable_count: u64,
    /// Vertices with no finite distance to or from any other vertex.
    pub isolated_vertices: Vec<Vertex>,
    pub isolated_count: u64,
    pub verdict: bool,
}

#[derive(Default)]
struct RowFindings {
    axiom1: Vec<(u32, u32)>,
    axiom1_count: u64,
    symmetry: Vec<(u32, u32)>,
    symmetry_count: u64,
    triangle: Vec<(u32, u32, u32)>,
    triangle_count: u64,
    unreachable: Vec<(u32, u32)>,
    unreachable_count: u64,
    isolated: bool,
}

fn keep_least<T: Ord>(list: &mut Vec<T>) {
    list.sort_unstable();
    list.truncate(WITNESS_CAP);
}

pub fn verify_metric(metric: MetricKind, board: &Board) -> Result<MetricCheckReport> {
    verify_metric_with_limit(metric, board, VERIFY_VERTEX_LIMIT)
}

pub fn verify_metric_with_limit(metric: MetricKind, board: &Board, limit: usize) -> Result<MetricCheckReport> {
    let v = board.vertex_count();
    if v > limit {
        return Err(Error::ComputationInfeasible(format!(
            "{board} has {v} vertices; exhaustive verification is capped at {limit}"
        )));
    }
    // Work in lexicographic rank space so witness order is numeric order.
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by_key(|&i| board.lex_key(i));
    let row_of: Box<dyn Fn(usize) -> Vec<u16> + Sync> = match metric {
        MetricKind::Piece(rule) => {
            let g = PieceGraph::new(rule, *board)?;
            Box::new(move |a| g.bfs(a))
        }
        MetricKind::BishopMetric { literal } => {
            let cross = bishop_checks(board)? as u16;
            let g = PieceGraph::new(bishop_rule(literal), *board)?;
            let k = board.k() as usize;
            Box::new(move |a| bishop_row(&g, a, cross, &mut vec![0; k]))
        }
        MetricKind::PawnMetric => {
            let m = PawnMetric::new(board, MemoryBudget::default())?;
            Box::new(move |a| m.row(a))
        }
    };
    let matrix: Vec<Vec<u16>> = order
        .par_iter()
        .map(|&a| {
            let row = row_of(a);
            order.iter().map(|&b| row[b]).collect()
        })
        .collect();

    let findings: Vec<RowFindings> = (0..v)
        .into_par_iter()
        .map(|a| {
            let ra = &matrix[a];
            let mut f = RowFindings::default();
            let mut alone = v > 1;
            for b in 0..v {
                let d = ra[b];
                let bad_identity = if a == b { d != 0 } else { d == 0 };
                if bad_identity {
                    f.axiom1_count += 1;
                    f.axiom1.push((a as u32, b as u32));
                }
                if a < b && d != matrix[b][a] {
                    f.symmetry_count += 1;
                    f.symmetry.push((a as u32, b as u32));
                }
                if d == UNREACHED {
                    f.unreachable_count += 1;
                    if f.unreachable.len() < WITNESS_CAP {
                        f.unreachable.push((a as u32, b as u32));
                    }
                }
                if a != b && (d != UNREACHED || matrix[b][a] != UNREACHED) {
                    alone = false;
                }
            }
            f.isolated = alone;
            for c in 0..v {
                let dac = u32::from(ra[c]);
                if ra[c] == UNREACHED {
                    continue;
                }
                let rc = &matrix[c];
                let bad = ra
                    .iter()
                    .zip(rc)
                    .filter(|&(&ab, &cb)| u32::from(ab) > dac + u32::from(cb))
                    .count();
                if bad == 0 {
                    continue;
                }
                f.triangle_count += bad as u64;
                for b in 0..v {
                    if u32::from(ra[b]) > dac + u32::from(rc[b]) {
                        f.triangle.push((a as u32, b as u32, c as u32));
                    }
                }
                if f.triangle.len() > 64 * WITNESS_CAP {
                    keep_least(&mut f.triangle);
                }
            }
            keep_least(&mut f.axiom1);
            keep_least(&mut f.symmetry);
            keep_least(&mut f.triangle);
            f
        })
        .collect();

    let vx = |r: u32| index_vertex(board, order[r as usize]);
    let pair = |&(a, b): &(u32, u32)| (vx(a), vx(b));
    let take_pairs = |get: &dyn Fn(&RowFindings) -> &Vec<(u32, u32)>| -> Vec<(Vertex, Vertex)> {
        findings.iter().flat_map(|f| get(f).iter()).take(WITNESS_CAP).map(pair).collect()
    };
    let sum = |get: &dyn Fn(&RowFindings) -> u64| findings.iter().map(get).sum::<u64>();

    let axiom1_violations = take_pairs(&|f| &f.axiom1);
    let symmetry_violations = take_pairs(&|f| &f.symmetry);
    let unreachable_pairs = take_pairs(&|f| &f.unreachable);
    let triangle_violations: Vec<(Vertex, Vertex, Vertex)> = findings
        .iter()
        .flat_map(|f| f.triangle.iter())
        .take(WITNESS_CAP)
        .map(|&(a, b, c)| (vx(a), vx(b), vx(c)))
        .collect();
    let isolated: Vec<usize> = (0..v).filter(|&a| findings[a].isolated).collect();
    let report = MetricCheckReport {
        metric: metric.subject(),
        n: board.n(),
        k: board.k(),
        axiom1_count: sum(&|f| f.axiom1_count),
        symmetry_count: sum(&|f| f.symmetry_count),
        triangle_count: sum(&|f| f.triangle_count),
        unreachable_count: sum(&|f| f.unreachable_count),
        isolated_count: isolated.len() as u64,
        isolated_vertices: isolated.iter().take(WITNESS_CAP).map(|&r| vx(r as u32)).collect(),
        axiom1_violations,
        symmetry_violations,
        triangle_violations,
        unreachable_pairs,
        verdict: false,
    };
    let verdict = report.axiom1_count == 0
        && report.symmetry_count == 0
        && report.triangle_count == 0
        && report.unreachable_count == 0;
    Ok(MetricCheckReport { verdict, ..report })
}
