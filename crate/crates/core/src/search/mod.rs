//! Exact BFS distances, eccentricities, radius/diameter and connectivity.

mod dump;
mod graph;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{canonical_vertices, index_vertex, vertex_index, Board, SymmetryClass, Vertex};
use crate::pieces::{PieceId, PieceRule, Subject};

pub use dump::{read_field, write_field, HCDF_MAGIC, HCDF_VERSION};
pub use graph::PieceGraph;
pub(crate) use graph::UNREACHED;

/// Above this first-source eccentricity, radius and diameter come from
/// eccentricity bounds rather than all-source BFS: on long, thin graphs the
/// 64 frontiers of a bit-parallel batch barely overlap and the batch kernel
/// degenerates to quadratic work per board.
const BOUNDING_DEPTH: u16 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Strategy {
    Auto,
    #[cfg_attr(not(test), allow(dead_code))]
    Bounded,
    #[cfg_attr(not(test), allow(dead_code))]
    AllSources,
}

pub const DEFAULT_MEMORY_BUDGET: u64 = 4 << 30;
pub const MEMORY_BUDGET_ENV: &str = "HYPERCHESS_MEM_BUDGET";

/// Upper bound on the bytes a single computation may allocate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoryBudget(pub u64);

static PROCESS_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_MEMORY_BUDGET);

impl Default for MemoryBudget {
    /// The process-wide budget (`DEFAULT_MEMORY_BUDGET` unless overridden
    /// with [`MemoryBudget::set_process_default`]).
    fn default() -> Self {
        MemoryBudget(PROCESS_BUDGET.load(Ordering::Relaxed))
    }
}

impl MemoryBudget {
    pub fn set_process_default(budget: MemoryBudget) {
        PROCESS_BUDGET.store(budget.0, Ordering::Relaxed);
    }

    /// Explicit value first, then `HYPERCHESS_MEM_BUDGET`, then the default.
    pub fn resolve(explicit: Option<u64>) -> Result<Self> {
        if let Some(b) = explicit {
            return Ok(MemoryBudget(b));
        }
        match std::env::var(MEMORY_BUDGET_ENV) {
            Ok(s) => s.trim().parse::<u64>().map(MemoryBudget).map_err(|e| {
                Error::Parse(format!("{MEMORY_BUDGET_ENV}='{s}' is not a byte count: {e}"))
            }),
            Err(_) => Ok(MemoryBudget(DEFAULT_MEMORY_BUDGET)),
        }
    }

    pub fn bytes(&self) -> u64 {
        self.0
    }

    pub fn check(&self, what: &str, bytes: u64) -> Result<()> {
        if bytes > self.0 {
            Err(Error::ComputationInfeasible(format!(
                "{what} needs {bytes} bytes, budget is {}",
                self.0
            )))
        } else {
            Ok(())
        }
    }
}

/// A graph distance; `Unreachable` orders after every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    #[inline]
    pub(crate) fn from_raw(raw: u16) -> Self {
        if raw == UNREACHED {
            Distance::Unreachable
        } else {
            Distance::Finite(u32::from(raw))
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl From<u32> for Distance {
    fn from(d: u32) -> Self {
        Distance::Finite(d)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Option::<u32>::deserialize(d)?.map_or(Distance::Unreachable, Distance::Finite))
    }
}

/// Single-source distances over every vertex, indexed by ordinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    pub board: Board,
    pub piece: PieceId,
    pub source: Vertex,
    values: Vec<u16>,
}

impl DistanceField {
    pub(crate) fn from_raw(board: Board, piece: PieceId, source: Vertex, values: Vec<u16>) -> Self {
        debug_assert_eq!(values.len(), board.vertex_count());
        DistanceField {
            board,
            piece,
            source,
            values,
        }
    }

    #[inline]
    pub fn at(&self, index: usize) -> Distance {
        Distance::from_raw(self.values[index])
    }

    pub fn get(&self, v: &Vertex) -> Result<Distance> {
        Ok(self.at(vertex_index(&self.board, v)?))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Distance> + '_ {
        self.values.iter().map(|&r| Distance::from_raw(r))
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.values
    }

    /// The largest value, `Unreachable` if any vertex is unreachable.
    pub fn max(&self) -> Distance {
        self.iter().max().unwrap_or(Distance::Finite(0))
    }

    pub fn unreachable_count(&self) -> usize {
        self.values.iter().filter(|&&r| r == UNREACHED).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusDiameterReport {
    pub piece: Subject,
    pub n: u32,
    pub k: u32,
    pub radius: Distance,
    pub diameter: Distance,
    pub center_witness: Vertex,
    pub peripheral_pair: (Vertex, Vertex),
    pub sources_examined: u64,
    pub symmetry_used: Option<SymmetryClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub piece: PieceId,
    pub n: u32,
    pub k: u32,
    pub connected: bool,
    /// Lexicographically least vertex, the BFS source for the count below.
    pub source: Vertex,
    pub unreachable_count: u64,
}

impl PieceGraph {
    pub fn distance_field(&self, source: &Vertex) -> Result<DistanceField> {
        let s = vertex_index(self.board(), source)?;
        Ok(DistanceField::from_raw(
            *self.board(),
            self.rule().id,
            source.clone(),
            self.bfs(s),
        ))
    }

    pub fn radius_diameter(&self, use_symmetry: bool) -> Result<RadiusDiameterReport> {
        self.radius_diameter_with(use_symmetry, Strategy::Auto)
    }

    pub(crate) fn radius_diameter_with(&self, use_symmetry: bool, strategy: Strategy) -> Result<RadiusDiameterReport> {
        let rule = self.rule();
        if rule.directed() {
            return Err(Error::UnsupportedPiece(format!(
                "{} is directed and has no radius or diameter",
                rule.id
            )));
        }
        let board = *self.board();
        let sym = use_symmetry.then(|| rule.symmetry());
        let origin = Vertex(vec![0; board.k() as usize]);
        let report = |radius, diameter, center, pair, examined| RadiusDiameterReport {
            piece: Subject::Piece(rule.id),
            n: board.n(),
            k: board.k(),
            radius,
            diameter,
            center_witness: center,
            peripheral_pair: pair,
            sources_examined: examined,
            symmetry_used: sym,
        };

        let first = self.bfs(0);
        if let Some(far) = lex_least(&board, &first, |d| d == UNREACHED) {
            // Disconnected: every eccentricity is infinite.
            return Ok(report(
                Distance::Unreachable,
                Distance::Unreachable,
                origin.clone(),
                (origin, index_vertex(&board, far)),
                1,
            ));
        }

        let mut sources: Vec<u32> = match sym {
            Some(class) => canonical_vertices(&board, class)
                .iter()
                .map(|v| board.encode(v.coords()) as u32)
                .collect(),
            None => (0..board.vertex_count() as u32).collect(),
        };
        sources.sort_by_key(|&s| board.lex_key(s as usize));
        let e0 = first.iter().copied().max().unwrap_or(0);
        let bounded = match strategy {
            Strategy::Auto => e0 > BOUNDING_DEPTH && sources.len() > 64,
            Strategy::Bounded => true,
            Strategy::AllSources => false,
        };
        // Sources are in lexicographic order, so the first optimum wins ties.
        let (ci, pi, ecc_c, ecc_p) = if bounded {
            self.bounded_extremes(&sources, &first)?
        } else {
            let ecc = self.eccentricities(&sources)?;
            let (mut ci, mut pi) = (0, 0);
            for i in 1..ecc.len() {
                if ecc[i] < ecc[ci] {
                    ci = i;
                }
                if ecc[i] > ecc[pi] {
                    pi = i;
                }
            }
            (ci, pi, ecc[ci], ecc[pi])
        };
        let a = sources[pi] as usize;
        let field = if a == 0 { first } else { self.bfs(a) };
        let target = lex_least(&board, &field, |d| d == ecc_p).unwrap_or(a);
        Ok(report(
            Distance::from_raw(ecc_c),
            Distance::from_raw(ecc_p),
            index_vertex(&board, sources[ci] as usize),
            (index_vertex(&board, a), index_vertex(&board, target)),
            sources.len() as u64,
        ))
    }

    /// Exact extremes from eccentricity bounds: a BFS from `x` gives
    /// `max(d, e(x) - d) <= e(v) <= e(x) + d` for every `v` at distance `d`.
    /// Returns the indices (into `sources`) of the first minimum and first
    /// maximum with their values, after as few BFS runs as the bounds allow.
    fn bounded_extremes(&self, sources: &[u32], first: &[u16]) -> Result<(usize, usize, u16, u16)> {
        let v = self.vertex_count() as u64;
        self.budget().check("eccentricity bounds", v * 2 + sources.len() as u64 * 4)?;
        let mut lo = vec![0u16; sources.len()];
        let mut hi = vec![u16::MAX; sources.len()];
        let tighten = |field: &[u16], lo: &mut [u16], hi: &mut [u16]| {
            let e = field.iter().copied().max().unwrap_or(0);
            for (i, &s) in sources.iter().enumerate() {
                let d = field[s as usize];
                lo[i] = lo[i].max(d).max(e - d);
                hi[i] = hi[i].min(e.saturating_add(d));
            }
        };
        tighten(first, &mut lo, &mut hi);
        let mut toward_radius = true;
        loop {
            // First index holding the least lower bound / greatest upper bound.
            let c = (0..lo.len()).min_by_key(|&i| (lo[i], i)).unwrap();
            let p = (0..hi.len()).min_by_key(|&i| (std::cmp::Reverse(hi[i]), i)).unwrap();
            let (c_done, p_done) = (lo[c] == hi[c], lo[p] == hi[p]);
            if c_done && p_done {
                return Ok((c, p, lo[c], hi[p]));
            }
            let pick = if (toward_radius && !c_done) || p_done { c } else { p };
            toward_radius = !toward_radius;
            let field = self.bfs(sources[pick] as usize);
            tighten(&field, &mut lo, &mut hi);
        }
    }

    pub fn connectivity(&self) -> ConnectivityReport {
        let board = *self.board();
        let field = self.bfs(0);
        let unreachable = field.iter().filter(|&&d| d == UNREACHED).count() as u64;
        let mut connected = unreachable == 0;
        if connected && self.rule().directed() {
            connected = self.reverse_bfs(0).iter().all(|&d| d != UNREACHED);
        }
        ConnectivityReport {
            piece: self.rule().id,
            n: board.n(),
            k: board.k(),
            connected,
            source: index_vertex(&board, 0),
            unreachable_count: unreachable,
        }
    }
}

/// Lexicographically least ordinal whose raw distance satisfies `pred`.
pub(crate) fn lex_least(board: &Board, field: &[u16], pred: impl Fn(u16) -> bool) -> Option<usize> {
    field
        .iter()
        .enumerate()
        .filter(|&(_, &d)| pred(d))
        .map(|(i, _)| i)
        .min_by_key(|&i| board.lex_key(i))
}

pub fn bfs_distances(rule: PieceRule, board: &Board, source: &Vertex) -> Result<DistanceField> {
    board.check_vertex(source)?;
    PieceGraph::new(rule, *board)?.distance_field(source)
}

pub fn distance(rule: PieceRule, board: &Board, a: &Vertex, b: &Vertex) -> Result<Distance> {
    board.check_vertex(b)?;
    bfs_distances(rule, board, a)?.get(b)
}

/// `S_t`: every vertex within `t` moves of `source`, the source included,
/// in lexicographic order.
pub fn reach_set(rule: PieceRule, board: &Board, source: &Vertex, t: u32) -> Result<Vec<Vertex>> {
    let field = bfs_distances(rule, board, source)?;
    let mut out: Vec<Vertex> = field
        .iter()
        .enumerate()
        .filter(|(_, d)| matches!(d, Distance::Finite(x) if *x <= t))
        .map(|(i, _)| index_vertex(board, i))
        .collect();
    out.sort();
    Ok(out)
}

pub fn eccentricity(rule: PieceRule, board: &Board, v: &Vertex) -> Result<Distance> {
    Ok(bfs_distances(rule, board, v)?.max())
}

pub fn radius_diameter(rule: PieceRule, board: &Board, use_symmetry: bool) -> Result<RadiusDiameterReport> {
    PieceGraph::new(rule, *board)?.radius_diameter(use_symmetry)
}

pub fn connectivity(rule: PieceRule, board: &Board) -> Result<ConnectivityReport> {
    Ok(PieceGraph::new(rule, *board)?.connectivity())
}
