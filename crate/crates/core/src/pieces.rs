//! Move generators for the thirteen piece variants.
//!
//! Every rule is stated on `Δ = target − source`. Sliders (rooks, bishops,
//! queens) share one shape: a magnitude `c ≥ 1` and a support `S` of moved
//! axes with `|Δ_j| = c` for `j ∈ S`; each variant is a predicate on
//! `(|S|, S ∋ 1, S ∋ 2, c)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Board, SymmetryClass, Vertex};

/// Piece variants, in the order used by the binary field dump.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PieceId {
    King,
    Knight,
    RookBar,
    RookStar,
    RookMillennium,
    BishopBar,
    BishopMillennium,
    BishopTilde,
    QueenBar,
    QueenMillennium,
    QueenTilde,
    PawnBarForward,
    PawnMillenniumForward,
}

impl PieceId {
    pub const ALL: [PieceId; 13] = [
        PieceId::King,
        PieceId::Knight,
        PieceId::RookBar,
        PieceId::RookStar,
        PieceId::RookMillennium,
        PieceId::BishopBar,
        PieceId::BishopMillennium,
        PieceId::BishopTilde,
        PieceId::QueenBar,
        PieceId::QueenMillennium,
        PieceId::QueenTilde,
        PieceId::PawnBarForward,
        PieceId::PawnMillenniumForward,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PieceId::King => "king",
            PieceId::Knight => "knight",
            PieceId::RookBar => "rook-bar",
            PieceId::RookStar => "rook-star",
            PieceId::RookMillennium => "rook-millennium",
            PieceId::BishopBar => "bishop-bar",
            PieceId::BishopMillennium => "bishop-millennium",
            PieceId::BishopTilde => "bishop-tilde",
            PieceId::QueenBar => "queen-bar",
            PieceId::QueenMillennium => "queen-millennium",
            PieceId::QueenTilde => "queen-tilde",
            PieceId::PawnBarForward => "pawn-bar",
            PieceId::PawnMillenniumForward => "pawn-millennium",
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<PieceId> {
        PieceId::ALL.get(code as usize).copied()
    }

    pub fn symmetry(self) -> SymmetryClass {
        match self {
            PieceId::RookMillennium | PieceId::BishopMillennium | PieceId::QueenMillennium => {
                SymmetryClass::FirstTwoSplit
            }
            PieceId::PawnBarForward | PieceId::PawnMillenniumForward => SymmetryClass::PawnForward,
            _ => SymmetryClass::Full,
        }
    }

    pub fn directed(self) -> bool {
        matches!(self, PieceId::PawnBarForward | PieceId::PawnMillenniumForward)
    }

    pub fn is_slider(self) -> bool {
        matches!(
            self,
            PieceId::RookBar
                | PieceId::RookStar
                | PieceId::RookMillennium
                | PieceId::BishopBar
                | PieceId::BishopMillennium
                | PieceId::BishopTilde
                | PieceId::QueenBar
                | PieceId::QueenMillennium
                | PieceId::QueenTilde
        )
    }

    /// Millennium pieces distinguish axes 1 and 2; pawns advance along axis 2.
    pub fn min_k(self) -> u32 {
        match self {
            PieceId::RookMillennium
            | PieceId::BishopMillennium
            | PieceId::QueenMillennium
            | PieceId::PawnBarForward
            | PieceId::PawnMillenniumForward => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for PieceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PieceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PieceId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = PieceId::ALL.iter().map(|p| p.as_str()).collect();
                Error::Parse(format!("unknown piece '{s}' (expected one of {})", ids.join(", ")))
            })
    }
}

/// What a distance, radius or diameter is measured for: a piece graph or
/// one of the two composite metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Piece(PieceId),
    BishopMetric,
    PawnMetric,
}

impl Subject {
    pub fn as_str(self) -> &'static str {
        match self {
            Subject::Piece(p) => p.as_str(),
            Subject::BishopMetric => "bishop-metric",
            Subject::PawnMetric => "pawn-metric",
        }
    }
}

impl From<PieceId> for Subject {
    fn from(p: PieceId) -> Self {
        Subject::Piece(p)
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Subject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bishop-metric" => Ok(Subject::BishopMetric),
            "pawn-metric" => Ok(Subject::PawnMetric),
            _ => s.parse().map(Subject::Piece),
        }
    }
}

impl Serialize for Subject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Subject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A piece variant plus the bishop-tilde reading it uses.
///
/// `bishop_tilde_literal` drops the `c·|S|` even filter from the tilde bishop
/// (and the tilde queen built on it); it is ignored by every other piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PieceRule {
    pub id: PieceId,
    pub bishop_tilde_literal: bool,
}

impl PieceRule {
    pub fn new(id: PieceId) -> Self {
        PieceRule {
            id,
            bishop_tilde_literal: false,
        }
    }

    pub fn literal(id: PieceId) -> Self {
        PieceRule {
            id,
            bishop_tilde_literal: true,
        }
    }

    pub fn symmetry(&self) -> SymmetryClass {
        self.id.symmetry()
    }

    pub fn directed(&self) -> bool {
        self.id.directed()
    }

    pub fn check_board(&self, board: &Board) -> Result<()> {
        if board.k() < self.id.min_k() {
            return Err(Error::UnsupportedPiece(format!(
                "{} needs k >= {} (got k={})",
                self.id,
                self.id.min_k(),
                board.k()
            )));
        }
        Ok(())
    }

    /// Slider predicate on a support of size `m` (containing axis 1 / axis 2
    /// as flagged) and magnitude `c`.
    #[inline]
    pub(crate) fn slider_allows(&self, k: u32, m: u32, in1: bool, in2: bool, c: u32) -> bool {
        if m == 0 {
            return false;
        }
        let rook_bar = m == 1;
        let rook_star = m < k;
        let rook_mill = rook_star && !(m == 2 && in1 && in2);
        let bishop_bar = m == k;
        let bishop_mill = in1 && in2;
        let bishop_tilde = m >= 2 && (self.bishop_tilde_literal || (c * m) % 2 == 0);
        match self.id {
            PieceId::RookBar => rook_bar,
            PieceId::RookStar => rook_star,
            PieceId::RookMillennium => rook_mill,
            PieceId::BishopBar => bishop_bar,
            PieceId::BishopMillennium => bishop_mill,
            PieceId::BishopTilde => bishop_tilde,
            PieceId::QueenBar => rook_bar || bishop_bar,
            PieceId::QueenMillennium => bishop_mill || rook_mill,
            PieceId::QueenTilde => bishop_tilde || rook_bar,
            _ => false,
        }
    }

    /// Smallest and largest support a slider move can have on dimension `k`.
    fn support_range(&self, k: u32) -> (u32, u32) {
        match self.id {
            PieceId::RookBar => (1, 1),
            PieceId::RookStar | PieceId::RookMillennium => (1, k.saturating_sub(1)),
            PieceId::BishopBar => (k, k),
            PieceId::BishopMillennium | PieceId::BishopTilde => (2, k),
            _ => (1, k),
        }
    }

    /// Move predicate on raw coordinates (both assumed in range).
    pub fn is_move_coords(&self, a: &[u32], b: &[u32]) -> bool {
        let k = a.len();
        match self.id {
            PieceId::King => {
                let mut moved = false;
                for j in 0..k {
                    match a[j].abs_diff(b[j]) {
                        0 => {}
                        1 => moved = true,
                        _ => return false,
                    }
                }
                moved
            }
            PieceId::Knight => {
                let (mut ones, mut twos) = (0, 0);
                for j in 0..k {
                    match a[j].abs_diff(b[j]) {
                        0 => {}
                        1 => ones += 1,
                        2 => twos += 1,
                        _ => return false,
                    }
                }
                ones == 1 && twos == 1
            }
            PieceId::PawnBarForward => {
                if k < 2 {
                    return false;
                }
                let step = i64::from(b[1]) - i64::from(a[1]);
                let others_fixed = (0..k).all(|j| j == 1 || a[j] == b[j]);
                others_fixed && (step == 1 || (step == 2 && a[1] == 0))
            }
            PieceId::PawnMillenniumForward => {
                if k < 2 || a[0] != b[0] {
                    return false;
                }
                let mut family = 0i64;
                for j in 1..k {
                    let d = i64::from(b[j]) - i64::from(a[j]);
                    if d == 0 {
                        continue;
                    }
                    if !(d == 1 || d == 2) || (family != 0 && family != d) {
                        return false;
                    }
                    family = d;
                }
                family == 1 || (family == 2 && a[1] == 0)
            }
            _ => {
                let mut c = 0u32;
                let mut m = 0u32;
                for j in 0..k {
                    let d = a[j].abs_diff(b[j]);
                    if d == 0 {
                        continue;
                    }
                    if c != 0 && d != c {
                        return false;
                    }
                    c = d;
                    m += 1;
                }
                let in1 = a[0] != b[0];
                let in2 = k > 1 && a[1] != b[1];
                self.slider_allows(k as u32, m, in1, in2, c)
            }
        }
    }

    /// Calls `emit` with the ordinal of every neighbour of `coords`, in no
    /// particular order, each exactly once.
    pub(crate) fn for_each_neighbor(
        &self,
        board: &Board,
        strides: &[usize],
        coords: &[u32],
        emit: &mut dyn FnMut(usize),
    ) {
        let n = board.n();
        let k = coords.len();
        let base = board.encode(coords);
        match self.id {
            PieceId::King => {
                // Odometer over Δ ∈ {-1,0,1}^k restricted to in-range values.
                let lo: Vec<i64> = coords.iter().map(|&x| if x > 0 { -1 } else { 0 }).collect();
                let hi: Vec<i64> = coords.iter().map(|&x| if x + 1 < n { 1 } else { 0 }).collect();
                let mut d = lo.clone();
                loop {
                    if d.iter().any(|&x| x != 0) {
                        let off: i64 = d
                            .iter()
                            .zip(strides)
                            .map(|(&dj, &s)| dj * s as i64)
                            .sum();
                        emit((base as i64 + off) as usize);
                    }
                    let mut j = 0;
                    loop {
                        if j == k {
                            return;
                        }
                        if d[j] < hi[j] {
                            d[j] += 1;
                            break;
                        }
                        d[j] = lo[j];
                        j += 1;
                    }
                }
            }
            PieceId::Knight => {
                for i in 0..k {
                    for di in [-2i64, 2] {
                        let xi = i64::from(coords[i]) + di;
                        if xi < 0 || xi >= i64::from(n) {
                            continue;
                        }
                        for j in 0..k {
                            if j == i {
                                continue;
                            }
                            for dj in [-1i64, 1] {
                                let xj = i64::from(coords[j]) + dj;
                                if xj < 0 || xj >= i64::from(n) {
                                    continue;
                                }
                                let off = di * strides[i] as i64 + dj * strides[j] as i64;
                                emit((base as i64 + off) as usize);
                            }
                        }
                    }
                }
            }
            PieceId::PawnBarForward => {
                if k < 2 {
                    return;
                }
                let x2 = coords[1];
                if x2 + 1 < n {
                    emit(base + strides[1]);
                }
                if x2 == 0 && n > 2 {
                    emit(base + 2 * strides[1]);
                }
            }
            PieceId::PawnMillenniumForward => {
                if k < 2 {
                    return;
                }
                let families: &[u32] = if coords[1] == 0 { &[1, 2] } else { &[1] };
                for &step in families {
                    // Every non-empty subset of the axes 2..k that can advance by `step`.
                    let movable: Vec<usize> = (1..k).filter(|&j| coords[j] + step < n).collect();
                    let count = movable.len();
                    for mask in 1u64..(1u64 << count) {
                        let mut off = 0usize;
                        for (bit, &j) in movable.iter().enumerate() {
                            if mask >> bit & 1 == 1 {
                                off += step as usize * strides[j];
                            }
                        }
                        emit(base + off);
                    }
                }
            }
            _ => {
                let (min_s, max_s) = self.support_range(k as u32);
                if max_s == 0 || min_s > k as u32 {
                    return;
                }
                for c in 1..n {
                    let mut walker = SliderWalk {
                        rule: self,
                        n,
                        k: k as u32,
                        c,
                        min_s,
                        max_s,
                        coords,
                        strides,
                        emit: &mut *emit,
                    };
                    walker.go(0, 0, base as i64, false, false);
                }
            }
        }
    }
}

struct SliderWalk<'a> {
    rule: &'a PieceRule,
    n: u32,
    k: u32,
    c: u32,
    min_s: u32,
    max_s: u32,
    coords: &'a [u32],
    strides: &'a [usize],
    emit: &'a mut dyn FnMut(usize),
}

impl SliderWalk<'_> {
    fn go(&mut self, j: usize, m: u32, ord: i64, in1: bool, in2: bool) {
        let k = self.k as usize;
        if j == k {
            if self.rule.slider_allows(self.k, m, in1, in2, self.c) {
                (self.emit)(ord as usize);
            }
            return;
        }
        let remaining = self.k - j as u32;
        // Axes 1 and 2 are both required for millennium bishops.
        let required = self.rule.id == PieceId::BishopMillennium && j < 2;
        if !required && m + remaining - 1 >= self.min_s {
            self.go(j + 1, m, ord, in1, in2);
        }
        if m < self.max_s {
            let x = self.coords[j];
            let s = self.strides[j] as i64 * i64::from(self.c);
            if x >= self.c {
                self.go(j + 1, m + 1, ord - s, in1 || j == 0, in2 || j == 1);
            }
            if x + self.c < self.n {
                self.go(j + 1, m + 1, ord + s, in1 || j == 0, in2 || j == 1);
            }
        }
    }
}

pub fn symmetry_of(rule: PieceRule) -> SymmetryClass {
    rule.symmetry()
}

/// The one-move targets of `v`, excluding `v` itself, sorted by ordinal.
pub fn neighbors(rule: PieceRule, board: &Board, v: &Vertex) -> Result<Vec<Vertex>> {
    board.check_vertex(v)?;
    rule.check_board(board)?;
    let strides = board.strides();
    let mut out = Vec::new();
    rule.for_each_neighbor(board, &strides, v.coords(), &mut |i| out.push(i));
    out.sort_unstable();
    out.dedup();
    Ok(out
        .into_iter()
        .map(|i| crate::lattice::index_vertex(board, i))
        .collect())
}

pub fn is_move(rule: PieceRule, board: &Board, a: &Vertex, b: &Vertex) -> Result<bool> {
    board.check_vertex(a)?;
    board.check_vertex(b)?;
    rule.check_board(board)?;
    Ok(rule.is_move_coords(a.coords(), b.coords()))
}
