//! The lattice `C(n,k) = {0,..,n-1}^k`, its ordinal layout, the parity
//! coloring and the symmetry classes used to pick canonical start vertices.
//!
//! Ordinals put axis 1 in the least significant position:
//! `index = x_1 + x_2 n + ... + x_k n^(k-1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count. Internal queues and line tables store
/// ordinals as `u32`.
pub const MAX_VERTICES: u64 = 1 << 32;

/// The board `C(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Board {
    n: u32,
    k: u32,
    vertex_count: usize,
}

impl Board {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidBoard(format!(
                "n and k must be at least 1 (got n={n}, k={k})"
            )));
        }
        let mut count: u64 = 1;
        for _ in 0..k {
            count = count
                .checked_mul(u64::from(n))
                .filter(|&c| c <= MAX_VERTICES)
                .ok_or_else(|| {
                    Error::InvalidBoard(format!("{n}^{k} exceeds the ordinal range"))
                })?;
        }
        Ok(Board {
            n,
            k,
            vertex_count: count as usize,
        })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `n^j` for `j = 0..k`.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = Vec::with_capacity(self.k as usize);
        let mut s = 1usize;
        for _ in 0..self.k {
            strides.push(s);
            s = s.wrapping_mul(self.n as usize);
        }
        strides
    }

    pub fn check_vertex(&self, v: &Vertex) -> Result<()> {
        if v.0.len() != self.k as usize {
            return Err(Error::InvalidVertex(format!(
                "{v} has {} coordinates, board has k={}",
                v.0.len(),
                self.k
            )));
        }
        if let Some(x) = v.0.iter().find(|&&x| x >= self.n) {
            return Err(Error::InvalidVertex(format!(
                "coordinate {x} of {v} is outside [0, {}]",
                self.n - 1
            )));
        }
        Ok(())
    }

    /// Decodes an ordinal into `coords` without allocating.
    #[inline]
    pub fn decode_into(&self, mut index: usize, coords: &mut [u32]) {
        let n = self.n as usize;
        for c in coords.iter_mut() {
            *c = (index % n) as u32;
            index /= n;
        }
    }

    #[inline]
    pub fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .rev()
            .fold(0usize, |acc, &x| acc * self.n as usize + x as usize)
    }

    /// Key whose natural order is the lexicographic order of coordinate
    /// tuples (axis 1 most significant), unlike the ordinal itself.
    #[inline]
    pub fn lex_key(&self, mut index: usize) -> usize {
        let n = self.n as usize;
        let mut key = 0usize;
        for _ in 0..self.k {
            key = key * n + index % n;
            index /= n;
        }
        key
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count).map(move |i| index_vertex(self, i))
    }

    /// The centre-most vertex `(m,..,m)` with `m = floor((n-1)/2)`.
    pub fn center(&self) -> Vertex {
        Vertex(vec![(self.n - 1) / 2; self.k as usize])
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.n, self.k)
    }
}

/// A lattice point; coordinate `j` is axis `j+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub Vec<u32>);

impl Vertex {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        Vertex(coords.into())
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Comma separated coordinates without parentheses, e.g. `1,0,0`.
    pub fn to_plain(&self) -> String {
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl From<&[u32]> for Vertex {
    fn from(c: &[u32]) -> Self {
        Vertex(c.to_vec())
    }
}

impl<const K: usize> From<[u32; K]> for Vertex {
    fn from(c: [u32; K]) -> Self {
        Vertex(c.to_vec())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_plain())
    }
}

impl FromStr for Vertex {
    type Err = Error;

    /// Accepts `1,0,0` and `(1,0,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Err(Error::Parse(format!("empty vertex '{s}'")));
        }
        body.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad coordinate '{part}' in '{s}': {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Vertex)
    }
}

/// Parity coloring: dark iff the coordinate sum is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Dark,
    Light,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryClass {
    /// All axis permutations and per-axis reflections.
    Full,
    /// Reflections on every axis, permutations within `{1,2}` and within `{3..k}`.
    FirstTwoSplit,
    /// Axis 2 fixed; full group on the remaining axes.
    PawnForward,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryClass::Full => "full",
            SymmetryClass::FirstTwoSplit => "first-two-split",
            SymmetryClass::PawnForward => "pawn-forward",
        })
    }
}

pub fn vertex_index(board: &Board, v: &Vertex) -> Result<usize> {
    board.check_vertex(v)?;
    Ok(board.encode(&v.0))
}

pub fn index_vertex(board: &Board, index: usize) -> Vertex {
    debug_assert!(index < board.vertex_count());
    let mut coords = vec![0; board.k() as usize];
    board.decode_into(index, &mut coords);
    Vertex(coords)
}

pub fn color_of(board: &Board, v: &Vertex) -> Result<Color> {
    board.check_vertex(v)?;
    Ok(color_of_coords(&v.0))
}

#[inline]
pub fn color_of_coords(coords: &[u32]) -> Color {
    if coords.iter().map(|&x| u64::from(x)).sum::<u64>() % 2 == 0 {
        Color::Dark
    } else {
        Color::Light
    }
}

#[inline]
fn fold(n: u32, x: u32) -> u32 {
    x.min(n - 1 - x)
}

pub fn canonicalize(board: &Board, v: &Vertex, sym: SymmetryClass) -> Result<Vertex> {
    board.check_vertex(v)?;
    let n = board.n();
    let mut c: Vec<u32> = v.0.clone();
    match sym {
        SymmetryClass::Full => {
            c.iter_mut().for_each(|x| *x = fold(n, *x));
            c.sort_unstable();
        }
        SymmetryClass::FirstTwoSplit => {
            c.iter_mut().for_each(|x| *x = fold(n, *x));
            let split = c.len().min(2);
            c[..split].sort_unstable();
            c[split..].sort_unstable();
        }
        SymmetryClass::PawnForward => {
            if c.len() < 2 {
                c.iter_mut().for_each(|x| *x = fold(n, *x));
            } else {
                let rank = c[1];
                let mut rest: Vec<u32> = c
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != 1)
                    .map(|(_, &x)| fold(n, x))
                    .collect();
                rest.sort_unstable();
                c = Vec::with_capacity(rest.len() + 1);
                c.push(rest[0]);
                c.push(rank);
                c.extend_from_slice(&rest[1..]);
            }
        }
    }
    Ok(Vertex(c))
}

/// Pushes every nondecreasing sequence of length `len` over `[lo, hi]`
/// onto `out`, in lexicographic order.
fn nondecreasing(len: usize, lo: u32, hi: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if len == 0 {
        out.push(prefix.clone());
        return;
    }
    for x in lo..=hi {
        prefix.push(x);
        nondecreasing(len - 1, x, hi, prefix, out);
        prefix.pop();
    }
}

/// One representative per orbit, lexicographically sorted. Each
/// representative is the lexicographically least member of its orbit.
pub fn canonical_vertices(board: &Board, sym: SymmetryClass) -> Vec<Vertex> {
    let k = board.k() as usize;
    let m = (board.n() - 1) / 2;
    let mut out: Vec<Vec<u32>> = Vec::new();
    match sym {
        SymmetryClass::Full => nondecreasing(k, 0, m, &mut Vec::new(), &mut out),
        SymmetryClass::FirstTwoSplit => {
            let head = k.min(2);
            let mut heads = Vec::new();
            nondecreasing(head, 0, m, &mut Vec::new(), &mut heads);
            let mut tails = Vec::new();
            nondecreasing(k - head, 0, m, &mut Vec::new(), &mut tails);
            for h in &heads {
                for t in &tails {
                    let mut v = h.clone();
                    v.extend_from_slice(t);
                    out.push(v);
                }
            }
        }
        SymmetryClass::PawnForward => {
            if k < 2 {
                nondecreasing(k, 0, m, &mut Vec::new(), &mut out);
            } else {
                let mut rests = Vec::new();
                nondecreasing(k - 1, 0, m, &mut Vec::new(), &mut rests);
                for rest in &rests {
                    for rank in 0..board.n() {
                        let mut v = Vec::with_capacity(k);
                        v.push(rest[0]);
                        v.push(rank);
                        v.extend_from_slice(&rest[1..]);
                        out.push(v);
                    }
                }
                out.sort_unstable();
            }
        }
    }
    out.into_iter().map(Vertex).collect()
}

/// `binomial(floor((n-1)/2) + k, k)`: the number of fully-symmetric orbits.
pub fn canonical_count(n: u32, k: u32) -> Result<u64> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!("canonical_count needs n, k >= 1 (got {n}, {k})")));
    }
    let m = u128::from((n - 1) / 2);
    let overflow = || Error::ComputationInfeasible(format!("canonical_count({n},{k}) overflows"));
    // C(m+i, i) = C(m+i-1, i-1) * (m+i) / i stays integral at each step.
    let mut c: u128 = 1;
    for i in 1..=u128::from(k) {
        c = c.checked_mul(m + i).ok_or_else(overflow)? / i;
    }
    u64::try_from(c).map_err(|_| overflow())
}
