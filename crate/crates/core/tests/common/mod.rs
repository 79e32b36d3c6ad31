//! Brute-force oracles shared by the integration tests. Everything here is
//! written straight from the move definitions, without touching the
//! library's generators, so agreement is meaningful.

#![allow(dead_code)]

use std::collections::VecDeque;

use hyperchess::{Board, PieceId, SymmetryClass, Vertex};

/// Every vertex in ordinal order (axis 1 varies fastest).
pub fn all_coords(n: u32, k: u32) -> Vec<Vec<u32>> {
    let total = (n as usize).pow(k);
    (0..total)
        .map(|mut i| {
            (0..k)
                .map(|_| {
                    let x = (i % n as usize) as u32;
                    i /= n as usize;
                    x
                })
                .collect()
        })
        .collect()
}

pub fn verts(list: &[&[u32]]) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = list.iter().map(|c| Vertex::new(c.to_vec())).collect();
    v.sort();
    v
}

/// The move predicate, read directly off the Δ definitions.
pub fn oracle_move(id: PieceId, literal: bool, a: &[u32], b: &[u32]) -> bool {
    let d: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| y as i64 - x as i64).collect();
    let mags: Vec<i64> = d.iter().map(|x| x.abs()).collect();
    let nonzero = mags.iter().filter(|&&m| m != 0).count();
    if nonzero == 0 {
        return false;
    }
    let c = *mags.iter().max().unwrap();
    let uniform = mags.iter().all(|&m| m == 0 || m == c);
    let rook_bar = nonzero == 1;
    let rook_star = uniform && nonzero < d.len();
    let planar_bishop = d.len() >= 2 && mags[0] == c && mags[1] == c && mags[2..].iter().all(|&m| m == 0);
    let bishop_bar = uniform && nonzero == d.len();
    let bishop_mill = uniform && d.len() >= 2 && mags[0] != 0 && mags[1] != 0;
    let bishop_tilde = uniform && nonzero >= 2 && (literal || (c * nonzero as i64) % 2 == 0);
    match id {
        PieceId::King => c == 1,
        PieceId::Knight => {
            let mut m = mags.clone();
            m.sort_unstable();
            m.iter().rev().take(2).copied().collect::<Vec<_>>() == [2, 1] && nonzero == 2
        }
        PieceId::RookBar => rook_bar,
        PieceId::RookStar => rook_star,
        PieceId::RookMillennium => rook_star && !planar_bishop,
        PieceId::BishopBar => bishop_bar,
        PieceId::BishopMillennium => bishop_mill,
        PieceId::BishopTilde => bishop_tilde,
        PieceId::QueenBar => bishop_bar || rook_bar,
        PieceId::QueenMillennium => bishop_mill || (rook_star && !planar_bishop),
        PieceId::QueenTilde => bishop_tilde || rook_bar,
        PieceId::PawnBarForward => {
            d.len() >= 2
                && d.iter().enumerate().all(|(j, &x)| j == 1 || x == 0)
                && (d[1] == 1 || (d[1] == 2 && a[1] == 0))
        }
        PieceId::PawnMillenniumForward => {
            d.len() >= 2
                && d[0] == 0
                && (d[1..].iter().all(|&x| x == 0 || x == 1)
                    || (a[1] == 0 && d[1..].iter().all(|&x| x == 0 || x == 2)))
        }
    }
}

pub fn oracle_neighbors(id: PieceId, literal: bool, n: u32, k: u32, a: &[u32]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = all_coords(n, k)
        .into_iter()
        .filter(|b| oracle_move(id, literal, a, b))
        .map(Vertex::new)
        .collect();
    out.sort();
    out
}

/// Plain queue BFS over the oracle predicate; `None` is unreachable.
pub fn oracle_bfs(id: PieceId, literal: bool, n: u32, k: u32, src: &[u32]) -> Vec<Option<u32>> {
    let all = all_coords(n, k);
    let index = |c: &[u32]| c.iter().rev().fold(0usize, |acc, &x| acc * n as usize + x as usize);
    let adj: Vec<Vec<usize>> = all
        .iter()
        .map(|a| (0..all.len()).filter(|&j| oracle_move(id, literal, a, &all[j])).collect())
        .collect();
    let mut dist = vec![None; all.len()];
    let s = index(src);
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Radius and diameter over every source; `None` when some pair is
/// unreachable.
pub fn oracle_radius_diameter(id: PieceId, literal: bool, n: u32, k: u32) -> (Option<u32>, Option<u32>) {
    let mut radius = u32::MAX;
    let mut diameter = 0;
    for src in all_coords(n, k) {
        let field = oracle_bfs(id, literal, n, k, &src);
        let Some(ecc) = field.iter().try_fold(0, |m, d| d.map(|d| m.max(d))) else {
            return (None, None);
        };
        radius = radius.min(ecc);
        diameter = diameter.max(ecc);
    }
    (Some(radius), Some(diameter))
}

pub fn chebyshev(a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).max().unwrap_or(0)
}

pub fn hamming(a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u32
}

/// A signed permutation restricted to a symmetry class: `perm[j]` is the
/// source axis of output axis `j`, `flip[j]` mirrors output axis `j`.
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub perm: Vec<usize>,
    pub flip: Vec<bool>,
}

impl GroupElement {
    pub fn apply(&self, n: u32, v: &[u32]) -> Vec<u32> {
        self.perm
            .iter()
            .zip(&self.flip)
            .map(|(&src, &f)| if f { n - 1 - v[src] } else { v[src] })
            .collect()
    }

    /// Builds an element of `class` from arbitrary seeds: a permutation
    /// picked by `perm_seed` within the allowed blocks and a flip mask.
    pub fn sample(class: SymmetryClass, k: usize, perm_seed: u64, flip_mask: u64) -> Self {
        let mut perm: Vec<usize> = (0..k).collect();
        let mut seed = perm_seed;
        let mut shuffle = |block: &mut [usize]| {
            for i in (1..block.len()).rev() {
                let j = (seed % (i as u64 + 1)) as usize;
                seed = (seed / (i as u64 + 1)).wrapping_add(seed.rotate_left(17));
                block.swap(i, j);
            }
        };
        let mut flip: Vec<bool> = (0..k).map(|j| flip_mask >> j & 1 == 1).collect();
        match class {
            SymmetryClass::Full => shuffle(&mut perm),
            SymmetryClass::FirstTwoSplit => {
                let (head, tail) = perm.split_at_mut(2.min(k));
                shuffle(head);
                shuffle(tail);
            }
            SymmetryClass::PawnForward => {
                // Axis 2 stays put; the others permute and mirror freely.
                let mut others: Vec<usize> = (0..k).filter(|&j| j != 1).collect();
                shuffle(&mut others);
                let mut it = others.into_iter();
                for (j, slot) in perm.iter_mut().enumerate() {
                    if j != 1 {
                        *slot = it.next().unwrap();
                    }
                }
                if k > 1 {
                    flip[1] = false;
                }
            }
        }
        GroupElement { perm, flip }
    }
}

pub fn board(n: u32, k: u32) -> Board {
    Board::new(n, k).unwrap()
}
