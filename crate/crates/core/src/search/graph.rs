//! The implicit piece graph and its BFS kernels.
//!
//! Three adjacency representations are used, picked per graph:
//!
//! * a line index for sliders — every slider move stays on a line (or a
//!   parity sub-line) that is a clique, so a BFS can expand each line once;
//! * a CSR adjacency list when the edge count is small enough to store;
//! * on-the-fly move generation otherwise.
//!
//! All-source eccentricities run 64 sources at a time with one bit per
//! source (bit-parallel multi-source BFS).

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::Board;
use crate::pieces::PieceRule;

use super::MemoryBudget;

pub(crate) const UNREACHED: u16 = u16::MAX;
const NO_LINE: u32 = u32::MAX;

struct LineIndex {
    dirs: usize,
    /// `line_of[d * V + v]`: line through `v` in direction `d`, or `NO_LINE`
    /// when `v` has no partner in that direction.
    line_of: Vec<u32>,
    offsets: Vec<usize>,
    members: Vec<u32>,
}

impl LineIndex {
    #[inline]
    fn members(&self, line: u32) -> &[u32] {
        let l = line as usize;
        &self.members[self.offsets[l]..self.offsets[l + 1]]
    }

    fn line_count(&self) -> usize {
        self.offsets.len() - 1
    }
}

struct Csr {
    offsets: Vec<usize>,
    adj: Vec<u32>,
}

impl Csr {
    #[inline]
    fn row(&self, v: usize) -> &[u32] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// A piece rule bound to a board, with cached adjacency structures.
pub struct PieceGraph {
    rule: PieceRule,
    board: Board,
    budget: MemoryBudget,
    strides: Vec<usize>,
    degree_hint: usize,
    lines: Option<LineIndex>,
    csr: OnceLock<Option<Csr>>,
}

/// Sign-canonical slider directions (first nonzero entry +1) with their step.
fn slider_directions(rule: &PieceRule, k: usize, limit: usize) -> Option<Vec<(Vec<i8>, u32)>> {
    fn rec(
        rule: &PieceRule,
        k: usize,
        e: &mut Vec<i8>,
        limit: usize,
        out: &mut Vec<(Vec<i8>, u32)>,
    ) -> bool {
        if e.len() == k {
            let m = e.iter().filter(|&&x| x != 0).count() as u32;
            if m == 0 {
                return true;
            }
            let in1 = e[0] != 0;
            let in2 = k > 1 && e[1] != 0;
            let step = if rule.slider_allows(k as u32, m, in1, in2, 1) {
                1
            } else if rule.slider_allows(k as u32, m, in1, in2, 2) {
                2
            } else {
                return true;
            };
            out.push((e.clone(), step));
            return out.len() <= limit;
        }
        let leading = e.iter().all(|&x| x == 0);
        let choices: &[i8] = if leading { &[0, 1] } else { &[0, 1, -1] };
        for &s in choices {
            e.push(s);
            let ok = rec(rule, k, e, limit, out);
            e.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    rec(rule, k, &mut Vec::with_capacity(k), limit, &mut out).then_some(out)
}

impl PieceGraph {
    pub fn new(rule: PieceRule, board: Board) -> Result<Self> {
        Self::with_budget(rule, board, MemoryBudget::default())
    }

    pub fn with_budget(rule: PieceRule, board: Board, budget: MemoryBudget) -> Result<Self> {
        rule.check_board(&board)?;
        let bound = 2 * u64::from(board.n()) * u64::from(board.k());
        if bound >= u64::from(UNREACHED) {
            return Err(Error::ComputationInfeasible(format!(
                "{board}: distances may exceed the 16-bit field range"
            )));
        }
        let v = board.vertex_count() as u64;
        // Distance field plus BFS queue.
        budget.check("distance field", v * 6)?;
        let strides = board.strides();
        let degree_hint = {
            let center = board.center();
            let mut deg = 0usize;
            rule.for_each_neighbor(&board, &strides, center.coords(), &mut |_| deg += 1);
            deg
        };
        let mut graph = PieceGraph {
            rule,
            board,
            budget,
            strides,
            degree_hint,
            lines: None,
            csr: OnceLock::new(),
        };
        if rule.id.is_slider() && board.n() > 1 {
            graph.lines = graph.build_lines();
        }
        Ok(graph)
    }

    pub fn rule(&self) -> PieceRule {
        self.rule
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn budget(&self) -> MemoryBudget {
        self.budget
    }

    pub fn vertex_count(&self) -> usize {
        self.board.vertex_count()
    }

    /// Degree of the centre vertex, used as the typical degree.
    pub fn degree_hint(&self) -> usize {
        self.degree_hint
    }

    fn build_lines(&self) -> Option<LineIndex> {
        let v = self.vertex_count();
        let k = self.board.k() as usize;
        let n = self.board.n();
        // Lines only pay off when there are fewer directions than neighbours.
        let limit = self.degree_hint.max(1);
        let dirs = slider_directions(&self.rule, k, limit)?;
        let entries = (v as u64).checked_mul(dirs.len() as u64)?;
        if entries >= u64::from(NO_LINE) || self.budget.check("line index", entries * 12).is_err() {
            return None;
        }
        let mut line_of = vec![NO_LINE; entries as usize];
        let mut offsets = vec![0usize];
        let mut members: Vec<u32> = Vec::new();
        let mut coords = vec![0u32; k];
        for (d, (e, step)) in dirs.iter().enumerate() {
            let step = *step;
            let off: i64 = e
                .iter()
                .zip(&self.strides)
                .map(|(&ej, &s)| i64::from(ej) * s as i64 * i64::from(step))
                .sum();
            let row = &mut line_of[d * v..(d + 1) * v];
            for start in 0..v {
                self.board.decode_into(start, &mut coords);
                // `start` begins a line iff stepping backwards leaves the board.
                let mut begins = false;
                let mut len = u32::MAX;
                for (j, &ej) in e.iter().enumerate() {
                    let x = coords[j];
                    match ej {
                        1 => {
                            begins |= x < step;
                            len = len.min((n - 1 - x) / step);
                        }
                        -1 => {
                            begins |= x + step >= n;
                            len = len.min(x / step);
                        }
                        _ => {}
                    }
                }
                if !begins || len == 0 {
                    continue;
                }
                let id = (offsets.len() - 1) as u32;
                let mut cur = start as i64;
                for _ in 0..=len {
                    members.push(cur as u32);
                    row[cur as usize] = id;
                    cur += off;
                }
                offsets.push(members.len());
            }
        }
        Some(LineIndex {
            dirs: dirs.len(),
            line_of,
            offsets,
            members,
        })
    }

    fn csr(&self) -> Option<&Csr> {
        self.csr
            .get_or_init(|| {
                let v = self.vertex_count();
                let est = v as u64 * self.degree_hint.max(1) as u64;
                if est >= u64::from(u32::MAX) || self.budget.check("adjacency", est * 4 + v as u64 * 8).is_err() {
                    return None;
                }
                let mut offsets = Vec::with_capacity(v + 1);
                let mut adj: Vec<u32> = Vec::with_capacity(est as usize);
                let mut coords = vec![0u32; self.board.k() as usize];
                offsets.push(0);
                for u in 0..v {
                    self.board.decode_into(u, &mut coords);
                    self.rule
                        .for_each_neighbor(&self.board, &self.strides, &coords, &mut |w| {
                            adj.push(w as u32)
                        });
                    offsets.push(adj.len());
                }
                Some(Csr { offsets, adj })
            })
            .as_ref()
    }

    /// Forces construction of the adjacency list, if it fits the budget.
    pub fn prepare_all_sources(&self) {
        if self.lines.is_none() {
            let _ = self.csr();
        }
    }

    /// Single-source BFS; `UNREACHED` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<u16> {
        let v = self.vertex_count();
        let mut dist = vec![UNREACHED; v];
        let mut queue: Vec<u32> = Vec::with_capacity(v.min(1 << 16));
        dist[source] = 0;
        queue.push(source as u32);
        if let Some(lines) = &self.lines {
            let mut expanded = vec![false; lines.line_count()];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head] as usize;
                head += 1;
                let du = dist[u] + 1;
                for d in 0..lines.dirs {
                    let l = lines.line_of[d * v + u];
                    if l == NO_LINE || expanded[l as usize] {
                        continue;
                    }
                    expanded[l as usize] = true;
                    for &w in lines.members(l) {
                        if dist[w as usize] == UNREACHED {
                            dist[w as usize] = du;
                            queue.push(w);
                        }
                    }
                }
            }
            return dist;
        }
        if let Some(csr) = self.csr.get().and_then(Option::as_ref) {
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head] as usize;
                head += 1;
                let du = dist[u] + 1;
                for &w in csr.row(u) {
                    if dist[w as usize] == UNREACHED {
                        dist[w as usize] = du;
                        queue.push(w);
                    }
                }
            }
            return dist;
        }
        self.bfs_implicit(&mut dist, queue);
        dist
    }

    /// Level-synchronous BFS on generated moves. When few vertices remain
    /// unvisited relative to the typical degree, a frontier vertex scans the
    /// unvisited list with the O(k) move test instead of generating moves.
    fn bfs_implicit(&self, dist: &mut [u16], mut frontier: Vec<u32>) {
        let v = dist.len();
        let k = self.board.k() as usize;
        let mut cu = vec![0u32; k];
        let mut cw = vec![0u32; k];
        let mut visited = frontier.len();
        let mut unvisited: Option<Vec<u32>> = None;
        let mut next: Vec<u32> = Vec::new();
        let mut level: u16 = 0;
        while !frontier.is_empty() {
            level += 1;
            let remaining = v - visited;
            if unvisited.is_none() && remaining.saturating_mul(k) < self.degree_hint {
                unvisited = Some((0..v as u32).filter(|&w| dist[w as usize] == UNREACHED).collect());
            }
            for &u in &frontier {
                self.board.decode_into(u as usize, &mut cu);
                match unvisited.as_mut() {
                    Some(list) => {
                        for &w in list.iter() {
                            if dist[w as usize] != UNREACHED {
                                continue;
                            }
                            self.board.decode_into(w as usize, &mut cw);
                            if self.rule.is_move_coords(&cu, &cw) {
                                dist[w as usize] = level;
                                next.push(w);
                            }
                        }
                        list.retain(|&w| dist[w as usize] == UNREACHED);
                    }
                    None => {
                        self.rule
                            .for_each_neighbor(&self.board, &self.strides, &cu, &mut |w| {
                                if dist[w] == UNREACHED {
                                    dist[w] = level;
                                    next.push(w as u32);
                                }
                            });
                    }
                }
            }
            visited += next.len();
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
    }

    /// Eccentricities of `sources` (`UNREACHED` when some vertex cannot be
    /// reached). Undirected rules only. Results are in source order and do
    /// not depend on the worker count.
    pub fn eccentricities(&self, sources: &[u32]) -> Result<Vec<u16>> {
        debug_assert!(!self.rule.directed());
        let v = self.vertex_count() as u64;
        let workers = rayon::current_num_threads().max(1) as u64;
        let batches = (sources.len() as u64).div_ceil(64).max(1);
        self.budget
            .check("multi-source BFS", v * 24 * workers.min(batches))?;
        self.prepare_all_sources();
        let per_batch: Vec<Vec<u16>> = sources
            .par_chunks(64)
            .map(|chunk| self.batch_eccentricities(chunk))
            .collect();
        Ok(per_batch.into_iter().flatten().collect())
    }

    /// One batch of up to 64 sources. Each level either sweeps every vertex
    /// (dense) or touches only the active frontier and its neighbours
    /// (sparse), whichever is cheaper; `next` is all-zero between levels.
    fn batch_eccentricities(&self, sources: &[u32]) -> Vec<u16> {
        let v = self.vertex_count();
        let width = sources.len();
        let full: u64 = if width == 64 { !0 } else { (1u64 << width) - 1 };
        let mut visited = vec![0u64; v];
        let mut frontier = vec![0u64; v];
        let mut next = vec![0u64; v];
        let mut active: Vec<u32> = Vec::new();
        let mut touched: Vec<u32> = Vec::new();
        let mut complete = 0usize;
        for (i, &s) in sources.iter().enumerate() {
            let s = s as usize;
            if frontier[s] == 0 {
                active.push(s as u32);
            }
            visited[s] |= 1 << i;
            frontier[s] |= 1 << i;
            if visited[s] == full {
                complete += 1;
            }
        }
        let mut line_acc: Vec<u64> = match &self.lines {
            Some(lines) => vec![0; lines.line_count()],
            None => Vec::new(),
        };
        let mut touched_lines: Vec<u32> = Vec::new();
        let mut ecc = vec![0u16; width];
        let mut level: u16 = 0;
        let csr = self.csr.get().and_then(Option::as_ref);
        let mut coords = vec![0u32; self.board.k() as usize];
        loop {
            level += 1;
            // Dense sweeps write `next` without recording touches.
            let mut swept = false;
            touched.clear();
            let mark = |w: usize, f: u64, next: &mut [u64], touched: &mut Vec<u32>| {
                if next[w] == 0 {
                    touched.push(w as u32);
                }
                next[w] |= f;
            };
            if let Some(lines) = &self.lines {
                if active.len() * 8 >= v {
                    swept = true;
                    for l in 0..lines.line_count() as u32 {
                        let m = lines.members(l);
                        let acc = m.iter().fold(0u64, |a, &w| a | frontier[w as usize]);
                        if acc != 0 {
                            for &w in m {
                                next[w as usize] |= acc;
                            }
                        }
                    }
                } else {
                    for &u in &active {
                        let f = frontier[u as usize];
                        for d in 0..lines.dirs {
                            let l = lines.line_of[d * v + u as usize];
                            if l == NO_LINE {
                                continue;
                            }
                            if line_acc[l as usize] == 0 {
                                touched_lines.push(l);
                            }
                            line_acc[l as usize] |= f;
                        }
                    }
                    for &l in &touched_lines {
                        let acc = std::mem::take(&mut line_acc[l as usize]);
                        for &w in lines.members(l) {
                            mark(w as usize, acc, &mut next, &mut touched);
                        }
                    }
                    touched_lines.clear();
                }
            } else if let Some(csr) = csr {
                if active.len() * 4 >= v - complete {
                    swept = true;
                    // Pull: each incomplete vertex gathers from its neighbours.
                    for u in 0..v {
                        let miss = full & !visited[u];
                        if miss == 0 {
                            continue;
                        }
                        let mut acc = 0u64;
                        for &w in csr.row(u) {
                            acc |= frontier[w as usize];
                            if acc & miss == miss {
                                break;
                            }
                        }
                        next[u] = acc;
                    }
                } else {
                    for &u in &active {
                        let f = frontier[u as usize];
                        for &w in csr.row(u as usize) {
                            mark(w as usize, f, &mut next, &mut touched);
                        }
                    }
                }
            } else {
                for &u in &active {
                    let f = frontier[u as usize];
                    self.board.decode_into(u as usize, &mut coords);
                    self.rule
                        .for_each_neighbor(&self.board, &self.strides, &coords, &mut |w| {
                            mark(w, f, &mut next, &mut touched)
                        });
                }
            }
            for &u in &active {
                frontier[u as usize] = 0;
            }
            active.clear();
            let mut fresh_any = 0u64;
            let mut commit = |w: usize| {
                let fresh = std::mem::take(&mut next[w]) & !visited[w];
                if fresh != 0 {
                    visited[w] |= fresh;
                    frontier[w] = fresh;
                    active.push(w as u32);
                    fresh_any |= fresh;
                    if visited[w] == full {
                        complete += 1;
                    }
                }
            };
            if swept {
                (0..v).for_each(&mut commit);
            } else {
                touched.iter().for_each(|&w| commit(w as usize));
            }
            if fresh_any == 0 {
                break;
            }
            let mut bits = fresh_any;
            while bits != 0 {
                ecc[bits.trailing_zeros() as usize] = level;
                bits &= bits - 1;
            }
        }
        let reached_all = visited.iter().fold(full, |a, &s| a & s);
        for (i, e) in ecc.iter_mut().enumerate() {
            if reached_all >> i & 1 == 0 {
                *e = UNREACHED;
            }
        }
        ecc
    }

    /// Vertices that can reach `target`, by scanning all vertices with the
    /// move test (directed rules only need this for connectivity).
    pub(crate) fn reverse_bfs(&self, target: usize) -> Vec<u16> {
        let v = self.vertex_count();
        let k = self.board.k() as usize;
        let mut dist = vec![UNREACHED; v];
        dist[target] = 0;
        let mut frontier = vec![target as u32];
        let mut cu = vec![0u32; k];
        let mut cw = vec![0u32; k];
        let mut level = 0u16;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for w in 0..v {
                if dist[w] != UNREACHED {
                    continue;
                }
                self.board.decode_into(w, &mut cw);
                for &u in &frontier {
                    self.board.decode_into(u as usize, &mut cu);
                    if self.rule.is_move_coords(&cw, &cu) {
                        dist[w] = level;
                        next.push(w as u32);
                        break;
                    }
                }
            }
            frontier = next;
        }
        dist
    }
}
