//! Exact edge and vertex connectivity.
//!
//! Both values come from unit-capacity max-flow (Menger). The `*_oracle`
//! functions are brute-force enumerations kept deliberately separate from
//! the flow code so each can check the other.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::SimpleGraph;

/// Largest graph accepted by [`edge_connectivity_oracle`].
pub const EDGE_ORACLE_MAX_N: usize = 20;
/// Largest graph accepted by [`vertex_connectivity_oracle`].
pub const VERTEX_ORACLE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph on {n} vertices exceeds the oracle limit of {limit}")]
    TooLargeForOracle { n: usize, limit: usize },
}

/// `kappa_vertex <= kappa_edge <= min_degree` always.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityValues {
    pub kappa_edge: usize,
    pub kappa_vertex: usize,
    pub min_degree: usize,
}

pub fn connectivity_values(g: &SimpleGraph) -> ConnectivityValues {
    ConnectivityValues {
        kappa_edge: edge_connectivity(g),
        kappa_vertex: vertex_connectivity(g),
        min_degree: g.min_degree(),
    }
}

/// Residual network with integer capacities, augmented by BFS.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    /// Arc `u -> v` with capacity `forward` and its twin `v -> u` with
    /// capacity `backward`; arc `a` and `a ^ 1` are each other's residual.
    fn add_pair(&mut self, u: usize, v: usize, forward: u32, backward: u32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(forward);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(backward);
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent_arc = vec![usize::MAX; self.head.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent_arc.fill(usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && v != s && parent_arc[v] == usize::MAX {
                        parent_arc[v] = a;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            // unit augmentation is enough: every s-t path has a unit bottleneck
            let mut v = t;
            while v != s {
                let a = parent_arc[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of edge-disjoint `s`-`t` paths, capped at `limit`.
fn local_edge_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNetwork::new(g.n());
    for &(u, v) in g.edges() {
        net.add_pair(u, v, 1, 1);
    }
    net.max_flow(s, t, limit)
}

/// Number of internally vertex-disjoint paths between non-adjacent `s`, `t`,
/// capped at `limit`. Vertex `v` splits into `2v` (in) and `2v + 1` (out).
fn local_vertex_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_pair(2 * v, 2 * v + 1, 1, 0);
    }
    let wide = n as u32;
    for &(u, v) in g.edges() {
        net.add_pair(2 * u + 1, 2 * v, wide, 0);
        net.add_pair(2 * v + 1, 2 * u, wide, 0);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Global minimum edge cut: `min_t maxflow(0, t)`. Zero when disconnected
/// or `n <= 1`.
pub fn edge_connectivity(g: &SimpleGraph) -> usize {
    if g.n() <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for t in 1..g.n() {
        if best == 0 {
            break;
        }
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    best
}

/// Minimum vertex cut. Complete graphs report `n - 1`; disconnected graphs
/// and `n <= 1` report 0.
///
/// Pairs are scanned in lexicographic order with the first vertex restricted
/// to the leading `best + 1` indices: some vertex among them lies outside any
/// minimum separator, and every vertex on the far side of that separator has
/// a larger index.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Minimum number of crossing edges over all proper bipartitions with vertex
/// 0 on the left.
pub fn edge_connectivity_oracle(g: &SimpleGraph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > EDGE_ORACLE_MAX_N {
        return Err(OracleError::TooLargeForOracle { n, limit: EDGE_ORACLE_MAX_N });
    }
    if n <= 1 {
        return Ok(0);
    }
    let rows = adjacency_masks(g);
    let full: u32 = (1 << n) - 1;
    let mut best = usize::MAX;
    // `right` ranges over non-empty subsets of {1, .., n-1}
    let mut right: u32 = 2;
    while right <= full {
        let crossing: u32 = (0..n).filter(|v| right & (1 << v) == 0).map(|v| (rows[v] & right).count_ones()).sum();
        best = best.min(crossing as usize);
        right += 2;
    }
    Ok(best)
}

/// Smallest `|S|` such that removing `S` leaves a disconnected graph or a
/// single vertex, by exhaustive search over subsets of increasing size.
pub fn vertex_connectivity_oracle(g: &SimpleGraph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > VERTEX_ORACLE_MAX_N {
        return Err(OracleError::TooLargeForOracle { n, limit: VERTEX_ORACLE_MAX_N });
    }
    if n <= 1 {
        return Ok(0);
    }
    let rows = adjacency_masks(g);
    let all: u32 = (1 << n) - 1;
    for size in 0..n {
        for removed in 0..=all {
            if removed.count_ones() as usize != size {
                continue;
            }
            let remaining = all & !removed;
            if remaining.count_ones() <= 1 || !mask_connected(&rows, remaining) {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

fn adjacency_masks(g: &SimpleGraph) -> Vec<u32> {
    (0..g.n()).map(|u| g.neighbors(u).fold(0u32, |m, v| m | (1 << v))).collect()
}

fn mask_connected(rows: &[u32], vertices: u32) -> bool {
    let start = vertices & vertices.wrapping_neg();
    let mut seen = start;
    let mut stack = vec![start.trailing_zeros() as usize];
    while let Some(u) = stack.pop() {
        let mut fresh = rows[u] & vertices & !seen;
        seen |= fresh;
        while fresh != 0 {
            stack.push(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    seen == vertices
}
