//! Loop-free undirected graphs on `0..n` with packed bit-row adjacency.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Which group-derived relation produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Commuting,
    Coprime,
    OrderSum,
    NonInverse,
}

impl GraphKind {
    pub const ALL: [GraphKind; 4] =
        [GraphKind::Commuting, GraphKind::Coprime, GraphKind::OrderSum, GraphKind::NonInverse];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Commuting => "commuting",
            GraphKind::Coprime => "coprime",
            GraphKind::OrderSum => "ordersum",
            GraphKind::NonInverse => "noninverse",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown graph kind '{s}' (expected commuting, coprime, ordersum or noninverse)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<FixedBitSet>,
    edges: Vec<(usize, usize)>,
    kind: Option<GraphKind>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self { n, rows: vec![FixedBitSet::with_capacity(n); n], edges: Vec::new(), kind: None }
    }

    /// Adds `{i, j}` for every `i < j` where `adjacent(i, j)` is true.
    pub fn from_relation(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.rows[i].insert(j);
                    g.rows[j].insert(i);
                    g.edges.push((i, j));
                }
            }
        }
        g
    }

    /// Duplicate pairs collapse; loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        g.rebuild_edge_list();
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Self::from_relation(n, |_, _| true)
    }

    /// `K_{1, n-1}` centered at 0.
    pub fn star(n: usize) -> Self {
        Self::from_relation(n, |i, _| i == 0)
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_relation(n, |i, j| j == i + 1 || (i == 0 && j == n - 1 && n > 2))
    }

    pub fn path(n: usize) -> Self {
        Self::from_relation(n, |i, j| j == i + 1)
    }

    pub fn with_kind(mut self, kind: GraphKind) -> Self {
        self.kind = Some(kind);
        self
    }

    fn rebuild_edge_list(&mut self) {
        self.edges = (0..self.n).flat_map(|i| self.rows[i].ones().filter(move |&j| j > i).map(move |j| (i, j))).collect();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Option<GraphKind> {
        self.kind
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u].ones()
    }

    pub fn neighbor_row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Returns a copy without `{u, v}`; `self` is untouched.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<SimpleGraph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeNotPresent(u, v));
        }
        let mut g = self.clone();
        g.rows[u].set(v, false);
        g.rows[v].set(u, false);
        let key = (u.min(v), u.max(v));
        let pos = g.edges.binary_search(&key).expect("edge list mirrors adjacency");
        g.edges.remove(pos);
        Ok(g)
    }

    /// Returns a copy with `{u, v}` added (no-op if already present).
    pub fn add_edge(&self, u: usize, v: usize) -> Result<SimpleGraph, GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        let mut g = self.clone();
        let key = (u.min(v), u.max(v));
        if let Err(pos) = g.edges.binary_search(&key) {
            g.rows[u].insert(v);
            g.rows[v].insert(u);
            g.edges.insert(pos, key);
        }
        Ok(g)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for w in self.rows[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut frontier = FixedBitSet::with_capacity(self.n);
        seen.insert(0);
        frontier.insert(0);
        while !frontier.is_clear() {
            let mut next = FixedBitSet::with_capacity(self.n);
            for u in frontier.ones() {
                next.union_with(&self.rows[u]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.count_ones(..) == self.n
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn to_dot(&self, orders: Option<&[u64]>) -> String {
        let mut out = String::from("graph G {\n");
        if let Some(kind) = self.kind {
            let _ = writeln!(out, "  label=\"{kind}\";");
        }
        for v in 0..self.n {
            match orders {
                Some(o) => {
                    let _ = writeln!(out, "  {v} [label=\"{v} (o={})\"];", o[v]);
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v\n");
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u},{v}");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphShape {
    pub n: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub is_complete: bool,
    pub is_star: bool,
    pub star_center: Option<usize>,
    pub dominating_vertices: Vec<usize>,
    pub is_connected: bool,
    pub diameter: Diameter,
    /// Degree of each vertex, indexed by vertex.
    pub degree_sequence: Vec<usize>,
}

pub fn shape_profile(g: &SimpleGraph) -> GraphShape {
    let n = g.n();
    let degrees = g.degrees();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let dominating_vertices: Vec<usize> = (0..n).filter(|&v| degrees[v] + 1 == n).collect();
    let is_connected = g.is_connected();
    let diameter = if !is_connected {
        Diameter::Infinite
    } else {
        Diameter::Finite((0..n).flat_map(|s| g.distances_from(s)).map(|d| d.unwrap_or(0)).max().unwrap_or(0))
    };
    let is_star = n >= 2 && g.edge_count() == n - 1 && !dominating_vertices.is_empty();
    GraphShape {
        n,
        edge_count: g.edge_count(),
        min_degree,
        max_degree,
        is_regular: min_degree == max_degree,
        is_complete: g.is_complete(),
        is_star,
        star_center: if is_star { dominating_vertices.first().copied() } else { None },
        dominating_vertices,
        is_connected,
        diameter,
        degree_sequence: degrees,
    }
}
