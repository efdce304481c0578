//! The four group-derived graphs. Vertex `i` is group element `x_i`.

use crate::graph::{GraphKind, SimpleGraph};
use crate::group::{gcd, FiniteGroup};

/// `x ~ y` iff `xy = yx`.
pub fn commuting_graph(g: &FiniteGroup) -> SimpleGraph {
    SimpleGraph::from_relation(g.order(), |i, j| g.commutes(i, j)).with_kind(GraphKind::Commuting)
}

/// `x ~ y` iff `gcd(o(x), o(y)) = 1`.
pub fn coprime_graph(g: &FiniteGroup) -> SimpleGraph {
    let o = g.element_orders();
    SimpleGraph::from_relation(g.order(), |i, j| gcd(o[i], o[j]) == 1).with_kind(GraphKind::Coprime)
}

/// `x ~ y` iff `o(x) + o(y) > |G|` (strict).
pub fn order_sum_graph(g: &FiniteGroup) -> SimpleGraph {
    let o = g.element_orders();
    let n = g.order() as u64;
    SimpleGraph::from_relation(g.order(), |i, j| o[i] + o[j] > n).with_kind(GraphKind::OrderSum)
}

/// `x ~ y` iff `y != x^-1`.
pub fn non_inverse_graph(g: &FiniteGroup) -> SimpleGraph {
    let inv = g.inverses();
    SimpleGraph::from_relation(g.order(), |i, j| inv[i] != j).with_kind(GraphKind::NonInverse)
}

pub fn build_graph(g: &FiniteGroup, kind: GraphKind) -> SimpleGraph {
    match kind {
        GraphKind::Commuting => commuting_graph(g),
        GraphKind::Coprime => coprime_graph(g),
        GraphKind::OrderSum => order_sum_graph(g),
        GraphKind::NonInverse => non_inverse_graph(g),
    }
}
