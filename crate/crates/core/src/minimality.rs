//! Minimal edge connectivity and minimal connectivity, decided by deleting
//! every edge in turn and recomputing the invariant from scratch.

use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::graph::{shape_profile, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// kappa'
    Edge,
    /// kappa
    Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub measure: Measure,
    /// Connected with at least two vertices.
    pub applicable: bool,
    pub base_value: usize,
    pub holds: bool,
    /// Edges whose deletion does not lower the measure by exactly one, in
    /// canonical edge order.
    pub violating_edges: Vec<(usize, usize)>,
    /// Measure of `G - e` for every edge `e`, in canonical edge order.
    pub per_edge_values: Vec<((usize, usize), usize)>,
}

/// Runs the deletion sweep with an arbitrary connectivity function, so the
/// flow kernels and the brute-force oracles share one sweep definition.
pub fn minimality_sweep<F>(g: &SimpleGraph, measure: Measure, value_of: F) -> MinimalityVerdict
where
    F: Fn(&SimpleGraph) -> usize + Sync,
{
    let applicable = g.n() >= 2 && g.is_connected();
    let base_value = value_of(g);
    let per_edge_values: Vec<((usize, usize), usize)> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| {
            let smaller = g.delete_edge(u, v).expect("edge taken from edge list");
            ((u, v), value_of(&smaller))
        })
        .collect();
    let violating_edges: Vec<(usize, usize)> = per_edge_values
        .iter()
        .filter(|&&(_, value)| value + 1 != base_value)
        .map(|&(edge, _)| edge)
        .collect();
    MinimalityVerdict {
        measure,
        applicable,
        base_value,
        holds: applicable && violating_edges.is_empty(),
        violating_edges,
        per_edge_values,
    }
}

pub fn is_minimally_edge_connected(g: &SimpleGraph) -> MinimalityVerdict {
    minimality_sweep(g, Measure::Edge, edge_connectivity)
}

pub fn is_minimally_connected(g: &SimpleGraph) -> MinimalityVerdict {
    minimality_sweep(g, Measure::Vertex, vertex_connectivity)
}

/// Outcome of the unique-dominating-vertex test for minimal edge
/// connectivity of a non-complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DominatingCriterion {
    /// Complete, or no vertex is adjacent to all others.
    NotApplicable,
    Applies {
        answer: bool,
        unique_dominating: bool,
        /// `G - x` is regular, `x` the lowest-indexed dominating vertex.
        rest_regular: bool,
    },
}

pub fn dominating_vertex_criterion(g: &SimpleGraph) -> DominatingCriterion {
    let shape = shape_profile(g);
    let Some(&x) = shape.dominating_vertices.first() else {
        return DominatingCriterion::NotApplicable;
    };
    if shape.is_complete {
        return DominatingCriterion::NotApplicable;
    }
    // every other vertex loses exactly its edge to x
    let mut rest = (0..g.n()).filter(|&v| v != x).map(|v| shape.degree_sequence[v] - 1);
    let first = rest.next();
    let rest_regular = rest.all(|d| Some(d) == first);
    let unique_dominating = shape.dominating_vertices.len() == 1;
    DominatingCriterion::Applies { answer: unique_dominating && rest_regular, unique_dominating, rest_regular }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{commuting_graph, coprime_graph, non_inverse_graph, order_sum_graph};
    use crate::connectivity::{edge_connectivity_oracle, vertex_connectivity_oracle};
    use crate::group::{build_family, FamilySpec, FiniteGroup};
    use proptest::prelude::*;

    fn group(s: &str) -> FiniteGroup {
        build_family(&s.parse::<FamilySpec>().unwrap(), 200).unwrap()
    }

    fn oracle_edge(g: &SimpleGraph) -> MinimalityVerdict {
        minimality_sweep(g, Measure::Edge, |h| edge_connectivity_oracle(h).unwrap())
    }

    fn oracle_vertex(g: &SimpleGraph) -> MinimalityVerdict {
        minimality_sweep(g, Measure::Vertex, |h| vertex_connectivity_oracle(h).unwrap())
    }

    #[test]
    fn complete_and_star_graphs_are_minimal() {
        for n in 2..8 {
            for g in [SimpleGraph::complete(n), SimpleGraph::star(n)] {
                assert!(is_minimally_edge_connected(&g).holds);
                assert!(is_minimally_connected(&g).holds);
            }
        }
        let k4 = is_minimally_connected(&SimpleGraph::complete(4));
        assert_eq!(k4.base_value, 3);
        assert!(k4.per_edge_values.iter().all(|&(_, v)| v == 2));
        let star = is_minimally_connected(&SimpleGraph::star(6));
        assert_eq!(star.base_value, 1);
        assert!(star.per_edge_values.iter().all(|&(_, v)| v == 0));
    }

    #[test]
    fn commuting_dihedral_three_is_not_minimal() {
        let g = commuting_graph(&group("dihedral:3"));
        let flow = is_minimally_edge_connected(&g);
        let oracle = oracle_edge(&g);
        assert_eq!(flow, oracle);
        assert!(!flow.holds);
        // {r, r^2} keeps kappa' = 1; so do {e, r} and {e, r^2}
        assert!(flow.violating_edges.contains(&(1, 2)));
        assert_eq!(flow.violating_edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn non_inverse_cyclic_five_is_minimal() {
        let g = non_inverse_graph(&group("cyclic:5"));
        let v = oracle_edge(&g);
        assert!(v.holds);
        assert_eq!(v.base_value, 3);
        assert!(v.per_edge_values.iter().all(|&(_, x)| x == 2));
        assert_eq!(is_minimally_edge_connected(&g), v);
    }

    #[test]
    fn order_sum_cyclic_four_is_not_minimally_connected() {
        let g = order_sum_graph(&group("cyclic:4"));
        let v = oracle_vertex(&g);
        assert!(!v.holds);
        assert_eq!(v.base_value, 2);
        assert_eq!(v.violating_edges, vec![(1, 3)]);
        assert_eq!(is_minimally_connected(&g), v);
        // the remnant is the 4-cycle e - a - a^2 - a^3 - e
        assert_eq!(g.delete_edge(1, 3).unwrap().degrees(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn not_applicable_cases() {
        for g in [SimpleGraph::empty(1), SimpleGraph::empty(4)] {
            let v = is_minimally_edge_connected(&g);
            assert!(!v.applicable && !v.holds);
            assert!(!is_minimally_connected(&g).holds);
        }
        let disconnected = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_minimally_edge_connected(&disconnected).applicable);
    }

    #[test]
    fn criterion_examples() {
        let cp9 = coprime_graph(&group("cyclic:9"));
        assert_eq!(
            dominating_vertex_criterion(&cp9),
            DominatingCriterion::Applies { answer: true, unique_dominating: true, rest_regular: true }
        );
        let os6 = order_sum_graph(&group("cyclic:6"));
        assert!(matches!(
            dominating_vertex_criterion(&os6),
            DominatingCriterion::Applies { answer: false, unique_dominating: false, .. }
        ));
        let cp6 = coprime_graph(&group("cyclic:6"));
        assert_eq!(
            dominating_vertex_criterion(&cp6),
            DominatingCriterion::Applies { answer: false, unique_dominating: true, rest_regular: false }
        );
        assert_eq!(dominating_vertex_criterion(&SimpleGraph::complete(5)), DominatingCriterion::NotApplicable);
        assert_eq!(dominating_vertex_criterion(&SimpleGraph::cycle(5)), DominatingCriterion::NotApplicable);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                SimpleGraph::from_relation(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn sweep_values_stay_within_one(g in arb_graph(9)) {
            for v in [is_minimally_edge_connected(&g), is_minimally_connected(&g)] {
                for &(_, x) in &v.per_edge_values {
                    prop_assert!(x == v.base_value || x + 1 == v.base_value);
                }
                prop_assert_eq!(v.holds, v.applicable && v.violating_edges.is_empty());
            }
        }

        #[test]
        fn criterion_agrees_with_sweep(g in arb_graph(9)) {
            if let DominatingCriterion::Applies { answer, .. } = dominating_vertex_criterion(&g) {
                prop_assert_eq!(answer, is_minimally_edge_connected(&g).holds);
            }
        }

        #[test]
        fn criterion_agrees_on_dominated_graphs(mut g in arb_graph(9)) {
            // force vertex 0 to dominate so the criterion always applies
            for v in 1..g.n() {
                g = g.add_edge(0, v).unwrap();
            }
            if let DominatingCriterion::Applies { answer, .. } = dominating_vertex_criterion(&g) {
                prop_assert_eq!(answer, is_minimally_edge_connected(&g).holds);
            }
        }
    }
}
