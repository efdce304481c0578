//! Cached per-group computations shared by claim evaluation and the
//! invariant suite. Sweeps and oracle runs are computed on first use.

use std::sync::OnceLock;

use serde::Serialize;

use crate::builders::build_graph;
use crate::connectivity::{
    connectivity_values, edge_connectivity_oracle, vertex_connectivity_oracle, ConnectivityValues,
    VERTEX_ORACLE_MAX_N,
};
use crate::graph::{shape_profile, GraphKind, GraphShape, SimpleGraph};
use crate::group::{profile, FiniteGroup, GroupProfile};
use crate::minimality::{
    dominating_vertex_criterion, is_minimally_connected, is_minimally_edge_connected, minimality_sweep,
    DominatingCriterion, Measure, MinimalityVerdict,
};

/// Brute-force counterparts of the flow results; only computed for graphs
/// small enough for both oracles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub kappa_edge: usize,
    pub kappa_vertex: usize,
    pub edge_sweep: MinimalityVerdict,
    pub vertex_sweep: MinimalityVerdict,
}

#[derive(Debug)]
pub struct GraphAnalysis {
    pub graph: SimpleGraph,
    pub shape: GraphShape,
    pub values: ConnectivityValues,
    pub criterion: DominatingCriterion,
    edge_sweep: OnceLock<MinimalityVerdict>,
    vertex_sweep: OnceLock<MinimalityVerdict>,
    oracle: OnceLock<Option<OracleCheck>>,
}

impl GraphAnalysis {
    pub fn new(graph: SimpleGraph) -> Self {
        Self {
            shape: shape_profile(&graph),
            values: connectivity_values(&graph),
            criterion: dominating_vertex_criterion(&graph),
            graph,
            edge_sweep: OnceLock::new(),
            vertex_sweep: OnceLock::new(),
            oracle: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> Option<GraphKind> {
        self.graph.kind()
    }

    pub fn edge_sweep(&self) -> &MinimalityVerdict {
        self.edge_sweep.get_or_init(|| is_minimally_edge_connected(&self.graph))
    }

    pub fn vertex_sweep(&self) -> &MinimalityVerdict {
        self.vertex_sweep.get_or_init(|| is_minimally_connected(&self.graph))
    }

    pub fn oracle(&self) -> Option<&OracleCheck> {
        self.oracle
            .get_or_init(|| {
                if self.graph.n() > VERTEX_ORACLE_MAX_N {
                    return None;
                }
                let edge = |g: &SimpleGraph| edge_connectivity_oracle(g).expect("within guard");
                let vertex = |g: &SimpleGraph| vertex_connectivity_oracle(g).expect("within guard");
                Some(OracleCheck {
                    kappa_edge: edge(&self.graph),
                    kappa_vertex: vertex(&self.graph),
                    edge_sweep: minimality_sweep(&self.graph, Measure::Edge, edge),
                    vertex_sweep: minimality_sweep(&self.graph, Measure::Vertex, vertex),
                })
            })
            .as_ref()
    }
}

#[derive(Debug)]
pub struct GroupAnalysis {
    pub label: String,
    pub group: FiniteGroup,
    pub profile: GroupProfile,
    /// Indexed in [`GraphKind::ALL`] order.
    pub graphs: Vec<GraphAnalysis>,
}

impl GroupAnalysis {
    pub fn new(group: FiniteGroup) -> Self {
        let graphs = GraphKind::ALL.iter().map(|&k| GraphAnalysis::new(build_graph(&group, k))).collect();
        Self { label: group.label().to_string(), profile: profile(&group), group, graphs }
    }

    pub fn graph(&self, kind: GraphKind) -> &GraphAnalysis {
        &self.graphs[GraphKind::ALL.iter().position(|&k| k == kind).expect("all kinds built")]
    }
}
