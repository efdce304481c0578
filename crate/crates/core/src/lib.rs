//! Finite groups, the commuting, co-prime, order-sum and non-inverse graphs
//! built on them, exact connectivity via max-flow, and a suite that checks
//! classification statements about minimal (edge) connectivity across a
//! corpus of groups.

#![forbid(unsafe_code)]

pub mod builders;
pub mod connectivity;
pub mod graph;
pub mod group;
pub mod minimality;
pub mod oracle_harness;
pub mod theorem_suite;

pub use builders::{build_graph, commuting_graph, coprime_graph, non_inverse_graph, order_sum_graph};
pub use connectivity::{
    connectivity_values, edge_connectivity, edge_connectivity_oracle, vertex_connectivity,
    vertex_connectivity_oracle, ConnectivityValues,
};
pub use graph::{shape_profile, Diameter, GraphKind, GraphShape, SimpleGraph};
pub use group::{build_family, profile, FamilySpec, FiniteGroup, GroupError, GroupProfile};
pub use minimality::{
    dominating_vertex_criterion, is_minimally_connected, is_minimally_edge_connected, DominatingCriterion,
    MinimalityVerdict,
};
