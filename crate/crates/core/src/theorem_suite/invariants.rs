use serde::Serialize;

use super::analysis::{GraphAnalysis, GroupAnalysis};
use crate::minimality::DominatingCriterion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum InvariantId {
    /// kappa <= kappa' <= delta
    Whitney,
    /// diameter <= 2 implies kappa' = delta
    Diam2,
    OracleEdge,
    OracleVertex,
    OracleEdgeSweep,
    OracleVertexSweep,
    /// Every single-edge deletion moves kappa and kappa' by 0 or 1.
    SweepStep,
    /// Dominating-vertex criterion equals the edge sweep verdict.
    DominatingAgreement,
    ClassEquation,
    /// Even-order groups have an odd number of involutions.
    InvolutionParity,
    /// Element orders divide the group order.
    Lagrange,
}

impl InvariantId {
    pub const ALL: [InvariantId; 11] = [
        InvariantId::Whitney,
        InvariantId::Diam2,
        InvariantId::OracleEdge,
        InvariantId::OracleVertex,
        InvariantId::OracleEdgeSweep,
        InvariantId::OracleVertexSweep,
        InvariantId::SweepStep,
        InvariantId::DominatingAgreement,
        InvariantId::ClassEquation,
        InvariantId::InvolutionParity,
        InvariantId::Lagrange,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub id: InvariantId,
    pub status: CheckStatus,
    pub evidence: String,
}

fn check(id: InvariantId, ok: bool, evidence: String) -> InvariantCheck {
    InvariantCheck { id, status: if ok { CheckStatus::Pass } else { CheckStatus::Fail }, evidence }
}

fn skip(id: InvariantId, why: &str) -> InvariantCheck {
    InvariantCheck { id, status: CheckStatus::Skipped, evidence: why.to_string() }
}

/// Pure graph invariants. Oracle checks run only within the oracle guards.
pub fn graph_invariants(a: &GraphAnalysis) -> Vec<InvariantCheck> {
    let v = a.values;
    let mut out = vec![check(
        InvariantId::Whitney,
        v.kappa_vertex <= v.kappa_edge && v.kappa_edge <= v.min_degree,
        format!("{} <= {} <= {}", v.kappa_vertex, v.kappa_edge, v.min_degree),
    )];

    out.push(if a.shape.is_connected && a.shape.diameter.at_most(2) {
        check(
            InvariantId::Diam2,
            v.kappa_edge == v.min_degree,
            format!("diameter {}, kappa' {}, delta {}", a.shape.diameter, v.kappa_edge, v.min_degree),
        )
    } else if !a.shape.is_connected {
        skip(InvariantId::Diam2, "disconnected")
    } else {
        skip(InvariantId::Diam2, "diameter > 2")
    });

    match a.oracle() {
        Some(o) => {
            out.push(check(
                InvariantId::OracleEdge,
                o.kappa_edge == v.kappa_edge,
                format!("flow {}, oracle {}", v.kappa_edge, o.kappa_edge),
            ));
            out.push(check(
                InvariantId::OracleVertex,
                o.kappa_vertex == v.kappa_vertex,
                format!("flow {}, oracle {}", v.kappa_vertex, o.kappa_vertex),
            ));
            out.push(check(
                InvariantId::OracleEdgeSweep,
                &o.edge_sweep == a.edge_sweep(),
                format!("flow holds {}, oracle holds {}", a.edge_sweep().holds, o.edge_sweep.holds),
            ));
            out.push(check(
                InvariantId::OracleVertexSweep,
                &o.vertex_sweep == a.vertex_sweep(),
                format!("flow holds {}, oracle holds {}", a.vertex_sweep().holds, o.vertex_sweep.holds),
            ));
        }
        None => {
            for id in [
                InvariantId::OracleEdge,
                InvariantId::OracleVertex,
                InvariantId::OracleEdgeSweep,
                InvariantId::OracleVertexSweep,
            ] {
                out.push(skip(id, "graph exceeds oracle size limit"));
            }
        }
    }

    let bad_steps: Vec<String> = [a.edge_sweep(), a.vertex_sweep()]
        .into_iter()
        .flat_map(|s| {
            s.per_edge_values
                .iter()
                .filter(move |&&(_, x)| x != s.base_value && x + 1 != s.base_value)
                .map(move |&((u, w), x)| format!("{:?} {{{u},{w}}}: {} -> {x}", s.measure, s.base_value))
        })
        .collect();
    out.push(check(
        InvariantId::SweepStep,
        bad_steps.is_empty(),
        if bad_steps.is_empty() { format!("{} edges", a.graph.edge_count()) } else { bad_steps.join("; ") },
    ));

    out.push(match a.criterion {
        DominatingCriterion::Applies { answer, .. } if a.shape.is_connected => {
            let swept = a.edge_sweep().holds;
            check(InvariantId::DominatingAgreement, answer == swept, format!("criterion {answer}, sweep {swept}"))
        }
        _ => skip(InvariantId::DominatingAgreement, "criterion not applicable"),
    });
    out
}

pub fn group_invariants(g: &GroupAnalysis) -> Vec<InvariantCheck> {
    let ce = g.group.class_equation();
    let n = g.group.order() as u64;
    let non_divisor = g.group.element_orders().iter().position(|&o| !n.is_multiple_of(o));
    vec![
        check(
            InvariantId::ClassEquation,
            ce.holds,
            format!("{} = {} + {:?}", ce.order, ce.center_size, ce.class_sizes),
        ),
        if g.profile.is_even_order {
            check(
                InvariantId::InvolutionParity,
                g.profile.count_order_two % 2 == 1,
                format!("{} elements of order 2", g.profile.count_order_two),
            )
        } else {
            skip(InvariantId::InvolutionParity, "odd order")
        },
        check(
            InvariantId::Lagrange,
            non_divisor.is_none(),
            match non_divisor {
                Some(i) => format!("element {i} has order {}", g.group.element_orders()[i]),
                None => format!("all orders divide {n}"),
            },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{coprime_graph, non_inverse_graph, order_sum_graph};
    use crate::group::{build_family, FamilySpec, FiniteGroup};

    fn group(s: &str) -> FiniteGroup {
        build_family(&s.parse::<FamilySpec>().unwrap(), 200).unwrap()
    }

    fn status(checks: &[InvariantCheck], id: InvariantId) -> CheckStatus {
        checks.iter().find(|c| c.id == id).unwrap().status
    }

    #[test]
    fn coprime_of_cyclic_nine() {
        let checks = graph_invariants(&GraphAnalysis::new(coprime_graph(&group("cyclic:9"))));
        assert_eq!(status(&checks, InvariantId::Whitney), CheckStatus::Pass);
        assert_eq!(checks[0].evidence, "1 <= 1 <= 1");
        assert_eq!(status(&checks, InvariantId::Diam2), CheckStatus::Pass);
        assert!(checks.iter().all(|c| c.status != CheckStatus::Fail));
    }

    #[test]
    fn null_order_sum_graph() {
        let checks = graph_invariants(&GraphAnalysis::new(order_sum_graph(&group("ea:2,2"))));
        assert_eq!(status(&checks, InvariantId::Whitney), CheckStatus::Pass);
        assert_eq!(checks[0].evidence, "0 <= 0 <= 0");
        assert_eq!(status(&checks, InvariantId::Diam2), CheckStatus::Skipped);
    }

    #[test]
    fn non_inverse_cyclic_five_with_oracles() {
        let checks = graph_invariants(&GraphAnalysis::new(non_inverse_graph(&group("cyclic:5"))));
        assert_eq!(checks[0].evidence, "3 <= 3 <= 3");
        for id in [InvariantId::Diam2, InvariantId::OracleEdge, InvariantId::OracleVertex, InvariantId::OracleEdgeSweep]
        {
            assert_eq!(status(&checks, id), CheckStatus::Pass, "{id:?}");
        }
    }

    #[test]
    fn large_graphs_skip_oracles() {
        let checks = graph_invariants(&GraphAnalysis::new(coprime_graph(&group("cyclic:16"))));
        assert_eq!(status(&checks, InvariantId::OracleVertex), CheckStatus::Skipped);
    }

    #[test]
    fn group_level_checks() {
        for s in ["symmetric:4", "dicyclic:3", "cyclic:15"] {
            let checks = group_invariants(&GroupAnalysis::new(group(s)));
            assert!(checks.iter().all(|c| c.status != CheckStatus::Fail), "{s}: {checks:?}");
        }
    }
}
