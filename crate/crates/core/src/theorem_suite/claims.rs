use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::analysis::{GraphAnalysis, GroupAnalysis};
use super::registry::{ClaimId, Scope, Subject};
use crate::graph::GraphKind;
use crate::minimality::{DominatingCriterion, MinimalityVerdict};

/// Outcome of one claim on one group (and, for pure graph claims, one of
/// its four graphs).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub group_label: String,
    pub graph: Option<GraphKind>,
    pub lhs: Option<bool>,
    pub rhs: Option<bool>,
    pub consistent: Option<bool>,
    pub skipped: Option<String>,
    pub details: BTreeMap<String, Value>,
}

impl ClaimVerdict {
    pub fn is_inconsistent(&self) -> bool {
        self.consistent == Some(false)
    }
}

struct Evaluation {
    lhs: bool,
    rhs: bool,
    details: BTreeMap<String, Value>,
}

fn base_details(a: &GraphAnalysis) -> BTreeMap<String, Value> {
    let mut d = BTreeMap::new();
    d.insert("n".into(), json!(a.graph.n()));
    d.insert("edges".into(), json!(a.graph.edge_count()));
    d.insert("min_degree".into(), json!(a.values.min_degree));
    d.insert("kappa".into(), json!(a.values.kappa_vertex));
    d.insert("kappa_edge".into(), json!(a.values.kappa_edge));
    d.insert("diameter".into(), json!(a.shape.diameter));
    d
}

fn sweep_details(d: &mut BTreeMap<String, Value>, prefix: &str, v: &MinimalityVerdict, oracle: Option<&MinimalityVerdict>) {
    d.insert(format!("{prefix}_applicable"), json!(v.applicable));
    d.insert(format!("{prefix}_base"), json!(v.base_value));
    d.insert(format!("{prefix}_violating_edges"), json!(v.violating_edges));
    if let Some(o) = oracle {
        d.insert(format!("{prefix}_oracle_holds"), json!(o.holds));
        d.insert(format!("{prefix}_oracle_agrees"), json!(o == v));
    }
}

/// Minimal edge connectivity of `a`, with oracle evidence recorded.
fn edge_minimal(a: &GraphAnalysis, d: &mut BTreeMap<String, Value>) -> bool {
    let v = a.edge_sweep();
    sweep_details(d, "edge_sweep", v, a.oracle().map(|o| &o.edge_sweep));
    v.holds
}

fn vertex_minimal(a: &GraphAnalysis, d: &mut BTreeMap<String, Value>) -> bool {
    let v = a.vertex_sweep();
    sweep_details(d, "vertex_sweep", v, a.oracle().map(|o| &o.vertex_sweep));
    v.holds
}

fn subject_kind(subject: Subject) -> Option<GraphKind> {
    match subject {
        Subject::Commuting => Some(GraphKind::Commuting),
        Subject::Coprime => Some(GraphKind::Coprime),
        Subject::OrderSum => Some(GraphKind::OrderSum),
        Subject::NonInverse => Some(GraphKind::NonInverse),
        Subject::EveryGraph => None,
    }
}

/// Evaluates `claim` on `group`. Pure graph claims yield one verdict per
/// graph kind, every other claim exactly one verdict.
pub fn evaluate_on(claim: ClaimId, group: &GroupAnalysis) -> Vec<ClaimVerdict> {
    let spec = claim.spec();
    let kinds: Vec<GraphKind> = match subject_kind(spec.subject) {
        Some(k) => vec![k],
        None => GraphKind::ALL.to_vec(),
    };
    kinds
        .into_iter()
        .map(|kind| {
            let a = group.graph(kind);
            let mut verdict = ClaimVerdict {
                claim,
                group_label: group.label.clone(),
                graph: Some(kind),
                lhs: None,
                rhs: None,
                consistent: None,
                skipped: None,
                details: BTreeMap::new(),
            };
            if let Some(reason) = out_of_scope(spec.scope, group, a) {
                verdict.skipped = Some(reason.to_string());
                return verdict;
            }
            let e = evaluate_claim_body(claim, group, a);
            verdict.lhs = Some(e.lhs);
            verdict.rhs = Some(e.rhs);
            verdict.consistent = Some(spec.form.consistent(e.lhs, e.rhs));
            verdict.details = e.details;
            verdict
        })
        .collect()
}

fn out_of_scope(scope: Scope, group: &GroupAnalysis, a: &GraphAnalysis) -> Option<&'static str> {
    match scope {
        Scope::AllGroups => None,
        Scope::CyclicGroups => (!group.profile.is_cyclic).then_some("group is not cyclic"),
        Scope::FullExponentGroups => (!group.profile.is_full_exponent).then_some("group is not of full exponent"),
        Scope::DominatedNonComplete => matches!(a.criterion, DominatingCriterion::NotApplicable)
            .then_some("graph is complete or has no dominating vertex"),
    }
}

fn evaluate_claim_body(claim: ClaimId, group: &GroupAnalysis, a: &GraphAnalysis) -> Evaluation {
    let p = &group.profile;
    let mut d = base_details(a);
    let uniform_inverse = p.all_nonidentity_self_inverse || p.no_nonidentity_self_inverse;
    let (lhs, rhs) = match claim {
        ClaimId::Diam2EdgeEqMinDeg => {
            (a.values.kappa_edge == a.values.min_degree, a.shape.is_connected && a.shape.diameter.at_most(2))
        }
        ClaimId::Whitney => {
            let v = a.values;
            (v.kappa_vertex <= v.kappa_edge && v.kappa_edge <= v.min_degree, true)
        }
        ClaimId::CompleteStarMinimal => {
            let rhs = a.graph.n() >= 2 && (a.shape.is_complete || a.shape.is_star);
            let edge = edge_minimal(a, &mut d);
            let vertex = vertex_minimal(a, &mut d);
            (edge && vertex, rhs)
        }
        ClaimId::CommutingCompleteIffAbelian => (a.shape.is_complete, p.is_abelian),
        ClaimId::CoprimeCompleteIffOrderLe2 => (a.shape.is_complete, p.order <= 2),
        ClaimId::OrderSumCompleteIffPrime => (a.shape.is_complete, p.is_cyclic && p.is_prime_order),
        ClaimId::NonInverseCompleteIffSelfInverse => (a.shape.is_complete, p.exponent <= 2),
        ClaimId::NonInverseKappaEq => (a.values.kappa_vertex == a.values.kappa_edge, true),
        ClaimId::DominatingCriterion => {
            let DominatingCriterion::Applies { answer, unique_dominating, rest_regular } = a.criterion else {
                unreachable!("scope excludes non-applicable graphs")
            };
            d.insert("unique_dominating".into(), json!(unique_dominating));
            d.insert("rest_regular".into(), json!(rest_regular));
            (edge_minimal(a, &mut d), answer)
        }
        ClaimId::OrderSumNullIfNoncyclic => (a.graph.edge_count() == 0, !p.is_cyclic),
        ClaimId::OrderSumEdgeIffPrime => (edge_minimal(a, &mut d), p.is_prime_order),
        ClaimId::NonInverseEdgeIffUniformInverse => (edge_minimal(a, &mut d), uniform_inverse),
        ClaimId::CommutingEdgeIffAbelian => (edge_minimal(a, &mut d), p.is_abelian),
        ClaimId::CommutingVertexIffAbelian => (vertex_minimal(a, &mut d), p.is_abelian),
        ClaimId::OrderSumVertexIffPrimePower => (vertex_minimal(a, &mut d), p.is_prime_power_order),
        ClaimId::NonInverseVertexIffUniformInverse => (vertex_minimal(a, &mut d), uniform_inverse),
        ClaimId::CoprimeFullExpIffPGroup => (edge_minimal(a, &mut d), p.is_p_group),
        ClaimId::CoprimeEvenNotMinimal => (!edge_minimal(a, &mut d), p.is_even_order && !p.is_p_group),
        ClaimId::CoprimeVertexIffPGroup => (vertex_minimal(a, &mut d), p.is_p_group),
        ClaimId::TreeClaim => (vertex_minimal(a, &mut d), a.graph.is_tree()),
    };
    Evaluation { lhs, rhs, details: d }
}
