use rayon::prelude::*;
use serde::Serialize;

use super::analysis::GroupAnalysis;
use super::claims::{evaluate_on, ClaimVerdict};
use super::invariants::{graph_invariants, group_invariants, CheckStatus, InvariantId};
use super::registry::{ClaimId, LogicalForm};
use super::SuiteError;
use crate::graph::GraphKind;
use crate::group::{build_family, FamilySpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub tool: String,
    pub version: String,
    pub order_cap: usize,
    pub corpus: Vec<String>,
    pub claims: Vec<ClaimId>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimTally {
    pub id: ClaimId,
    pub form: LogicalForm,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub note: Option<&'static str>,
    pub evaluated: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub skipped: usize,
    pub failures: Vec<ClaimVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantTally {
    pub id: InvariantId,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantFailure {
    pub group_label: String,
    pub graph: Option<GraphKind>,
    pub id: InvariantId,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSummary {
    pub groups_checked: usize,
    pub graphs_checked: usize,
    pub checks: Vec<InvariantTally>,
    pub failures: Vec<InvariantFailure>,
}

impl InvariantSummary {
    pub fn total_failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub config: ReportConfig,
    pub claims: Vec<ClaimTally>,
    pub invariants: InvariantSummary,
    /// Every verdict whose claim relation failed, claim-major.
    pub inconsistencies: Vec<ClaimVerdict>,
    /// Every verdict, claim-major then corpus order.
    pub verdicts: Vec<ClaimVerdict>,
}

impl CorpusReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    /// One row per verdict, including skipped ones.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["claim", "group", "graph", "lhs", "rhs", "consistent", "skipped", "details"])
            .expect("in-memory write");
        let opt = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
        for v in &self.verdicts {
            w.write_record([
                v.claim.as_str().to_string(),
                v.group_label.clone(),
                v.graph.map(|k| k.to_string()).unwrap_or_default(),
                opt(v.lhs),
                opt(v.rhs),
                opt(v.consistent),
                v.skipped.clone().unwrap_or_default(),
                serde_json::to_string(&v.details).expect("details serialize"),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
    }

    pub fn tally(&self, id: ClaimId) -> Option<&ClaimTally> {
        self.claims.iter().find(|t| t.id == id)
    }
}

/// Builds every group, evaluates each claim on each group, and runs the
/// invariant suite on every group and graph. Output order never depends on
/// scheduling.
pub fn run_corpus(corpus: &[FamilySpec], claims: &[ClaimId], order_cap: usize) -> Result<CorpusReport, SuiteError> {
    let groups = corpus
        .iter()
        .map(|spec| {
            build_family(spec, order_cap).map_err(|source| SuiteError::Build { spec: spec.to_string(), source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let analyses: Vec<GroupAnalysis> = groups.into_par_iter().map(GroupAnalysis::new).collect();

    let per_claim: Vec<Vec<ClaimVerdict>> = claims
        .par_iter()
        .map(|&claim| analyses.par_iter().flat_map_iter(|a| evaluate_on(claim, a)).collect())
        .collect();

    let mut tallies = Vec::with_capacity(claims.len());
    let mut verdicts = Vec::new();
    for (&claim, claim_verdicts) in claims.iter().zip(per_claim) {
        let spec = claim.spec();
        let skipped = claim_verdicts.iter().filter(|v| v.skipped.is_some()).count();
        let failures: Vec<ClaimVerdict> = claim_verdicts.iter().filter(|v| v.is_inconsistent()).cloned().collect();
        let evaluated = claim_verdicts.len() - skipped;
        tallies.push(ClaimTally {
            id: claim,
            form: spec.form,
            lhs: spec.lhs,
            rhs: spec.rhs,
            note: spec.note,
            evaluated,
            consistent: evaluated - failures.len(),
            inconsistent: failures.len(),
            skipped,
            failures,
        });
        verdicts.extend(claim_verdicts);
    }
    let inconsistencies = tallies.iter().flat_map(|t| t.failures.iter().cloned()).collect();

    let invariants = summarize_invariants(&analyses);

    Ok(CorpusReport {
        config: ReportConfig {
            tool: "grpconn".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            order_cap,
            corpus: corpus.iter().map(ToString::to_string).collect(),
            claims: claims.to_vec(),
        },
        claims: tallies,
        invariants,
        inconsistencies,
        verdicts,
    })
}

fn summarize_invariants(analyses: &[GroupAnalysis]) -> InvariantSummary {
    let per_group: Vec<Vec<(Option<GraphKind>, super::invariants::InvariantCheck)>> = analyses
        .par_iter()
        .map(|g| {
            let mut checks: Vec<_> = group_invariants(g).into_iter().map(|c| (None, c)).collect();
            for a in &g.graphs {
                checks.extend(graph_invariants(a).into_iter().map(|c| (a.kind(), c)));
            }
            checks
        })
        .collect();

    let mut checks: Vec<InvariantTally> =
        InvariantId::ALL.iter().map(|&id| InvariantTally { id, passed: 0, failed: 0, skipped: 0 }).collect();
    let mut failures = Vec::new();
    for (g, group_checks) in analyses.iter().zip(per_group) {
        for (kind, c) in group_checks {
            let tally = checks.iter_mut().find(|t| t.id == c.id).expect("all ids tallied");
            match c.status {
                CheckStatus::Pass => tally.passed += 1,
                CheckStatus::Skipped => tally.skipped += 1,
                CheckStatus::Fail => {
                    tally.failed += 1;
                    failures.push(InvariantFailure {
                        group_label: g.label.clone(),
                        graph: kind,
                        id: c.id,
                        evidence: c.evidence,
                    });
                }
            }
        }
    }
    InvariantSummary {
        groups_checked: analyses.len(),
        graphs_checked: analyses.iter().map(|g| g.graphs.len()).sum(),
        checks,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_corpus_commuting_complete() {
        let corpus: Vec<FamilySpec> = (2..=8).map(FamilySpec::Cyclic).collect();
        let r = run_corpus(&corpus, &[ClaimId::CommutingCompleteIffAbelian], 200).unwrap();
        let t = r.tally(ClaimId::CommutingCompleteIffAbelian).unwrap();
        assert_eq!((t.evaluated, t.consistent, t.inconsistent, t.skipped), (7, 7, 0, 0));
        assert_eq!(r.verdicts.len(), 7);
        assert!(r.inconsistencies.is_empty());
    }

    #[test]
    fn self_inverse_completeness() {
        let corpus = [FamilySpec::ElementaryAbelian { p: 2, k: 2 }, FamilySpec::Cyclic(4)];
        let r = run_corpus(&corpus, &[ClaimId::NonInverseCompleteIffSelfInverse], 200).unwrap();
        assert_eq!(r.verdicts[0].lhs, Some(true));
        assert_eq!(r.verdicts[1].lhs, Some(false));
        assert!(r.verdicts.iter().all(|v| v.consistent == Some(true)));
    }

    #[test]
    fn empty_claim_list_still_runs_invariants() {
        let r = run_corpus(&[FamilySpec::Cyclic(6)], &[], 200).unwrap();
        assert!(r.claims.is_empty() && r.verdicts.is_empty());
        assert_eq!(r.invariants.graphs_checked, 4);
        assert!(r.invariants.checks.iter().any(|c| c.passed > 0));
        assert_eq!(r.invariants.total_failures(), 0);
    }

    #[test]
    fn build_errors_name_the_spec() {
        let err = run_corpus(&[FamilySpec::Cyclic(3), FamilySpec::Symmetric(6)], &[], 200).unwrap_err();
        assert!(err.to_string().contains("symmetric:6"), "{err}");
    }

    #[test]
    fn csv_rows_match_verdicts() {
        let r = run_corpus(
            &[FamilySpec::Cyclic(5), FamilySpec::Dihedral(3)],
            &[ClaimId::OrderSumEdgeIffPrime, ClaimId::Whitney],
            200,
        )
        .unwrap();
        let csv = r.to_csv();
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(reader.records().count(), r.verdicts.len());
        let evaluated: usize = r.claims.iter().map(|t| t.evaluated + t.skipped).sum();
        assert_eq!(evaluated, r.verdicts.len());
    }
}
