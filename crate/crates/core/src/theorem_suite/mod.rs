//! Classification claims as machine-checkable relations between a computed
//! graph property (`lhs`) and a group or graph hypothesis (`rhs`).
//!
//! A claim that fails on some group is a finding, not an error: the report
//! records it. Only disagreements between the flow kernels and the
//! brute-force oracles indicate a bug here.

mod analysis;
mod claims;
mod invariants;
mod registry;
mod report;

pub use analysis::{GraphAnalysis, GroupAnalysis, OracleCheck};
pub use claims::{evaluate_on, ClaimVerdict};
pub use invariants::{graph_invariants, group_invariants, CheckStatus, InvariantCheck, InvariantId};
pub use registry::{ClaimId, ClaimSpec, LogicalForm, Scope, Subject, REGISTRY};
pub use report::{
    run_corpus, ClaimTally, CorpusReport, InvariantFailure, InvariantSummary, InvariantTally, ReportConfig,
};

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::group::{FamilySpec, FiniteGroup, GroupError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("building {spec}: {source}")]
    Build {
        spec: String,
        #[source]
        source: GroupError,
    },
    #[error("corpus line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: GroupError,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Evaluates one claim on one group. Pure graph claims return a verdict
/// for each of the four graphs.
pub fn evaluate_claim(claim: ClaimId, group: &FiniteGroup, order_cap: usize) -> Result<Vec<ClaimVerdict>, SuiteError> {
    if group.order() > order_cap {
        return Err(GroupError::OrderCapExceeded { order: group.order(), cap: order_cap }.into());
    }
    Ok(evaluate_on(claim, &GroupAnalysis::new(group.clone())))
}

pub fn sanity_invariants(graph: &SimpleGraph) -> Vec<InvariantCheck> {
    graph_invariants(&GraphAnalysis::new(graph.clone()))
}

/// Cyclic(2..=32), Dihedral(2..=16), Dicyclic(2..=8), Symmetric(3..=4),
/// elementary abelian groups of rank >= 2 up to order 32, products of two
/// distinct small primes, and a few non-cyclic abelian and mixed products.
pub fn default_corpus() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut corpus: Vec<FamilySpec> = (2..=32).map(Cyclic).collect();
    corpus.extend((2..=16).map(Dihedral));
    corpus.extend((2..=8).map(Dicyclic));
    corpus.extend((3..=4).map(Symmetric));
    for (p, k) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)] {
        corpus.push(ElementaryAbelian { p, k });
    }
    for (p, q) in [(2, 3), (2, 5), (2, 7), (2, 11), (2, 13), (3, 5), (3, 7)] {
        corpus.push(DirectProduct(vec![Cyclic(p), Cyclic(q)]));
    }
    corpus.push(DirectProduct(vec![Cyclic(2), Cyclic(4)]));
    corpus.push(DirectProduct(vec![Cyclic(2), Cyclic(8)]));
    corpus.push(DirectProduct(vec![Cyclic(4), Cyclic(4)]));
    corpus.push(DirectProduct(vec![Cyclic(3), Symmetric(3)]));
    corpus.push(DirectProduct(vec![Cyclic(2), Dicyclic(2)]));
    corpus
}

/// One group spec per line; `#` starts a comment.
pub fn parse_corpus(text: &str) -> Result<Vec<FamilySpec>, SuiteError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| l.parse().map_err(|source| SuiteError::Corpus { line, source }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_fits_cap_64() {
        let corpus = default_corpus();
        assert!(corpus.iter().all(|s| s.expected_order().unwrap() <= 32));
        let labels: std::collections::BTreeSet<String> = corpus.iter().map(ToString::to_string).collect();
        assert_eq!(labels.len(), corpus.len(), "labels are unique");
    }

    #[test]
    fn corpus_file_parsing() {
        let specs = parse_corpus("# groups\ncyclic:4\n\nproduct:cyclic:2*cyclic:3  # Z6\n").unwrap();
        assert_eq!(specs, vec![FamilySpec::Cyclic(4), "product:cyclic:2*cyclic:3".parse().unwrap()]);
        let err = parse_corpus("cyclic:4\nbogus\n").unwrap_err();
        assert!(err.to_string().starts_with("corpus line 2"));
    }

    #[test]
    fn evaluate_claim_respects_cap() {
        let g = crate::group::build_family(&FamilySpec::Cyclic(10), 200).unwrap();
        assert!(evaluate_claim(ClaimId::Whitney, &g, 8).is_err());
        assert_eq!(evaluate_claim(ClaimId::Whitney, &g, 200).unwrap().len(), 4);
    }
}
