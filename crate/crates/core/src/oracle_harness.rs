//! Seeded random graphs for cross-checking the flow kernels against the
//! brute-force oracles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::{edge_connectivity, edge_connectivity_oracle, vertex_connectivity, vertex_connectivity_oracle};
use crate::graph::SimpleGraph;

pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Stars, cycles, complete graphs and complete-minus-matching graphs for
/// every size up to `max_n`.
pub fn structured_cases(max_n: usize) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(SimpleGraph::complete(n));
        out.push(SimpleGraph::star(n));
        if n >= 3 {
            out.push(SimpleGraph::cycle(n));
        }
        // pairs (1,2), (3,4), ...; vertex 0 stays dominating like an identity
        out.push(SimpleGraph::from_relation(n, |i, j| !(i % 2 == 1 && j == i + 1)));
    }
    out
}

/// `trials` graphs with `n` uniform in `1..=max_n` and an edge probability
/// drawn per trial from [`EDGE_PROBABILITIES`].
pub fn random_cases(trials: usize, seed: u64, max_n: usize) -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let p = *EDGE_PROBABILITIES.choose(&mut rng).expect("non-empty");
            SimpleGraph::from_relation(n, |_, _| rng.gen_bool(p))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub case: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub flow: (usize, usize),
    pub oracle: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleRun {
    pub cases: usize,
    pub mismatches: Vec<OracleMismatch>,
}

/// Compares `(kappa', kappa)` from max-flow with the brute-force oracles.
/// Graphs beyond the vertex oracle's size limit are rejected by the oracle.
pub fn compare_with_oracles(graphs: &[SimpleGraph]) -> Result<OracleRun, crate::connectivity::OracleError> {
    let mut mismatches = Vec::new();
    for (case, g) in graphs.iter().enumerate() {
        let flow = (edge_connectivity(g), vertex_connectivity(g));
        let oracle = (edge_connectivity_oracle(g)?, vertex_connectivity_oracle(g)?);
        if flow != oracle {
            mismatches.push(OracleMismatch { case, n: g.n(), edges: g.edges().to_vec(), flow, oracle });
        }
    }
    Ok(OracleRun { cases: graphs.len(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        assert_eq!(random_cases(50, 7, 9), random_cases(50, 7, 9));
        assert_ne!(random_cases(50, 7, 9), random_cases(50, 8, 9));
        assert!(random_cases(100, 1, 9).iter().all(|g| (1..=9).contains(&g.n())));
    }

    #[test]
    fn structured_and_random_cases_agree() {
        let mut graphs = structured_cases(9);
        graphs.extend(random_cases(200, 1, 9));
        let run = compare_with_oracles(&graphs).unwrap();
        assert!(run.mismatches.is_empty(), "{:?}", run.mismatches);
    }

    #[test]
    fn matching_case_has_expected_shape() {
        let g = structured_cases(5).into_iter().last().unwrap();
        assert_eq!(g.n(), 5);
        assert!(!g.has_edge(1, 2) && !g.has_edge(3, 4) && g.has_edge(2, 3));
        assert_eq!(g.degree(0), 4);
    }
}
