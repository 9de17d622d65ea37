//! Weighted PageRank by power iteration.
//!
//! Each step computes
//!
//! ```text
//! x'[j] = (1 - d) / n + d * ( sum_{i -> j} x[i] * w(i, j) / W(i) + sum_{i dangling} x[i] / n )
//! ```
//!
//! where `W(i)` is the total out-weight of node `i`. Nodes without edges
//! spread their mass uniformly. Iteration stops once the L1 change drops
//! below `epsilon` or after `max_iter` steps.

use std::collections::BTreeMap;

use super::{DocGraph, RetrievalError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    pub damping: f64,
    pub epsilon: f64,
    pub max_iter: usize,
}

impl Default for PageRankParams {
    fn default() -> Self {
        PageRankParams { damping: 0.85, epsilon: 1e-8, max_iter: 100 }
    }
}

/// Scores indexed like `graph.nodes()`.
pub fn pagerank_scores(graph: &DocGraph, params: PageRankParams) -> Result<Vec<f64>, RetrievalError> {
    let PageRankParams { damping, epsilon, max_iter } = params;
    if !(damping > 0.0 && damping < 1.0) || epsilon.is_nan() || epsilon <= 0.0 || max_iter == 0 {
        return Err(RetrievalError::InvalidParameters { damping, epsilon, max_iter });
    }
    let n = graph.len();
    if n == 0 {
        return Err(RetrievalError::EmptyGraph);
    }
    let uniform = 1.0 / n as f64;
    let out_weight: Vec<f64> = (0..n).map(|i| graph.neighbors(i).iter().map(|(_, w)| w).sum()).collect();

    let mut rank = vec![uniform; n];
    let mut next = vec![0.0; n];
    for _ in 0..max_iter {
        let dangling: f64 = (0..n).filter(|&i| out_weight[i] == 0.0).map(|i| rank[i]).sum();
        let base = (1.0 - damping) * uniform + damping * dangling * uniform;
        next.iter_mut().for_each(|v| *v = base);
        for i in 0..n {
            if out_weight[i] == 0.0 {
                continue;
            }
            let share = damping * rank[i] / out_weight[i];
            for &(j, w) in graph.neighbors(i) {
                next[j] += share * w;
            }
        }
        let delta: f64 = rank.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut rank, &mut next);
        if delta < epsilon {
            break;
        }
    }
    let total: f64 = rank.iter().sum();
    rank.iter_mut().for_each(|v| *v /= total);
    Ok(rank)
}

/// Scores keyed by document id.
pub fn pagerank(graph: &DocGraph, params: PageRankParams) -> Result<BTreeMap<String, f64>, RetrievalError> {
    let scores = pagerank_scores(graph, params)?;
    Ok(graph.nodes().iter().cloned().zip(scores).collect())
}
