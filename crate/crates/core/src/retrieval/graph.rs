use serde::Serialize;

use super::{Candidate, RetrievalError};

/// Weighted document graph. Edges are stored in both directions with equal
/// weight.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DocGraph {
    nodes: Vec<String>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl DocGraph {
    pub fn new(nodes: Vec<String>) -> Self {
        let adjacency = vec![Vec::new(); nodes.len()];
        DocGraph { nodes, adjacency }
    }

    /// Adds the undirected edge `a — b`. Self-loops and non-positive or
    /// non-finite weights are rejected.
    pub fn connect(&mut self, a: usize, b: usize, weight: f64) -> Result<(), RetrievalError> {
        if a == b || a >= self.nodes.len() || b >= self.nodes.len() || !(weight > 0.0 && weight.is_finite()) {
            return Err(RetrievalError::InvalidEdge { from: a, to: b, weight });
        }
        self.adjacency[a].push((b, weight));
        self.adjacency[b].push((a, weight));
        Ok(())
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn neighbors(&self, node: usize) -> &[(usize, f64)] {
        &self.adjacency[node]
    }

    /// Number of directed edges (each undirected edge counts twice).
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<f64> {
        self.adjacency[a].iter().find(|(n, _)| *n == b).map(|(_, w)| *w)
    }
}

/// Connects every pair of candidates by the number of distinct search terms
/// hitting both. Pairs sharing nothing stay unconnected.
pub fn build_doc_graph(candidates: &[Candidate]) -> DocGraph {
    let mut graph = DocGraph::new(candidates.iter().map(|c| c.doc_id.clone()).collect());
    let term_sets: Vec<_> = candidates.iter().map(Candidate::term_set).collect();
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            let shared = term_sets[i].intersection(&term_sets[j]).count();
            if shared > 0 {
                graph.connect(i, j, shared as f64).expect("distinct nodes, positive weight");
            }
        }
    }
    graph
}
