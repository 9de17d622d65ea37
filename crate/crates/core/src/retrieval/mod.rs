//! Document search and ranking: naive substring scanning builds the
//! shortlist, a shared-term graph over the shortlist feeds PageRank, and
//! both signals are blended into the final order.

mod graph;
mod naive;
mod pagerank;
mod rank;
mod shortlist;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::LanguageCode;

pub use graph::{build_doc_graph, DocGraph};
pub use naive::naive_find;
pub use pagerank::{pagerank, pagerank_scores, PageRankParams};
pub use rank::{rank, RankedResult};
pub use shortlist::{scan_document, search_terms, shortlist, Candidate, TermHits, TermKind};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RetrievalError {
    #[error("search pattern is empty")]
    EmptyPattern,
    #[error("no documents in language `{0}`")]
    NoDocumentsInLanguage(LanguageCode),
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("invalid edge {from} -> {to} with weight {weight}")]
    InvalidEdge { from: usize, to: usize, weight: f64 },
    #[error("invalid PageRank parameters: damping={damping}, epsilon={epsilon}, max_iter={max_iter}")]
    InvalidParameters { damping: f64, epsilon: f64, max_iter: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ShortlistConfig {
    pub min_main_hits: usize,
    pub min_expansion_hits: usize,
}

impl Default for ShortlistConfig {
    fn default() -> Self {
        ShortlistConfig { min_main_hits: 1, min_expansion_hits: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RetrievalConfig {
    pub damping: f64,
    pub epsilon: f64,
    pub max_iter: usize,
    /// Weight of the term score against PageRank in the combined score.
    pub alpha: f64,
    pub expansion_weight: f64,
    pub shortlist: ShortlistConfig,
}

impl Default for RetrievalConfig {
    fn default() -> Self {
        RetrievalConfig {
            damping: 0.85,
            epsilon: 1e-8,
            max_iter: 100,
            alpha: 0.5,
            expansion_weight: 0.5,
            shortlist: ShortlistConfig::default(),
        }
    }
}

impl RetrievalConfig {
    pub fn pagerank_params(&self) -> PageRankParams {
        PageRankParams { damping: self.damping, epsilon: self.epsilon, max_iter: self.max_iter }
    }
}
