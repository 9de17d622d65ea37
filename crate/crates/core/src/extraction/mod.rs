//! Answer extraction: qualifying sentences from top-ranked documents,
//! consolidated without repetition and glossed into the query language.

mod passages;
mod sentences;
mod translate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use passages::{consolidate, extract_passages, jaccard, token_set, Passage};
pub use sentences::{sentence_spans, split_sentences};
pub use translate::{gloss, translate_answer, Answer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractionError {
    #[error("no passage in the top documents answers the query")]
    NoPassages,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExtractionConfig {
    pub top_k: usize,
    pub max_passages: usize,
    pub jaccard_threshold: f64,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig { top_k: 5, max_passages: 5, jaccard_threshold: 0.8 }
    }
}
