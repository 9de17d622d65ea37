//! Evaluation harness: precision, recall and F-measure per query, macro
//! averages, and the keyword-only versus ontology comparison.

mod files;
mod metrics;
mod run;

use thiserror::Error;

pub use files::{parse_qrels, parse_queries, FileError};
pub use metrics::{f_measure, precision, recall};
pub use run::{
    compare_modes, evaluate_run, Averages, Comparison, EvalIssue, EvalQuery, EvalReport, EvalRow, LanguageDelta,
    Qrels, Retrieval, RetrievalFailure, Retriever,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("relevant set is empty")]
    EmptyRelevantSet,
    #[error("query `{0}` has no relevance judgments")]
    UnknownQueryId(String),
}

impl EvalError {
    pub fn code(&self) -> &'static str {
        match self {
            EvalError::EmptyRelevantSet => "EmptyRelevantSet",
            EvalError::UnknownQueryId(_) => "UnknownQueryId",
        }
    }
}
