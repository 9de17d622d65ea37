//! The end-to-end query pipeline shared by the CLI, the HTTP service and
//! the evaluation harness.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::config::Config;
use crate::corpus::CorpusIndex;
use crate::eval::{EvalQuery, Retrieval, RetrievalFailure, Retriever};
use crate::extraction::{consolidate, extract_passages, translate_answer, Answer, ExtractionError};
use crate::lang::LanguageCode;
use crate::ontology::OntologyTree;
use crate::retrieval::{build_doc_graph, pagerank, rank, shortlist, Candidate, RankedResult, RetrievalError};
use crate::textproc::{analyze_query_with_mode, detect_language, AnalysisMode, Lexicon, QueryAnalysis, TextprocError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QueryError {
    #[error(transparent)]
    Textproc(#[from] TextprocError),
    #[error(transparent)]
    Retrieval(#[from] RetrievalError),
    /// Nothing answered the query; the analysis is kept for display.
    #[error("no passage answers the query")]
    NoPassages { analysis: Box<QueryAnalysis> },
}

impl QueryError {
    /// Stable identifier used in JSON error bodies.
    pub fn code(&self) -> &'static str {
        match self {
            QueryError::Textproc(TextprocError::EmptyQuery) => "EmptyQuery",
            QueryError::Textproc(TextprocError::NoKeywords) => "NoKeywords",
            QueryError::Textproc(TextprocError::MissingLexicon(_)) => "MissingLexicon",
            QueryError::Retrieval(RetrievalError::NoDocumentsInLanguage(_)) => "NoDocumentsInLanguage",
            QueryError::Retrieval(_) => "RetrievalError",
            QueryError::NoPassages { .. } => "NoPassages",
        }
    }

    /// Process exit status for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self.code() {
            "EmptyQuery" => 3,
            "NoKeywords" => 4,
            "NoDocumentsInLanguage" => 5,
            "NoPassages" => 6,
            _ => 1,
        }
    }
}

/// Wall-clock milliseconds per stage.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub analysis_ms: f64,
    pub retrieval_ms: f64,
    pub ranking_ms: f64,
    pub extraction_ms: f64,
    pub translation_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QueryResponse {
    pub query_analysis: QueryAnalysis,
    pub ranked: Vec<RankedResult>,
    pub answer: Answer,
    /// Present only when requested, so repeated runs serialize identically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

/// Shortlist and ranking for one analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct RetrievalOutcome {
    pub candidates: Vec<Candidate>,
    pub ranked: Vec<RankedResult>,
}

/// Loaded ontology, lexicons, corpus and configuration. Immutable; share it
/// behind an `Arc` for concurrent use.
#[derive(Debug, Clone)]
pub struct Engine {
    pub tree: OntologyTree,
    pub lexicons: BTreeMap<LanguageCode, Lexicon>,
    pub index: CorpusIndex,
    pub config: Config,
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

impl Engine {
    pub fn new(tree: OntologyTree, lexicons: BTreeMap<LanguageCode, Lexicon>, index: CorpusIndex, config: Config) -> Self {
        Engine { tree, lexicons, index, config }
    }

    pub fn analyze(&self, text: &str, lang: Option<LanguageCode>, mode: AnalysisMode) -> Result<QueryAnalysis, QueryError> {
        Ok(analyze_query_with_mode(text, lang, &self.tree, &self.lexicons, mode)?)
    }

    /// Shortlists and ranks without extracting an answer.
    pub fn search(&self, analysis: &QueryAnalysis) -> Result<RetrievalOutcome, QueryError> {
        let config = &self.config.retrieval;
        let candidates = shortlist(&self.index, analysis, config)?;
        let ranked = self.rank_candidates(&candidates)?;
        Ok(RetrievalOutcome { candidates, ranked })
    }

    /// Shared-term graph, PageRank and the blended order.
    fn rank_candidates(&self, candidates: &[Candidate]) -> Result<Vec<RankedResult>, QueryError> {
        if candidates.is_empty() {
            return Ok(Vec::new());
        }
        let config = &self.config.retrieval;
        let graph = build_doc_graph(candidates);
        let scores = pagerank(&graph, config.pagerank_params())?;
        Ok(rank(candidates, &scores, config))
    }

    /// Runs the whole pipeline. The answer comes back in the query language.
    pub fn query(&self, text: &str, lang: Option<LanguageCode>, with_timings: bool) -> Result<QueryResponse, QueryError> {
        let mut timings = Timings::default();

        let start = Instant::now();
        let analysis = self.analyze(text, lang, AnalysisMode::WithOntology)?;
        timings.analysis_ms = elapsed_ms(start);

        let start = Instant::now();
        let candidates = shortlist(&self.index, &analysis, &self.config.retrieval)?;
        timings.retrieval_ms = elapsed_ms(start);

        let start = Instant::now();
        let ranked = self.rank_candidates(&candidates)?;
        timings.ranking_ms = elapsed_ms(start);

        let start = Instant::now();
        let extraction = &self.config.extraction;
        let docs: Vec<(&str, &str)> = ranked
            .iter()
            .filter_map(|r| self.index.get(&r.doc_id).map(|d| (d.id.as_str(), d.body.as_str())))
            .collect();
        let passages = match extract_passages(&docs, &analysis, extraction.top_k) {
            Ok(p) => p,
            Err(ExtractionError::NoPassages) => return Err(QueryError::NoPassages { analysis: Box::new(analysis) }),
        };
        let passages = consolidate(&passages, extraction.max_passages, extraction.jaccard_threshold);
        timings.extraction_ms = elapsed_ms(start);

        let start = Instant::now();
        let answer = translate_answer(&passages, analysis.search_language, analysis.query_language, &self.tree);
        timings.translation_ms = elapsed_ms(start);

        Ok(QueryResponse { query_analysis: analysis, ranked, answer, timings: with_timings.then_some(timings) })
    }
}

impl Retriever for Engine {
    fn retrieve(&self, query: &EvalQuery, mode: AnalysisMode) -> Result<Retrieval, RetrievalFailure> {
        let fallback_lang = query.language.or_else(|| detect_language(&query.text).ok()).unwrap_or(LanguageCode::EN);
        let fail = |e: QueryError| RetrievalFailure { query_language: fallback_lang, code: e.code().into(), message: e.to_string() };
        let analysis = self.analyze(&query.text, query.language, mode).map_err(fail)?;
        let candidates = shortlist(&self.index, &analysis, &self.config.retrieval).map_err(|e| fail(e.into()))?;
        Ok(Retrieval {
            query_language: analysis.query_language,
            search_language: analysis.search_language,
            retrieved: candidates.into_iter().map(|c| c.doc_id).collect(),
        })
    }
}
