use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::lang::LanguageCode;
use crate::textproc::AnalysisMode;

use super::{f_measure, precision, recall, EvalError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalQuery {
    pub id: String,
    /// `None` lets the engine detect the language.
    pub language: Option<LanguageCode>,
    pub text: String,
}

/// Relevance judgments: query id to relevant document ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Qrels(pub BTreeMap<String, BTreeSet<String>>);

impl Qrels {
    pub fn insert(&mut self, query_id: &str, doc_id: &str) {
        self.0.entry(query_id.to_owned()).or_default().insert(doc_id.to_owned());
    }

    /// Declares a query with no relevant documents.
    pub fn declare(&mut self, query_id: &str) {
        self.0.entry(query_id.to_owned()).or_default();
    }

    pub fn relevant(&self, query_id: &str) -> Option<&BTreeSet<String>> {
        self.0.get(query_id)
    }
}

/// What a retrieval run produced for one query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retrieval {
    pub query_language: LanguageCode,
    pub search_language: LanguageCode,
    pub retrieved: BTreeSet<String>,
}

/// A failed query: the language it was read in plus the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetrievalFailure {
    pub query_language: LanguageCode,
    pub code: String,
    pub message: String,
}

/// The pipeline under evaluation.
pub trait Retriever: Sync {
    fn retrieve(&self, query: &EvalQuery, mode: AnalysisMode) -> Result<Retrieval, RetrievalFailure>;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRow {
    pub query_id: String,
    pub query_text: String,
    pub query_language: LanguageCode,
    pub apt_language: LanguageCode,
    pub relevant_count: usize,
    pub retrieved_count: usize,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    /// Pipeline error code when the query produced no retrieval.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalIssue {
    pub query_id: String,
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Averages {
    pub queries: usize,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
}

impl Averages {
    pub fn of<'a>(rows: impl IntoIterator<Item = &'a EvalRow>) -> Averages {
        let mut avg = Averages::default();
        for row in rows {
            avg.queries += 1;
            avg.precision += row.precision;
            avg.recall += row.recall;
            avg.f_measure += row.f_measure;
        }
        if avg.queries > 0 {
            let n = avg.queries as f64;
            avg.precision /= n;
            avg.recall /= n;
            avg.f_measure /= n;
        }
        avg
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub mode: AnalysisMode,
    pub rows: Vec<EvalRow>,
    pub issues: Vec<EvalIssue>,
    pub macro_average: Averages,
    /// Macro averages per query language.
    pub by_language: BTreeMap<LanguageCode, Averages>,
}

fn evaluate_one(
    query: &EvalQuery,
    qrels: &Qrels,
    engine: &dyn Retriever,
    mode: AnalysisMode,
) -> Result<EvalRow, EvalIssue> {
    let issue = |err: EvalError| EvalIssue { query_id: query.id.clone(), code: err.code().into(), message: err.to_string() };
    let relevant = qrels.relevant(&query.id).ok_or_else(|| issue(EvalError::UnknownQueryId(query.id.clone())))?;
    if relevant.is_empty() {
        return Err(issue(EvalError::EmptyRelevantSet));
    }
    let (query_language, apt_language, retrieved, error) = match engine.retrieve(query, mode) {
        Ok(r) => (r.query_language, r.search_language, r.retrieved, None),
        Err(f) => (f.query_language, f.query_language, BTreeSet::new(), Some(f.code)),
    };
    let p = precision(&retrieved, relevant);
    let r = recall(&retrieved, relevant).map_err(issue)?;
    Ok(EvalRow {
        query_id: query.id.clone(),
        query_text: query.text.clone(),
        query_language,
        apt_language,
        relevant_count: relevant.len(),
        retrieved_count: retrieved.len(),
        precision: p,
        recall: r,
        f_measure: f_measure(p, r),
        error,
    })
}

/// Runs every query through `engine` and scores the shortlisted documents
/// against `qrels`. Queries are spread over `workers` threads; output order
/// follows the input.
pub fn evaluate_run(
    queries: &[EvalQuery],
    qrels: &Qrels,
    engine: &dyn Retriever,
    mode: AnalysisMode,
    workers: usize,
) -> EvalReport {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().expect("thread pool");
    let outcomes: Vec<Result<EvalRow, EvalIssue>> =
        pool.install(|| queries.par_iter().map(|q| evaluate_one(q, qrels, engine, mode)).collect());
    let mut rows = Vec::new();
    let mut issues = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(issue) => issues.push(issue),
        }
    }
    let macro_average = Averages::of(&rows);
    let mut langs: BTreeSet<LanguageCode> = BTreeSet::new();
    langs.extend(rows.iter().map(|r| r.query_language));
    let by_language =
        langs.into_iter().map(|l| (l, Averages::of(rows.iter().filter(|r| r.query_language == l)))).collect();
    EvalReport { mode, rows, issues, macro_average, by_language }
}

fn apt_label(lang: LanguageCode) -> String {
    lang.as_str().to_uppercase()
}

impl EvalReport {
    /// Tab-separated table with a trailing averages row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("QUERY\tAPT LANGUAGE\tRELEVANT DOCUMENTS\tPRECISION\tRECALL\tF-MEASURE\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{:.3}\t{:.3}\t{:.3}",
                row.query_text,
                apt_label(row.apt_language),
                row.relevant_count,
                row.precision,
                row.recall,
                row.f_measure
            );
        }
        let avg = &self.macro_average;
        let _ = writeln!(out, "AVERAGE\t-\t-\t{:.3}\t{:.3}\t{:.3}", avg.precision, avg.recall, avg.f_measure);
        out
    }
}

/// Keyword-only versus ontology-assisted results side by side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub keywords_only: EvalReport,
    pub with_ontology: EvalReport,
    pub deltas: Vec<LanguageDelta>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LanguageDelta {
    pub language: LanguageCode,
    pub keywords_only_f: f64,
    pub with_ontology_f: f64,
    /// Relative improvement in percent; `None` when the baseline F is 0.
    pub improvement_percent: Option<f64>,
}

pub fn compare_modes(queries: &[EvalQuery], qrels: &Qrels, engine: &dyn Retriever, workers: usize) -> Comparison {
    let keywords_only = evaluate_run(queries, qrels, engine, AnalysisMode::KeywordsOnly, workers);
    let with_ontology = evaluate_run(queries, qrels, engine, AnalysisMode::WithOntology, workers);
    let mut langs: BTreeSet<LanguageCode> = keywords_only.by_language.keys().copied().collect();
    langs.extend(with_ontology.by_language.keys().copied());
    let deltas = langs
        .into_iter()
        .map(|language| {
            let base = keywords_only.by_language.get(&language).map_or(0.0, |a| a.f_measure);
            let with = with_ontology.by_language.get(&language).map_or(0.0, |a| a.f_measure);
            LanguageDelta {
                language,
                keywords_only_f: base,
                with_ontology_f: with,
                improvement_percent: (base > 0.0).then(|| (with - base) / base * 100.0),
            }
        })
        .collect();
    Comparison { keywords_only, with_ontology, deltas }
}

impl Comparison {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("LANGUAGE\tKEYWORDS ONLY F\tWITH ONTOLOGY F\tIMPROVEMENT %\n");
        for d in &self.deltas {
            let pct = d.improvement_percent.map_or_else(|| "-".to_owned(), |p| format!("{p:.1}"));
            let _ = writeln!(out, "{}\t{:.3}\t{:.3}\t{}", apt_label(d.language), d.keywords_only_f, d.with_ontology_f, pct);
        }
        out
    }
}
