use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::CorpusIndex;
use crate::text::normalize_term;
use crate::textproc::QueryAnalysis;

use super::{naive_find, RetrievalConfig, RetrievalError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TermKind {
    MainKeyword,
    Expansion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermHits {
    pub term: String,
    pub kind: TermKind,
    pub offsets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub doc_id: String,
    pub hits: Vec<TermHits>,
    pub main_hit_count: usize,
    pub expansion_hit_count: usize,
}

impl Candidate {
    /// Normalized terms that hit this document.
    pub fn term_set(&self) -> HashSet<String> {
        self.hits.iter().map(|h| normalize_term(&h.term)).collect()
    }
}

/// The search terms of an analysis. Expansion terms that repeat a main
/// keyword are searched once, as main keywords.
pub fn search_terms(analysis: &QueryAnalysis) -> Vec<(String, TermKind)> {
    let mut seen = HashSet::new();
    let mut terms = Vec::new();
    for t in &analysis.search_keywords {
        if seen.insert(normalize_term(t)) {
            terms.push((t.clone(), TermKind::MainKeyword));
        }
    }
    for t in &analysis.expansion_terms {
        if seen.insert(normalize_term(t)) {
            terms.push((t.clone(), TermKind::Expansion));
        }
    }
    terms
}

/// Hits of every search term in one document body.
pub fn scan_document(doc_id: &str, body: &str, terms: &[(String, TermKind)]) -> Candidate {
    let mut hits = Vec::new();
    let (mut main, mut expansion) = (0, 0);
    for (term, kind) in terms {
        let offsets = naive_find(body, term).unwrap_or_default();
        if offsets.is_empty() {
            continue;
        }
        match kind {
            TermKind::MainKeyword => main += offsets.len(),
            TermKind::Expansion => expansion += offsets.len(),
        }
        hits.push(TermHits { term: term.clone(), kind: *kind, offsets });
    }
    Candidate { doc_id: doc_id.to_owned(), hits, main_hit_count: main, expansion_hit_count: expansion }
}

/// Documents in the search language that pass the shortlist rule:
/// enough main-keyword hits, or enough expansion hits. Sorted by id.
pub fn shortlist(
    index: &CorpusIndex,
    analysis: &QueryAnalysis,
    config: &RetrievalConfig,
) -> Result<Vec<Candidate>, RetrievalError> {
    let ids = index.ids_in(analysis.search_language);
    if ids.is_empty() {
        return Err(RetrievalError::NoDocumentsInLanguage(analysis.search_language));
    }
    let terms = search_terms(analysis);
    let candidates = ids
        .par_iter()
        .map(|id| {
            let doc = index.get(id).expect("partition lists existing ids");
            scan_document(id, &doc.body, &terms)
        })
        .filter(|c| {
            c.main_hit_count + c.expansion_hit_count >= 1
                && (c.main_hit_count >= config.shortlist.min_main_hits || c.expansion_hit_count >= config.shortlist.min_expansion_hits)
        })
        .collect();
    Ok(candidates)
}
