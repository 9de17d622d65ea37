use std::collections::HashSet;

use serde::Serialize;

use crate::text::normalize_term;
use crate::textproc::{tokenize, QueryAnalysis};
use crate::retrieval::{naive_find, search_terms, TermKind};

use super::{sentence_spans, ExtractionError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Passage {
    pub doc_id: String,
    pub sentence_index: usize,
    pub text: String,
    pub matched_terms: Vec<String>,
}

/// Qualifying sentences of the first `top_k` documents, given as
/// `(doc_id, body)` pairs in rank order. A sentence qualifies with one
/// main keyword or two distinct expansion terms.
pub fn extract_passages(
    docs: &[(&str, &str)],
    analysis: &QueryAnalysis,
    top_k: usize,
) -> Result<Vec<Passage>, ExtractionError> {
    let terms = search_terms(analysis);
    let mut passages = Vec::new();
    for (doc_id, body) in docs.iter().take(top_k.max(1)) {
        for (sentence_index, span) in sentence_spans(body).into_iter().enumerate() {
            let sentence = &body[span];
            let mut matched = Vec::new();
            let (mut main, mut expansion) = (0, 0);
            for (term, kind) in &terms {
                if naive_find(sentence, term).map(|o| o.is_empty()).unwrap_or(true) {
                    continue;
                }
                match kind {
                    TermKind::MainKeyword => main += 1,
                    TermKind::Expansion => expansion += 1,
                }
                matched.push(term.clone());
            }
            if main >= 1 || expansion >= 2 {
                passages.push(Passage {
                    doc_id: (*doc_id).to_owned(),
                    sentence_index,
                    text: sentence.to_owned(),
                    matched_terms: matched,
                });
            }
        }
    }
    if passages.is_empty() {
        Err(ExtractionError::NoPassages)
    } else {
        Ok(passages)
    }
}

/// Normalized word set used for near-duplicate detection.
pub fn token_set(text: &str) -> HashSet<String> {
    tokenize(text, crate::lang::LanguageCode::EN).iter().map(|t| normalize_term(&t.surface)).collect()
}

pub fn jaccard(a: &HashSet<String>, b: &HashSet<String>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        return 1.0;
    }
    a.intersection(b).count() as f64 / union as f64
}

/// Drops exact and near duplicates (word-set Jaccard at or above
/// `threshold` against an already kept passage), keeping first
/// occurrences in order, then truncates to `max_passages`.
pub fn consolidate(passages: &[Passage], max_passages: usize, threshold: f64) -> Vec<Passage> {
    let mut kept: Vec<Passage> = Vec::new();
    let mut kept_keys: HashSet<String> = HashSet::new();
    let mut kept_sets: Vec<HashSet<String>> = Vec::new();
    for p in passages {
        if kept.len() >= max_passages {
            break;
        }
        let key = normalize_term(&p.text);
        if kept_keys.contains(&key) {
            continue;
        }
        let set = token_set(&p.text);
        if kept_sets.iter().any(|s| jaccard(s, &set) >= threshold) {
            continue;
        }
        kept_keys.insert(key);
        kept_sets.push(set);
        kept.push(p.clone());
    }
    kept
}
