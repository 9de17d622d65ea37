use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::lang::LanguageCode;
use crate::ontology::{NodeId, OntologyTree};
use crate::text::{is_latin_letter, is_tamil, nfc, normalize_term};
use crate::textproc::{pos_tag, tokenize, Lexicon, TaggedToken};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextprocError {
    #[error("query is empty")]
    EmptyQuery,
    #[error("query has no noun or verb keywords")]
    NoKeywords,
    #[error("no lexicon loaded for language `{0}`")]
    MissingLexicon(LanguageCode),
}

/// Whether the ontology participates in query analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AnalysisMode {
    WithOntology,
    KeywordsOnly,
}

/// An ontology concept recognised in the query, possibly spanning several tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConceptMatch {
    pub phrase: String,
    pub nodes: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryAnalysis {
    pub query: String,
    pub query_language: LanguageCode,
    pub keywords: Vec<String>,
    pub concepts: Vec<ConceptMatch>,
    pub matched_nodes: Vec<NodeId>,
    pub search_language: LanguageCode,
    /// Main search terms, already in the search language.
    pub search_keywords: Vec<String>,
    pub expansion_terms: Vec<String>,
    /// Keywords with no ontology entry that could not follow the query
    /// into another language.
    pub dropped_keywords: Vec<String>,
}

/// TA when Tamil-block code points strictly outnumber Latin letters.
pub fn detect_language(text: &str) -> Result<LanguageCode, TextprocError> {
    if text.trim().is_empty() {
        return Err(TextprocError::EmptyQuery);
    }
    let (mut tamil, mut latin) = (0usize, 0usize);
    for c in text.chars() {
        if is_tamil(c) {
            tamil += 1;
        } else if is_latin_letter(c) {
            latin += 1;
        }
    }
    Ok(if tamil > latin { LanguageCode::TA } else { LanguageCode::EN })
}

/// Noun and verb surfaces in order, deduplicated on their normalized form.
pub fn extract_keywords(tagged: &[TaggedToken]) -> Result<Vec<String>, TextprocError> {
    let mut seen = HashSet::new();
    let keywords: Vec<String> = tagged
        .iter()
        .filter(|t| t.tag.is_keyword())
        .filter(|t| seen.insert(normalize_term(&t.token.surface)))
        .map(|t| t.token.surface.clone())
        .collect();
    if keywords.is_empty() {
        Err(TextprocError::NoKeywords)
    } else {
        Ok(keywords)
    }
}

fn push_unique(list: &mut Vec<String>, seen: &mut HashSet<String>, term: String) {
    if seen.insert(normalize_term(&term)) {
        list.push(term);
    }
}

pub fn analyze_query(
    query: &str,
    declared_lang: Option<LanguageCode>,
    tree: &OntologyTree,
    lexicons: &BTreeMap<LanguageCode, Lexicon>,
) -> Result<QueryAnalysis, TextprocError> {
    analyze_query_with_mode(query, declared_lang, tree, lexicons, AnalysisMode::WithOntology)
}

pub fn analyze_query_with_mode(
    query: &str,
    declared_lang: Option<LanguageCode>,
    tree: &OntologyTree,
    lexicons: &BTreeMap<LanguageCode, Lexicon>,
    mode: AnalysisMode,
) -> Result<QueryAnalysis, TextprocError> {
    if query.trim().is_empty() {
        return Err(TextprocError::EmptyQuery);
    }
    let query_language = match declared_lang {
        Some(lang) => lang,
        None => detect_language(query)?,
    };
    let lexicon = lexicons.get(&query_language).ok_or(TextprocError::MissingLexicon(query_language))?;
    let tokens = tokenize(query, query_language);
    let tagged = pos_tag(&tokens, lexicon);
    let keywords = extract_keywords(&tagged)?;

    if mode == AnalysisMode::KeywordsOnly {
        return Ok(QueryAnalysis {
            query: nfc(query),
            query_language,
            search_keywords: keywords.clone(),
            keywords,
            concepts: Vec::new(),
            matched_nodes: Vec::new(),
            search_language: query_language,
            expansion_terms: Vec::new(),
            dropped_keywords: Vec::new(),
        });
    }

    let (concepts, terms) = match_concepts(&tagged, tree, query_language);

    let mut matched_nodes: Vec<NodeId> = Vec::new();
    for concept in &concepts {
        for id in &concept.nodes {
            if !matched_nodes.contains(id) {
                matched_nodes.push(id.clone());
            }
        }
    }

    let search_language = vote_search_language(tree, &matched_nodes, query_language);

    let mut search_keywords = Vec::new();
    let mut seen_main = HashSet::new();
    let mut dropped_keywords = Vec::new();
    for term in &terms {
        match term {
            QueryTerm::Concept(idx) => {
                for t in tree.translate_term(&concepts[*idx].phrase, query_language, search_language) {
                    push_unique(&mut search_keywords, &mut seen_main, t);
                }
            }
            QueryTerm::Unmatched(word) if search_language == query_language => {
                push_unique(&mut search_keywords, &mut seen_main, word.clone());
            }
            QueryTerm::Unmatched(word) => dropped_keywords.push(word.clone()),
        }
    }

    let mut expansion_terms = Vec::new();
    let mut seen_expansion = HashSet::new();
    for id in &matched_nodes {
        for form in tree.expand(id, search_language).expect("matched node exists") {
            push_unique(&mut expansion_terms, &mut seen_expansion, form);
        }
    }
    for concept in &concepts {
        for term in tree.translate_term(&concept.phrase, query_language, search_language) {
            push_unique(&mut expansion_terms, &mut seen_expansion, term);
        }
    }

    Ok(QueryAnalysis {
        query: nfc(query),
        query_language,
        keywords,
        concepts,
        matched_nodes,
        search_language,
        search_keywords,
        expansion_terms,
        dropped_keywords,
    })
}

enum QueryTerm {
    Concept(usize),
    Unmatched(String),
}

/// Greedy longest match of multi-word ontology forms over the token stream,
/// then single-token lookup for the remaining keywords. A phrase only counts
/// when at least one of its tokens is a keyword. Terms come back in query order.
fn match_concepts(
    tagged: &[TaggedToken],
    tree: &OntologyTree,
    lang: LanguageCode,
) -> (Vec<ConceptMatch>, Vec<QueryTerm>) {
    let mut concepts: Vec<ConceptMatch> = Vec::new();
    let mut terms = Vec::new();
    let mut seen = HashSet::new();
    let max_words = tree.max_phrase_words();
    let mut i = 0;
    while i < tagged.len() {
        let mut consumed = 0;
        for len in (2..=max_words.min(tagged.len() - i)).rev() {
            let span = &tagged[i..i + len];
            if !span.iter().any(|t| t.tag.is_keyword()) {
                continue;
            }
            let phrase = span.iter().map(|t| t.token.surface.as_str()).collect::<Vec<_>>().join(" ");
            let nodes = tree.lookup(&phrase, lang);
            if !nodes.is_empty() {
                if seen.insert(normalize_term(&phrase)) {
                    terms.push(QueryTerm::Concept(concepts.len()));
                    concepts.push(ConceptMatch { phrase, nodes });
                }
                consumed = len;
                break;
            }
        }
        if consumed > 0 {
            i += consumed;
            continue;
        }
        let token = &tagged[i];
        if token.tag.is_keyword() && seen.insert(normalize_term(&token.token.surface)) {
            let nodes = tree.lookup(&token.token.surface, lang);
            if nodes.is_empty() {
                terms.push(QueryTerm::Unmatched(token.token.surface.clone()));
            } else {
                terms.push(QueryTerm::Concept(concepts.len()));
                concepts.push(ConceptMatch { phrase: token.token.surface.clone(), nodes });
            }
        }
        i += 1;
    }
    (concepts, terms)
}

/// Majority vote over matched nodes' root languages, each node counted
/// once. Ties and no-match fall back to the query language.
fn vote_search_language(tree: &OntologyTree, nodes: &[NodeId], query_language: LanguageCode) -> LanguageCode {
    let mut votes: BTreeMap<LanguageCode, usize> = BTreeMap::new();
    for id in nodes {
        if let Ok(lang) = tree.search_language(id) {
            *votes.entry(lang).or_default() += 1;
        }
    }
    let Some(&top) = votes.values().max() else {
        return query_language;
    };
    let leaders: Vec<LanguageCode> = votes.iter().filter(|(_, &n)| n == top).map(|(l, _)| *l).collect();
    if leaders.len() == 1 {
        leaders[0]
    } else {
        query_language
    }
}
