use std::collections::HashSet;

use serde::Serialize;

use crate::lang::LanguageCode;
use crate::ontology::OntologyTree;
use crate::text::{normalize_term, nfc, Script};
use crate::textproc::{tokenize, Token};

use super::Passage;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Answer {
    /// Source sentences as found in the documents.
    pub passages: Vec<Passage>,
    /// Passage texts in the answer language, aligned with `passages`.
    pub rendered: Vec<String>,
    pub answer_language: LanguageCode,
    pub translated: bool,
    pub untranslated_terms: Vec<String>,
}

/// Word-by-word ontology gloss of `text`. Multi-word forms are matched
/// greedily (longest first) before single tokens; tokens the ontology does
/// not know pass through verbatim and are reported. Punctuation and spacing
/// between tokens are kept.
pub fn gloss(text: &str, from: LanguageCode, to: LanguageCode, tree: &OntologyTree) -> (String, Vec<String>) {
    let text = nfc(text);
    let tokens = tokenize(&text, from);
    let mut out = String::with_capacity(text.len());
    let mut untranslated = Vec::new();
    let mut cursor = 0;
    let mut i = 0;
    while i < tokens.len() {
        let (len, translation) = longest_match(&text, &tokens[i..], from, to, tree);
        let first = &tokens[i];
        let last = &tokens[i + len - 1];
        out.push_str(&text[cursor..first.byte_offset]);
        match translation {
            Some(t) => out.push_str(&t),
            None => {
                out.push_str(&first.surface);
                if matches!(first.script, Script::Latin | Script::Tamil) {
                    untranslated.push(first.surface.clone());
                }
            }
        }
        cursor = last.byte_offset + last.surface.len();
        i += len;
    }
    out.push_str(&text[cursor..]);
    (out, untranslated)
}

/// Longest token run starting at `tokens[0]` that the ontology can gloss.
/// Runs only span tokens separated by plain whitespace.
fn longest_match(
    text: &str,
    tokens: &[Token],
    from: LanguageCode,
    to: LanguageCode,
    tree: &OntologyTree,
) -> (usize, Option<String>) {
    let mut limit = 1;
    while limit < tokens.len().min(tree.max_phrase_words()) {
        let prev = &tokens[limit - 1];
        let gap = &text[prev.byte_offset + prev.surface.len()..tokens[limit].byte_offset];
        if gap.is_empty() || !gap.chars().all(char::is_whitespace) {
            break;
        }
        limit += 1;
    }
    for len in (1..=limit).rev() {
        let phrase = tokens[..len].iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" ");
        if let Some(first) = tree.translate_term(&phrase, from, to).into_iter().next() {
            return (len, Some(first));
        }
    }
    (1, None)
}

/// Renders passages in the answer language. Identity when `from == to`.
pub fn translate_answer(passages: &[Passage], from: LanguageCode, to: LanguageCode, tree: &OntologyTree) -> Answer {
    if from == to {
        return Answer {
            passages: passages.to_vec(),
            rendered: passages.iter().map(|p| p.text.clone()).collect(),
            answer_language: to,
            translated: false,
            untranslated_terms: Vec::new(),
        };
    }
    let mut rendered = Vec::with_capacity(passages.len());
    let mut untranslated_terms = Vec::new();
    let mut seen = HashSet::new();
    for p in passages {
        let (text, missing) = gloss(&p.text, from, to, tree);
        rendered.push(text);
        for term in missing {
            if seen.insert(normalize_term(&term)) {
                untranslated_terms.push(term);
            }
        }
    }
    Answer { passages: passages.to_vec(), rendered, answer_language: to, translated: true, untranslated_terms }
}
