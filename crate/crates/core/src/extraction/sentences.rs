use std::ops::Range;

use crate::lang::LanguageCode;

const TERMINATORS: [char; 4] = ['.', '!', '?', '।'];
const CLOSERS: [char; 4] = ['"', '\'', ')', '”'];
/// Words that end in a period without ending a sentence.
const ABBREVIATIONS: [&str; 11] = ["mr", "mrs", "ms", "dr", "st", "jr", "sr", "vs", "prof", "e.g", "i.e"];

fn is_abbreviation(body: &str, dot: usize) -> bool {
    let word_start = body[..dot].rfind(char::is_whitespace).map_or(0, |i| i + 1);
    let word = body[word_start..dot].trim_start_matches(['(', '"', '\'']).to_lowercase();
    ABBREVIATIONS.contains(&word.as_str())
}

/// Byte ranges of sentences in `body`, each trimmed of surrounding
/// whitespace. Everything outside the ranges is whitespace.
pub fn sentence_spans(body: &str) -> Vec<Range<usize>> {
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    let mut chars = body.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if start.is_none() {
            if c.is_whitespace() {
                continue;
            }
            start = Some(i);
        }
        if !TERMINATORS.contains(&c) {
            continue;
        }
        if c == '.' && is_abbreviation(body, i) {
            continue;
        }
        // Swallow runs like "?!" or a closing quote after the terminator.
        let mut end = i + c.len_utf8();
        while let Some(&(j, next)) = chars.peek() {
            if TERMINATORS.contains(&next) || CLOSERS.contains(&next) {
                end = j + next.len_utf8();
                chars.next();
            } else {
                break;
            }
        }
        let at_boundary = chars.peek().is_none_or(|(_, next)| next.is_whitespace());
        if at_boundary {
            spans.push(start.take().expect("inside a sentence")..end);
        }
    }
    if let Some(s) = start {
        let end = s + body[s..].trim_end().len();
        spans.push(s..end);
    }
    spans
}

/// Splits on `.`, `!`, `?` and `।` followed by whitespace or the end of text.
/// The language is accepted for future per-language rules; current rules
/// are shared.
pub fn split_sentences(body: &str, _lang: LanguageCode) -> Vec<String> {
    sentence_spans(body).into_iter().map(|r| body[r].to_owned()).collect()
}
