use serde::Serialize;

use crate::lang::LanguageCode;
use crate::text::{is_word_char, nfc, script_of, Script};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Token {
    pub surface: String,
    /// Byte offset into the NFC form of the input.
    pub byte_offset: usize,
    pub script: Script,
}

/// Splits on whitespace and punctuation, dropping the delimiters. The
/// language argument is accepted for symmetry with the tagger; splitting
/// rules are script-driven and identical for every language.
pub fn tokenize(text: &str, _lang: LanguageCode) -> Vec<Token> {
    let normalized = nfc(text);
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in normalized.char_indices() {
        match (is_word_char(c), start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                tokens.push(make_token(&normalized[s..i], s));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        tokens.push(make_token(&normalized[s..], s));
    }
    tokens
}

fn make_token(surface: &str, byte_offset: usize) -> Token {
    Token { surface: surface.to_owned(), byte_offset, script: majority_script(surface) }
}

/// Majority script over the token's characters. Ties prefer Tamil, then
/// Latin, then digits.
pub fn majority_script(surface: &str) -> Script {
    let mut counts = [0usize; 4];
    for c in surface.chars() {
        let slot = match script_of(c) {
            Script::Tamil => 0,
            Script::Latin => 1,
            Script::Digit => 2,
            Script::Other => 3,
        };
        counts[slot] += 1;
    }
    let order = [Script::Tamil, Script::Latin, Script::Digit, Script::Other];
    let mut best = 3;
    for slot in 0..4 {
        if counts[slot] > counts[best] || (counts[slot] == counts[best] && slot < best) {
            best = slot;
        }
    }
    order[best]
}
