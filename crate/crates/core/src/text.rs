//! Unicode helpers shared by every module: NFC normalization, script
//! classification and Latin-only case folding.

use unicode_normalization::UnicodeNormalization;

/// Script class of a character or token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Script {
    Latin,
    Tamil,
    Digit,
    Other,
}

pub fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// Tamil Unicode block, U+0B80..=U+0BFF.
pub fn is_tamil(c: char) -> bool {
    ('\u{0B80}'..='\u{0BFF}').contains(&c)
}

/// Latin letters: ASCII, Latin-1 Supplement, Extended-A/B and Extended Additional.
pub fn is_latin_letter(c: char) -> bool {
    c.is_ascii_alphabetic()
        || (('\u{00C0}'..='\u{024F}').contains(&c) && c != '\u{00D7}' && c != '\u{00F7}')
        || ('\u{1E00}'..='\u{1EFF}').contains(&c)
}

pub fn script_of(c: char) -> Script {
    if is_tamil(c) {
        // Tamil digits live inside the block; treat them as digits.
        if ('\u{0BE6}'..='\u{0BEF}').contains(&c) {
            Script::Digit
        } else {
            Script::Tamil
        }
    } else if is_latin_letter(c) {
        Script::Latin
    } else if c.is_numeric() {
        Script::Digit
    } else {
        Script::Other
    }
}

/// Lowercases Latin letters; every other character is returned unchanged.
pub fn fold_char(c: char) -> char {
    if is_latin_letter(c) {
        let mut lower = c.to_lowercase();
        match (lower.next(), lower.next()) {
            (Some(l), None) => l,
            _ => c,
        }
    } else {
        c
    }
}

/// Canonical lookup key: NFC, Latin lowercased, whitespace runs collapsed.
pub fn normalize_term(s: &str) -> String {
    let folded: String = s.nfc().map(fold_char).collect();
    folded.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// True for characters that belong inside a word token.
pub fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || is_tamil(c) || c == '\u{200C}' || c == '\u{200D}'
}
