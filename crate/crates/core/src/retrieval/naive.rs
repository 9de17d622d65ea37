//! Brute-force substring search: every character position of the text is
//! tried against the pattern.

use unicode_normalization::UnicodeNormalization;

use crate::text::fold_char;

use super::RetrievalError;

/// All byte offsets (overlapping matches included) where `pattern` occurs
/// in the NFC form of `text`. Latin letters compare case-insensitively;
/// every other character compares exactly.
pub fn naive_find(text: &str, pattern: &str) -> Result<Vec<usize>, RetrievalError> {
    let pattern: Vec<char> = pattern.nfc().map(fold_char).collect();
    if pattern.is_empty() {
        return Err(RetrievalError::EmptyPattern);
    }
    let normalized: String = text.nfc().collect();
    let chars: Vec<(usize, char)> = normalized.char_indices().map(|(i, c)| (i, fold_char(c))).collect();
    let mut offsets = Vec::new();
    if chars.len() < pattern.len() {
        return Ok(offsets);
    }
    for start in 0..=chars.len() - pattern.len() {
        if chars[start..start + pattern.len()].iter().zip(&pattern).all(|((_, c), p)| c == p) {
            offsets.push(chars[start].0);
        }
    }
    Ok(offsets)
}
