//! Lexicon-driven part-of-speech tagger.
//!
//! Lookup order per token: exact lexicon entry, then the longest matching
//! suffix rule, then the lexicon's default tag.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::LanguageCode;
use crate::text::normalize_term;
use crate::textproc::Token;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Tag {
    Noun,
    Verb,
    Pronoun,
    Adposition,
    Adjective,
    Adverb,
    Determiner,
    Question,
    Other,
}

impl Tag {
    pub fn is_keyword(self) -> bool {
        matches!(self, Tag::Noun | Tag::Verb)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Noun => "NOUN",
            Tag::Verb => "VERB",
            Tag::Pronoun => "PRONOUN",
            Tag::Adposition => "ADPOSITION",
            Tag::Adjective => "ADJECTIVE",
            Tag::Adverb => "ADVERB",
            Tag::Determiner => "DETERMINER",
            Tag::Question => "QUESTION",
            Tag::Other => "OTHER",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "NOUN" => Tag::Noun,
            "VERB" => Tag::Verb,
            "PRONOUN" => Tag::Pronoun,
            "ADPOSITION" => Tag::Adposition,
            "ADJECTIVE" => Tag::Adjective,
            "ADVERB" => Tag::Adverb,
            "DETERMINER" => Tag::Determiner,
            "QUESTION" => Tag::Question,
            "OTHER" => Tag::Other,
            other => return Err(format!("unknown tag `{other}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedToken {
    pub token: Token,
    pub tag: Tag,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("lexicon line {line}: {message}")]
pub struct LexiconError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct Lexicon {
    pub language: LanguageCode,
    entries: HashMap<String, Tag>,
    /// Sorted longest suffix first.
    suffix_rules: Vec<(String, Tag)>,
    pub default_tag: Tag,
}

impl Lexicon {
    pub fn new(language: LanguageCode) -> Self {
        Lexicon { language, entries: HashMap::new(), suffix_rules: Vec::new(), default_tag: Tag::Noun }
    }

    /// Parses `surface<TAB>TAG`, `@suffix<TAB>suffix<TAB>TAG` and
    /// `@default<TAB>TAG` lines. `#` starts a comment line.
    pub fn parse(language: LanguageCode, source: &str) -> Result<Self, LexiconError> {
        let mut lexicon = Lexicon::new(language);
        for (idx, raw) in source.lines().enumerate() {
            let line = idx + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
            let tag_at = |i: usize| -> Result<Tag, LexiconError> {
                fields
                    .get(i)
                    .ok_or_else(|| LexiconError { line, message: "missing tag".into() })?
                    .parse()
                    .map_err(|message| LexiconError { line, message })
            };
            match fields[0] {
                "@suffix" => {
                    if fields.len() != 3 || fields[1].is_empty() {
                        return Err(LexiconError { line, message: "expected @suffix<TAB>suffix<TAB>TAG".into() });
                    }
                    lexicon.add_suffix(fields[1], tag_at(2)?);
                }
                "@default" => {
                    if fields.len() != 2 {
                        return Err(LexiconError { line, message: "expected @default<TAB>TAG".into() });
                    }
                    lexicon.default_tag = tag_at(1)?;
                }
                surface => {
                    if fields.len() != 2 || surface.is_empty() {
                        return Err(LexiconError { line, message: "expected surface<TAB>TAG".into() });
                    }
                    lexicon.insert(surface, tag_at(1)?);
                }
            }
        }
        Ok(lexicon)
    }

    pub fn insert(&mut self, surface: &str, tag: Tag) {
        self.entries.insert(normalize_term(surface), tag);
    }

    pub fn add_suffix(&mut self, suffix: &str, tag: Tag) {
        let suffix = normalize_term(suffix);
        let len = suffix.chars().count();
        let at = self.suffix_rules.partition_point(|(s, _)| s.chars().count() >= len);
        self.suffix_rules.insert(at, (suffix, tag));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, surface: &str) -> Option<Tag> {
        self.entries.get(&normalize_term(surface)).copied()
    }

    pub fn tag_word(&self, surface: &str) -> Tag {
        let key = normalize_term(surface);
        if let Some(tag) = self.entries.get(&key) {
            return *tag;
        }
        self.suffix_rules
            .iter()
            .find(|(suffix, _)| key.ends_with(suffix.as_str()))
            .map(|(_, tag)| *tag)
            .unwrap_or(self.default_tag)
    }
}

/// Tags each token; output is aligned one-to-one with the input.
pub fn pos_tag(tokens: &[Token], lexicon: &Lexicon) -> Vec<TaggedToken> {
    tokens
        .iter()
        .map(|token| TaggedToken { tag: lexicon.tag_word(&token.surface), token: token.clone() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textproc::tokenize;

    #[test]
    fn parse_and_precedence() {
        let lex = Lexicon::parse(
            LanguageCode::EN,
            "# test\nrun\tVERB\n@suffix\ttion\tNOUN\n@suffix\tion\tVERB\n@suffix\tly\tADVERB\n@default\tNOUN\n",
        )
        .unwrap();
        assert_eq!(lex.tag_word("Run"), Tag::Verb);
        // "tion" is longer than "ion" so it wins regardless of file order.
        assert_eq!(lex.tag_word("celebration"), Tag::Noun);
        assert_eq!(lex.tag_word("quickly"), Tag::Adverb);
        assert_eq!(lex.tag_word("zzzz"), Tag::Noun);
    }

    #[test]
    fn suffix_order_independent_of_insertion() {
        let mut lex = Lexicon::new(LanguageCode::TA);
        lex.add_suffix("து", Tag::Other);
        lex.add_suffix("கிறது", Tag::Verb);
        assert_eq!(lex.tag_word("கொண்டாடப்படுகிறது"), Tag::Verb);
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(Lexicon::parse(LanguageCode::EN, "run\n").unwrap_err().line, 1);
        assert!(Lexicon::parse(LanguageCode::EN, "run\tBOGUS\n").is_err());
        assert!(Lexicon::parse(LanguageCode::EN, "ok\tNOUN\n@suffix\tNOUN\n").is_err());
    }

    #[test]
    fn empty_tokens() {
        assert!(pos_tag(&[], &Lexicon::new(LanguageCode::EN)).is_empty());
    }

    #[test]
    fn unknown_falls_back_to_default() {
        let tokens = tokenize("zzzz", LanguageCode::EN);
        let tagged = pos_tag(&tokens, &Lexicon::new(LanguageCode::EN));
        assert_eq!(tagged[0].tag, Tag::Noun);
    }
}
