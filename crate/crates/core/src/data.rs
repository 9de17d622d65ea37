//! Bundled festival-domain data: ontology, lexicons and the toy corpus.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::lang::LanguageCode;
use crate::ontology::{load_tree, OntologyTree};
use crate::textproc::Lexicon;

pub const FESTIVAL_ONTOLOGY: &str = include_str!("../data/ontology/festival.tsv");
pub const LEXICON_EN: &str = include_str!("../data/lexicon/en.tsv");
pub const LEXICON_TA: &str = include_str!("../data/lexicon/ta.tsv");

pub fn festival_ontology() -> OntologyTree {
    load_tree(FESTIVAL_ONTOLOGY).expect("bundled ontology is valid")
}

pub fn lexicons() -> BTreeMap<LanguageCode, Lexicon> {
    BTreeMap::from([
        (LanguageCode::EN, Lexicon::parse(LanguageCode::EN, LEXICON_EN).expect("bundled EN lexicon")),
        (LanguageCode::TA, Lexicon::parse(LanguageCode::TA, LEXICON_TA).expect("bundled TA lexicon")),
    ])
}

/// Data directory of the source checkout (corpus, eval fixtures).
pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn corpus_dir() -> PathBuf {
    data_dir().join("corpus")
}
