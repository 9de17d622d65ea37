//! Query-side text processing: tokenization, tagging, keyword extraction
//! and the full query analysis that picks a search language.

mod analysis;
mod lexicon;
mod tokenize;

pub use analysis::{
    analyze_query, analyze_query_with_mode, detect_language, extract_keywords, AnalysisMode, ConceptMatch,
    QueryAnalysis, TextprocError,
};
pub use lexicon::{pos_tag, Lexicon, LexiconError, Tag, TaggedToken};
pub use tokenize::{majority_script, tokenize, Token};
