//! Bilingual English/Tamil information retrieval.
//!
//! A query is tagged, its nouns and verbs are located in a multilingual
//! ontology tree, and the concepts' root languages decide which half of the
//! corpus to search. Documents are shortlisted by naive substring search,
//! ranked by a blend of term evidence and PageRank over a shared-term
//! graph, mined for answer sentences, and glossed back into the query
//! language through the same ontology.
//!
//! ```no_run
//! use ontoclir::{corpus, data, Config, Engine, LanguageCode};
//!
//! let index = corpus::ingest(&data::corpus_dir(), &corpus::LanguageRules::default()).unwrap();
//! let engine = Engine::new(data::festival_ontology(), data::lexicons(), index, Config::default());
//! let response = engine.query("Different day of pongal", Some(LanguageCode::EN), false).unwrap();
//! assert_eq!(response.query_analysis.search_language, LanguageCode::TA);
//! ```

pub mod config;
pub mod corpus;
pub mod data;
pub mod engine;
pub mod eval;
pub mod extraction;
pub mod lang;
pub mod ontology;
pub mod retrieval;
pub mod server;
pub mod text;
pub mod textproc;

pub use config::Config;
pub use engine::{Engine, QueryError, QueryResponse};
pub use lang::LanguageCode;
pub use ontology::{load_tree, OntologyTree};
