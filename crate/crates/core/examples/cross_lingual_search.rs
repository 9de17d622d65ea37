//! Index the bundled corpus and answer a query end to end. The answer comes
//! back in the language the question was asked in, even when the documents
//! searched were in the other one.
//!
//! ```sh
//! cargo run --example cross_lingual_search -- "explain about crackers"
//! ```

use ontoclir::corpus::{ingest, LanguageRules};
use ontoclir::{data, Config, Engine};

fn main() {
    let query = std::env::args().nth(1).unwrap_or_else(|| "Different day of pongal".to_owned());
    let index = ingest(&data::corpus_dir(), &LanguageRules::default()).expect("bundled corpus");
    let engine = Engine::new(data::festival_ontology(), data::lexicons(), index, Config::default());

    let response = match engine.query(&query, None, true) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("[{}] {e}", e.code());
            std::process::exit(e.exit_code());
        }
    };
    let analysis = &response.query_analysis;
    println!("{query}");
    println!("asked in {}, searched in {}", analysis.query_language.name(), analysis.search_language.name());
    for r in &response.ranked {
        println!("{:>2}. {:<22} term {:.3}  pagerank {:.3}  combined {:.3}", r.rank, r.doc_id, r.term_score, r.pagerank_score, r.combined);
    }
    println!();
    for (passage, text) in response.answer.passages.iter().zip(&response.answer.rendered) {
        println!("[{}] {text}", passage.doc_id);
    }
    if let Some(t) = &response.timings {
        println!();
        println!("{:.2} ms total", t.analysis_ms + t.retrieval_ms + t.ranking_ms + t.extraction_ms + t.translation_ms);
    }
}
