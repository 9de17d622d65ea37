//! Score the bundled six-query set with and without the ontology and print
//! the per-language comparison.
//!
//! ```sh
//! cargo run --example evaluate
//! ```

use std::fs;

use ontoclir::corpus::{ingest, LanguageRules};
use ontoclir::eval::{compare_modes, parse_qrels, parse_queries};
use ontoclir::{data, Config, Engine};

fn main() {
    let eval_dir = data::data_dir().join("eval");
    let queries = parse_queries(&fs::read_to_string(eval_dir.join("queries.tsv")).unwrap()).unwrap();
    let qrels = parse_qrels(&fs::read_to_string(eval_dir.join("qrels.tsv")).unwrap()).unwrap();
    let index = ingest(&data::corpus_dir(), &LanguageRules::default()).unwrap();
    let engine = Engine::new(data::festival_ontology(), data::lexicons(), index, Config::default());

    let cmp = compare_modes(&queries, &qrels, &engine, 4);
    println!("keywords only\n{}", cmp.keywords_only.to_tsv());
    println!("with ontology\n{}", cmp.with_ontology.to_tsv());
    print!("{}", cmp.to_tsv());
}
