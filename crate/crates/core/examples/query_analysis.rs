//! Show how a query is tokenized, tagged, matched against the ontology and
//! routed to a search language.
//!
//! ```sh
//! cargo run --example query_analysis -- "Different day of pongal"
//! ```

use ontoclir::data;
use ontoclir::textproc::{analyze_query, detect_language, pos_tag, tokenize};

fn main() {
    let query = std::env::args().nth(1).unwrap_or_else(|| "கிறிஸ்துமஸ் பரிசுகள்".to_owned());
    let tree = data::festival_ontology();
    let lexicons = data::lexicons();

    let lang = match detect_language(&query) {
        Ok(lang) => lang,
        Err(e) => return eprintln!("{e}"),
    };
    for t in pos_tag(&tokenize(&query, lang), &lexicons[&lang]) {
        println!("{:<24} {:<10} {:?}", t.token.surface, t.tag.to_string(), t.token.script);
    }

    match analyze_query(&query, None, &tree, &lexicons) {
        Ok(analysis) => {
            println!();
            println!("query language  : {}", analysis.query_language.name());
            let phrases: Vec<&str> = analysis.concepts.iter().map(|c| c.phrase.as_str()).collect();
            println!("concepts        : {}", phrases.join(", "));
            println!("search language : {}", analysis.search_language.name());
            println!("search keywords : {}", analysis.search_keywords.join(", "));
            println!("expansion terms : {}", analysis.expansion_terms.join(", "));
            if !analysis.dropped_keywords.is_empty() {
                println!("dropped         : {}", analysis.dropped_keywords.join(", "));
            }
        }
        Err(e) => eprintln!("analysis failed: {e}"),
    }
}
