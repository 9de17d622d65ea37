//! Look up terms in the bundled festival ontology, expand them to their
//! sub-concepts and gloss them into the other language.
//!
//! ```sh
//! cargo run --example ontology_lookup -- பொங்கல்
//! ```

use ontoclir::textproc::detect_language;
use ontoclir::{data, LanguageCode};

fn main() {
    let term = std::env::args().nth(1).unwrap_or_else(|| "Christmas".to_owned());
    let tree = data::festival_ontology();
    let lang = detect_language(&term).unwrap_or(LanguageCode::EN);
    let other = if lang == LanguageCode::EN { LanguageCode::TA } else { LanguageCode::EN };

    let ids = tree.lookup(&term, lang);
    if ids.is_empty() {
        println!("`{term}` is not in the ontology");
        return;
    }
    for id in ids {
        let search = tree.search_language(&id).expect("looked-up node exists");
        println!("node `{id}` (searched in {})", search.name());
        println!("  {} gloss: {}", other.name(), tree.translate_term(&term, lang, other).join(", "));
        for l in [LanguageCode::EN, LanguageCode::TA] {
            println!("  {} expansion: {}", l.name(), tree.expand(&id, l).unwrap().join(", "));
        }
    }
}
