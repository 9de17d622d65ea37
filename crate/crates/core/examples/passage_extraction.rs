//! Split a document into sentences, pick the ones that answer a query,
//! remove near duplicates and gloss them into English.

use ontoclir::extraction::{consolidate, extract_passages, split_sentences, translate_answer};
use ontoclir::{data, LanguageCode};
use ontoclir::textproc::analyze_query;

const BODY: &str = "பொங்கல் தை மாதம் முதல் நாள் கொண்டாடப்படுகிறது. \
மாட்டு பொங்கல் அன்று மாடுகளை அலங்கரிக்கிறார்கள். \
மாட்டு பொங்கல் அன்று மாடுகளை அலங்கரிக்கிறார்கள். \
மாலையில் மழை பெய்தது.";

fn main() {
    let tree = data::festival_ontology();
    let analysis = analyze_query("Different day of pongal", None, &tree, &data::lexicons()).unwrap();

    for (i, s) in split_sentences(BODY, LanguageCode::TA).iter().enumerate() {
        println!("{i}: {s}");
    }
    let passages = extract_passages(&[("ta/example", BODY)], &analysis, 1).unwrap();
    println!("\n{} qualifying sentences", passages.len());
    let passages = consolidate(&passages, 5, 0.8);
    println!("{} after removing duplicates\n", passages.len());

    let answer = translate_answer(&passages, analysis.search_language, analysis.query_language, &tree);
    for line in &answer.rendered {
        println!("{line}");
    }
    println!("\nno gloss for: {}", answer.untranslated_terms.join(", "));
}
