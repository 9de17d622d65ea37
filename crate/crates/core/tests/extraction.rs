mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use ontoclir::extraction::{
    consolidate, extract_passages, sentence_spans, split_sentences, translate_answer, ExtractionError, Passage,
};
use ontoclir::retrieval::{search_terms, TermKind};
use ontoclir::textproc::AnalysisMode;
use ontoclir::{data, LanguageCode};

const EN: LanguageCode = LanguageCode::EN;
const TA: LanguageCode = LanguageCode::TA;

#[test]
fn sentence_splitting_examples() {
    assert_eq!(split_sentences("A. B!", EN), ["A.", "B!"]);
    assert!(split_sentences("", EN).is_empty());
    assert_eq!(split_sentences("St. Nicholas came. Then left", EN), ["St. Nicholas came.", "Then left"]);
    assert_eq!(split_sentences("முதல் வரி। இரண்டாம் வரி.", TA), ["முதல் வரி।", "இரண்டாம் வரி."]);
}

#[test]
fn fixture_sentences_reconstruct_their_documents() {
    for doc in common::fixture_index().documents() {
        let spans = sentence_spans(&doc.body);
        let mut cursor = 0;
        for span in &spans {
            assert!(span.start >= cursor && span.start < span.end, "{}", doc.id);
            assert!(doc.body[cursor..span.start].trim().is_empty(), "{}", doc.id);
            cursor = span.end;
        }
        assert!(doc.body[cursor..].trim().is_empty(), "{}", doc.id);
        let rebuilt: String = spans.iter().map(|s| &doc.body[s.clone()]).collect::<Vec<_>>().join(" ");
        let collapse = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ");
        assert_eq!(collapse(&rebuilt), collapse(&doc.body), "{}", doc.id);
    }
}

#[test]
fn passages_follow_sentence_order() {
    let engine = common::fixture_engine();
    let analysis = engine.analyze("Easter eggs", Some(EN), AnalysisMode::KeywordsOnly).unwrap();
    let body = "Spring has come. Winter is over. We paint eggs today.";
    let passages = extract_passages(&[("d", body)], &analysis, 1).unwrap();
    assert_eq!(passages.len(), 1);
    assert_eq!(passages[0].sentence_index, 2);

    let body = "Eggs are painted. Nothing here. Easter comes.";
    let passages = extract_passages(&[("d", body)], &analysis, 1).unwrap();
    assert_eq!(passages.iter().map(|p| p.sentence_index).collect::<Vec<_>>(), [0, 2]);

    assert_eq!(extract_passages(&[("d", "Nothing here.")], &analysis, 1), Err(ExtractionError::NoPassages));
}

#[test]
fn pongal_passages_contain_query_evidence() {
    let engine = common::fixture_engine();
    let response = engine.query("பொங்கல் எப்பொழுது", None, false).unwrap();
    let terms = search_terms(&response.query_analysis);
    assert!(!response.answer.passages.is_empty());
    for p in &response.answer.passages {
        let expansion_hits = terms.iter().filter(|(t, k)| *k == TermKind::Expansion && p.text.contains(t.as_str())).count();
        assert!(p.text.contains("பொங்கல்") || expansion_hits >= 2, "{}", p.text);
    }
}

fn passage(doc: &str, text: &str) -> Passage {
    Passage { doc_id: doc.into(), sentence_index: 0, text: text.into(), matched_terms: vec![] }
}

#[test]
fn consolidation_examples() {
    let same = [passage("a", "Pongal is a harvest festival."), passage("b", "Pongal is a harvest festival.")];
    assert_eq!(consolidate(&same, 5, 0.8).len(), 1);

    // 19 shared words out of 24 distinct: Jaccard 0.79.
    let shared: Vec<String> = (0..19).map(|i| format!("w{i}")).collect();
    let left = format!("{} x1 x2 x3 x4 x5", shared.join(" "));
    let right = shared.join(" ");
    let pair = [passage("a", &left), passage("b", &right)];
    assert_eq!(consolidate(&pair, 5, 0.8).len(), 2);
}

/// Greedy pairwise dedup written against plain word sets.
fn dedup_oracle(texts: &[String], threshold: f64) -> Vec<BTreeSet<String>> {
    let words = |t: &str| -> BTreeSet<String> {
        t.split(|c: char| !c.is_alphanumeric()).filter(|w| !w.is_empty()).map(str::to_lowercase).collect()
    };
    let mut kept: Vec<BTreeSet<String>> = Vec::new();
    for t in texts {
        let w = words(t);
        let near = kept.iter().any(|k| {
            let inter = k.intersection(&w).count() as f64;
            let union = k.union(&w).count() as f64;
            union == 0.0 || inter / union >= threshold
        });
        if !near {
            kept.push(w);
        }
    }
    kept
}

const BASES: [&str; 4] = [
    "Pongal falls in the Tamil month of Thai.",
    "Diwali lamps are lit at dusk.",
    "Christmas gifts are opened in the morning.",
    "The Romans moved the new year to January.",
];

fn duplicates() -> impl Strategy<Value = Vec<String>> {
    proptest::collection::vec((0..BASES.len(), any::<bool>()), 1..12).prop_map(|picks| {
        picks.into_iter().map(|(i, upper)| if upper { BASES[i].to_uppercase() } else { BASES[i].to_owned() }).collect()
    })
}

proptest! {
    #[test]
    fn consolidate_agrees_with_oracle(texts in duplicates(), threshold in 0.5f64..1.0) {
        let passages: Vec<Passage> = texts.iter().enumerate().map(|(i, t)| passage(&format!("d{i}"), t)).collect();
        let got = consolidate(&passages, usize::MAX, threshold);
        let expected = dedup_oracle(&texts, threshold);
        prop_assert_eq!(got.len(), expected.len());
        let again = consolidate(&got, usize::MAX, threshold);
        prop_assert_eq!(again, got);
    }

    #[test]
    fn consolidate_is_order_insensitive_on_duplicates(texts in duplicates(), seed in any::<u64>()) {
        let passages: Vec<Passage> = texts.iter().map(|t| passage("d", t)).collect();
        let mut shuffled = passages.clone();
        // Fisher-Yates with a small LCG; only the permutation matters here.
        let mut state = seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        let key = |ps: Vec<Passage>| ps.into_iter().map(|p| p.text.to_lowercase()).collect::<BTreeSet<_>>();
        prop_assert_eq!(key(consolidate(&passages, usize::MAX, 0.8)), key(consolidate(&shuffled, usize::MAX, 0.8)));
    }

    #[test]
    fn consolidate_respects_the_cap(texts in duplicates(), cap in 0usize..4) {
        let passages: Vec<Passage> = texts.iter().map(|t| passage("d", t)).collect();
        prop_assert!(consolidate(&passages, cap, 0.8).len() <= cap);
    }
}

#[test]
fn same_language_answer_is_verbatim() {
    let tree = data::festival_ontology();
    let ps = [passage("d", "Easter eggs are painted.")];
    let answer = translate_answer(&ps, EN, EN, &tree);
    assert_eq!(answer.rendered, ["Easter eggs are painted."]);
    assert!(!answer.translated);
    assert!(answer.untranslated_terms.is_empty());
}

#[test]
fn tamil_passage_glossed_into_english() {
    let tree = data::festival_ontology();
    let ps = [passage("ta/pongal-01", "பொங்கல் தமிழர்களின் அறுவடைத் திருநாள் ஆகும்.")];
    let answer = translate_answer(&ps, TA, EN, &tree);
    assert_eq!(answer.answer_language, EN);
    assert!(answer.translated);
    assert_eq!(answer.rendered, ["Pongal தமிழர்களின் அறுவடைத் திருநாள் ஆகும்."]);
    assert_eq!(answer.untranslated_terms, ["தமிழர்களின்", "அறுவடைத்", "திருநாள்", "ஆகும்"]);
}

#[test]
fn passage_without_ontology_terms_passes_through() {
    let tree = data::festival_ontology();
    let ps = [passage("d", "குழந்தைகள் மேளம் அடித்து மகிழ்கிறார்கள்.")];
    let answer = translate_answer(&ps, TA, EN, &tree);
    assert_eq!(answer.rendered[0], ps[0].text);
    assert_eq!(answer.untranslated_terms, ["குழந்தைகள்", "மேளம்", "அடித்து", "மகிழ்கிறார்கள்"]);
}
