use std::collections::BTreeMap;

use serde::Serialize;

use super::{Candidate, RetrievalConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedResult {
    pub doc_id: String,
    pub term_score: f64,
    pub pagerank_score: f64,
    pub combined: f64,
    pub rank: usize,
}

/// Blends normalized term evidence with PageRank:
/// `combined = alpha * term_score + (1 - alpha) * pagerank`, where
/// `term_score` is `main + expansion_weight * expansion` scaled by the
/// best candidate. Sorted by `combined` descending, then doc id.
pub fn rank(
    candidates: &[Candidate],
    pagerank_scores: &BTreeMap<String, f64>,
    config: &RetrievalConfig,
) -> Vec<RankedResult> {
    let raw: Vec<f64> = candidates
        .iter()
        .map(|c| c.main_hit_count as f64 + config.expansion_weight * c.expansion_hit_count as f64)
        .collect();
    let max = raw.iter().cloned().fold(0.0, f64::max);
    let mut results: Vec<RankedResult> = candidates
        .iter()
        .zip(raw)
        .map(|(c, r)| {
            let term_score = if max > 0.0 { r / max } else { 0.0 };
            let pagerank_score = pagerank_scores.get(&c.doc_id).copied().unwrap_or(0.0);
            let combined = (config.alpha * term_score + (1.0 - config.alpha) * pagerank_score).clamp(0.0, 1.0);
            RankedResult { doc_id: c.doc_id.clone(), term_score, pagerank_score, combined, rank: 0 }
        })
        .collect();
    results.sort_by(|a, b| b.combined.total_cmp(&a.combined).then_with(|| a.doc_id.cmp(&b.doc_id)));
    for (i, r) in results.iter_mut().enumerate() {
        r.rank = i + 1;
    }
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(id: &str, main: usize, exp: usize) -> Candidate {
        Candidate { doc_id: id.into(), hits: vec![], main_hit_count: main, expansion_hit_count: exp }
    }

    #[test]
    fn single_candidate_scores_one() {
        let pr = BTreeMap::from([("a".to_string(), 1.0)]);
        let out = rank(&[cand("a", 3, 0)], &pr, &RetrievalConfig::default());
        assert_eq!(out[0].rank, 1);
        assert!((out[0].combined - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ties_break_on_doc_id() {
        let pr = BTreeMap::from([("b".to_string(), 0.5), ("a".to_string(), 0.5)]);
        let out = rank(&[cand("b", 1, 0), cand("a", 1, 0)], &pr, &RetrievalConfig::default());
        assert_eq!(out.iter().map(|r| r.doc_id.as_str()).collect::<Vec<_>>(), ["a", "b"]);
        assert_eq!(out[1].rank, 2);
    }

    #[test]
    fn expansion_weighted_half() {
        let pr = BTreeMap::from([("a".to_string(), 0.5), ("b".to_string(), 0.5)]);
        let out = rank(&[cand("a", 2, 0), cand("b", 0, 2)], &pr, &RetrievalConfig::default());
        assert_eq!(out[0].doc_id, "a");
        assert!((out[1].term_score - 0.5).abs() < 1e-12);
    }
}
