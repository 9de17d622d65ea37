//! Build a small document graph by hand and rank it with weighted PageRank.
//!
//! ```sh
//! cargo run --example pagerank_ranking
//! ```

use ontoclir::retrieval::{pagerank, DocGraph, PageRankParams};

fn main() {
    let docs = ["pongal-01", "pongal-02", "pongal-03", "diwali-01"];
    let mut graph = DocGraph::new(docs.iter().map(|d| d.to_string()).collect());
    // Edge weight: how many search terms two documents share.
    graph.connect(0, 1, 2.0).unwrap();
    graph.connect(0, 2, 3.0).unwrap();
    graph.connect(1, 2, 1.0).unwrap();
    // diwali-01 shares nothing and stays isolated.

    for damping in [0.5, 0.85, 0.95] {
        let params = PageRankParams { damping, ..PageRankParams::default() };
        let scores = pagerank(&graph, params).unwrap();
        let mut ranked: Vec<_> = scores.into_iter().collect();
        ranked.sort_by(|a, b| b.1.total_cmp(&a.1));
        println!("damping {damping}");
        for (doc, score) in ranked {
            println!("  {doc:<10} {score:.4}");
        }
    }
}
