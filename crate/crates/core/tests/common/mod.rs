//! Fixture loading and independent reference implementations shared by the
//! integration tests. The oracles here deliberately avoid the library's own
//! helpers so that agreement means something.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use ontoclir::corpus::{self, CorpusIndex, LanguageRules};
use ontoclir::eval::{parse_qrels, parse_queries, EvalQuery, Qrels};
use ontoclir::{data, Config, Engine};

pub fn fixture_index() -> CorpusIndex {
    corpus::ingest(&data::corpus_dir(), &LanguageRules::default()).expect("bundled corpus ingests")
}

pub fn fixture_engine() -> Engine {
    Engine::new(data::festival_ontology(), data::lexicons(), fixture_index(), Config::default())
}

pub fn eval_path(name: &str) -> PathBuf {
    data::data_dir().join("eval").join(name)
}

pub fn fixture_queries() -> Vec<EvalQuery> {
    parse_queries(&fs::read_to_string(eval_path("queries.tsv")).unwrap()).unwrap()
}

pub fn fixture_qrels() -> Qrels {
    parse_qrels(&fs::read_to_string(eval_path("qrels.tsv")).unwrap()).unwrap()
}

/// Lowercases ASCII and Latin-1/Extended Latin letters, nothing else.
fn fold(c: char) -> char {
    if c.is_alphabetic() && (c.is_ascii() || ('\u{00C0}'..='\u{024F}').contains(&c)) {
        c.to_lowercase().next().unwrap_or(c)
    } else {
        c
    }
}

/// Sliding-window substring search over an already-normalized text:
/// compares every window of `pattern`'s length, reporting byte offsets.
pub fn sliding_window_find(text: &str, pattern: &str) -> Vec<usize> {
    let t: Vec<(usize, char)> = text.char_indices().collect();
    let p: Vec<char> = pattern.chars().map(fold).collect();
    let mut out = Vec::new();
    if p.is_empty() || p.len() > t.len() {
        return out;
    }
    for (k, window) in t.windows(p.len()).enumerate() {
        let mut same = true;
        for i in 0..p.len() {
            if fold(window[i].1) != p[i] {
                same = false;
                break;
            }
        }
        if same {
            out.push(t[k].0);
        }
    }
    out
}

/// Number of (possibly overlapping) occurrences of `needle` in `haystack`,
/// computed with `str::find` restarts.
pub fn grep_count(haystack: &str, needle: &str) -> usize {
    let haystack = haystack.to_lowercase();
    let needle = needle.to_lowercase();
    let mut count = 0;
    let mut from = 0;
    while let Some(pos) = haystack[from..].find(&needle) {
        count += 1;
        from += pos + haystack[from + pos..].chars().next().map_or(1, char::len_utf8);
    }
    count
}

/// PageRank from the transition-matrix definition: build the dense
/// column-stochastic matrix `M` (dangling columns uniform) and iterate
/// `x = (1-d)/n + d·M·x` a fixed, generous number of times.
pub fn dense_pagerank(n: usize, edges: &[(usize, usize, f64)], damping: f64) -> Vec<f64> {
    let mut w = vec![vec![0.0f64; n]; n];
    for &(a, b, weight) in edges {
        w[a][b] += weight;
        w[b][a] += weight;
    }
    let mut m = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        let out: f64 = w[i].iter().sum();
        for j in 0..n {
            m[j][i] = if out == 0.0 { 1.0 / n as f64 } else { w[i][j] / out };
        }
    }
    let mut x = vec![1.0 / n as f64; n];
    for _ in 0..2000 {
        let mut next = vec![(1.0 - damping) / n as f64; n];
        for j in 0..n {
            for i in 0..n {
                next[j] += damping * m[j][i] * x[i];
            }
        }
        x = next;
    }
    let total: f64 = x.iter().sum();
    x.iter().map(|v| v / total).collect()
}

/// `(id, parent, language -> forms)` as read from one ontology line.
type Row = (String, String, BTreeMap<String, Vec<String>>);

/// Pre-order descendant forms of `node` by plain recursion over the parent
/// column of the ontology file itself.
pub fn recursive_expand(source: &str, node: &str, lang: &str) -> Vec<String> {
    let rows: Vec<Row> = source
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let mut entries = BTreeMap::new();
            for part in f[3].split(';') {
                let (code, forms) = part.split_once('=').unwrap();
                entries.insert(code.to_owned(), forms.split('|').map(str::to_owned).collect());
            }
            (f[0].to_owned(), f[1].to_owned(), entries)
        })
        .collect();
    fn walk(rows: &[Row], node: &str, lang: &str, out: &mut Vec<String>) {
        for (id, parent, entries) in rows {
            if parent == node {
                for form in &entries[lang] {
                    if !out.iter().any(|f| f.to_lowercase() == form.to_lowercase()) {
                        out.push(form.clone());
                    }
                }
                walk(rows, id, lang, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(&rows, node, lang, &mut out);
    out
}
