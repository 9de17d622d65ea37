//! Multilingual ontology tree.
//!
//! Every node carries surface forms for each registered language plus a
//! root-language attribute naming the language a concept is most at home
//! in. The tree drives three things downstream: picking the search
//! language for a query, harvesting related terms from a concept's
//! descendants, and glossing terms between languages.
//!
//! File format, one record per line, tab separated:
//!
//! ```text
//! node-id<TAB>parent-id or -<TAB>root-language<TAB>lang=form|form;lang=form
//! ```
//!
//! Lines starting with `#` are comments. Children keep file order.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::lang::{self, LanguageCode};
use crate::text::{nfc, normalize_term};

pub type NodeId = String;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OntologyError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cycle detected at node `{node}`")]
    CycleDetected { node: NodeId },
    #[error("node `{node}` has no entry for language `{language}`")]
    MissingLanguageEntry { node: NodeId, language: LanguageCode },
    #[error("duplicate node id `{node}`")]
    DuplicateNodeId { node: NodeId },
    #[error("node `{node}` references unknown parent `{parent}`")]
    DanglingParentReference { node: NodeId, parent: NodeId },
    #[error("node `{node}` has an empty surface form")]
    EmptySurfaceForm { node: NodeId },
    #[error("ontology has no nodes")]
    Empty,
    #[error("ontology has more than one root: `{first}` and `{second}`")]
    MultipleRoots { first: NodeId, second: NodeId },
    #[error("unknown node `{0}`")]
    UnknownNode(NodeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OntologyNode {
    pub id: NodeId,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub entries: BTreeMap<LanguageCode, Vec<String>>,
    pub root_language: LanguageCode,
}

impl OntologyNode {
    /// Surface forms for `lang`; empty slice if the language is absent.
    pub fn forms(&self, lang: LanguageCode) -> &[String] {
        self.entries.get(&lang).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Validated, immutable ontology.
#[derive(Debug, Clone, PartialEq)]
pub struct OntologyTree {
    nodes: HashMap<NodeId, OntologyNode>,
    root: NodeId,
    term_index: HashMap<(LanguageCode, String), Vec<NodeId>>,
    max_phrase_words: usize,
}

/// Raw record as read from a file, before validation.
#[derive(Debug, Clone)]
struct Record {
    id: NodeId,
    parent: Option<NodeId>,
    root_language: LanguageCode,
    entries: BTreeMap<LanguageCode, Vec<String>>,
}

fn parse_language(code: &str, line: usize) -> Result<LanguageCode, OntologyError> {
    LanguageCode::parse(code).ok_or_else(|| OntologyError::Parse {
        line,
        message: format!("unregistered language `{code}`"),
    })
}

fn parse_record(raw: &str, line: usize) -> Result<Record, OntologyError> {
    let fields: Vec<&str> = raw.split('\t').collect();
    if fields.len() != 4 {
        return Err(OntologyError::Parse {
            line,
            message: format!("expected 4 tab-separated fields, found {}", fields.len()),
        });
    }
    let id = fields[0].trim();
    if id.is_empty() {
        return Err(OntologyError::Parse { line, message: "empty node id".into() });
    }
    let parent = match fields[1].trim() {
        "-" => None,
        "" => return Err(OntologyError::Parse { line, message: "empty parent field".into() }),
        p => Some(p.to_owned()),
    };
    let root_language = parse_language(fields[2], line)?;

    let mut entries: BTreeMap<LanguageCode, Vec<String>> = BTreeMap::new();
    for group in fields[3].split(';').filter(|g| !g.trim().is_empty()) {
        let (code, forms) = group.split_once('=').ok_or_else(|| OntologyError::Parse {
            line,
            message: format!("entry `{group}` is not of the form lang=forms"),
        })?;
        let lang = parse_language(code, line)?;
        let list = entries.entry(lang).or_default();
        for form in forms.split('|') {
            let form = nfc(form.trim());
            if form.is_empty() {
                return Err(OntologyError::EmptySurfaceForm { node: id.to_owned() });
            }
            list.push(form);
        }
    }
    Ok(Record { id: id.to_owned(), parent, root_language, entries })
}

/// Parses and validates ontology file content.
pub fn load_tree(source: &str) -> Result<OntologyTree, OntologyError> {
    let mut records = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        records.push(parse_record(trimmed, idx + 1)?);
    }
    OntologyTree::from_records(records)
}

impl OntologyTree {
    fn from_records(records: Vec<Record>) -> Result<Self, OntologyError> {
        if records.is_empty() {
            return Err(OntologyError::Empty);
        }
        let mut seen = HashSet::new();
        for r in &records {
            if !seen.insert(r.id.as_str()) {
                return Err(OntologyError::DuplicateNodeId { node: r.id.clone() });
            }
        }
        for r in &records {
            if let Some(parent) = &r.parent {
                if !seen.contains(parent.as_str()) {
                    return Err(OntologyError::DanglingParentReference {
                        node: r.id.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }
        let languages = lang::registered();
        for r in &records {
            for info in &languages {
                if r.entries.get(&info.code).is_none_or(|forms| forms.is_empty()) {
                    return Err(OntologyError::MissingLanguageEntry {
                        node: r.id.clone(),
                        language: info.code,
                    });
                }
            }
        }

        // Walk each parent chain; revisiting a node means a cycle.
        let parent_of: HashMap<&str, Option<&str>> =
            records.iter().map(|r| (r.id.as_str(), r.parent.as_deref())).collect();
        for r in &records {
            let mut visited = HashSet::new();
            let mut cursor = Some(r.id.as_str());
            while let Some(id) = cursor {
                if !visited.insert(id) {
                    return Err(OntologyError::CycleDetected { node: id.to_owned() });
                }
                cursor = parent_of[id];
            }
        }

        let mut roots = records.iter().filter(|r| r.parent.is_none());
        let root = roots.next().map(|r| r.id.clone()).ok_or(OntologyError::Empty)?;
        if let Some(second) = roots.next() {
            return Err(OntologyError::MultipleRoots { first: root, second: second.id.clone() });
        }

        let mut nodes: HashMap<NodeId, OntologyNode> = records
            .iter()
            .map(|r| {
                (
                    r.id.clone(),
                    OntologyNode {
                        id: r.id.clone(),
                        parent: r.parent.clone(),
                        children: Vec::new(),
                        entries: r.entries.clone(),
                        root_language: r.root_language,
                    },
                )
            })
            .collect();
        for r in &records {
            if let Some(parent) = &r.parent {
                nodes.get_mut(parent).expect("parent checked").children.push(r.id.clone());
            }
        }

        let mut term_index: HashMap<(LanguageCode, String), Vec<NodeId>> = HashMap::new();
        let mut max_phrase_words = 1;
        for r in &records {
            for (lang, forms) in &r.entries {
                for form in forms {
                    let key = normalize_term(form);
                    max_phrase_words = max_phrase_words.max(key.split(' ').count());
                    let ids = term_index.entry((*lang, key)).or_default();
                    if !ids.contains(&r.id) {
                        ids.push(r.id.clone());
                    }
                }
            }
        }

        Ok(OntologyTree { nodes, root, term_index, max_phrase_words })
    }

    pub fn root(&self) -> &str {
        &self.root
    }

    pub fn node(&self, id: &str) -> Option<&OntologyNode> {
        self.nodes.get(id)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Longest surface form measured in words; bounds phrase matching.
    pub fn max_phrase_words(&self) -> usize {
        self.max_phrase_words
    }

    /// Node ids in pre-order from the root.
    pub fn preorder(&self) -> Vec<&str> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root.as_str()];
        while let Some(id) = stack.pop() {
            out.push(id);
            for child in self.nodes[id].children.iter().rev() {
                stack.push(child);
            }
        }
        out
    }

    /// Iterates over the term index as `(language, normalized form, node ids)`.
    pub fn indexed_terms(&self) -> impl Iterator<Item = (LanguageCode, &str, &[NodeId])> {
        self.term_index.iter().map(|((lang, key), ids)| (*lang, key.as_str(), ids.as_slice()))
    }

    pub fn term_count(&self) -> usize {
        self.term_index.len()
    }

    /// Nodes whose `lang` entries contain `term` after normalization.
    pub fn lookup(&self, term: &str, lang: LanguageCode) -> Vec<NodeId> {
        self.term_index.get(&(lang, normalize_term(term))).cloned().unwrap_or_default()
    }

    pub fn search_language(&self, node: &str) -> Result<LanguageCode, OntologyError> {
        self.nodes
            .get(node)
            .map(|n| n.root_language)
            .ok_or_else(|| OntologyError::UnknownNode(node.to_owned()))
    }

    /// Surface forms in `lang` of every descendant of `node`, pre-order,
    /// deduplicated on first occurrence. The node's own forms are excluded.
    pub fn expand(&self, node: &str, lang: LanguageCode) -> Result<Vec<String>, OntologyError> {
        let start = self.nodes.get(node).ok_or_else(|| OntologyError::UnknownNode(node.to_owned()))?;
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut stack: Vec<&str> = start.children.iter().rev().map(String::as_str).collect();
        while let Some(id) = stack.pop() {
            let n = &self.nodes[id];
            for form in n.forms(lang) {
                if seen.insert(normalize_term(form)) {
                    out.push(form.clone());
                }
            }
            stack.extend(n.children.iter().rev().map(String::as_str));
        }
        Ok(out)
    }

    /// Glosses `term` from one language to another: the first `to` form of
    /// every node the term names. Identity when `from == to`.
    pub fn translate_term(&self, term: &str, from: LanguageCode, to: LanguageCode) -> Vec<String> {
        if from == to {
            return vec![nfc(term)];
        }
        let mut out: Vec<String> = Vec::new();
        for id in self.lookup(term, from) {
            if let Some(first) = self.nodes[&id].forms(to).first() {
                if !out.contains(first) {
                    out.push(first.clone());
                }
            }
        }
        out
    }

    /// Serializes back to the line format, nodes in pre-order.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for id in self.preorder() {
            let n = &self.nodes[id];
            let entries: Vec<String> = n
                .entries
                .iter()
                .map(|(lang, forms)| format!("{}={}", lang, forms.join("|")))
                .collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                n.id,
                n.parent.as_deref().unwrap_or("-"),
                n.root_language,
                entries.join(";")
            ));
        }
        out
    }
}
