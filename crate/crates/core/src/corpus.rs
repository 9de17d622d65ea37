//! Language-tagged document collection: directory ingestion and a
//! JSON-lines index format.
//!
//! Index layout: a header line `{"format":"ontoclir-corpus","version":1}`
//! followed by one document object per line, sorted by id.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::{self, LanguageCode};
use crate::text::nfc;
use crate::textproc::detect_language;

pub const INDEX_FORMAT: &str = "ontoclir-corpus";
pub const INDEX_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}: file is not valid UTF-8")]
    InvalidUtf8(PathBuf),
    #[error("{0}: file is empty")]
    EmptyFile(PathBuf),
    #[error("duplicate document id `{0}`")]
    DuplicateId(String),
    #[error("index line {line}: {message}")]
    FormatError { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub language: LanguageCode,
    pub title: String,
    pub body: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorpusIndex {
    documents: BTreeMap<String, Document>,
    by_language: BTreeMap<LanguageCode, Vec<String>>,
}

impl CorpusIndex {
    pub fn from_documents(docs: impl IntoIterator<Item = Document>) -> Result<Self, CorpusError> {
        let mut documents = BTreeMap::new();
        for doc in docs {
            if documents.contains_key(&doc.id) {
                return Err(CorpusError::DuplicateId(doc.id));
            }
            documents.insert(doc.id.clone(), doc);
        }
        let mut by_language: BTreeMap<LanguageCode, Vec<String>> = BTreeMap::new();
        // BTreeMap iteration keeps each list sorted by id.
        for doc in documents.values() {
            by_language.entry(doc.language).or_default().push(doc.id.clone());
        }
        Ok(CorpusIndex { documents, by_language })
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Document> {
        self.documents.get(id)
    }

    pub fn documents(&self) -> impl Iterator<Item = &Document> {
        self.documents.values()
    }

    /// Ids of documents in `lang`, sorted.
    pub fn ids_in(&self, lang: LanguageCode) -> &[String] {
        self.by_language.get(&lang).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn languages(&self) -> impl Iterator<Item = (LanguageCode, usize)> + '_ {
        self.by_language.iter().map(|(l, ids)| (*l, ids.len()))
    }
}

/// Maps the first path component of a file (e.g. `en/`) to a language.
#[derive(Debug, Clone)]
pub struct LanguageRules {
    by_dir: BTreeMap<String, LanguageCode>,
}

impl Default for LanguageRules {
    /// Every registered language claims the directory named after its code.
    fn default() -> Self {
        let by_dir = lang::registered().into_iter().map(|l| (l.code.as_str().to_owned(), l.code)).collect();
        LanguageRules { by_dir }
    }
}

impl LanguageRules {
    pub fn empty() -> Self {
        LanguageRules { by_dir: BTreeMap::new() }
    }

    pub fn with_dir(mut self, dir: &str, lang: LanguageCode) -> Self {
        self.by_dir.insert(dir.to_owned(), lang);
        self
    }

    fn resolve(&self, rel: &Path, body: &str) -> LanguageCode {
        rel.components()
            .next()
            .and_then(|c| c.as_os_str().to_str())
            .filter(|_| rel.components().count() > 1)
            .and_then(|dir| self.by_dir.get(dir).copied())
            .unwrap_or_else(|| detect_language(body).unwrap_or(LanguageCode::EN))
    }
}

fn collect_files(dir: &Path, out: &mut Vec<PathBuf>) -> Result<(), CorpusError> {
    let io = |source| CorpusError::Io { path: dir.to_owned(), source };
    let mut entries: Vec<PathBuf> = fs::read_dir(dir).map_err(io)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>().map_err(io)?;
    entries.sort();
    for path in entries {
        let hidden = path.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with('.'));
        if hidden {
            continue;
        }
        if path.is_dir() {
            collect_files(&path, out)?;
        } else if path.is_file() {
            out.push(path);
        }
    }
    Ok(())
}

/// Document id for a relative path: lowercase, `/`-separated, extension removed.
pub fn document_id(rel: &Path) -> String {
    let stem = rel.with_extension("");
    stem.components()
        .map(|c| c.as_os_str().to_string_lossy().to_lowercase())
        .collect::<Vec<_>>()
        .join("/")
}

/// Splits file text into `(title, body)`: the first line is the title and
/// the remainder the body. Single-line files use the line for both.
fn split_title(text: &str) -> (String, String) {
    let text = text.trim();
    match text.split_once('\n') {
        Some((title, rest)) if !rest.trim().is_empty() => (title.trim().to_owned(), rest.trim().to_owned()),
        _ => (text.to_owned(), text.to_owned()),
    }
}

/// Reads every regular file under `root` into one document each.
pub fn ingest(root: &Path, rules: &LanguageRules) -> Result<CorpusIndex, CorpusError> {
    let mut files = Vec::new();
    collect_files(root, &mut files)?;
    let mut docs = Vec::with_capacity(files.len());
    for path in files {
        let bytes = fs::read(&path).map_err(|source| CorpusError::Io { path: path.clone(), source })?;
        let text = String::from_utf8(bytes).map_err(|_| CorpusError::InvalidUtf8(path.clone()))?;
        let text = nfc(&text.replace("\r\n", "\n"));
        if text.trim().is_empty() {
            return Err(CorpusError::EmptyFile(path));
        }
        let rel = path.strip_prefix(root).unwrap_or(&path);
        let (title, body) = split_title(&text);
        docs.push(Document {
            id: document_id(rel),
            language: rules.resolve(rel, &body),
            title,
            body,
            source: rel.to_string_lossy().replace('\\', "/"),
        });
    }
    CorpusIndex::from_documents(docs)
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
}

pub fn save_index(index: &CorpusIndex) -> String {
    let header = Header { format: INDEX_FORMAT.into(), version: INDEX_VERSION };
    let mut out = serde_json::to_string(&header).expect("header serializes");
    out.push('\n');
    for doc in index.documents() {
        out.push_str(&serde_json::to_string(doc).expect("document serializes"));
        out.push('\n');
    }
    out
}

pub fn load_index(content: &str) -> Result<CorpusIndex, CorpusError> {
    let mut lines = content.lines().enumerate();
    let format_err = |line: usize, message: String| CorpusError::FormatError { line, message };
    let (_, first) = lines.next().ok_or_else(|| format_err(1, "missing header".into()))?;
    let header: Header = serde_json::from_str(first).map_err(|e| format_err(1, format!("bad header: {e}")))?;
    if header.format != INDEX_FORMAT || header.version != INDEX_VERSION {
        return Err(format_err(1, format!("unsupported format {} v{}", header.format, header.version)));
    }
    let mut docs = Vec::new();
    for (idx, raw) in lines {
        if raw.trim().is_empty() {
            continue;
        }
        let doc: Document = serde_json::from_str(raw).map_err(|e| format_err(idx + 1, e.to_string()))?;
        if doc.body.trim().is_empty() {
            return Err(format_err(idx + 1, format!("document `{}` has an empty body", doc.id)));
        }
        docs.push(doc);
    }
    CorpusIndex::from_documents(docs)
}
