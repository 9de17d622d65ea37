//! Line formats: qrels are `query-id<TAB>doc-id`, queries are
//! `query-id<TAB>lang<TAB>text` with `-` for an undeclared language.

use thiserror::Error;

use crate::lang::LanguageCode;

use super::{EvalQuery, Qrels};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FileError {
    pub line: usize,
    pub message: String,
}

fn content_lines(source: &str) -> impl Iterator<Item = (usize, &str)> {
    source
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

pub fn parse_qrels(source: &str) -> Result<Qrels, FileError> {
    let mut qrels = Qrels::default();
    for (line, raw) in content_lines(source) {
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        match fields.as_slice() {
            [query, doc] if !query.is_empty() && !doc.is_empty() => qrels.insert(query, doc),
            _ => return Err(FileError { line, message: "expected query-id<TAB>doc-id".into() }),
        }
    }
    Ok(qrels)
}

pub fn parse_queries(source: &str) -> Result<Vec<EvalQuery>, FileError> {
    let mut queries = Vec::new();
    for (line, raw) in content_lines(source) {
        let mut fields = raw.splitn(3, '\t');
        let (Some(id), Some(lang), Some(text)) = (fields.next(), fields.next(), fields.next()) else {
            return Err(FileError { line, message: "expected query-id<TAB>lang<TAB>text".into() });
        };
        let language = match lang.trim() {
            "-" | "" => None,
            code => Some(
                LanguageCode::parse(code)
                    .ok_or_else(|| FileError { line, message: format!("unregistered language `{code}`") })?,
            ),
        };
        queries.push(EvalQuery { id: id.trim().to_owned(), language, text: text.trim().to_owned() });
    }
    Ok(queries)
}
