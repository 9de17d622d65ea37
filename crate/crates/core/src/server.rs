//! JSON-over-HTTP front end, versioned under `/api`.
//!
//! | method | path | body / query | response |
//! |---|---|---|---|
//! | POST | `/api/query` | `{"text", "lang"?, "timings"?}` | query response |
//! | GET | `/api/ontology/node/{id}` | | node |
//! | GET | `/api/ontology/search` | `term`, `lang` | node ids |
//! | GET | `/api/languages` | | registry |
//! | GET | `/api/health` | | `{"status", "doc_count"}` |
//! | POST | `/api/eval` | queries, qrels, mode | report |
//!
//! Errors are `{"code", "message"}` with 400 for malformed requests, 404
//! for unknown nodes and 422 when the query cannot be answered.

use std::collections::{BTreeMap, BTreeSet};
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::{Deserialize, Serialize};

use crate::engine::{Engine, QueryError};
use crate::eval::{compare_modes, evaluate_run, EvalQuery, Qrels};
use crate::lang::{self, LanguageCode};
use crate::textproc::{AnalysisMode, QueryAnalysis};

const JSON_UTF8: &str = "application/json; charset=utf-8";

/// Serializes `value` with an explicit UTF-8 content type.
pub fn json_response<T: Serialize>(status: StatusCode, value: &T) -> Response {
    match serde_json::to_vec(value) {
        Ok(body) => (status, [(header::CONTENT_TYPE, JSON_UTF8)], body).into_response(),
        Err(e) => (StatusCode::INTERNAL_SERVER_ERROR, e.to_string()).into_response(),
    }
}

#[derive(Debug, Serialize)]
pub struct ApiError {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Box<QueryAnalysis>>,
    #[serde(skip)]
    status: StatusCode,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        ApiError { code: code.to_owned(), message: message.into(), analysis: None, status }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "BadRequest", message)
    }
}

impl From<QueryError> for ApiError {
    fn from(err: QueryError) -> Self {
        let status = match err.code() {
            "EmptyQuery" => StatusCode::BAD_REQUEST,
            "NoKeywords" | "NoPassages" | "NoDocumentsInLanguage" => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        let mut api = ApiError::new(status, err.code(), err.to_string());
        if let QueryError::NoPassages { analysis } = err {
            api.analysis = Some(analysis);
        }
        api
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        json_response(self.status, &self)
    }
}

fn parse_body<T: for<'de> Deserialize<'de>>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed JSON body: {e}")))
}

fn parse_lang(raw: Option<&str>) -> Result<Option<LanguageCode>, ApiError> {
    match raw {
        None => Ok(None),
        Some(code) => LanguageCode::parse(code)
            .map(Some)
            .ok_or_else(|| ApiError::bad_request(format!("unregistered language `{code}`"))),
    }
}

#[derive(Debug, Deserialize)]
pub struct QueryRequest {
    pub text: String,
    #[serde(default)]
    pub lang: Option<String>,
    #[serde(default)]
    pub timings: bool,
}

async fn query(State(engine): State<Arc<Engine>>, body: Bytes) -> Result<Response, ApiError> {
    let req: QueryRequest = parse_body(&body)?;
    let lang = parse_lang(req.lang.as_deref())?;
    let response = tokio::task::spawn_blocking(move || engine.query(&req.text, lang, req.timings))
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", e.to_string()))??;
    Ok(json_response(StatusCode::OK, &response))
}

async fn ontology_node(State(engine): State<Arc<Engine>>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let node = engine
        .tree
        .node(&id)
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "UnknownNode", format!("unknown node `{id}`")))?;
    Ok(json_response(StatusCode::OK, node))
}

#[derive(Debug, Deserialize)]
struct SearchParams {
    term: Option<String>,
    lang: Option<String>,
}

async fn ontology_search(
    State(engine): State<Arc<Engine>>,
    Query(params): Query<SearchParams>,
) -> Result<Response, ApiError> {
    let term = params.term.filter(|t| !t.trim().is_empty()).ok_or_else(|| ApiError::bad_request("missing `term`"))?;
    let lang = match parse_lang(params.lang.as_deref())? {
        Some(l) => l,
        None => crate::textproc::detect_language(&term).map_err(|e| ApiError::bad_request(e.to_string()))?,
    };
    Ok(json_response(StatusCode::OK, &engine.tree.lookup(&term, lang)))
}

async fn languages() -> Response {
    json_response(StatusCode::OK, &lang::registered())
}

#[derive(Serialize)]
struct Health {
    status: &'static str,
    doc_count: usize,
}

async fn health(State(engine): State<Arc<Engine>>) -> Response {
    json_response(StatusCode::OK, &Health { status: "ok", doc_count: engine.index.len() })
}

#[derive(Debug, Deserialize)]
pub struct EvalQueryBody {
    pub id: String,
    #[serde(default)]
    pub lang: Option<String>,
    pub text: String,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EvalModeBody {
    WithOntology,
    KeywordsOnly,
    Compare,
}

#[derive(Debug, Deserialize)]
pub struct EvalRequest {
    pub queries: Vec<EvalQueryBody>,
    pub qrels: BTreeMap<String, BTreeSet<String>>,
    #[serde(default = "default_mode")]
    pub mode: EvalModeBody,
}

fn default_mode() -> EvalModeBody {
    EvalModeBody::WithOntology
}

async fn eval(State(engine): State<Arc<Engine>>, body: Bytes) -> Result<Response, ApiError> {
    let req: EvalRequest = parse_body(&body)?;
    let mut queries = Vec::with_capacity(req.queries.len());
    for q in req.queries {
        queries.push(EvalQuery { id: q.id, language: parse_lang(q.lang.as_deref())?, text: q.text });
    }
    let qrels = Qrels(req.qrels);
    let workers = engine.config.workers;
    let report = tokio::task::spawn_blocking(move || match req.mode {
        EvalModeBody::WithOntology => {
            serde_json::to_value(evaluate_run(&queries, &qrels, engine.as_ref(), AnalysisMode::WithOntology, workers))
        }
        EvalModeBody::KeywordsOnly => {
            serde_json::to_value(evaluate_run(&queries, &qrels, engine.as_ref(), AnalysisMode::KeywordsOnly, workers))
        }
        EvalModeBody::Compare => serde_json::to_value(compare_modes(&queries, &qrels, engine.as_ref(), workers)),
    })
    .await
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", e.to_string()))?
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", e.to_string()))?;
    Ok(json_response(StatusCode::OK, &report))
}

pub fn router(engine: Arc<Engine>) -> Router {
    Router::new()
        .route("/api/query", post(query))
        .route("/api/ontology/node/{id}", get(ontology_node))
        .route("/api/ontology/search", get(ontology_search))
        .route("/api/languages", get(languages))
        .route("/api/health", get(health))
        .route("/api/eval", post(eval))
        .with_state(engine)
}

/// Binds `addr` and serves until the process exits.
pub async fn serve(engine: Arc<Engine>, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(engine)).await
}
