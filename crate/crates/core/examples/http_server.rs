//! Serve the JSON API over the bundled corpus.
//!
//! ```sh
//! cargo run --example http_server
//! curl -s localhost:8080/api/query -d '{"text":"பொங்கல் எப்பொழுது"}'
//! ```

use std::net::SocketAddr;
use std::sync::Arc;

use ontoclir::corpus::{ingest, LanguageRules};
use ontoclir::{data, Config, Engine};

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let addr: SocketAddr = std::env::args().nth(1).as_deref().unwrap_or("127.0.0.1:8080").parse().expect("socket address");
    let config = Config::from_env().expect("valid configuration");
    let index = ingest(&data::corpus_dir(), &LanguageRules::default()).expect("bundled corpus");
    let engine = Arc::new(Engine::new(data::festival_ontology(), data::lexicons(), index, config));
    println!("serving {} documents on http://{addr}", engine.index.len());
    ontoclir::server::serve(engine, addr).await
}
