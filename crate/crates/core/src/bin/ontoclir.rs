use std::fs;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ontoclir::config::CONFIG_ENV;
use ontoclir::corpus::{self, LanguageRules};
use ontoclir::eval::{compare_modes, evaluate_run, parse_qrels, parse_queries};
use ontoclir::textproc::AnalysisMode;
use ontoclir::{data, load_tree, Config, Engine, LanguageCode, OntologyTree};

#[derive(Parser)]
#[command(name = "ontoclir", about = "Bilingual English/Tamil retrieval over a festival ontology")]
struct Cli {
    /// Config file (TOML)
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Config override, e.g. `--set alpha=1.0` (repeatable)
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ingest a corpus directory (`en/`, `ta/` subdirectories) into an index file
    Index {
        corpus_dir: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Answer a query
    Search {
        query: String,
        #[arg(long)]
        index: PathBuf,
        /// Ontology file; the bundled festival ontology when omitted
        #[arg(long)]
        ontology: Option<PathBuf>,
        #[arg(long)]
        lang: Option<String>,
        /// Print the full response as JSON
        #[arg(long)]
        json: bool,
        /// Include per-stage timings in the JSON
        #[arg(long)]
        timings: bool,
    },
    /// Score a query set against relevance judgments
    Eval {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        ontology: Option<PathBuf>,
        #[arg(long)]
        queries: PathBuf,
        #[arg(long)]
        qrels: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::WithOntology)]
        mode: Mode,
        /// Run both modes and report the per-language difference
        #[arg(long)]
        compare: bool,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Ontology utilities
    Ontology {
        #[command(subcommand)]
        command: OntologyCommand,
    },
    /// Serve the JSON API
    Serve {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        ontology: Option<PathBuf>,
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: SocketAddr,
    },
}

#[derive(Subcommand)]
enum OntologyCommand {
    /// Check an ontology file and print its size
    Validate { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    WithOntology,
    KeywordsOnly,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_ontology(path: Option<&Path>) -> Result<OntologyTree> {
    match path {
        Some(p) => load_tree(&read(p)?).with_context(|| format!("invalid ontology {}", p.display())),
        None => Ok(data::festival_ontology()),
    }
}

fn load_engine(cli_config: &Config, index: &Path, ontology: Option<&Path>) -> Result<Engine> {
    let index = corpus::load_index(&read(index)?).with_context(|| format!("invalid index {}", index.display()))?;
    Ok(Engine::new(load_ontology(ontology)?, data::lexicons(), index, cli_config.clone()))
}

fn parse_lang(raw: Option<&str>) -> Result<Option<LanguageCode>> {
    match raw {
        None => Ok(None),
        Some(code) => match LanguageCode::parse(code) {
            Some(l) => Ok(Some(l)),
            None => bail!("unregistered language `{code}`"),
        },
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = Config::load(cli.config.as_deref(), &cli.overrides)?;
    match cli.command {
        Command::Index { corpus_dir, out } => {
            let index = corpus::ingest(&corpus_dir, &LanguageRules::default())?;
            fs::write(&out, corpus::save_index(&index)).with_context(|| format!("writing {}", out.display()))?;
            let counts: Vec<String> = index.languages().map(|(l, n)| format!("{l}: {n}")).collect();
            println!("{}", counts.join(", "));
        }
        Command::Search { query, index, ontology, lang, json, timings } => {
            let engine = load_engine(&config, &index, ontology.as_deref())?;
            let lang = parse_lang(lang.as_deref())?;
            match engine.query(&query, lang, timings) {
                Ok(response) if json => println!("{}", serde_json::to_string_pretty(&response)?),
                Ok(response) => {
                    let a = &response.query_analysis;
                    println!("query language: {}  search language: {}", a.query_language, a.search_language);
                    for r in &response.ranked {
                        println!("{:>3}. {}  {:.4}", r.rank, r.doc_id, r.combined);
                    }
                    println!();
                    for text in &response.answer.rendered {
                        println!("- {text}");
                    }
                }
                Err(err) => {
                    eprintln!("error[{}]: {err}", err.code());
                    return Ok(ExitCode::from(err.exit_code() as u8));
                }
            }
        }
        Command::Eval { index, ontology, queries, qrels, mode, compare, out_dir } => {
            let engine = load_engine(&config, &index, ontology.as_deref())?;
            let queries = parse_queries(&read(&queries)?).context("invalid queries file")?;
            let qrels = parse_qrels(&read(&qrels)?).context("invalid qrels file")?;
            fs::create_dir_all(&out_dir)?;
            let workers = config.workers;
            let report = if compare {
                let cmp = compare_modes(&queries, &qrels, &engine, workers);
                fs::write(out_dir.join("compare.tsv"), cmp.to_tsv())?;
                fs::write(out_dir.join("compare.json"), serde_json::to_string_pretty(&cmp)?)?;
                print!("{}", cmp.to_tsv());
                cmp.with_ontology
            } else {
                let mode = match mode {
                    Mode::WithOntology => AnalysisMode::WithOntology,
                    Mode::KeywordsOnly => AnalysisMode::KeywordsOnly,
                };
                evaluate_run(&queries, &qrels, &engine, mode, workers)
            };
            fs::write(out_dir.join("report.tsv"), report.to_tsv())?;
            fs::write(out_dir.join("report.json"), serde_json::to_string_pretty(&report)?)?;
            if !compare {
                print!("{}", report.to_tsv());
            }
            for issue in &report.issues {
                eprintln!("{}: {} ({})", issue.query_id, issue.code, issue.message);
            }
        }
        Command::Ontology { command: OntologyCommand::Validate { path } } => {
            let tree = load_ontology(Some(&path))?;
            println!("ok: {} nodes, {} indexed terms, root `{}`", tree.len(), tree.term_count(), tree.root());
        }
        Command::Serve { index, ontology, addr } => {
            let engine = Arc::new(load_engine(&config, &index, ontology.as_deref())?);
            let runtime = tokio::runtime::Runtime::new()?;
            eprintln!("listening on http://{addr}");
            runtime.block_on(ontoclir::server::serve(engine, addr))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

