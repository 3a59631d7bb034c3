use std::collections::BTreeSet;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use textkg::config::{DebugOutputs, FileConfig, InputFormat, PipelineConfig, CONFIG_ENV};
use textkg::conllu::write_conllu;
use textkg::dot::{export_dot, parse_dot};
use textkg::jsonl::{from_jsonl, to_jsonl, GoldLabel};
use textkg::run::{extract_file, read_file, read_glossary, run_pipeline};
use textkg_core::eval::{classification_report, render_report};
use textkg_core::graph::{build_graph, entity_subgraph, KnowledgeGraph};
use textkg_core::ingest::{clean_text, tag_pos, tokenize};
use textkg_core::pipeline::ExtractOptions;
use textkg_core::triples::Triple;

#[derive(Parser)]
#[command(
    name = "textkg",
    version,
    about = "Extract subject-predicate-object triples and knowledge graphs from textbook text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and write triples.jsonl, kg.dot and summary.json
    Extract(ExtractArgs),
    /// Print the subgraph of one entity as DOT
    Entity {
        /// triples.jsonl or kg.dot
        graph: PathBuf,
        entity: String,
    },
    /// Score triples against human gold labels
    Eval {
        /// Gold labels (JSONL: subject, predicate, object, gold, optional predicted)
        #[arg(long)]
        gold: PathBuf,
        /// Emitted triples; labelled triples missing from it are predicted 0
        #[arg(long)]
        triples: Option<PathBuf>,
        /// Also write the report as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tag raw text and print CoNLL-U
    Tag {
        /// Text file, or - for stdin
        input: PathBuf,
    },
    /// Print cleaned text
    Clean {
        /// Text file, or - for stdin
        input: PathBuf,
    },
    /// Print the chunks of each sentence as JSONL
    Chunk(StageArgs),
    /// Print coreference substitutions as JSONL
    Coref(StageArgs),
}

#[derive(Args)]
struct ExtractArgs {
    /// TOML config file
    #[arg(long, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Input files (text or CoNLL-U)
    inputs: Vec<PathBuf>,
    #[arg(long, short)]
    glossary: Option<PathBuf>,
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// Sentences searched back for pronoun antecedents
    #[arg(long)]
    window: Option<usize>,
    /// Comma-separated adpositions for phase-II links
    #[arg(long, value_delimiter = ',')]
    adpositions: Option<Vec<String>>,
    /// Write labels with spaces removed
    #[arg(long)]
    squash: bool,
    /// Add chained context triples
    #[arg(long)]
    context: bool,
    #[arg(long)]
    debug_coref: bool,
    #[arg(long)]
    debug_chunks: bool,
    #[arg(long)]
    debug_predicates: bool,
}

#[derive(Args)]
struct StageArgs {
    input: PathBuf,
    #[arg(long, short)]
    glossary: PathBuf,
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    #[arg(long, default_value_t = textkg_core::coref::DEFAULT_WINDOW)]
    window: usize,
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        return Ok(buf);
    }
    Ok(read_file(path)?)
}

fn print(text: &str) -> anyhow::Result<()> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn pipeline_config(args: ExtractArgs) -> anyhow::Result<PipelineConfig> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let inputs = if args.inputs.is_empty() { file.inputs.unwrap_or_default() } else { args.inputs };
    if inputs.is_empty() {
        bail!("no input files given");
    }
    let glossary = args.glossary.or(file.glossary).context("no glossary given (--glossary or config `glossary`)")?;
    let output_dir = args.out.or(file.output_dir).unwrap_or_else(|| PathBuf::from("textkg-out"));
    let mut config = PipelineConfig::new(inputs, glossary, output_dir);
    config.input_format = args.format.or(file.input_format);
    config.coref_window = args.window.or(file.coref.window).unwrap_or(config.coref_window);
    if let Some(adpositions) = args.adpositions.or(file.adpositions) {
        config.adpositions = adpositions.into_iter().map(|a| a.trim().to_lowercase()).collect();
    }
    config.squash = args.squash || file.squash.unwrap_or(false);
    config.context = args.context || file.context.unwrap_or(false);
    let debug = file.debug.unwrap_or_default();
    config.debug = DebugOutputs {
        coref: args.debug_coref || debug.coref,
        chunks: args.debug_chunks || debug.chunks,
        predicates: args.debug_predicates || debug.predicates,
    };
    Ok(config)
}

fn load_graph(path: &Path) -> anyhow::Result<KnowledgeGraph> {
    let src = read_input(path)?;
    if path.extension().is_some_and(|e| e == "dot") {
        return parse_dot(&src).map_err(|(line, m)| anyhow::anyhow!("{}:{line}: {m}", path.display()));
    }
    let triples: Vec<Triple> =
        from_jsonl(&src).map_err(|(line, m)| anyhow::anyhow!("{}:{line}: {m}", path.display()))?;
    Ok(build_graph(&triples))
}

fn eval(gold: &Path, triples: Option<&Path>, out: Option<&Path>) -> anyhow::Result<()> {
    let labels: Vec<GoldLabel> =
        from_jsonl(&read_input(gold)?).map_err(|(line, m)| anyhow::anyhow!("{}:{line}: {m}", gold.display()))?;
    let emitted: Option<BTreeSet<(String, String, String)>> = match triples {
        Some(path) => {
            let ts: Vec<Triple> = from_jsonl(&read_input(path)?)
                .map_err(|(line, m)| anyhow::anyhow!("{}:{line}: {m}", path.display()))?;
            Some(ts.into_iter().map(|t| (t.subject, t.predicate, t.object)).collect())
        }
        None => None,
    };
    let gold_vec: Vec<u8> = labels.iter().map(|l| l.gold).collect();
    let predicted: Vec<u8> = labels
        .iter()
        .map(|l| {
            l.predicted.unwrap_or_else(|| match &emitted {
                Some(set) => set.contains(&(l.subject.clone(), l.predicate.clone(), l.object.clone())) as u8,
                None => 1,
            })
        })
        .collect();
    let metrics = classification_report(&gold_vec, &predicted)?;
    print(&render_report(&metrics))?;
    if let Some(path) = out {
        let mut json = serde_json::to_string_pretty(&metrics)?;
        json.push('\n');
        std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn stage(args: &StageArgs) -> anyhow::Result<textkg_core::pipeline::Extraction> {
    let glossary = read_glossary(&args.glossary)?;
    let format = args.format.unwrap_or_else(|| InputFormat::detect(&args.input));
    let opts = ExtractOptions { coref_window: args.window, ..Default::default() };
    Ok(extract_file(&args.input, format, &glossary, &opts)?)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Extract(args) => {
            let config = pipeline_config(args)?;
            let summary = run_pipeline(&config)?;
            for warning in &summary.warnings {
                eprintln!("textkg: warning: {warning}");
            }
            eprintln!(
                "textkg: {} triples, {} nodes, {} edges -> {}",
                summary.triples,
                summary.nodes,
                summary.edges,
                config.output_dir.display()
            );
        }
        Command::Entity { graph, entity } => {
            let sub = entity_subgraph(&load_graph(&graph)?, &entity);
            if !sub.found {
                eprintln!("textkg: entity {entity:?} not found");
                return Ok(ExitCode::from(2));
            }
            print(&export_dot(&sub.graph))?;
        }
        Command::Eval { gold, triples, out } => eval(&gold, triples.as_deref(), out.as_deref())?,
        Command::Tag { input } => {
            let id = input.file_stem().and_then(|s| s.to_str()).unwrap_or("stdin").to_string();
            let doc = tag_pos(tokenize(&clean_text(&read_input(&input)?), &id));
            print(&write_conllu(&doc))?;
        }
        Command::Clean { input } => {
            let mut cleaned = clean_text(&read_input(&input)?);
            if !cleaned.is_empty() {
                cleaned.push('\n');
            }
            print(&cleaned)?;
        }
        Command::Chunk(args) => {
            let e = stage(&args)?;
            print(&to_jsonl(&e.chunks.iter().flatten().collect::<Vec<_>>()))?;
        }
        Command::Coref(args) => print(&to_jsonl(&stage(&args)?.coref_log))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("textkg: {e:#}");
            ExitCode::FAILURE
        }
    }
}
