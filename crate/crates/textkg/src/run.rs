//! File-level pipeline driver.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use textkg_core::chunker::Chunk;
use textkg_core::coref::CorefSubstitution;
use textkg_core::graph::build_graph;
use textkg_core::ingest::{load_glossary, tag_pos, GlossaryTerm};
use textkg_core::pipeline::{extract, extract_text, ExtractOptions, Extraction, StageCounts};
use textkg_core::relations::PredicateCandidate;
use textkg_core::triples::Triple;

use crate::config::{InputFormat, PipelineConfig};
use crate::conllu::parse_conllu;
use crate::dot::export_dot;
use crate::error::{Error, Result};
use crate::jsonl::to_jsonl;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DocumentSummary {
    pub id: String,
    pub path: PathBuf,
    pub counts: StageCounts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub documents: Vec<DocumentSummary>,
    pub triples: usize,
    pub nodes: usize,
    pub edges: usize,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct Tagged<'a, T> {
    document_id: &'a str,
    #[serde(flatten)]
    record: &'a T,
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn read_glossary(path: &Path) -> Result<Vec<GlossaryTerm>> {
    Ok(load_glossary(&read_file(path)?))
}

fn document_id(path: &Path) -> String {
    path.file_stem().and_then(|s| s.to_str()).unwrap_or("document").to_string()
}

/// Runs the core pipeline over one input file.
pub fn extract_file(
    path: &Path,
    format: InputFormat,
    glossary: &[GlossaryTerm],
    opts: &ExtractOptions,
) -> Result<Extraction> {
    let src = read_file(path)?;
    let id = document_id(path);
    match format {
        InputFormat::Text => Ok(extract_text(&src, &id, glossary, opts)?),
        InputFormat::Conllu => {
            let doc = parse_conllu(&src, &id).map_err(|source| Error::Conllu { path: path.into(), source })?;
            let doc = if doc.tokens().all(|t| t.pos.is_none()) { tag_pos(doc) } else { doc };
            Ok(extract(doc, glossary, opts)?)
        }
    }
}

fn write(path: PathBuf, contents: &str) -> Result<()> {
    fs::write(&path, contents).map_err(|e| Error::io(path, e))
}

fn tagged<'a, T>(extractions: &'a [Extraction], pick: impl Fn(&'a Extraction) -> Vec<&'a T>) -> Vec<Tagged<'a, T>> {
    extractions
        .iter()
        .flat_map(|e| pick(e).into_iter().map(move |record| Tagged { document_id: &e.document.id, record }))
        .collect()
}

/// Extracts triples from every input, then writes `triples.jsonl`,
/// `kg.dot`, `summary.json` and any requested debug files to the output
/// directory. Inputs are processed in parallel; outputs follow input order.
pub fn run_pipeline(config: &PipelineConfig) -> Result<RunSummary> {
    let glossary = read_glossary(&config.glossary)?;
    let mut warnings = Vec::new();
    if glossary.is_empty() {
        warnings.push(format!("glossary {} is empty; no triples can survive", config.glossary.display()));
    }
    let opts = ExtractOptions {
        coref_window: config.coref_window,
        adpositions: config.adpositions.clone(),
        context: config.context,
    };
    let extractions: Vec<Extraction> = config
        .inputs
        .par_iter()
        .map(|path| extract_file(path, config.format_of(path), &glossary, &opts))
        .collect::<Result<_>>()?;

    let mut triples: Vec<Triple> = Vec::new();
    for t in extractions.iter().flat_map(|e| &e.triples) {
        if !triples.iter().any(|o| o.key() == t.key()) {
            triples.push(t.clone());
        }
    }
    let kg = build_graph(&triples);
    let rendered: Vec<Triple> =
        if config.squash { triples.iter().map(Triple::squashed).collect() } else { triples.clone() };

    let out = &config.output_dir;
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    write(out.join("triples.jsonl"), &to_jsonl(&rendered))?;
    write(out.join("kg.dot"), &export_dot(&kg))?;
    if config.debug.coref {
        let records = tagged::<CorefSubstitution>(&extractions, |e| e.coref_log.iter().collect());
        write(out.join("coref.jsonl"), &to_jsonl(&records))?;
    }
    if config.debug.chunks {
        let records = tagged::<Chunk>(&extractions, |e| e.chunks.iter().flatten().collect());
        write(out.join("chunks.jsonl"), &to_jsonl(&records))?;
    }
    if config.debug.predicates {
        let records = tagged::<PredicateCandidate>(&extractions, |e| e.predicates.iter().flatten().collect());
        write(out.join("predicates.jsonl"), &to_jsonl(&records))?;
    }

    let summary = RunSummary {
        documents: extractions
            .iter()
            .zip(&config.inputs)
            .map(|(e, path)| DocumentSummary { id: e.document.id.clone(), path: path.clone(), counts: e.counts })
            .collect(),
        triples: triples.len(),
        nodes: kg.nodes.len(),
        edges: kg.edges.len(),
        warnings,
    };
    let mut json = serde_json::to_string_pretty(&summary).expect("serializable summary");
    json.push('\n');
    write(out.join("summary.json"), &json)?;
    Ok(summary)
}
