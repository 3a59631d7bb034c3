//! The full extraction pipeline for one document.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::chunker::{chunk_sentence, Chunk, ChunkKind};
use crate::coref::{resolve_coreferences, CorefSubstitution, DEFAULT_WINDOW};
use crate::error::Result;
use crate::ingest::{clean_text, tag_pos, tokenize, GlossaryTerm};
use crate::model::{Document, Iob, Upos};
use crate::relations::{extract_predicates, PredicateCandidate};
use crate::triples::{
    assemble_positional, assemble_prepositional, augment_context, check_glossary_guarantee, combine,
    filter_by_glossary, filter_stopwords, lemmatize_triples_with_glossary, StopList, Triple, DEFAULT_ADPOSITIONS,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractOptions {
    pub coref_window: usize,
    pub adpositions: Vec<String>,
    pub context: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            coref_window: DEFAULT_WINDOW,
            adpositions: DEFAULT_ADPOSITIONS.iter().map(ToString::to_string).collect(),
            context: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCounts {
    pub sentences: usize,
    pub tokens: usize,
    pub coref_substitutions: usize,
    pub chunks: usize,
    pub entities: usize,
    pub predicates: usize,
    pub positional: usize,
    pub prepositional: usize,
    pub combined: usize,
    pub after_stopwords: usize,
    pub after_glossary: usize,
    pub after_context: usize,
    pub lemmatized: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    /// The resolved document, with ENTITY chunks (minus leading determiners)
    /// marked in the IOB fields.
    pub document: Document,
    pub coref_log: Vec<CorefSubstitution>,
    /// Per sentence.
    pub chunks: Vec<Vec<Chunk>>,
    /// Per sentence.
    pub predicates: Vec<Vec<PredicateCandidate>>,
    /// Phase I and II output before filtering.
    pub candidates: Vec<Triple>,
    pub triples: Vec<Triple>,
    pub counts: StageCounts,
}

fn mark_entities(doc: &mut Document, chunks: &[Vec<Chunk>]) {
    for (sentence, chunks) in doc.sentences.iter_mut().zip(chunks) {
        for token in &mut sentence.tokens {
            token.entity_iob = Iob::O;
            token.entity_type.clear();
        }
        for chunk in chunks.iter().filter(|c| c.kind == ChunkKind::Entity) {
            let first = (chunk.first_token..=chunk.last_token)
                .find(|&i| sentence.tokens[i].upos() != Upos::Det)
                .unwrap_or(chunk.first_token);
            for i in first..=chunk.last_token {
                let token = &mut sentence.tokens[i];
                token.entity_iob = if i == first { Iob::B } else { Iob::I };
                token.entity_type = "ENTITY".into();
            }
        }
    }
}

/// Runs coreference, chunking, assembly, filtering and lemmatization over a
/// tagged document.
pub fn extract(doc: Document, glossary: &[GlossaryTerm], opts: &ExtractOptions) -> Result<Extraction> {
    let mut counts = StageCounts { sentences: doc.sentences.len(), tokens: doc.token_count(), ..Default::default() };
    let (mut document, coref_log) = resolve_coreferences(doc, glossary, opts.coref_window);
    counts.coref_substitutions = coref_log.len();

    let mut chunks = Vec::with_capacity(document.sentences.len());
    let mut predicates = Vec::with_capacity(document.sentences.len());
    let mut positional = Vec::new();
    let mut prepositional = Vec::new();
    for sentence in &document.sentences {
        let sentence_chunks = chunk_sentence(sentence, glossary);
        let candidates = extract_predicates(sentence, &sentence_chunks);
        let phase_one = assemble_positional(sentence, &sentence_chunks, &candidates);
        prepositional.extend(assemble_prepositional(sentence, &sentence_chunks, &phase_one, &opts.adpositions));
        positional.extend(phase_one);
        chunks.push(sentence_chunks);
        predicates.push(candidates);
    }
    mark_entities(&mut document, &chunks);
    counts.chunks = chunks.iter().map(Vec::len).sum();
    counts.entities = chunks.iter().flatten().filter(|c| c.kind == ChunkKind::Entity).count();
    counts.predicates = predicates.iter().map(Vec::len).sum();
    counts.positional = positional.len();
    counts.prepositional = prepositional.len();

    let candidates = combine(positional, prepositional);
    counts.combined = candidates.len();
    let kept = filter_stopwords(&candidates, &StopList::bundled());
    counts.after_stopwords = kept.len();
    let kept = filter_by_glossary(&kept, glossary);
    check_glossary_guarantee(&kept, glossary)?;
    counts.after_glossary = kept.len();
    let kept = if opts.context { augment_context(&candidates, &kept) } else { kept };
    counts.after_context = kept.len();
    let triples = lemmatize_triples_with_glossary(&kept, glossary);
    counts.lemmatized = triples.len();

    Ok(Extraction { document, coref_log, chunks, predicates, candidates, triples, counts })
}

/// Cleans, tokenizes and tags raw text, then runs [`extract`].
pub fn extract_text(
    raw: &str,
    document_id: &str,
    glossary: &[GlossaryTerm],
    opts: &ExtractOptions,
) -> Result<Extraction> {
    let cleaned = clean_text(raw);
    extract(tag_pos(tokenize(&cleaned, document_id)), glossary, opts)
}
