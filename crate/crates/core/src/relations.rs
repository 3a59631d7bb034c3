//! Predicate candidates from chunked sentences.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::chunker::{Chunk, ChunkKind};
use crate::model::{Sentence, Upos};

const MODALS: [&str; 9] = ["may", "can", "could", "might", "must", "shall", "should", "will", "would"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateCandidate {
    /// The PREDICATE or ADPOSITION chunk; its label includes any absorbed
    /// trailing adposition.
    pub chunk: Chunk,
    pub verb_lemmas: Vec<String>,
    pub trailing_adposition: Option<String>,
}

impl PredicateCandidate {
    /// Token index of the absorbed adposition, when there is one.
    pub fn trailing_index(&self) -> Option<usize> {
        self.trailing_adposition.as_ref().map(|_| self.chunk.last_token + 1)
    }

    /// Last token covered by the predicate, trailing adposition included.
    pub fn end_token(&self) -> usize {
        self.trailing_index().unwrap_or(self.chunk.last_token)
    }
}

/// One candidate per PREDICATE and ADPOSITION chunk, in sentence order.
///
/// An ADP right after a verb group is recorded as its trailing adposition and
/// appended to the label; in that case modal auxiliaries are dropped from the
/// label ("may lead" + "to" reads "lead to", while "should select" keeps its
/// modal).
pub fn extract_predicates(sentence: &Sentence, chunks: &[Chunk]) -> Vec<PredicateCandidate> {
    let tokens = &sentence.tokens;
    chunks
        .iter()
        .filter_map(|chunk| match chunk.kind {
            ChunkKind::Predicate => {
                let span = &tokens[chunk.first_token..=chunk.last_token];
                let verb_lemmas = span
                    .iter()
                    .filter(|t| t.upos().is_verbal())
                    .map(|t| if t.lemma.is_empty() { t.lower() } else { t.lemma.clone() })
                    .collect();
                let next = chunk.last_token + 1;
                let trailing = tokens
                    .get(next)
                    .filter(|t| t.upos() == Upos::Adp)
                    .filter(|_| !chunks.iter().any(|c| c.contains(next)))
                    .map(|t| t.lower());
                let mut chunk = chunk.clone();
                if let Some(adp) = &trailing {
                    let mut words: Vec<String> =
                        span.iter().map(|t| t.lower()).filter(|w| !MODALS.contains(&w.as_str())).collect();
                    if words.is_empty() {
                        words = span.iter().map(|t| t.lower()).collect();
                    }
                    words.push(adp.clone());
                    chunk.label = words.join(" ");
                }
                Some(PredicateCandidate { chunk, verb_lemmas, trailing_adposition: trailing })
            }
            ChunkKind::Adposition => {
                Some(PredicateCandidate { chunk: chunk.clone(), verb_lemmas: Vec::new(), trailing_adposition: None })
            }
            _ => None,
        })
        .collect()
}
