//! Triple assembly (positional and prepositional), filtering, context
//! augmentation and lemmatization.

mod assemble;
mod filter;
mod lemmatize;

use alloc::string::String;

use serde::{Deserialize, Serialize};

pub use crate::stem::porter_stem;
pub use assemble::{assemble_positional, assemble_prepositional, combine, DEFAULT_ADPOSITIONS};
pub use filter::{augment_context, check_glossary_guarantee, filter_by_glossary, filter_stopwords, StopList};
pub use lemmatize::{lemmatize_triples, lemmatize_triples_with_glossary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Phase {
    Positional,
    Prepositional,
    Context,
}

/// Half-open char range in the document text.
pub type Span = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub subject: String,
    pub predicate: String,
    pub object: String,
    pub phase: Phase,
    pub document_id: String,
    pub sentence_index: usize,
    pub subject_span: Span,
    pub predicate_span: Span,
    pub object_span: Span,
}

impl Triple {
    pub fn key(&self) -> (&str, &str, &str) {
        (&self.subject, &self.predicate, &self.object)
    }

    /// Same triple with every label squashed (spaces removed).
    pub fn squashed(&self) -> Triple {
        use crate::chunker::squash;
        Triple {
            subject: squash(&self.subject),
            predicate: squash(&self.predicate),
            object: squash(&self.object),
            ..self.clone()
        }
    }
}
