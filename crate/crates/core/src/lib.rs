//! Glossary-driven extraction of subject-predicate-object triples from
//! textbook prose, and construction of knowledge graphs from them.
//!
//! The crate is `no_std` (it needs `alloc`). Every stage is a pure function
//! over the shared document model in [`model`]:
//!
//! 1. [`ingest`]: clean raw text, split sentences and tokens, tag parts of
//!    speech with the bundled lexicons, load glossary terms.
//! 2. [`coref`]: rewrite pronouns to their nearest noun-phrase antecedent.
//! 3. [`chunker`]: group tokens into noun phrases, entities and verb groups.
//! 4. [`relations`]: turn verb groups and free adpositions into predicates.
//! 5. [`triples`]: assemble, filter, and lemmatize triples.
//! 6. [`graph`]: build the directed multigraph and query entity subgraphs.
//!
//! [`eval`] computes the classification report used to score human-judged
//! output, and [`pipeline`] wires the stages together.

#![no_std]

extern crate alloc;

pub mod chunker;
pub mod coref;
pub mod error;
pub mod eval;
pub mod graph;
pub mod ingest;
pub mod lemma;
pub mod model;
pub mod pipeline;
pub mod relations;
pub mod stem;
pub mod triples;

pub use error::{Error, Result};
pub use model::{Document, Iob, Sentence, Token, Upos};
