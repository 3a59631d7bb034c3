//! Input normalization: cleaning, tokenization, tagging, glossary loading.

mod clean;
mod glossary;
mod tagger;
mod tokenize;

pub use clean::clean_text;
pub use glossary::{load_glossary, GlossaryTerm};
pub use tagger::{tag_pos, Lexicon, Tagger};
pub use tokenize::tokenize;
