use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::ingest::tokenize;
use crate::stem::porter_stem;

/// One index/glossary term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlossaryTerm {
    pub raw: String,
    pub tokens: Vec<String>,
    pub stemmed: Vec<String>,
}

impl GlossaryTerm {
    /// Builds a term from one glossary line; `None` when the line holds no
    /// word tokens.
    pub fn parse(raw: &str) -> Option<Self> {
        let raw = raw.trim();
        let tokens: Vec<String> = tokenize(&raw.to_lowercase(), "")
            .tokens()
            .map(|t| t.word.clone())
            .filter(|w| w.chars().any(char::is_alphanumeric))
            .collect();
        if tokens.is_empty() {
            return None;
        }
        let stemmed = tokens.iter().map(|t| porter_stem(t)).collect();
        Some(GlossaryTerm { raw: raw.into(), tokens, stemmed })
    }

    /// Lowercase tokens joined by single spaces.
    pub fn canonical(&self) -> String {
        self.tokens.join(" ")
    }

    /// Whether this term's stem sequence occurs contiguously in `stems`.
    pub fn occurs_in(&self, stems: &[String]) -> bool {
        contains_run(stems, &self.stemmed)
    }
}

pub(crate) fn contains_run(haystack: &[String], needle: &[String]) -> bool {
    !needle.is_empty() && haystack.windows(needle.len()).any(|w| w == needle)
}

/// Parses a one-term-per-line glossary.
///
/// Terms whose stem sequences coincide collapse into one, keeping the
/// shortest spelling (ties: lexicographically smallest). The result is sorted
/// by descending token count, then by canonical form.
pub fn load_glossary(src: &str) -> Vec<GlossaryTerm> {
    let mut by_stem: BTreeMap<Vec<String>, GlossaryTerm> = BTreeMap::new();
    for term in src.lines().filter_map(GlossaryTerm::parse) {
        match by_stem.get_mut(&term.stemmed) {
            Some(kept) => {
                let shorter = (term.canonical().len(), term.canonical()) < (kept.canonical().len(), kept.canonical());
                if shorter {
                    *kept = term;
                }
            }
            None => {
                by_stem.insert(term.stemmed.clone(), term);
            }
        }
    }
    let mut terms: Vec<GlossaryTerm> = by_stem.into_values().collect();
    terms.sort_by(|a, b| b.tokens.len().cmp(&a.tokens.len()).then_with(|| a.canonical().cmp(&b.canonical())));
    terms
}
