use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Phase, Triple};
use crate::error::{Error, Result};
use crate::ingest::GlossaryTerm;
use crate::stem::stem_tokens;

const STOPWORDS: &str = include_str!("../../data/stopwords.txt");
const DOMAIN_STOPWORDS: [&str; 4] = ["figure", "fig", "table", "number"];
const REFERENCE_WORDS: [&str; 5] = ["figure", "figures", "fig", "table", "tables"];

/// Stop-listed tokens for subject/object filtering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StopList {
    words: BTreeSet<String>,
}

impl StopList {
    /// The bundled English list plus figure/table vocabulary.
    pub fn bundled() -> Self {
        let words = STOPWORDS
            .lines()
            .map(str::trim)
            .filter(|w| !w.is_empty())
            .chain(DOMAIN_STOPWORDS)
            .map(ToString::to_string)
            .collect();
        StopList { words }
    }

    pub fn from_words<I: IntoIterator<Item = S>, S: AsRef<str>>(words: I) -> Self {
        StopList { words: words.into_iter().map(|w| w.as_ref().to_lowercase()).collect() }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Listed word or numeral (`3`, `2.1`, `iv`...).
    pub fn is_stop(&self, token: &str) -> bool {
        let lower = token.to_lowercase();
        let lower = lower.trim_end_matches('.');
        self.words.contains(lower) || is_numeral(lower)
    }

    /// Whether every token of `label` is a stop token.
    pub fn is_stop_label(&self, label: &str) -> bool {
        label.split_whitespace().all(|t| self.is_stop(t))
    }
}

fn is_numeral(token: &str) -> bool {
    let digits = !token.is_empty()
        && token.chars().any(|c| c.is_ascii_digit())
        && token.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | ',' | '-' | '%'));
    let roman = !token.is_empty() && token.len() <= 5 && token.chars().all(|c| matches!(c, 'i' | 'v' | 'x'));
    digits || (roman && token != "i")
}

fn mentions_reference(label: &str) -> bool {
    label.split_whitespace().any(|t| REFERENCE_WORDS.contains(&t.to_lowercase().trim_end_matches('.')))
}

/// Drops triples whose subject or object is made only of stop tokens or
/// mentions a figure or table. Predicates are not checked.
pub fn filter_stopwords(triples: &[Triple], stoplist: &StopList) -> Vec<Triple> {
    triples
        .iter()
        .filter(|t| {
            [&t.subject, &t.object].iter().all(|label| !stoplist.is_stop_label(label) && !mentions_reference(label))
        })
        .cloned()
        .collect()
}

fn matches_glossary(triple: &Triple, glossary: &[GlossaryTerm]) -> bool {
    let subject = stem_tokens(&triple.subject);
    let object = stem_tokens(&triple.object);
    glossary.iter().any(|g| g.occurs_in(&subject) || g.occurs_in(&object))
}

/// Keeps triples whose stemmed subject or object contains a glossary term.
pub fn filter_by_glossary(triples: &[Triple], glossary: &[GlossaryTerm]) -> Vec<Triple> {
    triples.iter().filter(|t| matches_glossary(t, glossary)).cloned().collect()
}

/// Fails on the first triple with no glossary match on either side.
pub fn check_glossary_guarantee(triples: &[Triple], glossary: &[GlossaryTerm]) -> Result<()> {
    match triples.iter().find(|t| !matches_glossary(t, glossary)) {
        Some(t) => Err(Error::GlossaryGuarantee(format!("{}, {}, {}", t.subject, t.predicate, t.object))),
        None => Ok(()),
    }
}

/// Adds, after each kept triple, the next triple in document order when its
/// subject equals the kept triple's object (case-insensitive). Added triples
/// are tagged [`Phase::Context`].
pub fn augment_context(all_triples: &[Triple], kept: &[Triple]) -> Vec<Triple> {
    let mut out: Vec<Triple> = Vec::with_capacity(kept.len());
    for t in kept {
        out.push(t.clone());
        let Some(i) = all_triples.iter().position(|a| a == t) else { continue };
        let Some(next) = all_triples.get(i + 1) else { continue };
        let chained = next.subject.to_lowercase() == t.object.to_lowercase();
        let present =
            kept.contains(next) || out.iter().any(|o| o.key() == next.key() && o.sentence_index == next.sentence_index);
        if chained && !present {
            out.push(Triple { phase: Phase::Context, ..next.clone() });
        }
    }
    out
}
