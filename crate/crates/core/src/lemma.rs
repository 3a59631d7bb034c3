//! Noun lemmatization: irregular-plural lookup plus suffix stripping.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

const IRREGULAR: &str = include_str!("../data/irregular.tsv");

fn irregular_noun(word: &str) -> Option<&'static str> {
    IRREGULAR.lines().find_map(|line| {
        let mut cols = line.split('\t');
        let (form, lemma, tag) = (cols.next()?, cols.next()?, cols.next()?);
        (tag == "NOUN" && form == word).then_some(lemma)
    })
}

/// Singular form of a (lowercase) noun.
pub fn singularize(word: &str) -> String {
    if let Some(lemma) = irregular_noun(word) {
        return lemma.into();
    }
    let n = word.chars().count();
    if n <= 3 || !word.ends_with('s') {
        return word.into();
    }
    if let Some(stem) = word.strip_suffix("ies") {
        if n > 4 {
            return [stem, "y"].concat();
        }
    }
    if word.ends_with("sses") {
        return word[..word.len() - 2].into();
    }
    for suffix in ["xes", "ches", "shes", "zes"] {
        if word.ends_with(suffix) {
            return word[..word.len() - 2].into();
        }
    }
    if word.ends_with("ss") || word.ends_with("us") || word.ends_with("is") {
        return word.into();
    }
    word[..word.len() - 1].into()
}

/// Singularizes every token of a space-separated label, lowercasing it.
/// Hyphenated tokens are singularized on their last segment.
pub fn lemmatize_label(label: &str) -> String {
    label
        .split_whitespace()
        .map(|token| {
            let token = token.to_lowercase();
            match token.rsplit_once('-') {
                Some((head, tail)) if !tail.is_empty() => {
                    let mut out = head.to_string();
                    out.push('-');
                    out.push_str(&singularize(tail));
                    out
                }
                _ => singularize(&token),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
