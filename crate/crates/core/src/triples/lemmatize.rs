use alloc::string::String;
use alloc::vec::Vec;

use super::Triple;
use crate::ingest::GlossaryTerm;
use crate::lemma::lemmatize_label;
use crate::stem::stem_tokens;

fn dedup(triples: Vec<Triple>) -> Vec<Triple> {
    let mut out: Vec<Triple> = Vec::with_capacity(triples.len());
    for t in triples {
        if !out.iter().any(|o| o.key() == t.key()) {
            out.push(t);
        }
    }
    out
}

/// Singularizes subject and object labels token-wise and drops repeats,
/// keeping the earliest occurrence.
pub fn lemmatize_triples(triples: &[Triple]) -> Vec<Triple> {
    dedup(
        triples
            .iter()
            .map(|t| Triple { subject: lemmatize_label(&t.subject), object: lemmatize_label(&t.object), ..t.clone() })
            .collect(),
    )
}

fn canonical(label: &str, glossary: &[GlossaryTerm]) -> String {
    let stems = stem_tokens(label);
    match glossary.iter().find(|g| g.stemmed == stems) {
        Some(term) => term.canonical(),
        None => lemmatize_label(label),
    }
}

/// Like [`lemmatize_triples`], except that a label whose stems equal a
/// glossary term's stems takes the term's spelling.
pub fn lemmatize_triples_with_glossary(triples: &[Triple], glossary: &[GlossaryTerm]) -> Vec<Triple> {
    dedup(
        triples
            .iter()
            .map(|t| Triple {
                subject: canonical(&t.subject, glossary),
                object: canonical(&t.object, glossary),
                ..t.clone()
            })
            .collect(),
    )
}
