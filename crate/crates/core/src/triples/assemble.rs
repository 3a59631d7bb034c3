use alloc::string::String;
use alloc::vec::Vec;

use super::{Phase, Span, Triple};
use crate::chunker::{Chunk, ChunkKind};
use crate::model::Sentence;
use crate::relations::PredicateCandidate;

pub const DEFAULT_ADPOSITIONS: [&str; 8] = ["in", "on", "at", "through", "of", "with", "by", "for"];

fn nearest_left(chunks: &[Chunk], before: usize) -> Option<&Chunk> {
    chunks.iter().filter(|c| c.kind.is_nominal() && c.last_token < before).max_by_key(|c| c.last_token)
}

fn nearest_right(chunks: &[Chunk], after: usize) -> Option<&Chunk> {
    chunks.iter().filter(|c| c.kind.is_nominal() && c.first_token > after).min_by_key(|c| c.first_token)
}

fn token_span(sentence: &Sentence, first: usize, last: usize) -> Span {
    (sentence.tokens[first].start, sentence.tokens[last].end)
}

fn triple(
    sentence: &Sentence,
    subject: &Chunk,
    predicate: String,
    predicate_span: Span,
    object: &Chunk,
    phase: Phase,
) -> Triple {
    Triple {
        subject: subject.label.clone(),
        predicate,
        object: object.label.clone(),
        phase,
        document_id: sentence.document_id().into(),
        sentence_index: sentence.index,
        subject_span: subject.char_span(sentence),
        predicate_span,
        object_span: object.char_span(sentence),
    }
}

/// Phase I: each verb-group predicate links the nearest noun chunk on its
/// left to the nearest one on its right.
pub fn assemble_positional(sentence: &Sentence, chunks: &[Chunk], predicates: &[PredicateCandidate]) -> Vec<Triple> {
    predicates
        .iter()
        .filter(|p| p.chunk.kind == ChunkKind::Predicate)
        .filter_map(|p| {
            let subject = nearest_left(chunks, p.chunk.first_token)?;
            let object = nearest_right(chunks, p.end_token())?;
            let span = token_span(sentence, p.chunk.first_token, p.end_token());
            Some(triple(sentence, subject, p.chunk.label.clone(), span, object, Phase::Positional))
        })
        .collect()
}

/// Phase II: adposition links.
///
/// Every ADPOSITION chunk from `adpositions` sitting between two noun chunks
/// yields `(left, adposition, right)`. A phase-I object directly followed by
/// a listed adposition and a noun chunk is linked to that chunk as well. Only
/// the new triples are returned, without duplicates.
pub fn assemble_prepositional<S: AsRef<str>>(
    sentence: &Sentence,
    chunks: &[Chunk],
    positional: &[Triple],
    adpositions: &[S],
) -> Vec<Triple> {
    let listed = |word: &str| adpositions.iter().any(|a| a.as_ref() == word);
    let mut out: Vec<Triple> = Vec::new();
    let push = |t: Triple, out: &mut Vec<Triple>| {
        if !out.iter().any(|o| o.key() == t.key() && o.predicate_span == t.predicate_span) {
            out.push(t);
        }
    };
    for adp in chunks.iter().filter(|c| c.kind == ChunkKind::Adposition && listed(&c.label)) {
        let (Some(left), Some(right)) = (nearest_left(chunks, adp.first_token), nearest_right(chunks, adp.last_token))
        else {
            continue;
        };
        let span = token_span(sentence, adp.first_token, adp.last_token);
        push(triple(sentence, left, adp.label.clone(), span, right, Phase::Prepositional), &mut out);
    }
    for t in positional.iter().filter(|t| t.sentence_index == sentence.index) {
        let Some(object) = chunks.iter().find(|c| c.kind.is_nominal() && c.char_span(sentence) == t.object_span) else {
            continue;
        };
        let at = object.last_token + 1;
        let Some(adp) = sentence.tokens.get(at).filter(|tok| listed(&tok.lower())) else { continue };
        let Some(right) = chunks.iter().find(|c| c.kind.is_nominal() && c.first_token == at + 1) else { continue };
        let span = (adp.start, adp.end);
        push(triple(sentence, object, adp.lower(), span, right, Phase::Prepositional), &mut out);
    }
    out.sort_by_key(|t| t.predicate_span.0);
    out
}

/// Merges phase-I and phase-II triples in (sentence, predicate position)
/// order, dropping exact repeats from the same sentence.
pub fn combine(positional: Vec<Triple>, prepositional: Vec<Triple>) -> Vec<Triple> {
    let mut all: Vec<Triple> = Vec::with_capacity(positional.len() + prepositional.len());
    for t in positional.into_iter().chain(prepositional) {
        if !all.iter().any(|o| o.sentence_index == t.sentence_index && o.key() == t.key()) {
            all.push(t);
        }
    }
    all.sort_by_key(|t| (t.sentence_index, t.predicate_span.0));
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chunker::chunk_sentence;
    use crate::ingest::{load_glossary, tag_pos, tokenize};
    use crate::relations::extract_predicates;

    fn run(text: &str, glossary: &str) -> (Vec<Triple>, Vec<Triple>) {
        let glossary = load_glossary(glossary);
        let s = tag_pos(tokenize(text, "t")).sentences.remove(0);
        let chunks = chunk_sentence(&s, &glossary);
        let preds = extract_predicates(&s, &chunks);
        let positional = assemble_positional(&s, &chunks, &preds);
        let prepositional = assemble_prepositional(&s, &chunks, &positional, &DEFAULT_ADPOSITIONS);
        (positional, prepositional)
    }

    fn keys(ts: &[Triple]) -> Vec<(&str, &str, &str)> {
        ts.iter().map(Triple::key).collect()
    }

    #[test]
    fn motivating_sentence() {
        let (p, q) = run(
            "Search is where multiple sequences of moves may lead to the known-state",
            "Search\nMultiple sequences of moves\nknown-state",
        );
        assert_eq!(
            keys(&p),
            [
                ("search", "is", "multiple sequences of moves"),
                ("multiple sequences of moves", "lead to", "known-state")
            ]
        );
        assert!(q.is_empty());
        assert!(p.iter().all(|t| t.subject_span.1 <= t.predicate_span.0 && t.predicate_span.1 <= t.object_span.0));
    }

    #[test]
    fn rational_agent_sentence() {
        let (p, _) =
            run("a rational agent should select an action that is expected to maximize the performance measure", "");
        assert_eq!(
            keys(&p),
            [
                ("rational agent", "should select", "action"),
                ("action", "is expected to maximize", "performance measure")
            ]
        );
    }

    #[test]
    fn single_noun_phrase() {
        let (p, q) = run("Sensors.", "");
        assert!(p.is_empty() && q.is_empty());
    }

    #[test]
    fn through_link() {
        let (p, q) = run("An agent gives output through Actuators.", "agent\noutput");
        assert_eq!(keys(&p), [("agent", "gives", "output")]);
        assert_eq!(keys(&q), [("output", "through", "actuators")]);
        assert_eq!(q[0].phase, Phase::Prepositional);
    }

    #[test]
    fn unlisted_adposition_ignored() {
        let s = tag_pos(tokenize("An agent gives output through Actuators.", "t")).sentences.remove(0);
        let chunks = chunk_sentence(&s, &[]);
        let preds = extract_predicates(&s, &chunks);
        let p = assemble_positional(&s, &chunks, &preds);
        assert!(assemble_prepositional(&s, &chunks, &p, &["in"]).is_empty());
    }

    #[test]
    fn combine_orders_and_dedups() {
        let (p, q) = run("An agent gives output through Actuators.", "");
        let mut again = q.clone();
        again[0].phase = Phase::Positional;
        let all = combine(p, [q, again].concat());
        assert_eq!(keys(&all), [("agent", "gives", "output"), ("output", "through", "actuators")]);
    }
}
