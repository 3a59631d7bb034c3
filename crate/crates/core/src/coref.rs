//! Rule-based pronoun resolution.
//!
//! Each pronoun is rewritten to the nearest noun-phrase antecedent. The
//! current sentence is searched first (right to left), then up to `window`
//! earlier sentences. Candidates are ranked by:
//!
//! 1. sentence distance (nearer first);
//! 2. glossary match (terms from the index win);
//! 3. for earlier sentences only, grammatical subject (the noun phrase before
//!    the sentence's first verb group);
//! 4. recency.
//!
//! Pronouns are resolved left to right against the already-rewritten
//! document, which makes a second application a no-op.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::chunker::{apply_merge_rules, chunk_noun_phrases, ChunkKind};
use crate::ingest::GlossaryTerm;
use crate::model::{Document, Sentence, Upos};
use crate::stem::stem_tokens;

pub const PRONOUNS: [&str; 11] = ["it", "its", "they", "their", "them", "he", "she", "his", "her", "this", "these"];
pub const DEFAULT_WINDOW: usize = 2;

const POSSESSIVES: [&str; 4] = ["its", "their", "his", "her"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorefSubstitution {
    pub sentence_index: usize,
    pub token_index: usize,
    pub pronoun: String,
    pub antecedent_label: String,
    pub antecedent_sentence: usize,
}

#[derive(Clone, Debug)]
struct Candidate {
    sentence: usize,
    head: usize,
    surface: String,
    head_pos: Upos,
    in_glossary: bool,
    is_subject: bool,
}

/// Resolves pronouns in place and returns the substitution log.
///
/// A resolved subject/object pronoun takes the antecedent's surface text
/// (without determiners) as its word, that text lowercased as its lemma, and
/// the antecedent head's tag. A possessive determiner (`its`, `their`, ...)
/// takes the same word and lemma but keeps its DET tag and stays out of
/// noun-phrase labels. Unresolvable pronouns are left alone.
pub fn resolve_coreferences(
    mut doc: Document,
    glossary: &[GlossaryTerm],
    window: usize,
) -> (Document, Vec<CorefSubstitution>) {
    let mut log = Vec::new();
    for si in 0..doc.sentences.len() {
        for ti in 0..doc.sentences[si].tokens.len() {
            let token = &doc.sentences[si].tokens[ti];
            let lower = token.lower();
            let pos = token.upos();
            if !PRONOUNS.contains(&lower.as_str()) || !matches!(pos, Upos::Pron | Upos::Det) {
                continue;
            }
            // A demonstrative determiner ("this agent") is not a pronoun.
            if pos == Upos::Det && !POSSESSIVES.contains(&lower.as_str()) {
                continue;
            }
            let Some(best) = best_antecedent(&doc, si, ti, glossary, window) else { continue };
            let token = &mut doc.sentences[si].tokens[ti];
            log.push(CorefSubstitution {
                sentence_index: si,
                token_index: ti,
                pronoun: token.word.clone(),
                antecedent_label: best.surface.clone(),
                antecedent_sentence: best.sentence,
            });
            token.lemma = best.surface.to_lowercase();
            token.word = best.surface;
            if pos == Upos::Pron {
                token.pos = Some(best.head_pos);
            }
        }
    }
    (doc, log)
}

fn best_antecedent(
    doc: &Document,
    sentence: usize,
    pronoun: usize,
    glossary: &[GlossaryTerm],
    window: usize,
) -> Option<Candidate> {
    let first = sentence.saturating_sub(window);
    (first..=sentence).rev().find_map(|si| {
        let limit = if si == sentence { pronoun } else { usize::MAX };
        let candidates = candidates(&doc.sentences[si], limit, glossary);
        let previous = si != sentence;
        candidates.into_iter().max_by_key(|c| (c.in_glossary, previous && c.is_subject, c.head))
    })
}

/// Noun phrases of a sentence that end before token `limit`.
fn candidates(sentence: &Sentence, limit: usize, glossary: &[GlossaryTerm]) -> Vec<Candidate> {
    let chunks = apply_merge_rules(sentence, chunk_noun_phrases(sentence));
    let first_predicate = chunks.iter().find(|c| c.kind == ChunkKind::Predicate).map(|c| c.first_token);
    let mut out = Vec::new();
    for chunk in chunks.iter().filter(|c| c.kind.is_nominal()) {
        let before_verb = first_predicate.is_some_and(|p| chunk.last_token < p);
        // The subject is the last noun phrase before the first verb group.
        let is_subject = before_verb
            && !chunks.iter().any(|c| {
                c.kind.is_nominal()
                    && c.first_token > chunk.last_token
                    && first_predicate.is_some_and(|p| c.last_token < p)
            });
        if chunk.last_token >= limit {
            continue;
        }
        let surface: Vec<&str> = sentence.tokens[chunk.first_token..=chunk.last_token]
            .iter()
            .filter(|t| !matches!(t.upos(), Upos::Det | Upos::Punct))
            .map(|t| t.word.as_str())
            .collect();
        if surface.is_empty() {
            continue;
        }
        let stems = stem_tokens(&chunk.label);
        out.push(Candidate {
            sentence: sentence.index,
            head: chunk.head_token,
            surface: surface.join(" "),
            head_pos: sentence.tokens[chunk.head_token].upos(),
            in_glossary: glossary.iter().any(|g| g.occurs_in(&stems)),
            is_subject,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{load_glossary, tag_pos, tokenize};

    fn resolve(text: &str, glossary: &str) -> (Document, Vec<CorefSubstitution>) {
        let doc = tag_pos(tokenize(text, "t"));
        resolve_coreferences(doc, &load_glossary(glossary), DEFAULT_WINDOW)
    }

    #[test]
    fn it_resolves_to_previous_subject() {
        let (doc, log) = resolve("An Agent has sensors. It has actuators too.", "agent\nsensor\nactuator\noutput");
        assert_eq!(log.len(), 1);
        assert_eq!(log[0].pronoun, "It");
        assert_eq!(log[0].antecedent_label, "Agent");
        assert_eq!((log[0].sentence_index, log[0].token_index, log[0].antecedent_sentence), (1, 0, 0));
        let it = &doc.sentences[1].tokens[0];
        assert_eq!((it.word.as_str(), it.lemma.as_str(), it.upos()), ("Agent", "agent", Upos::Noun));
    }

    #[test]
    fn possessive_resolves_to_nearest_noun() {
        let text = "a rational agent should select an action that is expected to maximize its performance measure";
        let (doc, log) = resolve(text, "action\nperformance measure");
        assert_eq!(log.len(), 1);
        assert_eq!(log[0].pronoun, "its");
        assert_eq!(log[0].antecedent_label, "action");
        assert_eq!(doc.sentences[0].tokens[12].upos(), Upos::Det);
    }

    #[test]
    fn no_pronouns_is_identity() {
        let doc = tag_pos(tokenize("Agents have sensors.", "t"));
        let (out, log) = resolve_coreferences(doc.clone(), &[], DEFAULT_WINDOW);
        assert_eq!(out, doc);
        assert!(log.is_empty());
    }

    #[test]
    fn no_antecedent_left_untouched() {
        let (doc, log) = resolve("It rains.", "");
        assert!(log.is_empty());
        assert_eq!(doc.sentences[0].tokens[0].word, "It");
    }

    #[test]
    fn window_limits_search() {
        let text = "Agents act. Very good. So fast. It stops.";
        let (_, log) = resolve(text, "");
        assert!(log.is_empty());
        let doc = tag_pos(tokenize(text, "t"));
        let (_, wide) = resolve_coreferences(doc, &[], 3);
        assert_eq!(wide.len(), 1);
        assert_eq!(wide[0].antecedent_label, "Agents");
    }

    #[test]
    fn glossary_beats_recency() {
        let (_, log) = resolve("The robot carries a box. It moves.", "robot");
        assert_eq!(log[0].antecedent_label, "robot");
    }

    #[test]
    fn demonstrative_determiner_skipped() {
        let (_, log) = resolve("The agent acts. This agent learns.", "agent");
        assert!(log.is_empty());
    }

    #[test]
    fn idempotent() {
        let text = "An Agent has sensors. It has actuators too. Its sensors help it.";
        let (once, _) = resolve(text, "agent");
        let (twice, log) = resolve_coreferences(once.clone(), &load_glossary("agent"), DEFAULT_WINDOW);
        assert_eq!(once, twice);
        assert!(log.is_empty());
    }
}
