//! Phrase chunking: noun phrases, glossary entities, verb groups and free
//! adpositions.
//!
//! Noun phrases follow `DET? (ADJ|NOUN|PROPN)* (NOUN|PROPN)`. The merge rules
//! then run in a fixed order, pass after pass, until nothing changes:
//!
//! 1. an NP wrapped in parentheses absorbs them;
//! 2. `NP of NP` becomes one NP;
//! 3. adjacent NPs merge;
//! 4. runs of VERB/AUX/PART/ADP containing a verb become PREDICATE chunks
//!    (trailing adpositions stay free for [`crate::relations`]);
//! 5. a free ADP between two noun chunks becomes an ADPOSITION chunk.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::GlossaryTerm;
use crate::model::{Sentence, Token, Upos};
use crate::stem::{porter_stem, stem_tokens};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ChunkKind {
    Entity,
    NounPhrase,
    Predicate,
    Adposition,
}

impl ChunkKind {
    /// ENTITY or NOUN_PHRASE: chunks that can fill a subject or object slot.
    pub fn is_nominal(self) -> bool {
        matches!(self, ChunkKind::Entity | ChunkKind::NounPhrase)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chunk {
    pub sentence_index: usize,
    pub first_token: usize,
    /// Inclusive.
    pub last_token: usize,
    pub kind: ChunkKind,
    pub label: String,
    pub head_token: usize,
    pub head_stem: String,
    /// Canonical form of the glossary term an ENTITY matched.
    pub matched_term: Option<String>,
}

impl Chunk {
    pub fn len(&self) -> usize {
        self.last_token - self.first_token + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, token: usize) -> bool {
        (self.first_token..=self.last_token).contains(&token)
    }

    /// Char range of the chunk in the document text.
    pub fn char_span(&self, sentence: &Sentence) -> (usize, usize) {
        (sentence.tokens[self.first_token].start, sentence.tokens[self.last_token].end)
    }
}

const DETERMINERS: [&str; 3] = ["a", "an", "the"];

/// Canonical label: lowercase, leading `a`/`an`/`the` and possessive markers
/// removed, internal hyphens kept, single-space joined.
pub fn normalize_label<S: AsRef<str>>(tokens: &[S]) -> Result<String> {
    let mut words: Vec<String> = tokens
        .iter()
        .flat_map(|t| t.as_ref().split_whitespace())
        .filter_map(|w| {
            let lower = w.to_lowercase();
            if matches!(lower.as_str(), "'s" | "\u{2019}s" | "'" | "\u{2019}") {
                return None;
            }
            let bare = lower
                .strip_suffix("'s")
                .or_else(|| lower.strip_suffix("\u{2019}s"))
                .or_else(|| lower.strip_suffix('\''))
                .unwrap_or(&lower);
            (!bare.is_empty()).then(|| bare.into())
        })
        .collect();
    let leading = words.iter().take_while(|w| DETERMINERS.contains(&w.as_str())).count();
    words.drain(..leading);
    if words.is_empty() {
        return Err(Error::DegenerateLabel);
    }
    Ok(words.join(" "))
}

/// Compact rendering of a label: spaces removed.
pub fn squash(label: &str) -> String {
    label.split_whitespace().collect()
}

fn np_label(tokens: &[Token], first: usize, last: usize) -> String {
    let words: Vec<&str> = tokens[first..=last]
        .iter()
        .filter(|t| !matches!(t.upos(), Upos::Det | Upos::Punct))
        .map(|t| t.word.as_str())
        .collect();
    normalize_label(&words).unwrap_or_else(|_| words.join(" ").to_lowercase())
}

fn plain_label(tokens: &[Token], first: usize, last: usize) -> String {
    tokens[first..=last].iter().map(|t| t.lower()).collect::<Vec<_>>().join(" ")
}

fn head_stem(token: &Token) -> String {
    let lower = token.lower();
    porter_stem(lower.split_whitespace().last().unwrap_or(""))
}

fn noun_phrase(sentence: &Sentence, first: usize, last: usize, head: usize) -> Chunk {
    Chunk {
        sentence_index: sentence.index,
        first_token: first,
        last_token: last,
        kind: ChunkKind::NounPhrase,
        label: np_label(&sentence.tokens, first, last),
        head_token: head,
        head_stem: head_stem(&sentence.tokens[head]),
        matched_term: None,
    }
}

/// Maximal `DET? (ADJ|NOUN|PROPN)* (NOUN|PROPN)` runs, as NOUN_PHRASE chunks.
pub fn chunk_noun_phrases(sentence: &Sentence) -> Vec<Chunk> {
    let tokens = &sentence.tokens;
    let mut chunks = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let start = i;
        let mut j = i;
        if tokens[j].upos() == Upos::Det {
            j += 1;
        }
        let mut last_noun = None;
        while j < tokens.len() && matches!(tokens[j].upos(), Upos::Adj | Upos::Noun | Upos::Propn) {
            if tokens[j].upos().is_nominal() {
                last_noun = Some(j);
            }
            j += 1;
        }
        match last_noun {
            Some(end) => {
                chunks.push(noun_phrase(sentence, start, end, end));
                i = end + 1;
            }
            None => i = j.max(start + 1),
        }
    }
    chunks
}

/// Applies the merge rules until a fixpoint.
pub fn apply_merge_rules(sentence: &Sentence, chunks: Vec<Chunk>) -> Vec<Chunk> {
    apply_merge_rules_counted(sentence, chunks).0
}

/// [`apply_merge_rules`], also returning the number of passes run
/// (including the final pass that changed nothing).
pub fn apply_merge_rules_counted(sentence: &Sentence, mut chunks: Vec<Chunk>) -> (Vec<Chunk>, usize) {
    chunks.sort_by_key(|c| c.first_token);
    let mut passes = 0;
    loop {
        passes += 1;
        let mut changed = false;
        changed |= absorb_parentheses(sentence, &mut chunks);
        changed |= merge_of_phrases(sentence, &mut chunks);
        changed |= merge_adjacent(sentence, &mut chunks);
        changed |= form_verb_groups(sentence, &mut chunks);
        changed |= mark_adpositions(sentence, &mut chunks);
        if !changed {
            return (chunks, passes);
        }
    }
}

fn covered(len: usize, chunks: &[Chunk]) -> Vec<bool> {
    let mut mask = alloc::vec![false; len];
    for c in chunks {
        mask[c.first_token..=c.last_token].iter_mut().for_each(|m| *m = true);
    }
    mask
}

fn absorb_parentheses(sentence: &Sentence, chunks: &mut [Chunk]) -> bool {
    let tokens = &sentence.tokens;
    let mask = covered(tokens.len(), chunks);
    let mut changed = false;
    for chunk in chunks.iter_mut().filter(|c| c.kind.is_nominal()) {
        let (first, last) = (chunk.first_token, chunk.last_token);
        if first > 0
            && last + 1 < tokens.len()
            && tokens[first - 1].word == "("
            && tokens[last + 1].word == ")"
            && !mask[first - 1]
            && !mask[last + 1]
        {
            chunk.first_token -= 1;
            chunk.last_token += 1;
            changed = true;
        }
    }
    changed
}

fn merge_of_phrases(sentence: &Sentence, chunks: &mut Vec<Chunk>) -> bool {
    let tokens = &sentence.tokens;
    let mut changed = false;
    let mut i = 0;
    while i + 1 < chunks.len() {
        let (a, b) = (&chunks[i], &chunks[i + 1]);
        let of = a.last_token + 1;
        if a.kind.is_nominal()
            && b.kind.is_nominal()
            && b.first_token == of + 1
            && tokens[of].lower() == "of"
            && tokens[of].upos() == Upos::Adp
        {
            let merged = noun_phrase(sentence, a.first_token, b.last_token, a.head_token);
            chunks[i] = merged;
            chunks.remove(i + 1);
            changed = true;
        } else {
            i += 1;
        }
    }
    changed
}

fn merge_adjacent(sentence: &Sentence, chunks: &mut Vec<Chunk>) -> bool {
    let mut changed = false;
    let mut i = 0;
    while i + 1 < chunks.len() {
        let (a, b) = (&chunks[i], &chunks[i + 1]);
        if a.kind.is_nominal() && b.kind.is_nominal() && b.first_token == a.last_token + 1 {
            let merged = noun_phrase(sentence, a.first_token, b.last_token, b.head_token);
            chunks[i] = merged;
            chunks.remove(i + 1);
            changed = true;
        } else {
            i += 1;
        }
    }
    changed
}

fn in_verb_group(pos: Upos) -> bool {
    matches!(pos, Upos::Verb | Upos::Aux | Upos::Part | Upos::Adp)
}

fn form_verb_groups(sentence: &Sentence, chunks: &mut Vec<Chunk>) -> bool {
    let tokens = &sentence.tokens;
    let mask = covered(tokens.len(), chunks);
    let mut found = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        if mask[i] || !in_verb_group(tokens[i].upos()) {
            i += 1;
            continue;
        }
        let mut end = i;
        while end < tokens.len() && !mask[end] && in_verb_group(tokens[end].upos()) {
            end += 1;
        }
        let next = end;
        // Trailing adpositions are left for the predicate extractor.
        while end > i && tokens[end - 1].upos() == Upos::Adp {
            end -= 1;
        }
        let mut start = i;
        if end > start && !tokens[start].upos().is_verbal() && !tokens[end - 1].upos().is_verbal() {
            while start < end && !tokens[start].upos().is_verbal() {
                start += 1;
            }
        }
        if end > start && tokens[start..end].iter().any(|t| t.upos().is_verbal()) {
            let last = end - 1;
            let head = (start..end).rev().find(|&k| tokens[k].upos().is_verbal()).unwrap_or(last);
            found.push(Chunk {
                sentence_index: sentence.index,
                first_token: start,
                last_token: last,
                kind: ChunkKind::Predicate,
                label: plain_label(tokens, start, last),
                head_token: head,
                head_stem: head_stem(&tokens[head]),
                matched_term: None,
            });
        }
        i = next;
    }
    let changed = !found.is_empty();
    chunks.extend(found);
    chunks.sort_by_key(|c| c.first_token);
    changed
}

fn mark_adpositions(sentence: &Sentence, chunks: &mut Vec<Chunk>) -> bool {
    let tokens = &sentence.tokens;
    let mask = covered(tokens.len(), chunks);
    let mut found = Vec::new();
    for (i, token) in tokens.iter().enumerate() {
        if mask[i] || token.upos() != Upos::Adp || i == 0 {
            continue;
        }
        let left = chunks.iter().any(|c| c.last_token + 1 == i && c.kind.is_nominal());
        let right = chunks.iter().any(|c| c.first_token == i + 1 && c.kind.is_nominal());
        if left && right {
            found.push(Chunk {
                sentence_index: sentence.index,
                first_token: i,
                last_token: i,
                kind: ChunkKind::Adposition,
                label: token.lower(),
                head_token: i,
                head_stem: porter_stem(&token.lower()),
                matched_term: None,
            });
        }
    }
    let changed = !found.is_empty();
    chunks.extend(found);
    chunks.sort_by_key(|c| c.first_token);
    changed
}

/// Promotes noun phrases that contain a glossary term to ENTITY.
///
/// A phrase matches when the term's stem sequence occurs contiguously in the
/// stems of the phrase label. `glossary` is expected longest-first (as
/// returned by [`crate::ingest::load_glossary`]); the first match wins.
pub fn tag_entities(chunks: Vec<Chunk>, glossary: &[GlossaryTerm]) -> Vec<Chunk> {
    chunks
        .into_iter()
        .map(|mut chunk| {
            if chunk.kind.is_nominal() {
                let stems = stem_tokens(&chunk.label);
                match glossary.iter().find(|term| term.occurs_in(&stems)) {
                    Some(term) => {
                        chunk.kind = ChunkKind::Entity;
                        chunk.matched_term = Some(term.canonical());
                    }
                    None => {
                        chunk.kind = ChunkKind::NounPhrase;
                        chunk.matched_term = None;
                    }
                }
            }
            chunk
        })
        .collect()
}

/// Noun phrases, merge rules and entity tagging for one sentence.
pub fn chunk_sentence(sentence: &Sentence, glossary: &[GlossaryTerm]) -> Vec<Chunk> {
    let chunks = apply_merge_rules(sentence, chunk_noun_phrases(sentence));
    tag_entities(chunks, glossary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{load_glossary, tag_pos, tokenize};

    fn sentence(text: &str) -> Sentence {
        tag_pos(tokenize(text, "t")).sentences.remove(0)
    }

    fn labels(chunks: &[Chunk], kind: ChunkKind) -> Vec<&str> {
        chunks.iter().filter(|c| c.kind == kind).map(|c| c.label.as_str()).collect()
    }

    #[test]
    fn noun_phrases_drop_determiners_from_labels() {
        let s = sentence("a rational agent should select an action");
        let nps = chunk_noun_phrases(&s);
        assert_eq!(labels(&nps, ChunkKind::NounPhrase), ["rational agent", "action"]);
        assert_eq!((nps[0].first_token, nps[0].last_token), (0, 2));
    }

    #[test]
    fn adjective_noun_is_one_phrase() {
        let s = sentence("multiple sequences");
        assert_eq!(labels(&chunk_noun_phrases(&s), ChunkKind::NounPhrase), ["multiple sequences"]);
    }

    #[test]
    fn no_nouns_no_phrases() {
        let s = sentence("run quickly !");
        assert!(chunk_noun_phrases(&s).is_empty());
    }

    #[test]
    fn of_phrase_merges() {
        let s = sentence("multiple sequences of moves may lead to the known-state");
        let chunks = apply_merge_rules(&s, chunk_noun_phrases(&s));
        assert_eq!(labels(&chunks, ChunkKind::NounPhrase), ["multiple sequences of moves", "known-state"]);
        assert_eq!(labels(&chunks, ChunkKind::Predicate), ["may lead"]);
        // "to" stays free: it trails the verb group.
        let pred = chunks.iter().find(|c| c.kind == ChunkKind::Predicate).unwrap();
        assert_eq!(s.tokens[pred.last_token + 1].word, "to");
        assert!(chunks.iter().all(|c| !c.contains(pred.last_token + 1)));
    }

    #[test]
    fn verb_chain_is_one_predicate() {
        let s = sentence("an action that is expected to maximize its performance measure");
        let chunks = apply_merge_rules(&s, chunk_noun_phrases(&s));
        assert_eq!(labels(&chunks, ChunkKind::Predicate), ["is expected to maximize"]);
        assert_eq!(labels(&chunks, ChunkKind::NounPhrase), ["action", "performance measure"]);
    }

    #[test]
    fn adposition_between_noun_phrases() {
        let s = sentence("An agent gives output through Actuators.");
        let chunks = apply_merge_rules(&s, chunk_noun_phrases(&s));
        assert_eq!(labels(&chunks, ChunkKind::Adposition), ["through"]);
        assert_eq!(labels(&chunks, ChunkKind::Predicate), ["gives"]);
    }

    #[test]
    fn parentheses_absorbed() {
        let s = sentence("The agent uses (sensors) daily.");
        let chunks = apply_merge_rules(&s, chunk_noun_phrases(&s));
        let np = chunks.iter().find(|c| c.label == "sensors").unwrap();
        assert_eq!(s.tokens[np.first_token].word, "(");
        assert_eq!(s.tokens[np.last_token].word, ")");
    }

    #[test]
    fn entity_tagging_by_stem_subsequence() {
        let s = sentence("a rational agent should select an action");
        let glossary = load_glossary("agent");
        let chunks = chunk_sentence(&s, &glossary);
        assert_eq!(chunks[0].kind, ChunkKind::Entity);
        assert_eq!(chunks[0].matched_term.as_deref(), Some("agent"));
        assert_eq!(chunks.last().unwrap().kind, ChunkKind::NounPhrase);
    }

    #[test]
    fn full_term_match() {
        let s = sentence("multiple sequences of moves");
        let chunks = chunk_sentence(&s, &load_glossary("Multiple sequences of moves\nmoves"));
        assert_eq!(chunks.len(), 1);
        assert_eq!(chunks[0].matched_term.as_deref(), Some("multiple sequences of moves"));
    }

    #[test]
    fn future_without_glossary_stays_noun_phrase() {
        let s = sentence("future");
        let chunks = chunk_sentence(&s, &[]);
        assert_eq!(chunks[0].kind, ChunkKind::NounPhrase);
    }

    #[test]
    fn normalize_label_examples() {
        assert_eq!(normalize_label(&["An", "Agent"]).unwrap(), "agent");
        let long = normalize_label(&["multiple", "sequences", "of", "moves"]).unwrap();
        assert_eq!(long, "multiple sequences of moves");
        assert_eq!(squash(&long), "multiplesequencesofmoves");
        assert_eq!(normalize_label(&["known-state"]).unwrap(), "known-state");
        assert_eq!(normalize_label(&["the", "agent's"]).unwrap(), "agent");
        assert_eq!(normalize_label(&["The", "a"]), Err(Error::DegenerateLabel));
        assert_eq!(normalize_label::<&str>(&[]), Err(Error::DegenerateLabel));
    }
}
