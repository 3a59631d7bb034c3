//! Shared document model: tokens, sentences and documents.
//!
//! Offsets are counted in Unicode scalar values (`char`s) of
//! [`Document::cleaned_text`], not bytes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Universal part-of-speech tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Upos {
    Adj,
    Adp,
    Adv,
    Aux,
    Cconj,
    Det,
    Intj,
    Noun,
    Num,
    Part,
    Pron,
    Propn,
    Punct,
    Sconj,
    Sym,
    Verb,
    X,
}

impl Upos {
    pub const ALL: [Upos; 17] = [
        Upos::Adj,
        Upos::Adp,
        Upos::Adv,
        Upos::Aux,
        Upos::Cconj,
        Upos::Det,
        Upos::Intj,
        Upos::Noun,
        Upos::Num,
        Upos::Part,
        Upos::Pron,
        Upos::Propn,
        Upos::Punct,
        Upos::Sconj,
        Upos::Sym,
        Upos::Verb,
        Upos::X,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Upos::Adj => "ADJ",
            Upos::Adp => "ADP",
            Upos::Adv => "ADV",
            Upos::Aux => "AUX",
            Upos::Cconj => "CCONJ",
            Upos::Det => "DET",
            Upos::Intj => "INTJ",
            Upos::Noun => "NOUN",
            Upos::Num => "NUM",
            Upos::Part => "PART",
            Upos::Pron => "PRON",
            Upos::Propn => "PROPN",
            Upos::Punct => "PUNCT",
            Upos::Sconj => "SCONJ",
            Upos::Sym => "SYM",
            Upos::Verb => "VERB",
            Upos::X => "X",
        }
    }

    /// Maps a tag label onto the fixed set. Anything unrecognised becomes `X`.
    pub fn from_label(label: &str) -> Upos {
        Upos::ALL.iter().copied().find(|tag| tag.as_str().eq_ignore_ascii_case(label)).unwrap_or(Upos::X)
    }

    /// NOUN or PROPN: the tags that can head a noun phrase.
    pub fn is_nominal(self) -> bool {
        matches!(self, Upos::Noun | Upos::Propn)
    }

    /// VERB or AUX.
    pub fn is_verbal(self) -> bool {
        matches!(self, Upos::Verb | Upos::Aux)
    }
}

impl fmt::Display for Upos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Iob {
    B,
    I,
    #[default]
    O,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub document_id: String,
    pub sentence_index: usize,
    pub token_index: usize,
    pub word: String,
    pub lemma: String,
    /// `None` until a tagger has run.
    pub pos: Option<Upos>,
    pub pos_tag: String,
    pub entity_type: String,
    pub entity_iob: Iob,
    pub start: usize,
    pub end: usize,
    pub dependency: String,
}

impl Token {
    /// An untagged token covering `[start, end)`.
    pub fn new(
        document_id: &str,
        sentence_index: usize,
        token_index: usize,
        word: &str,
        start: usize,
        end: usize,
    ) -> Self {
        Token {
            document_id: document_id.into(),
            sentence_index,
            token_index,
            word: word.into(),
            lemma: String::new(),
            pos: None,
            pos_tag: String::new(),
            entity_type: String::new(),
            entity_iob: Iob::O,
            start,
            end,
            dependency: String::new(),
        }
    }

    /// The coarse tag, with untagged tokens reading as `X`.
    pub fn upos(&self) -> Upos {
        self.pos.unwrap_or(Upos::X)
    }

    pub fn lower(&self) -> String {
        self.word.to_lowercase()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub index: usize,
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn document_id(&self) -> &str {
        self.tokens.first().map_or("", |t| t.document_id.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub cleaned_text: String,
    pub sentences: Vec<Sentence>,
}

/// A violated [`Document`] invariant, as reported by [`Document::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelViolation {
    pub sentence: usize,
    pub token: Option<usize>,
    pub reason: &'static str,
}

impl Document {
    pub fn empty(id: &str) -> Self {
        Document { id: id.into(), cleaned_text: String::new(), sentences: Vec::new() }
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flat_map(|s| s.tokens.iter())
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }

    /// Slice of `cleaned_text` between two char offsets.
    pub fn slice(&self, start: usize, end: usize) -> Option<&str> {
        char_slice(&self.cleaned_text, start, end)
    }

    /// Checks the structural invariants: non-empty sentences, gap-free token
    /// indices, ordered non-overlapping spans that slice their word, and IOB
    /// tags where `I` never follows `O`.
    ///
    /// Documents from coreference resolution carry rewritten words and pass
    /// only with `check_words` off.
    pub fn validate(&self, check_words: bool) -> Result<(), ModelViolation> {
        let mut prev_end = 0usize;
        for (si, sentence) in self.sentences.iter().enumerate() {
            let violation = |token, reason| ModelViolation { sentence: si, token, reason };
            if sentence.index != si {
                return Err(violation(None, "sentence index out of sequence"));
            }
            if sentence.tokens.is_empty() {
                return Err(violation(None, "empty sentence"));
            }
            let mut prev_iob = Iob::O;
            for (ti, token) in sentence.tokens.iter().enumerate() {
                if token.token_index != ti || token.sentence_index != si {
                    return Err(violation(Some(ti), "token index out of sequence"));
                }
                if token.start >= token.end {
                    return Err(violation(Some(ti), "empty span"));
                }
                if token.start < prev_end {
                    return Err(violation(Some(ti), "overlapping span"));
                }
                if check_words && self.slice(token.start, token.end) != Some(token.word.as_str()) {
                    return Err(violation(Some(ti), "span does not slice the word"));
                }
                if token.entity_iob == Iob::I && prev_iob == Iob::O {
                    return Err(violation(Some(ti), "I tag follows O"));
                }
                prev_iob = token.entity_iob;
                prev_end = token.end;
            }
        }
        Ok(())
    }
}

pub(crate) fn char_slice(text: &str, start: usize, end: usize) -> Option<&str> {
    if start > end {
        return None;
    }
    let mut indices = text.char_indices().map(|(i, _)| i).chain(core::iter::once(text.len()));
    let from = indices.nth(start)?;
    let to = if end == start { from } else { indices.nth(end - start - 1)? };
    text.get(from..to)
}
