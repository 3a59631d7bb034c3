//! Rule- and lexicon-based part-of-speech tagger.
//!
//! Tags are assigned in layers: the closed-class lexicon, irregular forms,
//! the open-class lexicon (directly or through a stripped inflection),
//! suffix rules, then a NOUN default. A second, contextual pass fixes the
//! usual noun/verb confusions using the neighbouring tags.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lemma::singularize;
use crate::model::{Document, Token, Upos};

const CLOSED: &str = include_str!("../../data/closed.tsv");
const OPEN: &str = include_str!("../../data/open.tsv");
const IRREGULAR: &str = include_str!("../../data/irregular.tsv");

const MODALS: [&str; 9] = ["can", "could", "may", "might", "must", "shall", "should", "will", "would"];

#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    closed: BTreeMap<String, Upos>,
    /// Majority tag plus the alternative tags a word can take.
    open: BTreeMap<String, (Upos, Vec<Upos>)>,
    /// Irregular form -> (lemma, tag).
    irregular: BTreeMap<String, (String, Upos)>,
}

impl Lexicon {
    /// Parses lexicon sources in the bundled formats: `word<TAB>POS` with an
    /// optional third column of comma-separated alternative tags for the
    /// closed and open lists, `form<TAB>lemma<TAB>POS` for irregular forms.
    /// Malformed lines are skipped.
    pub fn from_sources(closed: &str, open: &str, irregular: &str) -> Self {
        let mut lexicon = Lexicon::default();
        for line in closed.lines() {
            if let Some((word, tag)) = line.split_once('\t') {
                let tag = tag.split('\t').next().unwrap_or(tag);
                lexicon.closed.insert(word.into(), Upos::from_label(tag));
            }
        }
        for line in open.lines() {
            let mut cols = line.split('\t');
            if let (Some(word), Some(tag)) = (cols.next(), cols.next()) {
                let alts = cols.next().map(|alts| alts.split(',').map(Upos::from_label).collect()).unwrap_or_default();
                lexicon.open.insert(word.into(), (Upos::from_label(tag), alts));
            }
        }
        for line in irregular.lines() {
            let mut cols = line.split('\t');
            if let (Some(form), Some(lemma), Some(tag)) = (cols.next(), cols.next(), cols.next()) {
                lexicon.irregular.insert(form.into(), (lemma.into(), Upos::from_label(tag)));
            }
        }
        lexicon
    }

    pub fn bundled() -> Self {
        Lexicon::from_sources(CLOSED, OPEN, IRREGULAR)
    }

    pub fn len(&self) -> usize {
        self.closed.len() + self.open.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn open_has(&self, word: &str, tag: Upos) -> bool {
        self.open.get(word).is_some_and(|(main, alts)| *main == tag || alts.contains(&tag))
    }

    fn is_verb_base(&self, word: &str) -> bool {
        self.open_has(word, Upos::Verb)
    }

    /// Verb stem of an inflected form, if the stem is a known verb.
    fn verb_stem(&self, word: &str) -> Option<String> {
        if let Some((lemma, Upos::Verb)) = self.irregular.get(word) {
            return Some(lemma.clone());
        }
        inflection_stems(word).into_iter().find(|(stem, _)| self.is_verb_base(stem)).map(|(stem, _)| stem)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Inflection {
    S,
    Ed,
    Ing,
}

/// Candidate (stem, inflection) pairs for a lowercase word, most likely first.
fn inflection_stems(word: &str) -> Vec<(String, Inflection)> {
    let mut out = Vec::new();
    let mut push = |stem: &str, kind| {
        if stem.chars().count() >= 2 {
            out.push((String::from(stem), kind));
        }
    };
    if let Some(stem) = word.strip_suffix("ies") {
        push(&[stem, "y"].concat(), Inflection::S);
    }
    if let Some(stem) = word.strip_suffix("es") {
        push(stem, Inflection::S);
    }
    if let Some(stem) = word.strip_suffix('s') {
        if !stem.ends_with('s') {
            push(stem, Inflection::S);
        }
    }
    for (suffix, kind) in [("ed", Inflection::Ed), ("ing", Inflection::Ing)] {
        if let Some(stem) = word.strip_suffix(suffix) {
            if kind == Inflection::Ed {
                if let Some(y) = stem.strip_suffix('i') {
                    push(&[y, "y"].concat(), kind);
                }
            } else if let Some(base) = stem.strip_suffix('y') {
                push(&[base, "ie"].concat(), kind);
            }
            push(stem, kind);
            push(&[stem, "e"].concat(), kind);
            let mut rev = stem.chars().rev();
            if let (Some(a), Some(b)) = (rev.next(), rev.next()) {
                if a == b {
                    push(&stem[..stem.len() - a.len_utf8()], kind);
                }
            }
        }
    }
    out
}

fn is_punct(word: &str) -> bool {
    !word.is_empty() && word.chars().all(|c| !c.is_alphanumeric())
}

fn is_numeric(word: &str) -> bool {
    word.chars().any(|c| c.is_ascii_digit())
        && word.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | ',' | '-' | '/' | '%'))
}

#[derive(Clone, Debug, Default)]
pub struct Tagger {
    lexicon: Lexicon,
}

/// One token's tagging state between the lexical and contextual passes.
#[derive(Clone, Debug)]
struct Draft {
    lower: String,
    tag: Upos,
    alts: Vec<Upos>,
    inflection: Option<Inflection>,
}

impl Tagger {
    pub fn new(lexicon: Lexicon) -> Self {
        Tagger { lexicon }
    }

    pub fn bundled() -> Self {
        Tagger::new(Lexicon::bundled())
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    /// Tags every sentence, filling `pos` and `lemma`.
    pub fn tag_document(&self, mut doc: Document) -> Document {
        for sentence in &mut doc.sentences {
            self.tag_tokens(&mut sentence.tokens);
        }
        doc
    }

    pub fn tag_tokens(&self, tokens: &mut [Token]) {
        let mut drafts: Vec<Draft> = Vec::with_capacity(tokens.len());
        for (i, token) in tokens.iter().enumerate() {
            let prev = drafts.last().map(|d: &Draft| d.tag);
            drafts.push(self.lexical(&token.word, i == 0, prev));
        }
        self.contextual(&mut drafts);
        for (token, draft) in tokens.iter_mut().zip(&drafts) {
            token.lemma = self.lemma(&draft.lower, draft.tag);
            token.pos = Some(draft.tag);
        }
    }

    fn lexical(&self, word: &str, sentence_start: bool, prev: Option<Upos>) -> Draft {
        let lower = word.to_lowercase();
        let draft = |tag, alts, inflection| Draft { lower: lower.clone(), tag, alts, inflection };
        if is_punct(word) {
            return draft(Upos::Punct, Vec::new(), None);
        }
        if is_numeric(word) {
            return draft(Upos::Num, Vec::new(), None);
        }
        if let Some(&tag) = self.lexicon.closed.get(&lower) {
            return draft(tag, Vec::new(), None);
        }
        if let Some((_, tag)) = self.lexicon.irregular.get(&lower) {
            return draft(*tag, Vec::new(), None);
        }
        if let Some((tag, alts)) = self.lexicon.open.get(&lower) {
            return draft(*tag, alts.clone(), None);
        }
        for (stem, kind) in inflection_stems(&lower) {
            let Some((tag, alts)) = self.lexicon.open.get(&stem) else { continue };
            let verbish = *tag == Upos::Verb || alts.contains(&Upos::Verb);
            match kind {
                Inflection::S if matches!(tag, Upos::Noun | Upos::Verb) => {
                    return draft(*tag, alts.clone(), Some(kind));
                }
                Inflection::Ed | Inflection::Ing if verbish => {
                    return draft(Upos::Verb, Vec::new(), Some(kind));
                }
                _ => {}
            }
        }
        if let Some(tag) = self.suffix_rule(&lower, prev) {
            return draft(tag, Vec::new(), None);
        }
        let capitalized = word.chars().next().is_some_and(char::is_uppercase);
        if capitalized && !sentence_start {
            return draft(Upos::Propn, Vec::new(), None);
        }
        draft(Upos::Noun, Vec::new(), None)
    }

    fn suffix_rule(&self, lower: &str, prev: Option<Upos>) -> Option<Upos> {
        if lower.ends_with("ly") {
            return Some(Upos::Adv);
        }
        if (lower.ends_with("ing") || lower.ends_with("ed")) && prev == Some(Upos::Aux) {
            return Some(Upos::Verb);
        }
        if ["tion", "ment", "ness"].iter().any(|s| lower.ends_with(s)) {
            return Some(Upos::Noun);
        }
        if ["ize", "ify"].iter().any(|s| lower.ends_with(s)) {
            return Some(Upos::Verb);
        }
        None
    }

    fn contextual(&self, drafts: &mut [Draft]) {
        for i in 0..drafts.len() {
            let prev = i.checked_sub(1).map(|p| drafts[p].tag);
            let prev_word = i.checked_sub(1).map(|p| drafts[p].lower.as_str()).unwrap_or("");
            let next = drafts.get(i + 1).map(|d| d.tag);
            let next_nominal = matches!(next, Some(Upos::Noun | Upos::Propn | Upos::Adj));
            let d = &drafts[i];
            let mut tag = d.tag;
            match d.tag {
                Upos::Verb => match prev {
                    Some(Upos::Det | Upos::Adj) => {
                        let adjectival = matches!(d.inflection, Some(Inflection::Ed | Inflection::Ing))
                            || (d.alts.contains(&Upos::Adj) && next_nominal);
                        tag = if adjectival { Upos::Adj } else { Upos::Noun };
                    }
                    Some(Upos::Adp) if prev_word != "to" && d.inflection != Some(Inflection::Ing) => {
                        tag = Upos::Noun;
                    }
                    // Bare verb after a singular noun: second half of a compound.
                    Some(Upos::Noun)
                        if d.inflection.is_none()
                            && !self.lexicon.irregular.contains_key(&d.lower)
                            && !drafts[i - 1].lower.ends_with('s')
                            && d.alts.contains(&Upos::Noun) =>
                    {
                        tag = Upos::Noun;
                    }
                    Some(Upos::Noun | Upos::Propn)
                        if d.inflection.is_none()
                            && d.alts.contains(&Upos::Adj)
                            && next_nominal
                            && i.checked_sub(1).and_then(|p| subject_number(&drafts[p])) == Some(Number::Singular) =>
                    {
                        tag = Upos::Adj;
                    }
                    _ => {}
                },
                Upos::Noun if d.alts.contains(&Upos::Verb) => {
                    let after_aux = prev == Some(Upos::Aux) || prev_word == "to";
                    let number = i.checked_sub(1).and_then(|p| subject_number(&drafts[p]));
                    let agrees = !matches!(next, Some(Upos::Verb | Upos::Aux))
                        && match d.inflection {
                            Some(Inflection::S) => number == Some(Number::Singular),
                            None => number == Some(Number::Plural),
                            _ => false,
                        };
                    if (after_aux && d.inflection.is_none()) || agrees {
                        tag = Upos::Verb;
                    }
                }
                _ => {}
            }
            drafts[i].tag = tag;
        }
        // Demonstratives read as determiners only once the next word is settled.
        for i in 0..drafts.len() {
            let next = drafts.get(i + 1).map(|d| d.tag);
            let d = &mut drafts[i];
            if d.tag == Upos::Pron
                && matches!(d.lower.as_str(), "that" | "this" | "these" | "those")
                && matches!(next, Some(Upos::Adj | Upos::Noun | Upos::Propn | Upos::Num))
            {
                d.tag = Upos::Det;
            }
        }
        // "to" is a particle before a verb and an adposition otherwise.
        for i in 0..drafts.len() {
            if drafts[i].lower == "to" {
                let before_verb = drafts.get(i + 1).is_some_and(|n| n.tag.is_verbal());
                drafts[i].tag = if before_verb { Upos::Part } else { Upos::Adp };
            }
        }
    }

    fn lemma(&self, lower: &str, tag: Upos) -> String {
        match tag {
            Upos::Noun => singularize(lower),
            Upos::Verb | Upos::Aux => {
                if MODALS.contains(&lower) || self.lexicon.is_verb_base(lower) {
                    lower.into()
                } else {
                    self.lexicon.verb_stem(lower).unwrap_or_else(|| lower.into())
                }
            }
            _ => lower.into(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Number {
    Singular,
    Plural,
}

/// Grammatical number of a word that could be the subject of the next one.
fn subject_number(d: &Draft) -> Option<Number> {
    match d.tag {
        Upos::Noun | Upos::Propn if d.lower.ends_with('s') && !d.lower.ends_with("ss") => Some(Number::Plural),
        Upos::Noun | Upos::Propn => Some(Number::Singular),
        Upos::Pron => match d.lower.as_str() {
            "it" | "this" | "that" | "he" | "she" => Some(Number::Singular),
            "they" | "we" | "these" | "those" => Some(Number::Plural),
            _ => None,
        },
        _ => None,
    }
}

/// Tags a document with the bundled lexicons.
pub fn tag_pos(doc: Document) -> Document {
    Tagger::bundled().tag_document(doc)
}
