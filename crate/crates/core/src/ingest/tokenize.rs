use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Document, Sentence, Token};

const ABBREVIATIONS: [&str; 4] = ["e.g.", "i.e.", "etc.", "fig."];
const LEADING_PUNCT: &[char] = &['(', '[', '{', '"', '\'', '\u{201c}', '\u{2018}', '\u{ab}', '`'];
const TRAILING_PUNCT: &[char] =
    &['.', ',', ';', ':', '!', '?', ')', ']', '}', '"', '\'', '\u{201d}', '\u{2019}', '\u{bb}', '\u{2026}'];
const SENTENCE_END: &[char] = &['.', '!', '?', '\u{2026}'];

/// Splits cleaned text into sentences and tokens with exact char offsets.
///
/// Sentences end at `.`, `?` or `!` followed by whitespace or end of text,
/// and at paragraph breaks. The abbreviations `e.g.`, `i.e.`, `etc.` and
/// `Fig.` never end a sentence. Hyphenated words stay whole; the possessive
/// `'s` becomes its own token.
pub fn tokenize(cleaned: &str, document_id: &str) -> Document {
    let chars: Vec<char> = cleaned.chars().collect();
    let mut builder = Builder { document_id, sentences: Vec::new(), current: Vec::new() };

    let mut i = 0;
    let mut gap_start = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        if chars[gap_start..i].iter().filter(|&&c| c == '\n').count() >= 2 {
            builder.end_sentence();
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() {
            i += 1;
        }
        if split_word(&chars, start, i, &mut builder) {
            builder.end_sentence();
        }
        gap_start = i;
    }
    builder.end_sentence();

    Document { id: document_id.into(), cleaned_text: cleaned.into(), sentences: builder.sentences }
}

struct Builder<'a> {
    document_id: &'a str,
    sentences: Vec<Sentence>,
    current: Vec<Token>,
}

impl Builder<'_> {
    fn push(&mut self, chars: &[char], start: usize, end: usize) {
        let word: String = chars[start..end].iter().collect();
        let token = Token::new(self.document_id, self.sentences.len(), self.current.len(), &word, start, end);
        self.current.push(token);
    }

    fn end_sentence(&mut self) {
        if !self.current.is_empty() {
            let index = self.sentences.len();
            self.sentences.push(Sentence { index, tokens: core::mem::take(&mut self.current) });
        }
    }
}

/// Emits the tokens of one whitespace-delimited word; returns whether the
/// word closes a sentence.
fn split_word(chars: &[char], start: usize, end: usize, out: &mut Builder<'_>) -> bool {
    let mut lo = start;
    while lo < end && LEADING_PUNCT.contains(&chars[lo]) {
        out.push(chars, lo, lo + 1);
        lo += 1;
    }
    if lo == end {
        return false;
    }

    let lower: String = chars[lo..end].iter().flat_map(|c| c.to_lowercase()).collect();
    if let Some(abbr) = ABBREVIATIONS.iter().find(|a| lower.starts_with(*a)) {
        let abbr_end = lo + abbr.chars().count();
        if chars[abbr_end..end].iter().all(|c| TRAILING_PUNCT.contains(c)) {
            out.push(chars, lo, abbr_end);
            for k in abbr_end..end {
                out.push(chars, k, k + 1);
            }
            // "etc.?" still ends the sentence; a bare abbreviation does not.
            return chars[abbr_end..end].iter().any(|c| SENTENCE_END.contains(c));
        }
    }

    let mut hi = end;
    while hi > lo && TRAILING_PUNCT.contains(&chars[hi - 1]) {
        hi -= 1;
    }
    if hi > lo {
        let possessive =
            hi - lo > 2 && matches!(chars[hi - 2], '\'' | '\u{2019}') && matches!(chars[hi - 1], 's' | 'S');
        if possessive {
            out.push(chars, lo, hi - 2);
            out.push(chars, hi - 2, hi);
        } else {
            out.push(chars, lo, hi);
        }
    }
    for k in hi..end {
        out.push(chars, k, k + 1);
    }
    chars[hi..end].iter().any(|c| SENTENCE_END.contains(c))
}
