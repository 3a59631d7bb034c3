//! CoNLL-U reading and writing.
//!
//! Offsets are rebuilt from the forms: tokens are separated by one space
//! unless MISC carries `SpaceAfter=No`, and sentences by a newline.

use std::fmt::Write;

use textkg_core::{Document, Sentence, Token, Upos};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ConlluError {
    pub line: usize,
    pub message: String,
}

fn field(value: &str) -> String {
    if value == "_" {
        String::new()
    } else {
        value.into()
    }
}

fn column(value: &str) -> &str {
    if value.is_empty() {
        "_"
    } else {
        value
    }
}

struct Block {
    tokens: Vec<(Token, bool)>,
}

/// Parses CoNLL-U into a document. The id comes from a `# newdoc id = ...`
/// comment when present, otherwise from `default_id`.
pub fn parse_conllu(src: &str, default_id: &str) -> Result<Document, ConlluError> {
    let mut id = None;
    let mut blocks: Vec<Block> = Vec::new();
    let mut current = Block { tokens: Vec::new() };
    for (n, raw) in src.lines().enumerate() {
        let line = n + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() {
            if !current.tokens.is_empty() {
                blocks.push(std::mem::replace(&mut current, Block { tokens: Vec::new() }));
            }
            continue;
        }
        if let Some(comment) = raw.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("newdoc id").and_then(|r| r.trim().strip_prefix('=')) {
                id.get_or_insert_with(|| value.trim().to_string());
            }
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 10 {
            return Err(ConlluError { line, message: format!("expected 10 columns, found {}", cols.len()) });
        }
        if cols[0].contains('-') || cols[0].contains('.') {
            continue;
        }
        let index: usize = cols[0]
            .parse()
            .map_err(|_| ConlluError { line, message: format!("token id {:?} is not an integer", cols[0]) })?;
        if index != current.tokens.len() + 1 {
            return Err(ConlluError {
                line,
                message: format!("token id {index} out of sequence (expected {})", current.tokens.len() + 1),
            });
        }
        if cols[1].is_empty() {
            return Err(ConlluError { line, message: "empty FORM".into() });
        }
        let mut token = Token::new("", 0, index - 1, cols[1], 0, 0);
        token.lemma = field(cols[2]);
        token.pos = (cols[3] != "_").then(|| Upos::from_label(cols[3]));
        token.pos_tag = field(cols[4]);
        token.dependency = field(cols[7]);
        let space_after = !cols[9].split('|').any(|m| m == "SpaceAfter=No");
        current.tokens.push((token, space_after));
    }
    if !current.tokens.is_empty() {
        blocks.push(current);
    }

    let id = id.unwrap_or_else(|| default_id.to_string());
    let mut text = String::new();
    let mut offset = 0;
    let mut sentences = Vec::with_capacity(blocks.len());
    for (si, block) in blocks.into_iter().enumerate() {
        if si > 0 {
            text.push('\n');
            offset += 1;
        }
        let last = block.tokens.len() - 1;
        let tokens = block
            .tokens
            .into_iter()
            .enumerate()
            .map(|(ti, (mut token, space_after))| {
                let len = token.word.chars().count();
                token.document_id = id.clone();
                token.sentence_index = si;
                token.start = offset;
                token.end = offset + len;
                text.push_str(&token.word);
                offset += len;
                if space_after && ti < last {
                    text.push(' ');
                    offset += 1;
                }
                token
            })
            .collect();
        sentences.push(Sentence { index: si, tokens });
    }
    Ok(Document { id, cleaned_text: text, sentences })
}

/// Writes a document as CoNLL-U. HEAD and DEPS are left empty (`_`).
pub fn write_conllu(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# newdoc id = {}", doc.id);
    for sentence in &doc.sentences {
        let _ = writeln!(out, "# sent_id = {}", sentence.index + 1);
        if let (Some(first), Some(last)) = (sentence.tokens.first(), sentence.tokens.last()) {
            if let Some(text) = doc.slice(first.start, last.end) {
                let _ = writeln!(out, "# text = {}", text.replace('\n', " "));
            }
        }
        for (i, token) in sentence.tokens.iter().enumerate() {
            let glued = sentence.tokens.get(i + 1).is_some_and(|next| next.start == token.end);
            let pos = token.pos.map_or("_", Upos::as_str);
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t_\t_\t{}\t_\t{}",
                i + 1,
                token.word,
                column(&token.lemma),
                pos,
                column(&token.pos_tag),
                column(&token.dependency),
                if glued { "SpaceAfter=No" } else { "_" },
            );
        }
        out.push('\n');
    }
    out
}
