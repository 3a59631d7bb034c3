//! JSON Lines reading and writing.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use textkg_core::triples::Triple;

/// One JSON object per line, each followed by `\n`.
pub fn to_jsonl<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("serializable record"));
        out.push('\n');
    }
    out
}

pub fn export_jsonl(triples: &[Triple]) -> String {
    to_jsonl(triples)
}

/// Parses non-blank lines; errors carry the 1-based line number.
pub fn from_jsonl<T: DeserializeOwned>(src: &str) -> Result<Vec<T>, (usize, String)> {
    src.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(n, line)| serde_json::from_str(line).map_err(|e| (n + 1, e.to_string())))
        .collect()
}

/// A human judgement of one triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldLabel {
    pub subject: String,
    pub predicate: String,
    pub object: String,
    pub gold: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted: Option<u8>,
}
