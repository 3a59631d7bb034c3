//! Reading back the DOT files written by [`export_dot`].

pub use textkg_core::graph::export_dot;
use textkg_core::graph::{Edge, KnowledgeGraph, Provenance};

fn quoted(s: &str) -> Option<(String, &str)> {
    let mut chars = s.strip_prefix('"')?.char_indices();
    let body = &s[1..];
    let mut out = String::new();
    while let Some((i, c)) = chars.next() {
        match c {
            '"' => return Some((out, &body[i + 1..])),
            '\\' => match chars.next()?.1 {
                'n' => out.push('\n'),
                other => out.push(other),
            },
            _ => out.push(c),
        }
    }
    None
}

/// Parses node and edge statements of the form written by [`export_dot`].
/// Provenance is not stored in DOT, so edges come back without it.
pub fn parse_dot(src: &str) -> Result<KnowledgeGraph, (usize, String)> {
    let mut kg = KnowledgeGraph::default();
    let mut nodes = Vec::new();
    let mut open = false;
    for (n, raw) in src.lines().enumerate() {
        let line = raw.trim();
        let err = |m: &str| (n + 1, m.to_string());
        if line.is_empty() {
            continue;
        }
        if !open {
            if line.starts_with("digraph") && line.ends_with('{') {
                open = true;
                continue;
            }
            return Err(err("expected `digraph ... {`"));
        }
        if line == "}" {
            open = false;
            continue;
        }
        let (first, rest) = quoted(line).ok_or_else(|| err("expected a quoted identifier"))?;
        if rest == ";" {
            nodes.push(first);
            continue;
        }
        let rest = rest.strip_prefix(" -> ").ok_or_else(|| err("expected `->`"))?;
        let (target, rest) = quoted(rest).ok_or_else(|| err("expected a quoted target"))?;
        let rest = rest.strip_prefix(" [label=").ok_or_else(|| err("expected an edge label"))?;
        let (label, rest) = quoted(rest).ok_or_else(|| err("expected a quoted label"))?;
        if rest != "];" {
            return Err(err("expected `];`"));
        }
        kg.add_edge(Edge {
            source: first,
            target,
            predicate: label,
            provenance: Provenance { document_id: String::new(), sentence_index: 0 },
        });
    }
    if open {
        return Err((src.lines().count(), "unterminated graph".into()));
    }
    for node in nodes {
        if !kg.contains_node(&node) {
            kg.nodes.push(node);
        }
    }
    Ok(kg)
}
