//! Checks `export_dot` output against the subset of the DOT grammar it uses:
//!
//! ```text
//! graph   := "digraph" ID "{" "\n" stmt* "}" "\n"
//! stmt    := "  " QUOTED ";" "\n"
//!          | "  " QUOTED " -> " QUOTED " [label=" QUOTED "];" "\n"
//! QUOTED  := '"' ( [^"\\\n] | '\\' ANY )* '"'
//! ```

use proptest::prelude::*;
use textkg_core::graph::{build_graph, export_dot, KnowledgeGraph};
use textkg_core::triples::{Phase, Triple};

struct Cursor<'a> {
    rest: &'a str,
}

impl<'a> Cursor<'a> {
    fn eat(&mut self, lit: &str) -> Result<(), String> {
        self.rest = self.rest.strip_prefix(lit).ok_or_else(|| format!("expected {lit:?} at {:?}", self.rest))?;
        Ok(())
    }

    fn quoted(&mut self) -> Result<String, String> {
        self.eat("\"")?;
        let mut out = String::new();
        let mut chars = self.rest.char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    self.rest = &self.rest[i + 1..];
                    return Ok(out);
                }
                '\\' => out.push(chars.next().ok_or("dangling escape")?.1),
                '\n' => return Err("newline in string".into()),
                _ => out.push(c),
            }
        }
        Err("unterminated string".into())
    }
}

#[derive(Debug, PartialEq)]
struct Parsed {
    nodes: Vec<String>,
    edges: Vec<(String, String, String)>,
}

fn parse(dot: &str) -> Result<Parsed, String> {
    let mut c = Cursor { rest: dot };
    c.eat("digraph kg {\n")?;
    let mut parsed = Parsed { nodes: Vec::new(), edges: Vec::new() };
    while c.rest.starts_with("  ") {
        c.eat("  ")?;
        let first = c.quoted()?;
        if c.rest.starts_with(';') {
            c.eat(";\n")?;
            if !parsed.edges.is_empty() {
                return Err("node statement after edges".into());
            }
            parsed.nodes.push(first);
        } else {
            c.eat(" -> ")?;
            let target = c.quoted()?;
            c.eat(" [label=")?;
            let label = c.quoted()?;
            c.eat("];\n")?;
            parsed.edges.push((first, target, label));
        }
    }
    c.eat("}\n")?;
    if !c.rest.is_empty() {
        return Err(format!("trailing input {:?}", c.rest));
    }
    Ok(parsed)
}

fn triple(s: &str, p: &str, o: &str, sentence_index: usize) -> Triple {
    Triple {
        subject: s.into(),
        predicate: p.into(),
        object: o.into(),
        phase: Phase::Positional,
        document_id: "g".into(),
        sentence_index,
        subject_span: (0, 0),
        predicate_span: (0, 0),
        object_span: (0, 0),
    }
}

#[test]
fn empty_graph() {
    assert_eq!(parse(&export_dot(&KnowledgeGraph::default())), Ok(Parsed { nodes: vec![], edges: vec![] }));
}

#[test]
fn single_edge() {
    let dot = export_dot(&build_graph(&[triple("agent", "has", "sensor", 0)]));
    let parsed = parse(&dot).unwrap();
    assert_eq!(parsed.nodes, ["agent", "sensor"]);
    assert_eq!(parsed.edges, [("agent".into(), "sensor".into(), "has".into())]);
}

const LABELS: [&str; 7] = ["agent", "sensor", "a \"quoted\" term", "back\\slash", "known-state", "Ä node", "x"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn output_parses_and_round_trips(
        layout in prop::collection::vec((0..LABELS.len(), 0..LABELS.len(), 0..LABELS.len(), 0..50usize), 0..15),
    ) {
        let ts: Vec<Triple> = layout.iter().map(|&(s, p, o, i)| triple(LABELS[s], LABELS[p], LABELS[o], i)).collect();
        let dot = export_dot(&build_graph(&ts));
        let parsed = parse(&dot).map_err(TestCaseError::fail)?;
        let mut sorted = parsed.nodes.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(&sorted, &parsed.nodes);
        let edges: Vec<_> = ts.iter().map(|t| (t.subject.clone(), t.object.clone(), t.predicate.clone())).collect();
        prop_assert_eq!(parsed.edges, edges);
        prop_assert!(parsed.nodes.len() <= 2 * ts.len());

        let renumbered: Vec<Triple> = ts.iter().map(|t| Triple { sentence_index: 0, document_id: "other".into(), ..t.clone() }).collect();
        prop_assert_eq!(export_dot(&build_graph(&renumbered)), dot);
    }
}
