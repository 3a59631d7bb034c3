//! Knowledge graph: a directed multigraph over entity labels.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::lemma::lemmatize_label;
use crate::triples::Triple;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub document_id: String,
    pub sentence_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub predicate: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnowledgeGraph {
    /// Insertion order.
    pub nodes: Vec<String>,
    pub edges: Vec<Edge>,
}

impl KnowledgeGraph {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains_node(&self, label: &str) -> bool {
        self.nodes.iter().any(|n| n == label)
    }

    pub fn out_degree(&self, label: &str) -> usize {
        self.edges.iter().filter(|e| e.source == label).count()
    }

    fn add_node(&mut self, label: &str) {
        if !self.contains_node(label) {
            self.nodes.push(label.into());
        }
    }

    pub fn add_edge(&mut self, edge: Edge) {
        self.add_node(&edge.source);
        self.add_node(&edge.target);
        self.edges.push(edge);
    }
}

/// One node per distinct label and one edge per triple, subject to object.
pub fn build_graph(triples: &[Triple]) -> KnowledgeGraph {
    let mut kg = KnowledgeGraph::default();
    for t in triples {
        kg.add_edge(Edge {
            source: t.subject.clone(),
            target: t.object.clone(),
            predicate: t.predicate.clone(),
            provenance: Provenance { document_id: t.document_id.clone(), sentence_index: t.sentence_index },
        });
    }
    kg
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: KnowledgeGraph,
    pub found: bool,
}

/// Edges incident to `entity` and their endpoints. Labels are compared after
/// lemmatization, so "sensors" finds "sensor".
pub fn entity_subgraph(kg: &KnowledgeGraph, entity: &str) -> Subgraph {
    let query = lemmatize_label(entity);
    let matches = |label: &str| lemmatize_label(label) == query;
    let found = !query.is_empty() && kg.nodes.iter().any(|n| matches(n));
    let mut graph = KnowledgeGraph::default();
    if found {
        for e in kg.edges.iter().filter(|e| matches(&e.source) || matches(&e.target)) {
            graph.add_edge(e.clone());
        }
    }
    Subgraph { graph, found }
}

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// DOT rendering: sorted node statements, then edges in insertion order.
pub fn export_dot(kg: &KnowledgeGraph) -> String {
    let mut out = String::from("digraph kg {\n");
    let nodes: BTreeSet<&str> = kg.nodes.iter().map(String::as_str).collect();
    for node in nodes {
        let _ = writeln!(out, "  {};", quote(node));
    }
    for e in &kg.edges {
        let _ = writeln!(out, "  {} -> {} [label={}];", quote(&e.source), quote(&e.target), quote(&e.predicate));
    }
    out.push_str("}\n");
    out
}
