use proptest::prelude::*;

use textkg_core::chunker::{apply_merge_rules_counted, chunk_noun_phrases, chunk_sentence, Chunk, ChunkKind};
use textkg_core::coref::resolve_coreferences;
use textkg_core::eval::classification_report;
use textkg_core::graph::{build_graph, entity_subgraph};
use textkg_core::ingest::{clean_text, load_glossary, tag_pos, tokenize};
use textkg_core::relations::extract_predicates;
use textkg_core::stem::stem_tokens;
use textkg_core::triples::{
    assemble_positional, check_glossary_guarantee, filter_by_glossary, filter_stopwords, Phase, StopList, Triple,
};
use textkg_core::{Sentence, Token, Upos};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

fn word_for(tag: Upos, pick: usize) -> &'static str {
    let pool: &[&str] = match tag {
        Upos::Det => &["the", "a", "an", "its"],
        Upos::Adj => &["rational", "multiple", "simple", "large"],
        Upos::Noun => &["agent", "sensors", "search", "moves", "output"],
        Upos::Propn => &["Russell", "Norvig", "Python"],
        Upos::Verb => &["has", "gives", "select", "lead", "maximize"],
        Upos::Aux => &["is", "may", "should", "does"],
        Upos::Adp => &["of", "in", "through", "to", "on"],
        Upos::Part => &["not", "to"],
        Upos::Pron => &["it", "that", "they"],
        Upos::Adv => &["too", "where", "quickly"],
        Upos::Cconj => &["and", "or"],
        Upos::Punct => &["(", ")", ",", "."],
        _ => &["x"],
    };
    pool[pick % pool.len()]
}

const TAGS: [Upos; 12] = [
    Upos::Det,
    Upos::Adj,
    Upos::Noun,
    Upos::Propn,
    Upos::Verb,
    Upos::Aux,
    Upos::Adp,
    Upos::Part,
    Upos::Pron,
    Upos::Adv,
    Upos::Cconj,
    Upos::Punct,
];

/// A sentence with arbitrary tags and plausible words for them.
fn sentence(max_len: usize) -> impl Strategy<Value = Sentence> {
    prop::collection::vec((0..TAGS.len(), 0..8usize), 1..=max_len).prop_map(|layout| {
        let mut offset = 0;
        let tokens = layout
            .iter()
            .enumerate()
            .map(|(i, &(t, pick))| {
                let tag = TAGS[t];
                let word = word_for(tag, pick);
                let len = word.chars().count();
                let mut token = Token::new("p", 0, i, word, offset, offset + len);
                offset += len + 1;
                token.pos = Some(tag);
                token.lemma = word.to_lowercase();
                token
            })
            .collect();
        Sentence { index: 0, tokens }
    })
}

fn assert_partition(chunks: &[Chunk], len: usize) {
    let mut owner = vec![None; len];
    for (n, c) in chunks.iter().enumerate() {
        assert!(c.first_token <= c.last_token && c.last_token < len);
        for slot in &mut owner[c.first_token..=c.last_token] {
            assert!(slot.is_none(), "overlapping chunks");
            *slot = Some(n);
        }
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn chunks_never_overlap_and_merging_terminates(s in sentence(24)) {
        let n = s.tokens.len();
        let (chunks, passes) = apply_merge_rules_counted(&s, chunk_noun_phrases(&s));
        assert_partition(&chunks, n);
        prop_assert!(passes <= 2 * n + 1, "{passes} passes for {n} tokens");
        let (again, second) = apply_merge_rules_counted(&s, chunks.clone());
        prop_assert_eq!(again, chunks);
        prop_assert_eq!(second, 1);
    }

    #[test]
    fn positional_assembly_matches_brute_force(s in sentence(12)) {
        let chunks = chunk_sentence(&s, &[]);
        let predicates = extract_predicates(&s, &chunks);
        let got: Vec<(String, String, String)> = assemble_positional(&s, &chunks, &predicates)
            .into_iter()
            .map(|t| (t.subject, t.predicate, t.object))
            .collect();

        let nominal: Vec<&Chunk> = chunks.iter().filter(|c| matches!(c.kind, ChunkKind::Entity | ChunkKind::NounPhrase)).collect();
        let mut expected = Vec::new();
        for p in predicates.iter().filter(|p| p.chunk.kind == ChunkKind::Predicate) {
            let (start, end) = (p.chunk.first_token, p.end_token());
            for a in &nominal {
                for b in &nominal {
                    let between = a.last_token < start && end < b.first_token;
                    let left_nearest = !nominal.iter().any(|c| c.last_token > a.last_token && c.last_token < start);
                    let right_nearest = !nominal.iter().any(|c| c.first_token < b.first_token && c.first_token > end);
                    if between && left_nearest && right_nearest {
                        expected.push((a.label.clone(), p.chunk.label.clone(), b.label.clone()));
                    }
                }
            }
        }
        prop_assert_eq!(got, expected);
    }
}

const LABELS: [&str; 12] = [
    "agent",
    "it",
    "sensors",
    "the",
    "figure 3",
    "rational agent",
    "table",
    "of",
    "search tree",
    "42",
    "output",
    "they",
];

fn triple((s, p, o): (usize, usize, usize)) -> Triple {
    Triple {
        subject: LABELS[s].into(),
        predicate: ["has", "is", "gives"][p].into(),
        object: LABELS[o].into(),
        phase: Phase::Positional,
        document_id: "p".into(),
        sentence_index: s,
        subject_span: (0, 1),
        predicate_span: (2, 3),
        object_span: (4, 5),
    }
}

fn triples() -> impl Strategy<Value = Vec<Triple>> {
    prop::collection::vec((0..LABELS.len(), 0..3usize, 0..LABELS.len()), 0..30)
        .prop_map(|v| v.into_iter().map(triple).collect())
}

fn glossary() -> impl Strategy<Value = Vec<textkg_core::ingest::GlossaryTerm>> {
    prop::sample::subsequence(vec!["agent", "sensor", "search", "output", "tree", "rational agent"], 0..=6)
        .prop_map(|terms| load_glossary(&terms.join("\n")))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn filters_are_monotone_idempotent_and_commute(ts in triples(), g in glossary()) {
        let stop = StopList::bundled();
        let a = filter_stopwords(&ts, &stop);
        let b = filter_by_glossary(&ts, &g);
        prop_assert!(a.len() <= ts.len() && b.len() <= ts.len());
        prop_assert_eq!(&filter_stopwords(&a, &stop), &a);
        prop_assert_eq!(&filter_by_glossary(&b, &g), &b);
        prop_assert_eq!(filter_by_glossary(&a, &g), filter_stopwords(&b, &stop));
    }

    #[test]
    fn glossary_filter_guarantee(ts in triples(), g in glossary()) {
        let kept = filter_by_glossary(&ts, &g);
        prop_assert!(check_glossary_guarantee(&kept, &g).is_ok());
        for t in &kept {
            let sides = [stem_tokens(&t.subject), stem_tokens(&t.object)];
            let hit = g.iter().any(|term| {
                sides.iter().any(|side| side.windows(term.stemmed.len()).any(|w| w == term.stemmed.as_slice()))
            });
            prop_assert!(hit);
        }
        let dropped = ts.len() - kept.len();
        let unmatched = ts.iter().filter(|t| check_glossary_guarantee(std::slice::from_ref(*t), &g).is_err()).count();
        prop_assert_eq!(dropped, unmatched);
    }
}

const NODES: [&str; 5] = ["agent", "sensor", "output", "box", "child"];
const PLURALS: [&str; 5] = ["agents", "sensors", "outputs", "boxes", "children"];

proptest! {
    #![proptest_config(config())]

    #[test]
    fn entity_subgraph_is_incident_edge_scan(
        edges in prop::collection::vec((0..5usize, 0..3usize, 0..5usize), 0..20),
        query in 0..5usize,
        plural in any::<bool>(),
    ) {
        let ts: Vec<Triple> = edges
            .iter()
            .map(|&(s, p, o)| Triple { subject: NODES[s].into(), object: NODES[o].into(), ..triple((0, p, 0)) })
            .collect();
        let kg = build_graph(&ts);
        let q = if plural { PLURALS[query] } else { NODES[query] };
        let sub = entity_subgraph(&kg, q);
        let name = NODES[query];
        let scan: Vec<_> = kg.edges.iter().filter(|e| e.source == name || e.target == name).cloned().collect();
        prop_assert_eq!(&sub.graph.edges, &scan);
        prop_assert_eq!(sub.found, kg.nodes.iter().any(|n| n == name));
        for node in &sub.graph.nodes {
            prop_assert!(scan.iter().any(|e| &e.source == node || &e.target == node));
        }
    }

    #[test]
    fn weighted_recall_equals_accuracy(pairs in prop::collection::vec((0..2u8, 0..2u8), 1..200)) {
        let (gold, predicted): (Vec<u8>, Vec<u8>) = pairs.iter().copied().unzip();
        let m = classification_report(&gold, &predicted).unwrap();
        prop_assert!((m.weighted_avg.recall - m.accuracy).abs() < 1e-9);
        let id = classification_report(&gold, &gold).unwrap();
        prop_assert_eq!(id.accuracy, 1.0);
        let support: usize = m.per_class.values().map(|c| c.support).sum();
        prop_assert_eq!(support, gold.len());
    }

    #[test]
    fn report_is_permutation_invariant(
        pairs in prop::collection::vec((0..2u8, 0..2u8), 1..100).prop_shuffle(),
    ) {
        let (gold, predicted): (Vec<u8>, Vec<u8>) = pairs.iter().copied().unzip();
        let mut sorted = pairs.clone();
        sorted.sort();
        let (g2, p2): (Vec<u8>, Vec<u8>) = sorted.into_iter().unzip();
        prop_assert_eq!(classification_report(&gold, &predicted).unwrap(), classification_report(&g2, &p2).unwrap());
    }
}

const WORDS: [&str; 16] = [
    "An",
    "agent",
    "has",
    "sensors",
    "It",
    "gives",
    "output",
    "through",
    "actuators",
    "its",
    "the",
    "search",
    "they",
    "Figure",
    "2.1",
    "moves",
];

fn raw_text() -> impl Strategy<Value = String> {
    prop::collection::vec((0..WORDS.len(), 0..6usize), 0..40).prop_map(|v| {
        v.into_iter()
            .map(|(w, sep)| format!("{}{}", WORDS[w], ["", " ", ".\n", "-\n", "\n\n", ". "][sep]))
            .collect::<Vec<_>>()
            .join(" ")
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn cleaning_is_idempotent(raw in raw_text()) {
        let once = clean_text(&raw);
        prop_assert_eq!(clean_text(&once), once);
    }

    #[test]
    fn glossary_order_does_not_matter(terms in prop::collection::vec(prop::sample::select(WORDS.to_vec()), 0..10).prop_shuffle()) {
        let mut reversed = terms.clone();
        reversed.reverse();
        prop_assert_eq!(load_glossary(&terms.join("\n")), load_glossary(&reversed.join("\n")));
    }

    #[test]
    fn coreference_is_idempotent(raw in raw_text(), window in 0..4usize) {
        let glossary = load_glossary("agent\nsensor\noutput");
        let doc = tag_pos(tokenize(&clean_text(&raw), "p"));
        let (once, _) = resolve_coreferences(doc, &glossary, window);
        let (twice, log) = resolve_coreferences(once.clone(), &glossary, window);
        prop_assert_eq!(twice, once);
        prop_assert!(log.is_empty());
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn token_spans_rebuild_cleaned_text(raw in raw_text()) {
        let cleaned = clean_text(&raw);
        let doc = tokenize(&cleaned, "p");
        prop_assert!(doc.validate(true).is_ok());
        let chars: Vec<char> = cleaned.chars().collect();
        let mut rebuilt = String::new();
        let mut at = 0;
        for t in doc.tokens() {
            let gap: String = chars[at..t.start].iter().collect();
            prop_assert!(gap.chars().all(char::is_whitespace));
            rebuilt.push_str(&gap);
            rebuilt.push_str(&t.word);
            at = t.end;
        }
        let tail: String = chars[at..].iter().collect();
        prop_assert!(tail.chars().all(char::is_whitespace));
        rebuilt.push_str(&tail);
        prop_assert_eq!(rebuilt, cleaned);
    }
}
