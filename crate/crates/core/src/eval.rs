//! Binary classification metrics over human-labelled triples.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `counts[gold][predicted]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub counts: [[usize; 2]; 2],
}

impl ConfusionMatrix {
    pub fn get(&self, gold: u8, predicted: u8) -> usize {
        self.counts[gold as usize][predicted as usize]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn correct(&self) -> usize {
        self.counts[0][0] + self.counts[1][1]
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Averages {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    /// Classes seen in either gold or predicted labels.
    pub per_class: BTreeMap<u8, ClassMetrics>,
    pub accuracy: f64,
    pub weighted_avg: Averages,
    pub confusion: ConfusionMatrix,
    pub total: usize,
}

pub fn confusion_matrix(gold: &[u8], predicted: &[u8]) -> Result<ConfusionMatrix> {
    if gold.len() != predicted.len() {
        return Err(Error::LengthMismatch { gold: gold.len(), predicted: predicted.len() });
    }
    if gold.is_empty() {
        return Err(Error::EmptyLabels);
    }
    let mut m = ConfusionMatrix::default();
    for (&g, &p) in gold.iter().zip(predicted) {
        for label in [g, p] {
            if label > 1 {
                return Err(Error::NonBinaryLabel(label));
            }
        }
        m.counts[g as usize][p as usize] += 1;
    }
    Ok(m)
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Per-class precision/recall/F1, accuracy and the support-weighted average.
/// Zero denominators give 0.
pub fn classification_report(gold: &[u8], predicted: &[u8]) -> Result<Metrics> {
    let confusion = confusion_matrix(gold, predicted)?;
    let total = confusion.total();
    let mut per_class = BTreeMap::new();
    let mut weighted = Averages::default();
    for c in 0..2u8 {
        let tp = confusion.get(c, c);
        let support = confusion.get(c, 0) + confusion.get(c, 1);
        let predicted_c = confusion.get(0, c) + confusion.get(1, c);
        if support == 0 && predicted_c == 0 {
            continue;
        }
        let precision = ratio(tp, predicted_c);
        let recall = ratio(tp, support);
        let f1 = if precision + recall == 0.0 { 0.0 } else { 2.0 * precision * recall / (precision + recall) };
        let w = support as f64 / total as f64;
        weighted.precision += w * precision;
        weighted.recall += w * recall;
        weighted.f1 += w * f1;
        per_class.insert(c, ClassMetrics { precision, recall, f1, support });
    }
    Ok(Metrics { per_class, accuracy: ratio(confusion.correct(), total), weighted_avg: weighted, confusion, total })
}

/// Text table with two decimals; only classes with gold support get a row.
pub fn render_report(m: &Metrics) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>12} {:>9} {:>9} {:>9} {:>9}", "", "precision", "recall", "f1-score", "support");
    out.push('\n');
    for (class, c) in m.per_class.iter().filter(|(_, c)| c.support > 0) {
        let _ = writeln!(out, "{:>12} {:>9.2} {:>9.2} {:>9.2} {:>9}", class, c.precision, c.recall, c.f1, c.support);
    }
    out.push('\n');
    let _ = writeln!(out, "{:>12} {:>9} {:>9} {:>9.2} {:>9}", "accuracy", "", "", m.accuracy, m.total);
    let w = &m.weighted_avg;
    let _ = writeln!(out, "{:>12} {:>9.2} {:>9.2} {:>9.2} {:>9}", "weighted avg", w.precision, w.recall, w.f1, m.total);
    out
}
