//! Corpus scanning: dominance reports over a stream of graphs, aggregated
//! deterministically in input order regardless of the parallel schedule.

use super::report::dominance_report;
use crate::graph::Graph;
use crate::par;
use serde::Serialize;

pub const SCHEMA_SCAN_AGGREGATE: &str = "scan-aggregate/1";

/// Dominance pattern a scan filters for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominancePattern {
    NoDominant,
    AllDominant,
    ExactlyKDominant(usize),
}

impl DominancePattern {
    fn matches(&self, dominant_count: usize, vertex_count: usize) -> bool {
        match *self {
            DominancePattern::NoDominant => dominant_count == 0,
            DominancePattern::AllDominant => dominant_count == vertex_count,
            DominancePattern::ExactlyKDominant(k) => dominant_count == k,
        }
    }
}

impl std::fmt::Display for DominancePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DominancePattern::NoDominant => write!(f, "no-dominant"),
            DominancePattern::AllDominant => write!(f, "all-dominant"),
            DominancePattern::ExactlyKDominant(k) => write!(f, "exactly-{k}-dominant"),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanVerdict {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub dominant_count: usize,
    pub all_dominant: bool,
    pub matches: bool,
}

/// Outcome for one input graph, in input order. `Err` carries the parse
/// or analysis failure; failures never abort the scan.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanItem {
    pub index: usize,
    #[serde(flatten)]
    pub outcome: ScanOutcome,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ScanOutcome {
    Ok { verdict: ScanVerdict },
    Failed { error: String },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanAggregate {
    pub schema: &'static str,
    pub pattern: String,
    pub total: usize,
    pub analyzed: usize,
    pub failed: usize,
    pub matched: usize,
    pub no_dominant_count: usize,
    pub all_dominant_count: usize,
    /// `(dominant_count, frequency)` pairs, ascending.
    pub dominant_count_histogram: Vec<(usize, usize)>,
    pub items: Vec<ScanItem>,
}

impl ScanAggregate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("aggregate serializes")
    }

    /// CSV rendering: header plus one row per input graph, LF endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,status,vertex_count,edge_count,dominant_count,matches\n");
        for item in &self.items {
            match &item.outcome {
                ScanOutcome::Ok { verdict } => out.push_str(&format!(
                    "{},ok,{},{},{},{}\n",
                    item.index,
                    verdict.vertex_count,
                    verdict.edge_count,
                    verdict.dominant_count,
                    verdict.matches
                )),
                ScanOutcome::Failed { error } => out.push_str(&format!(
                    "{},error,,,,\"{}\"\n",
                    item.index,
                    error.replace('"', "'")
                )),
            }
        }
        out
    }
}

fn analyze_one(
    index: usize,
    input: Result<Graph, String>,
    pattern: DominancePattern,
    cap: usize,
) -> ScanItem {
    let outcome = match input {
        Err(e) => ScanOutcome::Failed { error: e },
        Ok(g) if g.vertex_count() == 0 => ScanOutcome::Failed {
            error: "empty graph".into(),
        },
        Ok(g) if g.vertex_count() > cap => ScanOutcome::Failed {
            error: format!("vertex count {} exceeds scan cap {}", g.vertex_count(), cap),
        },
        Ok(g) => {
            let report = dominance_report(&g, None);
            ScanOutcome::Ok {
                verdict: ScanVerdict {
                    vertex_count: report.graph.vertex_count,
                    edge_count: report.graph.edge_count,
                    dominant_count: report.dominant_count,
                    all_dominant: report.all_dominant,
                    matches: pattern.matches(report.dominant_count, report.graph.vertex_count),
                },
            }
        }
    };
    ScanItem { index, outcome }
}

fn aggregate(pattern: DominancePattern, items: Vec<ScanItem>) -> ScanAggregate {
    let total = items.len();
    let mut analyzed = 0;
    let mut failed = 0;
    let mut matched = 0;
    let mut no_dominant = 0;
    let mut all_dominant = 0;
    let mut histogram = std::collections::BTreeMap::new();
    for item in &items {
        match &item.outcome {
            ScanOutcome::Failed { .. } => failed += 1,
            ScanOutcome::Ok { verdict } => {
                analyzed += 1;
                if verdict.matches {
                    matched += 1;
                }
                if verdict.dominant_count == 0 {
                    no_dominant += 1;
                }
                if verdict.all_dominant {
                    all_dominant += 1;
                }
                *histogram.entry(verdict.dominant_count).or_insert(0usize) += 1;
            }
        }
    }
    ScanAggregate {
        schema: SCHEMA_SCAN_AGGREGATE,
        pattern: pattern.to_string(),
        total,
        analyzed,
        failed,
        matched,
        no_dominant_count: no_dominant,
        all_dominant_count: all_dominant,
        dominant_count_histogram: histogram.into_iter().collect(),
        items,
    }
}

/// Scans a corpus, analyzing graphs concurrently when the `parallel`
/// feature is on. Aggregation order is the input order either way, so the
/// output is byte-identical across parallelism settings.
pub fn scan_corpus(
    inputs: Vec<Result<Graph, String>>,
    pattern: DominancePattern,
    cap: usize,
) -> ScanAggregate {
    let indexed: Vec<(usize, Result<Graph, String>)> = inputs.into_iter().enumerate().collect();
    let items = par::map_ordered(indexed, |(i, input)| analyze_one(i, input, pattern, cap));
    aggregate(pattern, items)
}

/// Sequential twin of [`scan_corpus`].
pub fn scan_corpus_seq(
    inputs: Vec<Result<Graph, String>>,
    pattern: DominancePattern,
    cap: usize,
) -> ScanAggregate {
    let indexed: Vec<(usize, Result<Graph, String>)> = inputs.into_iter().enumerate().collect();
    let items = par::map_ordered_seq(indexed, |(i, input)| analyze_one(i, input, pattern, cap));
    aggregate(pattern, items)
}
