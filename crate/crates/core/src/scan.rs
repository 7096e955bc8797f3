//! Batch verification over graph streams and the subgraph-monotonicity scan.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundCheck, Catalog, CheckOptions, Status};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectral::{spectral_sums, spectrum};
use crate::stream::GraphStream;

/// Graphs per work unit. Fixed so the merge order never depends on `jobs`.
const CHUNK: u64 = 2048;

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_OPERATIONAL: i32 = 1;
pub const EXIT_CONJECTURE_VIOLATION: i32 = 2;
pub const EXIT_THEOREM_VIOLATION: i32 = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub jobs: usize,
    pub check: CheckOptions,
    /// Keep every row, not just violations and errors.
    pub all_rows: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: 1,
            check: CheckOptions::default(),
            all_rows: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundAggregate {
    pub bound: String,
    pub status: Status,
    pub evaluated: u64,
    pub skipped: u64,
    pub errors: u64,
    pub violations: u64,
    pub equalities: u64,
    /// Equalities on a strict side.
    pub tight: u64,
    /// Violations found on disconnected graphs.
    pub disconnected_violations: u64,
    /// Equalities whose graph lacks the expected structure tag.
    pub equality_class_mismatches: u64,
    pub min_slack: Option<f64>,
    /// First graph in stream order attaining `min_slack`.
    pub argmin_graph6: Option<String>,
}

impl BoundAggregate {
    fn new(bound: &str, status: Status) -> Self {
        BoundAggregate {
            bound: bound.to_string(),
            status,
            evaluated: 0,
            skipped: 0,
            errors: 0,
            violations: 0,
            equalities: 0,
            tight: 0,
            disconnected_violations: 0,
            equality_class_mismatches: 0,
            min_slack: None,
            argmin_graph6: None,
        }
    }

    fn record(&mut self, row: &BoundCheck) {
        if row.error {
            self.errors += 1;
        }
        if row.skipped {
            self.skipped += 1;
            return;
        }
        self.evaluated += 1;
        if row.violated() {
            self.violations += 1;
            if row.disconnected {
                self.disconnected_violations += 1;
            }
        }
        if row.equality {
            self.equalities += 1;
        }
        if row.tight {
            self.tight += 1;
        }
        if row.equality_class_match == Some(false) {
            self.equality_class_mismatches += 1;
        }
        // NaN slack never becomes the minimum
        if self.min_slack.is_none_or(|m| row.slack < m) {
            self.min_slack = Some(row.slack);
            self.argmin_graph6 = Some(row.graph6.clone());
        }
    }

    /// Folds in the aggregate of a later part of the stream.
    fn absorb(&mut self, later: &BoundAggregate) {
        self.evaluated += later.evaluated;
        self.skipped += later.skipped;
        self.errors += later.errors;
        self.violations += later.violations;
        self.equalities += later.equalities;
        self.tight += later.tight;
        self.disconnected_violations += later.disconnected_violations;
        self.equality_class_mismatches += later.equality_class_mismatches;
        if let Some(s) = later.min_slack {
            if self.min_slack.is_none_or(|m| s < m) {
                self.min_slack = Some(s);
                self.argmin_graph6 = later.argmin_graph6.clone();
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanMetadata {
    /// Invocation with worker-count flags removed.
    pub command: Option<String>,
    pub source: String,
    pub bounds: Vec<String>,
    pub tolerance: f64,
    pub seed: Option<u64>,
    pub graphs: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub metadata: ScanMetadata,
    pub aggregates: Vec<BoundAggregate>,
    /// Violations and error rows in stream order, or every row when requested.
    pub rows: Vec<BoundCheck>,
    pub exit_code: i32,
}

impl ScanReport {
    pub fn violations(&self) -> u64 {
        self.aggregates.iter().map(|a| a.violations).sum()
    }

    pub fn aggregate(&self, bound: &str) -> Option<&BoundAggregate> {
        self.aggregates.iter().find(|a| a.bound == bound)
    }
}

/// Exit code for a set of rows: theorem violations dominate conjecture
/// violations, which dominate evaluation errors.
pub fn exit_code_for<'a>(rows: impl IntoIterator<Item = &'a BoundCheck>) -> i32 {
    let mut code = EXIT_CLEAN;
    for r in rows {
        let c = if r.violated() {
            if r.status.is_theorem() {
                EXIT_THEOREM_VIOLATION
            } else {
                EXIT_CONJECTURE_VIOLATION
            }
        } else if r.error {
            EXIT_OPERATIONAL
        } else {
            EXIT_CLEAN
        };
        code = code.max(c);
    }
    code
}

struct Partial {
    aggregates: Vec<BoundAggregate>,
    rows: Vec<BoundCheck>,
    exit_code: i32,
}

fn scan_chunk(stream: &GraphStream, range: std::ops::Range<u64>, catalog: &Catalog, opts: &ScanOptions) -> Partial {
    let mut aggregates: Vec<BoundAggregate> = catalog
        .entries()
        .iter()
        .map(|e| BoundAggregate::new(e.id, e.status))
        .collect();
    let mut rows = Vec::new();
    let mut exit_code = EXIT_CLEAN;
    for i in range {
        let checks = catalog.check_graph(&stream.get(i), &opts.check);
        exit_code = exit_code.max(exit_code_for(&checks));
        for (agg, row) in aggregates.iter_mut().zip(checks) {
            agg.record(&row);
            if opts.all_rows || row.violated() || row.error {
                rows.push(row);
            }
        }
    }
    Partial {
        aggregates,
        rows,
        exit_code,
    }
}

/// Checks every graph of `stream` against every entry of `catalog` on `jobs`
/// worker threads. Output is identical for any worker count.
pub fn run_scan(stream: &GraphStream, catalog: &Catalog, opts: &ScanOptions) -> Result<ScanReport> {
    let jobs = opts.jobs.max(1);
    let total = stream.len();
    let ranges = stream.partition(total.div_ceil(CHUNK) as usize);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("worker pool: {e}")))?;
    let partials: Vec<Partial> = pool.install(|| {
        ranges
            .into_par_iter()
            .map(|r| scan_chunk(stream, r, catalog, opts))
            .collect()
    });

    let mut aggregates: Vec<BoundAggregate> = catalog
        .entries()
        .iter()
        .map(|e| BoundAggregate::new(e.id, e.status))
        .collect();
    let mut rows = Vec::new();
    let mut exit_code = EXIT_CLEAN;
    for p in partials {
        for (a, b) in aggregates.iter_mut().zip(&p.aggregates) {
            a.absorb(b);
        }
        rows.extend(p.rows);
        exit_code = exit_code.max(p.exit_code);
    }
    Ok(ScanReport {
        metadata: ScanMetadata {
            command: None,
            source: stream.describe(),
            bounds: catalog.ids().iter().map(|s| s.to_string()).collect(),
            tolerance: opts.check.slack_tolerance,
            seed: None,
            graphs: total,
        },
        aggregates,
        rows,
        exit_code,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgraphMode {
    /// Single-edge deletions.
    Edge,
    /// Single-edge and single-vertex deletions.
    Full,
}

impl fmt::Display for SubgraphMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgraphMode::Edge => "edge",
            SubgraphMode::Full => "full",
        })
    }
}

impl FromStr for SubgraphMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(SubgraphMode::Edge),
            "full" => Ok(SubgraphMode::Full),
            _ => Err(Error::InvalidConfig(format!("unknown subgraph mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Deletion {
    Edge(usize, usize),
    Vertex(usize),
}

/// A graph and a one-step subgraph with strictly larger `s+`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityPair {
    pub mode: SubgraphMode,
    pub graph6: String,
    pub subgraph6: String,
    pub deletion: Deletion,
    pub s_plus: f64,
    pub s_plus_subgraph: f64,
}

/// Margin by which the subgraph's `s+` must exceed the graph's.
pub const MONOTONICITY_MARGIN: f64 = 1e-9;

fn s_plus(g: &Graph) -> Result<f64> {
    Ok(spectral_sums(&spectrum(g)?, g.size())?.s_plus)
}

fn scan_graph(g: &Graph, mode: SubgraphMode) -> Result<Vec<MonotonicityPair>> {
    let base = s_plus(g)?;
    let mut out = Vec::new();
    let mut emit = |sub: Graph, deletion: Deletion| -> Result<()> {
        let s = s_plus(&sub)?;
        if s > base + MONOTONICITY_MARGIN {
            out.push(MonotonicityPair {
                mode,
                graph6: to_graph6(g),
                subgraph6: to_graph6(&sub),
                deletion,
                s_plus: base,
                s_plus_subgraph: s,
            });
        }
        Ok(())
    };
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v);
        emit(h, Deletion::Edge(u, v))?;
    }
    if mode == SubgraphMode::Full && g.order() > 1 {
        for v in 0..g.order() {
            emit(g.delete_vertex(v)?, Deletion::Vertex(v))?;
        }
    }
    Ok(out)
}

/// Every one-step deletion `H` of every streamed graph `G` with
/// `s+(H) > s+(G) + 1e-9`, in stream order.
pub fn subgraph_monotonicity_scan(
    stream: &GraphStream,
    mode: SubgraphMode,
    jobs: usize,
) -> Result<Vec<MonotonicityPair>> {
    let ranges = stream.partition(stream.len().div_ceil(CHUNK) as usize);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("worker pool: {e}")))?;
    let parts: Vec<Vec<MonotonicityPair>> = pool.install(|| {
        ranges
            .into_par_iter()
            .map(|r| {
                let mut found = Vec::new();
                for i in r {
                    found.extend(scan_graph(&stream.get(i), mode)?);
                }
                Ok(found)
            })
            .collect::<Result<_>>()
    })?;
    Ok(parts.into_iter().flatten().collect())
}
