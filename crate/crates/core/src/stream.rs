//! Indexed graph sources. Every source can be split into disjoint index ranges,
//! so workers can consume it independently and results merge by index.

use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{pair_count, Graph};
use crate::graph6::parse_graph6_lines;

/// Default cap on labelled enumeration (2^28 graphs at n = 8).
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Clone, Debug)]
pub enum GraphStream {
    /// All `2^(n(n-1)/2)` labelled graphs on `n` vertices; graph `k` has the
    /// edge at upper-triangle position `p` iff bit `p` of `k` is set.
    Labeled { n: usize },
    /// Graphs read from a graph6 document.
    Graph6 { origin: String, graphs: Vec<Graph> },
    /// Named family members.
    Families { specs: Vec<FamilySpec>, graphs: Vec<Graph> },
}

pub fn enumerate_labeled(n: usize) -> Result<GraphStream> {
    enumerate_labeled_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_labeled_capped(n: usize, cap: usize) -> Result<GraphStream> {
    if n > cap || pair_count(n) >= 64 {
        return Err(Error::EnumerationCap { n, cap });
    }
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    Ok(GraphStream::Labeled { n })
}

impl GraphStream {
    pub fn from_graph6_text(text: &str, origin: &str) -> Result<Self> {
        Ok(GraphStream::Graph6 {
            origin: origin.to_string(),
            graphs: parse_graph6_lines(text, origin)?,
        })
    }

    pub fn from_graph6_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_graph6_text(&text, &path.display().to_string())
    }

    pub fn from_reader(mut reader: impl Read, origin: &str) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        Self::from_graph6_text(&text, origin)
    }

    pub fn from_families(specs: Vec<FamilySpec>) -> Result<Self> {
        let graphs = specs.iter().map(FamilySpec::build).collect::<Result<_>>()?;
        Ok(GraphStream::Families { specs, graphs })
    }

    pub fn len(&self) -> u64 {
        match self {
            GraphStream::Labeled { n } => 1u64 << pair_count(*n),
            GraphStream::Graph6 { graphs, .. } | GraphStream::Families { graphs, .. } => {
                graphs.len() as u64
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Graph at position `index`.
    pub fn get(&self, index: u64) -> Graph {
        match self {
            GraphStream::Labeled { n } => {
                Graph::from_triangle_bits(*n, index).expect("labelled stream order checked")
            }
            GraphStream::Graph6 { graphs, .. } | GraphStream::Families { graphs, .. } => {
                graphs[index as usize].clone()
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GraphStream::Labeled { n } => format!("labeled(n={n})"),
            GraphStream::Graph6 { origin, .. } => format!("graph6({origin})"),
            GraphStream::Families { specs, .. } => {
                let names: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
                format!("families({})", names.join(";"))
            }
        }
    }

    /// Splits `0..len` into at most `parts` contiguous, disjoint ranges.
    pub fn partition(&self, parts: usize) -> Vec<std::ops::Range<u64>> {
        let len = self.len();
        let parts = (parts.max(1) as u64).min(len.max(1));
        let chunk = len.div_ceil(parts);
        (0..parts)
            .map(|k| (k * chunk).min(len)..((k + 1) * chunk).min(len))
            .filter(|r| !r.is_empty())
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}
