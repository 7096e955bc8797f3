//! Structural tags used to certify equality cases.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureTag {
    CompleteBipartite,
    CompleteMultipartite,
    CompleteSplit,
    Regular,
    SemiregularBipartite,
    ConferenceSrg,
}

impl StructureTag {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureTag::CompleteBipartite => "complete_bipartite",
            StructureTag::CompleteMultipartite => "complete_multipartite",
            StructureTag::CompleteSplit => "complete_split",
            StructureTag::Regular => "regular",
            StructureTag::SemiregularBipartite => "semiregular_bipartite",
            StructureTag::ConferenceSrg => "conference_srg",
        }
    }
}

pub type StructureTags = BTreeSet<StructureTag>;

/// Parts of `g` as a complete multipartite graph, if it is one.
///
/// Non-adjacency (with every vertex related to itself) must be an equivalence
/// relation. A single part means the graph is edgeless, which is not counted.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<u64>> {
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut parts = Vec::new();
    let mut seen = 0u64;
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        let class = all & !g.neighbours(v);
        let mut rest = class;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if all & !g.neighbours(u) != class {
                return None;
            }
        }
        seen |= class;
        parts.push(class);
    }
    (parts.len() >= 2).then_some(parts)
}

fn semiregular_bipartite(g: &Graph) -> bool {
    if g.size() == 0 {
        return false;
    }
    let Some(side) = g.two_colouring() else {
        return false;
    };
    // Each component contributes a (degree on colour 0, degree on colour 1) pair;
    // components can be flipped independently.
    let uniform = |set: u64| -> Option<Option<usize>> {
        let mut deg = None;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            match deg {
                None => deg = Some(g.degree(v)),
                Some(d) if d != g.degree(v) => return None,
                _ => {}
            }
        }
        Some(deg)
    };
    let mut pairs = Vec::new();
    for comp in g.components() {
        let (Some(a), Some(b)) = (uniform(comp & !side), uniform(comp & side)) else {
            return false;
        };
        pairs.push((a, b));
    }
    let fits = |want: (usize, usize), have: (Option<usize>, Option<usize>)| {
        let ok = |w: usize, h: Option<usize>| h.is_none_or(|h| h == w);
        (ok(want.0, have.0) && ok(want.1, have.1)) || (ok(want.0, have.1) && ok(want.1, have.0))
    };
    let (a0, b0) = pairs[0];
    let candidates = [(a0, b0), (b0, a0)];
    candidates.iter().any(|&(a, b)| {
        let (Some(a), Some(b)) = (a, b) else {
            return false;
        };
        pairs.iter().all(|&p| fits((a, b), p))
    })
}

fn conference_srg(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 || n % 4 != 1 {
        return false;
    }
    let t = (n - 1) / 4;
    if (0..n).any(|v| g.degree(v) != 2 * t) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            let common = (g.neighbours(u) & g.neighbours(v)).count_ones() as usize;
            let want = if g.has_edge(u, v) { t - 1 } else { t };
            if common != want {
                return false;
            }
        }
    }
    true
}

pub fn classify_structure(g: &Graph) -> StructureTags {
    let mut tags = StructureTags::new();
    if let Some(parts) = multipartite_parts(g) {
        tags.insert(StructureTag::CompleteMultipartite);
        if parts.len() == 2 {
            tags.insert(StructureTag::CompleteBipartite);
        }
        if parts.iter().filter(|p| p.count_ones() > 1).count() <= 1 {
            tags.insert(StructureTag::CompleteSplit);
        }
    }
    let degrees = g.degrees();
    if degrees.iter().all(|&d| d == degrees[0]) {
        tags.insert(StructureTag::Regular);
    }
    if semiregular_bipartite(g) {
        tags.insert(StructureTag::SemiregularBipartite);
    }
    if conference_srg(g) {
        tags.insert(StructureTag::ConferenceSrg);
    }
    tags
}
