//! Named graph families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// Independent set of size `alpha` joined to a clique on the other `n - alpha`.
    CompleteSplit { n: usize, alpha: usize },
    CompleteMultipartite { parts: Vec<usize> },
    /// Quadratic-residue graph on a prime `p = 1 (mod 4)`.
    Paley { p: usize },
    Star { n: usize },
    /// Clique on `r` vertices joined to `s` independent vertices.
    JoinCliqueEmpty { r: usize, s: usize },
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Empty { .. } => "empty",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::CompleteSplit { .. } => "complete_split",
            FamilySpec::CompleteMultipartite { .. } => "complete_multipartite",
            FamilySpec::Paley { .. } => "paley",
            FamilySpec::Star { .. } => "star",
            FamilySpec::JoinCliqueEmpty { .. } => "join_clique_empty",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Complete { n }
            | FamilySpec::Empty { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n } => vec![*n],
            FamilySpec::CompleteBipartite { a, b } => vec![*a, *b],
            FamilySpec::CompleteSplit { n, alpha } => vec![*n, *alpha],
            FamilySpec::CompleteMultipartite { parts } => parts.clone(),
            FamilySpec::Paley { p } => vec![*p],
            FamilySpec::JoinCliqueEmpty { r, s } => vec![*r, *s],
        }
    }

    /// Builds a spec from a kind name and its integer parameters.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("{kind} does not take parameters {params:?}"));
        let one = || match params {
            [x] => Ok(*x),
            _ => Err(bad()),
        };
        let two = || match params {
            [x, y] => Ok((*x, *y)),
            _ => Err(bad()),
        };
        let spec = match kind {
            "complete" => FamilySpec::Complete { n: one()? },
            "empty" => FamilySpec::Empty { n: one()? },
            "path" => FamilySpec::Path { n: one()? },
            "cycle" => FamilySpec::Cycle { n: one()? },
            "star" => FamilySpec::Star { n: one()? },
            "paley" => FamilySpec::Paley { p: one()? },
            "complete_bipartite" => {
                let (a, b) = two()?;
                FamilySpec::CompleteBipartite { a, b }
            }
            "complete_split" => {
                let (n, alpha) = two()?;
                FamilySpec::CompleteSplit { n, alpha }
            }
            "join_clique_empty" => {
                let (r, s) = two()?;
                FamilySpec::JoinCliqueEmpty { r, s }
            }
            "complete_multipartite" => {
                if params.is_empty() {
                    return Err(bad());
                }
                FamilySpec::CompleteMultipartite {
                    parts: params.to_vec(),
                }
            }
            other => return Err(Error::InvalidFamily(format!("unknown family kind {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidFamily(msg));
        if self.params().contains(&0) {
            return invalid(format!("{}: parameters must be positive", self));
        }
        match self {
            FamilySpec::Cycle { n } if *n < 3 => invalid(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::CompleteSplit { n, alpha } if *alpha >= *n => {
                invalid(format!("complete_split needs 1 <= alpha <= n - 1, got n={n} alpha={alpha}"))
            }
            FamilySpec::Paley { p } if !is_prime(*p) || p % 4 != 1 => {
                invalid(format!("paley needs a prime p = 1 (mod 4), got {p}"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        make_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.kind(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `kind(a,b,...)` or `kind:a,b,...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match (s.find('('), s.find(':')) {
            (Some(open), _) if s.ends_with(')') => (&s[..open], &s[open + 1..s.len() - 1]),
            (None, Some(colon)) => (&s[..colon], &s[colon + 1..]),
            _ => (s, ""),
        };
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidFamily(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::from_parts(kind.trim(), &params)
    }
}

pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Nonzero quadratic residues modulo a prime `p`, as a membership table.
pub fn quadratic_residues(p: usize) -> Vec<bool> {
    let mut qr = vec![false; p];
    for x in 1..p {
        qr[x * x % p] = true;
    }
    qr
}

fn join_parts(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::complete(n)?;
    let mut start = 0;
    for &size in parts {
        for u in start..start + size {
            for v in u + 1..start + size {
                g.remove_edge(u, v);
            }
        }
        start += size;
    }
    Ok(g)
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Complete { n } => Graph::complete(n),
        FamilySpec::Empty { n } => Graph::empty(n),
        FamilySpec::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle { n } => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::CompleteBipartite { a, b } => join_parts(&[a, b]),
        FamilySpec::CompleteMultipartite { ref parts } => join_parts(parts),
        // independent set on the first alpha vertices, clique on the rest
        FamilySpec::CompleteSplit { n, alpha } => {
            let mut parts = vec![alpha];
            parts.extend(std::iter::repeat_n(1, n - alpha));
            join_parts(&parts)
        }
        FamilySpec::JoinCliqueEmpty { r, s } => {
            let mut parts = vec![s];
            parts.extend(std::iter::repeat_n(1, r));
            join_parts(&parts)
        }
        FamilySpec::Star { n } => {
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Paley { p } => {
            let qr = quadratic_residues(p);
            let mut g = Graph::empty(p)?;
            for i in 0..p {
                for j in i + 1..p {
                    if qr[j - i] {
                        g.add_edge(i, j);
                    }
                }
            }
            Ok(g)
        }
    }
}
