//! Per-graph invariant bundle consumed by the bound catalog.

use serde::{Deserialize, Serialize};

use crate::chromatic::{chromatic_number, DEFAULT_CHROMATIC_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::inertia::Inertia;
use crate::spectral::{default_zero_tolerance, eigen_decompose, spectral_sums};
use crate::structure::{classify_structure, StructureTags};

/// Randić index: sum over edges of `1 / sqrt(d_i d_j)`. Isolated vertices lie
/// on no edge and contribute nothing.
pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(i, j)| 1.0 / ((g.degree(i) * g.degree(j)) as f64).sqrt())
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantOptions {
    /// Zero-classification tolerance; `None` uses `1e-8 * max(1, max degree)`.
    pub zero_tolerance: Option<f64>,
    /// Factor applied to the zero tolerance (below 1 to tighten).
    pub tolerance_scale: f64,
    pub chromatic_cap: usize,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions {
            zero_tolerance: None,
            tolerance_scale: 1.0,
            chromatic_cap: DEFAULT_CHROMATIC_CAP,
        }
    }
}

impl InvariantOptions {
    pub fn tightened(&self) -> Self {
        InvariantOptions {
            tolerance_scale: self.tolerance_scale * 1e-2,
            ..*self
        }
    }

    fn zero_tolerance_for(&self, g: &Graph) -> f64 {
        self.zero_tolerance.unwrap_or_else(|| default_zero_tolerance(g)) * self.tolerance_scale
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantSet {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    pub energy: f64,
    pub mu_max: f64,
    pub mu_min: f64,
    pub randic: f64,
    /// `None` when the exact computation is capped.
    pub chi: Option<usize>,
    pub chi_complement: Option<usize>,
    pub connected: bool,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub inertia: Inertia,
    pub structure: StructureTags,
}

fn capped_chi(g: &Graph, cap: usize) -> Result<Option<usize>> {
    match chromatic_number(g, cap) {
        Ok(chi) => Ok(Some(chi)),
        Err(Error::ChromaticCapped { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn assemble(
    g: &Graph,
    opts: &InvariantOptions,
    chi: Option<usize>,
    chi_complement: Option<usize>,
) -> Result<InvariantSet> {
    let props = g.basic_props();
    let spec = eigen_decompose(g, opts.zero_tolerance_for(g))?;
    let sums = spectral_sums(&spec, props.m)?;
    Ok(InvariantSet {
        graph6: to_graph6(g),
        n: g.order(),
        m: props.m,
        s_plus: sums.s_plus,
        s_minus: sums.s_minus,
        energy: sums.energy,
        mu_max: sums.mu_max,
        mu_min: sums.mu_min,
        randic: randic_index(g),
        chi,
        chi_complement,
        connected: props.connected,
        triangle_free: props.triangle_free,
        bipartite: props.bipartite,
        inertia: spec.inertia,
        structure: classify_structure(g),
    })
}

pub fn collect_invariants(g: &Graph, opts: &InvariantOptions) -> Result<InvariantSet> {
    let chi = capped_chi(g, opts.chromatic_cap)?;
    let chi_bar = capped_chi(&g.complement(), opts.chromatic_cap)?;
    assemble(g, opts, chi, chi_bar)
}

/// Invariants of `g` and of its complement, computing each chromatic number once.
pub fn collect_pair(g: &Graph, opts: &InvariantOptions) -> Result<(InvariantSet, InvariantSet)> {
    let gbar = g.complement();
    let chi = capped_chi(g, opts.chromatic_cap)?;
    let chi_bar = capped_chi(&gbar, opts.chromatic_cap)?;
    Ok((
        assemble(g, opts, chi, chi_bar)?,
        assemble(&gbar, opts, chi_bar, chi)?,
    ))
}
