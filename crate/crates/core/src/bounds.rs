//! Catalog of spectral, Randić and chromatic bounds, each evaluable on one graph
//! (and its complement, for Nordhaus-Gaddum entries).
//!
//! Every entry is written as `lhs <= rhs` (upper), `lhs >= rhs` (lower) or
//! `lower <= lhs <= upper` (two-sided), where `lhs` is the graph quantity.
//! Slack is positive when the bound holds; two-sided entries report the side
//! with the smaller slack.

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{collect_pair, InvariantOptions, InvariantSet};
use crate::structure::StructureTag;

/// Default slack tolerance: a bound holds when `slack >= -1e-8`.
pub const SLACK_TOLERANCE: f64 = 1e-8;
/// `|slack|` at or below this counts as equality.
pub const EQUALITY_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Theorem,
    Conjecture,
    /// Proved only under an open conjecture; a violation refutes that conjecture.
    ConjectureDependent,
}

impl Status {
    pub fn is_theorem(self) -> bool {
        self == Status::Theorem
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementKind {
    Upper { strict: bool },
    Lower { strict: bool },
    TwoSided { lower_strict: bool, upper_strict: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

/// Evaluated sides of a bound: the graph quantity and its thresholds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sides {
    pub value: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

impl Sides {
    fn upper(value: f64, upper: f64) -> Self {
        Sides {
            value,
            lower: None,
            upper: Some(upper),
        }
    }

    fn lower(value: f64, lower: f64) -> Self {
        Sides {
            value,
            lower: Some(lower),
            upper: None,
        }
    }

    fn between(lower: f64, value: f64, upper: f64) -> Self {
        Sides {
            value,
            lower: Some(lower),
            upper: Some(upper),
        }
    }
}

pub type Applicability = fn(&InvariantSet) -> Option<&'static str>;
pub type Evaluator = fn(&InvariantSet, Option<&InvariantSet>) -> Sides;

#[derive(Clone, Debug)]
pub struct BoundSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: StatementKind,
    pub status: Status,
    /// Needs the complement's invariants.
    pub nordhaus_gaddum: bool,
    /// Needs exact chromatic numbers.
    pub needs_chi: bool,
    /// Returns a skip reason when the bound does not apply.
    pub applies: Applicability,
    pub evaluate: Evaluator,
    /// Structure expected at equality, when the equality case is characterised.
    pub equality_class: Option<StructureTag>,
    /// Side whose proof assumes an open conjecture; rows binding there carry
    /// [`Status::ConjectureDependent`].
    pub conditional_side: Option<Side>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: String,
    pub graph6: String,
    pub status: Status,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub side: Option<Side>,
    pub holds: bool,
    pub equality: bool,
    /// Equality on a strict side.
    pub tight: bool,
    pub skipped: bool,
    pub reason: Option<String>,
    /// Evaluated on a disconnected graph.
    pub disconnected: bool,
    /// Invariant computation failed; `reason` carries the message.
    pub error: bool,
    /// For equality rows of entries with a characterised equality case: whether
    /// the graph (or, for Nordhaus-Gaddum entries, its complement) carries the
    /// expected structure tag.
    pub equality_class_match: Option<bool>,
}

impl BoundCheck {
    fn skipped(spec: &BoundSpec, graph6: &str, reason: String, error: bool) -> Self {
        BoundCheck {
            bound: spec.id.to_string(),
            graph6: graph6.to_string(),
            status: spec.status,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            side: None,
            holds: true,
            equality: false,
            tight: false,
            skipped: true,
            reason: Some(reason),
            disconnected: false,
            error,
            equality_class_match: None,
        }
    }

    /// Evaluated and failed at the slack tolerance.
    pub fn violated(&self) -> bool {
        !self.skipped && !self.holds
    }

    /// Short annotation of an evaluated row (binding side, tightness, connectivity).
    pub fn annotation(&self) -> String {
        if let Some(r) = &self.reason {
            return r.clone();
        }
        let mut parts = Vec::new();
        if let Some(side) = self.side {
            parts.push(match side {
                Side::Lower => "side=lower",
                Side::Upper => "side=upper",
            });
        }
        if self.tight {
            parts.push("tight");
        }
        if self.disconnected {
            parts.push("disconnected");
        }
        parts.join(";")
    }
}

/// Additive correction in the conjectured maximum of `mu(G) + mu(complement)`.
pub fn f_correction(n: usize) -> f64 {
    let nf = n as f64;
    let surd = |k: f64| ((k * k + 8.0).sqrt() - k) / 6.0;
    match n % 3 {
        2 => 0.0,
        1 => surd(3.0 * nf - 2.0),
        _ => surd(3.0 * nf - 1.0),
    }
}

/// Conjectured maximum `4n/3 - 5/3 + f(n)`.
pub fn conjectured_ng_ceiling(n: usize) -> f64 {
    4.0 * n as f64 / 3.0 - 5.0 / 3.0 + f_correction(n)
}

fn stanley_rhs(m: usize) -> f64 {
    ((8.0 * m as f64 + 1.0).sqrt() - 1.0) / 2.0
}

fn nf(inv: &InvariantSet) -> f64 {
    inv.n as f64
}

fn chi(inv: &InvariantSet) -> f64 {
    inv.chi.expect("applicability gates on chi") as f64
}

fn chi_bar(inv: &InvariantSet) -> f64 {
    inv.chi_complement.expect("applicability gates on chi") as f64
}

fn comp(c: Option<&InvariantSet>) -> &InvariantSet {
    c.expect("complement presence checked before evaluation")
}

fn always(_: &InvariantSet) -> Option<&'static str> {
    None
}

fn has_edge(inv: &InvariantSet) -> Option<&'static str> {
    (inv.m == 0).then_some("edgeless graph")
}

fn connected(inv: &InvariantSet) -> Option<&'static str> {
    (!inv.connected).then_some("graph not connected")
}

fn connected_with_edge(inv: &InvariantSet) -> Option<&'static str> {
    connected(inv).or_else(|| has_edge(inv))
}

fn connected_order_3(inv: &InvariantSet) -> Option<&'static str> {
    connected(inv).or_else(|| (inv.n < 3).then_some("order below 3"))
}

fn order_2(inv: &InvariantSet) -> Option<&'static str> {
    (inv.n < 2).then_some("order below 2")
}

fn triangle_free_with_edge(inv: &InvariantSet) -> Option<&'static str> {
    (!inv.triangle_free)
        .then_some("graph has a triangle")
        .or_else(|| has_edge(inv))
}

const fn upper() -> StatementKind {
    StatementKind::Upper { strict: false }
}

const fn lower() -> StatementKind {
    StatementKind::Lower { strict: false }
}

/// The standard catalog, in reporting order.
pub fn standard_entries() -> Vec<BoundSpec> {
    use Status::*;
    let two_sided = |lower_strict, upper_strict| StatementKind::TwoSided {
        lower_strict,
        upper_strict,
    };
    vec![
        BoundSpec {
            id: "STANLEY",
            statement: "mu <= (sqrt(8m+1) - 1)/2",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: always,
            evaluate: |g, _| Sides::upper(g.mu_max, stanley_rhs(g.m)),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "WU_ELPHICK",
            statement: "sqrt(s+) <= (sqrt(8m+1) - 1)/2",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: always,
            evaluate: |g, _| Sides::upper(g.s_plus.sqrt(), stanley_rhs(g.m)),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "HOFFMAN",
            statement: "1 + mu/|mu_n| <= chi",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: true,
            applies: has_edge,
            evaluate: |g, _| Sides::upper(1.0 + g.mu_max / g.mu_min.abs(), chi(g)),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "ANDO_LIN",
            statement: "1 + max(s+/s-, s-/s+) <= chi",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: true,
            applies: has_edge,
            evaluate: |g, _| {
                let ratio = (g.s_plus / g.s_minus).max(g.s_minus / g.s_plus);
                Sides::upper(1.0 + ratio, chi(g))
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "CHI_SPLUS",
            statement: "s+ <= 2m(chi - 1)/chi",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: true,
            applies: has_edge,
            evaluate: |g, _| {
                let c = chi(g);
                Sides::upper(g.s_plus, 2.0 * g.m as f64 * (c - 1.0) / c)
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "MIN_S_CONJ",
            statement: "min(s+, s-) >= n - 1 for connected G",
            kind: lower(),
            status: Conjecture,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: connected,
            evaluate: |g, _| Sides::lower(g.s_plus.min(g.s_minus), nf(g) - 1.0),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "SMINUS_MAX",
            statement: "s- <= n^2/4",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: always,
            evaluate: |g, _| Sides::upper(g.s_minus, nf(g) * nf(g) / 4.0),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "NOSAL_NG",
            statement: "n - 1 <= mu(G) + mu(Gc) < sqrt(2)(n - 1)",
            kind: two_sided(false, true),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| {
                let n = nf(g);
                Sides::between(n - 1.0, g.mu_max + comp(c).mu_max, SQRT_2 * (n - 1.0))
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "THM1_NG",
            statement: "n - 1 <= sqrt(s+(G)) + sqrt(s+(Gc)) < sqrt(2) n",
            kind: two_sided(false, true),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| {
                let n = nf(g);
                let v = g.s_plus.sqrt() + comp(c).s_plus.sqrt();
                Sides::between(n - 1.0, v, SQRT_2 * n)
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "THM1_CHI_FORM",
            statement: "sqrt(s+(G)) + sqrt(s+(Gc)) <= sqrt((2 - 1/chi - 1/chi_c) n(n-1))",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: true,
            applies: always,
            evaluate: |g, c| {
                let n = nf(g);
                let v = g.s_plus.sqrt() + comp(c).s_plus.sqrt();
                let rhs = ((2.0 - 1.0 / chi(g) - 1.0 / chi_bar(g)) * n * (n - 1.0)).sqrt();
                Sides::upper(v, rhs)
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "CONJ2_F1",
            statement: "mu(G) + mu(Gc) <= 4n/3 - 5/3 + f(n)",
            kind: upper(),
            status: Conjecture,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: order_2,
            evaluate: |g, c| Sides::upper(g.mu_max + comp(c).mu_max, conjectured_ng_ceiling(g.n)),
            equality_class: Some(StructureTag::CompleteSplit),
            conditional_side: None,
        },
        BoundSpec {
            id: "CONJ3_SQRT",
            statement: "sqrt(s+(G)) + sqrt(s+(Gc)) <= 4n/3 - 5/3 + f(n)",
            kind: upper(),
            status: Conjecture,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: order_2,
            evaluate: |g, c| {
                let v = g.s_plus.sqrt() + comp(c).s_plus.sqrt();
                Sides::upper(v, conjectured_ng_ceiling(g.n))
            },
            equality_class: Some(StructureTag::CompleteSplit),
            conditional_side: None,
        },
        BoundSpec {
            id: "TERPAI",
            statement: "mu(G) + mu(Gc) <= 4n/3 - 1",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| Sides::upper(g.mu_max + comp(c).mu_max, 4.0 * nf(g) / 3.0 - 1.0),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "CSIKVARI",
            statement: "mu(G) + mu(Gc) <= (1 + sqrt(3)) n/2 - 1",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| {
                let rhs = (1.0 + 3f64.sqrt()) * nf(g) / 2.0 - 1.0;
                Sides::upper(g.mu_max + comp(c).mu_max, rhs)
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "THM_SPLUS_SUM",
            statement: "(n-1)^2/2 < s+(G) + s+(Gc) <= (n-1)^2",
            kind: two_sided(true, false),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| {
                let k = (nf(g) - 1.0).powi(2);
                Sides::between(k / 2.0, g.s_plus + comp(c).s_plus, k)
            },
            equality_class: None,
            conditional_side: Some(Side::Upper),
        },
        BoundSpec {
            id: "CONJ5_CONF",
            statement: "s+(G) + s+(Gc) >= (n-1)(3n - 1 - 2 sqrt(n))/4",
            kind: lower(),
            status: Conjecture,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| {
                let n = nf(g);
                let rhs = (n - 1.0) * (3.0 * n - 1.0 - 2.0 * n.sqrt()) / 4.0;
                Sides::lower(g.s_plus + comp(c).s_plus, rhs)
            },
            equality_class: Some(StructureTag::ConferenceSrg),
            conditional_side: None,
        },
        BoundSpec {
            id: "NY_ENERGY",
            statement: "E(G) + E(Gc) <= (n-1)(1 + sqrt(n))",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: true,
            needs_chi: false,
            applies: always,
            evaluate: |g, c| {
                let n = nf(g);
                Sides::upper(g.energy + comp(c).energy, (n - 1.0) * (1.0 + n.sqrt()))
            },
            equality_class: Some(StructureTag::ConferenceSrg),
            conditional_side: None,
        },
        BoundSpec {
            id: "FAVARON",
            statement: "|mu_n| <= R for connected G",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: connected_with_edge,
            evaluate: |g, _| Sides::upper(g.mu_min.abs(), g.randic),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "LEMMA_MR",
            statement: "m/mu <= R for connected G",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: connected_with_edge,
            evaluate: |g, _| Sides::upper(g.m as f64 / g.mu_max, g.randic),
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "THM_RANDIC",
            statement: "sqrt(s-) <= R for connected G",
            kind: upper(),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: connected_with_edge,
            evaluate: |g, _| Sides::upper(g.s_minus.sqrt(), g.randic),
            equality_class: Some(StructureTag::CompleteBipartite),
            conditional_side: None,
        },
        BoundSpec {
            id: "CONJ6_RATIO",
            statement: "2 sqrt(n-1)/(n - 3 + 2 sqrt(2)) <= sqrt(s+)/R <= 2(n-1)/n for connected G",
            kind: two_sided(false, false),
            status: Conjecture,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: connected_order_3,
            evaluate: |g, _| {
                let n = nf(g);
                let lo = 2.0 * (n - 1.0).sqrt() / (n - 3.0 + 2.0 * SQRT_2);
                Sides::between(lo, g.s_plus.sqrt() / g.randic, 2.0 * (n - 1.0) / n)
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "CONJ7_TF",
            statement: "sqrt(s+) <= R for triangle-free G",
            kind: upper(),
            status: Conjecture,
            nordhaus_gaddum: false,
            needs_chi: false,
            applies: triangle_free_with_edge,
            evaluate: |g, _| Sides::upper(g.s_plus.sqrt(), g.randic),
            equality_class: Some(StructureTag::CompleteBipartite),
            conditional_side: None,
        },
        BoundSpec {
            id: "NG_CHI_SUM",
            statement: "2 sqrt(n) <= chi + chi_c <= n + 1",
            kind: two_sided(false, false),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: true,
            applies: always,
            evaluate: |g, _| {
                let n = nf(g);
                Sides::between(2.0 * n.sqrt(), chi(g) + chi_bar(g), n + 1.0)
            },
            equality_class: None,
            conditional_side: None,
        },
        BoundSpec {
            id: "NG_CHI_PROD",
            statement: "n <= chi chi_c <= (n+1)^2/4",
            kind: two_sided(false, false),
            status: Theorem,
            nordhaus_gaddum: false,
            needs_chi: true,
            applies: always,
            evaluate: |g, _| {
                let n = nf(g);
                Sides::between(n, chi(g) * chi_bar(g), (n + 1.0).powi(2) / 4.0)
            },
            equality_class: None,
            conditional_side: None,
        },
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub invariants: InvariantOptions,
    /// A bound holds when `slack >= -slack_tolerance`. Negative values demand
    /// a margin.
    pub slack_tolerance: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            invariants: InvariantOptions::default(),
            slack_tolerance: SLACK_TOLERANCE,
        }
    }
}

/// An ordered, immutable set of bound entries with unique ids.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<BoundSpec>,
}

impl Catalog {
    pub fn standard() -> Self {
        Catalog::new(standard_entries()).expect("standard ids are unique")
    }

    pub fn new(entries: Vec<BoundSpec>) -> Result<Self> {
        for (i, e) in entries.iter().enumerate() {
            if entries[..i].iter().any(|p| p.id == e.id) {
                return Err(Error::InvalidConfig(format!("duplicate bound id {}", e.id)));
            }
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[BoundSpec] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&BoundSpec> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownBound(id.to_string()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.id).collect()
    }

    /// Restricts the catalog to `ids` (kept in catalog order). `"all"` selects
    /// everything.
    pub fn select(&self, ids: &[&str]) -> Result<Catalog> {
        if ids.contains(&"all") {
            return Ok(self.clone());
        }
        for id in ids {
            self.get(id)?;
        }
        Ok(Catalog {
            entries: self
                .entries
                .iter()
                .filter(|e| ids.contains(&e.id))
                .cloned()
                .collect(),
        })
    }

    pub fn needs_complement(&self) -> bool {
        self.entries.iter().any(|e| e.nordhaus_gaddum)
    }

    pub fn evaluate(
        &self,
        id: &str,
        inv: &InvariantSet,
        complement: Option<&InvariantSet>,
        slack_tolerance: f64,
    ) -> Result<BoundCheck> {
        evaluate_bound(self.get(id)?, inv, complement, slack_tolerance)
    }

    /// Checks every entry on `g`, in catalog order. A violation is recomputed
    /// with a tightened zero tolerance and reported only if it persists.
    pub fn check_graph(&self, g: &Graph, opts: &CheckOptions) -> Vec<BoundCheck> {
        let first = self.check_once(g, &opts.invariants, opts.slack_tolerance);
        if !first.iter().any(BoundCheck::violated) {
            return first;
        }
        let again = self.check_once(g, &opts.invariants.tightened(), opts.slack_tolerance);
        first
            .into_iter()
            .zip(again)
            .map(|(a, b)| if a.violated() { b } else { a })
            .collect()
    }

    fn check_once(&self, g: &Graph, opts: &InvariantOptions, tol: f64) -> Vec<BoundCheck> {
        match collect_pair(g, opts) {
            Ok((inv, inv_bar)) => self
                .entries
                .iter()
                .map(|spec| {
                    evaluate_bound(spec, &inv, Some(&inv_bar), tol)
                        .expect("complement supplied for every entry")
                })
                .collect(),
            Err(e) => {
                let g6 = crate::graph6::to_graph6(g);
                self.entries
                    .iter()
                    .map(|spec| BoundCheck::skipped(spec, &g6, format!("error: {e}"), true))
                    .collect()
            }
        }
    }
}

/// Evaluates one bound on one graph's invariants.
pub fn evaluate_bound(
    spec: &BoundSpec,
    inv: &InvariantSet,
    complement: Option<&InvariantSet>,
    slack_tolerance: f64,
) -> Result<BoundCheck> {
    if spec.nordhaus_gaddum && complement.is_none() {
        return Err(Error::MissingComplement(spec.id));
    }
    if let Some(reason) = (spec.applies)(inv) {
        return Ok(BoundCheck::skipped(spec, &inv.graph6, reason.to_string(), false));
    }
    if spec.needs_chi && (inv.chi.is_none() || inv.chi_complement.is_none()) {
        return Ok(BoundCheck::skipped(
            spec,
            &inv.graph6,
            "exact chromatic number capped".to_string(),
            false,
        ));
    }

    let sides = (spec.evaluate)(inv, complement);
    let lower = sides.lower.map(|t| (Side::Lower, t, sides.value - t));
    let upper = sides.upper.map(|t| (Side::Upper, t, t - sides.value));
    let (side, rhs, slack) = match (lower, upper) {
        // ties go to the strict side so tightness is reported
        (Some(l), Some(u)) => {
            let upper_wins = match spec.kind {
                StatementKind::TwoSided { upper_strict, .. } => u.2 < l.2 || (u.2 == l.2 && upper_strict),
                _ => u.2 < l.2,
            };
            if upper_wins {
                u
            } else {
                l
            }
        }
        (Some(l), None) => l,
        (None, Some(u)) => u,
        (None, None) => unreachable!("bound {} has no threshold", spec.id),
    };
    let strict = match (spec.kind, side) {
        (StatementKind::Upper { strict }, _) | (StatementKind::Lower { strict }, _) => strict,
        (StatementKind::TwoSided { lower_strict, .. }, Side::Lower) => lower_strict,
        (StatementKind::TwoSided { upper_strict, .. }, Side::Upper) => upper_strict,
    };
    // NaN slack (0/0 and the like) counts as a failure
    let holds = slack >= -slack_tolerance;
    let equality = holds && slack.abs() <= EQUALITY_TOLERANCE;
    let equality_class_match = spec.equality_class.filter(|_| equality).map(|tag| {
        inv.structure.contains(&tag)
            || (spec.nordhaus_gaddum && complement.is_some_and(|c| c.structure.contains(&tag)))
    });
    let status = if spec.conditional_side == Some(side) {
        Status::ConjectureDependent
    } else {
        spec.status
    };
    Ok(BoundCheck {
        bound: spec.id.to_string(),
        graph6: inv.graph6.clone(),
        status,
        lhs: sides.value,
        rhs,
        slack,
        side: matches!(spec.kind, StatementKind::TwoSided { .. }).then_some(side),
        holds,
        equality,
        tight: strict && equality,
        skipped: false,
        reason: None,
        disconnected: !inv.connected,
        error: false,
        equality_class_match,
    })
}

/// Checks `g` against the bounds in `ids` of the standard catalog.
pub fn check_graph(g: &Graph, ids: &[&str], opts: &CheckOptions) -> Result<Vec<BoundCheck>> {
    Ok(Catalog::standard().select(ids)?.check_graph(g, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};
    use crate::graph6::parse_graph6;
    use crate::invariants::collect_invariants;
    use crate::structure::classify_structure;
    use proptest::prelude::*;

    fn fam(spec: FamilySpec) -> Graph {
        make_family(&spec).unwrap()
    }

    fn one(g: &Graph, id: &str) -> BoundCheck {
        let mut rows = check_graph(g, &[id], &CheckOptions::default()).unwrap();
        assert_eq!(rows.len(), 1);
        rows.pop().unwrap()
    }

    #[test]
    fn f_correction_values() {
        assert_eq!(f_correction(5), 0.0);
        let f7 = (369f64.sqrt() - 19.0) / 6.0;
        assert!((f_correction(7) - f7).abs() < 1e-15);
        assert!((f_correction(7) - 0.034895).abs() < 1e-6);
        let f6 = (297f64.sqrt() - 17.0) / 6.0;
        assert!((f_correction(6) - f6).abs() < 1e-15);
        assert!((f_correction(6) - 0.038948).abs() < 1e-6);
        assert_eq!(conjectured_ng_ceiling(5), 5.0);
        assert!((conjectured_ng_ceiling(8) - 9.0).abs() < 1e-14);
    }

    #[test]
    fn catalog_shape() {
        let c = Catalog::standard();
        assert_eq!(c.entries().len(), 24);
        let mut ids = c.ids();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 24);
        assert!(c.get("NOPE").is_err());
        assert!(c.select(&["ANDO_LIN", "NOPE"]).is_err());
        assert_eq!(c.select(&["THM_RANDIC", "STANLEY"]).unwrap().ids(), vec!["STANLEY", "THM_RANDIC"]);
    }

    #[test]
    fn ando_lin_on_c5() {
        let row = one(&fam(FamilySpec::Cycle { n: 5 }), "ANDO_LIN");
        let r5 = 5f64.sqrt();
        assert!((row.lhs - (1.0 + (3.0 + r5) / (7.0 - r5))).abs() < 1e-12);
        assert!((row.lhs - 2.099106).abs() < 1e-6);
        assert_eq!(row.rhs, 3.0);
        assert!(row.holds && !row.equality);
    }

    #[test]
    fn randic_equality_on_k23() {
        let g = fam(FamilySpec::CompleteBipartite { a: 2, b: 3 });
        let row = one(&g, "THM_RANDIC");
        assert!((row.lhs - 6f64.sqrt()).abs() < 1e-12);
        assert!((row.rhs - 6f64.sqrt()).abs() < 1e-12);
        assert!(row.equality);
        assert!(classify_structure(&g).contains(&StructureTag::CompleteBipartite));
        assert_eq!(row.equality_class_match, Some(true));
    }

    #[test]
    fn wu_elphick_equality_on_k4() {
        let row = one(&Graph::complete(4).unwrap(), "WU_ELPHICK");
        assert!((row.lhs - 3.0).abs() < 1e-12 && (row.rhs - 3.0).abs() < 1e-15);
        assert!(row.equality);
    }

    #[test]
    fn conj3_equality_on_complete_split() {
        let row = one(&fam(FamilySpec::CompleteSplit { n: 5, alpha: 3 }), "CONJ3_SQRT");
        assert!((row.lhs - 5.0).abs() < 1e-12 && row.rhs == 5.0);
        assert!(row.equality);
    }

    #[test]
    fn k4_all_bounds() {
        let rows = check_graph(&Graph::complete(4).unwrap(), &["all"], &Default::default()).unwrap();
        assert_eq!(rows.len(), 24);
        assert!(rows.iter().all(|r| !r.violated()));
        let ids: Vec<_> = rows.iter().map(|r| r.bound.as_str()).collect();
        assert_eq!(ids, Catalog::standard().ids());
    }

    #[test]
    fn empty_graph_gating() {
        let rows = check_graph(&Graph::empty(4).unwrap(), &["all"], &Default::default()).unwrap();
        let skipped: Vec<_> = rows.iter().filter(|r| r.skipped).map(|r| r.bound.as_str()).collect();
        assert_eq!(
            skipped,
            vec![
                "HOFFMAN",
                "ANDO_LIN",
                "CHI_SPLUS",
                "MIN_S_CONJ",
                "FAVARON",
                "LEMMA_MR",
                "THM_RANDIC",
                "CONJ6_RATIO",
                "CONJ7_TF"
            ]
        );
        assert!(rows.iter().all(|r| !r.violated()));
        assert!(rows.iter().filter(|r| r.skipped).all(|r| r.reason.is_some()));
    }

    #[test]
    fn paley13_conference_equalities() {
        let rows = check_graph(
            &fam(FamilySpec::Paley { p: 13 }),
            &["CONJ5_CONF", "NY_ENERGY"],
            &Default::default(),
        )
        .unwrap();
        for r in rows {
            assert!(r.slack.abs() <= 1e-8 && r.equality, "{r:?}");
            assert_eq!(r.equality_class_match, Some(true));
        }
    }

    #[test]
    fn missing_complement_and_unknown_id() {
        let g = Graph::complete(3).unwrap();
        let inv = collect_invariants(&g, &Default::default()).unwrap();
        let c = Catalog::standard();
        assert!(matches!(
            c.evaluate("TERPAI", &inv, None, SLACK_TOLERANCE),
            Err(Error::MissingComplement("TERPAI"))
        ));
        assert!(c.evaluate("STANLEY", &inv, None, SLACK_TOLERANCE).is_ok());
        assert!(matches!(
            c.evaluate("XYZ", &inv, None, SLACK_TOLERANCE),
            Err(Error::UnknownBound(_))
        ));
    }

    #[test]
    fn chi_capped_entries_are_skipped() {
        let rows = check_graph(&fam(FamilySpec::Paley { p: 17 }), &["all"], &Default::default()).unwrap();
        for r in rows {
            let spec = Catalog::standard().get(&r.bound).unwrap().clone();
            if spec.needs_chi {
                assert!(r.skipped);
                assert_eq!(r.reason.as_deref(), Some("exact chromatic number capped"));
            } else {
                assert!(r.holds, "{r:?}");
                assert_eq!(r.skipped, r.bound == "CONJ7_TF");
            }
        }
    }

    #[test]
    fn strict_side_equality_is_tight() {
        // single vertex: mu sum 0 against sqrt(2)(n-1) = 0
        let row = one(&Graph::empty(1).unwrap(), "NOSAL_NG");
        assert!(row.holds && row.tight);
        assert_eq!(row.side, Some(Side::Upper));
    }

    #[test]
    fn splus_sum_upper_side_is_conditional() {
        let upper = one(&Graph::complete(5).unwrap(), "THM_SPLUS_SUM");
        assert_eq!((upper.side, upper.status), (Some(Side::Upper), Status::ConjectureDependent));
        assert!(upper.equality);
        let lower = one(&fam(FamilySpec::Paley { p: 13 }), "THM_SPLUS_SUM");
        assert_eq!((lower.side, lower.status), (Some(Side::Lower), Status::Theorem));
    }

    #[test]
    fn negative_tolerance_demands_margin() {
        let g = Graph::complete(4).unwrap();
        let opts = CheckOptions {
            slack_tolerance: -0.1,
            ..Default::default()
        };
        let rows = check_graph(&g, &["WU_ELPHICK"], &opts).unwrap();
        assert!(rows[0].violated());
    }

    #[test]
    fn conj6_equality_sides() {
        let p = one(&fam(FamilySpec::Path { n: 6 }), "CONJ6_RATIO");
        assert!(p.equality && p.side == Some(Side::Lower));
        let k = one(&Graph::complete(6).unwrap(), "CONJ6_RATIO");
        assert!(k.equality && k.side == Some(Side::Upper));
        assert!(one(&Graph::complete(2).unwrap(), "CONJ6_RATIO").skipped);
    }

    #[test]
    fn conj7_flags_disconnected() {
        let g = parse_graph6("Ch").unwrap().complement().complement();
        assert!(!one(&g, "CONJ7_TF").disconnected);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let row = one(&two_k2, "CONJ7_TF");
        assert!(row.disconnected && row.holds && !row.equality);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..=10).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn wu_elphick_dominates_stanley(g in arb_graph()) {
            prop_assume!(g.size() >= 1);
            let rows = check_graph(&g, &["STANLEY", "WU_ELPHICK"], &Default::default()).unwrap();
            prop_assert!(rows[1].slack <= rows[0].slack + 1e-12);
        }

        #[test]
        fn randic_theorem_implies_favaron(g in arb_graph()) {
            let inv = collect_invariants(&g, &Default::default()).unwrap();
            prop_assume!(inv.connected && inv.m >= 1);
            prop_assert!(inv.mu_min.abs() <= inv.s_minus.sqrt() + 1e-12);
            let rows = check_graph(&g, &["FAVARON", "THM_RANDIC"], &Default::default()).unwrap();
            prop_assert!(!rows[1].holds || rows[0].holds);
        }

        #[test]
        fn am_gm_chain(g in arb_graph()) {
            let inv = collect_invariants(&g, &Default::default()).unwrap();
            let mid = (2.0 * (inv.mu_max.powi(2) + inv.s_minus)).sqrt();
            prop_assert!(inv.mu_max + inv.s_minus.sqrt() <= mid + 1e-8);
            prop_assert!(mid <= 2.0 * (inv.m as f64).sqrt() + 1e-8);
        }

        #[test]
        fn terpai_slack_below_csikvari(g in arb_graph()) {
            let rows = check_graph(&g, &["TERPAI", "CSIKVARI"], &Default::default()).unwrap();
            prop_assert!(rows[0].slack <= rows[1].slack + 1e-12);
        }
    }

    #[test]
    fn terpai_below_csikvari_closed_form() {
        for n in 1..=64 {
            let nf = n as f64;
            assert!(4.0 * nf / 3.0 - 1.0 <= (1.0 + 3f64.sqrt()) * nf / 2.0 - 1.0);
        }
    }
}
