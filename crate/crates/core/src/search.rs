//! Seeded hill-climbing search over graphs of fixed order.
//!
//! Each restart climbs from its own start graph through a schedule of
//! neighbourhoods, accepting the first strictly improving neighbour and
//! allowing a bounded number of sideways moves on plateaus. Restarts run in
//! parallel and each owns a ChaCha stream derived from `(seed, restart)`, so
//! results do not depend on the thread count.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{evaluate_bound, BoundSpec, Catalog, SLACK_TOLERANCE};
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec};
use crate::graph::{pair_count, Graph};
use crate::graph6::to_graph6;
use crate::invariants::{collect_pair, InvariantOptions};
use crate::spectral::{adjacency_eigenvalues, spectral_sums, spectrum};

/// Minimum gain for a move to count as an improvement.
pub const IMPROVEMENT_EPS: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    /// `mu(G) + mu(complement)`
    MuNgSum,
    /// `sqrt(s+(G)) + sqrt(s+(complement))`
    SqrtSplusNgSum,
    /// `s+(G) + s+(complement)`
    SplusNgSum,
    /// `-(s+(G) + s+(complement))`
    NegSplusNgSum,
    /// Negated slack of a catalog bound; positive means violated.
    Violation(String),
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::MuNgSum => f.write_str("MU_NG_SUM"),
            Objective::SqrtSplusNgSum => f.write_str("SQRT_SPLUS_NG_SUM"),
            Objective::SplusNgSum => f.write_str("SPLUS_NG_SUM"),
            Objective::NegSplusNgSum => f.write_str("NEG_SPLUS_NG_SUM"),
            Objective::Violation(id) => write!(f, "VIOLATION({id})"),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    /// Accepts the ids above, plus `VIOLATION(ID)` or `VIOLATION:ID`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let obj = match s {
            "MU_NG_SUM" => Objective::MuNgSum,
            "SQRT_SPLUS_NG_SUM" => Objective::SqrtSplusNgSum,
            "SPLUS_NG_SUM" => Objective::SplusNgSum,
            "NEG_SPLUS_NG_SUM" => Objective::NegSplusNgSum,
            _ => {
                let id = s
                    .strip_prefix("VIOLATION(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("VIOLATION:"))
                    .ok_or_else(|| Error::UnknownObjective(s.to_string()))?;
                Catalog::standard().get(id)?;
                Objective::Violation(id.to_string())
            }
        };
        Ok(obj)
    }
}

impl Serialize for Objective {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Objective {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An objective ready for repeated evaluation.
#[derive(Clone, Debug)]
pub struct Scorer {
    objective: Objective,
    bound: Option<BoundSpec>,
    opts: InvariantOptions,
}

impl Scorer {
    pub fn new(objective: &Objective) -> Result<Self> {
        let bound = match objective {
            Objective::Violation(id) => Some(Catalog::standard().get(id)?.clone()),
            _ => None,
        };
        // chromatic numbers are only paid for when the bound reads them
        let chromatic_cap = match &bound {
            Some(b) if b.needs_chi => InvariantOptions::default().chromatic_cap,
            _ => 0,
        };
        Ok(Scorer {
            objective: objective.clone(),
            bound,
            opts: InvariantOptions {
                chromatic_cap,
                ..Default::default()
            },
        })
    }

    pub fn objective(&self) -> &Objective {
        &self.objective
    }

    /// Objective value of `g`. Inapplicable bounds score `-inf`.
    pub fn score(&self, g: &Graph) -> Result<f64> {
        let gbar = g.complement();
        let sqrt_splus = |h: &Graph| -> Result<f64> {
            Ok(spectral_sums(&spectrum(h)?, h.size())?.s_plus.sqrt())
        };
        let splus = |h: &Graph| -> Result<f64> { Ok(spectral_sums(&spectrum(h)?, h.size())?.s_plus) };
        Ok(match &self.objective {
            Objective::MuNgSum => adjacency_eigenvalues(g)?[0] + adjacency_eigenvalues(&gbar)?[0],
            Objective::SqrtSplusNgSum => sqrt_splus(g)? + sqrt_splus(&gbar)?,
            Objective::SplusNgSum => splus(g)? + splus(&gbar)?,
            Objective::NegSplusNgSum => -(splus(g)? + splus(&gbar)?),
            Objective::Violation(_) => {
                let bound = self.bound.as_ref().expect("set for violation objectives");
                let (inv, inv_bar) = collect_pair(g, &self.opts)?;
                let row = evaluate_bound(bound, &inv, Some(&inv_bar), SLACK_TOLERANCE)?;
                if row.skipped {
                    f64::NEG_INFINITY
                } else {
                    -row.slack
                }
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Neighbourhood {
    EdgeToggle,
    /// Remove one edge and add one non-edge.
    EdgeSwap,
    DoubleToggle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    pub seed: u64,
    pub restarts: usize,
    pub steps: usize,
    /// Sideways moves allowed per restart.
    pub plateau: usize,
    pub schedule: Vec<Neighbourhood>,
    /// Neighbours sampled per step from each of the swap and double-toggle
    /// neighbourhoods, as a multiple of `n(n-1)/2`.
    pub sample_factor: usize,
}

impl SearchConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        SearchConfig {
            n,
            seed,
            restarts: 8,
            steps: 500,
            plateau: 50,
            schedule: vec![
                Neighbourhood::EdgeToggle,
                Neighbourhood::EdgeSwap,
                Neighbourhood::DoubleToggle,
            ],
            sample_factor: 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(4..=64).contains(&self.n) {
            return Err(Error::InvalidConfig(format!("search order {} outside 4..=64", self.n)));
        }
        if self.restarts == 0 || self.steps == 0 || self.plateau == 0 || self.sample_factor == 0 {
            return Err(Error::InvalidConfig("search budgets must be positive".into()));
        }
        if self.schedule.is_empty() {
            return Err(Error::InvalidConfig("empty neighbourhood schedule".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub restart: usize,
    pub step: usize,
    pub neighbourhood: Option<Neighbourhood>,
    pub value: f64,
    pub graph6: String,
}

/// Accepted edge swaps and how `sqrt(s+(G)) + sqrt(s+(complement))` moved
/// along them.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct KelmansProbe {
    pub swaps_accepted: usize,
    pub decreases: usize,
    /// Up to five `(before, after)` graph6 pairs where the sum decreased.
    pub examples: Vec<(String, String)>,
}

impl KelmansProbe {
    const MAX_EXAMPLES: usize = 5;

    fn merge(&mut self, other: &KelmansProbe) {
        self.swaps_accepted += other.swaps_accepted;
        self.decreases += other.decreases;
        for e in &other.examples {
            if self.examples.len() < Self::MAX_EXAMPLES {
                self.examples.push(e.clone());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub objective: Objective,
    pub n: usize,
    pub seed: u64,
    pub restarts: usize,
    pub best_graph6: String,
    pub best_value: f64,
    /// Best value among the start graphs.
    pub seeded_value: f64,
    /// Some restart used its whole step budget without reaching a local optimum.
    pub exhausted: bool,
    /// Improving steps of the winning restart, start graph first.
    pub trace: Vec<TraceStep>,
    pub kelmans: KelmansProbe,
}

/// Complete split graph `CS(n, alpha)` maximising `obj`; ties go to the
/// smaller `alpha`.
pub fn best_complete_split(obj: &Objective, n: usize) -> Result<(usize, f64)> {
    if n < 3 {
        return Err(Error::InvalidConfig(format!("complete split scan needs n >= 3, got {n}")));
    }
    let scorer = Scorer::new(obj)?;
    let mut best: Option<(usize, f64)> = None;
    for alpha in 1..n {
        let v = scorer.score(&make_family(&FamilySpec::CompleteSplit { n, alpha })?)?;
        if best.is_none_or(|(_, b)| v > b + 1e-9) {
            best = Some((alpha, v));
        }
    }
    Ok(best.expect("n >= 3 gives at least two candidates"))
}

#[derive(Clone, Copy)]
enum Move {
    Toggle(usize, usize),
    Swap((usize, usize), (usize, usize)),
    Double((usize, usize), (usize, usize)),
}

impl Move {
    fn apply(self, g: &mut Graph) {
        match self {
            Move::Toggle(u, v) => g.toggle_edge(u, v),
            Move::Swap((a, b), (c, d)) | Move::Double((a, b), (c, d)) => {
                g.toggle_edge(a, b);
                g.toggle_edge(c, d);
            }
        }
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("validated order");
    for (i, j) in all_pairs(n) {
        if rng.gen_bool(0.5) {
            g.add_edge(i, j);
        }
    }
    g
}

struct RestartOutcome {
    best: Graph,
    value: f64,
    start_value: f64,
    exhausted: bool,
    trace: Vec<TraceStep>,
    kelmans: KelmansProbe,
}

fn moves(
    kind: Neighbourhood,
    g: &Graph,
    pairs: &[(usize, usize)],
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Move> {
    match kind {
        Neighbourhood::EdgeToggle => {
            let mut out: Vec<Move> = pairs.iter().map(|&(u, v)| Move::Toggle(u, v)).collect();
            out.shuffle(rng);
            out
        }
        Neighbourhood::EdgeSwap => {
            let edges = g.edges();
            let non_edges = g.non_edges();
            if edges.is_empty() || non_edges.is_empty() {
                return Vec::new();
            }
            let total = edges.len() * non_edges.len();
            if total <= samples {
                let mut out: Vec<Move> = edges
                    .iter()
                    .flat_map(|&e| non_edges.iter().map(move |&f| Move::Swap(e, f)))
                    .collect();
                out.shuffle(rng);
                out
            } else {
                (0..samples)
                    .map(|_| {
                        let e = edges[rng.gen_range(0..edges.len())];
                        let f = non_edges[rng.gen_range(0..non_edges.len())];
                        Move::Swap(e, f)
                    })
                    .collect()
            }
        }
        Neighbourhood::DoubleToggle => (0..samples)
            .map(|_| {
                let a = rng.gen_range(0..pairs.len());
                let mut b = rng.gen_range(0..pairs.len() - 1);
                if b >= a {
                    b += 1;
                }
                Move::Double(pairs[a], pairs[b])
            })
            .collect(),
    }
}

fn climb(
    scorer: &Scorer,
    probe: &Scorer,
    cfg: &SearchConfig,
    restart: usize,
    split_alpha: usize,
) -> Result<RestartOutcome> {
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);

    let mut g = if restart == 0 {
        make_family(&FamilySpec::CompleteSplit { n, alpha: split_alpha })?
    } else if restart.is_multiple_of(2) {
        let alpha = rng.gen_range(1..n);
        make_family(&FamilySpec::CompleteSplit { n, alpha })?
    } else {
        random_graph(n, &mut rng)
    };
    let mut value = scorer.score(&g)?;
    let start_value = value;
    let mut best = (g.clone(), value);
    let mut trace = vec![TraceStep {
        restart,
        step: 0,
        neighbourhood: None,
        value,
        graph6: to_graph6(&g),
    }];
    let mut kelmans = KelmansProbe::default();
    let pairs = all_pairs(n);
    let samples = cfg.sample_factor * pairs.len();
    let mut sideways_left = cfg.plateau;
    let mut exhausted = true;

    for step in 1..=cfg.steps {
        let mut sideways: Option<(Move, Neighbourhood)> = None;
        let mut accepted: Option<(Move, Neighbourhood, f64)> = None;
        'scan: for &kind in &cfg.schedule {
            for mv in moves(kind, &g, &pairs, samples, &mut rng) {
                let mut h = g.clone();
                mv.apply(&mut h);
                let v = scorer.score(&h)?;
                if v > value + IMPROVEMENT_EPS {
                    accepted = Some((mv, kind, v));
                    break 'scan;
                }
                if sideways.is_none() && (v - value).abs() <= IMPROVEMENT_EPS {
                    sideways = Some((mv, kind));
                }
            }
        }

        let (mv, kind, v) = match (accepted, sideways) {
            (Some(a), _) => a,
            (None, Some((mv, kind))) if sideways_left > 0 => {
                sideways_left -= 1;
                (mv, kind, value)
            }
            _ => {
                exhausted = false;
                break;
            }
        };
        let before = g.clone();
        mv.apply(&mut g);
        if kind == Neighbourhood::EdgeSwap {
            kelmans.swaps_accepted += 1;
            if probe.score(&g)? < probe.score(&before)? - IMPROVEMENT_EPS {
                kelmans.decreases += 1;
                if kelmans.examples.len() < KelmansProbe::MAX_EXAMPLES {
                    kelmans.examples.push((to_graph6(&before), to_graph6(&g)));
                }
            }
        }
        let improved = v > value + IMPROVEMENT_EPS;
        value = v;
        if improved {
            trace.push(TraceStep {
                restart,
                step,
                neighbourhood: Some(kind),
                value,
                graph6: to_graph6(&g),
            });
        }
        if value > best.1 {
            best = (g.clone(), value);
        }
    }

    Ok(RestartOutcome {
        best: best.0,
        value: best.1,
        start_value,
        exhausted,
        trace,
        kelmans,
    })
}

/// Maximises `obj` over graphs on `cfg.n` vertices.
pub fn optimize(obj: &Objective, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let scorer = Scorer::new(obj)?;
    let probe = Scorer::new(&Objective::SqrtSplusNgSum)?;
    let (split_alpha, _) = best_complete_split(obj, cfg.n)?;

    let outcomes: Vec<RestartOutcome> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| climb(&scorer, &probe, cfg, r, split_alpha))
        .collect::<Result<_>>()?;

    let mut winner = 0;
    let mut winner_g6 = to_graph6(&outcomes[0].best);
    for (i, o) in outcomes.iter().enumerate().skip(1) {
        let g6 = to_graph6(&o.best);
        let w = &outcomes[winner];
        if o.value > w.value || (o.value == w.value && g6 < winner_g6) {
            winner = i;
            winner_g6 = g6;
        }
    }
    let mut kelmans = KelmansProbe::default();
    for o in &outcomes {
        kelmans.merge(&o.kelmans);
    }
    let w = &outcomes[winner];
    Ok(SearchResult {
        objective: obj.clone(),
        n: cfg.n,
        seed: cfg.seed,
        restarts: cfg.restarts,
        best_graph6: winner_g6,
        best_value: w.value,
        seeded_value: outcomes
            .iter()
            .map(|o| o.start_value)
            .fold(f64::NEG_INFINITY, f64::max),
        exhausted: outcomes.iter().any(|o| o.exhausted),
        trace: w.trace.clone(),
        kelmans,
    })
}
