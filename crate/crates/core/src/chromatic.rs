//! Exact chromatic number by DSATUR branch and bound.
//!
//! Branching picks the uncoloured vertex of highest saturation, then highest
//! degree, then lowest index. A greedy clique gives the lower bound and the
//! plain DSATUR colouring the initial upper bound.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CHROMATIC_CAP: usize = 16;

fn greedy_clique(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 1;
    for start in 0..n {
        let mut candidates = g.neighbours(start);
        let mut size = 1;
        while candidates != 0 {
            // candidate with the most neighbours inside the candidate set
            let mut pick = 0;
            let mut pick_score = None;
            let mut rest = candidates;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let score = (g.neighbours(v) & candidates).count_ones();
                if pick_score.is_none_or(|s| score > s) {
                    pick = v;
                    pick_score = Some(score);
                }
            }
            size += 1;
            candidates &= g.neighbours(pick);
        }
        best = best.max(size);
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    colour: Vec<Option<u8>>,
    best: usize,
    lower: usize,
}

impl Search<'_> {
    fn saturation(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        let mut nb = self.g.neighbours(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if let Some(c) = self.colour[u] {
                mask |= 1u64 << c;
            }
        }
        mask
    }

    fn pick(&self) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64, u32, usize)> = None;
        for v in 0..self.g.order() {
            if self.colour[v].is_some() {
                continue;
            }
            let sat = self.saturation(v);
            let key = (sat.count_ones(), self.g.degree(v));
            match best {
                Some((_, _, s, d)) if (s, d) >= key => {}
                _ => best = Some((v, sat, key.0, key.1)),
            }
        }
        best.map(|(v, sat, _, _)| (v, sat))
    }

    fn run(&mut self, used: usize) {
        if self.best == self.lower || used >= self.best {
            return;
        }
        let Some((v, sat)) = self.pick() else {
            self.best = used;
            return;
        };
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if sat >> c & 1 == 1 {
                continue;
            }
            self.colour[v] = Some(c as u8);
            self.run(used.max(c + 1));
            self.colour[v] = None;
            if self.best == self.lower {
                return;
            }
        }
    }
}

/// Greedy DSATUR colour count (an upper bound on the chromatic number).
pub fn dsatur_upper_bound(g: &Graph) -> usize {
    let mut s = Search {
        g,
        colour: vec![None; g.order()],
        best: usize::MAX,
        lower: 0,
    };
    let mut used = 0;
    while let Some((v, sat)) = s.pick() {
        let c = (!sat).trailing_zeros() as usize;
        s.colour[v] = Some(c as u8);
        used = used.max(c + 1);
    }
    used
}

/// Exact chromatic number. Refuses graphs with more than `cap` vertices.
pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.order();
    if n > cap {
        return Err(Error::ChromaticCapped { n, cap });
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let lower = greedy_clique(g);
    let upper = dsatur_upper_bound(g);
    if lower == upper {
        return Ok(upper);
    }
    let mut s = Search {
        g,
        colour: vec![None; n],
        best: upper,
        lower,
    };
    s.run(0);
    Ok(s.best)
}
