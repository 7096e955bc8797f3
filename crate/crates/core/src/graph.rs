//! Simple undirected graphs on at most 64 vertices, stored as neighbour bitsets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on `n <= 64` vertices.
///
/// Row `v` of the adjacency relation is a `u64` whose bit `u` is set iff `uv` is
/// an edge. Rows are kept symmetric and loop-free by every constructor, so the
/// upper triangle alone determines the graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of vertex pairs, `n(n-1)/2`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in column-major upper-triangle order
/// `(0,1), (0,2), (1,2), (0,3), ...`. This is the graph6 bit order.
#[inline]
pub const fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let full = mask(n);
        for v in 0..n {
            g.rows[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds the graph whose edge at upper-triangle position `p` is present iff
    /// bit `p` of `bits` is set. Only valid for `n <= 11` (55 pairs).
    pub fn from_triangle_bits(n: usize, bits: u64) -> Result<Self> {
        let pairs = pair_count(n);
        if n == 0 || pairs > 64 {
            return Err(Error::UnsupportedSize(n));
        }
        let mut g = Self::empty(n)?;
        let mut p = 0;
        for j in 1..n {
            for i in 0..j {
                if bits >> p & 1 == 1 {
                    g.add_edge(i, j);
                }
                p += 1;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] ^= 1u64 << v;
        self.rows[v] ^= 1u64 << u;
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edge count.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in column-major upper-triangle order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Non-edges `(i, j)` with `i < j`, in the same order as [`Graph::edges`].
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(pair_count(self.n) - self.size());
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = mask(self.n);
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| !r & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Induced subgraph on all vertices except `v`, relabelled to `0..n-1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if self.n <= 1 {
            return Err(Error::UnsupportedSize(0));
        }
        let low = (1u64 << v) - 1;
        let rows = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let r = self.rows[u];
                (r & low) | ((r >> 1) & !low)
            })
            .collect();
        Ok(Graph { n: self.n - 1, rows })
    }

    /// Applies the vertex relabelling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            let mut r = self.rows[u];
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                rows[pu] |= 1u64 << perm[v];
            }
        }
        Graph { n: self.n, rows }
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                if self.has_edge(i, j) {
                    a[i * n + j] = 1.0;
                }
            }
        }
        a
    }

    /// Connected components as vertex bitsets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.rows[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            let mut later = self.rows[u] & !mask(u + 1);
            while later != 0 {
                let v = later.trailing_zeros() as usize;
                later &= later - 1;
                if self.rows[u] & self.rows[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Proper 2-colouring as a bitset of colour-1 vertices, if one exists.
    /// Every component's smallest vertex receives colour 0.
    pub fn two_colouring(&self) -> Option<u64> {
        let mut side = 0u64;
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let mut coloured = 1u64 << root;
            let mut frontier = coloured;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let v_side = side >> v & 1;
                let nb = self.rows[v];
                let clash = nb & coloured & if v_side == 1 { side } else { !side };
                if clash != 0 {
                    return None;
                }
                let fresh = nb & !coloured;
                if v_side == 0 {
                    side |= fresh;
                }
                coloured |= fresh;
                frontier |= fresh;
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    pub fn basic_props(&self) -> BasicProps {
        BasicProps {
            m: self.size(),
            degrees: self.degrees(),
            connected: self.is_connected(),
            triangle_free: self.is_triangle_free(),
            bipartite: self.is_bipartite(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Structural summary used to gate bound applicability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicProps {
    pub m: usize,
    pub degrees: Vec<usize>,
    pub connected: bool,
    pub triangle_free: bool,
    pub bipartite: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn c5_props() {
        let p = cycle(5).basic_props();
        assert_eq!(p.m, 5);
        assert_eq!(p.degrees, vec![2; 5]);
        assert!(p.connected && p.triangle_free && !p.bipartite);
    }

    #[test]
    fn k4_has_triangles() {
        let p = Graph::complete(4).unwrap().basic_props();
        assert!(!p.triangle_free);
        assert_eq!(p.m, 6);
    }

    #[test]
    fn k23_props() {
        let mut g = Graph::empty(5).unwrap();
        for a in 0..2 {
            for b in 2..5 {
                g.add_edge(a, b);
            }
        }
        let p = g.basic_props();
        assert!(p.bipartite && p.triangle_free && p.connected);
        assert_eq!(p.m, 6);
    }

    #[test]
    fn complement_of_k4_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
    }

    #[test]
    fn self_complementary_edge_counts() {
        let c5 = cycle(5);
        assert_eq!(c5.complement().size(), 5);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = p4.complement();
        assert_eq!(q.size(), 3);
        let mut d = q.degrees();
        d.sort();
        assert_eq!(d, vec![1, 1, 2, 2]);
    }

    #[test]
    fn vertex_deletion_relabels() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = p4.delete_vertex(1).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn size_limits() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        let k64 = Graph::complete(64).unwrap();
        assert_eq!(k64.size(), 64 * 63 / 2);
        assert_eq!(k64.complement().size(), 0);
    }

    #[test]
    fn disconnected_two_colouring() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 3);
        assert!(g.is_bipartite());
        assert!(!cycle(7).is_bipartite());
        assert!(cycle(6).is_bipartite());
    }
}
