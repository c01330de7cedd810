//! Small simple graphs stored as one adjacency word per vertex.
//!
//! Everything in the crate that talks about "a graph" uses [`Graph`]: target
//! and forbidden graphs, the 4-vertex basis, Turán graphs and search
//! witnesses. The order is capped at [`MAX_ORDER`] so a neighbourhood fits a
//! `u32`.

mod canon;
mod count;
mod family;
mod graph6;
pub mod named;

pub use canon::{canonical_form, canonical_form_bruteforce, canonical_form_colored, CanonGraph};
pub use count::{
    blowup_limit_densities, clique_number, count_cliques, count_subgraphs, density_vector,
    find_induced_cocherry, induced_density, is_kq_free, multipartite_parts,
};
pub(crate) use count::contains_clique_in;
pub use family::{
    enumerate_graphs, f4_basis, render_f4_fixture, F4Signature, GraphFamily, F4_FIXTURE, F4_FIXTURE_NAME,
    F4_SIGNATURES, MAX_ENUM_ORDER,
};
pub use graph6::{from_graph6, to_graph6};

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_ORDER: usize = 32;

/// Simple undirected graph on `0..n`.
///
/// Two graphs compare by order and then by their adjacency rows, which is
/// the total order canonical forms are minimised under.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = g.full_mask() & !(1 << v);
        }
        Ok(g)
    }

    /// Graph whose adjacency rows are given directly. Rows are checked.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        for (v, &row) in rows.iter().enumerate() {
            if row & !g.full_mask() != 0 || row & (1 << v) != 0 {
                return Err(Error::InvalidEdge {
                    u: v,
                    v: (row & !g.full_mask()).trailing_zeros() as usize,
                    n,
                });
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::InvalidEdge { u, v, n });
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Bit mask with one bit per vertex.
    #[inline]
    pub fn full_mask(&self) -> u32 {
        if self.n as usize == MAX_ORDER {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order() && v < self.order(), "bad edge ({u}, {v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    /// Replaces the neighbourhood of `v` by `mask` (minus `v` itself),
    /// keeping symmetry.
    pub fn set_neighbors(&mut self, v: usize, mask: u32) {
        let mask = mask & self.full_mask() & !(1 << v);
        for u in 0..self.order() {
            if u != v {
                if mask >> u & 1 == 1 {
                    self.adj[u] |= 1 << v;
                } else {
                    self.adj[u] &= !(1 << v);
                }
            }
        }
        self.adj[v] = mask;
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            let higher = self.adj[u] >> u >> 1;
            BitIter(higher).map(move |k| (u, u + 1 + k))
        })
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced on `vertices`, relabelled `vertices[i] -> i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph {
            n: vertices.len() as u8,
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.adj[i] |= 1 << j;
                    h.adj[j] |= 1 << i;
                }
            }
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[u8]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut h = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.order() {
            let mut row = 0u32;
            for v in BitIter(self.adj[u]) {
                row |= 1 << perm[v];
            }
            h.adj[perm[u] as usize] = row;
        }
        h
    }

    pub fn complement(&self) -> Graph {
        let mut h = *self;
        let full = self.full_mask();
        for v in 0..self.order() {
            h.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        h
    }

    /// Same graph with one extra vertex adjacent to `mask`.
    pub fn with_vertex(&self, mask: u32) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                n: n + 1,
                max: MAX_ORDER,
            });
        }
        let mut h = *self;
        h.n += 1;
        let mask = mask & self.full_mask();
        h.adj[n] = mask;
        for u in BitIter(mask) {
            h.adj[u] |= 1 << n;
        }
        Ok(h)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.edge_count() == other.edge_count()
            && canonical_form(self).graph == canonical_form(other).graph
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        write!(f, "Graph(n={}, edges={:?})", self.n, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// All `k`-subsets of `0..n` as bit masks, in colexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit: u64 = 1u64 << n;
    let mut s: u64 = (1u64 << k) - 1;
    while s < limit {
        out.push(s as u32);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}
