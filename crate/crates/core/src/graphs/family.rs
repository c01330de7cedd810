use super::{canonical_form, count_subgraphs, named, Graph};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};

/// Largest order [`enumerate_graphs`] accepts.
pub const MAX_ENUM_ORDER: usize = 8;

/// All isomorphism classes of graphs on a fixed number of vertices, as
/// canonical representatives, with a reverse index.
#[derive(Clone, Debug)]
pub struct GraphFamily {
    order: usize,
    graphs: Vec<Graph>,
    index: HashMap<Graph, usize>,
}

impl GraphFamily {
    fn from_graphs(order: usize, graphs: Vec<Graph>) -> Self {
        let index = graphs.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        GraphFamily { order, graphs, index }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn get(&self, i: usize) -> &Graph {
        &self.graphs[i]
    }

    /// Index of a canonical graph.
    pub fn index_of(&self, canonical: &Graph) -> Option<usize> {
        self.index.get(canonical).copied()
    }

    /// Index of an arbitrary (not necessarily canonical) graph.
    pub fn classify(&self, g: &Graph) -> Option<usize> {
        self.index_of(&canonical_form(g).graph)
    }
}

/// Every graph on `n` vertices up to isomorphism, sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<GraphFamily> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)?];
    for m in 0..n {
        let mut next: HashSet<Graph> = HashSet::new();
        for g in &level {
            for mask in 0u32..(1u32 << m) {
                next.insert(canonical_form(&g.with_vertex(mask)?).graph);
            }
        }
        level = next.into_iter().collect();
    }
    level.sort();
    Ok(GraphFamily::from_graphs(n, level))
}

/// Identifying data for one member of the 4-vertex basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct F4Signature {
    pub name: &'static str,
    pub edges: usize,
    /// Non-increasing.
    pub degrees: [usize; 4],
    pub p3_count: u64,
}

/// `F0 ... F10`. Edge count and degree sequence tell the classes apart; the
/// path count is carried along and checked.
pub const F4_SIGNATURES: [F4Signature; 11] = [
    F4Signature { name: "empty", edges: 0, degrees: [0, 0, 0, 0], p3_count: 0 },
    F4Signature { name: "K2+2K1", edges: 1, degrees: [1, 1, 0, 0], p3_count: 0 },
    F4Signature { name: "P2+K1", edges: 2, degrees: [2, 1, 1, 0], p3_count: 0 },
    F4Signature { name: "K1,3", edges: 3, degrees: [3, 1, 1, 1], p3_count: 0 },
    F4Signature { name: "2K2", edges: 2, degrees: [1, 1, 1, 1], p3_count: 0 },
    F4Signature { name: "K3+K1", edges: 3, degrees: [2, 2, 2, 0], p3_count: 0 },
    F4Signature { name: "P3", edges: 3, degrees: [2, 2, 1, 1], p3_count: 1 },
    F4Signature { name: "paw", edges: 4, degrees: [3, 2, 2, 1], p3_count: 2 },
    F4Signature { name: "C4", edges: 4, degrees: [2, 2, 2, 2], p3_count: 4 },
    F4Signature { name: "diamond", edges: 5, degrees: [3, 3, 2, 2], p3_count: 6 },
    F4Signature { name: "K4", edges: 6, degrees: [3, 3, 3, 3], p3_count: 12 },
];

/// The 4-vertex family in the pinned `F0 ... F10` order of [`F4_SIGNATURES`].
pub fn f4_basis() -> GraphFamily {
    let all = enumerate_graphs(4).expect("n = 4 is in range");
    let p3 = named::p3();
    let mut pinned = vec![None; F4_SIGNATURES.len()];
    for g in all.graphs() {
        let d = g.degree_sequence();
        let slot = F4_SIGNATURES
            .iter()
            .position(|s| s.edges == g.edge_count() && s.degrees[..] == d[..])
            .expect("every 4-vertex graph has a signature");
        assert_eq!(count_subgraphs(&p3, g), F4_SIGNATURES[slot].p3_count);
        assert!(pinned[slot].replace(*g).is_none(), "signature collision");
    }
    GraphFamily::from_graphs(4, pinned.into_iter().map(Option::unwrap).collect())
}

pub const F4_FIXTURE_NAME: &str = "f4_basis_v1.txt";
/// Committed rendering of [`f4_basis`]; any drift in the pinning shows up
/// as a mismatch against [`render_f4_fixture`].
pub const F4_FIXTURE: &str = include_str!("../../fixtures/f4_basis_v1.txt");

/// One line per basis graph: index, name, graph6 of the canonical form.
pub fn render_f4_fixture() -> String {
    let basis = f4_basis();
    let mut s = String::from("# pinned four-vertex basis\nversion 1\n");
    for (i, (sig, g)) in F4_SIGNATURES.iter().zip(basis.graphs()).enumerate() {
        s.push_str(&format!("F{i} {} {g}\n", sig.name));
    }
    s
}
