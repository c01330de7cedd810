//! Small named graphs used throughout.

use super::Graph;
use crate::error::Result;

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("static edge list")
}

/// The path with three edges.
pub fn p3() -> Graph {
    g(4, &[(0, 1), (1, 2), (2, 3)])
}

/// Three vertices spanning exactly one edge.
pub fn co_cherry() -> Graph {
    g(3, &[(0, 1)])
}

/// Triangle with a pendant edge.
pub fn paw() -> Graph {
    g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])
}

/// `K4` minus an edge.
pub fn diamond() -> Graph {
    g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

pub fn star_k13() -> Graph {
    g(4, &[(0, 1), (0, 2), (0, 3)])
}

pub fn clique(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(vertices: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (1..vertices).map(|i| (i - 1, i)).collect();
    Graph::from_edges(vertices, &edges)
}

/// Resolves names such as `P3`, `K5`, `C4`, `paw`, `diamond`, `co-cherry`,
/// `K13`, or falls back to a graph6 string.
pub fn parse_named(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "p3" => return Ok(p3()),
        "paw" => return Ok(paw()),
        "diamond" => return Ok(diamond()),
        "co-cherry" | "cocherry" => return Ok(co_cherry()),
        "k13" | "k1,3" | "claw" => return Ok(star_k13()),
        _ => {}
    }
    let (head, rest) = lower.split_at(1.min(lower.len()));
    if let Ok(k) = rest.parse::<usize>() {
        match head {
            "k" => return clique(k),
            "c" if k >= 3 => return cycle(k),
            _ => {}
        }
    }
    super::from_graph6(name)
}
