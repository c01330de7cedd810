//! Exhaustive generalized Turán numbers `ex(n, T, F)` at small `n`.
//!
//! Two independent solvers: a brute force over every labelled graph
//! (`n <= 7`) and a level-by-level canonical augmentation over `F`-free
//! graphs with an edge-monotonicity bound for pruning (`n <= 10`).

mod checkpoint;
mod improve;

pub use checkpoint::{load_checkpoint, save_checkpoint, Checkpoint, CHECKPOINT_MAGIC, CHECKPOINT_VERSION};
pub use improve::local_improve;

use crate::error::{Error, Result};
use crate::graphs::{
    canonical_form, contains_clique_in, count_cliques, count_subgraphs, is_kq_free, named, Graph,
};
use crate::turan::{count_p3_fast, turan_graph, TuranSpec};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

/// Largest `n` for the labelled brute force.
pub const MAX_EXHAUSTIVE_N: usize = 7;
/// Largest `n` for canonical augmentation.
pub const MAX_SEARCH_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every labelled graph on `n` vertices.
    Exhaustive,
    /// `F`-free graphs grown one vertex at a time, deduplicated by
    /// canonical form.
    Augmentation,
}

/// `ex(n, target, forbid)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub n: usize,
    pub target: Graph,
    pub forbid: Graph,
    pub mode: Mode,
}

impl SearchProblem {
    pub fn new(n: usize, target: Graph, forbid: Graph, mode: Mode) -> Result<Self> {
        let cap = match mode {
            Mode::Exhaustive => MAX_EXHAUSTIVE_N,
            Mode::Augmentation => MAX_SEARCH_N,
        };
        if n > cap {
            return Err(Error::OrderTooLarge { n, max: cap });
        }
        if target.order() == 0 || forbid.order() == 0 {
            return Err(Error::InvalidProblem("target and forbidden graph must be nonempty".into()));
        }
        // every graph on at least |F| vertices contains an edgeless F
        if forbid.edge_count() == 0 && n >= forbid.order() {
            return Err(Error::InvalidProblem(format!(
                "no graph on {n} vertices avoids the edgeless graph on {} vertices",
                forbid.order()
            )));
        }
        Ok(SearchProblem { n, target, forbid, mode })
    }
}

/// Optimum and extremal graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub target: Graph,
    pub forbid: Graph,
    pub mode: Mode,
    pub optimum: u64,
    /// Canonical forms, sorted, one per isomorphism class.
    pub witnesses: Vec<Graph>,
    pub witness_count: usize,
    pub nodes_visited: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl SearchResult {
    /// Witnesses as graph6, one per line.
    pub fn witness_lines(&self) -> String {
        self.witnesses.iter().map(|g| format!("{g}\n")).collect()
    }
}

enum Counter {
    Path3,
    Clique(usize),
    General(Graph),
}

impl Counter {
    fn of(t: &Graph) -> Self {
        if t.is_isomorphic(&named::p3()) {
            Counter::Path3
        } else if t.edge_count() == t.order() * (t.order() - 1) / 2 {
            Counter::Clique(t.order())
        } else {
            Counter::General(*t)
        }
    }

    fn count(&self, g: &Graph) -> u64 {
        match self {
            Counter::Path3 => count_p3_fast(g),
            Counter::Clique(t) => count_cliques(g, *t),
            Counter::General(t) => count_subgraphs(t, g),
        }
    }
}

enum Forbidden {
    Clique(usize),
    General(Graph),
}

impl Forbidden {
    fn of(f: &Graph) -> Self {
        if f.edge_count() == f.order() * (f.order() - 1) / 2 {
            Forbidden::Clique(f.order())
        } else {
            Forbidden::General(*f)
        }
    }

    fn admits(&self, g: &Graph) -> bool {
        match self {
            Forbidden::Clique(q) => is_kq_free(g, *q),
            Forbidden::General(f) => count_subgraphs(f, g) == 0,
        }
    }

    /// `h + v` is free, given that `h` is; `v` is the last vertex of `g`.
    fn admits_extension(&self, h: &Graph, mask: u32, g: &Graph) -> bool {
        match self {
            Forbidden::Clique(q) => !contains_clique_in(h, mask, q - 1),
            Forbidden::General(_) => self.admits(g),
        }
    }

    /// A known free graph on `n` vertices, for seeding the pruning bound.
    fn seed(&self, n: usize) -> Option<Graph> {
        match self {
            Forbidden::Clique(q) if *q >= 2 => turan_graph(TuranSpec::new(q - 1, n as u64).ok()?).ok(),
            _ => None,
        }
    }
}

#[derive(Default)]
struct Best {
    value: u64,
    found: bool,
    witnesses: BTreeSet<Graph>,
    nodes: u64,
}

impl Best {
    fn offer(&mut self, value: u64, g: &Graph) {
        if !self.found || value > self.value {
            self.value = value;
            self.found = true;
            self.witnesses.clear();
        }
        if value == self.value {
            self.witnesses.insert(canonical_form(g).graph);
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.nodes += other.nodes;
        if !other.found {
            return self;
        }
        if !self.found || other.value > self.value {
            return Best {
                nodes: self.nodes,
                ..other
            };
        }
        if other.value == self.value {
            self.witnesses.extend(other.witnesses);
        }
        self
    }
}

/// Solves with the problem's own mode.
pub fn solve(p: &SearchProblem) -> Result<SearchResult> {
    solve_with_checkpoint(p, None)
}

/// As [`solve`]; in augmentation mode the frontier is saved to `checkpoint`
/// after every level and a matching checkpoint is resumed from.
pub fn solve_with_checkpoint(p: &SearchProblem, checkpoint: Option<&Path>) -> Result<SearchResult> {
    let start = Instant::now();
    let best = match p.mode {
        Mode::Exhaustive => exhaustive(p),
        Mode::Augmentation => augmentation(p, checkpoint)?,
    };
    if !best.found {
        return Err(Error::InvalidProblem("no admissible graph".into()));
    }
    let witnesses: Vec<Graph> = best.witnesses.into_iter().collect();
    Ok(SearchResult {
        n: p.n,
        target: p.target,
        forbid: p.forbid,
        mode: p.mode,
        optimum: best.value,
        witness_count: witnesses.len(),
        witnesses,
        nodes_visited: best.nodes,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}

fn exhaustive(p: &SearchProblem) -> Best {
    let n = p.n;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let counter = Counter::of(&p.target);
    let forbid = Forbidden::of(&p.forbid);
    let total = 1u64 << pairs.len();
    let chunk = 1u64 << 12;
    (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut best = Best::default();
            for bits in c * chunk..((c + 1) * chunk).min(total) {
                let mut g = Graph::empty(n).expect("n within bounds");
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                best.nodes += 1;
                if forbid.admits(&g) {
                    best.offer(counter.count(&g), &g);
                }
            }
            best
        })
        .reduce(Best::default, Best::merge)
}

/// `h` joined to a clique on `n - |h|` new vertices: every extension of `h`
/// to `n` vertices is a subgraph of it.
fn saturate(h: &Graph, n: usize) -> Graph {
    let mut g = *h;
    while g.order() < n {
        g = g.with_vertex(g.full_mask()).expect("n within bounds");
    }
    g
}

fn augmentation(p: &SearchProblem, checkpoint: Option<&Path>) -> Result<Best> {
    let n = p.n;
    let counter = Counter::of(&p.target);
    let forbid = Forbidden::of(&p.forbid);
    let lower = forbid
        .seed(n)
        .filter(|g| forbid.admits(g))
        .map(|g| counter.count(&g))
        .unwrap_or(0);

    let mut nodes = 0u64;
    let mut level = vec![Graph::empty(0).expect("order 0")];
    let mut m = 0;
    if let Some(path) = checkpoint {
        if let Some(cp) = load_checkpoint(path, p)? {
            m = cp.level;
            level = cp.frontier;
            nodes = cp.nodes;
        }
    }
    // grow to n - 1 vertices, dropping graphs that cannot reach `lower`
    while m + 1 < n {
        let next: BTreeSet<Graph> = level
            .par_iter()
            .flat_map_iter(|h| {
                let (counter, forbid) = (&counter, &forbid);
                (0..1u32 << m).filter_map(move |mask| {
                    let g = h.with_vertex(mask).expect("n within bounds");
                    if !forbid.admits_extension(h, mask, &g) {
                        return None;
                    }
                    if counter.count(&saturate(&g, n)) < lower {
                        return None;
                    }
                    Some(canonical_form(&g).graph)
                })
            })
            .collect();
        nodes += level.len() as u64 * (1u64 << m);
        level = next.into_iter().collect();
        m += 1;
        if let Some(path) = checkpoint {
            save_checkpoint(
                path,
                &Checkpoint {
                    level: m,
                    nodes,
                    frontier: level.clone(),
                },
                p,
            )?;
        }
    }
    if n == 0 {
        let mut best = Best::default();
        best.offer(counter.count(&level[0]), &level[0]);
        return Ok(best);
    }
    // last vertex: no deduplication needed, only the count
    let mut best = level
        .par_iter()
        .map(|h| {
            let mut best = Best::default();
            if counter.count(&saturate(h, n)) < lower {
                return best;
            }
            for mask in 0..1u32 << m {
                best.nodes += 1;
                let g = h.with_vertex(mask).expect("n within bounds");
                if forbid.admits_extension(h, mask, &g) {
                    best.offer(counter.count(&g), &g);
                }
            }
            best
        })
        .reduce(Best::default, Best::merge);
    best.nodes += nodes;
    Ok(best)
}

/// `ex(n, K_t, K_q)` and whether `T_{q-1}(n)` is its unique extremal graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZykovResult {
    pub result: SearchResult,
    pub turan_count: u64,
    pub witness_is_turan: bool,
    pub unique: bool,
}

pub fn solve_zykov(n: usize, t: usize, q: usize) -> Result<ZykovResult> {
    if t == 0 || t >= q {
        return Err(Error::InvalidProblem(format!("need 1 <= t < q, got t = {t}, q = {q}")));
    }
    let p = SearchProblem::new(n, named::clique(t)?, named::clique(q)?, Mode::Augmentation)?;
    let result = solve(&p)?;
    let turan = turan_graph(TuranSpec::new(q - 1, n as u64)?)?;
    let turan_count = count_cliques(&turan, t);
    let canon = canonical_form(&turan).graph;
    Ok(ZykovResult {
        witness_is_turan: result.witnesses.contains(&canon) && result.optimum == turan_count,
        unique: result.witnesses == [canon],
        turan_count,
        result,
    })
}

/// `ex(n, P3, K_{r+1})` with the Turán comparison.
pub fn solve_p3(n: usize, r: usize, mode: Mode) -> Result<(SearchResult, bool)> {
    let p = SearchProblem::new(n, named::p3(), named::clique(r + 1)?, mode)?;
    let result = solve(&p)?;
    let turan = canonical_form(&turan_graph(TuranSpec::new(r, n as u64)?)?).graph;
    let unique_turan = result.witnesses == [turan] && result.optimum == count_p3_fast(&turan);
    Ok((result, unique_turan))
}
