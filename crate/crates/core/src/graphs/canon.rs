//! Canonical labelling by individualisation and colour refinement.
//!
//! The canonical representative is the lexicographically smallest relabelled
//! graph over all leaves of the refinement tree. The tree itself depends only
//! on the isomorphism class (cells are split and ordered by label-free
//! signatures), so the minimum is a class invariant. Twin vertices and
//! automorphisms discovered at leaves prune branches that can only repeat
//! already-seen leaves.

use super::{BitIter, Graph};

/// A canonical representative together with the relabelling that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonGraph {
    pub graph: Graph,
    /// `perm[v]` is the canonical label of input vertex `v`.
    pub perm: Vec<u8>,
}

pub fn canonical_form(g: &Graph) -> CanonGraph {
    canonical_form_colored(g, &vec![0; g.order()])
}

/// Canonical form of a vertex-coloured graph. Vertices of smaller colour get
/// smaller canonical labels; in particular a vertex with a colour of its own
/// keeps its rank among the colours.
pub fn canonical_form_colored(g: &Graph, colors: &[u8]) -> CanonGraph {
    let n = g.order();
    assert_eq!(colors.len(), n);
    if n == 0 {
        return CanonGraph {
            graph: *g,
            perm: Vec::new(),
        };
    }
    let mut palette: Vec<u8> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<u32> = palette
        .iter()
        .map(|&c| {
            colors
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == c)
                .fold(0u32, |m, (v, _)| m | 1 << v)
        })
        .collect();

    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(cells, &mut Vec::new());
    let (graph, perm) = search.best.expect("at least one leaf");
    CanonGraph { graph, perm }
}

/// Minimum relabelling over all `n!` permutations. Exponential; test oracle
/// and tiny inputs only. Its representative differs from [`canonical_form`]'s
/// but it decides isomorphism the same way.
pub fn canonical_form_bruteforce(g: &Graph) -> Graph {
    let n = g.order();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut best = g.permute(&perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let h = g.permute(&perm);
            if h < best {
                best = h;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

const MAX_STORED_AUTOMORPHISMS: usize = 64;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Graph, Vec<u8>)>,
    automorphisms: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u32>, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in BitIter(cell) {
            if tried.iter().any(|&u| self.are_twins(u, v)) || self.in_known_orbit(v, &tried, fixed)
            {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[target + 1..]);
            fixed.push(v);
            self.descend(next, fixed);
            fixed.pop();
            tried.push(v);
        }
    }

    fn leaf(&mut self, cells: &[u32]) {
        let n = self.g.order();
        let mut perm = vec![0u8; n];
        for (pos, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos as u8;
        }
        let h = self.g.permute(&perm);
        match &self.best {
            None => self.best = Some((h, perm)),
            Some((b, bperm)) => {
                if h < *b {
                    self.best = Some((h, perm));
                } else if h == *b && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                    // bperm^-1 . perm maps the graph onto itself
                    let mut inv = vec![0u8; n];
                    for (v, &p) in bperm.iter().enumerate() {
                        inv[p as usize] = v as u8;
                    }
                    let auto: Vec<u8> = perm.iter().map(|&p| inv[p as usize]).collect();
                    self.automorphisms.push(auto);
                }
            }
        }
    }

    /// Same cell and `N(u) - v == N(v) - u`, so swapping them is an
    /// automorphism fixing everything else.
    fn are_twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u32 << u) | (1u32 << v));
        self.g.neighbors(u) & mask == self.g.neighbors(v) & mask
    }

    fn in_known_orbit(&self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let n = self.g.order();
        let gens: Vec<&Vec<u8>> = self
            .automorphisms
            .iter()
            .filter(|a| fixed.iter().all(|&f| a[f] as usize == f))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for a in gens {
            for (x, &ax) in a.iter().enumerate().take(n) {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, ax as usize));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Splits cells by neighbour counts into every current cell until stable.
/// New cells replace the old one in increasing signature order, so the
/// resulting ordered partition is label independent.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() > 1 {
                let mut keyed: Vec<(Vec<u8>, usize)> = BitIter(cell)
                    .map(|v| {
                        let sig = cells
                            .iter()
                            .map(|&c| (g.neighbors(v) & c).count_ones() as u8)
                            .collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                if keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0) {
                    let mut parts: Vec<u32> = Vec::new();
                    let mut prev: Option<&Vec<u8>> = None;
                    for (sig, v) in &keyed {
                        if prev != Some(sig) {
                            parts.push(0);
                            prev = Some(sig);
                        }
                        *parts.last_mut().unwrap() |= 1 << v;
                    }
                    let k = parts.len();
                    cells.splice(i..=i, parts);
                    i += k;
                    changed = true;
                    continue;
                }
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
}
