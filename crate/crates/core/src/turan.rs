//! Path and clique counts in Turán and complete multipartite graphs, the
//! single-vertex move between parts, per-vertex path counts and the
//! clone-and-replace operation.

use crate::error::{Error, Result};
use crate::exactmath::{ratio, Rational};
use crate::graphs::{BitIter, Graph, MAX_ORDER};
use num_bigint::BigInt;
use serde::Serialize;

/// Part sizes of a complete multipartite graph. Empty parts are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartVector(Vec<u64>);

impl PartVector {
    /// Panics on an empty list; a graph has at least one part.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(!parts.is_empty(), "at least one part");
        PartVector(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sizes in non-increasing order.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// No two parts differ by more than one.
    pub fn is_balanced(&self) -> bool {
        let max = self.0.iter().max().unwrap();
        let min = self.0.iter().min().unwrap();
        max - min <= 1
    }

    /// `r` parts as equal as possible; the first `n mod r` parts are larger.
    pub fn balanced(r: usize, n: u64) -> Self {
        assert!(r >= 1);
        let q = n / r as u64;
        let extra = (n % r as u64) as usize;
        PartVector((0..r).map(|i| q + u64::from(i < extra)).collect())
    }

    /// The complete multipartite graph, parts laid out consecutively.
    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.order() as usize;
        let mut g = Graph::empty(n)?;
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in self.0.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s as usize));
        }
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }
}

impl std::str::FromStr for PartVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u64>, _> =
            s.split(',').map(|x| x.trim().parse::<u64>()).collect();
        match parts {
            Ok(p) if !p.is_empty() => Ok(PartVector(p)),
            _ => Err(Error::Parse(format!("bad part list {s:?}"))),
        }
    }
}

/// `T_r(n)`: `r` parts, `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranSpec {
    r: usize,
    n: u64,
}

impl TuranSpec {
    pub fn new(r: usize, n: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidProblem("a Turán graph needs at least one part".into()));
        }
        Ok(TuranSpec { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parts(&self) -> PartVector {
        PartVector::balanced(self.r, self.n)
    }
}

/// `T_r(n)` with vertex `v` in part `v mod r`.
pub fn turan_graph(spec: TuranSpec) -> Result<Graph> {
    let n = spec.n as usize;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u % spec.r != v % spec.r {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Number of `P3` subgraphs: every edge `uv` is the middle edge of
/// `(d(u) - 1)(d(v) - 1)` walks `a-u-v-b` with `a != v`, `b != u`, and the
/// ones with `a == b` close a triangle, three per triangle per... i.e. each
/// triangle is hit once from each of its three edges.
pub fn count_p3_fast(g: &Graph) -> u64 {
    let mut walks = 0u64;
    let mut triangles = 0u64;
    for (u, v) in g.edges() {
        walks += (g.degree(u) as u64 - 1) * (g.degree(v) as u64 - 1);
        triangles += (g.neighbors(u) & g.neighbors(v)).count_ones() as u64;
    }
    // each triangle was seen from all three of its edges
    walks - triangles
}

/// Exact `P3` count of the complete multipartite graph with these parts:
/// `sum_{i<j} |Vi||Vj| ((|Vi|-1)(|Vj|-1) + (n-|Vi|-|Vj|)(n-3))`.
pub fn multipartite_p3(parts: &PartVector) -> u128 {
    let p: Vec<i128> = parts.parts().iter().map(|&x| x as i128).collect();
    let n: i128 = p.iter().sum();
    let mut total: i128 = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let (a, b) = (p[i], p[j]);
            total += a * b * ((a - 1) * (b - 1) + (n - a - b) * (n - 3));
        }
    }
    total as u128
}

/// Result of moving one vertex from part `from` to part `to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    /// `multipartite_p3(after) - multipartite_p3(before)`.
    pub recount: i128,
    /// Closed form with the `(V1, V2) = (from, to)` roles.
    pub closed_form: i128,
    /// The shorter closed form as usually quoted; agrees with the recount
    /// only when the other parts contribute nothing.
    pub published_form: i128,
}

pub fn delta_p3(parts: &PartVector, from: usize, to: usize) -> Result<DeltaReport> {
    let k = parts.len();
    for idx in [from, to] {
        if idx >= k {
            return Err(Error::PartOutOfRange { index: idx, parts: k });
        }
    }
    if parts.parts()[from] == 0 {
        return Err(Error::EmptyPart(from));
    }
    if from == to {
        return Ok(DeltaReport {
            recount: 0,
            closed_form: 0,
            published_form: 0,
        });
    }
    let mut after = parts.parts().to_vec();
    after[from] -= 1;
    after[to] += 1;
    let recount =
        multipartite_p3(&PartVector(after)) as i128 - multipartite_p3(parts) as i128;
    Ok(DeltaReport {
        recount,
        closed_form: delta_closed_form(parts, from, to),
        published_form: delta_published_form(parts, from, to),
    })
}

fn move_roles(parts: &PartVector, from: usize, to: usize) -> (i128, i128, i128, Vec<i128>) {
    let p = parts.parts();
    let a = p[from] as i128;
    let b = p[to] as i128;
    let n = parts.order() as i128;
    let others = p
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != from && i != to)
        .map(|(_, &x)| x as i128)
        .collect();
    (a, b, n, others)
}

/// `(a-b-1) (2(a-1)b + m(3(a+b) + m - 7) + 4 e2)` where `a, b` are the
/// source and target sizes, `m = n - a - b` and `e2` is the second
/// elementary symmetric sum of the remaining part sizes.
pub fn delta_closed_form(parts: &PartVector, from: usize, to: usize) -> i128 {
    let (a, b, n, others) = move_roles(parts, from, to);
    let m = n - a - b;
    let s: i128 = others.iter().sum();
    let sq: i128 = others.iter().map(|x| x * x).sum();
    let e2 = (s * s - sq) / 2;
    (a - b - 1) * (2 * (a - 1) * b + m * (3 * (a + b) + m - 7) + 4 * e2)
}

/// `(a-b-1) ((n-a-b)(n-3) + 2(a-1)b + sum_j |Vj|(n-2-|Vj|))`.
pub fn delta_published_form(parts: &PartVector, from: usize, to: usize) -> i128 {
    let (a, b, n, others) = move_roles(parts, from, to);
    let tail: i128 = others.iter().map(|&x| x * (n - 2 - x)).sum();
    (a - b - 1) * ((n - a - b) * (n - 3) + 2 * (a - 1) * b + tail)
}

/// `12 ((r-1)/r)^3`.
pub fn opt_density(r: u64) -> Rational {
    let x = ratio(r as i64 - 1, r as i64);
    &x * &x * &x * Rational::from_integer(12.into())
}

/// Main term of the Turán path count when `r | n`:
/// `C(r,2) (n/r)^2 ((n/r - 1)^2 + (n - 2n/r)(n - 3))`.
pub fn turan_p3_asymptotic(r: u64, n: u64) -> Rational {
    let r_ = Rational::from_integer(r.into());
    let n_ = Rational::from_integer(n.into());
    let one = Rational::from_integer(1.into());
    let part = &n_ / &r_;
    let pairs = Rational::from_integer(BigInt::from(r * r.saturating_sub(1) / 2));
    let two_sides = (&part - &one) * (&part - &one);
    let third = (&n_ - &part * Rational::from_integer(2.into())) * (&n_ - Rational::from_integer(3.into()));
    pairs * &part * &part * (two_sides + third)
}

/// Exact `24 nu(P3, T_r(n)) / (n (n-1) (n-2) (n-3))`, i.e. the path
/// density `nu / C(n, 4)`.
pub fn turan_p3_density(r: usize, n: u64) -> Rational {
    let nu = multipartite_p3(&PartVector::balanced(r, n));
    let falling = BigInt::from(n) * (n - 1) * (n - 2) * (n - 3);
    Rational::new(BigInt::from(nu) * 24, falling)
}

/// Copies of `K4` in `T_r(n)`: one vertex from each of four distinct parts.
pub fn zykov_k4(spec: TuranSpec) -> u128 {
    let p = spec.parts();
    // e4 of the part sizes
    let mut e = [1u128, 0, 0, 0, 0];
    for &x in p.parts() {
        for k in (1..=4).rev() {
            e[k] += e[k - 1] * x as u128;
        }
    }
    e[4]
}

/// `(r^3 - 6r^2 + 11r - 6) / r^3`.
pub fn zykov_bound(r: u64) -> Rational {
    let r = r as i64;
    ratio((r - 1) * (r - 2) * (r - 3), r * r * r)
}

/// Number of `P3` subgraphs through `v`.
pub fn per_vertex_p3(g: &Graph, v: usize) -> u64 {
    let mut count = 0u64;
    let nv = g.neighbors(v);
    // v at an end: v-a-b-c
    for a in BitIter(nv) {
        for b in BitIter(g.neighbors(a) & !(1 << v)) {
            count += (g.neighbors(b) & !(1 << v | 1 << a)).count_ones() as u64;
        }
    }
    // v second: w-v-y-z, counted in the orientation where v is second
    for w in BitIter(nv) {
        for y in BitIter(nv & !(1 << w)) {
            count += (g.neighbors(y) & !(1 << v | 1 << w)).count_ones() as u64;
        }
    }
    count
}

/// Number of `P3` subgraphs containing both `u` and `v`.
pub fn pair_p3(g: &Graph, u: usize, v: usize) -> u64 {
    p3_vertex_sets(g)
        .into_iter()
        .filter(|s| s >> u & 1 == 1 && s >> v & 1 == 1)
        .count() as u64
}

/// The vertex set of every `P3` subgraph, one entry per subgraph.
pub fn p3_vertex_sets(g: &Graph) -> Vec<u32> {
    let mut out = Vec::new();
    for (x, y) in g.edges() {
        // middle edge xy
        for w in BitIter(g.neighbors(x) & !(1 << y)) {
            for z in BitIter(g.neighbors(y) & !(1 << x | 1 << w)) {
                out.push(1 << w | 1 << x | 1 << y | 1 << z);
            }
        }
    }
    out
}

/// Deletes `v`'s edges and gives it a copy of `N(u) - {v}`; `v` ends up a
/// non-adjacent twin of `u`.
pub fn clone_replace(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let mut h = *g;
    h.set_neighbors(v, g.neighbors(u) & !(1 << v));
    Ok(h)
}

/// One row of a convergence table for `T_r(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub r: usize,
    pub n: u64,
    pub nu_p3: u128,
    /// `24 nu / (n (n-1) (n-2) (n-3))`.
    pub density: Rational,
    pub opt: Rational,
    /// `density - opt`.
    pub gap: Rational,
}

pub const CONVERGENCE_HEADER: &str = "r,n,nu_p3,density_times_24,opt,gap";

impl ConvergenceRow {
    pub fn csv(&self) -> String {
        format!("{},{},{},{},{},{}", self.r, self.n, self.nu_p3, self.density, self.opt, self.gap)
    }
}

/// Exact rows for `n` in `[nmin, nmax]`; `nmin >= 4`.
pub fn convergence_rows(r: usize, nmin: u64, nmax: u64) -> Result<Vec<ConvergenceRow>> {
    if r == 0 || nmin < 4 || nmax < nmin {
        return Err(Error::InvalidProblem(format!(
            "need r >= 1 and 4 <= nmin <= nmax, got r = {r}, [{nmin}, {nmax}]"
        )));
    }
    let opt = opt_density(r as u64);
    Ok((nmin..=nmax)
        .map(|n| {
            let density = turan_p3_density(r, n);
            ConvergenceRow {
                r,
                n,
                nu_p3: multipartite_p3(&PartVector::balanced(r, n)),
                gap: &density - &opt,
                density,
                opt: opt.clone(),
            }
        })
        .collect())
}

pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut s = format!("{CONVERGENCE_HEADER}\n");
    for row in rows {
        s.push_str(&row.csv());
        s.push('\n');
    }
    s
}
