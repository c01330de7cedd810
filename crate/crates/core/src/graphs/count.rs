use super::{canonical_form, subsets_of_size, BitIter, Graph, GraphFamily};
use crate::exactmath::Rational;
use crate::turan::PartVector;
use num_bigint::BigInt;
use num_traits::Zero;

/// Number of subgraphs of `g` isomorphic to `t` (not necessarily induced).
///
/// Counts injective edge-preserving maps `t -> g` and divides by the number
/// of automorphisms of `t`.
pub fn count_subgraphs(t: &Graph, g: &Graph) -> u64 {
    if t.order() > g.order() {
        return 0;
    }
    if t.order() == 0 {
        return 1;
    }
    let embeddings = count_injective_homs(t, g);
    let autos = count_injective_homs(t, t);
    embeddings / autos
}

fn count_injective_homs(t: &Graph, g: &Graph) -> u64 {
    // order t's vertices so each one (after the first) has an earlier neighbour when possible
    let k = t.order();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u32;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((t.neighbors(v) & placed).count_ones(), t.degree(v)))
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    let mut image = vec![usize::MAX; k];
    fn rec(t: &Graph, g: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u32) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut candidates = g.full_mask() & !used;
        for u in BitIter(t.neighbors(v)) {
            if image[u] != usize::MAX {
                candidates &= g.neighbors(image[u]);
            }
        }
        let mut total = 0;
        for w in BitIter(candidates) {
            image[v] = w;
            total += rec(t, g, order, depth + 1, image, used | 1 << w);
        }
        image[v] = usize::MAX;
        total
    }
    rec(t, g, &order, 0, &mut image, 0)
}

/// Fraction of `|h|`-subsets of `V(g)` that induce a copy of `h`; zero when
/// `h` is larger than `g`.
pub fn induced_density(h: &Graph, g: &Graph) -> Rational {
    let k = h.order();
    if k > g.order() {
        return Rational::zero();
    }
    let target = canonical_form(h).graph;
    let subsets = subsets_of_size(g.order(), k);
    let hits = subsets
        .iter()
        .filter(|&&s| {
            let vs: Vec<usize> = BitIter(s).collect();
            let sub = g.induced(&vs);
            sub.edge_count() == h.edge_count() && canonical_form(&sub).graph == target
        })
        .count();
    Rational::new(BigInt::from(hits), BigInt::from(subsets.len()))
}

/// Induced densities of every member of `family` in `g`, in family order.
/// All zero when `g` has fewer vertices than the family's graphs.
pub fn density_vector(family: &GraphFamily, g: &Graph) -> Vec<Rational> {
    let k = family.order();
    let mut counts = vec![0u64; family.len()];
    if k > g.order() {
        return counts.into_iter().map(|_| Rational::zero()).collect();
    }
    let subsets = subsets_of_size(g.order(), k);
    for &s in &subsets {
        let vs: Vec<usize> = BitIter(s).collect();
        let sub = canonical_form(&g.induced(&vs)).graph;
        let i = family.index_of(&sub).expect("family covers every graph of its order");
        counts[i] += 1;
    }
    let total = BigInt::from(subsets.len());
    counts
        .into_iter()
        .map(|c| Rational::new(BigInt::from(c), total.clone()))
        .collect()
}

/// Limit of the 4-vertex (or `family.order()`-vertex) induced densities along
/// the balanced blow-ups of `g`: each vertex becomes an independent set of
/// size `t`, `t -> infinity`. Equals the distribution of the graph induced by
/// `k` independent uniform picks, where repeated picks are non-adjacent.
pub fn blowup_limit_densities(family: &GraphFamily, g: &Graph) -> Vec<Rational> {
    let k = family.order();
    let n = g.order();
    let mut counts = vec![0u64; family.len()];
    let total = (n as u64).pow(k as u32);
    let mut picks = vec![0usize; k];
    for idx in 0..total {
        let mut x = idx;
        for p in picks.iter_mut() {
            *p = (x % n as u64) as usize;
            x /= n as u64;
        }
        let mut h = Graph::empty(k).unwrap();
        for a in 0..k {
            for b in a + 1..k {
                if picks[a] != picks[b] && g.has_edge(picks[a], picks[b]) {
                    h.add_edge(a, b);
                }
            }
        }
        let i = family
            .index_of(&canonical_form(&h).graph)
            .expect("family covers every graph of its order");
        counts[i] += 1;
    }
    counts
        .into_iter()
        .map(|c| Rational::new(BigInt::from(c), BigInt::from(total)))
        .collect()
}

/// A triple `(x, y, z)` with `xy` the only edge among them, if any.
pub fn find_induced_cocherry(g: &Graph) -> Option<[usize; 3]> {
    let n = g.order();
    for x in 0..n {
        for y in BitIter(g.neighbors(x) >> x >> 1).map(|k| x + 1 + k) {
            let outside = g.full_mask() & !(g.neighbors(x) | g.neighbors(y)) & !(1 << x | 1 << y);
            if outside != 0 {
                return Some([x, y, outside.trailing_zeros() as usize]);
            }
        }
    }
    None
}

/// Part sizes (in order of each part's smallest vertex) if `g` is complete
/// multipartite, using non-adjacency as the equivalence relation.
pub fn multipartite_parts(g: &Graph) -> Option<PartVector> {
    let n = g.order();
    if n == 0 {
        return Some(PartVector::new(vec![0]));
    }
    let mut assigned = 0u32;
    let mut parts = Vec::new();
    for v in 0..n {
        if assigned >> v & 1 == 1 {
            continue;
        }
        let class = g.full_mask() & !g.neighbors(v);
        // the class must be independent and every outside vertex adjacent to all of it
        for u in BitIter(class) {
            if g.neighbors(u) & class != 0 || g.full_mask() & !g.neighbors(u) != class {
                return None;
            }
        }
        assigned |= class;
        parts.push(class.count_ones() as u64);
    }
    Some(PartVector::new(parts))
}

/// Size of a largest clique, by branch and bound on bitsets.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.full_mask(), &mut best);
    best
}

/// `true` iff `g` has no clique on `q` vertices.
pub fn is_kq_free(g: &Graph, q: usize) -> bool {
    !contains_clique_in(g, g.full_mask(), q)
}

pub(crate) fn contains_clique_in(g: &Graph, cand: u32, q: usize) -> bool {
    if q == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < q {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        if (rest.count_ones() as usize) < q {
            return false;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if contains_clique_in(g, rest & g.neighbors(v), q - 1) {
            return true;
        }
    }
    false
}

/// Number of cliques on exactly `t` vertices.
pub fn count_cliques(g: &Graph, t: usize) -> u64 {
    fn rec(g: &Graph, cand: u32, t: usize) -> u64 {
        if t == 0 {
            return 1;
        }
        let mut rest = cand;
        let mut total = 0;
        while rest != 0 {
            if (rest.count_ones() as usize) < t {
                break;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += rec(g, rest & g.neighbors(v), t - 1);
        }
        total
    }
    rec(g, g.full_mask(), t)
}
