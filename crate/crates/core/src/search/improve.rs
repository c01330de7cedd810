use crate::graphs::{is_kq_free, multipartite_parts, Graph};
use crate::turan::{clone_replace, count_p3_fast};

/// Hill climbing on `nu(P3, .)` over `K_{r+1}`-free graphs.
///
/// Moves are every clone-and-replace `(u, v)`; on a complete multipartite
/// graph with fewer than `r` parts, moving a vertex into a new part of its
/// own is also tried. The best strictly improving move is taken (first in
/// `(u, v)` order on ties) until none is left.
pub fn local_improve(g: &Graph, r: usize) -> Graph {
    let n = g.order();
    let mut cur = *g;
    let mut val = count_p3_fast(&cur);
    loop {
        let mut best: Option<(u64, Graph)> = None;
        let mut consider = |h: Graph| {
            if !is_kq_free(&h, r + 1) {
                return;
            }
            let c = count_p3_fast(&h);
            if c > val && best.as_ref().is_none_or(|(b, _)| c > *b) {
                best = Some((c, h));
            }
        };
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    consider(clone_replace(&cur, u, v).expect("distinct vertices in range"));
                }
            }
        }
        if let Some(parts) = multipartite_parts(&cur) {
            if parts.parts().iter().filter(|&&s| s > 0).count() < r {
                for v in 0..n {
                    let mut h = cur;
                    h.set_neighbors(v, cur.full_mask() & !(1 << v));
                    consider(h);
                }
            }
        }
        match best {
            Some((c, h)) => {
                cur = h;
                val = c;
            }
            None => return cur,
        }
    }
}
