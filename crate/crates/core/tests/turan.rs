mod common;

use common::{partitions, random_graph, random_kq_free, rng};
use p3cert::graphs::is_kq_free;
use p3cert::search::local_improve;
use p3cert::turan::{
    clone_replace, count_p3_fast, delta_p3, multipartite_p3, pair_p3, per_vertex_p3, turan_graph,
    PartVector, TuranSpec,
};
use rand::Rng;

#[test]
fn multipartite_formula_matches_materialised_count() {
    for n in 1..=12 {
        for p in partitions(n) {
            let parts = PartVector::new(p);
            let g = parts.to_graph().unwrap();
            assert_eq!(multipartite_p3(&parts), count_p3_fast(&g) as u128, "{parts:?}");
        }
    }
}

#[test]
fn delta_closed_form_matches_recount() {
    let mut published_agrees = 0;
    let mut total = 0;
    for n in 1..=12 {
        for mut p in partitions(n) {
            p.push(0);
            let parts = PartVector::new(p);
            for from in 0..parts.len() {
                if parts.parts()[from] == 0 {
                    continue;
                }
                for to in 0..parts.len() {
                    if to == from {
                        continue;
                    }
                    let d = delta_p3(&parts, from, to).unwrap();
                    assert_eq!(d.recount, d.closed_form, "{parts:?} {from} -> {to}");
                    total += 1;
                    published_agrees += usize::from(d.recount == d.published_form);
                    // with no bystander parts the short form is exact
                    if parts.parts().iter().filter(|&&s| s > 0).count() <= 2 && parts.parts()[to] > 0 {
                        let others: u64 = parts
                            .parts()
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != from && i != to)
                            .map(|(_, &s)| s)
                            .sum();
                        if others == 0 {
                            assert_eq!(d.recount, d.published_form, "{parts:?}");
                        }
                    }
                }
            }
        }
    }
    assert!(published_agrees < total);
}

#[test]
fn balanced_parts_dominate() {
    for n in 1..=12u64 {
        for r in 1..=12usize {
            let best = multipartite_p3(&PartVector::balanced(r, n));
            for p in partitions(n).into_iter().filter(|p| p.len() <= r) {
                let mut p = p;
                p.resize(r, 0);
                let parts = PartVector::new(p);
                let v = multipartite_p3(&parts);
                assert!(v <= best, "{parts:?}");
                // below four vertices there are no paths at all
                if n >= 4 && r <= n as usize {
                    assert_eq!(v == best, parts.is_balanced(), "{parts:?}");
                }
            }
        }
    }
}

#[test]
fn handshake() {
    let mut rng = rng(20);
    for _ in 0..200 {
        let n = rng.gen_range(1..=14);
        let g = random_graph(&mut rng, n, 0.5);
        let sum: u64 = (0..n).map(|v| per_vertex_p3(&g, v)).sum();
        assert_eq!(sum, 4 * count_p3_fast(&g));
    }
}

#[test]
fn clone_replace_keeps_clique_bound() {
    let mut rng = rng(21);
    for _ in 0..500 {
        let g = random_kq_free(&mut rng, 8, 5, 0.8);
        let u = rng.gen_range(0..8);
        let v = (u + rng.gen_range(1..8)) % 8;
        let h = clone_replace(&g, u, v).unwrap();
        assert!(is_kq_free(&h, 5), "{g} {u} {v}");
        assert_eq!(h.neighbors(v), h.neighbors(u) & !(1 << v));
        // exact change, and the shorter form is a lower bound
        let before = count_p3_fast(&g) as i64;
        let lower = before + per_vertex_p3(&g, u) as i64 - pair_p3(&g, u, v) as i64 - per_vertex_p3(&g, v) as i64;
        let after = count_p3_fast(&h) as i64;
        assert_eq!(after, lower + pair_p3(&h, u, v) as i64);
        assert!(after >= lower);
    }
}

#[test]
fn local_improve_is_monotone() {
    let mut rng = rng(22);
    for _ in 0..500 {
        let r = rng.gen_range(2..=5);
        let n = rng.gen_range(r + 1..=9);
        let g = random_kq_free(&mut rng, n, r + 1, 0.6);
        let out = local_improve(&g, r);
        assert!(is_kq_free(&out, r + 1));
        assert!(count_p3_fast(&out) >= count_p3_fast(&g));
        assert_eq!(out.order(), n);
    }
}

#[test]
fn turan_graph_matches_parts() {
    for r in 1..=6 {
        for n in 0..=20u64 {
            let spec = TuranSpec::new(r, n).unwrap();
            let g = turan_graph(spec).unwrap();
            assert_eq!(count_p3_fast(&g) as u128, multipartite_p3(&spec.parts()));
            assert!(is_kq_free(&g, r + 1));
        }
    }
}
