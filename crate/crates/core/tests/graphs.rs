mod common;

use common::{all_labelled, permutations, random_graph, rng};
use p3cert::exactmath::{ratio, Rational};
use p3cert::graphs::{
    canonical_form, canonical_form_bruteforce, count_subgraphs, enumerate_graphs, f4_basis,
    find_induced_cocherry, from_graph6, induced_density, multipartite_parts, named, to_graph6,
};
use p3cert::turan::{count_p3_fast, p3_vertex_sets};
use rand::Rng;

#[test]
fn canonical_form_is_permutation_invariant() {
    let mut rng = rng(1);
    for i in 0..100 {
        let n = 4 + i % 3;
        let g = random_graph(&mut rng, n, 0.5);
        let c = canonical_form(&g).graph;
        assert_eq!(canonical_form(&c).graph, c);
        assert_eq!(canonical_form_bruteforce(&g), canonical_form_bruteforce(&c));
        for perm in permutations(n) {
            assert_eq!(canonical_form(&g.permute(&perm)).graph, c, "{g} under {perm:?}");
        }
    }
}

#[test]
fn class_counts() {
    let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
    for (n, &k) in expected.iter().enumerate() {
        assert_eq!(enumerate_graphs(n).unwrap().len(), k, "n = {n}");
    }
}

#[test]
fn graph6_round_trip() {
    let mut rng = rng(2);
    for _ in 0..300 {
        let n = rng.gen_range(0..=32);
        let g = random_graph(&mut rng, n, 0.4);
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn law_of_total_probability() {
    let basis = f4_basis();
    let mut rng = rng(3);
    for _ in 0..40 {
        let n = rng.gen_range(4..=8);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let c4 = Rational::from_integer(common::choose(n as u64, 4).into());
        for t in basis.graphs() {
            let lhs = Rational::from_integer(count_subgraphs(t, &g).into()) / &c4;
            let rhs: Rational = basis
                .graphs()
                .iter()
                .map(|f| induced_density(f, &g) * Rational::from_integer(count_subgraphs(t, f).into()))
                .sum();
            assert_eq!(lhs, rhs, "T = {t}, G = {g}");
        }
    }
}

#[test]
fn chain_rule() {
    let level3 = enumerate_graphs(3).unwrap();
    let level4 = enumerate_graphs(4).unwrap();
    let mut rng = rng(4);
    for _ in 0..40 {
        let n = rng.gen_range(4..=7);
        let g = random_graph(&mut rng, n, 0.5);
        for f in level3.graphs() {
            let direct = induced_density(f, &g);
            let via: Rational = level4
                .graphs()
                .iter()
                .map(|h| induced_density(f, h) * induced_density(h, &g))
                .sum();
            assert_eq!(direct, via);
        }
        let total: Rational = level4.graphs().iter().map(|h| induced_density(h, &g)).sum();
        assert_eq!(total, ratio(1, 1));
    }
}

#[test]
fn cocherry_free_iff_complete_multipartite() {
    for n in 1..=6 {
        for g in all_labelled(n) {
            assert_eq!(find_induced_cocherry(&g).is_none(), multipartite_parts(&g).is_some(), "{g}");
        }
    }
    for g in enumerate_graphs(7).unwrap().graphs() {
        assert_eq!(find_induced_cocherry(g).is_none(), multipartite_parts(g).is_some(), "{g}");
    }
    let cc = named::co_cherry();
    assert!(find_induced_cocherry(&cc).is_some());
}

#[test]
fn fast_p3_count_matches_brute_force() {
    let p3 = named::p3();
    for n in 0..=7 {
        for g in enumerate_graphs(n).unwrap().graphs() {
            assert_eq!(count_p3_fast(g), count_subgraphs(&p3, g), "{g}");
        }
    }
    let mut rng = rng(5);
    for _ in 0..1000 {
        let n = rng.gen_range(4..=20);
        let p = rng.gen_range(0.05..0.95);
        let g = random_graph(&mut rng, n, p);
        let fast = count_p3_fast(&g);
        assert_eq!(fast, count_subgraphs(&p3, &g), "{g}");
        assert_eq!(fast, p3_vertex_sets(&g).len() as u64);
    }
}
