use p3cert::certificate::{
    self, assemble_published, build_certificate, finite_size_correction, published, verify_max, TightSet,
};
use p3cert::exactmath::{positive_on_integer_ray, ratio, Rational, RationalFunction};
use p3cert::graphs::{density_vector, enumerate_graphs, f4_basis, is_kq_free};
use p3cert::turan::{count_p3_fast, opt_density};
use rayon::prelude::*;

fn choose4(n: usize) -> Rational {
    Rational::from_integer(((n * (n - 1) * (n - 2) * (n - 3) / 24) as i64).into())
}

/// Largest `d(P3, G) - sum_i C_i(r) P(F_i, G)` over `K_{r+1}`-free `G` on `n`
/// vertices, checking convexity along the way.
fn worst_gap(r: u64, n: usize) -> Rational {
    let table = build_certificate().unwrap();
    let x = Rational::from_integer(r.into());
    let c = table.eval(&x).unwrap();
    let cmax = c.iter().max().unwrap().clone();
    assert_eq!(cmax, opt_density(r));
    let basis = f4_basis();
    enumerate_graphs(n)
        .unwrap()
        .graphs()
        .par_iter()
        .filter(|g| is_kq_free(g, r as usize + 1))
        .map(|g| {
            let dens = density_vector(&basis, g);
            let bound: Rational = c.iter().zip(&dens).map(|(a, b)| a * b).sum();
            assert!(bound <= cmax);
            Rational::from_integer(count_p3_fast(g).into()) / choose4(n) - bound
        })
        .max()
        .unwrap()
}

#[test]
fn bound_is_sound_on_small_graphs() {
    // worst gaps for r = 4, frozen
    let frozen = [ratio(111, 16), ratio(267, 80), ratio(577, 240), ratio(171, 80), ratio(171, 80)];
    for r in 4..=6u64 {
        for n in 4..=8usize {
            let gap = worst_gap(r, n);
            let eps = finite_size_correction(r, n as u64).unwrap();
            assert!(gap <= eps, "r = {r}, n = {n}: {gap} > {eps}");
            if r == 4 {
                assert_eq!(gap, frozen[n - 4], "n = {n}");
            }
        }
    }
}

#[test]
fn table_is_tight_exactly_on_the_pinned_set() {
    let table = build_certificate().unwrap();
    let tight = TightSet::of(&table);
    assert_eq!(tight.0.into_iter().collect::<Vec<_>>(), published::TIGHT_SET.to_vec());
    let opt = published::opt();
    for (i, c) in table.entries.iter().enumerate() {
        let cert = positive_on_integer_ray(&(&opt - c), 4).unwrap();
        assert!(cert.verdict.is_nonnegative(), "F{i}: {cert:?}");
    }
    for (j, w) in published::weights().iter().enumerate() {
        assert!(positive_on_integer_ray(w, 4).unwrap().verdict.is_nonnegative(), "p{j}");
    }
}

#[test]
fn derived_table_differs_from_print_only_at_the_path() {
    let table = build_certificate().unwrap();
    let printed = published::coefficient_table();
    let differing: Vec<usize> = (0..11).filter(|&i| table.entries[i] != printed[i]).collect();
    assert_eq!(differing, vec![6]);
    // the printed expansions do assemble to the printed table
    assert_eq!(assemble_published().entries, printed);
    // derived C_F6 in closed form
    let r = RationalFunction::r();
    let c = |k: i64| RationalFunction::from_int(k);
    let num = &(&r - &c(1))
        * &(&(&(&(&c(45) * &r.pow(4)) - &(&c(291) * &r.pow(3))) + &(&c(660) * &r.pow(2))) - &(&(&c(626) * &r) - &c(216)));
    let den = &(&c(2) * &r.pow(3)) * &(&(&(&c(3) * &r.pow(2)) - &(&c(11) * &r)) + &c(9));
    assert_eq!(table.entries[6], num.checked_div(&den).unwrap());
}

#[test]
fn max_scan() {
    let scan = verify_max(4, 300).unwrap();
    assert!(scan.max_holds() && scan.argmax_holds());
    assert_eq!(scan.per_r.len(), 297);
    assert!(verify_max(3, 10).is_err());
}

#[test]
fn closing_inequalities() {
    let checks = certificate::verify_closing_inequalities().unwrap();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c.holds), "{checks:?}");
}

#[test]
fn report_is_reproducible() {
    let a = serde_json::to_string(&certificate::certify(4, 50).unwrap()).unwrap();
    let b = serde_json::to_string(&certificate::certify(4, 50).unwrap()).unwrap();
    assert_eq!(a, b);
}
