mod common;

use common::{random_graph, rng};
use p3cert::exactmath::{ratio, Rational, RationalFunction};
use p3cert::flags::{
    enumerate_flags, flag_density, flag_product, joint_density, unlabel, Flag, FlagVector, Type,
};
use p3cert::graphs::{induced_density, Graph};
use rand::Rng;

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

/// A random graph on `n` vertices whose first `k` vertices carry `ty`.
fn random_flag(rng: &mut rand_chacha::ChaCha8Rng, ty: Type, n: usize) -> Flag {
    let k = ty.order();
    let mut g = random_graph(rng, n, 0.5);
    for u in 0..k {
        for v in u + 1..k {
            if ty.graph().has_edge(u, v) {
                g.add_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
        }
    }
    Flag::from_labelled_prefix(ty, &g).unwrap()
}

fn types() -> [Type; 3] {
    [Type::empty(), Type::sigma1(), Type::sigma2()]
}

#[test]
fn densities_sum_to_one() {
    let mut rng = rng(10);
    for ty in types() {
        for level in ty.order().max(1)..=4 {
            let flags = enumerate_flags(ty, level).unwrap();
            for _ in 0..10 {
                let n = rng.gen_range(level..=7);
                let g = random_flag(&mut rng, ty, n);
                let total: Rational = flags.iter().map(|h| flag_density(h, &g).unwrap()).sum();
                assert_eq!(total, ratio(1, 1), "{ty:?} level {level} on {g}");
            }
        }
    }
}

#[test]
fn joint_density_by_hand() {
    let ty = Type::sigma2();
    let level = enumerate_flags(ty, 3).unwrap();
    let mut rng = rng(11);
    for _ in 0..20 {
        let g = random_flag(&mut rng, ty, 5);
        for h in &level {
            for j in &level {
                // ordered pairs of distinct free vertices
                let mut hits = 0i64;
                for x in 2..5 {
                    for y in 2..5 {
                        if x == y {
                            continue;
                        }
                        let fx = Flag::new(ty, &g.graph().induced(&[0, 1, x]), &[0, 1]).unwrap();
                        let fy = Flag::new(ty, &g.graph().induced(&[0, 1, y]), &[0, 1]).unwrap();
                        hits += i64::from(fx == *h && fy == *j);
                    }
                }
                assert_eq!(joint_density(h, j, &g).unwrap(), ratio(hits, 6));
            }
        }
    }
}

#[test]
fn product_is_joint_density() {
    let ty = Type::sigma2();
    let level = enumerate_flags(ty, 3).unwrap();
    let mut rng = rng(12);
    for _ in 0..10 {
        let n = rng.gen_range(4..=7);
        let g = random_flag(&mut rng, ty, n);
        for h in &level {
            for j in &level {
                let prod = flag_product(&FlagVector::from_flag(*h), &FlagVector::from_flag(*j)).unwrap();
                let via: Rational = prod
                    .iter()
                    .map(|(f, c)| c.eval_int(0).unwrap() * flag_density(f, &g).unwrap())
                    .sum();
                assert_eq!(via, joint_density(h, j, &g).unwrap());
            }
        }
    }
}

#[test]
fn product_error_is_at_most_one_over_free_vertices() {
    // one free vertex each: with and without replacement differ by <= 1/(n - k)
    let ty = Type::sigma2();
    let level = enumerate_flags(ty, 3).unwrap();
    let mut rng = rng(13);
    for _ in 0..40 {
        let n = rng.gen_range(4..=10);
        let g = random_flag(&mut rng, ty, n);
        for h in &level {
            for j in &level {
                let indep = flag_density(h, &g).unwrap() * flag_density(j, &g).unwrap();
                let gap = indep - joint_density(h, j, &g).unwrap();
                let tol = ratio(1, n as i64 - 2);
                assert!(gap <= tol && -gap <= tol);
            }
        }
    }
}

fn random_vector(rng: &mut rand_chacha::ChaCha8Rng, level: &[Flag], ty: Type) -> FlagVector {
    let mut v = FlagVector::zero(ty);
    for f in level {
        let c = rng.gen_range(-4i64..=4);
        if c != 0 {
            v.add_term(*f, RationalFunction::from_int(c)).unwrap();
        }
    }
    v
}

#[test]
fn product_commutative_and_bilinear() {
    let ty = Type::sigma1();
    let level = enumerate_flags(ty, 3).unwrap();
    let mut rng = rng(14);
    let r = RationalFunction::r();
    for _ in 0..10 {
        let a = random_vector(&mut rng, &level, ty);
        let b = random_vector(&mut rng, &level, ty);
        let c = random_vector(&mut rng, &level, ty);
        let ab = flag_product(&a, &b).unwrap();
        assert_eq!(ab, flag_product(&b, &a).unwrap());
        let left = flag_product(&a.scale(&r).add(&c).unwrap(), &b).unwrap();
        let right = ab.scale(&r).add(&flag_product(&c, &b).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn unlabelling_averages_over_labellings() {
    let ty = Type::sigma2();
    let level = enumerate_flags(ty, 3).unwrap();
    let mut rng = rng(15);
    for _ in 0..10 {
        let n = rng.gen_range(3..=7);
        let g: Graph = random_graph(&mut rng, n, 0.6);
        for f in &level {
            let mut sum = zero();
            for u in 0..n {
                for v in 0..n {
                    if u == v || !g.has_edge(u, v) {
                        continue;
                    }
                    // relabel so u, v come first
                    let mut order = vec![u, v];
                    order.extend((0..n).filter(|&x| x != u && x != v));
                    let rooted = Flag::from_labelled_prefix(ty, &g.induced(&order)).unwrap();
                    sum += flag_density(f, &rooted).unwrap();
                }
            }
            let expected = sum / Rational::from_integer(((n * (n - 1)) as i64).into());
            let unlabelled: Rational = unlabel(&FlagVector::from_flag(*f))
                .iter()
                .map(|(h, c)| c.eval_int(0).unwrap() * induced_density(h.graph(), &g))
                .sum();
            assert_eq!(unlabelled, expected, "{f} in {g}");
        }
    }
}
