use super::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Sturm chain of the square-free part of `p`. Each remainder is divided
/// by its positive content only, so signs are the classical ones.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let p0 = p.square_free_part();
    if p0.degree().unwrap_or(0) == 0 {
        return vec![p0];
    }
    let mut chain = vec![p0.clone(), p0.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].sign_preserving_pseudo_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let r = Polynomial::from_coeffs(r.coeffs().iter().map(|a| -(a / &c)).collect());
        chain.push(r);
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign_of(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of `p` in the open ray `(a, +inf)`.
pub fn count_roots_above(p: &Polynomial, a: &Rational) -> usize {
    if p.is_zero() {
        panic!("the zero polynomial has infinitely many roots");
    }
    let chain = sturm_chain(p);
    let at_a = sign_changes(chain.iter().map(|q| sign_of(&q.eval(a))));
    let at_inf = sign_changes(chain.iter().map(Polynomial::sign_at_infinity));
    // a root exactly at `a` is not counted: V(a) already treats it as excluded
    at_a - at_inf
}

/// Number of distinct real roots of `p` in `[a, +inf)`.
pub fn count_roots_from(p: &Polynomial, a: &BigInt) -> usize {
    let x = Rational::from_integer(a.clone());
    let at = usize::from(p.eval(&x).is_zero());
    count_roots_above(p, &x) + at
}
