use super::{enumerate_flags, joint_density, Flag, FlagVector, Type};
use crate::error::{Error, Result};
use crate::exactmath::{Rational, RationalFunction};
use crate::graphs::{canonical_form, GraphFamily};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Product of two flag vectors of the same type: bilinear extension of
/// `F1 * F2 = sum_F P(F1, F2; F) F` over flags on `|F1| + |F2| - k`
/// vertices.
pub fn flag_product(a: &FlagVector, b: &FlagVector) -> Result<FlagVector> {
    if a.ty() != b.ty() {
        return Err(Error::TypeMismatch);
    }
    let t = a.ty();
    let (Some(na), Some(nb)) = (a.order(), b.order()) else {
        return Ok(FlagVector::zero(t));
    };
    let level = enumerate_flags(t, na + nb - t.order())?;
    // basis products first, so repeated pairs are not recomputed
    let mut table: BTreeMap<(Flag, Flag), Vec<(Flag, Rational)>> = BTreeMap::new();
    let mut out = FlagVector::zero(t);
    for (f1, c1) in a.iter() {
        for (f2, c2) in b.iter() {
            let key = if f1 <= f2 { (*f1, *f2) } else { (*f2, *f1) };
            let terms = match table.get(&key) {
                Some(t) => t,
                None => {
                    let mut terms = Vec::new();
                    for f in &level {
                        let p = joint_density(&key.0, &key.1, f)?;
                        if !p.is_zero() {
                            terms.push((*f, p));
                        }
                    }
                    table.entry(key).or_insert(terms)
                }
            };
            let c = c1 * c2;
            for (f, p) in terms {
                out.add_term(*f, &c * &RationalFunction::from_rational(p))?;
            }
        }
    }
    Ok(out)
}

/// `q(F)`: the probability that a uniformly random injective labelling of
/// `k` vertices of the underlying graph reproduces the flag.
pub fn unlabel_factor(flag: &Flag) -> Rational {
    let k = flag.ty().order();
    let n = flag.order();
    let mut hits = 0u64;
    let mut total = 0u64;
    let mut theta = Vec::with_capacity(k);
    fn rec(flag: &Flag, theta: &mut Vec<usize>, k: usize, n: usize, hits: &mut u64, total: &mut u64) {
        if theta.len() == k {
            *total += 1;
            let g = flag.graph();
            if g.induced(theta) == *flag.ty().graph() && Flag::canonical(flag.ty(), g, theta) == *flag {
                *hits += 1;
            }
            return;
        }
        for v in 0..n {
            if !theta.contains(&v) {
                theta.push(v);
                rec(flag, theta, k, n, hits, total);
                theta.pop();
            }
        }
    }
    rec(flag, &mut theta, k, n, &mut hits, &mut total);
    Rational::new(BigInt::from(hits), BigInt::from(total))
}

/// Replaces every flag `F` by `q(F)` times its underlying graph.
pub fn unlabel(a: &FlagVector) -> FlagVector {
    let mut out = FlagVector::zero(Type::empty());
    for (f, c) in a.iter() {
        let q = unlabel_factor(f);
        let g = Flag::unlabelled(&canonical_form(f.graph()).graph);
        out.add_term(g, c * &RationalFunction::from_rational(&q)).expect("empty type");
    }
    out
}

/// `scale * unlabel(a * a)` for a combination of 3-vertex flags of a
/// 2-vertex type; the result lives on 4-vertex graphs.
pub fn square_expand(a: &FlagVector, scale: &RationalFunction) -> Result<FlagVector> {
    if a.ty().order() != 2 {
        return Err(Error::TypeMismatch);
    }
    if let Some(n) = a.order() {
        if n != 3 {
            return Err(Error::SizeOverflow { needed: n, available: 3 });
        }
    }
    Ok(unlabel(&flag_product(a, a)?).scale(scale))
}

/// Coefficients of an empty-type vector in the order of `family`. Fails if
/// the vector has support outside the family.
pub fn basis_coefficients(v: &FlagVector, family: &GraphFamily) -> Result<Vec<RationalFunction>> {
    if v.ty() != Type::empty() {
        return Err(Error::TypeMismatch);
    }
    let mut out = vec![RationalFunction::zero(); family.len()];
    for (f, c) in v.iter() {
        let i = family.index_of(f.graph()).ok_or(Error::SizeOverflow {
            needed: f.order(),
            available: family.order(),
        })?;
        out[i] = c.clone();
    }
    Ok(out)
}
