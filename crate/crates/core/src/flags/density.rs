use super::{Flag, Type};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::graphs::{subsets_of_size, BitIter};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest flag order [`enumerate_flags`] accepts.
pub const MAX_FLAG_ORDER: usize = 8;

/// Every `t`-flag on `n` vertices up to label-fixing isomorphism, sorted.
pub fn enumerate_flags(t: Type, n: usize) -> Result<Vec<Flag>> {
    let k = t.order();
    if n < k {
        return Err(Error::FlagTooSmall { flag: n, ty: k });
    }
    if n > MAX_FLAG_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_FLAG_ORDER,
        });
    }
    let theta: Vec<usize> = (0..k).collect();
    let mut level = vec![Flag::of_type(t)];
    for m in k..n {
        // every flag on m + 1 vertices loses a free vertex to one on m
        let next: BTreeSet<Flag> = level
            .par_iter()
            .flat_map_iter(|f| {
                let theta = &theta;
                (0..1u32 << m).map(move |mask| {
                    let g = f.graph().with_vertex(mask).expect("order within bounds");
                    Flag::canonical(t, &g, theta)
                })
            })
            .collect();
        level = next.into_iter().collect();
    }
    Ok(level)
}

fn check_type(a: &Flag, b: &Flag) -> Result<()> {
    if a.ty() == b.ty() {
        Ok(())
    } else {
        Err(Error::TypeMismatch)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The flag induced on the labelled vertices of `g` plus the free vertices
/// in `mask` (bits index vertices of `g`).
fn restrict(g: &Flag, mask: u32) -> Flag {
    let k = g.ty().order();
    let verts: Vec<usize> = (0..k).chain(BitIter(mask)).collect();
    let theta: Vec<usize> = (0..k).collect();
    Flag::canonical(g.ty(), &g.graph().induced(&verts), &theta)
}

/// Free vertices of `g` as a bitmask.
fn free_mask(g: &Flag) -> u32 {
    let k = g.ty().order();
    g.graph().full_mask() & !((1u32 << k) - 1)
}

/// Subsets of the free vertices of `g` with `size` elements, as masks.
fn free_subsets(within: u32, size: usize) -> Vec<u32> {
    let slots: Vec<usize> = BitIter(within).collect();
    subsets_of_size(slots.len(), size)
        .into_iter()
        .map(|s| BitIter(s).fold(0u32, |acc, i| acc | 1 << slots[i]))
        .collect()
}

/// Probability that a uniform random `(|H| - k)`-set of free vertices of
/// `g`, together with its labelled vertices, induces `h`. Zero when `g` is
/// too small.
pub fn flag_density(h: &Flag, g: &Flag) -> Result<Rational> {
    check_type(h, g)?;
    if g.order() < h.order() {
        return Ok(Rational::from_integer(0.into()));
    }
    let m = h.free_vertices();
    let subsets = free_subsets(free_mask(g), m);
    let hits = subsets.iter().filter(|&&s| restrict(g, s) == *h).count();
    Ok(Rational::new(hits.into(), binomial(g.free_vertices(), m)))
}

/// Probability that two disjoint uniform random sets of free vertices of
/// `g`, of sizes `|H| - k` and `|J| - k`, induce `h` and `j` respectively.
pub fn joint_density(h: &Flag, j: &Flag, g: &Flag) -> Result<Rational> {
    check_type(h, g)?;
    check_type(j, g)?;
    let (mh, mj) = (h.free_vertices(), j.free_vertices());
    let needed = g.ty().order() + mh + mj;
    if needed > g.order() {
        return Err(Error::SizeOverflow {
            needed,
            available: g.order(),
        });
    }
    let free = free_mask(g);
    let mut hits = 0u64;
    for x in free_subsets(free, mh) {
        if restrict(g, x) != *h {
            continue;
        }
        hits += free_subsets(free & !x, mj)
            .into_iter()
            .filter(|&y| restrict(g, y) == *j)
            .count() as u64;
    }
    let total = binomial(g.free_vertices(), mh) * binomial(g.free_vertices() - mh, mj);
    Ok(Rational::new(hits.into(), total))
}
