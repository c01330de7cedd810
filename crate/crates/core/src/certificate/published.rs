//! Printed closed forms, transcribed verbatim in the pinned `F0..F10` order
//! (F6 the path on four vertices, F7 the paw). Everything here is a
//! reference value to compare against; nothing is derived.

use crate::exactmath::{Polynomial, RationalFunction};

fn p(desc: &[i64]) -> Polynomial {
    Polynomial::from_desc(desc)
}

fn rf(num: Polynomial, den: Polynomial) -> RationalFunction {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

fn poly(desc: &[i64]) -> RationalFunction {
    RationalFunction::from_poly(p(desc))
}

/// `3r^5 - 11r^4 + 9r^3`, the common denominator of the table.
fn d5() -> Polynomial {
    p(&[3, -11, 9, 0, 0, 0])
}

fn r_minus(a: i64) -> Polynomial {
    p(&[1, -a])
}

fn zero() -> RationalFunction {
    RationalFunction::zero()
}

/// `6 [[((r-1) A - B)^2]]` over the first type.
pub fn p1_expansion() -> Vec<RationalFunction> {
    let mut v = vec![zero(); 11];
    v[0] = poly(&[6, -12, 6]);
    v[1] = poly(&[1, -2, 1]);
    v[2] = poly(&[-1, 1]);
    v[3] = poly(&[-3, 3]);
    v[8] = poly(&[2]);
    v[9] = poly(&[1]);
    v
}

/// `6 [[(C - D)^2]]` over the second type.
pub fn p2_expansion() -> Vec<RationalFunction> {
    let mut v = vec![zero(); 11];
    v[3] = poly(&[3]);
    v[7] = poly(&[1]);
    v[6] = poly(&[-1]);
    v[8] = poly(&[-4]);
    v
}

/// `6 [[((r-2) C + (r-2) D - 2E)^2]]` over the second type.
pub fn p3_expansion() -> Vec<RationalFunction> {
    let mut v = vec![zero(); 11];
    v[3] = poly(&[3, -12, 12]);
    v[7] = poly(&[1, -8, 12]);
    v[6] = poly(&[1, -6, 12]);
    v[8] = poly(&[4, -16, 16]);
    v[9] = poly(&[-8, 20]);
    v[10] = poly(&[24]);
    v
}

/// `(r^3 - 6r^2 + 11r - 6) / r^3`, the clique-density bound for `K4`.
pub fn zykov_bound() -> RationalFunction {
    rf(p(&[1, -6, 11, -6]), p(&[1, 0, 0, 0]))
}

/// Coefficient of `K4` in the slack term.
pub fn p0_k4_coefficient() -> RationalFunction {
    rf(p(&[-6, 11, -6]), p(&[1, 0, 0, 0]))
}

pub fn weights() -> [RationalFunction; 4] {
    [
        rf(p(&[18, -36, 18]), p(&[3, -11, 9])),
        rf(p(&[3, -10, 7, 0]), d5()),
        rf(p(&[9, -32, 25, 0, 0, 0]), d5().scale(&4.into())),
        rf(p(&[15, -24, 7, 0]), d5().scale(&4.into())),
    ]
}

/// `12 ((r - 1) / r)^3`.
pub fn opt() -> RationalFunction {
    rf(r_minus(1).pow(3).scale(&12.into()), p(&[1, 0, 0, 0]))
}

/// The printed coefficient table `C_F0 .. C_F10`.
pub fn coefficient_table() -> Vec<RationalFunction> {
    let cube = r_minus(1).pow(3);
    let c1 = rf(&p(&[21, -97, 108]) * &cube, d5());
    let c2 = rf(&p(&[18, -111, 205, -108]) * &r_minus(1).pow(2), d5());
    let c4 = rf(&(&cube * &r_minus(2)) * &r_minus(3).scale(&18.into()), d5());
    let c6 = rf(p(&[45, -351, 1035, -1389, 870, -216]), d5().scale(&2.into()));
    let c7 = rf(&p(&[30, -180, 371, -327, 108]) * &r_minus(1), d5());
    let o = opt();
    vec![
        o.clone(),
        c1,
        c2,
        o.clone(),
        c4.clone(),
        c4,
        c6,
        c7,
        o.clone(),
        o.clone(),
        o,
    ]
}

/// Upper bound on the path count through a vertex of the first kind,
/// in units of `n^3 / 6`.
pub fn delta1() -> RationalFunction {
    // 12 - 45/r + 111/(2r^2) - 27/(2r^3) - 21/r^4 + 24/r^5 + 3/(2r^6) - 3/(2r^7), times 2r^7
    rf(p(&[24, -90, 111, -27, -42, 48, 3, -3]), p(&[2, 0, 0, 0, 0, 0, 0, 0]))
}

/// Same for a vertex of the second kind.
pub fn delta2() -> RationalFunction {
    // 12 - 54/r + 78/r^2 - 96/r^4 + 72/r^5 + 24/r^6 - 24/r^7, times r^7
    rf(p(&[12, -54, 78, 0, -96, 72, 24, -24]), p(&[1, 0, 0, 0, 0, 0, 0, 0]))
}

/// `9/r - 39/(2r^2)`.
pub fn bound1() -> RationalFunction {
    rf(p(&[18, -39]), p(&[2, 0, 0]))
}

/// `18/r - 42/r^2 - 12/r^3`, the form of the displayed inequality.
pub fn bound2_displayed() -> RationalFunction {
    rf(p(&[18, -42, -12]), p(&[1, 0, 0, 0]))
}

/// `18/r - 48/r^2 - 12/r^3`, the form used in the closing step.
pub fn bound2_closing() -> RationalFunction {
    rf(p(&[18, -48, -12]), p(&[1, 0, 0, 0]))
}

/// `1/r^4`.
pub fn vertex_threshold() -> RationalFunction {
    rf(p(&[1]), p(&[1, 0, 0, 0, 0]))
}

/// Indices of the printed tight set.
pub const TIGHT_SET: [usize; 5] = [0, 3, 8, 9, 10];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn transcription_spot_checks() {
        let c = coefficient_table();
        assert_eq!(c.len(), 11);
        let four = ratio(4, 1);
        assert_eq!(c[0].eval(&four).unwrap(), ratio(81, 16));
        assert_eq!(weights()[0].eval(&four).unwrap(), ratio(162, 13));
        assert_eq!(
            c[6].eval(&four).unwrap(),
            ratio(
                45 * 1024 - 351 * 256 + 1035 * 64 - 1389 * 16 + 870 * 4 - 216,
                2 * (3 * 1024 - 11 * 256 + 9 * 64)
            )
        );
        assert_eq!(
            weights()[2].eval(&four).unwrap(),
            ratio(9 * 1024 - 32 * 256 + 25 * 64, 4 * (3 * 1024 - 11 * 256 + 9 * 64))
        );
        // the displayed differences
        let r = RationalFunction::r();
        let one = RationalFunction::one();
        let inv = |k: u32| one.checked_div(&r.pow(k)).unwrap();
        let lhs = &opt() - &delta1();
        let rhs = &bound1() + &(&(&(&inv(3).scale_int(3, 2) + &inv(4).scale_int(21, 1)) - &inv(5).scale_int(24, 1))
            - &inv(6).scale_int(3, 2))
            + &inv(7).scale_int(3, 2);
        assert_eq!(lhs, rhs);
    }

    trait ScaleInt {
        fn scale_int(&self, a: i64, b: i64) -> RationalFunction;
    }

    impl ScaleInt for RationalFunction {
        fn scale_int(&self, a: i64, b: i64) -> RationalFunction {
            self * &RationalFunction::from_rational(&ratio(a, b))
        }
    }
}
