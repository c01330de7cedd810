//! Sign certificates for rational functions on `[r0, +inf)`.
//!
//! First try: substitute `r = s + r0` and look at the coefficients. If
//! numerator and denominator come out with no sign changes the sign on the
//! whole ray is read off directly. Otherwise the numerator is split by
//! root multiplicity and Sturm sequences count the roots of odd
//! multiplicity on the ray, which are exactly the places the sign can
//! change. Either way the answer is decided.

use super::sturm::{count_roots_above, count_roots_from};
use super::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// How far past `r0` a counterexample is searched for among integers when
/// the numerator has no negative leading term.
pub const SCAN_WIDTH: i64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "r")]
pub enum RayVerdict {
    /// The function is identically zero.
    Zero,
    /// `f(r) > 0` for every real `r >= r0`.
    Positive,
    /// `f(r) >= 0` for every real `r >= r0`, with equality somewhere.
    Nonnegative,
    /// `f` is negative at this integer.
    FailsAt(i64),
    /// `f` is negative somewhere on the ray, but at no integer within
    /// `SCAN_WIDTH` of `r0`.
    FailsOffIntegers,
}

impl RayVerdict {
    pub fn is_nonnegative(&self) -> bool {
        matches!(self, RayVerdict::Zero | RayVerdict::Positive | RayVerdict::Nonnegative)
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, RayVerdict::Positive)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RayMethod {
    ShiftedCoefficients,
    Sturm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayCertificate {
    #[serde(flatten)]
    pub verdict: RayVerdict,
    pub method: RayMethod,
}

/// Sign of `f` on the real ray `[r0, +inf)`. Errors if the denominator
/// vanishes anywhere on the ray.
pub fn positive_on_integer_ray(f: &RationalFunction, r0: i64) -> Result<RayCertificate> {
    let a = BigInt::from(r0);
    let den = f.denom();
    if count_roots_from(den, &a) > 0 {
        return Err(Error::Pole(format!("denominator {den} vanishes on [{r0}, inf)")));
    }
    if f.is_zero() {
        return Ok(RayCertificate {
            verdict: RayVerdict::Zero,
            method: RayMethod::ShiftedCoefficients,
        });
    }
    // the denominator has constant sign on the ray
    let den_sign = den.eval_int(&a).signum();
    let num = f.numer().scale(&den_sign);

    if let Some(v) = shifted_check(&num, &a) {
        return Ok(RayCertificate {
            verdict: v,
            method: RayMethod::ShiftedCoefficients,
        });
    }
    Ok(RayCertificate {
        verdict: sturm_check(&num, &a),
        method: RayMethod::Sturm,
    })
}

/// All coefficients of `p(s + a)` non-negative means `p >= 0` for `s >= 0`,
/// and a positive constant term makes it strict.
fn shifted_check(p: &Polynomial, a: &BigInt) -> Option<RayVerdict> {
    let s = p.taylor_shift(a);
    if s.coeffs().iter().any(Signed::is_negative) {
        return None;
    }
    Some(if s.coeff(0).is_zero() {
        RayVerdict::Nonnegative
    } else {
        RayVerdict::Positive
    })
}

/// The sign of `p` on `[a, inf)` changes only at roots of odd
/// multiplicity, so `p >= 0` there iff it is positive at infinity and no
/// odd-multiplicity root lies in `(a, inf)`.
fn sturm_check(p: &Polynomial, a: &BigInt) -> RayVerdict {
    let x = Rational::from_integer(a.clone());
    let changes_sign = odd_multiplicity_factors(p)
        .iter()
        .any(|f| f.degree().unwrap_or(0) > 0 && count_roots_above(f, &x) > 0);
    if p.sign_at_infinity() < 0 || changes_sign {
        return find_negative_integer(p, a).map_or(RayVerdict::FailsOffIntegers, RayVerdict::FailsAt);
    }
    if count_roots_from(p, a) == 0 {
        RayVerdict::Positive
    } else {
        RayVerdict::Nonnegative
    }
}

/// Products of the roots of `p` of multiplicity 1, 3, 5, ...: with
/// `A_0 = p`, `A_{k+1} = gcd(A_k, A_k')`, `S_k = A_k / A_{k+1}` has the
/// roots of multiplicity `> k` and `S_k / S_{k+1}` those of multiplicity
/// exactly `k + 1`.
fn odd_multiplicity_factors(p: &Polynomial) -> Vec<Polynomial> {
    let mut s = Vec::new();
    let mut a = p.primitive_part();
    while a.degree().unwrap_or(0) > 0 {
        let b = a.gcd(&a.derivative());
        s.push(a.exact_div(&b).expect("gcd divides").primitive_part());
        a = b;
    }
    s.push(Polynomial::one());
    (0..s.len() - 1)
        .step_by(2)
        .map(|k| s[k].exact_div(&s[k + 1]).expect("nested square-free parts"))
        .collect()
}

/// First integer `x >= a` with `p(x) < 0`, searching out to where the sign
/// at infinity takes over if needed.
fn find_negative_integer(p: &Polynomial, a: &BigInt) -> Option<i64> {
    let start: i64 = a.try_into().ok()?;
    let mut x = start;
    let end = if p.sign_at_infinity() < 0 {
        // Cauchy bound: every root is below 1 + max |c_i / c_n|
        let lead = p.leading()?.abs();
        let bound: BigInt = p
            .coeffs()
            .iter()
            .map(|c| c.abs() / &lead + 2)
            .max()?;
        let b: i64 = bound.try_into().unwrap_or(i64::MAX / 2);
        (start + SCAN_WIDTH).max(b.saturating_add(start.abs()))
    } else {
        start + SCAN_WIDTH
    };
    while x <= end {
        if p.eval_int(&BigInt::from(x)).is_negative() {
            return Some(x);
        }
        x += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_desc(n), Polynomial::from_desc(d)).unwrap()
    }

    #[test]
    fn p1_weight_is_nonnegative() {
        let p1 = rf(&[3, -10, 7, 0], &[3, -11, 9, 0, 0, 0]);
        let c = positive_on_integer_ray(&p1, 4).unwrap();
        assert!(c.verdict.is_nonnegative());
        assert_eq!(c.verdict, RayVerdict::Positive);
    }

    #[test]
    fn endpoint_zero() {
        let c = positive_on_integer_ray(&rf(&[1, -4], &[1]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::Nonnegative);
        assert_eq!(c.method, RayMethod::ShiftedCoefficients);
        assert_eq!(
            positive_on_integer_ray(&RationalFunction::zero(), 4).unwrap().verdict,
            RayVerdict::Zero
        );
    }

    #[test]
    fn failures_are_located() {
        // r - 10 fails at 4
        let c = positive_on_integer_ray(&rf(&[1, -10], &[1]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::FailsAt(4));
        // (r - 6)^2 - 1/4... use 4r^2 - 48r + 143 = (2r - 11)(2r - 13): negative only at r = 6
        let c = positive_on_integer_ray(&rf(&[4, -48, 143], &[1]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::FailsAt(6));
        assert_eq!(c.method, RayMethod::Sturm);
        // negative leading term
        let c = positive_on_integer_ray(&rf(&[-1, 0, 2000], &[1]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::FailsAt(45));
    }

    #[test]
    fn sturm_proves_what_shifting_cannot() {
        // r^2 - 9r + 21 has no real roots but shifted at 4 gives s^2 - s + 1
        let c = positive_on_integer_ray(&rf(&[1, -9, 21], &[1]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::Positive);
        assert_eq!(c.method, RayMethod::Sturm);
        // double root inside the ray: (r - 6)^2 touches zero without a sign change
        let c = positive_on_integer_ray(&rf(&[1, -12, 36], &[1]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::Nonnegative);
        assert_eq!(c.method, RayMethod::Sturm);
    }

    #[test]
    fn poles_rejected() {
        assert!(positive_on_integer_ray(&rf(&[1], &[1, -7]), 4).is_err());
        assert!(positive_on_integer_ray(&rf(&[1], &[1, -4]), 4).is_err());
        // negative denominator without roots on the ray is fine
        let c = positive_on_integer_ray(&rf(&[-1], &[1, 0]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::FailsAt(4));
        let c = positive_on_integer_ray(&rf(&[-1], &[-1, 0]), 4).unwrap();
        assert_eq!(c.verdict, RayVerdict::Positive);
    }
}
