//! Exact arithmetic: big rationals, integer polynomials in `r`, rational
//! functions, and sign certificates on integer rays. No floating point.

mod poly;
mod positivity;
mod ratfunc;
pub mod sturm;

pub use poly::Polynomial;
pub use positivity::{positive_on_integer_ray, RayCertificate, RayMethod, RayVerdict, SCAN_WIDTH};
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the integer ratio `a / b`.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

/// Builds a rational function from descending integer coefficient lists.
pub fn rf_desc(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(Polynomial::from_desc(num), Polynomial::from_desc(den))
        .expect("nonzero denominator")
}

/// `a + b`, `a - b`, `a * b` or `a / b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith(
    a: &RationalFunction,
    b: &RationalFunction,
    op: ArithOp,
) -> crate::error::Result<RationalFunction> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub fn rf_eval(f: &RationalFunction, x: &Rational) -> crate::error::Result<Rational> {
    f.eval(x)
}
