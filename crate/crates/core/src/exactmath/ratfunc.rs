use super::{Polynomial, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Quotient of integer polynomials in `r`, kept in a canonical form:
///
/// * numerator and denominator are coprime,
/// * the denominator is `q * D` with `D` primitive with positive leading
///   coefficient and `q > 0`, and the numerator is `p * N` with `N`
///   primitive and `gcd(p, q) = 1`,
/// * zero is `0 / 1`.
///
/// Two equal functions therefore have identical fields and identical text.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        } else {
            (num, den)
        };
        let mut cn = num.content();
        let mut cd = den.content();
        if den.leading().unwrap().is_negative() {
            cd = -cd;
        }
        let n_prim = Polynomial::from_coeffs(num.coeffs().iter().map(|c| c / &cn).collect());
        let d_prim = Polynomial::from_coeffs(den.coeffs().iter().map(|c| c / &cd).collect());
        // scalar cn / cd, reduced with positive denominator
        if cd.is_negative() {
            cn = -cn;
            cd = -cd;
        }
        let h = cn.gcd(&cd);
        let (p, q) = (cn / &h, cd / &h);
        RationalFunction {
            num: n_prim.scale(&p),
            den: d_prim.scale(&q),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// The symbol `r`.
    pub fn r() -> Self {
        Self::from_poly(Polynomial::r())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::canonical(p, Polynomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_rational(c: &Rational) -> Self {
        Self::canonical(
            Polynomial::constant(c.numer().clone()),
            Polynomial::constant(c.denom().clone()),
        )
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::canonical(self.num.pow(e), self.den.pow(e))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Result<Rational> {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::canonical(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::canonical(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::canonical(&self.num * &o.num, &self.den * &o.den)
    }
}

/// Panics on division by the zero function; use
/// [`RationalFunction::checked_div`] when that can happen.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self.checked_div(o).expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction {
                (&self).$m(&o)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: &RationalFunction) -> RationalFunction {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

/// `N` alone when the denominator is 1, otherwise `(N)/(D)`, with both
/// polynomials in the [`Polynomial`] grammar.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Polynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeffs()[0].is_one()
    }
}

impl serde::Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses sums of terms `c`, `c*r`, `c*r^k`, `r^k`, `-r`, ... in any
    /// order; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in t.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = Polynomial::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (coef, power) = if let Some(pos) = body.find('r') {
                let c = &body[..pos];
                let c = c.strip_suffix('*').unwrap_or(c);
                let c = if c.is_empty() {
                    BigInt::one()
                } else {
                    BigInt::from_str(c).map_err(|e| Error::Parse(format!("{c:?}: {e}")))?
                };
                let rest = &body[pos + 1..];
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|k| k.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent in {body:?}")))?
                };
                (c, k)
            } else {
                (
                    BigInt::from_str(body).map_err(|e| Error::Parse(format!("{body:?}: {e}")))?,
                    0,
                )
            };
            let mut coeffs = vec![BigInt::zero(); power + 1];
            coeffs[power] = if neg { -coef } else { coef };
            acc = &acc + &Polynomial::from_coeffs(coeffs);
        }
        Ok(acc)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    /// Accepts the [`fmt::Display`] output: `N` or `(N)/(D)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (n, d) = rest
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("expected (N)/(D): {s:?}")))?;
            let d = d
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed denominator: {s:?}")))?;
            Self::new(n.parse()?, d.parse()?)
        } else {
            Ok(Self::from_poly(t.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_desc(n), Polynomial::from_desc(d)).unwrap()
    }

    #[test]
    fn opt_shape() {
        let x = rf(&[1, -1], &[1, 0]);
        let opt = &(&(&x * &x) * &x) * &RationalFunction::from_int(12);
        assert_eq!(opt.numer(), &Polynomial::from_desc(&[1, -1]).pow(3).scale(&12.into()));
        assert_eq!(opt.denom(), &Polynomial::from_desc(&[1, 0, 0, 0]));
        assert_eq!(opt.to_string(), "(12*r^3 - 36*r^2 + 36*r - 12)/(r^3)");
    }

    #[test]
    fn canonical_scalars() {
        // (9r^5 - 32r^4 + 25r^3) / (4(3r^5 - 11r^4 + 9r^3))
        let p2 = rf(&[9, -32, 25, 0, 0, 0], &[12, -44, 36, 0, 0, 0]);
        assert_eq!(p2.to_string(), "(9*r^2 - 32*r + 25)/(12*r^2 - 44*r + 36)");
        assert_eq!(rf(&[2], &[-4]).to_string(), "(-1)/(2)");
        assert_eq!(rf(&[-6, 0], &[-3]).to_string(), "2*r");
        assert_eq!(rf(&[0], &[5, 1]), RationalFunction::zero());
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
        assert!(RationalFunction::one().checked_div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn eval_and_poles() {
        let p0 = rf(&[18, -36, 18], &[3, -11, 9]);
        assert_eq!(p0.eval_int(4).unwrap(), Rational::new(162.into(), 13.into()));
        let opt = rf(&[12, -36, 36, -12], &[1, 0, 0, 0]);
        assert_eq!(opt.eval_int(3).unwrap(), Rational::new(32.into(), 9.into()));
        assert!(rf(&[1], &[1, -2]).eval_int(2).is_err());
        assert!(rf(&[1, -5], &[1, 7]).eval_int(5).unwrap().is_zero());
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in [
            "(12*r^3 - 36*r^2 + 36*r - 12)/(r^3)",
            "-r^2 + 1",
            "0",
            "(-1)/(2)",
            "(9*r^2 - 32*r + 25)/(12*r^2 - 44*r + 36)",
        ] {
            assert_eq!(s.parse::<RationalFunction>().unwrap().to_string(), s);
        }
        assert!("3 - r*2".parse::<RationalFunction>().is_err());
        assert_eq!("2*r - 3".parse::<Polynomial>().unwrap(), Polynomial::from_desc(&[2, -3]));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-6i64..=6, 0..4)
            .prop_map(|c| Polynomial::from_coeffs(c.into_iter().map(BigInt::from).collect()))
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a - &a, RationalFunction::zero());
            if !a.is_zero() {
                prop_assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
            }
        }

        #[test]
        fn eval_commutes(a in arb_rf(), b in arb_rf(), xn in -20i64..20, xd in 1i64..5) {
            let x = Rational::new(xn.into(), xd.into());
            if let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) {
                prop_assert_eq!((&a + &b).eval(&x).unwrap(), &va + &vb);
                prop_assert_eq!((&a - &b).eval(&x).unwrap(), &va - &vb);
                prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
                if !vb.is_zero() && !b.is_zero() {
                    prop_assert_eq!(a.checked_div(&b).unwrap().eval(&x).unwrap(), &va / &vb);
                }
            }
        }

        #[test]
        fn text_roundtrip(a in arb_rf()) {
            prop_assert_eq!(a.to_string().parse::<RationalFunction>().unwrap(), a);
        }
    }
}
