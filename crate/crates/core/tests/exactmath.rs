use p3cert::exactmath::{
    positive_on_integer_ray, ratio, rf_arith, rf_desc, rf_eval, ArithOp, Rational, RationalFunction, RayVerdict,
};
use proptest::prelude::*;

fn rf() -> impl Strategy<Value = RationalFunction> {
    let coeffs = prop::collection::vec(-9i64..=9, 1..4);
    let den = prop::collection::vec(-9i64..=9, 1..3).prop_filter("nonzero", |d| d.iter().any(|&c| c != 0));
    (coeffs, den).prop_map(|(n, d)| rf_desc(&n, &d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in rf(), b in rf(), c in rf()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
        }
        // canonical: leading denominator coefficient positive
        prop_assert!(a.denom().leading().unwrap() > &0.into());
    }

    #[test]
    fn eval_commutes_with_arith(a in rf(), b in rf(), p in -50i64..50, q in 1i64..20) {
        let x = ratio(p, q);
        let (Ok(va), Ok(vb)) = (rf_eval(&a, &x), rf_eval(&b, &x)) else { return Ok(()); };
        for (op, v) in [
            (ArithOp::Add, Some(&va + &vb)),
            (ArithOp::Sub, Some(&va - &vb)),
            (ArithOp::Mul, Some(&va * &vb)),
            (ArithOp::Div, (vb != Rational::from_integer(0.into())).then(|| &va / &vb)),
        ] {
            let (Some(v), Ok(f)) = (v, rf_arith(&a, &b, op)) else { continue };
            prop_assert_eq!(rf_eval(&f, &x).unwrap(), v);
        }
    }

    #[test]
    fn display_parse_round_trip(a in rf()) {
        prop_assert_eq!(a.to_string().parse::<RationalFunction>().unwrap(), a);
    }
}

#[test]
fn ray_verdicts() {
    let sq = rf_desc(&[1, -8, 16], &[1]); // (r - 4)^2
    assert_eq!(positive_on_integer_ray(&sq, 4).unwrap().verdict, RayVerdict::Nonnegative);
    assert!(positive_on_integer_ray(&sq, 5).unwrap().verdict.is_positive());
    let lin = rf_desc(&[1, -5], &[1, 0]);
    assert_eq!(positive_on_integer_ray(&lin, 4).unwrap().verdict, RayVerdict::FailsAt(4));
    // a double root between integers only Sturm can see
    let dip = rf_desc(&[4, -36, 81], &[1]); // (2r - 9)^2
    assert_eq!(positive_on_integer_ray(&dip, 4).unwrap().verdict, RayVerdict::Nonnegative);
    let dip_below = &dip - &rf_desc(&[1], &[100]);
    assert_eq!(positive_on_integer_ray(&dip_below, 4).unwrap().verdict, RayVerdict::FailsOffIntegers);
    // pole on the ray
    assert!(positive_on_integer_ray(&rf_desc(&[1], &[1, -7]), 4).is_err());
}

#[test]
fn multiplicities() {
    // (r - 5)^3 (r - 6)^2 changes sign at 5 only
    let p = rf_desc(&[1, -27, 291, -1565, 4200, -4500], &[1]);
    assert_eq!(positive_on_integer_ray(&p, 4).unwrap().verdict, RayVerdict::FailsAt(4));
    assert_eq!(positive_on_integer_ray(&p, 5).unwrap().verdict, RayVerdict::Nonnegative);
    // (r - 5)^4 (r^2 + 1) never negative
    let q = rf_desc(&[1, -20, 151, -520, 775, -500, 625], &[1]);
    assert_eq!(positive_on_integer_ray(&q, 4).unwrap().verdict, RayVerdict::Nonnegative);
}
