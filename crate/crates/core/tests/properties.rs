use assoc_poly::exactnum::{int, rat, Rational};
use assoc_poly::families::{recurrence_eval, recurrence_eval_polyx, Params};
use assoc_poly::hyperexplicit::{explicit_eval, Variant};
use assoc_poly::series::TruncatedSeries;
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn pos() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn amp_explicit_forms_agree(beta in pos(), c in pos(), gamma in (0i64..=12, 1i64..=4), x in q(), n in 0usize..7) {
        prop_assume!(c != int(1));
        let params = Params::amp(beta, c, rat(gamma.0, gamma.1));
        let oracle = recurrence_eval(&params, &x, n).unwrap();
        for v in [Variant::AmpA, Variant::AmpB] {
            prop_assert_eq!(&explicit_eval(&params, v, &x, n).unwrap(), &oracle[n]);
        }
    }

    #[test]
    fn acp_explicit_forms_agree(a in pos(), gamma in (0i64..=12, 1i64..=4), x in q(), n in 0usize..7) {
        let params = Params::acp(a, rat(gamma.0, gamma.1));
        let oracle = recurrence_eval(&params, &x, n).unwrap();
        for v in [Variant::AcpA, Variant::AcpB] {
            prop_assert_eq!(&explicit_eval(&params, v, &x, n).unwrap(), &oracle[n]);
        }
    }

    #[test]
    fn alp_explicit_forms_agree(alpha in pos(), gamma in (0i64..=12, 1i64..=4), x in q(), n in 0usize..7) {
        let params = Params::alp(alpha, rat(gamma.0, gamma.1));
        prop_assume!(params.validate().is_ok());
        let oracle = recurrence_eval(&params, &x, n).unwrap();
        for v in [Variant::AlpA, Variant::AlpB] {
            match explicit_eval(&params, v, &x, n) {
                Ok(value) => prop_assert_eq!(&value, &oracle[n]),
                Err(e) => prop_assert!(matches!(e, assoc_poly::Error::Pole(_)), "{e}"),
            }
        }
    }

    #[test]
    fn akp_explicit_forms_agree(p in (1i64..=9, 10i64..=10), big_n in 7i64..=20, gamma in (0i64..=12, 1i64..=4), x in q(), n in 0usize..7) {
        let params = Params::akp(rat(p.0, p.1), int(big_n), rat(gamma.0, gamma.1));
        prop_assume!(params.validate().is_ok());
        let oracle = recurrence_eval(&params, &x, n);
        prop_assume!(oracle.is_ok());
        let oracle = oracle.unwrap();
        for v in [Variant::AkpA, Variant::AkpB] {
            prop_assert_eq!(&explicit_eval(&params, v, &x, n).unwrap(), &oracle[n]);
        }
    }

    #[test]
    fn polynomial_form_matches_pointwise(alpha in pos(), gamma in (0i64..=12, 1i64..=4), x in q()) {
        let params = Params::alp(alpha, rat(gamma.0, gamma.1));
        let polys = recurrence_eval_polyx(&params, 6).unwrap();
        let values = recurrence_eval(&params, &x, 6).unwrap();
        for (k, (p, v)) in polys.iter().zip(&values).enumerate() {
            prop_assert_eq!(p.degree(), k);
            prop_assert_eq!(&p.eval(&x), v);
        }
    }

    #[test]
    fn exp_is_a_homomorphism(a in q(), b in q()) {
        let order = 10;
        let t = TruncatedSeries::<Rational>::variable(order);
        let (u, v) = (t.scale(&a), t.scale(&b));
        let lhs = TruncatedSeries::exp(&(&u + &v)).unwrap();
        let rhs = &TruncatedSeries::exp(&u).unwrap() * &TruncatedSeries::exp(&v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_powers_multiply(r in q(), s in q(), a in q()) {
        let u = TruncatedSeries::<Rational>::variable(8).scale(&a);
        let lhs = TruncatedSeries::binomial_power(&u, &(&r + &s)).unwrap();
        let rhs = &TruncatedSeries::binomial_power(&u, &r).unwrap() * &TruncatedSeries::binomial_power(&u, &s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
