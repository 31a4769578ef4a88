use proptest::prelude::*;
use ratcas::{parse_expr, CasError, CoordinateSystem, Polynomial, Rational, RationalFunction};

fn coords() -> CoordinateSystem {
    CoordinateSystem::new(["x", "y", "z"]).unwrap()
}

fn expr_text() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (-6i64..7).prop_map(|n| if n < 0 { format!("({n})") } else { n.to_string() }),
        prop::sample::select(vec!["x", "y", "z"]).prop_map(String::from),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} - {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}/({b})")),
            (inner, -2i32..3).prop_map(|(a, e)| format!("({a})^{e}")),
        ]
    })
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    expr_text().prop_filter_map("division by zero", |t| parse_expr(&t, &coords()).ok())
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-4i64..5).prop_map(|v| Rational::from_integer(v.into())), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_round_trip(f in rational_function()) {
        let c = coords();
        let text = f.to_expr_string(&c);
        prop_assert_eq!(parse_expr(&text, &c).unwrap(), f);
    }

    #[test]
    fn product_rule(f in rational_function(), g in rational_function(), var in 0usize..3) {
        let lhs = (&f * &g).partial(var);
        let rhs = &(&f * &g.partial(var)) + &(&g * &f.partial(var));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(f in rational_function(), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in rational_function(), g in rational_function(), p in point()) {
        let (Ok(a), Ok(b)) = (f.eval(&p), g.eval(&p)) else { return Ok(()); };
        prop_assert_eq!((&f + &g).eval(&p).unwrap(), &a + &b);
        prop_assert_eq!((&f - &g).eval(&p).unwrap(), &a - &b);
        prop_assert_eq!((&f * &g).eval(&p).unwrap(), &a * &b);
        if !num_traits_is_zero(&b) {
            match f.checked_div(&g).unwrap().eval(&p) {
                Ok(q) => prop_assert_eq!(q, &a / &b),
                // cancellation can only remove poles, never add them
                Err(e) => prop_assert!(false, "quotient has a pole where operands do not: {e}"),
            }
        }
    }

    #[test]
    fn field_axioms(f in rational_function(), g in rational_function(), h in rational_function()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        if !f.is_zero() {
            prop_assert!((&f * &f.inv().unwrap()).is_one());
        } else {
            prop_assert_eq!(f.inv(), Err(CasError::DivisionByZero));
        }
    }
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    rational_function().prop_map(|f| f.numerator().clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gcd_contains_common_factor(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assume!(!c.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        if !ac.is_zero() || !bc.is_zero() {
            prop_assert!(ac.div_exact(&g).is_some());
            prop_assert!(bc.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c).is_some());
            let (ca, cb) = (ac.div_exact(&g).unwrap(), bc.div_exact(&g).unwrap());
            prop_assert!(ca.is_zero() || cb.is_zero() || ca.gcd(&cb).is_constant());
        }
    }
}

fn num_traits_is_zero(r: &Rational) -> bool {
    *r == Rational::from_integer(0.into())
}
