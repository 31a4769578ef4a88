mod common;

use common::*;
use paracontact::analysis::{collinear_residual, lie_g, yamabe_check, yamabe_solve_lambda};
use paracontact::forms::FormConvention;
use paracontact::{execute, lie_derivative, Command, Geometry, Metric, Report, StructureClass, Tensor, VectorField};
use proptest::prelude::*;
use ratcas::{Rational, RationalFunction};

/// Polynomial in x, y, z of total degree at most `deg` with small integer coefficients.
fn poly(deg: u32) -> impl Strategy<Value = RationalFunction> {
    prop::collection::vec((-3i64..=3, 0..=deg, 0..=deg, 0..=deg), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .filter(|(_, a, b, c)| a + b + c <= deg)
            .map(|(k, a, b, c)| {
                let m = [a, b, c]
                    .iter()
                    .enumerate()
                    .fold(RationalFunction::one(), |acc, (i, e)| &acc * &RationalFunction::var(i).pow(*e as i32).unwrap());
                &m * &RationalFunction::from_int(k)
            })
            .sum()
    })
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (poly(2), poly(1)).prop_map(|(n, d)| {
        // shift keeps the denominator away from the zero polynomial
        let d = &d * &d + RationalFunction::one();
        &n / &d
    })
}

fn vector_field() -> impl Strategy<Value = VectorField> {
    prop::collection::vec(poly(2), 3).prop_map(VectorField::new)
}

/// Split-signature metric `diag(5+a, −(5+b), 5+c)` with a constant off-diagonal entry.
fn metric() -> impl Strategy<Value = Metric> {
    (poly(1), poly(1), poly(1), -2i64..=2).prop_map(|(a, b, c, k)| {
        let five = RationalFunction::from_int(5);
        let k = RationalFunction::from_int(k);
        let zero = RationalFunction::zero();
        let rows = vec![
            vec![&five + &a, k.clone(), zero.clone()],
            vec![k, -(&five + &b), zero.clone()],
            vec![zero.clone(), zero, &five + &c],
        ];
        Metric::new(Tensor::from_rows(0, 2, rows).unwrap()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_of_d_vanishes_on_one_forms(w in prop::collection::vec(rational_function(), 3)) {
        for conv in [FormConvention::Normalized, FormConvention::Unnormalized] {
            let two = conv.d1(&Tensor::covector(w.clone())).unwrap();
            prop_assert!(conv.d2(&two).unwrap().is_zero());
        }
    }

    #[test]
    fn d_of_d_vanishes_on_functions(f in rational_function()) {
        let conv = FormConvention::default();
        prop_assert!(conv.d1(&conv.d0(&f, 3)).unwrap().is_zero());
    }

    #[test]
    fn killing_operator_matches_connection(vf in vector_field(), which in 0usize..3) {
        let l = vec![ex1(), ex2(), flat()].swap_remove(which);
        let s = &l.structure;
        let geo = s.geometry();
        let g = s.g();
        // (L_V g)_{ij} = g(∇_i V, ∂_j) + g(∂_i, ∇_j V)
        let nabla_v = geo.covariant_derivative(&vf.to_tensor());
        let n = s.dim();
        let expected = Tensor::from_fn(n, 0, 2, |ix| {
            (0..n)
                .map(|a| &(g.at(a, ix[1]) * nabla_v.at(a, ix[0])) + &(g.at(ix[0], a) * nabla_v.at(a, ix[1])))
                .sum()
        });
        prop_assert_eq!(lie_derivative(g, &vf), expected);
    }

    #[test]
    fn yamabe_solver_round_trip(k in -5i64..=5, tx in -3i64..=3, ty in -3i64..=3) {
        let l = flat();
        let s = &l.structure;
        let x = |i: usize| &RationalFunction::var(i) * &RationalFunction::from_int(k);
        let vf = VectorField::new(vec![&x(0) + &c(tx), &x(1) + &c(ty), x(2)]);
        let lambda = yamabe_solve_lambda(s, &vf).unwrap();
        prop_assert_eq!(&lambda, &Rational::from_integer((2 * k).into()));
        prop_assert!(yamabe_check(s, &vf, &lambda).holds());
    }

    #[test]
    fn lie_g_is_symmetric(vf in vector_field()) {
        let l = ex2();
        prop_assert!(lie_g(&l.structure, &vf).is_symmetric());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn levi_civita_invariants(m in metric()) {
        let geo = Geometry::new(m.clone());
        let gamma = geo.christoffel();
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    prop_assert_eq!(gamma.get(&[k, i, j]), gamma.get(&[k, j, i]));
                }
            }
        }
        prop_assert!(geo.covariant_derivative(m.tensor()).is_zero());
        let r = geo.riemann();
        for idx in paracontact::tensor::multi_indices(3, 4) {
            let swapped = [idx[0], idx[2], idx[1], idx[3]];
            prop_assert_eq!(r.get(&idx), &-r.get(&swapped));
        }
        prop_assert!(geo.ricci().is_symmetric());
        prop_assert!(paracontact::analysis::contracted_bianchi(&geo).is_zero());
        prop_assert!(paracontact::analysis::dim3_curvature_identity_check(&geo).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn collinear_paths_agree(b in poly(2), kenmotsu in any::<bool>()) {
        let (l, class) = if kenmotsu { (ex2(), StructureClass::ParaKenmotsu) } else { (ex1(), StructureClass::ParaSasakian) };
        let r = collinear_residual(&l.structure, &b, &class).unwrap();
        prop_assert!(r.paths_agree());
    }
}

#[test]
fn report_json_round_trip_and_determinism() {
    for l in [ex1(), ex2(), flat()] {
        for cmd in [
            Command::Classify,
            Command::Curvature { frame: true },
            Command::Solitons,
            Command::Identities { suite: paracontact::Suite::Class },
            Command::Report,
        ] {
            let a = execute(cmd, &l);
            let json = a.to_json();
            assert_eq!(Report::from_json(&json).unwrap(), a);
            assert_eq!(execute(cmd, &l).to_json(), json);
        }
    }
}

