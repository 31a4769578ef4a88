mod common;

use common::*;
use paracontact::analysis::*;
use paracontact::{Error, StructureClass, Tensor, VectorField};
use ratcas::Rational;

fn zero() -> VectorField {
    VectorField::zero(3)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn yamabe_examples() {
    let r = yamabe_check(&ex2().structure, &zero(), &q(-6));
    assert!(r.holds());
    assert_eq!(r.sign_class, SignClass::Expanding);

    let l = ex1();
    let r = yamabe_check(&l.structure, l.structure.xi(), &q(2));
    assert!(r.holds());
    assert_eq!(r.sign_class, SignClass::Shrinking);

    let l = flat();
    let r = yamabe_check(&l.structure, &zero(), &q(1));
    assert!(!r.holds());
    assert_eq!(r.residual, -l.structure.g());
}

#[test]
fn yamabe_solver() {
    let l = ex1();
    assert_eq!(yamabe_solve_lambda(&l.structure, l.structure.xi()), Some(q(2)));
    let l = flat();
    assert_eq!(yamabe_solve_lambda(&l.structure, &v(&l, ["x", "y", "z"])), Some(q(2)));
    assert_eq!(yamabe_solve_lambda(&l.structure, &v(&l, ["x^2", "0", "0"])), None);
}

#[test]
fn gradient_solitons() {
    let l = flat();
    let f = e(&l, "(x^2 - y^2 + z^2)/2");
    let r = gradient_soliton_check(&l.structure, &f, &q(2));
    assert!(r.holds());
    assert_eq!(r.vector, v(&l, ["x", "y", "z"]));

    let r = gradient_soliton_check(&l.structure, &c(0), &q(0));
    assert!(r.holds());
    assert!(r.vector.is_zero());

    assert!(!gradient_soliton_check(&ex1().structure, &c(0), &q(5)).holds());
}

#[test]
fn killing_fields() {
    let l = ex1();
    assert!(killing_check(&l.structure, l.structure.xi()).0);
    let l = flat();
    assert!(killing_check(&l.structure, &v(&l, ["1", "0", "0"])).0);
    let (ok, residual) = killing_check(&l.structure, &v(&l, ["x", "0", "0"]));
    assert!(!ok);
    let dx = covector(&l, ["1", "0", "0"]);
    assert_eq!(residual, dx.outer(&dx).scale(&c(2)));
}

#[test]
fn conformal_identities() {
    let l = flat();
    let r = conformal_identities_check(&l.structure, &v(&l, ["x", "y", "z"])).unwrap();
    assert!(r.passes());
    assert_eq!(r.rho, c(1));

    let l1 = ex1();
    let r = conformal_identities_check(&l1.structure, l1.structure.xi()).unwrap();
    assert!(r.passes());
    assert!(r.rho.is_zero());

    assert_eq!(
        conformal_identities_check(&l.structure, &v(&l, ["x^2", "0", "0"])),
        Err(Error::NotConformal)
    );
}

#[test]
fn soliton_consequences() {
    let l = ex1();
    let r = soliton_consequence_suite(&l.structure, l.structure.xi(), &q(2), &StructureClass::ParaSasakian).unwrap();
    assert!(r.passes());
    assert!(r.get("laplacian_r").is_some());

    let r = soliton_consequence_suite(&ex2().structure, &zero(), &q(-6), &StructureClass::ParaKenmotsu).unwrap();
    assert!(r.passes());
    assert!(r.get("lambda").is_some());

    let r = soliton_consequence_suite(&flat().structure, &zero(), &q(0), &StructureClass::Paracosymplectic).unwrap();
    assert!(r.passes());

    assert_eq!(
        soliton_consequence_suite(&ex2().structure, &zero(), &q(1), &StructureClass::ParaKenmotsu),
        Err(Error::NotASoliton)
    );
}

#[test]
fn xi_scalar_derivative() {
    for (l, class) in [
        (ex1(), StructureClass::ParaSasakian),
        (ex2(), StructureClass::ParaKenmotsu),
        (flat(), StructureClass::Paracosymplectic),
    ] {
        assert!(xi_scalar_derivative_check(&l.structure, &class).unwrap().is_zero(), "{}", l.name);
        assert!(ricci_closed_form_check(&l.structure, &class).unwrap().is_zero(), "{}", l.name);
    }
    assert!(matches!(
        xi_scalar_derivative_check(&ex1().structure, &StructureClass::KParacontact),
        Err(Error::ClassMismatch { .. })
    ));
}

#[test]
fn einstein_verdicts() {
    let r = einstein_classify(&ex2().structure);
    assert_eq!(r.verdict, EinsteinVerdict::Einstein);
    assert_eq!((r.alpha, r.beta), (Some(c(-2)), Some(c(0))));

    let r = einstein_classify(&ex1().structure);
    assert_eq!(r.verdict, EinsteinVerdict::ProperEtaEinstein);
    assert_eq!((r.alpha, r.beta), (Some(c(2)), Some(c(-4))));

    assert_eq!(einstein_classify(&flat().structure).verdict, EinsteinVerdict::RicciFlat);
}

#[test]
fn constant_curvature() {
    assert_eq!(constant_curvature_solve(&ex2().structure).c, Some(q(-1)));
    assert_eq!(constant_curvature_solve(&flat().structure).c, Some(q(0)));
    assert_eq!(constant_curvature_solve(&ex1().structure).c, None);
}

#[test]
fn ricci_solitons() {
    let s2 = ex2();
    assert_eq!(ricci_solve_mu(&s2.structure, &zero()), Some(q(2)));
    let r = ricci_soliton_check(&s2.structure, &zero(), &q(2));
    assert!(r.holds());
    assert_eq!(r.sign_class, SignClass::Expanding);

    let r = ricci_soliton_check(&flat().structure, &zero(), &q(0));
    assert!(r.holds());
    assert_eq!(r.sign_class, SignClass::Steady);
    assert_eq!(ricci_solve_mu(&flat().structure, &zero()), Some(q(0)));

    let l = ex1();
    assert_eq!(ricci_solve_mu(&l.structure, l.structure.xi()), None);
}

#[test]
fn sign_classes() {
    assert_eq!(SignClass::yamabe(&rat(1, 3)), SignClass::Shrinking);
    assert_eq!(SignClass::yamabe(&q(0)), SignClass::Steady);
    assert_eq!(SignClass::yamabe(&q(-6)), SignClass::Expanding);
    assert_eq!(SignClass::ricci(&rat(-1, 2)), SignClass::Shrinking);
    assert_eq!(SignClass::ricci(&q(0)), SignClass::Steady);
    assert_eq!(SignClass::ricci(&q(2)), SignClass::Expanding);
}

#[test]
fn automorphisms() {
    let l = ex1();
    assert!(automorphism_check(&l.structure, l.structure.xi()).passes());
    let l = flat();
    assert!(automorphism_check(&l.structure, &v(&l, ["1", "0", "0"])).passes());
    let r = automorphism_check(&l.structure, &v(&l, ["x", "0", "0"]));
    assert!(!r.get("lie_g").unwrap().passes());
}

#[test]
fn collinear_fields() {
    let l = ex1();
    let r = collinear_residual(&l.structure, &c(1), &StructureClass::ParaSasakian).unwrap();
    assert!(r.residual().is_zero() && r.paths_agree());

    let l = ex2();
    let s = &l.structure;
    let r = collinear_residual(s, &c(1), &StructureClass::ParaKenmotsu).unwrap();
    assert!(r.paths_agree());
    assert_eq!(r.residual(), &(s.g() - &s.eta_eta()).scale(&c(2)));
    assert!(!r.residual().is_zero());

    let l = ex1();
    let s = &l.structure;
    let b = e(&l, "z");
    let r = collinear_residual(s, &b, &StructureClass::ParaSasakian).unwrap();
    let db = covector(&l, ["0", "0", "1"]);
    assert_eq!(r.residual(), &(&db.outer(s.eta()) + &s.eta().outer(&db)));
    assert!(!r.residual().is_zero());

    assert!(collinear_residual(s, &b, &StructureClass::Paracosymplectic).is_err());
}

#[test]
fn three_dimensional_curvature_identity() {
    for l in [ex1(), ex2(), flat()] {
        let geo = l.structure.geometry();
        assert!(dim3_curvature_identity_check(geo).unwrap().is_zero(), "{}", l.name);
        assert!(contracted_bianchi(geo).is_zero(), "{}", l.name);
    }
}

#[test]
fn engine_self_tests_pass() {
    for l in [ex1(), ex2(), flat()] {
        let r = engine_self_tests(&l.structure);
        assert!(r.passes(), "{}: {:?}", l.name, r.failed());
    }
}

#[test]
fn potential_must_match_vector() {
    let l = flat();
    let cand = SolitonCandidate {
        name: "bad".into(),
        vector: Some(v(&l, ["1", "0", "0"])),
        lambda: Some(q(0)),
        mu: None,
        potential: Some(e(&l, "y")),
    };
    assert_eq!(cand.resolve_vector(&l.structure), Err(Error::PotentialMismatch));
    let hess = hessian(l.structure.geometry(), &e(&l, "x*y"));
    assert_eq!(hess, Tensor::from_rows(0, 2, vec![vec![c(0), c(1), c(0)], vec![c(1), c(0), c(0)], vec![c(0); 3]]).unwrap());
}
