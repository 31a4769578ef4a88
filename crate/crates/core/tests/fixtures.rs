use paracontact::analysis::*;
use paracontact::manifest::fixtures;
use paracontact::{classify, load_str, LoadOptions, Loaded, StructureClass, VectorField};
use ratcas::{parse_expr, Rational, RationalFunction};

fn load(text: &str) -> Loaded {
    load_str(text, LoadOptions::default()).unwrap()
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn expr(l: &Loaded, e: &str) -> RationalFunction {
    parse_expr(e, l.structure.coords()).unwrap()
}

#[test]
fn classes_of_bundled_fixtures() {
    for (text, class) in [
        (fixtures::EX1, StructureClass::ParaSasakian),
        (fixtures::EX2, StructureClass::ParaKenmotsu),
        (fixtures::FLAT, StructureClass::Paracosymplectic),
    ] {
        let l = load(text);
        let c = classify(&l.structure);
        for check in &c.report.checks {
            if !check.passes() {
                eprintln!("{}: {} fails: {:?}", l.name, check.name, check.evidence);
            }
        }
        assert_eq!(c.class, class, "{}", l.name);
    }
}

#[test]
fn scalar_curvatures() {
    for (text, r) in [(fixtures::EX1, 2), (fixtures::EX2, -6), (fixtures::FLAT, 0)] {
        let l = load(text);
        assert_eq!(l.structure.geometry().scalar_curvature(), &RationalFunction::from_int(r), "{}", l.name);
    }
}

#[test]
fn engine_identities_hold_on_fixtures() {
    for (_, text) in fixtures::ALL {
        let l = load(text);
        let report = engine_self_tests(&l.structure);
        assert!(report.passes(), "{}: {:?}", l.name, report.failed());
    }
}

#[test]
fn einstein_and_constant_curvature() {
    let ex2 = load(fixtures::EX2);
    let e = einstein_classify(&ex2.structure);
    assert_eq!(e.verdict, EinsteinVerdict::Einstein);
    assert_eq!(e.alpha, Some(RationalFunction::from_int(-2)));
    assert_eq!(constant_curvature_solve(&ex2.structure).c, Some(q(-1)));

    let ex1 = load(fixtures::EX1);
    let e = einstein_classify(&ex1.structure);
    assert_eq!(e.verdict, EinsteinVerdict::ProperEtaEinstein);
    assert_eq!((e.alpha, e.beta), (Some(RationalFunction::from_int(2)), Some(RationalFunction::from_int(-4))));
    assert_eq!(constant_curvature_solve(&ex1.structure).c, None);

    let flat = load(fixtures::FLAT);
    assert_eq!(einstein_classify(&flat.structure).verdict, EinsteinVerdict::RicciFlat);
    assert_eq!(constant_curvature_solve(&flat.structure).c, Some(q(0)));
}

#[test]
fn soliton_solvers() {
    let ex2 = load(fixtures::EX2);
    let zero = VectorField::zero(3);
    assert_eq!(yamabe_solve_lambda(&ex2.structure, &zero), Some(q(-6)));
    assert_eq!(ricci_solve_mu(&ex2.structure, &zero), Some(q(2)));

    let ex1 = load(fixtures::EX1);
    let xi = ex1.structure.xi().clone();
    assert_eq!(yamabe_solve_lambda(&ex1.structure, &xi), Some(q(2)));
    assert_eq!(ricci_solve_mu(&ex1.structure, &xi), None);
    assert!(yamabe_check(&ex1.structure, &xi, &q(2)).holds());

    let flat = load(fixtures::FLAT);
    let dil = VectorField::new(vec![expr(&flat, "x"), expr(&flat, "y"), expr(&flat, "z")]);
    assert_eq!(yamabe_solve_lambda(&flat.structure, &dil), Some(q(2)));
    let x2 = VectorField::new(vec![expr(&flat, "x^2"), expr(&flat, "0"), expr(&flat, "0")]);
    assert_eq!(yamabe_solve_lambda(&flat.structure, &x2), None);
}

#[test]
fn printed_metrics_are_flagged() {
    for (text, note) in [(fixtures::EX1, "metric[x][z]"), (fixtures::EX2, "metric[x][z]")] {
        let l = load(text);
        assert!(l.notes.iter().any(|n| n.starts_with(note)), "{:?}", l.notes);
        let printed = load_str(text, LoadOptions { metric_mode: Some(paracontact::MetricMode::Printed), ..Default::default() }).unwrap();
        assert!(!classify(&printed.structure).class.is_valid());
    }
}
