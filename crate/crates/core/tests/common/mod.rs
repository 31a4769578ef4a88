#![allow(dead_code)]

use paracontact::manifest::fixtures;
use paracontact::{load_str, LoadOptions, Loaded, Tensor, VectorField};
use ratcas::{parse_expr, Rational, RationalFunction};

pub fn load(text: &str) -> Loaded {
    load_str(text, LoadOptions::default()).expect("fixture loads")
}

pub fn ex1() -> Loaded {
    load(fixtures::EX1)
}

pub fn ex2() -> Loaded {
    load(fixtures::EX2)
}

pub fn flat() -> Loaded {
    load(fixtures::FLAT)
}

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn c(v: i64) -> RationalFunction {
    RationalFunction::from_int(v)
}

pub fn e(l: &Loaded, text: &str) -> RationalFunction {
    parse_expr(text, l.structure.coords()).expect("expression parses")
}

pub fn v(l: &Loaded, comps: [&str; 3]) -> VectorField {
    VectorField::new(comps.iter().map(|t| e(l, t)).collect())
}

pub fn covector(l: &Loaded, comps: [&str; 3]) -> Tensor {
    Tensor::covector(comps.iter().map(|t| e(l, t)).collect())
}

pub fn matrix(l: &Loaded, upper: usize, lower: usize, rows: [[&str; 3]; 3]) -> Tensor {
    Tensor::from_rows(upper, lower, rows.iter().map(|r| r.iter().map(|t| e(l, t)).collect()).collect()).unwrap()
}

/// Frame field `a` of the fixture.
pub fn fr(l: &Loaded, a: usize) -> VectorField {
    l.structure.frame().expect("fixture has a frame").frame.vector(a).clone()
}

/// Rebuilds the structure of `l` with some tensors swapped out.
pub fn variant(l: &Loaded, phi: Option<Tensor>, metric: Option<Tensor>) -> paracontact::ParacontactStructure {
    let s = &l.structure;
    let metric = match metric {
        Some(m) => paracontact::Metric::new(m).unwrap(),
        None => s.metric().clone(),
    };
    paracontact::ParacontactStructure::new(
        s.coords().clone(),
        phi.unwrap_or_else(|| s.phi().clone()),
        s.xi().clone(),
        s.eta().clone(),
        metric,
        s.base_point().to_vec(),
    )
    .unwrap()
}
