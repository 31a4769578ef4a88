//! Axiom checks, classification and class identity suites.

use std::fmt;

use ratcas::RationalFunction;

use crate::error::{Error, Result};
use crate::geometry::{lie_bracket, signature_at};
use crate::structure::ParacontactStructure;
use crate::tensor::{int, Tensor, VectorField};

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    /// A residual tensor; the check passes when it is identically zero.
    Residual(Tensor),
    /// Inertia of the metric at the base point.
    Signature { expected: (usize, usize), found: std::result::Result<(usize, usize), String> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub formula: &'static str,
    pub evidence: Evidence,
}

impl Check {
    pub fn residual(name: &'static str, formula: &'static str, residual: Tensor) -> Self {
        Check { name, formula, evidence: Evidence::Residual(residual) }
    }

    pub fn scalar(name: &'static str, formula: &'static str, dim: usize, value: RationalFunction) -> Self {
        Self::residual(name, formula, Tensor::scalar(dim, value))
    }

    pub fn passes(&self) -> bool {
        match &self.evidence {
            Evidence::Residual(t) => t.is_zero(),
            Evidence::Signature { expected, found } => found.as_ref() == Ok(expected),
        }
    }

    pub fn residual_tensor(&self) -> Option<&Tensor> {
        match &self.evidence {
            Evidence::Residual(t) => Some(t),
            Evidence::Signature { .. } => None,
        }
    }
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(Check::passes)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passes()).map(|c| c.name).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }
}

pub fn check_almost_paracontact(s: &ParacontactStructure) -> AxiomReport {
    let n = s.dim();
    let phi = s.phi();
    let mut r = AxiomReport::default();
    r.push(Check::scalar("eta_xi", "η(ξ) − 1", n, &s.eta_of(s.xi()) - &RationalFunction::one()));
    r.push(Check::residual(
        "phi_squared",
        "φ² − I + η⊗ξ",
        &(&phi.compose(phi) - &Tensor::identity(n)) + &s.eta_xi(),
    ));
    r.push(Check::residual("phi_xi", "φξ", phi.apply(s.xi()).to_tensor()));
    r.push(Check::residual(
        "eta_phi",
        "η∘φ",
        Tensor::covector((0..n).map(|j| (0..n).map(|i| s.eta().get(&[i]) * phi.at(i, j)).sum()).collect()),
    ));
    r.push(Check::scalar("trace_phi", "trace φ", n, phi.trace()));
    r
}

pub fn check_metric_compatibility(s: &ParacontactStructure) -> AxiomReport {
    let n = s.dim();
    let (g, phi) = (s.g(), s.phi());
    let mut r = AxiomReport::default();
    let gphiphi = Tensor::from_fn(n, 0, 2, |i| {
        let mut acc = RationalFunction::zero();
        for a in 0..n {
            if phi.at(a, i[0]).is_zero() {
                continue;
            }
            for b in 0..n {
                if !phi.at(b, i[1]).is_zero() {
                    acc = acc + &(phi.at(a, i[0]) * g.at(a, b)) * phi.at(b, i[1]);
                }
            }
        }
        acc
    });
    r.push(Check::residual(
        "compatibility",
        "g(φX,φY) + g(X,Y) − η(X)η(Y)",
        &(&gphiphi + g) - &s.eta_eta(),
    ));
    r.push(Check::residual("eta_dual", "g(X,ξ) − η(X)", &s.metric().lower(s.xi()) - s.eta()));
    if let Some(sf) = s.frame() {
        let f = &sf.frame;
        r.push(Check::residual(
            "frame_orthonormal",
            "g(e_a,e_b) − ε_a δ_ab",
            Tensor::from_fn(n, 0, 2, |i| {
                let expect = if i[0] == i[1] { RationalFunction::from_int(sf.signs[i[0]]) } else { RationalFunction::zero() };
                &g.pair(f.vector(i[0]), f.vector(i[1])) - &expect
            }),
        ));
    }
    let expected = if n == 3 { (2, 1) } else { (n.div_ceil(2), n / 2) };
    r.push(Check {
        name: "signature",
        formula: "inertia of g at the base point",
        evidence: Evidence::Signature {
            expected,
            found: signature_at(s.metric(), s.base_point()).map_err(|e| e.to_string()),
        },
    });
    r
}

pub fn check_paracontact_metric(s: &ParacontactStructure) -> AxiomReport {
    AxiomReport {
        checks: vec![Check::residual("paracontact_metric", "dη − Φ", &s.d_eta() - &s.fundamental_two_form())],
    }
}

/// `h = ½ L_ξ φ` with its algebraic properties and `∇ξ = −φ + φh`.
#[derive(Clone, Debug)]
pub struct HReport {
    pub h: Tensor,
    pub report: AxiomReport,
}

pub fn h_operator(s: &ParacontactStructure) -> HReport {
    let n = s.dim();
    let h = s.h();
    let phi = s.phi();
    let g = s.g();
    let gh = Tensor::from_fn(n, 0, 2, |i| (0..n).map(|k| g.at(i[0], k) * h.at(k, i[1])).sum());
    let mut r = AxiomReport::default();
    r.push(Check::residual("h_vanishes", "h", h.clone()));
    r.push(Check::residual("h_xi", "hξ", h.apply(s.xi()).to_tensor()));
    r.push(Check::scalar("h_trace", "trace h", n, h.trace()));
    r.push(Check::scalar("h_phi_trace", "trace hφ", n, h.compose(phi).trace()));
    r.push(Check::residual("h_symmetric", "g(hX,Y) − g(X,hY)", &gh.transpose() - &gh));
    r.push(Check::residual("h_anticommutes", "hφ + φh", &h.compose(phi) + &phi.compose(&h)));
    r.push(Check::residual(
        "nabla_xi_h",
        "∇ξ − (−φ + φh)",
        &(&s.nabla_xi() + phi) - &phi.compose(&h),
    ));
    HReport { h, report: r }
}

/// `[φ,φ](∂_i,∂_j) − 2dη(∂_i,∂_j)ξ` at index `[l, i, j]`.
pub fn normality_check(s: &ParacontactStructure) -> AxiomReport {
    let n = s.dim();
    let phi = s.phi();
    let cols: Vec<VectorField> =
        (0..n).map(|j| VectorField::new((0..n).map(|i| phi.at(i, j).clone()).collect())).collect();
    let coord = |i: usize| VectorField::coordinate(n, i);
    let d_eta = s.d_eta();
    let mut pairs = vec![vec![VectorField::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let t = &(&lie_bracket(&cols[i], &cols[j]) - &phi.apply(&lie_bracket(&cols[i], &coord(j))))
                - &phi.apply(&lie_bracket(&coord(i), &cols[j]));
            let two_d = d_eta.at(i, j).scale(&int(2));
            pairs[i][j] = &t - &s.xi().scale(&two_d);
        }
    }
    let residual = Tensor::from_fn(n, 1, 2, |idx| pairs[idx[1]][idx[2]].component(idx[0]).clone());
    AxiomReport { checks: vec![Check::residual("normality", "[φ,φ] − 2dη⊗ξ", residual)] }
}

/// Outcome of solving `dη = 0, dΦ = 2α η∧Φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaReport {
    pub d_eta: Tensor,
    /// `None` when both `dΦ` and `η∧Φ` vanish.
    pub alpha: Option<RationalFunction>,
}

impl AlphaReport {
    pub fn d_eta_vanishes(&self) -> bool {
        self.d_eta.is_zero()
    }

    pub fn alpha_is_constant(&self) -> bool {
        self.alpha.as_ref().is_some_and(RationalFunction::is_constant)
    }
}

pub fn alpha_form_check(s: &ParacontactStructure) -> Result<AlphaReport> {
    let conv = s.convention();
    let big_phi = s.fundamental_two_form();
    if !big_phi.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let d_phi = conv.d2(&big_phi)?;
    let wedge = conv.wedge(s.eta(), &big_phi)?;
    let alpha = if wedge.is_zero() {
        if !d_phi.is_zero() {
            return Err(Error::NoAlpha);
        }
        None
    } else {
        Some((d_phi.coefficient() / wedge.coefficient()).half())
    };
    Ok(AlphaReport { d_eta: s.d_eta(), alpha })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureClass {
    ParaSasakian,
    Paracosymplectic,
    ParaKenmotsu,
    KParacontact,
    ParacontactMetric,
    AlmostAlphaParacosymplectic(RationalFunction),
    AlmostParacontactMetric,
    Invalid(Vec<String>),
}

impl StructureClass {
    pub fn name(&self) -> &'static str {
        match self {
            StructureClass::ParaSasakian => "ParaSasakian",
            StructureClass::Paracosymplectic => "Paracosymplectic",
            StructureClass::ParaKenmotsu => "ParaKenmotsu",
            StructureClass::KParacontact => "KParacontact",
            StructureClass::ParacontactMetric => "ParacontactMetric",
            StructureClass::AlmostAlphaParacosymplectic(_) => "AlmostAlphaParacosymplectic",
            StructureClass::AlmostParacontactMetric => "AlmostParacontactMetric",
            StructureClass::Invalid(_) => "Invalid",
        }
    }

    pub fn is_valid(&self) -> bool {
        !matches!(self, StructureClass::Invalid(_))
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureClass::Invalid(failed) => write!(f, "Invalid ({})", failed.join(", ")),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub class: StructureClass,
    pub report: AxiomReport,
    pub alpha: std::result::Result<AlphaReport, Error>,
}

/// Runs every axiom check and derives the structure class from them.
pub fn classify(s: &ParacontactStructure) -> Classification {
    let almost = check_almost_paracontact(s);
    let compat = check_metric_compatibility(s);
    let contact = check_paracontact_metric(s);
    let normal = normality_check(s);
    let h = h_operator(s);
    let alpha = alpha_form_check(s);

    let mut report = AxiomReport::default();
    for part in [&almost, &compat, &contact, &normal, &h.report] {
        report.extend(part.clone());
    }

    let base_failed: Vec<String> =
        almost.failed().into_iter().chain(compat.failed()).map(str::to_string).collect();
    let class = if !base_failed.is_empty() {
        StructureClass::Invalid(base_failed)
    } else {
        let is_contact = contact.passes();
        let is_normal = normal.passes();
        let h_zero = h.report.get("h_vanishes").is_some_and(Check::passes);
        let closed_alpha = alpha.as_ref().ok().filter(|a| a.d_eta_vanishes()).map(|a| {
            a.alpha.clone().unwrap_or_else(RationalFunction::zero)
        });
        let constant = |v: i64| closed_alpha.as_ref() == Some(&RationalFunction::from_int(v));
        if is_contact && is_normal {
            StructureClass::ParaSasakian
        } else if constant(0) && is_normal {
            StructureClass::Paracosymplectic
        } else if constant(1) && is_normal {
            StructureClass::ParaKenmotsu
        } else if is_contact && h_zero {
            StructureClass::KParacontact
        } else if is_contact {
            StructureClass::ParacontactMetric
        } else if let Some(a) = closed_alpha {
            StructureClass::AlmostAlphaParacosymplectic(a)
        } else {
            StructureClass::AlmostParacontactMetric
        }
    };
    Classification { class, report, alpha }
}

/// `R^l_{ijk}ξ^k` at `[l, i, j]`.
fn r_xy_xi(s: &ParacontactStructure) -> Tensor {
    let n = s.dim();
    let r = s.geometry().riemann();
    Tensor::from_fn(n, 1, 2, |i| (0..n).map(|k| r.get(&[i[0], i[1], i[2], k]) * s.xi().component(k)).sum())
}

/// `R(ξ, ∂_i)∂_j` at `[l, i, j]`.
fn r_xi_xy(s: &ParacontactStructure) -> Tensor {
    let n = s.dim();
    let r = s.geometry().riemann();
    Tensor::from_fn(n, 1, 2, |i| (0..n).map(|a| r.get(&[i[0], a, i[1], i[2]]) * s.xi().component(a)).sum())
}

/// `(∇_{∂_i} φ)∂_j` at `[l, i, j]`.
fn nabla_phi(s: &ParacontactStructure) -> Tensor {
    let d = s.geometry().covariant_derivative(s.phi());
    Tensor::from_fn(s.dim(), 1, 2, |i| d.get(&[i[0], i[2], i[1]]).clone())
}

/// `S(∂_i, ξ)`.
fn s_x_xi(s: &ParacontactStructure) -> Tensor {
    let n = s.dim();
    let ric = s.geometry().ricci();
    Tensor::covector((0..n).map(|i| (0..n).map(|k| ric.at(i, k) * s.xi().component(k)).sum()).collect())
}

/// `f(i, j) X` style helper: `[l, i, j] ↦ c_{ij} δ^l_{i}`.
fn times_x(n: usize, c: impl Fn(usize, usize) -> RationalFunction) -> Tensor {
    Tensor::from_fn(n, 1, 2, |i| if i[0] == i[1] { c(i[1], i[2]) } else { RationalFunction::zero() })
}

/// `[l, i, j] ↦ c_{ij} δ^l_{j}` (a multiple of `Y`).
fn times_y(n: usize, c: impl Fn(usize, usize) -> RationalFunction) -> Tensor {
    Tensor::from_fn(n, 1, 2, |i| if i[0] == i[2] { c(i[1], i[2]) } else { RationalFunction::zero() })
}

/// `[l, i, j] ↦ c_{ij} ξ^l`.
fn times_xi(s: &ParacontactStructure, c: impl Fn(usize, usize) -> RationalFunction) -> Tensor {
    Tensor::from_fn(s.dim(), 1, 2, |i| c(i[1], i[2]) * s.xi().component(i[0]))
}

/// Identity residuals every structure of the given class must satisfy.
pub fn structure_identity_suite(s: &ParacontactStructure, class: &StructureClass) -> Result<AxiomReport> {
    let found = classify(s).class;
    if &found != class {
        return Err(Error::ClassMismatch { expected: class.name().into(), found: found.name().into() });
    }
    identity_suite_unchecked(s, class)
}

/// The identity suite without re-running the classification.
pub fn identity_suite_unchecked(s: &ParacontactStructure, class: &StructureClass) -> Result<AxiomReport> {
    let n = s.dim();
    let eta = |i: usize| s.eta().get(&[i]).clone();
    let g = |i: usize, j: usize| s.g().at(i, j).clone();
    let n_minus_one = RationalFunction::from_int(n as i64 - 1);
    let mut r = AxiomReport::default();
    match class {
        StructureClass::ParaSasakian => {
            r.push(Check::residual(
                "curvature_xi",
                "R(X,Y)ξ + η(Y)X − η(X)Y",
                &(&r_xy_xi(s) + &times_x(n, |_, j| eta(j))) - &times_y(n, |i, _| eta(i)),
            ));
            r.push(Check::residual(
                "nabla_phi",
                "(∇_X φ)Y + g(X,Y)ξ − η(Y)X",
                &(&nabla_phi(s) + &times_xi(s, g)) - &times_x(n, |_, j| eta(j)),
            ));
            r.push(Check::residual("nabla_xi", "∇ξ + φ", &s.nabla_xi() + s.phi()));
            r.push(Check::residual(
                "curvature_xi_first",
                "R(ξ,X)Y + g(X,Y)ξ − η(Y)X",
                &(&r_xi_xy(s) + &times_xi(s, g)) - &times_x(n, |_, j| eta(j)),
            ));
            r.push(Check::residual("ricci_xi", "S(X,ξ) + (n−1)η(X)", &s_x_xi(s) + &s.eta().scale(&n_minus_one)));
        }
        StructureClass::Paracosymplectic => {
            r.push(Check::residual("curvature_xi", "R(X,Y)ξ", r_xy_xi(s)));
            r.push(Check::residual("nabla_phi", "(∇_X φ)Y", nabla_phi(s)));
            r.push(Check::residual("nabla_xi", "∇ξ", s.nabla_xi()));
            r.push(Check::residual("ricci_xi", "S(X,ξ)", s_x_xi(s)));
        }
        StructureClass::ParaKenmotsu => {
            let phi = s.phi();
            // g(φX, Y) = g_{aj} φ^a_i
            let g_phi = |i: usize, j: usize| -> RationalFunction { (0..n).map(|a| s.g().at(a, j) * phi.at(a, i)).sum() };
            let eta_phi_x = Tensor::from_fn(n, 1, 2, |i| phi.at(i[0], i[1]) * &eta(i[2]));
            r.push(Check::residual(
                "curvature_xi",
                "R(X,Y)ξ − η(X)Y + η(Y)X",
                &(&r_xy_xi(s) - &times_y(n, |i, _| eta(i))) + &times_x(n, |_, j| eta(j)),
            ));
            r.push(Check::residual(
                "nabla_phi",
                "(∇_X φ)Y − g(φX,Y)ξ + η(Y)φX",
                &(&nabla_phi(s) - &times_xi(s, g_phi)) + &eta_phi_x,
            ));
            r.push(Check::residual(
                "nabla_xi",
                "∇ξ − I + η⊗ξ",
                &(&s.nabla_xi() - &Tensor::identity(n)) + &s.eta_xi(),
            ));
            r.push(Check::residual("ricci_xi", "S(X,ξ) + (n−1)η(X)", &s_x_xi(s) + &s.eta().scale(&n_minus_one)));
        }
        other => {
            return Err(Error::ClassMismatch {
                expected: "ParaSasakian, Paracosymplectic or ParaKenmotsu".into(),
                found: other.name().into(),
            })
        }
    }
    Ok(r)
}
