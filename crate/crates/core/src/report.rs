//! Serializable reports and the commands that produce them.

use std::fmt::Write as _;

use ratcas::{CoordinateSystem, Rational, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::analysis::{self, SolitonReport};
use crate::axioms::{self, AxiomReport, Check, Evidence, StructureClass};
use crate::forms::FormConvention;
use crate::manifest::Loaded;
use crate::structure::ParacontactStructure;
use crate::tensor::{multi_indices, Tensor, VectorField};

pub const TOOL: &str = "paracontact-verify";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    pub metric_mode: String,
    pub conventions: Conventions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solitons: Option<Vec<CandidateSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentitySection>,
    pub notes: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub kappa: String,
    pub two_form_d_factor: String,
    pub wedge_factor: String,
    pub riemann: String,
    pub ricci: String,
    pub laplacian: String,
    pub yamabe_sign: String,
    pub ricci_soliton_sign: String,
}

impl Conventions {
    pub fn new(c: FormConvention) -> Self {
        Conventions {
            kappa: c.kappa().to_string(),
            two_form_d_factor: c.three_form_factor().to_string(),
            wedge_factor: c.three_form_factor().to_string(),
            riemann: "R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]".into(),
            ricci: "S(Y,Z) = trace{X ↦ R(X,Y)Z}, Q = g⁻¹S, r = trace Q".into(),
            laplacian: "Δf = −div Df".into(),
            yamabe_sign: "λ > 0 shrinking, λ = 0 steady, λ < 0 expanding".into(),
            ricci_soliton_sign: "μ < 0 shrinking, μ = 0 steady, μ > 0 expanding".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub formula: String,
    pub passes: bool,
    /// Nonzero residual components, `label = value`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub residual: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSection {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    pub checks: Vec<CheckSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureSection {
    pub metric: Vec<Vec<String>>,
    pub christoffel: Vec<String>,
    pub riemann: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<FrameTables>,
    pub ricci: Vec<Vec<String>>,
    pub ricci_operator: Vec<Vec<String>>,
    pub scalar_curvature: String,
    pub self_tests: Vec<CheckSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameTables {
    pub names: Vec<String>,
    /// Row `b`, column `a`: `∇_{F_a} F_b`.
    pub connection: Vec<Vec<String>>,
    /// Columns are the pairs `(F_0,F_1)`, `(F_1,F_2)`, `(F_0,F_2)`; rows apply
    /// them to `F_2`, `F_1`, `F_0`.
    pub curvature: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolitonSummary {
    pub constant: String,
    pub holds: bool,
    pub sign_class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSection {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub vector: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub yamabe: Option<SolitonSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solved_lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub consequences: Option<Vec<CheckSummary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci: Option<SolitonSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solved_mu: Option<String>,
    pub killing: bool,
    pub automorphism: Vec<CheckSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conformal: Option<ConformalSummary>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformalSummary {
    pub rho: String,
    pub checks: Vec<CheckSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySection {
    pub suite: String,
    pub checks: Vec<CheckSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Class,
    Dim3,
    Conformal,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "class" => Ok(Suite::Class),
            "dim3" => Ok(Suite::Dim3),
            "conformal" => Ok(Suite::Conformal),
            other => Err(format!("unknown suite `{other}` (expected class, dim3 or conformal)")),
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Suite::Class => "class",
            Suite::Dim3 => "dim3",
            Suite::Conformal => "conformal",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Curvature { frame: bool },
    Solitons,
    Identities { suite: Suite },
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Curvature { .. } => "curvature",
            Command::Solitons => "solitons",
            Command::Identities { .. } => "identities",
            Command::Report => "report",
        }
    }
}

/// Runs a command; `report.passed` decides the exit status.
pub fn execute(command: Command, loaded: &Loaded) -> Report {
    let s = &loaded.structure;
    let mut report = Report {
        tool: TOOL.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: command.name().into(),
        input: loaded.name.clone(),
        metric_mode: loaded.metric_mode.to_string(),
        conventions: Conventions::new(s.convention()),
        classification: None,
        curvature: None,
        solitons: None,
        identities: None,
        notes: loaded.notes.clone(),
        passed: true,
    };
    let classification = axioms::classify(s);
    let class = classification.class.clone();
    match command {
        Command::Classify => report.classification = Some(classification_section(loaded, &classification)),
        Command::Curvature { frame } => report.curvature = Some(curvature_section(s, frame)),
        Command::Solitons => report.solitons = Some(soliton_sections(loaded, &class)),
        Command::Identities { suite } => report.identities = Some(identity_section(loaded, &class, suite)),
        Command::Report => {
            report.classification = Some(classification_section(loaded, &classification));
            report.curvature = Some(curvature_section(s, true));
            report.solitons = Some(soliton_sections(loaded, &class));
            report.identities = Some(identity_section(loaded, &class, Suite::Class));
        }
    }
    report.passed = report.sections_pass();
    report
}

impl Report {
    fn sections_pass(&self) -> bool {
        let classify_ok = self.classification.as_ref().is_none_or(|c| {
            c.verdict_is_valid() && c.expected.as_ref().is_none_or(|e| e == c.verdict_name())
        });
        let curvature_ok = self.curvature.as_ref().is_none_or(|c| c.self_tests.iter().all(|t| t.passes));
        let solitons_ok = self.solitons.as_ref().is_none_or(|s| s.iter().all(|c| c.passed));
        let identities_ok = self.identities.as_ref().is_none_or(|i| i.checks.iter().all(|t| t.passes));
        classify_ok && curvature_ok && solitons_ok && identities_ok
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl ClassificationSection {
    fn verdict_name(&self) -> &str {
        self.verdict.split(' ').next().unwrap_or_default()
    }

    fn verdict_is_valid(&self) -> bool {
        self.verdict_name() != "Invalid"
    }
}

fn show(f: &RationalFunction, coords: &CoordinateSystem) -> String {
    f.display(coords).to_string()
}

fn label(idx: &[usize], upper: usize, names: &[String]) -> String {
    let part = |ix: &[usize]| ix.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",");
    match (upper, idx.len() - upper) {
        (_, 0) | (0, _) => format!("[{}]", part(idx)),
        _ => format!("[{}; {}]", part(&idx[..upper]), part(&idx[upper..])),
    }
}

fn residual_lines(t: &Tensor, coords: &CoordinateSystem, names: &[String]) -> Vec<String> {
    let upper = t.valence().0;
    t.nonzero_entries()
        .map(|(idx, v)| {
            if idx.is_empty() {
                show(v, coords)
            } else {
                format!("{} = {}", label(&idx, upper, names), show(v, coords))
            }
        })
        .collect()
}

fn summarize(check: &Check, s: &ParacontactStructure) -> CheckSummary {
    let coords = s.coords();
    let names: Vec<String> = match (check.name, s.frame()) {
        ("frame_orthonormal", Some(f)) => f.frame.names().to_vec(),
        _ => coords.names().to_vec(),
    };
    let (residual, detail) = match &check.evidence {
        Evidence::Residual(t) => (residual_lines(t, coords, &names), None),
        Evidence::Signature { expected, found } => (
            Vec::new(),
            Some(match found {
                Ok(f) => format!("expected {expected:?}, found {f:?}"),
                Err(e) => format!("expected {expected:?}, {e}"),
            }),
        ),
    };
    CheckSummary { name: check.name.into(), formula: check.formula.into(), passes: check.passes(), residual, detail }
}

fn summarize_all(report: &AxiomReport, s: &ParacontactStructure) -> Vec<CheckSummary> {
    report.checks.iter().map(|c| summarize(c, s)).collect()
}

fn classification_section(loaded: &Loaded, c: &axioms::Classification) -> ClassificationSection {
    let s = &loaded.structure;
    let alpha = match &c.alpha {
        Ok(a) => a.alpha.as_ref().map(|v| show(v, s.coords())),
        Err(e) => Some(e.to_string()),
    };
    let verdict = match &c.class {
        StructureClass::AlmostAlphaParacosymplectic(a) => format!("{} (alpha = {})", c.class.name(), show(a, s.coords())),
        other => other.to_string(),
    };
    ClassificationSection {
        verdict,
        expected: loaded.definition.expected_class.clone(),
        alpha,
        checks: summarize_all(&c.report, s),
    }
}

fn matrix(t: &Tensor, coords: &CoordinateSystem) -> Vec<Vec<String>> {
    let n = t.dim();
    (0..n).map(|i| (0..n).map(|j| show(t.at(i, j), coords)).collect()).collect()
}

fn curvature_section(s: &ParacontactStructure, with_frame: bool) -> CurvatureSection {
    let geo = s.geometry();
    let coords = s.coords();
    let names = coords.names();
    let n = s.dim();
    let christoffel = geo
        .christoffel()
        .nonzero_entries()
        .filter(|(i, _)| i[1] <= i[2])
        .map(|(i, v)| format!("Γ^{}_{}{} = {}", names[i[0]], names[i[1]], names[i[2]], show(v, coords)))
        .collect();
    let riemann = multi_indices(n, 4)
        .filter(|i| i[1] < i[2])
        .filter_map(|i| {
            let v = geo.riemann().get(&i);
            (!v.is_zero()).then(|| {
                format!("R^{}_{}{}{} = {}", names[i[0]], names[i[1]], names[i[2]], names[i[3]], show(v, coords))
            })
        })
        .collect();
    let frame = if with_frame { s.frame().map(|sf| frame_tables(s, &sf.frame)) } else { None };
    CurvatureSection {
        metric: matrix(s.g(), coords),
        christoffel,
        riemann,
        frame,
        ricci: matrix(geo.ricci(), coords),
        ricci_operator: matrix(geo.ricci_operator(), coords),
        scalar_curvature: show(geo.scalar_curvature(), coords),
        self_tests: summarize_all(&analysis::engine_self_tests(s), s),
    }
}

fn frame_tables(s: &ParacontactStructure, f: &crate::frame::Frame) -> FrameTables {
    let coords = s.coords();
    let names = f.names();
    let conn = f.connection_table(s.geometry());
    let connection = (0..f.len())
        .map(|b| {
            (0..f.len())
                .map(|a| format!("∇_{} {} = {}", names[a], names[b], f.combination(&conn[a][b], coords)))
                .collect()
        })
        .collect();
    let curv = f.curvature_table(s.geometry());
    let pairs = [(0, 1), (1, 2), (0, 2)];
    let curvature = [2, 1, 0]
        .iter()
        .map(|&c| {
            pairs
                .iter()
                .map(|&(a, b)| {
                    format!("R({},{}){} = {}", names[a], names[b], names[c], f.combination(&curv[a][b][c], coords))
                })
                .collect()
        })
        .collect();
    FrameTables { names: names.to_vec(), connection, curvature }
}

fn soliton_summary(r: &SolitonReport, s: &ParacontactStructure) -> SolitonSummary {
    let coords = s.coords();
    SolitonSummary {
        constant: r.constant.to_string(),
        holds: r.holds(),
        sign_class: r.sign_class.to_string(),
        rho: r.rho.as_ref().map(|v| show(v, coords)),
        residual: residual_lines(&r.residual, coords, coords.names()),
    }
}

fn show_vector(v: &VectorField, coords: &CoordinateSystem) -> Vec<String> {
    v.components().iter().map(|c| show(c, coords)).collect()
}

fn soliton_sections(loaded: &Loaded, class: &StructureClass) -> Vec<CandidateSection> {
    let s = &loaded.structure;
    let coords = s.coords();
    loaded
        .candidates
        .iter()
        .map(|cand| {
            let mut sec = CandidateSection {
                name: cand.name.clone(),
                error: None,
                vector: Vec::new(),
                potential: cand.potential.as_ref().map(|p| show(p, coords)),
                yamabe: None,
                solved_lambda: None,
                consequences: None,
                ricci: None,
                solved_mu: None,
                killing: false,
                automorphism: Vec::new(),
                conformal: None,
                passed: true,
            };
            let v = match cand.resolve_vector(s) {
                Ok(v) => v,
                Err(e) => {
                    sec.error = Some(e.to_string());
                    sec.passed = false;
                    return sec;
                }
            };
            sec.vector = show_vector(&v, coords);
            let show_q = |q: Option<Rational>| Some(q.map_or_else(|| "none".to_string(), |q| q.to_string()));
            sec.solved_lambda = show_q(analysis::yamabe_solve_lambda(s, &v));
            sec.solved_mu = show_q(analysis::ricci_solve_mu(s, &v));
            if let Some(lambda) = &cand.lambda {
                let y = analysis::yamabe_check(s, &v, lambda);
                sec.passed &= y.holds();
                if y.holds() && class.is_valid() {
                    if let Ok(c) = analysis::soliton_consequence_suite(s, &v, lambda, class) {
                        sec.passed &= c.passes();
                        sec.consequences = Some(summarize_all(&c, s));
                    }
                }
                sec.yamabe = Some(soliton_summary(&y, s));
            }
            if let Some(mu) = &cand.mu {
                let r = analysis::ricci_soliton_check(s, &v, mu);
                sec.passed &= r.holds();
                sec.ricci = Some(soliton_summary(&r, s));
            }
            sec.killing = analysis::killing_check(s, &v).0;
            sec.automorphism = summarize_all(&analysis::automorphism_check(s, &v), s);
            if let Ok(c) = analysis::conformal_identities_check(s, &v) {
                sec.passed &= c.passes();
                sec.conformal = Some(ConformalSummary {
                    rho: show(&c.rho, coords),
                    checks: summarize_all(&conformal_report(s.dim(), c), s),
                });
            }
            sec
        })
        .collect()
}

fn conformal_report(n: usize, c: analysis::ConformalReport) -> AxiomReport {
    AxiomReport {
        checks: vec![
            Check::residual("lie_ricci", "L_V S + (n−2)∇Dρ − (Δρ)g", c.ricci_residual),
            Check::scalar("lie_scalar", "L_V r + 2ρr − 2(n−1)Δρ", n, c.scalar_residual),
        ],
    }
}

fn identity_section(loaded: &Loaded, class: &StructureClass, suite: Suite) -> IdentitySection {
    let s = &loaded.structure;
    let coords = s.coords();
    let n = s.dim();
    let mut facts = Vec::new();
    let checks = match suite {
        Suite::Dim3 => summarize_all(&analysis::engine_self_tests(s), s),
        Suite::Conformal => {
            let mut out = Vec::new();
            for cand in &loaded.candidates {
                let Ok(v) = cand.resolve_vector(s) else { continue };
                match analysis::conformal_identities_check(s, &v) {
                    Ok(c) => {
                        facts.push(format!("{}: rho = {}", cand.name, show(&c.rho, coords)));
                        for mut sum in summarize_all(&conformal_report(n, c), s) {
                            sum.name = format!("{}.{}", cand.name, sum.name);
                            out.push(sum);
                        }
                    }
                    Err(e) => facts.push(format!("{}: {e}", cand.name)),
                }
            }
            out
        }
        Suite::Class => match axioms::identity_suite_unchecked(s, class) {
            Err(e) => vec![CheckSummary {
                name: "class".into(),
                formula: "structure belongs to a class with an identity suite".into(),
                passes: false,
                residual: Vec::new(),
                detail: Some(e.to_string()),
            }],
            Ok(mut report) => {
                let r = analysis::ricci_closed_form_check(s, class).expect("class supported");
                report.checks.push(Check::residual("ricci_closed_form", "S − (αg + βη⊗η) for the class", r));
                let xr = analysis::xi_scalar_derivative_check(s, class).expect("class supported");
                let formula = if *class == StructureClass::ParaKenmotsu { "ξ(r) + 2(r+6)" } else { "ξ(r)" };
                report.checks.push(Check::scalar("xi_r", formula, n, xr));
                let e = analysis::einstein_classify(s);
                let opt = |v: &Option<RationalFunction>| v.as_ref().map_or_else(|| "none".into(), |v| show(v, coords));
                facts.push(format!("eta-Einstein: {} (alpha = {}, beta = {})", e.verdict, opt(&e.alpha), opt(&e.beta)));
                let c = analysis::constant_curvature_solve(s).c;
                facts.push(format!("constant curvature: {}", c.map_or_else(|| "none".into(), |c| c.to_string())));
                summarize_all(&report, s)
            }
        },
    };
    IdentitySection { suite: suite.to_string(), checks, facts }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let w = &mut o;
        let _ = writeln!(w, "{} {}: {} {}", self.tool, self.version, self.command, self.input);
        let c = &self.conventions;
        let _ = writeln!(w, "conventions: kappa = {}, two-form d factor = {}, wedge factor = {}", c.kappa, c.two_form_d_factor, c.wedge_factor);
        let _ = writeln!(w, "  riemann: {}", c.riemann);
        let _ = writeln!(w, "  ricci: {}", c.ricci);
        let _ = writeln!(w, "  laplacian: {}", c.laplacian);
        let _ = writeln!(w, "  yamabe solitons: {}", c.yamabe_sign);
        let _ = writeln!(w, "  ricci solitons: {}", c.ricci_soliton_sign);
        let _ = writeln!(w, "metric mode: {}", self.metric_mode);
        for note in &self.notes {
            let _ = writeln!(w, "note: {note}");
        }
        if let Some(cl) = &self.classification {
            let _ = writeln!(w, "\n== classification ==");
            let _ = writeln!(w, "verdict: {}", cl.verdict);
            if let Some(e) = &cl.expected {
                let _ = writeln!(w, "expected: {e}");
            }
            if let Some(a) = &cl.alpha {
                let _ = writeln!(w, "alpha: {a}");
            }
            write_checks(w, &cl.checks);
        }
        if let Some(cv) = &self.curvature {
            let _ = writeln!(w, "\n== curvature ==");
            write_matrix(w, "metric g", &cv.metric);
            let _ = writeln!(w, "christoffel symbols (nonzero, i <= j):");
            write_list(w, &cv.christoffel);
            let _ = writeln!(w, "riemann components (nonzero, i < j):");
            write_list(w, &cv.riemann);
            if let Some(f) = &cv.frame {
                let _ = writeln!(w, "frame connection table ({}):", f.names.join(", "));
                write_table(w, &f.connection);
                let _ = writeln!(w, "frame curvature table:");
                write_table(w, &f.curvature);
            }
            write_matrix(w, "ricci tensor S", &cv.ricci);
            write_matrix(w, "ricci operator Q", &cv.ricci_operator);
            let _ = writeln!(w, "scalar curvature r = {}", cv.scalar_curvature);
            let _ = writeln!(w, "engine self-tests:");
            write_checks(w, &cv.self_tests);
        }
        if let Some(sols) = &self.solitons {
            let _ = writeln!(w, "\n== solitons ==");
            if sols.is_empty() {
                let _ = writeln!(w, "no candidates");
            }
            for c in sols {
                let _ = writeln!(w, "candidate {}: {}", c.name, if c.passed { "PASS" } else { "FAIL" });
                if let Some(e) = &c.error {
                    let _ = writeln!(w, "  error: {e}");
                    continue;
                }
                let _ = writeln!(w, "  V = ({})", c.vector.join(", "));
                if let Some(p) = &c.potential {
                    let _ = writeln!(w, "  potential f = {p}");
                }
                if let Some(y) = &c.yamabe {
                    write_soliton(w, "yamabe", "lambda", y);
                }
                if let Some(l) = &c.solved_lambda {
                    let _ = writeln!(w, "  solved lambda: {l}");
                }
                if let Some(cs) = &c.consequences {
                    let _ = writeln!(w, "  consequences:");
                    write_checks_indented(w, cs, "    ");
                }
                if let Some(r) = &c.ricci {
                    write_soliton(w, "ricci", "mu", r);
                }
                if let Some(m) = &c.solved_mu {
                    let _ = writeln!(w, "  solved mu: {m}");
                }
                let _ = writeln!(w, "  killing: {}", if c.killing { "yes" } else { "no" });
                let auto = c.automorphism.iter().all(|a| a.passes);
                let _ = writeln!(w, "  infinitesimal automorphism: {}", if auto { "yes" } else { "no" });
                for a in c.automorphism.iter().filter(|a| !a.passes) {
                    let _ = writeln!(w, "    {}: {}", a.formula, a.residual.join(", "));
                }
                match &c.conformal {
                    Some(cf) => {
                        let _ = writeln!(w, "  conformal: rho = {}", cf.rho);
                        write_checks_indented(w, &cf.checks, "    ");
                    }
                    None => {
                        let _ = writeln!(w, "  conformal: no");
                    }
                }
            }
        }
        if let Some(id) = &self.identities {
            let _ = writeln!(w, "\n== identities ({}) ==", id.suite);
            write_checks(w, &id.checks);
            for f in &id.facts {
                let _ = writeln!(w, "{f}");
            }
        }
        let _ = writeln!(w, "\nresult: {}", if self.passed { "PASS" } else { "FAIL" });
        o
    }
}

fn write_soliton(w: &mut String, kind: &str, constant: &str, s: &SolitonSummary) {
    let _ = writeln!(
        w,
        "  {kind}: {constant} = {}, {}, {}",
        s.constant,
        if s.holds { "holds" } else { "fails" },
        s.sign_class
    );
    if let Some(r) = &s.rho {
        let _ = writeln!(w, "    rho = {r}");
    }
    for line in &s.residual {
        let _ = writeln!(w, "    residual {line}");
    }
}

fn write_checks(w: &mut String, checks: &[CheckSummary]) {
    write_checks_indented(w, checks, "");
}

fn write_checks_indented(w: &mut String, checks: &[CheckSummary], indent: &str) {
    for c in checks {
        let mark = if c.passes { "ok  " } else { "FAIL" };
        let _ = writeln!(w, "{indent}[{mark}] {:<22} {}", c.name, c.formula);
        if let Some(d) = &c.detail {
            let _ = writeln!(w, "{indent}       {d}");
        }
        for r in &c.residual {
            let _ = writeln!(w, "{indent}       {r}");
        }
    }
}

fn write_list(w: &mut String, items: &[String]) {
    if items.is_empty() {
        let _ = writeln!(w, "  (none)");
    }
    for i in items {
        let _ = writeln!(w, "  {i}");
    }
}

fn write_matrix(w: &mut String, title: &str, rows: &[Vec<String>]) {
    let _ = writeln!(w, "{title}:");
    write_table(w, rows);
}

fn write_table(w: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c}{}", " ".repeat(widths[j] - c.chars().count())))
            .collect();
        let _ = writeln!(w, "  {}", cells.join("   ").trim_end());
    }
}
