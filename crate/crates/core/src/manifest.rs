//! JSON manifold definitions and their conversion to structures.

use std::collections::BTreeMap;
use std::path::Path;

use ratcas::{parse_expr, parse_rational, CasError, CoordinateSystem, RationalFunction};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::SolitonCandidate;
use crate::error::Error;
use crate::forms::FormConvention;
use crate::frame::Frame;
use crate::geometry::Metric;
use crate::structure::ParacontactStructure;
use crate::tensor::{Tensor, VectorField};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDefinition {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub coordinates: Vec<String>,
    pub metric: MetricSpec,
    pub phi: Vec<Vec<String>>,
    pub xi: Vec<String>,
    pub eta: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta_printed: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<FrameSpec>,
    pub base_point: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_class: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<CandidateSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricSpec {
    pub mode: MetricMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricMode {
    /// Reconstruct `g` from the frame and its declared signs.
    FromFrame,
    /// Use the `matrix` entries as given.
    Printed,
}

impl std::str::FromStr for MetricMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "from_frame" => Ok(MetricMode::FromFrame),
            "printed" => Ok(MetricMode::Printed),
            other => Err(format!("unknown metric mode `{other}` (expected from_frame or printed)")),
        }
    }
}

impl std::fmt::Display for MetricMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MetricMode::FromFrame => "from_frame",
            MetricMode::Printed => "printed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSpec {
    pub vectors: Vec<FrameVectorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameVectorSpec {
    pub name: String,
    pub components: Vec<String>,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<String>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid manifold definition: {0}")]
    Json(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("{field}: {source}")]
    Expression { field: String, source: CasError },
    #[error("{0}")]
    Structure(#[from] Error),
}

/// Options applied while turning a definition into a structure.
#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    pub metric_mode: Option<MetricMode>,
    pub convention: FormConvention,
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub definition: ManifoldDefinition,
    pub structure: ParacontactStructure,
    pub candidates: Vec<SolitonCandidate>,
    pub metric_mode: MetricMode,
    /// Differences between printed data and the data actually used.
    pub notes: Vec<String>,
}

pub fn load_path(path: &Path, options: LoadOptions) -> Result<Loaded, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
    load_str(&text, options)
}

pub fn load_str(text: &str, options: LoadOptions) -> Result<Loaded, LoadError> {
    let def: ManifoldDefinition = serde_json::from_str(text).map_err(|e| LoadError::Json(e.to_string()))?;
    build(def, options)
}

struct Ctx<'a> {
    coords: &'a CoordinateSystem,
}

impl Ctx<'_> {
    fn expr(&self, field: String, text: &str) -> Result<RationalFunction, LoadError> {
        parse_expr(text, self.coords).map_err(|source| LoadError::Expression { field, source })
    }

    fn vector(&self, field: &str, items: &[String]) -> Result<Vec<RationalFunction>, LoadError> {
        let n = self.coords.dim();
        if items.len() != n {
            return Err(LoadError::Schema(format!("{field} has {} entries, expected {n}", items.len())));
        }
        items.iter().enumerate().map(|(i, t)| self.expr(format!("{field}[{i}]"), t)).collect()
    }

    fn matrix(&self, field: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<RationalFunction>>, LoadError> {
        let n = self.coords.dim();
        if rows.len() != n {
            return Err(LoadError::Schema(format!("{field} has {} rows, expected {n}", rows.len())));
        }
        rows.iter().enumerate().map(|(i, row)| self.vector(&format!("{field}[{i}]"), row)).collect()
    }
}

pub fn build(def: ManifoldDefinition, options: LoadOptions) -> Result<Loaded, LoadError> {
    if def.schema != SCHEMA_VERSION {
        return Err(LoadError::Schema(format!("unsupported schema {}, expected {SCHEMA_VERSION}", def.schema)));
    }
    let coords = CoordinateSystem::new(def.coordinates.iter().map(String::as_str))
        .map_err(|e| LoadError::Schema(format!("coordinates: {e}")))?;
    let n = coords.dim();
    let ctx = Ctx { coords: &coords };
    let mut notes = Vec::new();

    let phi = Tensor::from_rows(1, 1, ctx.matrix("phi", &def.phi)?)?;
    let xi = VectorField::new(ctx.vector("xi", &def.xi)?);
    let eta = Tensor::covector(ctx.vector("eta", &def.eta)?);
    if let Some(printed) = &def.eta_printed {
        let printed = ctx.vector("eta_printed", printed)?;
        for (i, p) in printed.iter().enumerate() {
            if p != eta.get(&[i]) {
                notes.push(format!(
                    "eta[{}]: printed {}, used {}",
                    coords.name(i),
                    p.display(&coords),
                    eta.get(&[i]).display(&coords)
                ));
            }
        }
    }

    let frame = match &def.frame {
        None => None,
        Some(spec) => {
            if spec.vectors.len() != n {
                return Err(LoadError::Schema(format!("frame has {} vectors, expected {n}", spec.vectors.len())));
            }
            let mut names = Vec::new();
            let mut vectors = Vec::new();
            let mut signs = Vec::new();
            for (a, v) in spec.vectors.iter().enumerate() {
                if v.sign != 1 && v.sign != -1 {
                    return Err(LoadError::Schema(format!("frame.vectors[{a}].sign must be 1 or -1")));
                }
                names.push(v.name.clone());
                vectors.push(VectorField::new(ctx.vector(&format!("frame.vectors[{a}].components"), &v.components)?));
                signs.push(v.sign);
            }
            Some((Frame::new(names, vectors)?, signs))
        }
    };

    let printed = def.metric.matrix.as_ref().map(|m| ctx.matrix("metric.matrix", m)).transpose()?;
    let mode = options.metric_mode.unwrap_or(def.metric.mode);
    let g = match mode {
        MetricMode::FromFrame => {
            let (frame, signs) = frame
                .as_ref()
                .ok_or_else(|| LoadError::Schema("metric mode from_frame requires a frame".into()))?;
            let g = frame.metric_with_signs(signs)?;
            if let Some(p) = &printed {
                for i in 0..n {
                    for j in i..n {
                        if &p[i][j] != g.at(i, j) {
                            notes.push(format!(
                                "metric[{}][{}]: printed {}, frame-reconstructed {}",
                                coords.name(i),
                                coords.name(j),
                                p[i][j].display(&coords),
                                g.at(i, j).display(&coords)
                            ));
                        }
                    }
                }
            }
            g
        }
        MetricMode::Printed => {
            let p = printed.ok_or_else(|| LoadError::Schema("metric mode printed requires metric.matrix".into()))?;
            Tensor::from_rows(0, 2, p)?
        }
    };
    let metric = Metric::new(g)?;

    let mut values = BTreeMap::new();
    for (k, v) in &def.base_point {
        let q = parse_rational(v).map_err(|source| LoadError::Expression { field: format!("base_point.{k}"), source })?;
        values.insert(k.clone(), q);
    }
    let base_point = coords.point(&values).map_err(|e| LoadError::Schema(format!("base_point: {e}")))?;
    check_no_poles(&base_point, &[("metric", metric.tensor()), ("phi", &phi), ("eta", &eta), ("xi", &xi.to_tensor())])?;

    let mut candidates = Vec::new();
    for (c, spec) in def.candidates.iter().enumerate() {
        let field = format!("candidates[{c}]");
        let vector = spec.vector.as_ref().map(|v| ctx.vector(&format!("{field}.vector"), v)).transpose()?;
        let potential = spec.potential.as_ref().map(|p| ctx.expr(format!("{field}.potential"), p)).transpose()?;
        let rational = |name: &str, v: &Option<String>| {
            v.as_ref()
                .map(|t| parse_rational(t).map_err(|source| LoadError::Expression { field: format!("{field}.{name}"), source }))
                .transpose()
        };
        let lambda = rational("lambda", &spec.lambda)?;
        let mu = rational("mu", &spec.mu)?;
        if vector.is_none() && potential.is_none() {
            return Err(LoadError::Schema(format!("{field} needs a vector or a potential")));
        }
        if lambda.is_none() && mu.is_none() {
            return Err(LoadError::Schema(format!("{field} needs lambda or mu")));
        }
        candidates.push(SolitonCandidate {
            name: spec.name.clone(),
            vector: vector.map(VectorField::new),
            lambda,
            mu,
            potential,
        });
    }

    let mut structure = ParacontactStructure::new(coords, phi, xi, eta, metric, base_point)?
        .with_convention(options.convention);
    if let Some((frame, signs)) = frame {
        structure = structure.with_frame(frame, signs)?;
    }
    Ok(Loaded {
        name: def.name.clone().unwrap_or_else(|| "manifold".into()),
        definition: def,
        structure,
        candidates,
        metric_mode: mode,
        notes,
    })
}

fn check_no_poles(point: &[ratcas::Rational], tensors: &[(&str, &Tensor)]) -> Result<(), LoadError> {
    for (what, t) in tensors {
        for (idx, v) in t.entries() {
            if v.eval(point).is_err() {
                return Err(Error::PoleAtPoint { what: format!("{what}{idx:?}") }.into());
            }
        }
    }
    Ok(())
}

/// Bundled example definitions.
pub mod fixtures {
    pub const EX1: &str = include_str!("../fixtures/ex1.json");
    pub const EX2: &str = include_str!("../fixtures/ex2.json");
    pub const FLAT: &str = include_str!("../fixtures/flat.json");

    pub const ALL: [(&str, &str); 3] = [("ex1", EX1), ("ex2", EX2), ("flat", FLAT)];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat_with(from: &str, to: &str) -> Result<Loaded, LoadError> {
        let text = fixtures::FLAT.replacen(from, to, 1);
        assert_ne!(text, fixtures::FLAT, "substitution `{from}` did not apply");
        load_str(&text, LoadOptions::default())
    }

    #[test]
    fn fixtures_load() {
        for (name, text) in fixtures::ALL {
            let l = load_str(text, LoadOptions::default()).unwrap();
            assert_eq!(l.name, name);
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(matches!(flat_with("\"schema\"", "\"extra\": 1, \"schema\""), Err(LoadError::Json(_))));
    }

    #[test]
    fn expression_errors_name_the_field() {
        match flat_with("\"1\"", "\"1 + w\"") {
            Err(LoadError::Expression { field, source: CasError::UnknownIdentifier { name, .. } }) => {
                assert!(field.starts_with("metric"), "{field}");
                assert_eq!(name, "w");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn base_point_pole_is_rejected() {
        let text = fixtures::EX1.replace("\"z\": \"1\"", "\"z\": \"0\"");
        assert_ne!(text, fixtures::EX1);
        assert!(matches!(
            load_str(&text, LoadOptions::default()),
            Err(LoadError::Structure(Error::PoleAtPoint { .. }))
        ));
    }

    #[test]
    fn metric_mode_round_trip() {
        for mode in [MetricMode::FromFrame, MetricMode::Printed] {
            assert_eq!(mode.to_string().parse::<MetricMode>(), Ok(mode));
        }
        assert!("frame".parse::<MetricMode>().is_err());
    }

    #[test]
    fn printed_mode_notes_discrepancies() {
        let l = load_str(fixtures::EX1, LoadOptions::default()).unwrap();
        assert!(l.notes.iter().any(|n| n.starts_with("metric[x][z]")), "{:?}", l.notes);
        assert!(l.notes.iter().any(|n| n.starts_with("eta[x]")), "{:?}", l.notes);
    }
}
