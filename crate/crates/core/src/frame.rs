//! Frames of vector fields: coframes, frame components and frame tables.

use ratcas::{CoordinateSystem, Rational, RationalFunction};

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::linalg;
use crate::tensor::{Tensor, VectorField};

#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    names: Vec<String>,
    vectors: Vec<VectorField>,
    coframe: Vec<Tensor>,
}

impl Frame {
    /// Fails when the component matrix has identically vanishing determinant.
    pub fn new(names: Vec<String>, vectors: Vec<VectorField>) -> Result<Self> {
        let n = vectors.len();
        if names.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: names.len() });
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
        }
        // columns are the frame vectors
        let m: linalg::Matrix =
            (0..n).map(|i| (0..n).map(|a| vectors[a].component(i).clone()).collect()).collect();
        let (_, inv) = linalg::invert(&m).ok_or(Error::DegenerateFrame)?;
        let coframe = inv.into_iter().map(Tensor::covector).collect();
        Ok(Frame { names, vectors, coframe })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vectors(&self) -> &[VectorField] {
        &self.vectors
    }

    pub fn vector(&self, a: usize) -> &VectorField {
        &self.vectors[a]
    }

    /// Dual one-form `θ^a` with `θ^a(F_b) = δ^a_b`.
    pub fn coframe(&self, a: usize) -> &Tensor {
        &self.coframe[a]
    }

    /// Coefficients `c_a` with `W = Σ c_a F_a`.
    pub fn express(&self, w: &VectorField) -> Vec<RationalFunction> {
        self.coframe.iter().map(|theta| theta.contract_vector(w)).collect()
    }

    /// The metric for which the frame is pseudo-orthonormal with the given signs:
    /// `g = Σ ε_a θ^a ⊗ θ^a`.
    pub fn metric_with_signs(&self, signs: &[i64]) -> Result<Tensor> {
        if signs.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: signs.len() });
        }
        let n = self.len();
        Ok(Tensor::from_fn(n, 0, 2, |idx| {
            signs
                .iter()
                .zip(&self.coframe)
                .map(|(&s, th)| (th.get(&[idx[0]]) * th.get(&[idx[1]])).scale(&Rational::from_integer(s.into())))
                .sum()
        }))
    }

    /// `table[a][b]` holds the frame components of `∇_{F_a} F_b`.
    pub fn connection_table(&self, geometry: &Geometry) -> Vec<Vec<Vec<RationalFunction>>> {
        self.vectors
            .iter()
            .map(|fa| self.vectors.iter().map(|fb| self.express(&geometry.nabla(fa, fb))).collect())
            .collect()
    }

    /// `table[a][b][c]` holds the frame components of `R(F_a, F_b) F_c`.
    pub fn curvature_table(&self, geometry: &Geometry) -> Vec<Vec<Vec<Vec<RationalFunction>>>> {
        let f = &self.vectors;
        f.iter()
            .map(|fa| {
                f.iter()
                    .map(|fb| f.iter().map(|fc| self.express(&geometry.curvature(fa, fb, fc))).collect())
                    .collect()
            })
            .collect()
    }

    /// Renders `Σ c_a F_a` such as `-3*e1` or `xi - (2*y)*e2`.
    pub fn combination(&self, coeffs: &[RationalFunction], coords: &CoordinateSystem) -> String {
        let mut out = String::new();
        for (c, name) in coeffs.iter().zip(&self.names) {
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) = match c.constant_value() {
                Some(v) if v < Rational::from_integer(0.into()) => (true, -c.clone()),
                _ => (false, c.clone()),
            };
            let term = if magnitude.is_one() {
                name.clone()
            } else if magnitude.is_constant() {
                format!("{}*{}", magnitude.display(coords), name)
            } else {
                format!("({})*{}", magnitude.display(coords), name)
            };
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&term),
                (true, true) => out.push_str(&format!("-{term}")),
                (false, false) => out.push_str(&format!(" + {term}")),
                (false, true) => out.push_str(&format!(" - {term}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratcas::parse_expr;

    fn xyz() -> CoordinateSystem {
        CoordinateSystem::new(["x", "y", "z"]).unwrap()
    }

    fn field(exprs: [&str; 3]) -> VectorField {
        let c = xyz();
        VectorField::new(exprs.iter().map(|e| parse_expr(e, &c).unwrap()).collect())
    }

    fn sasakian_frame() -> Frame {
        Frame::new(
            vec!["e1".into(), "e2".into(), "xi".into()],
            vec![field(["2*y", "0", "z"]), field(["0", "1", "0"]), field(["1", "0", "0"])],
        )
        .unwrap()
    }

    #[test]
    fn express_coordinate_fields() {
        let f = sasakian_frame();
        let c = xyz();
        let p = |e: &str| parse_expr(e, &c).unwrap();
        assert_eq!(f.express(&field(["1", "0", "0"])), vec![p("0"), p("0"), p("1")]);
        assert_eq!(f.express(&field(["0", "0", "1"])), vec![p("1/z"), p("0"), p("-2*y/z")]);
        assert_eq!(f.express(f.vector(1)), vec![p("0"), p("1"), p("0")]);
    }

    #[test]
    fn degenerate_frame_rejected() {
        let r = Frame::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![field(["x", "0", "0"]), field(["2*x", "0", "0"]), field(["0", "0", "1"])],
        );
        assert_eq!(r, Err(Error::DegenerateFrame));
    }

    #[test]
    fn reconstructed_metric_is_pseudo_orthonormal() {
        let f = sasakian_frame();
        let g = f.metric_with_signs(&[1, -1, 1]).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let expect = match (a == b, a) {
                    (true, 1) => RationalFunction::from_int(-1),
                    (true, _) => RationalFunction::one(),
                    _ => RationalFunction::zero(),
                };
                assert_eq!(g.pair(f.vector(a), f.vector(b)), expect);
            }
        }
        assert_eq!(g.at(0, 2), &parse_expr("-2*y/z", &xyz()).unwrap());
    }

    #[test]
    fn combination_rendering() {
        let f = sasakian_frame();
        let c = xyz();
        let p = |e: &str| parse_expr(e, &c).unwrap();
        assert_eq!(f.combination(&[p("-3"), p("0"), p("0")], &c), "-3*e1");
        assert_eq!(f.combination(&[p("1/z"), p("0"), p("-2*y/z")], &c), "(1/z)*e1 + (-2*y/z)*xi");
        assert_eq!(f.combination(&[p("0"), p("0"), p("0")], &c), "0");
        assert_eq!(f.combination(&[p("0"), p("-1"), p("1")], &c), "-e2 + xi");
    }
}
