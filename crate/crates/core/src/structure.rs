//! Almost paracontact metric structures on a chart.

use ratcas::{CoordinateSystem, Rational, RationalFunction};

use crate::error::{Error, Result};
use crate::forms::FormConvention;
use crate::frame::Frame;
use crate::geometry::{Geometry, Metric};
use crate::tensor::{Tensor, VectorField};

/// A frame with declared pseudo-orthonormal signs.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedFrame {
    pub frame: Frame,
    pub signs: Vec<i64>,
}

/// The data `(φ, ξ, η, g)` on a coordinate chart. Nothing is assumed about
/// the axioms; they are verified by the checks in [`crate::axioms`].
#[derive(Clone, Debug)]
pub struct ParacontactStructure {
    coords: CoordinateSystem,
    phi: Tensor,
    xi: VectorField,
    eta: Tensor,
    geometry: Geometry,
    base_point: Vec<Rational>,
    frame: Option<SignedFrame>,
    convention: FormConvention,
}

impl ParacontactStructure {
    pub fn new(
        coords: CoordinateSystem,
        phi: Tensor,
        xi: VectorField,
        eta: Tensor,
        metric: Metric,
        base_point: Vec<Rational>,
    ) -> Result<Self> {
        let n = coords.dim();
        phi.expect_valence(1, 1)?;
        eta.expect_valence(0, 1)?;
        for found in [phi.dim(), xi.dim(), eta.dim(), metric.dim(), base_point.len()] {
            if found != n {
                return Err(Error::DimensionMismatch { expected: n, found });
            }
        }
        Ok(ParacontactStructure {
            coords,
            phi,
            xi,
            eta,
            geometry: Geometry::new(metric),
            base_point,
            frame: None,
            convention: FormConvention::default(),
        })
    }

    pub fn with_frame(mut self, frame: Frame, signs: Vec<i64>) -> Result<Self> {
        if frame.len() != self.dim() || signs.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: frame.len().min(signs.len()) });
        }
        self.frame = Some(SignedFrame { frame, signs });
        Ok(self)
    }

    pub fn with_convention(mut self, convention: FormConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn coords(&self) -> &CoordinateSystem {
        &self.coords
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn xi(&self) -> &VectorField {
        &self.xi
    }

    pub fn eta(&self) -> &Tensor {
        &self.eta
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn metric(&self) -> &Metric {
        self.geometry.metric()
    }

    pub fn g(&self) -> &Tensor {
        self.geometry.metric().tensor()
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.base_point
    }

    pub fn frame(&self) -> Option<&SignedFrame> {
        self.frame.as_ref()
    }

    pub fn convention(&self) -> FormConvention {
        self.convention
    }

    /// `η(X)`.
    pub fn eta_of(&self, x: &VectorField) -> RationalFunction {
        self.eta.contract_vector(x)
    }

    /// `η ⊗ ξ` as a `(1,1)` tensor, `X ↦ η(X)ξ`.
    pub fn eta_xi(&self) -> Tensor {
        Tensor::from_fn(self.dim(), 1, 1, |i| self.xi.component(i[0]) * self.eta.get(&[i[1]]))
    }

    /// `η ⊗ η`.
    pub fn eta_eta(&self) -> Tensor {
        self.eta.outer(&self.eta)
    }

    /// `Φ(X,Y) = g(X, φY)`, i.e. `Φ_{ij} = g_{ik} φ^k_j`.
    pub fn fundamental_two_form(&self) -> Tensor {
        let n = self.dim();
        let g = self.g();
        Tensor::from_fn(n, 0, 2, |i| (0..n).map(|k| g.at(i[0], k) * self.phi.at(k, i[1])).sum())
    }

    /// `dη` under the structure's form convention.
    pub fn d_eta(&self) -> Tensor {
        self.convention.d1(&self.eta).expect("eta is a one-form")
    }

    /// `h = ½ L_ξ φ`.
    pub fn h(&self) -> Tensor {
        crate::geometry::lie_derivative(&self.phi, &self.xi).map(RationalFunction::half)
    }

    /// `∇ξ` as the `(1,1)` tensor `X ↦ ∇_X ξ`.
    pub fn nabla_xi(&self) -> Tensor {
        self.geometry.covariant_derivative(&self.xi.to_tensor())
    }
}
