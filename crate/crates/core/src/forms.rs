//! Exterior calculus of low-degree forms with an explicit normalization.

use std::fmt;

use ratcas::{Rational, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::Tensor;

pub const CONVENTION_ENV: &str = "PCV_CONVENTION_KAPPA";

/// Normalization of `d` and `∧` on forms viewed as alternating tensors.
///
/// `Normalized` (κ = ½) uses `dη(X,Y) = ½(X η(Y) − Y η(X) − η([X,Y]))` and
/// `η∧Φ = Alt(η⊗Φ)`. `Unnormalized` (κ = 1) drops every `1/k` factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormConvention {
    #[default]
    Normalized,
    Unnormalized,
}

impl FormConvention {
    /// Reads the override from the environment, falling back to the default.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(CONVENTION_ENV) {
            Err(_) => Ok(Self::default()),
            Ok(v) => Self::parse(&v),
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        match text.trim() {
            "1/2" => Ok(FormConvention::Normalized),
            "1" => Ok(FormConvention::Unnormalized),
            other => Err(format!("{CONVENTION_ENV} must be `1` or `1/2`, got `{other}`")),
        }
    }

    /// Factor κ of `d` on one-forms.
    pub fn kappa(self) -> Rational {
        match self {
            FormConvention::Normalized => Rational::new(1.into(), 2.into()),
            FormConvention::Unnormalized => Rational::from_integer(1.into()),
        }
    }

    /// Factor applied to the cyclic sums of `d` on two-forms and of `η∧Φ`.
    pub fn three_form_factor(self) -> Rational {
        match self {
            FormConvention::Normalized => Rational::new(1.into(), 3.into()),
            FormConvention::Unnormalized => Rational::from_integer(1.into()),
        }
    }

    /// `d` of a function, as a covector.
    pub fn d0(self, f: &RationalFunction, dim: usize) -> Tensor {
        Tensor::covector((0..dim).map(|i| f.partial(i)).collect())
    }

    /// `(dη)_{ij} = κ(∂_i η_j − ∂_j η_i)`.
    pub fn d1(self, eta: &Tensor) -> Result<Tensor> {
        eta.expect_valence(0, 1)?;
        let k = self.kappa();
        Ok(Tensor::from_fn(eta.dim(), 0, 2, |idx| {
            (&eta.get(&[idx[1]]).partial(idx[0]) - &eta.get(&[idx[0]]).partial(idx[1])).scale(&k)
        }))
    }

    /// `d` of a two-form in dimension 3, as the coefficient on `(∂_0, ∂_1, ∂_2)`.
    pub fn d2(self, phi: &Tensor) -> Result<ThreeForm> {
        check_two_form(phi)?;
        let sum = &(&phi.at(1, 2).partial(0) + &phi.at(2, 0).partial(1)) + &phi.at(0, 1).partial(2);
        Ok(ThreeForm(sum.scale(&self.three_form_factor())))
    }

    /// `η∧Φ` in dimension 3.
    pub fn wedge(self, eta: &Tensor, phi: &Tensor) -> Result<ThreeForm> {
        eta.expect_valence(0, 1)?;
        check_two_form(phi)?;
        let e = |i: usize| eta.get(&[i]);
        let sum = &(&(e(0) * phi.at(1, 2)) + &(e(1) * phi.at(2, 0))) + &(e(2) * phi.at(0, 1));
        Ok(ThreeForm(sum.scale(&self.three_form_factor())))
    }
}

impl fmt::Display for FormConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormConvention::Normalized => write!(f, "kappa=1/2, two-form d factor=1/3, wedge factor=1/3"),
            FormConvention::Unnormalized => write!(f, "kappa=1, two-form d factor=1, wedge factor=1"),
        }
    }
}

fn check_two_form(phi: &Tensor) -> Result<()> {
    phi.expect_valence(0, 2)?;
    if phi.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: phi.dim() });
    }
    if !phi.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    Ok(())
}

/// Top-degree form in dimension 3, stored as its value on `(∂_0, ∂_1, ∂_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm(pub RationalFunction);

impl ThreeForm {
    pub fn coefficient(&self) -> &RationalFunction {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
