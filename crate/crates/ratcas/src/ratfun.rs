use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{CasError, Result};
use crate::poly::Polynomial;
use crate::Rational;

/// Exact quotient of two polynomials over ℚ in canonical form.
///
/// Canonical means: numerator and denominator are coprime, both have integer
/// coefficients whose combined content is 1, and the denominator's leading
/// coefficient (graded-lex) is positive. Zero is `0/1`. Structural equality
/// is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn constant(c: Rational) -> Self {
        let (n, d) = (c.numer().clone(), c.denom().clone());
        RationalFunction {
            num: Polynomial::constant(Rational::from_integer(n)),
            den: Polynomial::constant(Rational::from_integer(d)),
        }
    }

    pub fn var(index: usize) -> Self {
        Self::from_polynomial(Polynomial::var(index))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::from_coprime(p, Polynomial::one())
    }

    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(CasError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self::from_coprime(num, den)
        } else {
            Self::from_coprime(
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    }

    /// Normalizes integer contents of an already coprime pair.
    fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (cn, pn) = num.integer_primitive();
        let (cd, pd) = den.integer_primitive();
        let q = cn / cd;
        let num = pn.scale(&Rational::from_integer(q.numer().clone()));
        let den = pd.scale(&Rational::from_integer(q.denom().clone()));
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant in the canonical-form sense: both parts of degree zero.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coprime(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CasError::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(Self::from_coprime(base.num.pow(e), base.den.pow(e)))
    }

    /// Quotient-rule derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        let dn = self.num.partial(var);
        let dd = self.den.partial(var);
        if dd.is_zero() {
            if dn.is_zero() {
                return Self::zero();
            }
            return Self::reduce(dn, self.den.clone());
        }
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::reduce(num, &self.den * &self.den)
    }

    /// Exact value at a positional point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(CasError::Pole);
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn is_negative_constant(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_negative())
    }

    pub fn max_var_width(&self) -> usize {
        self.num.width().max(self.den.width())
    }

    pub fn half(&self) -> Self {
        self.scale(&Rational::new(BigInt::one(), BigInt::from(2)))
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() || rhs.den.is_one() {
            // a + c/d = (a·d + c)/d is already coprime
            let (p, q) = if self.den.is_one() { (self, rhs) } else { (rhs, self) };
            return RationalFunction::from_coprime(&(&p.num * &q.den) + &q.num, q.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        let den = &self.den * &d;
        RationalFunction::reduce(num, den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let q = |p: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &q(&self.num, &g1) * &q(&rhs.num, &g2);
        let den = &q(&self.den, &g2) * &q(&rhs.den, &g1);
        RationalFunction::from_coprime(num, den)
    }
}

/// Panics on a zero divisor; use [`RationalFunction::checked_div`] when the
/// divisor is not known to be nonzero.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction { (&self).$m(rhs) }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RationalFunction {
        RationalFunction::var(0)
    }
    fn y() -> RationalFunction {
        RationalFunction::var(1)
    }
    fn z() -> RationalFunction {
        RationalFunction::var(2)
    }

    #[test]
    fn add_over_common_denominator() {
        let a = &x() / &z();
        let b = &y() / &z();
        assert_eq!(&a + &b, &(&x() + &y()) / &z());
    }

    #[test]
    fn inverse_cancels() {
        assert!((&z() * &z().inv().unwrap()).is_one());
        assert_eq!(RationalFunction::one().checked_div(&RationalFunction::zero()), Err(CasError::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_sign_and_content() {
        // x / (-2z) == (-x) / (2z)
        let a = &x() / &(&z() * &RationalFunction::from_int(-2));
        let b = &(-x()) / &(&z() * &RationalFunction::from_int(2));
        assert_eq!(a, b);
        assert!(a.denominator().leading_coeff().unwrap().is_positive());
        let half = RationalFunction::constant(Rational::new(1.into(), 2.into()));
        assert_eq!(half.numerator(), &Polynomial::one());
        assert_eq!(half.denominator(), &Polynomial::from_int(2));
    }

    #[test]
    fn quotient_rule() {
        // d/dz (1+4y^2)/z^2 = -2(1+4y^2)/z^3
        let four = RationalFunction::from_int(4);
        let f = &(&RationalFunction::one() + &(&four * &(&y() * &y()))) / &(&z() * &z());
        let expect = &(&RationalFunction::from_int(-2) * &(&RationalFunction::one() + &(&four * &(&y() * &y()))))
            / &(&z() * &(&z() * &z()));
        assert_eq!(f.partial(2), expect);
        assert!(RationalFunction::from_int(7).partial(0).is_zero());
        assert_eq!((&x() * &y()).partial(0), y());
    }

    #[test]
    fn eval_pole() {
        let f = z().inv().unwrap();
        let origin = vec![Rational::zero(); 3];
        assert_eq!(f.eval(&origin), Err(CasError::Pole));
        assert!((&x() - &x()).eval(&origin).unwrap().is_zero());
    }

    #[test]
    fn negative_power_is_division() {
        assert_eq!(z().pow(-2).unwrap(), &RationalFunction::one() / &(&z() * &z()));
        assert_eq!(RationalFunction::zero().pow(-1), Err(CasError::DivisionByZero));
        assert!(RationalFunction::zero().pow(0).unwrap().is_one());
    }
}
