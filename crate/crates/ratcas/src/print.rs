//! Canonical printer: `num/den` with explicit `*` and `^`, terms in
//! descending graded-lex order, integer coefficients. The output parses back
//! to the same value.

use std::fmt;

use num_traits::{One, Signed};

use crate::coords::CoordinateSystem;
use crate::poly::{Monomial, Polynomial};
use crate::ratfun::RationalFunction;

pub struct Printed<'a> {
    value: &'a RationalFunction,
    coords: &'a CoordinateSystem,
}

impl RationalFunction {
    pub fn display<'a>(&'a self, coords: &'a CoordinateSystem) -> Printed<'a> {
        Printed { value: self, coords }
    }

    pub fn to_expr_string(&self, coords: &CoordinateSystem) -> String {
        self.display(coords).to_string()
    }
}

impl fmt::Display for Printed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.value.numerator();
        let den = self.value.denominator();
        if den.is_one() {
            return write_poly(f, num, self.coords);
        }
        if num.term_count() > 1 {
            write!(f, "(")?;
            write_poly(f, num, self.coords)?;
            write!(f, ")")?;
        } else {
            write_poly(f, num, self.coords)?;
        }
        write!(f, "/")?;
        if needs_parens_as_divisor(den) {
            write!(f, "(")?;
            write_poly(f, den, self.coords)?;
            write!(f, ")")
        } else {
            write_poly(f, den, self.coords)
        }
    }
}

/// A divisor can go bare only if it is an integer or a single power `v^k`.
fn needs_parens_as_divisor(p: &Polynomial) -> bool {
    if p.term_count() != 1 {
        return true;
    }
    let (m, c) = p.leading_term().unwrap();
    if m.is_one() {
        return false;
    }
    !(c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() == 1)
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Polynomial, coords: &CoordinateSystem) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let abs = c.abs();
        if m.is_one() {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write_monomial(f, m, coords)?;
        }
    }
    Ok(())
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, coords: &CoordinateSystem) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let name = coords.names().get(i).map(String::as_str).unwrap_or("?");
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use crate::{parse_expr, CoordinateSystem};

    fn show(s: &str) -> String {
        let c = CoordinateSystem::new(["x", "y", "z"]).unwrap();
        parse_expr(s, &c).unwrap().to_expr_string(&c)
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(show("(1+4*y^2)/z^2"), "(4*y^2 + 1)/z^2");
        assert_eq!(show("x - x"), "0");
        assert_eq!(show("-y/(2*z)"), "-y/(2*z)");
        assert_eq!(show("x/2 + 1/3"), "(3*x + 2)/6");
        assert_eq!(show("z*y + x^2 - 1"), "x^2 + y*z - 1");
        assert_eq!(show("-2*y/z"), "-2*y/z");
        assert_eq!(show("1/(x*z)"), "1/(x*z)");
    }
}
