//! Recursive-descent parser for rational expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? INTEGER | '(' '-'? INTEGER ')'
//! atom   := INTEGER | IDENT | '(' expr ')'
//! ```
//!
//! Values are built directly as canonical [`RationalFunction`]s; there is no
//! intermediate tree.

use num_bigint::BigInt;

use crate::coords::CoordinateSystem;
use crate::error::{CasError, Result};
use crate::ratfun::RationalFunction;
use crate::Rational;

const MAX_EXPONENT: i64 = 1 << 16;

pub fn parse_expr(text: &str, coords: &CoordinateSystem) -> Result<RationalFunction> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, coords };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(value)
}

/// Parses a rational literal such as `3`, `-1/2` or `4/6`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let err = |message: &str| CasError::Syntax { offset: 0, message: message.to_string() };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n) || !valid(d) || d.starts_with('-') {
        return Err(err(&format!("`{text}` is not a rational literal")));
    }
    let n: BigInt = n.parse().map_err(|_| err("bad integer"))?;
    let d: BigInt = d.parse().map_err(|_| err("bad integer"))?;
    if d == BigInt::from(0) {
        return Err(CasError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    coords: &'a CoordinateSystem,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> CasError {
        CasError::Syntax { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let parenthesized = self.eat(b'(');
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected integer exponent"));
        }
        let e: i64 = digits
            .parse()
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or(CasError::Syntax { offset: start, message: "exponent too large".into() })?;
        if parenthesized && !self.eat(b')') {
            return Err(self.error("expected `)`"));
        }
        let e = if negative { -e } else { e };
        base.pow(e as i32)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(RationalFunction::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let index = self.coords.index_of(name).map_err(|_| CasError::UnknownIdentifier {
                    name: name.to_string(),
                    offset: start,
                })?;
                Ok(RationalFunction::var(index))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> CoordinateSystem {
        CoordinateSystem::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_literal_fraction() {
        let c = xyz();
        let f = parse_expr("(1+4*y^2)/z^2", &c).unwrap();
        let num = parse_expr("4*y^2 + 1", &c).unwrap();
        let den = parse_expr("z*z", &c).unwrap();
        assert_eq!(f.numerator(), num.numerator());
        assert_eq!(f.denominator(), den.numerator());
    }

    #[test]
    fn cancellation_gives_zero() {
        assert!(parse_expr("x - x", &xyz()).unwrap().is_zero());
    }

    #[test]
    fn trailing_operator_is_syntax_error_at_end() {
        match parse_expr("x+", &xyz()) {
            Err(CasError::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier() {
        assert_eq!(
            parse_expr("x + w", &xyz()),
            Err(CasError::UnknownIdentifier { name: "w".into(), offset: 4 })
        );
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(parse_expr("1/(x-x)", &xyz()), Err(CasError::DivisionByZero));
        assert_eq!(parse_expr("0^-1", &xyz()), Err(CasError::DivisionByZero));
    }

    #[test]
    fn negative_exponents_and_unary_minus() {
        let c = xyz();
        assert_eq!(parse_expr("z^-2", &c).unwrap(), parse_expr("1/z^2", &c).unwrap());
        assert_eq!(parse_expr("z^(-2)", &c).unwrap(), parse_expr("1/(z*z)", &c).unwrap());
        assert_eq!(parse_expr("-x^2", &c).unwrap(), parse_expr("-(x*x)", &c).unwrap());
        assert_eq!(parse_expr("-1/2", &c).unwrap(), RationalFunction::constant(Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_expr(" 2 *x\t- - y", &c).unwrap(), parse_expr("2*x+y", &c).unwrap());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-1/2").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("4/6").unwrap(), Rational::new(2.into(), 3.into()));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert_eq!(parse_rational("3/0"), Err(CasError::DivisionByZero));
    }
}
