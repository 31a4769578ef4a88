//! Heuristic gcd for polynomials with integer coefficients.
//!
//! One variable is evaluated at a large integer ξ, the gcd of the images is
//! computed recursively, and a candidate is rebuilt from the balanced base-ξ
//! digits of its coefficients. With primitive inputs and
//! ξ ≥ 2·min(|f|∞, |g|∞) + 2, a candidate that divides both inputs is their
//! gcd, so a returned value is always exact. `None` means every evaluation
//! point was unlucky and the caller should use another method.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, Polynomial};
use crate::Rational;

const ATTEMPTS: usize = 6;

/// Gcd of `f` and `g`, both with integer coefficients, up to sign.
pub(crate) fn heuristic_gcd(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if f.is_zero() {
        return Some(g.clone());
    }
    if g.is_zero() {
        return Some(f.clone());
    }
    let width = f.width().max(g.width());
    let Some(var) = (0..width).find(|&v| f.contains_var(v) || g.contains_var(v)) else {
        let c = content(f).gcd(&content(g));
        return Some(Polynomial::constant(Rational::from_integer(c)));
    };

    let (fc, gc) = (content(f), content(g));
    let common = Rational::from_integer(fc.gcd(&gc));
    let f = f.scale(&Rational::from_integer(fc).recip());
    let g = g.scale(&Rational::from_integer(gc).recip());

    let (fnorm, gnorm) = (max_norm(&f), max_norm(&g));
    let bound: BigInt = BigInt::from(2) * fnorm.clone().min(gnorm.clone()) + 29;
    let by_lc = (&fnorm / lc_abs(&f)).min(&gnorm / lc_abs(&g)) * 2 + 2;
    let mut xi = bound.max(by_lc);

    for _ in 0..ATTEMPTS {
        let ff = substitute(&f, var, &xi);
        let gg = substitute(&g, var, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some(h) = heuristic_gcd(&ff, &gg) {
                let candidate = interpolate(&h, var, &xi).integer_normalized();
                if f.div_exact(&candidate).is_some() && g.div_exact(&candidate).is_some() {
                    return Some(candidate.scale(&common));
                }
            }
        }
        xi = &xi * 73794 * xi.sqrt().sqrt() / 27011;
    }
    None
}

fn content(p: &Polynomial) -> BigInt {
    p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()))
}

fn max_norm(p: &Polynomial) -> BigInt {
    p.terms().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}

fn lc_abs(p: &Polynomial) -> BigInt {
    p.leading_coeff().map(|c| c.numer().abs()).unwrap_or_else(BigInt::one)
}

/// `p` with `var` replaced by the integer `value`.
fn substitute(p: &Polynomial, var: usize, value: &BigInt) -> Polynomial {
    let mut powers = vec![BigInt::one()];
    for _ in 0..p.degree_in(var) {
        let next = powers.last().unwrap() * value;
        powers.push(next);
    }
    Polynomial::from_terms(p.terms().map(|(m, c)| {
        let e = m.exponent(var) as usize;
        (m.with_exponent(var, 0), c * Rational::from_integer(powers[e].clone()))
    }))
}

/// Reads the coefficients of `h` as balanced base-`xi` numbers whose digits
/// become the coefficients of successive powers of `var`.
fn interpolate(h: &Polynomial, var: usize, xi: &BigInt) -> Polynomial {
    let half = xi / 2;
    let mut rest = h.clone();
    let mut out = Polynomial::zero();
    let mut power = 0u32;
    let xi_inv = Rational::from_integer(xi.clone()).recip();
    while !rest.is_zero() {
        let digit = Polynomial::from_terms(rest.terms().map(|(m, c)| {
            let mut r = c.numer().mod_floor(xi);
            if r > half {
                r -= xi;
            }
            (m.clone(), Rational::from_integer(r))
        }));
        let shifted = digit.mul_term(&Monomial::var_pow(var, power), &Rational::one());
        out = &out + &shifted;
        rest = (&rest - &digit).scale(&xi_inv);
        power += 1;
    }
    out
}
