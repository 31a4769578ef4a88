//! Exact dense linear algebra over rational functions and rationals.

use ratcas::{Rational, RationalFunction};

pub type Matrix = Vec<Vec<RationalFunction>>;

/// Determinant and inverse by Gauss–Jordan elimination over the field of
/// rational functions. Returns `None` when the matrix is singular.
pub fn invert(m: &Matrix) -> Option<(RationalFunction, Matrix)> {
    let n = m.len();
    let mut a: Matrix = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() }).collect())
        .collect();
    let mut det = RationalFunction::one();
    for col in 0..n {
        // prefer the simplest available pivot to limit expression swell
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].numerator().term_count() + a[r][col].denominator().term_count())?;
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        let p_inv = p.inv().expect("pivot is nonzero");
        for j in 0..n {
            a[col][j] = &a[col][j] * &p_inv;
            inv[col][j] = &inv[col][j] * &p_inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] = &a[r][j] - &t;
                let t = &f * &inv[col][j];
                inv[r][j] = &inv[r][j] - &t;
            }
        }
    }
    Some((det, inv))
}

pub fn determinant(m: &Matrix) -> RationalFunction {
    invert(m).map_or_else(RationalFunction::zero, |(d, _)| d)
}

/// Inertia `(n_plus, n_minus, n_zero)` of a symmetric rational matrix by
/// symmetric (congruence) elimination.
pub fn inertia(m: &[Vec<Rational>]) -> (usize, usize, usize) {
    use num_traits::{Signed, Zero};
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut n = a.len();
    let (mut plus, mut minus) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let k = match active.iter().copied().find(|&i| !a[i][i].is_zero()) {
            Some(k) => k,
            None => {
                // all remaining diagonals vanish: combine two rows/cols with a
                // nonzero off-diagonal entry, which makes a nonzero diagonal
                let Some((i, j)) = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero())
                else {
                    break;
                };
                // row_i += row_j, col_i += col_j
                for c in 0..a.len() {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..a.len() {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        let p = a[k][k].clone();
        if p.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        active.retain(|&i| i != k);
        for &r in &active {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &p;
            for &c in &active {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
            a[r][k] = Rational::zero();
            a[k][r] = Rational::zero();
        }
        n -= 1;
    }
    (plus, minus, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn inverse_of_constant_matrix() {
        let c = |v: i64| RationalFunction::from_int(v);
        let m = vec![vec![c(2), c(1)], vec![c(1), c(1)]];
        let (det, inv) = invert(&m).unwrap();
        assert_eq!(det, c(1));
        assert_eq!(inv, vec![vec![c(1), c(-1)], vec![c(-1), c(2)]]);
        assert!(invert(&vec![vec![c(1), c(2)], vec![c(2), c(4)]]).is_none());
    }

    #[test]
    fn inertia_counts() {
        assert_eq!(inertia(&[vec![q(1), q(0), q(0)], vec![q(0), q(-1), q(0)], vec![q(0), q(0), q(1)]]), (2, 1, 0));
        // hyperbolic plane has zero diagonal
        assert_eq!(inertia(&[vec![q(0), q(1)], vec![q(1), q(0)]]), (1, 1, 0));
        assert_eq!(inertia(&[vec![q(1), q(1)], vec![q(1), q(1)]]), (1, 0, 1));
        assert_eq!(inertia(&[vec![q(0), q(0)], vec![q(0), q(0)]]), (0, 0, 2));
    }
}
