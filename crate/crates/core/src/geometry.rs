//! Levi-Civita calculus on a single coordinate chart.

use std::sync::OnceLock;

use ratcas::{Rational, RationalFunction};

use crate::error::{Error, Result};
use crate::linalg;
use crate::tensor::{Tensor, VectorField};

/// Nondegenerate symmetric `(0,2)` tensor with cached inverse and determinant.
#[derive(Clone, Debug, PartialEq)]
pub struct Metric {
    g: Tensor,
    inv: Tensor,
    det: RationalFunction,
}

impl Metric {
    pub fn new(g: Tensor) -> Result<Self> {
        g.expect_valence(0, 2)?;
        if !g.is_symmetric() {
            return Err(Error::AsymmetricMetric);
        }
        let n = g.dim();
        let rows: linalg::Matrix = (0..n).map(|i| (0..n).map(|j| g.at(i, j).clone()).collect()).collect();
        let (det, inv) = linalg::invert(&rows).ok_or(Error::DegenerateMetric)?;
        let inv = Tensor::from_fn(n, 2, 0, |i| inv[i[0]][i[1]].clone());
        Ok(Metric { g, inv, det })
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn tensor(&self) -> &Tensor {
        &self.g
    }

    pub fn inverse(&self) -> &Tensor {
        &self.inv
    }

    pub fn determinant(&self) -> &RationalFunction {
        &self.det
    }

    pub fn inner(&self, x: &VectorField, y: &VectorField) -> RationalFunction {
        self.g.pair(x, y)
    }

    /// `X♭ = g(X, ·)`.
    pub fn lower(&self, x: &VectorField) -> Tensor {
        let n = self.dim();
        Tensor::covector((0..n).map(|j| (0..n).map(|i| self.g.at(i, j) * x.component(i)).sum()).collect())
    }

    /// `ω♯` with `g(ω♯, ·) = ω`.
    pub fn raise(&self, omega: &Tensor) -> VectorField {
        let n = self.dim();
        VectorField::new((0..n).map(|k| (0..n).map(|j| self.inv.at(k, j) * omega.get(&[j])).sum()).collect())
    }
}

/// Metric together with lazily computed connection and curvature.
#[derive(Debug)]
pub struct Geometry {
    metric: Metric,
    christoffel: OnceLock<Tensor>,
    riemann: OnceLock<Tensor>,
    ricci: OnceLock<Tensor>,
    ricci_operator: OnceLock<Tensor>,
    scalar: OnceLock<RationalFunction>,
}

impl Clone for Geometry {
    fn clone(&self) -> Self {
        Geometry::new(self.metric.clone())
    }
}

impl Geometry {
    pub fn new(metric: Metric) -> Self {
        Geometry {
            metric,
            christoffel: OnceLock::new(),
            riemann: OnceLock::new(),
            ricci: OnceLock::new(),
            ricci_operator: OnceLock::new(),
            scalar: OnceLock::new(),
        }
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    /// `Γ^k_{ij}` stored at index `[k, i, j]`.
    pub fn christoffel(&self) -> &Tensor {
        self.christoffel.get_or_init(|| {
            let n = self.dim();
            let g = self.metric.tensor();
            let dg: Vec<Tensor> = (0..n).map(|m| g.map(|v| v.partial(m))).collect();
            // Γ_{l,ij} = ½(∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})
            let lowered = Tensor::from_fn(n, 0, 3, |idx| {
                let (l, i, j) = (idx[0], idx[1], idx[2]);
                (&(dg[i].at(j, l) + dg[j].at(i, l)) - dg[l].at(i, j)).half()
            });
            let inv = self.metric.inverse();
            Tensor::from_fn(n, 1, 2, |idx| {
                let (k, i, j) = (idx[0], idx[1], idx[2]);
                (0..n).map(|l| inv.at(k, l) * lowered.get(&[l, i, j])).sum()
            })
        })
    }

    fn gamma(&self, k: usize, i: usize, j: usize) -> &RationalFunction {
        self.christoffel().get(&[k, i, j])
    }

    /// `∇_X Y`.
    pub fn nabla(&self, x: &VectorField, y: &VectorField) -> VectorField {
        let n = self.dim();
        VectorField::new(
            (0..n)
                .map(|k| {
                    let mut acc = x.derive(y.component(k));
                    for i in 0..n {
                        if x.component(i).is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            let g = self.gamma(k, i, j);
                            if !g.is_zero() && !y.component(j).is_zero() {
                                acc = acc + &(g * x.component(i)) * y.component(j);
                            }
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    /// Covariant derivative of a tensor of any valence; the differentiation
    /// index is appended as the last lower slot.
    pub fn covariant_derivative(&self, t: &Tensor) -> Tensor {
        let n = self.dim();
        let (p, q) = t.valence();
        Tensor::from_fn(n, p, q + 1, |idx| {
            let m = idx[p + q];
            let base = &idx[..p + q];
            let mut acc = t.get(base).partial(m);
            let mut probe = base.to_vec();
            for slot in 0..p + q {
                let orig = base[slot];
                for s in 0..n {
                    probe[slot] = s;
                    let v = t.get(&probe);
                    if v.is_zero() {
                        continue;
                    }
                    if slot < p {
                        let g = self.gamma(orig, m, s);
                        if !g.is_zero() {
                            acc = acc + g * v;
                        }
                    } else {
                        let g = self.gamma(s, m, orig);
                        if !g.is_zero() {
                            acc = acc - g * v;
                        }
                    }
                }
                probe[slot] = orig;
            }
            acc
        })
    }

    /// `R^l_{ijk}` at index `[l, i, j, k]`, so that `R(∂_i, ∂_j)∂_k = R^l_{ijk} ∂_l`
    /// and `R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]`.
    pub fn riemann(&self) -> &Tensor {
        self.riemann.get_or_init(|| {
            let n = self.dim();
            let gamma = self.christoffel();
            let dgamma: Vec<Tensor> = (0..n).map(|m| gamma.map(|v| v.partial(m))).collect();
            let g = |a: usize, b: usize, c: usize| gamma.get(&[a, b, c]);
            Tensor::from_fn(n, 1, 3, |idx| {
                let (l, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
                if i == j {
                    return RationalFunction::zero();
                }
                let mut acc = dgamma[i].get(&[l, j, k]) - dgamma[j].get(&[l, i, k]);
                for m in 0..n {
                    acc = acc + g(l, i, m) * g(m, j, k) - g(l, j, m) * g(m, i, k);
                }
                acc
            })
        })
    }

    /// `R(X,Y)Z`.
    pub fn curvature(&self, x: &VectorField, y: &VectorField, z: &VectorField) -> VectorField {
        let n = self.dim();
        let r = self.riemann();
        VectorField::new(
            (0..n)
                .map(|l| {
                    let mut acc = RationalFunction::zero();
                    for i in 0..n {
                        for j in 0..n {
                            let xy = x.component(i) * y.component(j);
                            if xy.is_zero() {
                                continue;
                            }
                            for k in 0..n {
                                let v = r.get(&[l, i, j, k]);
                                if !v.is_zero() && !z.component(k).is_zero() {
                                    acc = acc + &(v * &xy) * z.component(k);
                                }
                            }
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    /// `S_{jk} = R^i_{ijk}`.
    pub fn ricci(&self) -> &Tensor {
        self.ricci.get_or_init(|| {
            let n = self.dim();
            let r = self.riemann();
            Tensor::from_fn(n, 0, 2, |idx| (0..n).map(|i| r.get(&[i, i, idx[0], idx[1]]).clone()).sum())
        })
    }

    /// `Q = g⁻¹S`, so that `S(X,Y) = g(QX, Y)`.
    pub fn ricci_operator(&self) -> &Tensor {
        self.ricci_operator.get_or_init(|| {
            let n = self.dim();
            let (inv, s) = (self.metric.inverse(), self.ricci());
            Tensor::from_fn(n, 1, 1, |idx| (0..n).map(|k| inv.at(idx[0], k) * s.at(k, idx[1])).sum())
        })
    }

    pub fn scalar_curvature(&self) -> &RationalFunction {
        self.scalar.get_or_init(|| self.ricci_operator().trace())
    }

    /// `Df` with `g(Df, X) = X(f)`.
    pub fn gradient(&self, f: &RationalFunction) -> VectorField {
        let n = self.dim();
        self.metric.raise(&Tensor::covector((0..n).map(|i| f.partial(i)).collect()))
    }

    /// `div X = ∂_i X^i + Γ^i_{ik} X^k`.
    pub fn divergence(&self, x: &VectorField) -> RationalFunction {
        let n = self.dim();
        let mut acc = RationalFunction::zero();
        for i in 0..n {
            acc = acc + x.component(i).partial(i);
            for k in 0..n {
                let g = self.gamma(i, i, k);
                if !g.is_zero() {
                    acc = acc + g * x.component(k);
                }
            }
        }
        acc
    }

    /// `Δf = −div Df`.
    pub fn laplacian(&self, f: &RationalFunction) -> RationalFunction {
        -self.divergence(&self.gradient(f))
    }

    /// Hessian-type tensor `∇Df` as a `(1,1)` tensor: `X ↦ ∇_X Df`.
    pub fn hessian_operator(&self, f: &RationalFunction) -> Tensor {
        self.covariant_derivative(&self.gradient(f).to_tensor())
    }
}

/// `[X, Y]^k = X^i ∂_i Y^k − Y^i ∂_i X^k`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> VectorField {
    VectorField::new(
        (0..x.dim())
            .map(|k| &x.derive(y.component(k)) - &y.derive(x.component(k)))
            .collect(),
    )
}

/// Lie derivative of a tensor of any valence along `v`.
pub fn lie_derivative(t: &Tensor, v: &VectorField) -> Tensor {
    let n = t.dim();
    let (p, q) = t.valence();
    let dv: Vec<Vec<RationalFunction>> =
        (0..n).map(|i| (0..n).map(|m| v.component(i).partial(m)).collect()).collect();
    Tensor::from_fn(n, p, q, |idx| {
        let mut acc = v.derive(t.get(idx));
        let mut probe = idx.to_vec();
        for slot in 0..p + q {
            let orig = idx[slot];
            for m in 0..n {
                probe[slot] = m;
                let tv = t.get(&probe);
                if tv.is_zero() {
                    continue;
                }
                if slot < p {
                    let d = &dv[orig][m];
                    if !d.is_zero() {
                        acc = acc - tv * d;
                    }
                } else {
                    let d = &dv[m][orig];
                    if !d.is_zero() {
                        acc = acc + tv * d;
                    }
                }
            }
            probe[slot] = orig;
        }
        acc
    })
}

/// Lie derivative of a function: `V(f)`.
pub fn lie_derivative_function(f: &RationalFunction, v: &VectorField) -> RationalFunction {
    v.derive(f)
}

/// Inertia `(n_plus, n_minus)` of the metric evaluated at a point.
pub fn signature_at(metric: &Metric, point: &[Rational]) -> Result<(usize, usize)> {
    let n = metric.dim();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let v = metric.tensor().at(i, j).eval(point).map_err(|_| Error::PoleAtPoint {
                what: format!("metric component g[{i}][{j}]"),
            })?;
            row.push(v);
        }
        rows.push(row);
    }
    let (plus, minus, zero) = linalg::inertia(&rows);
    if zero > 0 {
        return Err(Error::DegenerateAtPoint);
    }
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratcas::{parse_expr, CoordinateSystem};

    fn coords() -> CoordinateSystem {
        CoordinateSystem::new(["r", "t", "z"]).unwrap()
    }

    fn f(text: &str) -> RationalFunction {
        parse_expr(text, &coords()).unwrap()
    }

    /// Flat space in polar coordinates, with a timelike `z`.
    fn polar() -> Geometry {
        let rows = vec![
            vec![f("1"), f("0"), f("0")],
            vec![f("0"), f("r^2"), f("0")],
            vec![f("0"), f("0"), f("-1")],
        ];
        Geometry::new(Metric::new(Tensor::from_rows(0, 2, rows).unwrap()).unwrap())
    }

    #[test]
    fn polar_christoffel_symbols() {
        let g = polar();
        let gamma = g.christoffel();
        assert_eq!(gamma.get(&[0, 1, 1]), &f("-r"));
        assert_eq!(gamma.get(&[1, 0, 1]), &f("1/r"));
        assert_eq!(gamma.get(&[1, 1, 0]), &f("1/r"));
        assert!(gamma.get(&[2, 2, 2]).is_zero());
    }

    #[test]
    fn polar_chart_is_flat() {
        let g = polar();
        assert!(g.riemann().is_zero());
        assert!(g.scalar_curvature().is_zero());
        assert!(g.covariant_derivative(g.metric().tensor()).is_zero());
    }

    #[test]
    fn laplacian_in_polar_chart() {
        // −Δ(r²) = 4 in the plane, and z² contributes −2 through the negative sign
        assert_eq!(polar().laplacian(&f("r^2")), f("-4"));
        assert_eq!(polar().laplacian(&f("z^2")), f("2"));
        assert!(polar().laplacian(&f("t")).is_zero());
    }

    #[test]
    fn bracket_and_function_derivative() {
        let x = VectorField::new(vec![f("r"), f("0"), f("0")]);
        let dr = VectorField::coordinate(3, 0);
        assert_eq!(lie_bracket(&x, &dr), -&dr);
        assert_eq!(lie_derivative_function(&f("r^2*t"), &x), f("2*r^2*t"));
    }

    #[test]
    fn signature_of_polar_metric() {
        let one = Rational::from_integer(1.into());
        let zero = Rational::from_integer(0.into());
        let g = polar();
        assert_eq!(signature_at(g.metric(), &[one.clone(), zero.clone(), zero.clone()]), Ok((2, 1)));
        assert_eq!(signature_at(g.metric(), &[zero.clone(), zero.clone(), zero]), Err(Error::DegenerateAtPoint));
    }
}
