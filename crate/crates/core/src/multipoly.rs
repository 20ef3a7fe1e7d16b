//! Sparse multivariate complex polynomials on `C^n` and polynomial maps.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg;
use crate::norm::{SupportFunctional, Vector};
use crate::{Error, Result, C64};

/// Terms keyed by exponent multi-index. Zero coefficients are dropped.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C64>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, j: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[j] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, C64::new(1.0, 0.0));
        p
    }

    /// `y -> sum w_j y_j`.
    pub fn linear_form(l: &SupportFunctional) -> Self {
        let n = l.dim();
        let mut p = Self::zero(n);
        for (j, &w) in l.coeffs().iter().enumerate() {
            let mut exps = vec![0; n];
            exps[j] = 1;
            p.add_term(exps, w);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, C64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: exps.len(),
                });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: C64) {
        debug_assert_eq!(exps.len(), self.nvars);
        let v = self.terms.get(&exps).copied().unwrap_or_default() + c;
        if v == C64::new(0.0, 0.0) {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, v);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], C64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| total(e)).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> C64 {
        self.terms
            .get(&vec![0; self.nvars])
            .copied()
            .unwrap_or_default()
    }

    pub fn eval(&self, x: &[C64]) -> C64 {
        self.eval_table(&power_table(x, self.degree()))
    }

    /// Evaluation from `table[j][k] = x_j^k`, which must reach the degree.
    fn eval_table(&self, table: &[Vec<C64>]) -> C64 {
        self.terms
            .iter()
            .map(|(e, &c)| {
                e.iter()
                    .zip(table)
                    .fold(c, |acc, (&k, row)| acc * row[k as usize])
            })
            .sum()
    }

    pub fn partial(&self, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            if e[j] > 0 {
                let mut d = e.clone();
                d[j] -= 1;
                out.add_term(d, c * e[j] as f64);
            }
        }
        out
    }

    /// `[df/dx_j (x)]_j`.
    pub fn gradient_at(&self, x: &[C64]) -> Vec<C64> {
        (0..self.nvars).map(|j| self.partial(j).eval(x)).collect()
    }

    /// `D^2 f(x)(y, y) = sum_{ij} d_i d_j f(x) y_i y_j`.
    pub fn second_derivative_at(&self, x: &[C64], y: &[C64]) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.nvars {
            let di = self.partial(i);
            if di.is_zero() {
                continue;
            }
            for j in 0..self.nvars {
                acc += di.partial(j).eval(x) * y[i] * y[j];
            }
        }
        acc
    }

    /// Degree-`k` homogeneous part.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total(e) == k)
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    /// `[Q_0(u), ..., Q_deg(u)]`, i.e. the coefficients of `z -> f(z u)`.
    pub fn homogeneous_values(&self, u: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); self.degree() + 1];
        for (e, &c) in &self.terms {
            out[total(e)] += c * monomial(e, u);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: C64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(self.nvars, C64::new(1.0, 0.0));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

fn total(e: &[u32]) -> usize {
    e.iter().map(|&k| k as usize).sum()
}

fn power_table(x: &[C64], degree: usize) -> Vec<Vec<C64>> {
    x.iter()
        .map(|&xi| {
            let mut row = Vec::with_capacity(degree + 1);
            let mut acc = C64::new(1.0, 0.0);
            for _ in 0..=degree {
                row.push(acc);
                acc *= xi;
            }
            row
        })
        .collect()
}

fn monomial(e: &[u32], x: &[C64]) -> C64 {
    e.iter()
        .zip(x)
        .fold(C64::new(1.0, 0.0), |acc, (&k, &xi)| acc * xi.powu(k))
}

/// A polynomial map `C^n -> C^n`, one [`MultiPoly`] per component.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMap {
    components: Vec<MultiPoly>,
    jacobian: Vec<Vec<MultiPoly>>,
    degree: usize,
}

impl PolyMap {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let n = components.len();
        if let Some(c) = components.iter().find(|c| c.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.nvars(),
            });
        }
        let jacobian = components
            .iter()
            .map(|c| (0..n).map(|j| c.partial(j)).collect())
            .collect();
        let degree = components.iter().map(MultiPoly::degree).max().unwrap_or(0);
        Ok(Self {
            components,
            jacobian,
            degree,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(|j| MultiPoly::variable(n, j)).collect())
            .expect("identity components have matching dimension")
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn eval(&self, x: &Vector) -> Vector {
        let table = power_table(x.entries(), self.degree);
        Vector::new(
            self.components
                .iter()
                .map(|c| c.eval_table(&table))
                .collect(),
        )
    }

    /// Row `i` holds the gradient of component `i`.
    pub fn jacobian(&self, x: &Vector) -> Vec<Vec<C64>> {
        let table = power_table(x.entries(), self.degree);
        self.jacobian
            .iter()
            .map(|row| row.iter().map(|d| d.eval_table(&table)).collect())
            .collect()
    }

    /// `[DF(x)]^{-1} F(x)`; `None` when the Jacobian is numerically singular
    /// or the solve residual exceeds `1e-10`.
    pub fn inverse_transfer(&self, x: &Vector) -> Option<Vector> {
        let jac = self.jacobian(x);
        let rhs = self.eval(x).into_entries();
        let sol = linalg::solve(&jac, &rhs)?;
        let residual = linalg::residual(&jac, &sol, &rhs);
        let scale = 1.0 + rhs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        (residual <= 1e-10 * scale).then(|| Vector::new(sol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn homogeneous_values_and_eval_agree() {
        let p = MultiPoly::from_terms(
            2,
            [
                (vec![0, 0], c64(1.0, 0.0)),
                (vec![1, 0], c64(0.5, 0.0)),
                (vec![1, 1], c64(0.0, 2.0)),
                (vec![0, 3], c64(-1.0, 0.0)),
            ],
        )
        .unwrap();
        let u = [c64(0.3, 0.1), c64(-0.2, 0.4)];
        let q = p.homogeneous_values(&u);
        assert_eq!(q.len(), 4);
        let z = c64(0.7, -0.2);
        let direct = p.eval(&[u[0] * z, u[1] * z]);
        let via: C64 = q
            .iter()
            .enumerate()
            .map(|(k, &c)| c * z.powu(k as u32))
            .sum();
        assert!((direct - via).norm() < 1e-14);
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let mut p = MultiPoly::variable(2, 0);
        p.add_term(vec![1, 0], c64(-1.0, 0.0));
        assert!(p.is_zero());
    }

    #[test]
    fn jacobian_of_quadratic_map() {
        // G(z) = (z1 + b z2^2, z2)
        let b = c64(2.0, 0.0);
        let g1 = MultiPoly::from_terms(2, [(vec![1, 0], c64(1.0, 0.0)), (vec![0, 2], b)]).unwrap();
        let g = PolyMap::new(vec![g1, MultiPoly::variable(2, 1)]).unwrap();
        let x = Vector::new(vec![c64(0.1, 0.0), c64(0.3, 0.2)]);
        let jac = g.jacobian(&x);
        assert!((jac[0][1] - b * x[1] * 2.0).norm() < 1e-15);
        let w = g.inverse_transfer(&x).unwrap();
        // [DG]^{-1} G = (z1 - b z2^2, z2)
        assert!((w[0] - (x[0] - b * x[1] * x[1])).norm() < 1e-14);
    }
}
