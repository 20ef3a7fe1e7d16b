//! Exact univariate complex polynomials and their roots.
//!
//! Roots are the eigenvalues of the companion matrix, computed with a
//! Wilkinson-shifted complex QR iteration on the (already Hessenberg)
//! companion form and polished with a few Newton steps on the original
//! polynomial.

use alloc::vec;
use alloc::vec::Vec;

use crate::series::TruncatedSeries;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Coefficients in increasing order; trailing exact zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<C64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        while coeffs.last() == Some(&ZERO) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn constant(c: C64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(ONE)
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Self::new(vec![ZERO, ONE])
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Value, first and second derivative at `z` in a single Horner pass.
    pub fn eval_derivs(&self, z: C64) -> [C64; 3] {
        let (mut p, mut dp, mut ddp) = (ZERO, ZERO, ZERO);
        for &c in self.coeffs.iter().rev() {
            ddp = ddp * z + dp * 2.0;
            dp = dp * z + p;
            p = p * z + c;
        }
        [p, dp, ddp]
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// `z -> p(c z)`.
    pub fn scale_argument(&self, c: C64) -> Self {
        let mut pow = ONE;
        Self::new(
            self.coeffs
                .iter()
                .map(|&a| {
                    let out = a * pow;
                    pow *= c;
                    out
                })
                .collect(),
        )
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// `z -> p(z^m)`.
    pub fn compose_power(&self, m: usize) -> Self {
        assert!(m >= 1);
        if self.is_zero() {
            return Self::default();
        }
        let mut out = vec![ZERO; (self.coeffs.len() - 1) * m + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k * m] = c;
        }
        Self::new(out)
    }

    /// Polynomial truncated to a [`TruncatedSeries`] of the given degree.
    pub fn to_series(&self, degree: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=degree).map(|k| self.coeff(k)).collect())
    }

    /// All complex roots with multiplicity. The zero polynomial and nonzero
    /// constants have none.
    pub fn roots(&self) -> Vec<C64> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == ZERO).count();
        let mut roots = vec![ZERO; lead_zeros];
        let reduced = &self.coeffs[lead_zeros..];
        let n = deg - lead_zeros;
        if n == 0 {
            return roots;
        }
        if n == 1 {
            roots.push(-reduced[0] / reduced[1]);
            return roots;
        }
        let lead = reduced[n];
        let mut companion = vec![vec![ZERO; n]; n];
        for (j, entry) in companion[0].iter_mut().enumerate() {
            *entry = -reduced[n - 1 - j] / lead;
        }
        for i in 1..n {
            companion[i][i - 1] = ONE;
        }
        let eig = hessenberg_eigenvalues(companion);
        let reduced_poly = Polynomial::new(reduced.to_vec());
        roots.extend(eig.into_iter().map(|z| reduced_poly.newton_polish(z)));
        roots
    }

    fn newton_polish(&self, mut z: C64) -> C64 {
        let mut best = self.eval(z).norm();
        for _ in 0..3 {
            let [p, dp, _] = self.eval_derivs(z);
            if dp.norm() == 0.0 {
                break;
            }
            let candidate = z - p / dp;
            let value = self.eval(candidate).norm();
            if !(value < best) {
                break;
            }
            z = candidate;
            best = value;
        }
        z
    }
}

/// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR.
fn hessenberg_eigenvalues(mut h: Vec<Vec<C64>>) -> Vec<C64> {
    let n = h.len();
    let mut eig = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut iter = 0usize;
    loop {
        if hi == 0 {
            eig.push(h[0][0]);
            break;
        }
        let mut l = hi;
        while l > 0 {
            let scale = h[l][l].norm() + h[l - 1][l - 1].norm();
            let scale = if scale == 0.0 { 1.0 } else { scale };
            if h[l][l - 1].norm() <= f64::EPSILON * scale {
                h[l][l - 1] = ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig.push(h[hi][hi]);
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > 60 * n {
            // Give up on convergence; report the current diagonal.
            for k in (0..=hi).rev() {
                eig.push(h[k][k]);
            }
            break;
        }
        let mu = if iter % 11 == 10 {
            // Exceptional shift to break cycles.
            h[hi][hi] + C64::new(h[hi][hi - 1].norm(), 0.0)
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        for k in l..=hi {
            h[k][k] -= mu;
        }
        let mut rotations = Vec::with_capacity(hi - l);
        for k in l..hi {
            let x = h[k][k];
            let y = h[k + 1][k];
            let r = libm::hypot(x.norm(), y.norm());
            let (c, s) = if r == 0.0 {
                (ONE, ZERO)
            } else {
                (x / r, y / r)
            };
            for j in k..=hi {
                let a = h[k][j];
                let b = h[k + 1][j];
                h[k][j] = c.conj() * a + s.conj() * b;
                h[k + 1][j] = -s * a + c * b;
            }
            rotations.push((k, c, s));
        }
        for (k, c, s) in rotations {
            let top = (k + 2).min(hi);
            for row in h.iter_mut().take(top + 1).skip(l) {
                let a = row[k];
                let b = row[k + 1];
                row[k] = a * c + b * s;
                row[k + 1] = -a * s.conj() + b * c.conj();
            }
        }
        for k in l..=hi {
            h[k][k] += mu;
        }
    }
    eig
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m1 = (a + d) * 0.5 + disc;
    let m2 = (a + d) * 0.5 - disc;
    if (m1 - d).norm() < (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn sorted_by_re(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        v
    }

    #[test]
    fn roots_of_product_of_linear_factors() {
        let want = [
            c64(0.5, 0.0),
            c64(-1.0, 2.0),
            c64(3.0, -0.25),
            c64(0.0, 1.0),
            c64(-2.0, 0.0),
        ];
        let mut p = Polynomial::one();
        for &r in &want {
            p = p.mul(&Polynomial::new(vec![-r, ONE]));
        }
        let got = sorted_by_re(p.roots());
        let want = sorted_by_re(want.to_vec());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() < 1e-10, "{g} vs {w}");
        }
    }

    #[test]
    fn roots_with_zero_factor_and_multiplicity() {
        // z^2 (z - 1)^2
        let p = Polynomial::from_real(&[0.0, 0.0, 1.0, -2.0, 1.0]);
        let roots = p.roots();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.norm() == 0.0).count(), 2);
        assert!(roots.iter().filter(|r| (*r - ONE).norm() < 1e-6).count() == 2);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(Polynomial::default().roots().is_empty());
        assert!(Polynomial::one().roots().is_empty());
        assert_eq!(
            Polynomial::from_real(&[1.0, 2.0]).roots(),
            vec![c64(-0.5, 0.0)]
        );
    }

    #[test]
    fn roots_of_unity() {
        let mut coeffs = vec![ZERO; 13];
        coeffs[0] = -ONE;
        coeffs[12] = ONE;
        let roots = Polynomial::new(coeffs).roots();
        assert_eq!(roots.len(), 12);
        for r in roots {
            assert!((r.norm() - 1.0).abs() < 1e-12);
            assert!((r.powu(12) - ONE).norm() < 1e-11);
        }
    }

    #[test]
    fn derivs_match_derivative_polynomials() {
        let p = Polynomial::new(vec![
            c64(1.0, 1.0),
            c64(-2.0, 0.0),
            c64(0.5, 0.3),
            c64(0.0, 1.0),
        ]);
        let z = c64(0.3, -0.7);
        let [v, d, dd] = p.eval_derivs(z);
        assert!((v - p.eval(z)).norm() < 1e-14);
        assert!((d - p.derivative().eval(z)).norm() < 1e-14);
        assert!((dd - p.derivative().derivative().eval(z)).norm() < 1e-14);
    }
}
