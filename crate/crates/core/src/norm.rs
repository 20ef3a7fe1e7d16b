//! Finite-dimensional complex `l^p` spaces.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, Sub};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

// Redundant whenever std is linked into the build, which brings the inherent
// float methods into scope.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64};

/// The space `C^n` with the `l^p` norm, `1 <= p <= inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormModel {
    p: f64,
    n: usize,
}

impl NormModel {
    pub fn new(p: f64, n: usize) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidModel("p must lie in [1, inf]"));
        }
        if n == 0 {
            return Err(Error::InvalidModel("dimension must be at least 1"));
        }
        Ok(Self { p, n })
    }

    pub fn hilbert(n: usize) -> Result<Self> {
        Self::new(2.0, n)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_hilbert(&self) -> bool {
        self.p == 2.0
    }

    /// Hoelder conjugate `q` with `1/p + 1/q = 1`.
    pub fn dual_exponent(&self) -> f64 {
        if self.p == 1.0 {
            f64::INFINITY
        } else if self.p.is_infinite() {
            1.0
        } else {
            self.p / (self.p - 1.0)
        }
    }

    pub fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            })
        }
    }

    pub fn norm(&self, x: &Vector) -> Result<f64> {
        self.check_dim(x.dim())?;
        Ok(lp_norm(x.entries(), self.p))
    }

    /// Norm of a functional `y -> sum w_j y_j` in the dual space.
    pub fn dual_norm(&self, functional: &SupportFunctional) -> f64 {
        lp_norm(functional.coeffs(), self.dual_exponent())
    }
}

impl Default for NormModel {
    fn default() -> Self {
        Self { p: 2.0, n: 3 }
    }
}

/// `(sum |z_j|^p)^(1/p)` with max-modulus scaling; `p = inf` gives the max.
pub fn lp_norm(entries: &[C64], p: f64) -> f64 {
    let max = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 || p.is_infinite() {
        return max;
    }
    if p == 1.0 {
        return entries.iter().map(|z| z.norm()).sum();
    }
    if p == 2.0 {
        let s: f64 = entries.iter().map(|z| (z.norm() / max).powi(2)).sum();
        return max * libm::sqrt(s);
    }
    let s: f64 = entries.iter().map(|z| libm::pow(z.norm() / max, p)).sum();
    max * libm::pow(s, 1.0 / p)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<C64>);

impl Vector {
    pub fn new(entries: Vec<C64>) -> Self {
        Self(entries)
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Self(entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![C64::new(0.0, 0.0); n])
    }

    /// The `k`-th coordinate unit vector of `C^n`.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = C64::new(1.0, 0.0);
        v
    }

    pub fn entries(&self) -> &[C64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<C64> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: C64) -> Self {
        Self(self.0.iter().map(|&z| z * c).collect())
    }

    pub fn scale_real(&self, c: f64) -> Self {
        Self(self.0.iter().map(|&z| z * c).collect())
    }

    /// `sum x_j conj(y_j)`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b.conj()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.norm() == 0.0)
    }
}

impl Index<usize> for Vector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: Self) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: Self) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// A linear form `l(y) = sum_j w_j y_j` on `C^n`.
///
/// Built by [`support_functional`] it satisfies `l(x) = ||x||` and has dual
/// norm one; profile maps also accept any form of dual norm at most one.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFunctional {
    coeffs: Vec<C64>,
}

impl SupportFunctional {
    pub fn new(coeffs: Vec<C64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `l(y)`; entries beyond the shorter length are ignored, callers check
    /// dimensions up front.
    pub fn apply(&self, y: &Vector) -> C64 {
        self.coeffs
            .iter()
            .zip(y.entries())
            .map(|(w, y)| w * y)
            .sum()
    }
}

/// The canonical element of `T(x)`.
///
/// `1 < p < inf`: `w_j = ||x||^(1-p) |x_j|^(p-2) conj(x_j)`. `p = 1`:
/// `w_j = conj(x_j)/|x_j|` on the support of `x`, zero elsewhere. `p = inf`:
/// concentrated on the smallest index of maximal modulus.
pub fn support_functional(x: &Vector, model: &NormModel) -> Result<SupportFunctional> {
    support_functional_at(x, model, None)
}

/// Like [`support_functional`], but for `p = inf` the caller may pick which
/// maximizing index carries the functional. The index must attain the max.
pub fn support_functional_at(
    x: &Vector,
    model: &NormModel,
    index: Option<usize>,
) -> Result<SupportFunctional> {
    let norm = model.norm(x)?;
    if norm == 0.0 {
        return Err(Error::UndefinedSupport);
    }
    let p = model.p();
    let zero = C64::new(0.0, 0.0);
    let coeffs = if p.is_infinite() {
        let j = match index {
            Some(j) => {
                if j >= x.dim() || x[j].norm() != norm {
                    return Err(Error::InvalidParameter(
                        "index does not attain the max modulus",
                    ));
                }
                j
            }
            None => x
                .entries()
                .iter()
                .position(|z| z.norm() == norm)
                .unwrap_or(0),
        };
        let mut w = vec![zero; x.dim()];
        w[j] = x[j].conj() / x[j].norm();
        w
    } else if p == 1.0 {
        x.entries()
            .iter()
            .map(|z| {
                if z.norm() == 0.0 {
                    zero
                } else {
                    z.conj() / z.norm()
                }
            })
            .collect()
    } else {
        let scale = libm::pow(norm, 1.0 - p);
        x.entries()
            .iter()
            .map(|z| {
                let m = z.norm();
                if m == 0.0 {
                    zero
                } else {
                    z.conj() * (scale * libm::pow(m, p - 2.0))
                }
            })
            .collect()
    };
    Ok(SupportFunctional::new(coeffs))
}

/// Deterministic unit vectors: the `n` coordinate vectors first, then complex
/// Gaussian vectors scaled to unit `l^p` norm.
pub fn sphere_sample(model: &NormModel, count: usize, seed: u64) -> Vec<Vector> {
    let n = model.n();
    let mut out: Vec<Vector> = (0..n.min(count)).map(|k| Vector::basis(n, k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let entries: Vec<C64> = (0..n)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                C64::new(re, im)
            })
            .collect();
        let norm = lp_norm(&entries, model.p());
        if norm > 0.0 {
            out.push(Vector::new(entries).scale_real(1.0 / norm));
        }
    }
    out
}

/// Gaussian vectors (not normalized), used for random test points.
pub fn gaussian_vectors(n: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            Vector::new(
                (0..n)
                    .map(|_| {
                        let re: f64 = StandardNormal.sample(&mut rng);
                        let im: f64 = StandardNormal.sample(&mut rng);
                        C64::new(re, im)
                    })
                    .collect(),
            )
        })
        .collect()
}
