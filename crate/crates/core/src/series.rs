//! Truncated one-variable complex power series.
//!
//! A [`TruncatedSeries`] of degree `d` stores `c_0..=c_d`. Binary operations
//! truncate to the smaller operand degree; nothing is ever silently extended.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result, C64};

/// Default truncation order used by the criteria and the CLI.
pub const DEFAULT_DEGREE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<C64>,
}

impl TruncatedSeries {
    /// Panics if `coeffs` is empty; a series always has at least `c_0`.
    pub fn new(coeffs: Vec<C64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![C64::new(0.0, 0.0); degree + 1])
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = C64::new(1.0, 0.0);
        s
    }

    /// The identity function `z`. Requires `degree >= 1`.
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1);
        let mut s = Self::zero(degree);
        s.coeffs[1] = C64::new(1.0, 0.0);
        s
    }

    /// `1/(1-t)^2 = sum (k+1) t^k`.
    pub fn koebe_profile(degree: usize) -> Self {
        Self::new(
            (0..=degree)
                .map(|k| C64::new((k + 1) as f64, 0.0))
                .collect(),
        )
    }

    /// The Koebe function `z/(1-z)^2 = sum k z^k`.
    pub fn koebe(degree: usize) -> Self {
        Self::new((0..=degree).map(|k| C64::new(k as f64, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation degree.
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let d = degree.min(self.degree());
        Self::new(self.coeffs[..=d].to_vec())
    }

    pub fn arith(&self, other: &Self, op: SeriesOp) -> Result<Self> {
        Ok(match op {
            SeriesOp::Add => self + other,
            SeriesOp::Sub => self - other,
            SeriesOp::Mul => self * other,
            SeriesOp::Div => self.div(other)?,
        })
    }

    /// Cauchy quotient `self / other`, truncated at the common degree.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0 == C64::new(0.0, 0.0) {
            return Err(Error::DivisionByZeroAtOrigin);
        }
        let d = self.degree().min(other.degree());
        let mut q: Vec<C64> = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * q[k - j];
            }
            q.push(acc / b0);
        }
        Ok(Self::new(q))
    }

    /// Formal derivative; the result has degree `d - 1`.
    pub fn derivative(&self) -> Result<Self> {
        if self.degree() == 0 {
            return Err(Error::DegreeUnderflow);
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        ))
    }

    /// `outer(inner(z))` by Horner nesting; `inner` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.coeffs[0] != C64::new(0.0, 0.0) {
            return Err(Error::NonOriginPreservingInner);
        }
        let d = self.degree().min(inner.degree());
        let inner = inner.truncate(d);
        let mut acc = Self::zero(d);
        acc.coeffs[0] = self.coeffs[d];
        for k in (0..d).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// `z -> a(c z)`: coefficient `k` is multiplied by `c^k`.
    pub fn scale_argument(&self, c: C64) -> Self {
        let mut pow = C64::new(1.0, 0.0);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let out = a * pow;
                pow *= c;
                out
            })
            .collect();
        Self::new(coeffs)
    }

    /// Multiplication by `z`; the degree grows by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let d = self.degree().min(rhs.degree());
        TruncatedSeries::new((0..=d).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        let d = self.degree().min(rhs.degree());
        TruncatedSeries::new((0..=d).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let d = self.degree().min(rhs.degree());
        let coeffs = (0..=d)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * rhs.coeffs[k - j]).sum())
            .collect();
        TruncatedSeries::new(coeffs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn real(s: &TruncatedSeries) -> Vec<f64> {
        s.coeffs().iter().map(|c| c.re).collect()
    }

    #[test]
    fn geometric_squared_is_koebe_profile() {
        let g = TruncatedSeries::from_real(&[1.0; 8]);
        let sq = &g * &g;
        assert_eq!(sq, TruncatedSeries::koebe_profile(7));
    }

    #[test]
    fn self_division_is_one() {
        let a = TruncatedSeries::new(vec![c64(2.0, 1.0), c64(-1.0, 0.5), c64(0.25, 0.0)]);
        let q = a.div(&a).unwrap();
        for (k, c) in q.coeffs().iter().enumerate() {
            let want = if k == 0 { 1.0 } else { 0.0 };
            assert!((c - c64(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn long_division_gives_koebe() {
        let num = TruncatedSeries::from_real(&[0.0, 1.0, 0.0, 0.0]);
        let den = TruncatedSeries::from_real(&[1.0, -2.0, 1.0, 0.0]);
        assert_eq!(real(&num.div(&den).unwrap()), vec![0.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn division_by_series_vanishing_at_origin() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::identity(3);
        assert_eq!(a.div(&b), Err(Error::DivisionByZeroAtOrigin));
    }

    #[test]
    fn derivative_examples() {
        let k = TruncatedSeries::from_real(&[0.0, 1.0, 2.0, 3.0, 4.0]);
        assert_eq!(real(&k.derivative().unwrap()), vec![1.0, 4.0, 9.0, 16.0]);
        let id = TruncatedSeries::identity(4);
        assert_eq!(real(&id.derivative().unwrap()), vec![1.0, 0.0, 0.0, 0.0]);
        let c = TruncatedSeries::from_real(&[3.0]);
        assert_eq!(c.derivative(), Err(Error::DegreeUnderflow));
    }

    #[test]
    fn compose_koebe_with_square() {
        let k = TruncatedSeries::koebe(8);
        let sq = TruncatedSeries::from_real(&[0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let c = k.compose(&sq).unwrap();
        assert_eq!(real(&c), vec![0.0, 0.0, 1.0, 0.0, 2.0, 0.0, 3.0, 0.0, 4.0]);
    }

    #[test]
    fn compose_identity_cases() {
        let k = TruncatedSeries::koebe(6);
        assert_eq!(k.compose(&TruncatedSeries::identity(6)).unwrap(), k);
        let inner = TruncatedSeries::new(vec![
            c64(0.0, 0.0),
            c64(0.5, 0.5),
            c64(-1.0, 0.0),
            c64(0.0, 2.0),
        ]);
        assert_eq!(TruncatedSeries::identity(3).compose(&inner).unwrap(), inner);
        let bad = TruncatedSeries::from_real(&[1.0, 1.0]);
        assert_eq!(k.compose(&bad), Err(Error::NonOriginPreservingInner));
    }

    #[test]
    fn scale_argument_examples() {
        let k = TruncatedSeries::koebe_profile(4);
        assert_eq!(
            real(&k.scale_argument(c64(0.0, 0.0))),
            vec![1.0, 0.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(k.scale_argument(c64(1.0, 0.0)), k);
        assert_eq!(
            real(&k.scale_argument(c64(0.5, 0.0))),
            vec![1.0, 1.0, 0.75, 0.5, 5.0 / 16.0]
        );
    }

    #[test]
    fn truncation_is_min_degree() {
        let a = TruncatedSeries::koebe(5);
        let b = TruncatedSeries::koebe(3);
        assert_eq!((&a + &b).degree(), 3);
        assert_eq!((&a * &b).degree(), 3);
        assert_eq!(a.div(&TruncatedSeries::one(2)).unwrap().degree(), 2);
    }
}
