//! Exact rational functions `N(z)/D(z)`.
//!
//! Profiles of radial maps and all slice functions are carried as rational
//! functions so that evaluation near the unit circle does not depend on a
//! truncation order (the Koebe slice, for instance, is `z/(1-z)^2`).

use crate::poly::Polynomial;
use crate::series::TruncatedSeries;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, PartialEq)]
pub struct Rational {
    num: Polynomial,
    den: Polynomial,
}

impl Rational {
    /// Fails with [`Error::InvalidParameter`] when the denominator is the zero
    /// polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter(
                "rational function with zero denominator",
            ));
        }
        Ok(Self { num, den })
    }

    pub fn polynomial(num: Polynomial) -> Self {
        Self {
            num,
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::polynomial(Polynomial::one())
    }

    /// `1/(1-t)^2`, the profile of the Koebe map.
    pub fn koebe_profile() -> Self {
        Self {
            num: Polynomial::one(),
            den: Polynomial::from_real(&[1.0, -2.0, 1.0]),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// `[g, g', g'']` at `z`.
    pub fn eval_derivs(&self, z: C64) -> [C64; 3] {
        let [n, dn, ddn] = self.num.eval_derivs(z);
        let [d, dd, ddd] = self.den.eval_derivs(z);
        let g = n / d;
        let dg = (dn - g * dd) / d;
        let ddg = (ddn - dg * dd * 2.0 - g * ddd) / d;
        [g, dg, ddg]
    }

    /// Numerator of the derivative, `N'D - ND'`. Its zeros (away from poles)
    /// are the critical points.
    pub fn derivative_numerator(&self) -> Polynomial {
        self.num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()))
    }

    pub fn derivative(&self) -> Self {
        Self {
            num: self.derivative_numerator(),
            den: self.den.mul(&self.den),
        }
    }

    /// Poles, i.e. the zeros of the denominator (common factors are not
    /// cancelled).
    pub fn poles(&self) -> alloc::vec::Vec<C64> {
        self.den.roots()
    }

    /// `z -> g(c z)`.
    pub fn scale_argument(&self, c: C64) -> Self {
        Self {
            num: self.num.scale_argument(c),
            den: self.den.scale_argument(c),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        Self {
            num: self.num.shift_up(k),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            };
        }
        Self {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    /// `z -> g(z^m)`.
    pub fn compose_power(&self, m: usize) -> Self {
        Self {
            num: self.num.compose_power(m),
            den: self.den.compose_power(m),
        }
    }

    /// Taylor expansion at the origin to the given degree.
    pub fn series(&self, degree: usize) -> Result<TruncatedSeries> {
        self.num.to_series(degree).div(&self.den.to_series(degree))
    }
}

impl From<Polynomial> for Rational {
    fn from(p: Polynomial) -> Self {
        Self::polynomial(p)
    }
}

impl From<TruncatedSeries> for Rational {
    /// The truncated series is read as the polynomial it spells out.
    fn from(s: TruncatedSeries) -> Self {
        Self::polynomial(Polynomial::new(s.into_coeffs()))
    }
}

impl From<&TruncatedSeries> for Rational {
    fn from(s: &TruncatedSeries) -> Self {
        Self::polynomial(Polynomial::new(s.coeffs().to_vec()))
    }
}
