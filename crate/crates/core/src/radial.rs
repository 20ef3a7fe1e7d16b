//! Radial maps `F(x) = f(x) x` and the objects derived from them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

// Redundant whenever std is linked into the build, which brings the inherent
// float methods into scope.
#[allow(unused_imports)]
use num_traits::Float;

use crate::multipoly::{MultiPoly, PolyMap};
use crate::norm::{support_functional, NormModel, SupportFunctional, Vector};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;
use crate::{Error, Result, C64};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Tolerance for `|f(0) - 1|` in the normalization check.
pub const NORMALIZATION_TOL: f64 = 1e-12;
/// Tolerance for `| ||u|| - 1 |` on slice directions.
pub const UNIT_TOL: f64 = 1e-10;
/// Default cap on representation degree for [`RadialMap::schwarz_compose`].
pub const DEFAULT_DEGREE_CAP: usize = 256;

/// The scalar factor `f` of `F(x) = f(x) x`.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarField {
    /// `f(x) = phi(l(x))` with `phi` an exact rational function.
    Profile {
        phi: Rational,
        l: SupportFunctional,
    },
    Poly(MultiPoly),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialMap {
    field: ScalarField,
    model: NormModel,
}

/// `V(x) = l(x)^(m-1) x`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzPower {
    l: SupportFunctional,
    m: usize,
}

impl SchwarzPower {
    /// Uses `l = l_v`, the canonical support functional of the unit vector `v`.
    pub fn new(model: &NormModel, v: &Vector, m: usize) -> Result<Self> {
        check_unit(model, v)?;
        Self::from_functional(support_functional(v, model)?, m)
    }

    pub fn from_functional(l: SupportFunctional, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "Schwarz power order must be at least 1",
            ));
        }
        Ok(Self { l, m })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn functional(&self) -> &SupportFunctional {
        &self.l
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        x.scale(self.l.apply(x).powu(self.m as u32 - 1))
    }
}

/// Fails unless `| ||u|| - 1 | <= 1e-10`.
pub fn check_unit(model: &NormModel, u: &Vector) -> Result<()> {
    let norm = model.norm(u)?;
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnitDirection { norm });
    }
    Ok(())
}

/// `F(x) = x / (1 - l_v(x))^2`.
pub fn koebe_map(model: &NormModel, v: &Vector) -> Result<RadialMap> {
    profile_map(model, v, Rational::koebe_profile())
}

/// `F(x) = phi(l_v(x)) x`. A [`TruncatedSeries`] profile is read as the
/// polynomial it spells out.
pub fn profile_map(model: &NormModel, v: &Vector, phi: impl Into<Rational>) -> Result<RadialMap> {
    check_unit(model, v)?;
    let l = support_functional(v, model)?;
    RadialMap::new(ScalarField::Profile { phi: phi.into(), l }, *model)
}

impl RadialMap {
    /// Checks dimensions, `||l||_* <= 1 + 1e-12` for profiles and that the
    /// profile is holomorphic at the origin.
    pub fn new(field: ScalarField, model: NormModel) -> Result<Self> {
        match &field {
            ScalarField::Profile { phi, l } => {
                model.check_dim(l.dim())?;
                if model.dual_norm(l) > 1.0 + 1e-12 {
                    return Err(Error::InvalidParameter(
                        "profile functional has dual norm above 1",
                    ));
                }
                if phi.den().eval(ZERO) == ZERO {
                    return Err(Error::DivisionByZeroAtOrigin);
                }
            }
            ScalarField::Poly(p) => model.check_dim(p.nvars())?,
        }
        Ok(Self { field, model })
    }

    pub fn identity(model: &NormModel) -> Self {
        Self {
            field: ScalarField::Poly(MultiPoly::constant(model.n(), ONE)),
            model: *model,
        }
    }

    pub fn from_poly(model: &NormModel, f: MultiPoly) -> Result<Self> {
        Self::new(ScalarField::Poly(f), *model)
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn model(&self) -> &NormModel {
        &self.model
    }

    /// The profile functional, if any.
    pub fn functional(&self) -> Option<&SupportFunctional> {
        match &self.field {
            ScalarField::Profile { l, .. } => Some(l),
            ScalarField::Poly(_) => None,
        }
    }

    pub fn f0(&self) -> C64 {
        match &self.field {
            ScalarField::Profile { phi, .. } => phi.eval(ZERO),
            ScalarField::Poly(p) => p.constant_term(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        (self.f0() - ONE).norm() <= NORMALIZATION_TOL
    }

    pub fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized { f0: self.f0() })
        }
    }

    /// `f(x)`.
    pub fn scalar(&self, x: &Vector) -> Result<C64> {
        self.model.check_dim(x.dim())?;
        Ok(self.jets(x)[0])
    }

    /// `F(x) = f(x) x`.
    pub fn eval(&self, x: &Vector) -> Result<Vector> {
        Ok(x.scale(self.scalar(x)?))
    }

    /// `[f(x), Df(x)x, D^2 f(x)(x, x)]`.
    pub fn jets(&self, x: &Vector) -> [C64; 3] {
        match &self.field {
            ScalarField::Profile { phi, l } => {
                let t = l.apply(x);
                let [g, dg, ddg] = phi.eval_derivs(t);
                [g, dg * t, ddg * t * t]
            }
            ScalarField::Poly(p) => {
                // Along the ray t -> t x the homogeneous parts give all three.
                let q = p.homogeneous_values(x.entries());
                let mut out = [ZERO; 3];
                for (k, &c) in q.iter().enumerate() {
                    let k = k as f64;
                    out[0] += c;
                    out[1] += c * k;
                    out[2] += c * (k * (k - 1.0));
                }
                out
            }
        }
    }

    /// Coefficients `b_j = df/dx_j (x)`, so that `Df(x) xi = sum b_j xi_j`.
    pub fn gradient(&self, x: &Vector) -> Result<Vec<C64>> {
        self.model.check_dim(x.dim())?;
        Ok(match &self.field {
            ScalarField::Profile { phi, l } => {
                let d = phi.eval_derivs(l.apply(x))[1];
                l.coeffs().iter().map(|&w| w * d).collect()
            }
            ScalarField::Poly(p) => p.gradient_at(x.entries()),
        })
    }

    /// `DF(x) xi = f(x) xi + (Df(x) xi) x`.
    pub fn df_action(&self, x: &Vector, xi: &Vector) -> Result<Vector> {
        self.model.check_dim(xi.dim())?;
        let f = self.scalar(x)?;
        let b = self.gradient(x)?;
        let dfxi: C64 = b.iter().zip(xi.entries()).map(|(b, y)| b * y).sum();
        Ok(&xi.scale(f) + &x.scale(dfxi))
    }

    /// The scalar `c` with `[DF(x)]^{-1} F(x) = c x`, i.e. `f / (f + Df(x)x)`.
    pub fn inverse_transfer_scalar(&self, x: &Vector) -> Result<C64> {
        self.model.check_dim(x.dim())?;
        let [f, dfx, _] = self.jets(x);
        let den = f + dfx;
        if den.norm() <= 1e-14 {
            return Err(Error::LocalDegeneracy {
                point: x.entries().to_vec(),
            });
        }
        Ok(f / den)
    }

    /// `(2 Df(x)x + D^2 f(x)(x, x)) / (f + Df(x)x) + 1`.
    pub fn quasiconvex_scalar(&self, x: &Vector) -> Result<C64> {
        self.model.check_dim(x.dim())?;
        let [f, dfx, d2fx] = self.jets(x);
        let den = f + dfx;
        if den.norm() <= 1e-14 {
            return Err(Error::LocalDegeneracy {
                point: x.entries().to_vec(),
            });
        }
        Ok((dfx * 2.0 + d2fx) / den + ONE)
    }

    /// The exact slice `f_u(z) = z f(z u)`.
    pub fn slice(&self, u: &Vector) -> Result<Rational> {
        check_unit(&self.model, u)?;
        Ok(self.slice_unchecked(u))
    }

    /// Slice along any direction `w` (not necessarily unit): `z f(z w)`.
    pub fn slice_unchecked(&self, w: &Vector) -> Rational {
        match &self.field {
            ScalarField::Profile { phi, l } => phi.scale_argument(l.apply(w)).shift_up(1),
            ScalarField::Poly(p) => {
                Rational::polynomial(Polynomial::new(p.homogeneous_values(w.entries())).shift_up(1))
            }
        }
    }

    /// Taylor coefficients of the slice through `z^degree`.
    pub fn slice_series(&self, u: &Vector, degree: usize) -> Result<TruncatedSeries> {
        check_unit(&self.model, u)?;
        if degree == 0 {
            return Ok(TruncatedSeries::zero(0));
        }
        let q = self.homogeneous_values(u, degree - 1)?;
        Ok(TruncatedSeries::new(q).shift_up())
    }

    /// `[Q_0(w), ..., Q_kmax(w)]` for the homogeneous parts `Q_k` of `f`.
    pub fn homogeneous_values(&self, w: &Vector, kmax: usize) -> Result<Vec<C64>> {
        self.model.check_dim(w.dim())?;
        Ok(match &self.field {
            ScalarField::Profile { phi, l } => {
                phi.series(kmax)?.scale_argument(l.apply(w)).into_coeffs()
            }
            ScalarField::Poly(p) => {
                let mut q = p.homogeneous_values(w.entries());
                q.resize(kmax + 1, ZERO);
                q
            }
        })
    }

    /// `max_u |Q_{s-1}(u)| = max_u ||P_s(u)||` over the given unit vectors.
    pub fn homogeneous_sup(&self, s: usize, samples: &[Vector]) -> Result<f64> {
        Ok(self.homogeneous_argmax(s, samples)?.1)
    }

    /// Like [`homogeneous_sup`](Self::homogeneous_sup), also returning the
    /// index of the maximizing sample.
    pub fn homogeneous_argmax(&self, s: usize, samples: &[Vector]) -> Result<(usize, f64)> {
        if s == 0 {
            return Err(Error::InvalidParameter(
                "homogeneous degree must be at least 1",
            ));
        }
        let k = s - 1;
        let mut best = (0, 0.0);
        match &self.field {
            ScalarField::Profile { phi, l } => {
                let c = phi.series(k)?.coeff(k);
                for (i, u) in samples.iter().enumerate() {
                    self.model.check_dim(u.dim())?;
                    let v = c.norm() * l.apply(u).norm().powi(k as i32);
                    if v > best.1 {
                        best = (i, v);
                    }
                }
            }
            ScalarField::Poly(p) => {
                let part = p.homogeneous_part(k);
                for (i, u) in samples.iter().enumerate() {
                    self.model.check_dim(u.dim())?;
                    let v = part.eval(u.entries()).norm();
                    if v > best.1 {
                        best = (i, v);
                    }
                }
            }
        }
        Ok(best)
    }

    /// `G(x) = DF(x) x`, whose scalar is `g = f + Df(x) x`.
    pub fn alexander_transform(&self) -> Self {
        let field = match &self.field {
            ScalarField::Profile { phi, l } => {
                // phi + t phi' = (t phi)'
                ScalarField::Profile {
                    phi: phi.shift_up(1).derivative(),
                    l: l.clone(),
                }
            }
            ScalarField::Poly(p) => {
                let mut g = MultiPoly::zero(p.nvars());
                for (e, c) in p.terms() {
                    let k: u32 = e.iter().sum();
                    g.add_term(e.to_vec(), c * (1.0 + k as f64));
                }
                ScalarField::Poly(g)
            }
        };
        Self {
            field,
            model: self.model,
        }
    }

    /// `G = F o V`. For a profile map whose functional coincides with that of
    /// `V` the result stays a profile map, `psi(t) = phi(t^m) t^(m-1)`.
    /// Otherwise `f` must be polynomial and `g(x) = f(l(x)^(m-1) x) l(x)^(m-1)`
    /// is expanded; `DegreeOverflow` when the result degree exceeds `cap`.
    pub fn schwarz_compose(&self, v: &SchwarzPower, cap: usize) -> Result<Self> {
        self.model.check_dim(v.l.dim())?;
        let m = v.m;
        if m == 1 {
            return Ok(self.clone());
        }
        if let ScalarField::Profile { phi, l } = &self.field {
            if same_functional(l, &v.l) {
                let num = phi.num().compose_power(m).shift_up(m - 1);
                let den = phi.den().compose_power(m);
                let needed = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
                if needed > cap {
                    return Err(Error::DegreeOverflow { needed, cap });
                }
                let phi = Rational::new(num, den)?;
                return Self::new(ScalarField::Profile { phi, l: l.clone() }, self.model);
            }
        }
        let f = self.scalar_poly()?;
        let needed = f.degree() * m + (m - 1);
        if needed > cap {
            return Err(Error::DegreeOverflow { needed, cap });
        }
        let lin = MultiPoly::linear_form(&v.l);
        let mut powers: BTreeMap<usize, MultiPoly> = BTreeMap::new();
        let mut g = MultiPoly::zero(self.model.n());
        for (e, c) in f.terms() {
            let k: usize = e.iter().map(|&a| a as usize).sum();
            let power = powers
                .entry((m - 1) * (k + 1))
                .or_insert_with_key(|&j| lin.pow(j));
            let mono = MultiPoly::from_terms(self.model.n(), [(e.to_vec(), c)])?;
            g = g.add(&mono.mul(power));
        }
        Self::new(ScalarField::Poly(g), self.model)
    }

    /// The scalar field as a multivariate polynomial; profile maps need a
    /// polynomial `phi`.
    pub fn scalar_poly(&self) -> Result<MultiPoly> {
        match &self.field {
            ScalarField::Poly(p) => Ok(p.clone()),
            ScalarField::Profile { phi, l } => {
                if !phi.is_polynomial() {
                    return Err(Error::InvalidParameter(
                        "a rational profile has no polynomial scalar field",
                    ));
                }
                let d0 = phi.den().coeff(0);
                let lin = MultiPoly::linear_form(l);
                // Horner in l(x).
                let n = self.model.n();
                let mut acc = MultiPoly::zero(n);
                for &c in phi.num().coeffs().iter().rev() {
                    acc = acc.mul(&lin).add(&MultiPoly::constant(n, c / d0));
                }
                Ok(acc)
            }
        }
    }

    /// Components `F_j(x) = f(x) x_j` as a polynomial map.
    pub fn to_poly_map(&self) -> Result<PolyMap> {
        let f = self.scalar_poly()?;
        let n = self.model.n();
        PolyMap::new((0..n).map(|j| f.mul(&MultiPoly::variable(n, j))).collect())
    }
}

fn same_functional(a: &SupportFunctional, b: &SupportFunctional) -> bool {
    a.dim() == b.dim()
        && a.coeffs()
            .iter()
            .zip(b.coeffs())
            .all(|(x, y)| (x - y).norm() <= 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::norm::sphere_sample;
    use alloc::vec;

    fn model() -> NormModel {
        NormModel::default()
    }

    fn e1() -> Vector {
        Vector::basis(3, 0)
    }

    #[test]
    fn koebe_slices() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let s = f.slice_series(&e1(), 8).unwrap();
        assert_eq!(s, TruncatedSeries::koebe(8));
        let s = f.slice_series(&Vector::basis(3, 1), 8).unwrap();
        assert_eq!(s, TruncatedSeries::identity(8));
        let id = RadialMap::identity(&model());
        let u = &sphere_sample(&model(), 5, 1)[4];
        assert_eq!(id.slice_series(u, 4).unwrap(), TruncatedSeries::identity(4));
    }

    #[test]
    fn non_unit_direction_is_rejected() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let u = Vector::from_real(&[0.5, 0.0, 0.0]);
        assert!(matches!(
            f.slice_series(&u, 4),
            Err(Error::NonUnitDirection { .. })
        ));
    }

    #[test]
    fn koebe_derivative_along_ray() {
        let f = koebe_map(&model(), &e1()).unwrap();
        for r in [0.1, 0.5, 0.9] {
            let x = e1().scale_real(r);
            let d = f.df_action(&x, &e1()).unwrap();
            let want = (1.0 + r) / (1.0 - r).powi(3);
            assert!((d[0] - c64(want, 0.0)).norm() < 1e-12 * want);
            let c = f.inverse_transfer_scalar(&x).unwrap();
            assert!((c - c64((1.0 - r) / (1.0 + r), 0.0)).norm() < 1e-14);
            let q = f.quasiconvex_scalar(&x).unwrap();
            let want = (1.0 + 4.0 * r + r * r) / (1.0 - r * r);
            assert!((q - c64(want, 0.0)).norm() < 1e-12 * want);
            let norm = model().norm(&f.eval(&x).unwrap()).unwrap();
            assert!((norm - r / (1.0 - r).powi(2)).abs() < 1e-12);
        }
    }

    #[test]
    fn df_at_origin_is_scalar() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let xi = Vector::from_real(&[0.3, -0.2, 0.7]);
        assert_eq!(f.df_action(&Vector::zeros(3), &xi).unwrap(), xi);
    }

    #[test]
    fn homogeneous_sup_examples() {
        let samples = sphere_sample(&model(), 16, 3);
        let f = koebe_map(&model(), &e1()).unwrap();
        for s in 1..=10 {
            assert!((f.homogeneous_sup(s, &samples).unwrap() - s as f64).abs() < 1e-12);
        }
        let id = RadialMap::identity(&model());
        assert_eq!(id.homogeneous_sup(3, &samples).unwrap(), 0.0);
        let lin = profile_map(&model(), &e1(), TruncatedSeries::from_real(&[1.0, 1.0])).unwrap();
        assert!((lin.homogeneous_sup(2, &samples).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn alexander_of_koebe_profile() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let g = f.alexander_transform();
        let q = g.homogeneous_values(&e1(), 6).unwrap();
        for (k, c) in q.iter().enumerate() {
            let want = ((k + 1) * (k + 1)) as f64;
            assert!((c - c64(want, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn alexander_of_poly_matches_profile() {
        let phi = TruncatedSeries::from_real(&[1.0, 0.4, -0.3, 0.2]);
        let f = profile_map(&model(), &e1(), phi).unwrap();
        let p = RadialMap::from_poly(&model(), f.scalar_poly().unwrap()).unwrap();
        let x = Vector::new(vec![c64(0.2, 0.1), c64(-0.3, 0.0), c64(0.1, 0.4)]);
        let a = f.alexander_transform().scalar(&x).unwrap();
        let b = p.alexander_transform().scalar(&x).unwrap();
        assert!((a - b).norm() < 1e-14);
        assert!(
            (f.quasiconvex_scalar(&x).unwrap() - p.quasiconvex_scalar(&x).unwrap()).norm() < 1e-12
        );
    }

    #[test]
    fn schwarz_compose_koebe_square() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let v = SchwarzPower::new(&model(), &e1(), 2).unwrap();
        let g = f.schwarz_compose(&v, DEFAULT_DEGREE_CAP).unwrap();
        // slice at v: z * z / (1 - z^2)^2
        let s = g.slice_series(&e1(), 9).unwrap();
        let want = [0.0, 0.0, 1.0, 0.0, 2.0, 0.0, 3.0, 0.0, 4.0, 0.0];
        for (c, w) in s.coeffs().iter().zip(want) {
            assert!((c - c64(w, 0.0)).norm() < 1e-12);
        }
        assert_eq!(
            f.schwarz_compose(&SchwarzPower::new(&model(), &e1(), 1).unwrap(), 8)
                .unwrap(),
            f
        );
    }

    #[test]
    fn schwarz_compose_poly_route_agrees() {
        let phi = TruncatedSeries::from_real(&[1.0, 0.5, 0.25]);
        let f = profile_map(&model(), &e1(), phi).unwrap();
        let u = Vector::from_real(&[0.6, 0.8, 0.0]);
        let v = SchwarzPower::new(&model(), &u, 3).unwrap();
        let g = f.schwarz_compose(&v, 64).unwrap();
        assert!(matches!(g.field(), ScalarField::Poly(_)));
        let x = Vector::new(vec![c64(0.2, 0.1), c64(-0.3, 0.0), c64(0.1, 0.4)]);
        let direct = f.eval(&v.apply(&x)).unwrap();
        let composed = g.eval(&x).unwrap();
        for j in 0..3 {
            assert!((direct[j] - composed[j]).norm() < 1e-14);
        }
        assert!(matches!(
            f.schwarz_compose(&v, 4),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn rejects_large_functional() {
        let l = SupportFunctional::new(vec![c64(1.0, 0.0), c64(1.0, 0.0), ZERO]);
        let field = ScalarField::Profile {
            phi: Rational::one(),
            l,
        };
        assert!(RadialMap::new(field, model()).is_err());
    }
}
