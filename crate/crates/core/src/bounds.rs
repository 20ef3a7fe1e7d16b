//! Verifiers for the sharp coefficient, growth, covering, distortion,
//! Fekete-Szego and Bloch inequalities.
//!
//! Sphere suprema are sample estimates: a passing report means the inequality
//! holds on the samples, and `attained` is meaningful only when the extremal
//! direction is among them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

// Redundant whenever std is linked into the build, which brings the inherent
// float methods into scope.
#[allow(unused_imports)]
use num_traits::Float;

use crate::criteria::{
    ball_criterion, boundary_min, CriterionConfig, CriterionKind, CriterionReport, Verdict, Witness,
};
use crate::linalg::sigma_max_2x2;
use crate::norm::{lp_norm, Vector};
use crate::radial::RadialMap;
use crate::rational::Rational;
use crate::{Error, Result, C64};

const ZERO: C64 = C64::new(0.0, 0.0);

/// Direction of an inequality: `Upper` means `observed <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: String,
    /// The parameter the bound was evaluated at (`s`, `r` or `lambda`).
    pub param: Option<f64>,
    pub sense: Sense,
    pub observed: f64,
    pub bound: f64,
    /// `bound - observed` for upper bounds, `observed - bound` for lower ones.
    pub slack: f64,
    pub attained: bool,
    pub tol: f64,
    pub witness: Witness,
}

impl BoundReport {
    pub fn new(
        name: impl Into<String>,
        param: Option<f64>,
        sense: Sense,
        observed: f64,
        bound: f64,
        tol: f64,
        witness: Witness,
    ) -> Self {
        let slack = match sense {
            Sense::Upper => bound - observed,
            Sense::Lower => observed - bound,
        };
        Self {
            name: name.into(),
            param,
            sense,
            observed,
            bound,
            slack,
            attained: slack.abs() <= tol,
            tol,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.slack >= -self.tol
    }
}

fn slices(map: &RadialMap, samples: &[Vector]) -> Result<Vec<Rational>> {
    samples.iter().map(|u| map.slice(u)).collect()
}

fn witness(sample: usize, u: &Vector, z: C64, value: f64) -> Witness {
    Witness {
        sample,
        point: u.scale(z).into_entries(),
        value,
    }
}

fn check_radii(radii: &[f64]) -> Result<()> {
    match radii.iter().find(|&&r| !(r > 0.0 && r < 1.0)) {
        Some(&r) => Err(Error::OutOfBall { r }),
        None => Ok(()),
    }
}

/// `max_u ||P_s(u)|| <= s |f_F(0)|` for `s = 1..=s_max`, evaluated on `g`
/// (which is `f` itself or a map subordinate to it).
pub fn check_bieberbach(
    f: &RadialMap,
    g: &RadialMap,
    s_max: usize,
    samples: &[Vector],
    tol: f64,
) -> Result<Vec<BoundReport>> {
    let scale = f.f0().norm();
    (1..=s_max)
        .map(|s| {
            let (i, sup) = g.homogeneous_argmax(s, samples)?;
            let u = samples
                .get(i)
                .ok_or(Error::InvalidParameter("no samples"))?;
            Ok(BoundReport::new(
                "bieberbach",
                Some(s as f64),
                Sense::Upper,
                sup,
                s as f64 * scale,
                tol,
                Witness {
                    sample: i,
                    point: u.entries().to_vec(),
                    value: sup,
                },
            ))
        })
        .collect()
}

/// Extremes of `z -> value(slice, z)` over `|z| = r` and all slices.
fn circle_extremes(
    slices: &[Rational],
    samples: &[Vector],
    r: f64,
    grid: usize,
    value: &dyn Fn(&Rational, C64) -> f64,
) -> ((f64, Witness), (f64, Witness)) {
    let mut lo = (f64::INFINITY, None);
    let mut hi = (f64::NEG_INFINITY, None);
    for (i, f) in slices.iter().enumerate() {
        let g = |t: f64| value(f, C64::from_polar(r, t));
        let (t, v) = boundary_min(&g, grid);
        if v < lo.0 {
            lo = (v, Some((i, t)));
        }
        let neg = |t: f64| -g(t);
        let (t, v) = boundary_min(&neg, grid);
        if -v > hi.0 {
            hi = (-v, Some((i, t)));
        }
    }
    let wit = |(v, at): (f64, Option<(usize, f64)>)| {
        let (i, t) = at.expect("at least one sample");
        (v, witness(i, &samples[i], C64::from_polar(r, t), v))
    };
    (wit(lo), wit(hi))
}

fn require_samples(samples: &[Vector]) -> Result<()> {
    if samples.is_empty() {
        Err(Error::InvalidParameter(
            "at least one sample direction is needed",
        ))
    } else {
        Ok(())
    }
}

/// `r/(1+r)^2 <= ||F(x)|| <= r/(1-r)^2` on `||x|| = r`, scanning each slice
/// over the circle of radius `r`.
pub fn check_growth(
    map: &RadialMap,
    samples: &[Vector],
    radii: &[f64],
    grid: usize,
    tol: f64,
) -> Result<Vec<BoundReport>> {
    map.require_normalized()?;
    require_samples(samples)?;
    check_radii(radii)?;
    let slices = slices(map, samples)?;
    let mut out = Vec::new();
    for &r in radii {
        let ((lo, wlo), (hi, whi)) =
            circle_extremes(&slices, samples, r, grid, &|f, z| f.eval(z).norm());
        out.push(BoundReport::new(
            "growth_upper",
            Some(r),
            Sense::Upper,
            hi,
            r / (1.0 - r).powi(2),
            tol,
            whi,
        ));
        out.push(BoundReport::new(
            "growth_lower",
            Some(r),
            Sense::Lower,
            lo,
            r / (1.0 + r).powi(2),
            tol,
            wlo,
        ));
    }
    Ok(out)
}

/// Smallest `|f_u(z)|` on `|z| = r` over the samples against `r/(1+r)^2`.
/// Meaningful as a covering radius when the map is univalent on `B_r`.
pub fn covering_margin(
    map: &RadialMap,
    r: f64,
    samples: &[Vector],
    grid: usize,
    tol: f64,
) -> Result<BoundReport> {
    map.require_normalized()?;
    require_samples(samples)?;
    check_radii(&[r])?;
    let slices = slices(map, samples)?;
    let ((lo, w), _) = circle_extremes(&slices, samples, r, grid, &|f, z| f.eval(z).norm());
    Ok(BoundReport::new(
        "covering",
        Some(r),
        Sense::Lower,
        lo,
        r / (1.0 + r).powi(2),
        tol,
        w,
    ))
}

/// `r(1-r)/(1+r)^3 <= ||DF(x)x|| <= r(1+r)/(1-r)^3` on `||x|| = r`, using
/// `DF(z u) z u = f_u'(z) z u`.
pub fn check_distortion_ray(
    map: &RadialMap,
    samples: &[Vector],
    radii: &[f64],
    grid: usize,
    tol: f64,
) -> Result<Vec<BoundReport>> {
    map.require_normalized()?;
    require_samples(samples)?;
    check_radii(radii)?;
    let slices = slices(map, samples)?;
    let mut out = Vec::new();
    for &r in radii {
        let ((lo, wlo), (hi, whi)) = circle_extremes(&slices, samples, r, grid, &|f, z| {
            f.eval_derivs(z)[1].norm() * z.norm()
        });
        let upper = r * (1.0 + r) / (1.0 - r).powi(3);
        let lower = r * (1.0 - r) / (1.0 + r).powi(3);
        out.push(BoundReport::new(
            "distortion_ray_upper",
            Some(r),
            Sense::Upper,
            hi,
            upper,
            tol,
            whi,
        ));
        out.push(BoundReport::new(
            "distortion_ray_lower",
            Some(r),
            Sense::Lower,
            lo,
            lower,
            tol,
            wlo,
        ));
    }
    Ok(out)
}

/// Euclidean operator norm of `DF(x) = f(x) I + x b^T`.
///
/// With `c = conj(b)` the operator is `alpha I + x c^H`, which maps
/// `span{x, c}` into itself and acts as `alpha` on its orthogonal complement,
/// so the norm is the larger of a 2x2 singular value and `|alpha|`.
pub fn hilbert_operator_norm(map: &RadialMap, x: &Vector) -> Result<f64> {
    if !map.model().is_hilbert() {
        return Err(Error::UnsupportedModel(
            "the operator norm bound needs p = 2",
        ));
    }
    let alpha = map.scalar(x)?;
    let c: Vec<C64> = map.gradient(x)?.iter().map(|b| b.conj()).collect();
    let n = x.dim();
    let xn = lp_norm(x.entries(), 2.0);
    if xn == 0.0 {
        return Ok(alpha.norm());
    }
    let e1: Vec<C64> = x.entries().iter().map(|z| z / xn).collect();
    let dot = |a: &[C64], b: &[C64]| -> C64 { a.iter().zip(b).map(|(p, q)| p * q.conj()).sum() };
    let c1 = dot(&e1, &c);
    let perp: Vec<C64> = c
        .iter()
        .zip(&e1)
        .map(|(ci, ei)| ci - ei * dot(&c, &e1))
        .collect();
    let pn = lp_norm(&perp, 2.0);
    let cn = lp_norm(&c, 2.0);
    let top = alpha + c1 * xn;
    if pn <= 1e-15 * cn.max(1.0) {
        // span{x, c} is one-dimensional.
        let block = top.norm();
        return Ok(if n > 1 {
            block.max(alpha.norm())
        } else {
            block
        });
    }
    let e2: Vec<C64> = perp.iter().map(|z| z / pn).collect();
    let c2 = dot(&e2, &c);
    let block = sigma_max_2x2(top, c2 * xn, ZERO, alpha);
    Ok(if n > 2 {
        block.max(alpha.norm())
    } else {
        block
    })
}

/// `(1-r)/(1+r)^3 <= ||DF(x)|| <= (1+r)/(1-r)^3` on `||x|| = r` in the
/// Euclidean model, at `grid` angles per sampled direction.
pub fn check_distortion_hilbert(
    map: &RadialMap,
    samples: &[Vector],
    radii: &[f64],
    grid: usize,
    tol: f64,
) -> Result<Vec<BoundReport>> {
    if !map.model().is_hilbert() {
        return Err(Error::UnsupportedModel(
            "the operator norm bound needs p = 2",
        ));
    }
    map.require_normalized()?;
    require_samples(samples)?;
    check_radii(radii)?;
    let grid = grid.max(1);
    let mut out = Vec::new();
    for &r in radii {
        let mut lo = (f64::INFINITY, None);
        let mut hi = (f64::NEG_INFINITY, None);
        for (i, u) in samples.iter().enumerate() {
            for k in 0..grid {
                let z = C64::from_polar(r, 2.0 * PI * k as f64 / grid as f64);
                let v = hilbert_operator_norm(map, &u.scale(z))?;
                if v < lo.0 {
                    lo = (v, Some(witness(i, u, z, v)));
                }
                if v > hi.0 {
                    hi = (v, Some(witness(i, u, z, v)));
                }
            }
        }
        let upper = (1.0 + r) / (1.0 - r).powi(3);
        let lower = (1.0 - r) / (1.0 + r).powi(3);
        out.push(BoundReport::new(
            "distortion_upper",
            Some(r),
            Sense::Upper,
            hi.0,
            upper,
            tol,
            hi.1.unwrap(),
        ));
        out.push(BoundReport::new(
            "distortion_lower",
            Some(r),
            Sense::Lower,
            lo.0,
            lower,
            tol,
            lo.1.unwrap(),
        ));
    }
    Ok(out)
}

/// `1 + 2 exp(-2 lambda / (1 - lambda))`.
pub fn fekete_szego_bound(lambda: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::InvalidParameter("lambda must lie in [0, 1)"));
    }
    Ok(1.0 + 2.0 * libm::exp(-2.0 * lambda / (1.0 - lambda)))
}

/// `|Q_2(u) - lambda Q_1(u)^2| <= 1 + 2 exp(-2 lambda / (1 - lambda))`.
pub fn fekete_szego(map: &RadialMap, u: &Vector, lambda: f64, tol: f64) -> Result<BoundReport> {
    let bound = fekete_szego_bound(lambda)?;
    map.require_normalized()?;
    crate::radial::check_unit(map.model(), u)?;
    let q = map.homogeneous_values(u, 2)?;
    let lhs = (q[2] - q[1] * q[1] * lambda).norm();
    Ok(BoundReport::new(
        "fekete_szego",
        Some(lambda),
        Sense::Upper,
        lhs,
        bound,
        tol,
        Witness {
            sample: 0,
            point: u.entries().to_vec(),
            value: lhs,
        },
    ))
}

/// Sampling plan for [`bloch_seminorm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochGrid {
    /// Uniform radii `k / radial`, `k = 0..radial`.
    pub radial: usize,
    pub angular: usize,
    /// Estimates above this are reported as unbounded.
    pub cap: f64,
}

impl Default for BlochGrid {
    fn default() -> Self {
        Self {
            radial: 24,
            angular: 72,
            cap: 1e6,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlochEstimate {
    pub value: f64,
    pub exceeds_cap: bool,
    pub witness: Witness,
}

/// Radii closer to the boundary than the uniform grid, used to expose
/// unbounded seminorms.
const BOUNDARY_LAYERS: [f64; 7] = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8];

/// Estimate of `||F(0)|| + sup (1-||x||^2) ||DF(x)x|| / ||x||`, which on
/// slices is `sup (1-|z|^2) |f_u'(z)|` (`F(0) = 0` for radial maps). Each
/// slice is scanned on the grid and its best point polished by a compass
/// search in `(rho, theta)`.
pub fn bloch_seminorm(
    map: &RadialMap,
    samples: &[Vector],
    grid: &BlochGrid,
) -> Result<BlochEstimate> {
    require_samples(samples)?;
    if grid.radial < 1 || grid.angular < 1 {
        return Err(Error::InvalidParameter(
            "Bloch grid needs at least one node per axis",
        ));
    }
    let mut radii: Vec<f64> = (0..grid.radial)
        .map(|k| k as f64 / grid.radial as f64)
        .collect();
    radii.extend(BOUNDARY_LAYERS.iter().map(|d| 1.0 - d));
    let mut best = (f64::NEG_INFINITY, 0, ZERO);
    for (i, u) in samples.iter().enumerate() {
        let f = map.slice(u)?;
        let value = |rho: f64, theta: f64| {
            let z = C64::from_polar(rho, theta);
            (1.0 - rho * rho) * f.eval_derivs(z)[1].norm()
        };
        let mut local = (f64::NEG_INFINITY, 0.0, 0.0);
        for &rho in &radii {
            for k in 0..grid.angular {
                let theta = 2.0 * PI * k as f64 / grid.angular as f64;
                let v = value(rho, theta);
                if v > local.0 {
                    local = (v, rho, theta);
                }
            }
        }
        let (v, rho, theta) = polish_max(
            &value,
            local,
            1.0 / grid.radial as f64,
            PI / grid.angular as f64,
        );
        if v > best.0 {
            best = (v, i, C64::from_polar(rho, theta));
        }
    }
    let (value, i, z) = best;
    Ok(BlochEstimate {
        value,
        exceeds_cap: !(value <= grid.cap),
        witness: witness(i, &samples[i], z, value),
    })
}

fn polish_max(
    value: &dyn Fn(f64, f64) -> f64,
    start: (f64, f64, f64),
    dr: f64,
    dt: f64,
) -> (f64, f64, f64) {
    let (mut v, mut rho, mut theta) = start;
    if !v.is_finite() {
        return start;
    }
    let mut scale = 1.0;
    while scale > 1e-10 {
        let mut improved = false;
        for (a, b) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let r2 = (rho + a * dr * scale).clamp(0.0, 1.0 - 1e-12);
            let t2 = theta + b * dt * scale;
            let w = value(r2, t2);
            if w > v {
                v = w;
                rho = r2;
                theta = t2;
                improved = true;
            }
        }
        if !improved {
            scale *= 0.5;
        }
    }
    (v, rho, theta)
}

/// Membership tolerance for the class of normalized maps with Bloch
/// seminorm one.
pub const BLOCH_CLASS_TOL: f64 = 1e-3;

fn require_bloch_class(map: &RadialMap, samples: &[Vector], grid: &BlochGrid) -> Result<f64> {
    map.require_normalized()?;
    let est = bloch_seminorm(map, samples, grid)?;
    if !((est.value - 1.0).abs() <= BLOCH_CLASS_TOL) {
        return Err(Error::NotInClass {
            seminorm: est.value,
        });
    }
    Ok(est.value)
}

/// `(1 - sqrt(3) r) / (1 - r/sqrt(3))^3 * r`.
pub fn bonk_bound(r: f64) -> f64 {
    let s3 = libm::sqrt(3.0);
    (1.0 - s3 * r) / (1.0 - r / s3).powi(3) * r
}

/// `Re l_x(DF(x)x) = Re f_u'(z) |z|` against [`bonk_bound`] on a
/// `radial x angular` grid over `0 < ||x|| <= 1/sqrt(3)`; the report carries
/// the point of least slack.
pub fn check_bonk(
    map: &RadialMap,
    samples: &[Vector],
    radial: usize,
    angular: usize,
    bloch: &BlochGrid,
    tol: f64,
) -> Result<BoundReport> {
    require_samples(samples)?;
    require_bloch_class(map, samples, bloch)?;
    if radial < 1 || angular < 1 {
        return Err(Error::InvalidParameter(
            "Bonk grid needs at least one node per axis",
        ));
    }
    let rmax = 1.0 / libm::sqrt(3.0);
    let mut worst: Option<(f64, f64, f64, Witness)> = None;
    for (i, u) in samples.iter().enumerate() {
        let f = map.slice(u)?;
        for a in 1..=radial {
            let rho = rmax * a as f64 / radial as f64;
            let bound = bonk_bound(rho);
            for k in 0..angular {
                let z = C64::from_polar(rho, 2.0 * PI * k as f64 / angular as f64);
                let lhs = f.eval_derivs(z)[1].re * rho;
                let slack = lhs - bound;
                if worst.as_ref().map_or(true, |w| slack < w.0) {
                    worst = Some((slack, lhs, bound, witness(i, u, z, lhs)));
                }
            }
        }
    }
    let (_, lhs, bound, w) = worst.expect("grid is non-empty");
    Ok(BoundReport::new(
        "bonk",
        Some(rmax),
        Sense::Lower,
        lhs,
        bound,
        tol,
        w,
    ))
}

/// Result of [`bloch_schlicht_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct SchlichtReport {
    pub univalence: CriterionReport,
    pub covering: BoundReport,
}

impl SchlichtReport {
    pub fn passed(&self) -> bool {
        self.univalence.verdict == Verdict::Holds && self.covering.passed()
    }
}

/// For maps of the normalized Bloch class: univalence on `B_{1/sqrt 3}` and
/// the image of that ball covering `B_{sqrt(3)/4}`.
pub fn bloch_schlicht_check(
    map: &RadialMap,
    samples: &[Vector],
    cfg: &CriterionConfig,
    bloch: &BlochGrid,
    tol: f64,
) -> Result<SchlichtReport> {
    require_samples(samples)?;
    require_bloch_class(map, samples, bloch)?;
    let r = 1.0 / libm::sqrt(3.0);
    let univalence = ball_criterion(map, r, CriterionKind::Univalent, samples, cfg)?;
    let cover = covering_margin(map, r, samples, cfg.boundary_grid, tol)?;
    let covering = BoundReport::new(
        "bloch_covering",
        Some(r),
        Sense::Lower,
        cover.observed,
        libm::sqrt(3.0) / 4.0,
        tol,
        cover.witness,
    );
    Ok(SchlichtReport {
        univalence,
        covering,
    })
}

/// Short label such as `growth_upper(r=0.5)`.
pub fn label(report: &BoundReport) -> String {
    match report.param {
        Some(p) => format!("{}({})", report.name, p),
        None => report.name.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::{sphere_sample, NormModel};
    use crate::radial::{koebe_map, profile_map};
    use crate::series::TruncatedSeries;

    fn model() -> NormModel {
        NormModel::default()
    }

    fn e1() -> Vector {
        Vector::basis(3, 0)
    }

    fn samples() -> Vec<Vector> {
        sphere_sample(&model(), 16, 11)
    }

    #[test]
    fn koebe_bieberbach_is_attained() {
        let f = koebe_map(&model(), &e1()).unwrap();
        for rep in check_bieberbach(&f, &f, 10, &samples(), 1e-10).unwrap() {
            assert!(rep.passed() && rep.attained, "{rep:?}");
        }
        let id = RadialMap::identity(&model());
        let reps = check_bieberbach(&id, &id, 4, &samples(), 1e-10).unwrap();
        assert!(reps[1..].iter().all(|r| r.observed == 0.0));
    }

    #[test]
    fn koebe_growth_and_distortion_are_attained() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let radii = [0.1, 0.5, 0.9];
        for rep in check_growth(&f, &samples(), &radii, 360, 1e-10).unwrap() {
            assert!(rep.passed() && rep.attained, "{rep:?}");
        }
        for rep in check_distortion_ray(&f, &samples(), &radii, 360, 1e-9).unwrap() {
            assert!(rep.passed() && rep.attained, "{rep:?}");
        }
        let reps = check_distortion_hilbert(&f, &samples(), &radii, 8, 1e-9).unwrap();
        for rep in reps.iter().filter(|r| r.name == "distortion_upper") {
            assert!(rep.attained, "{rep:?}");
        }
        assert!(reps.iter().all(|r| r.passed()));
    }

    #[test]
    fn growth_bounds_at_half() {
        let id = RadialMap::identity(&model());
        let reps = check_growth(&id, &samples(), &[0.5], 16, 1e-12).unwrap();
        assert!((reps[0].bound - 2.0).abs() < 1e-15);
        assert!((reps[1].bound - 2.0 / 9.0).abs() < 1e-15);
        assert!((reps[0].observed - 0.5).abs() < 1e-15);
    }

    #[test]
    fn covering_examples() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let rep = covering_margin(&f, 0.5, &samples(), 360, 1e-12).unwrap();
        assert!((rep.observed - 2.0 / 9.0).abs() < 1e-12);
        let id = RadialMap::identity(&model());
        assert!(
            (covering_margin(&id, 0.3, &samples(), 36, 1e-12)
                .unwrap()
                .observed
                - 0.3)
                .abs()
                < 1e-15
        );
    }

    #[test]
    fn operator_norm_of_identity_and_non_hilbert_rejection() {
        let id = RadialMap::identity(&model());
        let x = Vector::from_real(&[0.1, 0.2, 0.3]);
        assert!((hilbert_operator_norm(&id, &x).unwrap() - 1.0).abs() < 1e-15);
        let l1 = NormModel::new(1.0, 3).unwrap();
        let f = koebe_map(&l1, &e1()).unwrap();
        assert!(matches!(
            check_distortion_hilbert(&f, &[e1()], &[0.5], 4, 1e-9),
            Err(Error::UnsupportedModel(_))
        ));
    }

    #[test]
    fn fekete_szego_examples() {
        let f = koebe_map(&model(), &e1()).unwrap();
        let rep = fekete_szego(&f, &e1(), 0.0, 1e-12).unwrap();
        assert_eq!(rep.bound, 3.0);
        assert!(rep.attained);
        let rep = fekete_szego(&f, &e1(), 0.5, 1e-12).unwrap();
        assert!((rep.observed - 1.0).abs() < 1e-12);
        assert!((rep.bound - (1.0 + 2.0 * libm::exp(-2.0))).abs() < 1e-15);
        let rep = fekete_szego(&f, &Vector::basis(3, 2), 0.3, 1e-12).unwrap();
        assert_eq!(rep.observed, 0.0);
        assert!(fekete_szego(&f, &e1(), 1.0, 1e-12).is_err());
    }

    #[test]
    fn bloch_examples() {
        let id = RadialMap::identity(&model());
        for radial in [4, 24, 97] {
            let grid = BlochGrid {
                radial,
                angular: 8,
                cap: 1e6,
            };
            let est = bloch_seminorm(&id, &samples(), &grid).unwrap();
            assert!((est.value - 1.0).abs() < 1e-12);
        }
        let f = koebe_map(&model(), &e1()).unwrap();
        assert!(
            bloch_seminorm(&f, &samples(), &BlochGrid::default())
                .unwrap()
                .exceeds_cap
        );
        let scaled = profile_map(&model(), &e1(), TruncatedSeries::from_real(&[1.0, 1.0])).unwrap();
        let err = check_bonk(&scaled, &samples(), 4, 8, &BlochGrid::default(), 1e-12);
        assert!(matches!(err, Err(Error::NotInClass { .. })));
    }

    #[test]
    fn identity_passes_bonk_and_schlicht() {
        let id = RadialMap::identity(&model());
        let rep = check_bonk(&id, &samples(), 24, 72, &BlochGrid::default(), 1e-12).unwrap();
        assert!(rep.passed());
        let sch = bloch_schlicht_check(
            &id,
            &samples(),
            &CriterionConfig::default(),
            &BlochGrid::default(),
            1e-9,
        )
        .unwrap();
        assert!(sch.passed());
        assert!((sch.covering.observed - 1.0 / libm::sqrt(3.0)).abs() < 1e-12);
    }
}
