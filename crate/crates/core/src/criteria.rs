//! Univalence, starlikeness and convexity deciders.
//!
//! The one-variable tests work on exact slice functions. Starlike and convex
//! margins are taken on the boundary circle only, which is valid once the
//! relevant zeros and poles are known to lie outside the closed disc (the
//! real part of an analytic quotient attains its minimum on the boundary).
//! Ball-level tests take the conjunction over sampled directions.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

// Redundant whenever std is linked into the build, which brings the inherent
// float methods into scope.
#[allow(unused_imports)]
use num_traits::Float;

use crate::multipoly::PolyMap;
use crate::norm::{lp_norm, NormModel, Vector};
use crate::poly::Polynomial;
use crate::radial::RadialMap;
use crate::rational::Rational;
use crate::{Error, Result, C64};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionConfig {
    /// Points on each test circle.
    pub boundary_grid: usize,
    /// Radial nodes for ball-level scans.
    pub radial_grid: usize,
    /// Tolerance for strict inequalities; `|margin| <= 10 * margin` is
    /// inconclusive.
    pub margin: f64,
    /// Truncation degree for series outputs.
    pub degree: usize,
}

impl Default for CriterionConfig {
    fn default() -> Self {
        Self {
            boundary_grid: 720,
            radial_grid: 24,
            margin: 1e-9,
            degree: crate::series::DEFAULT_DEGREE,
        }
    }
}

impl CriterionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.boundary_grid < 8 || self.radial_grid < 8 {
            return Err(Error::InvalidParameter("grids need at least 8 points"));
        }
        if !(self.margin > 0.0) {
            return Err(Error::InvalidParameter("margin must be positive"));
        }
        Ok(())
    }

    fn band(&self) -> f64 {
        10.0 * self.margin
    }

    fn verdict(&self, margin: f64) -> Verdict {
        if margin > self.band() {
            Verdict::Holds
        } else if margin < -self.band() {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    /// Conjunction: any failure fails, otherwise any doubt is inconclusive.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fails, _) | (_, Fails) => Fails,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Holds,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionKind {
    Univalent,
    Starlike,
    QuasiconvexB,
}

impl CriterionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CriterionKind::Univalent => "univalent",
            CriterionKind::Starlike => "starlike",
            CriterionKind::QuasiconvexB => "quasiconvex_b",
        }
    }
}

/// Worst sample. `point` is `[z]` for one-variable tests and the point of
/// `C^n` otherwise; `sample` indexes the direction (zero for 1-D tests).
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub sample: usize,
    pub point: Vec<C64>,
    pub value: f64,
}

/// Extra data of a univalence test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnivalenceDetail {
    /// `min |root| - r` over critical points and poles; `+inf` if none.
    pub root_gap: f64,
    /// Smallest distance between non-adjacent edges of the boundary polygon.
    pub boundary_clearance: f64,
    pub winding_ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub witness: Witness,
    pub margin_observed: f64,
    pub univalence: Option<UnivalenceDetail>,
}

impl CriterionReport {
    fn new(cfg: &CriterionConfig, margin: f64, witness: Witness) -> Self {
        Self {
            verdict: cfg.verdict(margin),
            witness,
            margin_observed: margin,
            univalence: None,
        }
    }

    fn failing(witness: Witness) -> Self {
        Self {
            verdict: Verdict::Fails,
            witness,
            margin_observed: f64::NEG_INFINITY,
            univalence: None,
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfBall { r })
    }
}

/// Checks `f(0) = 0` and `f'(0) != 0`, returning `f'(0)`.
fn check_slice(f: &Rational) -> Result<C64> {
    let [f0, df0, _] = f.eval_derivs(ZERO);
    if f0.norm() > 1e-14 {
        return Err(Error::InvalidParameter(
            "slice function must vanish at the origin",
        ));
    }
    if df0.norm() <= 1e-14 {
        return Err(Error::LocalDegeneracy { point: vec![ZERO] });
    }
    Ok(df0)
}

/// First root with `|root| <= r`, if any.
fn root_in_disc(roots: &[C64], r: f64) -> Option<C64> {
    roots
        .iter()
        .copied()
        .filter(|z| z.norm() <= r)
        .min_by(|a, b| a.norm().total_cmp(&b.norm()))
}

fn circle_point(r: f64, theta: f64) -> C64 {
    C64::from_polar(r, theta)
}

/// Minimum of `g` over `theta in [0, 2 pi)`: grid scan followed by
/// golden-section refinement around the lowest few local minima.
pub(crate) fn boundary_min(g: &dyn Fn(f64) -> f64, grid: usize) -> (f64, f64) {
    let h = 2.0 * PI / grid as f64;
    let values: Vec<f64> = (0..grid).map(|k| g(k as f64 * h)).collect();
    let mut minima: Vec<usize> = (0..grid)
        .filter(|&k| {
            let prev = values[(k + grid - 1) % grid];
            let next = values[(k + 1) % grid];
            values[k] <= prev && values[k] <= next
        })
        .collect();
    minima.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut best = (0.0, f64::INFINITY);
    for (k, &v) in values.iter().enumerate() {
        if v < best.1 {
            best = (k as f64 * h, v);
        }
    }
    for &k in minima.iter().take(4) {
        let (t, v) = golden_min(g, (k as f64 - 1.0) * h, (k as f64 + 1.0) * h);
        if v < best.1 {
            best = (t - 2.0 * PI * libm::floor(t / (2.0 * PI)), v);
        }
    }
    best
}

fn golden_min(g: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    for _ in 0..60 {
        if gc < gd {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    if gc < gd {
        (c, gc)
    } else {
        (d, gd)
    }
}

/// `f(z)/z` as a rational function (drops the factor `z` of the numerator).
fn divide_by_z(f: &Rational) -> Rational {
    let coeffs = f.num().coeffs();
    let num = Polynomial::new(coeffs.get(1..).unwrap_or(&[]).to_vec());
    Rational::new(num, f.den().clone()).expect("denominator is nonzero")
}

/// Heuristic univalence of `f` on `|z| < r`: no critical points or poles in
/// the closed disc, a simple boundary polygon and winding number one about
/// interior image points.
pub fn univalent_disc(f: &Rational, r: f64, cfg: &CriterionConfig) -> Result<CriterionReport> {
    check_radius(r)?;
    cfg.validate()?;
    check_slice(f)?;
    let mut roots = f.derivative_numerator().roots();
    roots.extend(f.poles());
    let nearest = roots
        .iter()
        .copied()
        .min_by(|a, b| a.norm().total_cmp(&b.norm()));
    let root_gap = nearest.map_or(f64::INFINITY, |z| z.norm() - r);
    let root_witness = Witness {
        sample: 0,
        point: vec![nearest.unwrap_or(C64::new(r, 0.0))],
        value: root_gap,
    };
    if root_gap < -cfg.band() {
        let mut report = CriterionReport::new(cfg, root_gap, root_witness);
        report.univalence = Some(UnivalenceDetail {
            root_gap,
            boundary_clearance: f64::NAN,
            winding_ok: false,
        });
        return Ok(report);
    }

    let grid = cfg.boundary_grid;
    let h = 2.0 * PI / grid as f64;
    let curve: Vec<C64> = (0..grid)
        .map(|k| f.eval(circle_point(r, k as f64 * h)))
        .collect();
    let (clearance, crossing) = polygon_clearance(&curve);
    let mut winding_ok = true;
    let mut winding_witness = None;
    'outer: for &frac in &[0.25, 0.5, 0.75] {
        for j in 0..8 {
            let z = circle_point(frac * r, (j as f64 + 0.5) * PI / 4.0);
            let w = f.eval(z);
            if winding_number(&curve, w) != 1 {
                winding_ok = false;
                winding_witness = Some(z);
                break 'outer;
            }
        }
    }
    let detail = UnivalenceDetail {
        root_gap,
        boundary_clearance: clearance,
        winding_ok,
    };
    let mut report = if let Some((i, _)) = crossing {
        let z = circle_point(r, i as f64 * h);
        CriterionReport::failing(Witness {
            sample: 0,
            point: vec![z],
            value: 0.0,
        })
    } else if let Some(z) = winding_witness {
        CriterionReport::failing(Witness {
            sample: 0,
            point: vec![z],
            value: f64::NEG_INFINITY,
        })
    } else if clearance <= cfg.band() {
        let mut rep = CriterionReport::new(cfg, root_gap, root_witness);
        rep.verdict = Verdict::Inconclusive;
        rep
    } else {
        CriterionReport::new(cfg, root_gap, root_witness)
    };
    report.univalence = Some(detail);
    Ok(report)
}

/// Smallest distance between non-adjacent edges of a closed polygon, and the
/// first pair of properly crossing edges if there is one. Edges are grouped
/// in chunks whose bounding boxes prune pairs that cannot beat the running
/// minimum.
fn polygon_clearance(pts: &[C64]) -> (f64, Option<(usize, usize)>) {
    let n = pts.len();
    let edge = |i: usize| (pts[i], pts[(i + 1) % n]);
    const CHUNK: usize = 16;
    let chunks: Vec<(usize, usize, [f64; 4])> = (0..n)
        .step_by(CHUNK)
        .map(|start| {
            let end = (start + CHUNK).min(n);
            let mut bb = [
                f64::INFINITY,
                f64::INFINITY,
                f64::NEG_INFINITY,
                f64::NEG_INFINITY,
            ];
            for i in start..end {
                let (a, b) = edge(i);
                for p in [a, b] {
                    bb[0] = bb[0].min(p.re);
                    bb[1] = bb[1].min(p.im);
                    bb[2] = bb[2].max(p.re);
                    bb[3] = bb[3].max(p.im);
                }
            }
            (start, end, bb)
        })
        .collect();
    let mut best = f64::INFINITY;
    let mut crossing = None;
    for (ca, &(sa, ea, ba)) in chunks.iter().enumerate() {
        for &(sb, eb, bb) in &chunks[ca..] {
            let dx = (bb[0] - ba[2]).max(ba[0] - bb[2]).max(0.0);
            let dy = (bb[1] - ba[3]).max(ba[1] - bb[3]).max(0.0);
            if libm::hypot(dx, dy) >= best {
                continue;
            }
            for i in sa..ea {
                for j in sb.max(i + 1)..eb {
                    let gap = (j - i).min(n - (j - i));
                    if gap < 2 {
                        continue;
                    }
                    let (p, q) = edge(i);
                    let (s, t) = edge(j);
                    if crossing.is_none() && segments_cross(p, q, s, t) {
                        crossing = Some((i, j));
                        best = 0.0;
                    }
                    let d = segment_distance(p, q, s, t);
                    if d < best {
                        best = d;
                    }
                }
            }
        }
    }
    (best, crossing)
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segments_cross(p: C64, q: C64, s: C64, t: C64) -> bool {
    let d1 = cross(q - p, s - p);
    let d2 = cross(q - p, t - p);
    let d3 = cross(t - s, p - s);
    let d4 = cross(t - s, q - s);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn point_segment_distance(x: C64, a: C64, b: C64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (x - a).norm();
    }
    let t = ((x - a).re * ab.re + (x - a).im * ab.im) / len2;
    (x - (a + ab * t.clamp(0.0, 1.0))).norm()
}

fn segment_distance(p: C64, q: C64, s: C64, t: C64) -> f64 {
    if segments_cross(p, q, s, t) {
        return 0.0;
    }
    point_segment_distance(p, s, t)
        .min(point_segment_distance(q, s, t))
        .min(point_segment_distance(s, p, q))
        .min(point_segment_distance(t, p, q))
}

fn winding_number(curve: &[C64], w: C64) -> i64 {
    let n = curve.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = curve[i] - w;
        let b = curve[(i + 1) % n] - w;
        total += (b / a).arg();
    }
    libm::round(total / (2.0 * PI)) as i64
}

/// Starlikeness of `f` on `|z| < r`: `min Re(z f'/f)` and `min Re(f/(z f'))`
/// over the circle `|z| = r`, the smaller one being the margin. Zeros of
/// `f/z` or `f'` and poles in the closed disc make the test fail outright.
pub fn starlike_disc(f: &Rational, r: f64, cfg: &CriterionConfig) -> Result<CriterionReport> {
    check_radius(r)?;
    cfg.validate()?;
    check_slice(f)?;
    let mut roots = divide_by_z(f).num().roots();
    roots.extend(f.derivative_numerator().roots());
    roots.extend(f.poles());
    if let Some(z) = root_in_disc(&roots, r) {
        return Ok(CriterionReport::failing(Witness {
            sample: 0,
            point: vec![z],
            value: f64::NEG_INFINITY,
        }));
    }
    let g = |theta: f64| {
        let z = circle_point(r, theta);
        let [v, dv, _] = f.eval_derivs(z);
        let w = z * dv / v;
        w.re.min((ONE / w).re)
    };
    let (theta, m) = boundary_min(&g, cfg.boundary_grid);
    Ok(CriterionReport::new(
        cfg,
        m,
        Witness {
            sample: 0,
            point: vec![circle_point(r, theta)],
            value: m,
        },
    ))
}

/// Convexity of `f` on `|z| < r`: `min Re(1 + z f''/f')` over `|z| = r`.
/// Zeros of `f'` and poles in the closed disc make the test fail outright.
pub fn convex_disc(f: &Rational, r: f64, cfg: &CriterionConfig) -> Result<CriterionReport> {
    check_radius(r)?;
    cfg.validate()?;
    check_slice(f)?;
    let mut roots = f.derivative_numerator().roots();
    roots.extend(f.poles());
    if let Some(z) = root_in_disc(&roots, r) {
        return Ok(CriterionReport::failing(Witness {
            sample: 0,
            point: vec![z],
            value: f64::NEG_INFINITY,
        }));
    }
    let g = |theta: f64| {
        let z = circle_point(r, theta);
        let [_, dv, ddv] = f.eval_derivs(z);
        (ONE + z * ddv / dv).re
    };
    let (theta, m) = boundary_min(&g, cfg.boundary_grid);
    Ok(CriterionReport::new(
        cfg,
        m,
        Witness {
            sample: 0,
            point: vec![circle_point(r, theta)],
            value: m,
        },
    ))
}

/// The one-variable test matching `kind` (convexity for `QuasiconvexB`).
pub fn slice_criterion(
    f: &Rational,
    r: f64,
    kind: CriterionKind,
    cfg: &CriterionConfig,
) -> Result<CriterionReport> {
    match kind {
        CriterionKind::Univalent => univalent_disc(f, r, cfg),
        CriterionKind::Starlike => starlike_disc(f, r, cfg),
        CriterionKind::QuasiconvexB => convex_disc(f, r, cfg),
    }
}

/// Conjunction of the slice tests over the sampled unit directions; the
/// report carries the worst slice.
pub fn ball_criterion(
    map: &RadialMap,
    r: f64,
    kind: CriterionKind,
    samples: &[Vector],
    cfg: &CriterionConfig,
) -> Result<CriterionReport> {
    check_radius(r)?;
    if samples.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one sample direction is needed",
        ));
    }
    if kind == CriterionKind::QuasiconvexB {
        map.require_normalized()?;
    }
    let mut verdict = Verdict::Holds;
    let mut worst: Option<CriterionReport> = None;
    for (i, u) in samples.iter().enumerate() {
        let slice = map.slice(u)?;
        let mut rep = slice_criterion(&slice, r, kind, cfg)?;
        verdict = verdict.and(rep.verdict);
        let z = rep.witness.point[0];
        rep.witness.sample = i;
        rep.witness.point = u.scale(z).into_entries();
        let replace = match &worst {
            None => true,
            Some(w) => rep.margin_observed < w.margin_observed,
        };
        if replace {
            worst = Some(rep);
        }
    }
    let mut report = worst.expect("samples are non-empty");
    report.verdict = verdict;
    Ok(report)
}

/// Quasi-convexity of type B for `map` and starlikeness of `DF(x)x` at the
/// same radius, in that order.
pub fn alexander_check(
    map: &RadialMap,
    r: f64,
    samples: &[Vector],
    cfg: &CriterionConfig,
) -> Result<(CriterionReport, CriterionReport)> {
    map.require_normalized()?;
    let convex = ball_criterion(map, r, CriterionKind::QuasiconvexB, samples, cfg)?;
    let starlike = ball_criterion(
        &map.alexander_transform(),
        r,
        CriterionKind::Starlike,
        samples,
        cfg,
    )?;
    Ok((convex, starlike))
}

/// Number of worst points polished by local search in
/// [`starlike_ball_general`].
const GENERAL_REFINE: usize = 8;

/// Iteration cap for one compass search.
const COMPASS_BUDGET: usize = 150;

/// Direct starlikeness test `Re <[DG(x)]^{-1} G(x), x/||x||> > 0` for a
/// polynomial map on the Euclidean ball, scanned over `rho u` for the given
/// unit directions `u` and `cfg.radial_grid` radii in `(0, r)`, with the worst
/// points polished by a compass search.
///
/// The margin is the scale-free ratio `Re <[DG(x)]^{-1} G(x), x> / ||x||^2`,
/// which has the same sign and tends to one at the origin for normalized
/// maps instead of to zero.
pub fn starlike_ball_general(
    map: &PolyMap,
    model: &NormModel,
    r: f64,
    directions: &[Vector],
    cfg: &CriterionConfig,
) -> Result<CriterionReport> {
    if !model.is_hilbert() {
        return Err(Error::UnsupportedModel(
            "the general starlikeness test needs p = 2",
        ));
    }
    model.check_dim(map.dim())?;
    check_radius_closed(r)?;
    cfg.validate()?;
    if directions.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one sample direction is needed",
        ));
    }
    let rmax = r * (1.0 - 1e-6);
    let nr = cfg.radial_grid;
    let mut radii: Vec<f64> = (1..nr).map(|k| r * k as f64 / nr as f64).collect();
    radii.push(rmax);

    let mut scored: Vec<(f64, usize, Vector)> = Vec::with_capacity(directions.len() * radii.len());
    for (i, u) in directions.iter().enumerate() {
        model.check_dim(u.dim())?;
        let un = lp_norm(u.entries(), 2.0);
        for &rho in &radii {
            let x = u.scale_real(rho / un);
            scored.push((general_value(map, &x)?, i, x));
        }
    }
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = scored[0].clone();
    let n = model.n();
    for (v, i, x) in scored.into_iter().take(GENERAL_REFINE) {
        let (v, x) = compass_search(map, x, v, rmax, r / nr as f64, n)?;
        if v < best.0 {
            best = (v, i, x);
        }
    }
    let (m, sample, x) = best;
    Ok(CriterionReport::new(
        cfg,
        m,
        Witness {
            sample,
            point: x.into_entries(),
            value: m,
        },
    ))
}

fn check_radius_closed(r: f64) -> Result<()> {
    if r > 0.0 && r <= 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfBall { r })
    }
}

fn general_value(map: &PolyMap, x: &Vector) -> Result<f64> {
    let norm2 = lp_norm(x.entries(), 2.0).powi(2);
    let w = map
        .inverse_transfer(x)
        .ok_or_else(|| Error::LocalDegeneracy {
            point: x.entries().to_vec(),
        })?;
    let inner: C64 = w
        .entries()
        .iter()
        .zip(x.entries())
        .map(|(a, b)| a * b.conj())
        .sum();
    Ok(inner.re / norm2)
}

fn compass_search(
    map: &PolyMap,
    mut x: Vector,
    mut value: f64,
    rmax: f64,
    step: f64,
    n: usize,
) -> Result<(f64, Vector)> {
    let mut h = step;
    let floor = step * 1e-6;
    let units = [ONE, C64::new(0.0, 1.0), -ONE, C64::new(0.0, -1.0)];
    // Successful steps grow again; without that the search crawls along the
    // boundary sphere at the current resolution.
    let mut budget = COMPASS_BUDGET;
    while h > floor && budget > 0 {
        budget -= 1;
        let mut improved = false;
        for j in 0..n {
            for &d in &units {
                let mut e = x.clone().into_entries();
                e[j] += d * h;
                let norm = lp_norm(&e, 2.0);
                if norm == 0.0 {
                    continue;
                }
                let y = if norm > rmax {
                    Vector::new(e).scale_real(rmax / norm)
                } else {
                    Vector::new(e)
                };
                let v = general_value(map, &y)?;
                if v < value {
                    value = v;
                    x = y;
                    improved = true;
                }
            }
        }
        h = if improved {
            (2.0 * h).min(step)
        } else {
            0.5 * h
        };
    }
    Ok((value, x))
}
