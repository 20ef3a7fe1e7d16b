//! Bohr-Rogosinski radii of subordination families and the corresponding
//! inequality check.
//!
//! With `B(r) = r^N [N(1-r) + r]` and `S(r) = (1 - r^m)/(1 - r)` the radius
//! `r_{m,N}` is the unique root in `(0, 1)` of
//!
//! ```text
//! general:  4 r^m - (1 - r^m)^2 + 4 B S^2 = 0
//! fixed V:  4 r - (1 - r)^2 + 4 B = 0          (V the identity, m = 1)
//! limit:    4 B / (1 - r)^2 - 1 = 0            (m -> infinity)
//! ```

// Redundant whenever std is linked into the build, which brings the inherent
// float methods into scope.
#[allow(unused_imports)]
use num_traits::Float;

use crate::bounds::{BoundReport, Sense};
use crate::criteria::Witness;
use crate::norm::Vector;
use crate::radial::{RadialMap, SchwarzPower};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchwarzOrder {
    Finite(u32),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusVariant {
    General,
    FixedV,
    Limit,
}

impl RadiusVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            RadiusVariant::General => "general",
            RadiusVariant::FixedV => "fixed_v",
            RadiusVariant::Limit => "limit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadiusQuery {
    pub m: SchwarzOrder,
    pub n: u32,
    pub variant: RadiusVariant,
}

impl RadiusQuery {
    pub fn general(m: u32, n: u32) -> Result<Self> {
        Self {
            m: SchwarzOrder::Finite(m),
            n,
            variant: RadiusVariant::General,
        }
        .validated()
    }

    pub fn fixed_v(n: u32) -> Result<Self> {
        Self {
            m: SchwarzOrder::Finite(1),
            n,
            variant: RadiusVariant::FixedV,
        }
        .validated()
    }

    pub fn limit(n: u32) -> Result<Self> {
        Self {
            m: SchwarzOrder::Infinite,
            n,
            variant: RadiusVariant::Limit,
        }
        .validated()
    }

    /// General needs a finite `m >= 1`, fixed V needs `m = 1`, the limit
    /// needs `m = inf`; `N >= 1` throughout.
    pub fn validated(self) -> Result<Self> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("N must be at least 1"));
        }
        match (self.variant, self.m) {
            (RadiusVariant::General, SchwarzOrder::Finite(m)) if m >= 1 => Ok(self),
            (RadiusVariant::FixedV, SchwarzOrder::Finite(1)) => Ok(self),
            (RadiusVariant::Limit, SchwarzOrder::Infinite) => Ok(self),
            _ => Err(Error::InvalidParameter(
                "inconsistent radius variant and Schwarz order",
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub r: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Value and derivative of the equation for the query at `r`.
fn equation(r: f64, q: &RadiusQuery) -> (f64, f64) {
    let n = q.n as i32;
    let nf = n as f64;
    // B = N r^N - (N-1) r^(N+1)
    let b = nf * r.powi(n) - (nf - 1.0) * r.powi(n + 1);
    let db = nf * nf * r.powi(n - 1) - (nf - 1.0) * (nf + 1.0) * r.powi(n);
    match (q.variant, q.m) {
        (RadiusVariant::Limit, _) | (_, SchwarzOrder::Infinite) => {
            let d = 1.0 - r;
            (
                4.0 * b / (d * d) - 1.0,
                4.0 * db / (d * d) + 8.0 * b / (d * d * d),
            )
        }
        (RadiusVariant::FixedV, _) => (
            4.0 * r - (1.0 - r).powi(2) + 4.0 * b,
            4.0 + 2.0 * (1.0 - r) + 4.0 * db,
        ),
        (RadiusVariant::General, SchwarzOrder::Finite(m)) => {
            let m = m as i32;
            let rm = r.powi(m);
            let drm = m as f64 * r.powi(m - 1);
            // S = sum_{k<m} r^k, polynomial so that r -> 1 stays finite.
            let (mut s, mut ds, mut pk) = (0.0, 0.0, 1.0);
            for k in 0..m {
                s += pk;
                if k + 1 < m {
                    ds += (k + 1) as f64 * pk;
                }
                pk *= r;
            }
            let value = 4.0 * rm - (1.0 - rm).powi(2) + 4.0 * b * s * s;
            let deriv = 4.0 * drm + 2.0 * (1.0 - rm) * drm + 4.0 * (db * s * s + 2.0 * b * s * ds);
            (value, deriv)
        }
    }
}

/// Left-hand side of the radius equation; negative near `0`, positive near `1`.
pub fn radius_equation(r: f64, q: &RadiusQuery) -> Result<f64> {
    q.validated()?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfBall { r });
    }
    Ok(equation(r, q).0)
}

const LO: f64 = 1e-9;
const HI: f64 = 1.0 - 1e-9;
const SIGN_GRID: usize = 1000;

/// Sign changes of the equation on a uniform grid over `[1e-9, 1 - 1e-9]`.
pub fn sign_changes(q: &RadiusQuery) -> usize {
    let mut count = 0;
    let mut prev = equation(LO, q).0;
    for k in 1..=SIGN_GRID {
        let r = LO + (HI - LO) * k as f64 / SIGN_GRID as f64;
        let v = equation(r, q).0;
        if (prev < 0.0) != (v < 0.0) {
            count += 1;
        }
        prev = v;
    }
    count
}

/// Bisection on `[1e-9, 1 - 1e-9]` down to a residual of `1e-12` (or
/// exhaustion of the bracket) followed by three safeguarded Newton steps.
/// The bracket is first checked to contain exactly one sign change.
pub fn solve_radius(q: &RadiusQuery) -> Result<RadiusResult> {
    q.validated()?;
    let changes = sign_changes(q);
    if changes != 1 {
        return Err(Error::NonUniqueRoot {
            sign_changes: changes,
        });
    }
    let (mut lo, mut hi) = (LO, HI);
    let mut iterations = 0;
    let mut r = 0.5 * (lo + hi);
    let mut value = equation(r, q).0;
    while iterations < 200 {
        iterations += 1;
        r = 0.5 * (lo + hi);
        value = equation(r, q).0;
        if value.abs() <= 1e-12 && hi - lo <= 1e-10 {
            break;
        }
        if value < 0.0 {
            lo = r;
        } else {
            hi = r;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    for _ in 0..3 {
        let (v, d) = equation(r, q);
        if d == 0.0 || v == 0.0 {
            break;
        }
        let candidate = r - v / d;
        if !(candidate > lo && candidate < hi) {
            break;
        }
        let w = equation(candidate, q).0;
        if w.abs() >= v.abs() {
            break;
        }
        iterations += 1;
        r = candidate;
        value = w;
    }
    Ok(RadiusResult {
        r,
        residual: value,
        iterations,
    })
}

/// `sum_{s >= start} s r^s = r^start (start (1 - r) + r) / (1 - r)^2`.
pub fn weighted_geometric_tail(r: f64, start: usize) -> f64 {
    let k = start as f64;
    r.powi(start as i32) * (k * (1.0 - r) + r) / (1.0 - r).powi(2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailSum {
    /// `sum_{s=N}^{cap} ||P_s(x)||`, computed from the expansion.
    pub partial: f64,
    /// Certified bound on the rest, `coefficient_bound * sum_{s>cap} s r^s`.
    pub remainder: f64,
}

impl TailSum {
    pub fn total(&self) -> f64 {
        self.partial + self.remainder
    }
}

/// `sum_{s >= N} ||P_s(x)||` with `P_s(x) = Q_{s-1}(x) x`, summed exactly up
/// to `s_cap` and bounded beyond it by `||P_s(x)|| <= s coefficient_bound
/// r^s`, which holds when the map is subordinate to a biholomorphic one with
/// `||DF(0)|| = coefficient_bound`.
pub fn bohr_tail_sum(
    map: &RadialMap,
    x: &Vector,
    n: usize,
    s_cap: usize,
    coefficient_bound: f64,
) -> Result<TailSum> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1"));
    }
    let r = map.model().norm(x)?;
    if !(r < 1.0) {
        return Err(Error::OutOfBall { r });
    }
    let mut partial = 0.0;
    if n <= s_cap {
        let q = map.homogeneous_values(x, s_cap - 1)?;
        partial = q[n - 1..].iter().map(|c| c.norm() * r).sum();
    }
    let start = n.max(s_cap + 1);
    let remainder = coefficient_bound * weighted_geometric_tail(r, start);
    Ok(TailSum { partial, remainder })
}

/// Default truncation for [`bohr_tail_sum`].
pub const DEFAULT_S_CAP: usize = 200;

/// `||F(V(x))|| + sum_{s >= N} ||P_s(x)||` with `V(x) = l(x)^(m-1) x` built
/// from the profile functional of `map`.
pub fn rogosinski_lhs(
    map: &RadialMap,
    m: usize,
    n: usize,
    x: &Vector,
    s_cap: usize,
) -> Result<f64> {
    let l = map.functional().ok_or(Error::UnsupportedModel(
        "the Rogosinski check needs a profile map",
    ))?;
    let v = SchwarzPower::from_functional(l.clone(), m)?;
    let fv = map.eval(&v.apply(x))?;
    let head = map.model().norm(&fv)?;
    let tail = bohr_tail_sum(map, x, n, s_cap, map.f0().norm())?;
    Ok(head + tail.total())
}

/// Largest left-hand side over `x = r u` against `||F(0)|| + |f(0)|/4`.
///
/// Radial maps have `F(0) = 0`, and `|f(0)|/4 = ||DF(0)||/4` is the covering
/// lower bound for `dist(F(0), boundary of F(B))`; it is exact for the Koebe
/// map, where it equals `1/4`.
pub fn rogosinski_check(
    map: &RadialMap,
    m: usize,
    n: usize,
    r: f64,
    samples: &[Vector],
    s_cap: usize,
    tol: f64,
) -> Result<BoundReport> {
    map.require_normalized()?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfBall { r });
    }
    let mut best: Option<(f64, usize)> = None;
    for (i, u) in samples.iter().enumerate() {
        crate::radial::check_unit(map.model(), u)?;
        let lhs = rogosinski_lhs(map, m, n, &u.scale_real(r), s_cap)?;
        if best.map_or(true, |(b, _)| lhs > b) {
            best = Some((lhs, i));
        }
    }
    let (lhs, i) = best.ok_or(Error::InvalidParameter(
        "at least one sample direction is needed",
    ))?;
    let rhs = map.f0().norm() / 4.0;
    Ok(BoundReport::new(
        "rogosinski",
        Some(r),
        Sense::Upper,
        lhs,
        rhs,
        tol,
        Witness {
            sample: i,
            point: samples[i].scale_real(r).into_entries(),
            value: lhs,
        },
    ))
}
