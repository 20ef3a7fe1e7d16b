//! Fixtures shared by the integration suites.
#![allow(dead_code)]

use std::sync::OnceLock;

use radial_core::criteria::{ball_criterion, CriterionConfig, CriterionKind, Verdict};
use radial_core::norm::sphere_sample;
use radial_core::radial::profile_map;
use radial_core::{c64, NormModel, Polynomial, RadialMap, Vector, C64};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

pub const SEED: u64 = 0x5eed_2024;
pub const SAMPLES: usize = 64;
pub const DEGREE: usize = 32;

/// `p = 2`, `n = 3`.
pub fn model() -> NormModel {
    NormModel::hilbert(3).unwrap()
}

pub fn e1() -> Vector {
    Vector::basis(3, 0)
}

pub fn samples(model: &NormModel) -> Vec<Vector> {
    sphere_sample(model, SAMPLES, SEED)
}

/// One member of the stress family: `phi(t) = 1 + sum_{k=1}^d a_k t^k`
/// composed with `l_v`.
#[derive(Debug, Clone)]
pub struct StressMap {
    pub v: Vector,
    pub phi: Polynomial,
    pub map: RadialMap,
}

/// Random polynomial profiles of degree at most 8 scaled so that
/// `sum (k+1)|a_k|` lies in `[0.3, 1.0]`. The slice `z phi(z)` then has
/// `|f' - 1| < 1` on the disc, so every member is univalent on the ball.
pub fn stress_candidates(model: &NormModel, count: usize, seed: u64) -> Vec<StressMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degree = Uniform::new_inclusive(1usize, 8).unwrap();
    let budget = Uniform::new_inclusive(0.3, 1.0).unwrap();
    let dirs = sphere_sample(model, model.n() + count, seed ^ 0xd1);
    (0..count)
        .map(|i| {
            let d = degree.sample(&mut rng);
            let mut a: Vec<C64> = (0..d)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(&mut rng);
                    let im: f64 = StandardNormal.sample(&mut rng);
                    c64(re, im)
                })
                .collect();
            let weight: f64 = a
                .iter()
                .enumerate()
                .map(|(k, z)| (k + 2) as f64 * z.norm())
                .sum();
            let s = budget.sample(&mut rng) / weight;
            for z in &mut a {
                *z *= s;
            }
            let mut coeffs = vec![c64(1.0, 0.0)];
            coeffs.extend(a);
            let phi = Polynomial::new(coeffs);
            let v = dirs[model.n() + i].clone();
            let map = profile_map(model, &v, phi.clone()).unwrap();
            StressMap { v, phi, map }
        })
        .collect()
}

/// The first `count` candidates whose ball univalence holds at `r = 0.95`.
pub fn stress_family(model: &NormModel, samples: &[Vector], count: usize) -> Vec<StressMap> {
    let cfg = CriterionConfig::default();
    let mut out = Vec::with_capacity(count);
    let mut batch = 0;
    while out.len() < count {
        for m in stress_candidates(model, count, SEED + batch) {
            let rep =
                ball_criterion(&m.map, 0.95, CriterionKind::Univalent, samples, &cfg).unwrap();
            if rep.verdict == Verdict::Holds && out.len() < count {
                out.push(m);
            }
        }
        batch += 1;
        assert!(batch < 10, "univalence gate rejects nearly every candidate");
    }
    out
}

/// The 50-map family over [`model`] and [`samples`], built once per process.
pub fn shared_family() -> &'static [StressMap] {
    static FAMILY: OnceLock<Vec<StressMap>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let m = model();
        stress_family(&m, &samples(&m), 50)
    })
}

/// `sup (1-|z|^2)|h'(z)|` over a dense polar grid of the closed unit disc.
pub fn dense_bloch_scan(h_prime: &Polynomial, radial: usize, angular: usize) -> f64 {
    let mut best: f64 = 0.0;
    for a in 0..=radial {
        let rho = a as f64 / radial as f64;
        for k in 0..angular {
            let z = C64::from_polar(rho, 2.0 * std::f64::consts::PI * k as f64 / angular as f64);
            best = best.max((1.0 - rho * rho) * h_prime.eval(z).norm());
        }
    }
    best
}

/// Profile `phi` of a degree-8 slice `h(z) = z + t sum_{k=3}^8 a_k z^k`
/// whose Bloch seminorm is one, attained at the origin.
///
/// The admissible `t` form an interval around zero (each constraint
/// `(1-|z|^2)|h_t'(z)| <= 1` is convex in `t`), so its endpoint is found by
/// bisection against the dense scan and the profile is taken at 95% of it.
pub fn bloch_profile() -> Polynomial {
    let a: Vec<C64> = (3..=8)
        .map(|k| C64::from_polar(1.0 / k as f64, k as f64))
        .collect();
    let h_prime = |t: f64| {
        let mut c = vec![c64(1.0, 0.0), c64(0.0, 0.0)];
        c.extend(a.iter().enumerate().map(|(i, &ak)| ak * t * (i + 3) as f64));
        Polynomial::new(c)
    };
    let (mut lo, mut hi) = (0.0, 4.0);
    assert!(dense_bloch_scan(&h_prime(hi), 200, 360) > 1.0 + 1e-12);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if dense_bloch_scan(&h_prime(mid), 200, 360) <= 1.0 + 1e-12 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.95 * lo;
    let mut c = vec![c64(1.0, 0.0), c64(0.0, 0.0)];
    c.extend(a.iter().map(|&ak| ak * t));
    Polynomial::new(c)
}

/// `z phi(z)` differentiated.
pub fn slice_derivative(phi: &Polynomial) -> Polynomial {
    phi.shift_up(1).derivative()
}
