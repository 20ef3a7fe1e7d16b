//! Sharp inequalities: Koebe attains them, the univalent stress family
//! respects them.

mod common;

use common::{e1, model, samples, shared_family};
use radial_core::bounds::{
    bloch_seminorm, check_bieberbach, check_bonk, check_distortion_hilbert, check_distortion_ray,
    check_growth, covering_margin, fekete_szego, hilbert_operator_norm, label, BlochGrid,
};
use radial_core::norm::sphere_sample;
use radial_core::radial::{koebe_map, profile_map};
use radial_core::{Error, NormModel, Polynomial, RadialMap, Sense, Vector, C64};

fn with_extremal(samples: &[Vector], v: &Vector) -> Vec<Vector> {
    let mut out = samples.to_vec();
    out.push(v.clone());
    out
}

#[test]
fn stress_family_respects_bounds() {
    let m = model();
    let s = samples(&m);
    let radii = [0.3, 0.7, 0.95];
    for (i, g) in shared_family().iter().enumerate() {
        let pts = with_extremal(&s, &g.v);
        let mut reports = check_bieberbach(&g.map, &g.map, 8, &pts, 1e-8).unwrap();
        reports.extend(check_growth(&g.map, &pts, &radii, 360, 1e-8).unwrap());
        reports.extend(check_distortion_ray(&g.map, &pts, &radii, 360, 1e-8).unwrap());
        reports.extend(check_distortion_hilbert(&g.map, &pts[..16], &radii, 24, 1e-8).unwrap());
        for rep in reports {
            assert!(rep.passed(), "map {i}: {} slack {}", label(&rep), rep.slack);
        }
    }
}

#[test]
fn growth_holds_in_other_norms() {
    for p in [1.0, 4.0, f64::INFINITY] {
        let m = NormModel::new(p, 3).unwrap();
        let s = sphere_sample(&m, 32, 11);
        let k = koebe_map(&m, &Vector::basis(3, 0)).unwrap();
        for rep in check_growth(&k, &s, &[0.2, 0.6], 360, 1e-9).unwrap() {
            assert!(rep.passed() && rep.attained, "p = {p}: {}", label(&rep));
        }
    }
}

#[test]
fn koebe_attains_every_bound() {
    let m = model();
    let s = samples(&m);
    let k = koebe_map(&m, &e1()).unwrap();
    let radii = [0.1, 0.5, 0.9];
    let mut reports = check_bieberbach(&k, &k, 10, &s, 1e-9).unwrap();
    reports.extend(check_growth(&k, &s, &radii, 720, 1e-9).unwrap());
    reports.extend(check_distortion_ray(&k, &s, &radii, 720, 1e-9).unwrap());
    reports.push(fekete_szego(&k, &e1(), 0.0, 1e-9).unwrap());
    for rep in &reports {
        assert!(rep.attained, "{}: slack {}", label(rep), rep.slack);
    }
    // The exact norm only sees the grid, so pass x = r v explicitly.
    for r in radii {
        let rep = check_distortion_hilbert(&k, &[e1()], &[r], 1, 1e-9).unwrap();
        let upper = rep.iter().find(|b| b.sense == Sense::Upper).unwrap();
        assert!(upper.attained, "{}: slack {}", label(upper), upper.slack);
    }
    let cover = covering_margin(&k, 0.5, &s, 720, 1e-9).unwrap();
    assert!(cover.attained);
}

#[test]
fn operator_norm_dominates_radial_derivative() {
    let m = model();
    let s = samples(&m);
    let mut maps = vec![koebe_map(&m, &e1()).unwrap(), RadialMap::identity(&m)];
    maps.extend(shared_family().iter().take(10).map(|g| g.map.clone()));
    for f in &maps {
        for (i, u) in s.iter().enumerate() {
            let x = u.scale(C64::from_polar(0.05 + 0.9 * (i as f64 / 64.0), i as f64));
            let op = hilbert_operator_norm(f, &x).unwrap();
            let ray = m.norm(&f.df_action(&x, &x).unwrap()).unwrap() / m.norm(&x).unwrap();
            assert!(op >= ray * (1.0 - 1e-12), "{op} < {ray}");
        }
    }
}

#[test]
fn identity_seminorm_is_one_on_every_grid() {
    let m = model();
    let id = RadialMap::identity(&m);
    for (radial, angular) in [(1, 1), (4, 8), (24, 72), (60, 180)] {
        let grid = BlochGrid {
            radial,
            angular,
            cap: 1e6,
        };
        let est = bloch_seminorm(&id, &samples(&m)[..8], &grid).unwrap();
        assert!(
            (est.value - 1.0).abs() <= 1e-12,
            "{radial}x{angular}: {}",
            est.value
        );
    }
}

#[test]
fn unbounded_seminorm_is_flagged() {
    let m = model();
    let s = samples(&m);
    let k = koebe_map(&m, &e1()).unwrap();
    let est = bloch_seminorm(&k, &s[..4], &BlochGrid::default()).unwrap();
    assert!(est.exceeds_cap);
    assert!(matches!(
        check_bonk(&k, &s, 24, 72, &BlochGrid::default(), 0.0),
        Err(Error::NotInClass { .. })
    ));
}

#[test]
fn unsupported_and_invalid_inputs() {
    let m3 = NormModel::new(3.0, 3).unwrap();
    let k3 = koebe_map(&m3, &Vector::basis(3, 0)).unwrap();
    let s3 = sphere_sample(&m3, 4, 1);
    assert!(matches!(
        check_distortion_hilbert(&k3, &s3, &[0.5], 8, 0.0),
        Err(Error::UnsupportedModel(_))
    ));
    let m = model();
    let k = koebe_map(&m, &e1()).unwrap();
    assert!(check_growth(&k, &samples(&m), &[1.0], 8, 0.0).is_err());
    assert!(check_growth(&k, &[], &[0.5], 8, 0.0).is_err());
    let scaled = profile_map(&m, &e1(), Polynomial::from_real(&[2.0, 1.0])).unwrap();
    assert!(matches!(
        check_growth(&scaled, &samples(&m), &[0.5], 8, 0.0),
        Err(Error::NotNormalized { .. })
    ));
    assert!(fekete_szego(&k, &e1(), 1.0, 0.0).is_err());
}
