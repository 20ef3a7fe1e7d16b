use radial_core::bohr::{rogosinski_check, solve_radius, DEFAULT_S_CAP};
use radial_core::bounds::{
    bloch_schlicht_check, bloch_seminorm, check_bieberbach, check_bonk, check_distortion_hilbert,
    check_distortion_ray, check_growth, covering_margin, fekete_szego, BlochGrid,
};
use radial_core::criteria::{alexander_check, slice_criterion};
use radial_core::norm::sphere_sample;
use radial_core::radial::check_unit;
use radial_core::{
    BoundReport, CriterionConfig, CriterionKind, CriterionReport, NormModel, RadialMap,
    RadiusQuery, Result, SupportFunctional, Vector, Verdict, C64,
};

use crate::config::{RadiiArgs, RunConfig, SliceArgs, Suite, Variant, VerifyArgs};
use crate::mapspec::{load_map, parse_complex, serialize};
use crate::report::{Cell, Report, Status};

const GROWTH_RADII: [f64; 3] = [0.1, 0.5, 0.9];
const COVERING_RADIUS: f64 = 0.99;
const BONK_GRID: (usize, usize) = (24, 72);

pub fn radii(args: &RadiiArgs, cfg: &RunConfig) -> Report {
    let (n_lo, n_hi) = args.big_n;
    let ms: Vec<Option<u32>> = match args.variant {
        Variant::General => (args.m.0..=args.m.1).map(Some).collect(),
        Variant::FixedV => vec![Some(1)],
        Variant::Limit => vec![None],
    };
    let mut rows = Vec::new();
    let mut statuses = Vec::new();
    for &m in &ms {
        for n in n_lo..=n_hi {
            let query = match (args.variant, m) {
                (Variant::General, Some(m)) => RadiusQuery::general(m, n),
                (Variant::FixedV, _) => RadiusQuery::fixed_v(n),
                _ => RadiusQuery::limit(n),
            };
            let m_cell = m.map_or(Cell::from("inf"), |m| Cell::Int(m.into()));
            let variant = query.as_ref().map_or("invalid", |q| q.variant.as_str());
            let mut row = vec![Cell::from(variant), m_cell, Cell::Int(n.into())];
            let status = match query.and_then(|q| solve_radius(&q)) {
                Ok(res) => {
                    let ok = res.residual.abs() <= cfg.root_tol;
                    row.extend([
                        Cell::Float(res.r),
                        Cell::Float(res.residual),
                        Cell::Int(res.iterations as i64),
                    ]);
                    let status = if ok { Status::Pass } else { Status::Fail };
                    row.extend([Cell::from(status.as_str()), Cell::Empty]);
                    status
                }
                Err(e) => {
                    row.extend([
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::from("fail"),
                        Cell::from(e.to_string()),
                    ]);
                    Status::Fail
                }
            };
            rows.push(row);
            statuses.push(status);
        }
    }
    Report {
        command: "radii",
        columns: vec![
            "variant",
            "m",
            "N",
            "r",
            "residual",
            "iterations",
            "status",
            "note",
        ],
        rows,
        statuses: Some(statuses),
        map: None,
    }
}

/// A unit vector `v` with `l(v) = ||l||_*`, so that the profile variable
/// reaches its largest modulus on the sphere.
pub fn norming_point(l: &SupportFunctional, model: &NormModel) -> Option<Vector> {
    let w = l.coeffs();
    let mods: Vec<f64> = w.iter().map(|z| z.norm()).collect();
    let phase = |j: usize| {
        if mods[j] > 0.0 {
            w[j].conj() / mods[j]
        } else {
            C64::new(1.0, 0.0)
        }
    };
    let p = model.p();
    if mods.iter().all(|&m| m == 0.0) {
        return None;
    }
    let entries: Vec<C64> = if p == 1.0 {
        let j = (0..w.len()).fold(0, |b, j| if mods[j] > mods[b] { j } else { b });
        (0..w.len())
            .map(|k| if k == j { phase(j) } else { C64::new(0.0, 0.0) })
            .collect()
    } else if p.is_infinite() {
        (0..w.len()).map(phase).collect()
    } else {
        let q = model.dual_exponent();
        let dual = model.dual_norm(l);
        (0..w.len())
            .map(|j| phase(j) * (mods[j] / dual).powf(q - 1.0))
            .collect()
    };
    Some(Vector::new(entries))
}

/// Sampled directions, plus the norming point of a profile functional when
/// the sample does not already contain it.
pub fn directions(map: &RadialMap, cfg: &RunConfig) -> Vec<Vector> {
    let model = map.model();
    let mut out = sphere_sample(model, cfg.samples, cfg.seed);
    if let Some(v) = map.functional().and_then(|l| norming_point(l, model)) {
        let close = |u: &Vector| {
            u.entries()
                .iter()
                .zip(v.entries())
                .all(|(a, b)| (a - b).norm() < 1e-15)
        };
        if check_unit(model, &v).is_ok() && !out.iter().any(close) {
            out.push(v);
        }
    }
    out
}

fn criterion_config(cfg: &RunConfig) -> CriterionConfig {
    CriterionConfig {
        margin: cfg.margin,
        degree: cfg.degree,
        ..CriterionConfig::default()
    }
}

struct Collector {
    rows: Vec<Vec<Cell>>,
    statuses: Vec<Status>,
}

impl Collector {
    fn push(
        &mut self,
        suite: &str,
        check: &str,
        param: Option<f64>,
        fields: [Cell; 4],
        status: Status,
        note: String,
    ) {
        let mut row = vec![Cell::from(suite), Cell::from(check), Cell::opt(param)];
        row.extend(fields);
        row.extend([Cell::from(status.as_str()), Cell::from(note)]);
        self.rows.push(row);
        self.statuses.push(status);
    }

    fn bound(&mut self, suite: &str, r: &BoundReport) {
        let status = if r.passed() {
            Status::Pass
        } else {
            Status::Fail
        };
        let fields = [
            Cell::Float(r.observed),
            Cell::Float(r.bound),
            Cell::Float(r.slack),
            Cell::Bool(r.attained),
        ];
        self.push(suite, &r.name, r.param, fields, status, String::new());
    }

    /// Failed preconditions (unnormalized map, wrong model, ...) are
    /// recorded as skipped, not failed.
    fn bounds(&mut self, suite: &str, check: &str, res: Result<Vec<BoundReport>>) {
        match res {
            Ok(reps) => reps.iter().for_each(|r| self.bound(suite, r)),
            Err(e) => self.skip(suite, check, None, e.to_string()),
        }
    }

    fn skip(&mut self, suite: &str, check: &str, param: Option<f64>, note: String) {
        self.push(
            suite,
            check,
            param,
            [Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty],
            Status::Skip,
            note,
        );
    }

    fn criterion(&mut self, suite: &str, check: &str, param: Option<f64>, rep: &CriterionReport) {
        let status = match rep.verdict {
            Verdict::Holds => Status::Pass,
            Verdict::Fails => Status::Fail,
            Verdict::Inconclusive => Status::Skip,
        };
        let fields = [
            Cell::Float(rep.margin_observed),
            Cell::Float(0.0),
            Cell::Float(rep.margin_observed),
            Cell::Empty,
        ];
        self.push(
            suite,
            check,
            param,
            fields,
            status,
            rep.verdict.as_str().to_string(),
        );
    }
}

const SUITES: [Suite; 8] = [
    Suite::Bieberbach,
    Suite::Growth,
    Suite::Covering,
    Suite::Distortion,
    Suite::Fekete,
    Suite::Bloch,
    Suite::Bohr,
    Suite::Alexander,
];

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Bieberbach => "bieberbach",
        Suite::Growth => "growth",
        Suite::Covering => "covering",
        Suite::Distortion => "distortion",
        Suite::Fekete => "fekete",
        Suite::Bloch => "bloch",
        Suite::Bohr => "bohr",
        Suite::Alexander => "alexander",
        Suite::All => "all",
    }
}

pub fn verify(args: &VerifyArgs, cfg: &mut RunConfig) -> std::result::Result<Report, String> {
    let map = load_map(&args.map, &cfg.model).map_err(|e| e.to_string())?;
    cfg.model = *map.model();
    if cfg.samples < cfg.model.n() {
        return Err(format!("--samples must be at least n = {}", cfg.model.n()));
    }
    let samples = directions(&map, cfg);
    let suites: Vec<Suite> = if args.suite == Suite::All {
        SUITES.to_vec()
    } else {
        vec![args.suite]
    };
    let mut c = Collector {
        rows: Vec::new(),
        statuses: Vec::new(),
    };
    for suite in suites {
        run_suite(suite, &map, &samples, cfg, &mut c);
    }
    Ok(Report {
        command: "verify",
        columns: vec![
            "suite", "check", "param", "observed", "bound", "slack", "attained", "status", "note",
        ],
        rows: c.rows,
        statuses: Some(c.statuses),
        map: Some(serialize(&map)),
    })
}

fn run_suite(
    suite: Suite,
    map: &RadialMap,
    samples: &[Vector],
    cfg: &RunConfig,
    c: &mut Collector,
) {
    let name = suite_name(suite);
    let crit = criterion_config(cfg);
    let grid = crit.boundary_grid;
    let tol = cfg.bound_tol;
    match suite {
        Suite::Bieberbach => c.bounds(
            name,
            "bieberbach",
            check_bieberbach(map, map, cfg.s_max, samples, tol),
        ),
        Suite::Growth => c.bounds(
            name,
            "growth",
            check_growth(map, samples, &GROWTH_RADII, grid, tol),
        ),
        Suite::Covering => c.bounds(
            name,
            "covering",
            covering_margin(map, COVERING_RADIUS, samples, grid, tol).map(|r| vec![r]),
        ),
        Suite::Distortion => {
            c.bounds(
                name,
                "distortion_ray",
                check_distortion_ray(map, samples, &GROWTH_RADII, grid, tol),
            );
            c.bounds(
                name,
                "distortion",
                check_distortion_hilbert(map, samples, &GROWTH_RADII, grid, tol),
            );
        }
        Suite::Fekete => {
            for k in 0..10 {
                let lambda = k as f64 / 10.0;
                let worst: Result<Option<BoundReport>> = samples
                    .iter()
                    .map(|u| fekete_szego(map, u, lambda, tol))
                    .try_fold(None, |acc: Option<BoundReport>, r| {
                        let r = r?;
                        Ok(Some(match acc {
                            Some(a) if a.slack <= r.slack => a,
                            _ => r,
                        }))
                    });
                match worst {
                    Ok(Some(r)) => c.bound(name, &r),
                    Ok(None) => c.skip(name, "fekete_szego", Some(lambda), "no samples".into()),
                    Err(e) => c.skip(name, "fekete_szego", Some(lambda), e.to_string()),
                }
            }
        }
        Suite::Bloch => {
            let bloch = BlochGrid::default();
            match bloch_seminorm(map, samples, &bloch) {
                Ok(est) => {
                    let note = if est.exceeds_cap {
                        "exceeds cap"
                    } else {
                        "estimate"
                    };
                    let fields = [
                        Cell::Float(est.value),
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                    ];
                    c.push(
                        name,
                        "bloch_seminorm",
                        None,
                        fields,
                        Status::Pass,
                        note.into(),
                    );
                }
                Err(e) => c.skip(name, "bloch_seminorm", None, e.to_string()),
            }
            let (radial, angular) = BONK_GRID;
            c.bounds(
                name,
                "bonk",
                check_bonk(map, samples, radial, angular, &bloch, tol).map(|r| vec![r]),
            );
            match bloch_schlicht_check(map, samples, &crit, &bloch, tol) {
                Ok(rep) => {
                    let r = rep.covering.param;
                    c.criterion(name, "bloch_univalent", r, &rep.univalence);
                    c.bound(name, &rep.covering);
                }
                Err(e) => c.skip(name, "bloch_schlicht", None, e.to_string()),
            }
        }
        Suite::Bohr => {
            for m in 1..=2u32 {
                for n in 1..=3u32 {
                    let check = format!("rogosinski_m{m}_N{n}");
                    let rep = RadiusQuery::general(m, n)
                        .and_then(|q| solve_radius(&q))
                        .and_then(|root| {
                            rogosinski_check(
                                map,
                                m as usize,
                                n as usize,
                                root.r,
                                samples,
                                DEFAULT_S_CAP,
                                tol,
                            )
                        });
                    match rep {
                        Ok(mut r) => {
                            r.name = check;
                            c.bound(name, &r);
                        }
                        Err(e) => c.skip(name, &check, None, e.to_string()),
                    }
                }
            }
        }
        Suite::Alexander => {
            for k in 1..10 {
                let r = k as f64 / 10.0;
                match alexander_check(map, r, samples, &crit) {
                    Ok((convex, starlike)) => {
                        let status = match (convex.verdict, starlike.verdict) {
                            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Status::Skip,
                            (a, b) if a == b => Status::Pass,
                            _ => Status::Fail,
                        };
                        let fields = [
                            Cell::Float(convex.margin_observed),
                            Cell::Float(starlike.margin_observed),
                            Cell::Empty,
                            Cell::Empty,
                        ];
                        let note = format!(
                            "quasiconvex {}, transform starlike {}",
                            convex.verdict.as_str(),
                            starlike.verdict.as_str()
                        );
                        c.push(name, "alexander", Some(r), fields, status, note);
                    }
                    Err(e) => c.skip(name, "alexander", Some(r), e.to_string()),
                }
            }
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}

pub fn parse_direction(spec: &str, model: &NormModel) -> std::result::Result<Vector, String> {
    let n = model.n();
    let u = if let Some(k) = spec.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
        if k == 0 || k > n {
            return Err(format!("direction `{spec}` needs 1 <= k <= {n}"));
        }
        Vector::basis(n, k - 1)
    } else {
        let entries = spec
            .split(',')
            .map(|t| parse_complex(t.trim()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| format!("direction `{spec}`: {e}"))?;
        if entries.len() != n {
            return Err(format!(
                "direction `{spec}` has {} entries, expected {n}",
                entries.len()
            ));
        }
        Vector::new(entries)
    };
    check_unit(model, &u).map_err(|e| format!("direction `{spec}`: {e}"))?;
    Ok(u)
}

pub const SLICE_RADII: usize = 19;

pub fn slice(args: &SliceArgs, cfg: &mut RunConfig) -> std::result::Result<Report, String> {
    let map = load_map(&args.map, &cfg.model).map_err(|e| e.to_string())?;
    cfg.model = *map.model();
    let u = parse_direction(&args.u, &cfg.model)?;
    let f = map.slice(&u).map_err(|e| e.to_string())?;
    let series = f.series(cfg.degree).map_err(|e| e.to_string())?;
    let deriv = series.derivative().map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    let coeff_row = |table: &str, k: usize, z: C64| {
        let mut row = vec![
            Cell::from(table),
            Cell::Int(k as i64),
            Cell::Empty,
            Cell::Float(z.re),
            Cell::Float(z.im),
        ];
        row.extend([Cell::Empty, Cell::Empty, Cell::Empty]);
        row
    };
    for (k, &z) in series.coeffs().iter().enumerate() {
        rows.push(coeff_row("slice_coefficient", k, z));
    }
    for (k, &z) in deriv.coeffs().iter().enumerate() {
        rows.push(coeff_row("derivative_coefficient", k, z));
    }
    let crit = criterion_config(cfg);
    for i in 0..SLICE_RADII {
        let r = (i + 1) as f64 * 0.05;
        let mut row = vec![
            Cell::from("margins"),
            Cell::Int(i as i64),
            Cell::Float(r),
            Cell::Empty,
            Cell::Empty,
        ];
        for kind in [
            CriterionKind::Univalent,
            CriterionKind::Starlike,
            CriterionKind::QuasiconvexB,
        ] {
            let rep = slice_criterion(&f, r, kind, &crit).map_err(|e| e.to_string())?;
            row.push(Cell::Float(rep.margin_observed));
        }
        rows.push(row);
    }
    Ok(Report {
        command: "slice",
        columns: vec![
            "table",
            "index",
            "r",
            "re",
            "im",
            "univalent_margin",
            "starlike_margin",
            "convex_margin",
        ],
        rows,
        statuses: None,
        map: Some(serialize(&map)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norming_points_attain_the_dual_norm() {
        let w = SupportFunctional::new(vec![
            C64::new(0.3, 0.1),
            C64::new(-0.2, 0.0),
            C64::new(0.0, 0.0),
        ]);
        for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
            let model = NormModel::new(p, 3).unwrap();
            let v = norming_point(&w, &model).unwrap();
            assert!((model.norm(&v).unwrap() - 1.0).abs() < 1e-14, "p = {p}");
            let lv = w.apply(&v);
            assert!(
                (lv - C64::new(model.dual_norm(&w), 0.0)).norm() < 1e-14,
                "p = {p}"
            );
        }
    }

    #[test]
    fn directions_parse() {
        let model = NormModel::hilbert(2).unwrap();
        assert_eq!(parse_direction("e2", &model).unwrap(), Vector::basis(2, 1));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = parse_direction(&format!("{h},0:{h}"), &model).unwrap();
        assert_eq!(u[1], C64::new(0.0, h));
        assert!(parse_direction("e3", &model).is_err());
        assert!(parse_direction("1,1", &model).is_err());
    }
}
