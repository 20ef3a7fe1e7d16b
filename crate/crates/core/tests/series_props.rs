//! Algebraic laws of truncated series. Coefficients are small Gaussian
//! integers so every product and sum is exact in double precision.

use proptest::prelude::*;
use radial_core::{c64, SeriesOp, TruncatedSeries, C64};

fn gaussian_int() -> impl Strategy<Value = C64> {
    (-8i32..=8, -8i32..=8).prop_map(|(a, b)| c64(a as f64, b as f64))
}

fn series(max_degree: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(gaussian_int(), 1..=max_degree + 1).prop_map(TruncatedSeries::new)
}

/// Unit constant term keeps every quotient coefficient a Gaussian integer.
fn unit_series(max_degree: usize) -> impl Strategy<Value = TruncatedSeries> {
    (
        prop::sample::select(vec![
            c64(1.0, 0.0),
            c64(-1.0, 0.0),
            c64(0.0, 1.0),
            c64(0.0, -1.0),
        ]),
        series(max_degree),
    )
        .prop_map(|(b0, s)| {
            let mut c = s.into_coeffs();
            c[0] = b0;
            TruncatedSeries::new(c)
        })
}

fn mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.arith(b, SeriesOp::Mul).unwrap()
}

fn add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.arith(b, SeriesOp::Add).unwrap()
}

proptest! {
    #[test]
    fn mul_commutes(a in series(12), b in series(12)) {
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
    }

    #[test]
    fn mul_distributes_over_add(a in series(10), b in series(10), c in series(10)) {
        let d = a.degree().min(b.degree()).min(c.degree());
        let lhs = mul(&a, &add(&b, &c));
        let rhs = add(&mul(&a, &b), &mul(&a, &c));
        prop_assert_eq!(lhs.truncate(d), rhs.truncate(d));
    }

    #[test]
    fn product_rule(a in series(12), b in series(12)) {
        prop_assume!(a.degree() >= 1 && b.degree() >= 1);
        let d = a.degree().min(b.degree()) - 1;
        let lhs = mul(&a, &b).derivative().unwrap();
        let rhs = add(&mul(&a.derivative().unwrap(), &b), &mul(&a, &b.derivative().unwrap()));
        prop_assert_eq!(lhs.truncate(d), rhs.truncate(d));
    }

    #[test]
    fn div_then_mul_round_trips(a in series(10), b in unit_series(10)) {
        let q = a.arith(&b, SeriesOp::Div).unwrap();
        let back = mul(&q, &b);
        let d = a.degree().min(b.degree());
        prop_assert_eq!(back.truncate(d), a.truncate(d));
    }

    #[test]
    fn compose_with_identity(a in series(16), extra in 0usize..4) {
        let z = TruncatedSeries::identity(a.degree().max(1) + extra);
        prop_assert_eq!(a.compose(&z).unwrap(), a);
    }

    #[test]
    fn sub_undoes_add(a in series(12), b in series(12)) {
        let d = a.degree().min(b.degree());
        let back = add(&a, &b).arith(&b, SeriesOp::Sub).unwrap();
        prop_assert_eq!(back, a.truncate(d));
    }
}

#[test]
fn division_by_series_vanishing_at_origin_fails() {
    let a = TruncatedSeries::one(4);
    let b = TruncatedSeries::identity(4);
    assert!(a.arith(&b, SeriesOp::Div).is_err());
}

#[test]
fn koebe_is_z_over_square_of_one_minus_z() {
    let d = 32;
    let one_minus = TruncatedSeries::from_real(&[1.0, -1.0]);
    let sq = mul(&one_minus, &one_minus);
    let k = TruncatedSeries::identity(d).div(&sq).unwrap();
    assert_eq!(
        k.truncate(d),
        TruncatedSeries::koebe(d).truncate(k.degree())
    );
}
