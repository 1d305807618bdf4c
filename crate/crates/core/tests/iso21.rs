use std::f64::consts::PI;

use proptest::prelude::*;
use so21_core::group::{boost01, boost02, minkowski, rotation, GroupElement, Vec3};
use so21_core::iso21::{
    character, default_tol, induced_action, iso_multiply, measure_density, orbit_classify, wigner_operator,
    wigner_rotation, IsoElement, IsoIrrepLabel, LittleKind, Momentum, OrbitChart, OrbitClass,
};
use so21_core::{Complex, Error};

fn lorentz() -> impl Strategy<Value = GroupElement> {
    (0.0..2.0 * PI, -0.5f64..0.5, -0.5f64..0.5, 0.0..2.0 * PI)
        .prop_map(|(a, b, c, d)| rotation(a) * boost02(b) * boost01(c) * rotation(d))
}

fn vector() -> impl Strategy<Value = Vec3> {
    prop::array::uniform3(-1.0f64..1.0).prop_map(|[x, y, z]| Vec3::new(x, y, z))
}

fn massive() -> impl Strategy<Value = (f64, Vec3)> {
    (0.5f64..3.0, 0.0f64..2.0, 0.0..2.0 * PI).prop_map(|(m, a, phi)| {
        (m, OrbitChart::Massive { mass: m }.chart((a, phi)).unwrap())
    })
}

#[test]
fn classification() {
    let tol = |p: &Vec3| default_tol(p);
    let cases = [
        (Vec3::new(2.0, 1.0, 0.0), OrbitClass::MassiveUpper),
        (Vec3::new(-2.0, 1.0, 0.0), OrbitClass::MassiveLower),
        (Vec3::new(0.5, 1.0, 0.3), OrbitClass::Tachyonic),
        (Vec3::new(1.0, 0.6, 0.8), OrbitClass::LightlikeUpper),
        (Vec3::zeros(), OrbitClass::Origin),
    ];
    for (p, want) in cases {
        assert_eq!(orbit_classify(&p, tol(&p)).unwrap(), want);
    }
    let lower = Vec3::new(-1.0, 0.6, 0.8);
    assert!(matches!(orbit_classify(&lower, tol(&lower)), Err(Error::AmbiguousClass(_))));
}

#[test]
fn charts_round_trip() {
    let charts = [
        (OrbitChart::Massive { mass: 1.3 }, (0.7, 2.0)),
        (OrbitChart::Tachyonic { scale: 0.8 }, (0.4, -1.1)),
        (OrbitChart::Lightlike, (1.7, 0.3)),
    ];
    for (chart, coords) in charts {
        let p = chart.chart(coords).unwrap();
        let back = chart.chart_inverse(&p).unwrap();
        assert!((back.0 - coords.0).abs() < 1e-12 && (back.1 - coords.1).abs() < 1e-12, "{chart:?}");
        let h = chart.transport(coords);
        assert!((h.act(&chart.base_point()) - p).amax() < 1e-12);
    }
}

#[test]
fn little_groups_by_class() {
    let r = boost02(0.3) * rotation(1.0);
    let p = Momentum::new(OrbitChart::Massive { mass: 1.0 }.chart((0.5, 0.2)).unwrap());
    assert!(matches!(wigner_rotation(&p, &r).unwrap().kind, LittleKind::Rotation(_)));
    let p = Momentum::new(OrbitChart::Tachyonic { scale: 1.0 }.chart((0.5, 0.2)).unwrap());
    let small = boost01(0.2) * boost02(0.05);
    assert!(matches!(wigner_rotation(&p, &small).unwrap().kind, LittleKind::Boost01(_)));
    // the rotation carries r⁻¹p below p₂ = κ, outside the hyperbolic chart
    assert!(matches!(wigner_rotation(&p, &r), Err(Error::OutOfChart(_))));
    let p = Momentum::new(OrbitChart::Lightlike.chart((1.0, 0.2)).unwrap());
    assert!(matches!(wigner_rotation(&p, &r).unwrap().kind, LittleKind::HoroZ(_)));
}

#[test]
fn pure_rotation_of_rest_frame() {
    let p = Momentum::new(Vec3::new(2.0, 0.0, 0.0));
    let w = wigner_rotation(&p, &rotation(0.8)).unwrap();
    assert!((w.kind.parameter() - 0.8).abs() < 1e-14);
}

#[test]
fn label_mismatch_and_zero_momentum() {
    let p = Momentum::new(Vec3::new(2.0, 0.0, 0.0));
    let g = IsoElement::lorentz(rotation(0.1));
    let wrong = IsoIrrepLabel::MassSpin { m: 1.0, s: 1 };
    assert!(matches!(induced_action(&wrong, &g, &p), Err(Error::LabelOrbitMismatch(_))));
    let helicity = IsoIrrepLabel::Helicity { lambda: 0.5 };
    assert!(matches!(induced_action(&helicity, &g, &p), Err(Error::LabelOrbitMismatch(_))));
    let zero = Momentum::new(Vec3::zeros());
    let boundary = IsoIrrepLabel::BoundaryRep { sigma: Complex::new(-0.5, 1.0) };
    assert!(matches!(induced_action(&boundary, &g, &zero), Err(Error::UnsupportedCase(_))));
}

#[test]
fn translations_act_by_the_character() {
    let p = Momentum::new(Vec3::new(1.5, 0.3, -0.4));
    let m = (minkowski(&p.p, &p.p)).sqrt();
    let a = Vec3::new(0.2, -0.7, 1.1);
    let (mult, q) = induced_action(&IsoIrrepLabel::MassSpin { m, s: 2 }, &IsoElement::translation(a), &p).unwrap();
    assert!((mult - character(&p, &a).conj()).norm() < 1e-13);
    assert!((q.p - p.p).amax() < 1e-15);
}

#[test]
fn measure_densities() {
    assert!((measure_density(OrbitClass::MassiveUpper, (1.0, 0.3)).unwrap() - 0.5 * 1f64.tanh()).abs() < 1e-15);
    assert!((measure_density(OrbitClass::Tachyonic, (-1.0, 0.3)).unwrap() - 0.5 * 1f64.sinh()).abs() < 1e-15);
    assert!((measure_density(OrbitClass::LightlikeUpper, (2.0, 3.0)).unwrap() - 8.0).abs() < 1e-15);
    assert!(matches!(measure_density(OrbitClass::LightlikeUpper, (0.0, 1.0)), Err(Error::OutOfChart(_))));
    assert!(matches!(measure_density(OrbitClass::Origin, (1.0, 1.0)), Err(Error::UnsupportedCase(_))));
}

proptest! {
    #[test]
    fn transport_reaches_the_momentum((_, p) in massive()) {
        let h = wigner_operator(&Momentum::new(p)).unwrap();
        let base = Vec3::new(minkowski(&p, &p).sqrt(), 0.0, 0.0);
        prop_assert!((h.act(&base) - p).amax() < 1e-12 * p.amax());
    }

    #[test]
    fn cocycle((_, p) in massive(), r1 in lorentz(), r2 in lorentz()) {
        let p = Momentum::new(p);
        let whole = wigner_rotation(&p, &(r1 * r2)).unwrap();
        let a = wigner_rotation(&p, &r1).unwrap();
        let b = wigner_rotation(&Momentum::new(r1.inverse().act(&p.p)), &r2).unwrap();
        prop_assert!(whole.g.distance(&(a.g * b.g)) < 1e-10);
    }

    #[test]
    fn induced_action_composes((m, p) in massive(), s in -3i64..=3, a1 in vector(), a2 in vector(), r1 in lorentz(), r2 in lorentz()) {
        let label = IsoIrrepLabel::MassSpin { m, s };
        let p = Momentum::new(p);
        let (g1, g2) = (IsoElement::new(a1, r1), IsoElement::new(a2, r2));
        let (u1, q1) = induced_action(&label, &g1, &p).unwrap();
        let (u2, q2) = induced_action(&label, &g2, &q1).unwrap();
        let (u12, q12) = induced_action(&label, &iso_multiply(&g1, &g2), &p).unwrap();
        prop_assert!((u1 * u2 - u12).norm() < 1e-10);
        prop_assert!((q2.p - q12.p).amax() < 1e-10);
    }

    #[test]
    fn iso_inverse(a in vector(), r in lorentz()) {
        let g = IsoElement::new(a, r);
        let e = iso_multiply(&g, &g.inverse());
        prop_assert!(e.a.amax() < 1e-13);
        prop_assert!(e.r.distance(&GroupElement::identity()) < 1e-13);
    }

    #[test]
    fn character_is_invariant((_, p) in massive(), a in vector(), r in lorentz()) {
        let p = Momentum::new(p);
        let lhs = character(&p, &r.act(&a));
        let rhs = character(&Momentum::new(r.inverse().act(&p.p)), &a);
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }
}
