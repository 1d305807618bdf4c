use std::f64::consts::PI;

use proptest::prelude::*;
use so21_core::numerics::{
    bilateral_sum, circle_quadrature, gauss_2f1, levin_tail_sum, log_gamma, pochhammer, reciprocal_gamma,
    torus_quadrature_2d,
};
use so21_core::{Complex, Error};

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn close(a: Complex, b: Complex, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

#[test]
fn gamma_at_half_integers() {
    let v = log_gamma(c(0.5, 0.0)).unwrap();
    assert!((v.re - 0.5 * PI.ln()).abs() < 1e-14);
    let v = log_gamma(c(5.5, 0.0)).unwrap().exp();
    assert!((v.re - 52.34277778455352).abs() < 1e-11);
}

#[test]
fn gamma_poles() {
    assert!(matches!(log_gamma(c(-3.0, 0.0)), Err(Error::Pole(_))));
    assert_eq!(reciprocal_gamma(c(-3.0, 0.0)), c(0.0, 0.0));
    assert_eq!(reciprocal_gamma(c(5.0, 0.0)), c(1.0 / 24.0, 0.0));
}

#[test]
fn pochhammer_special_values() {
    assert_eq!(pochhammer(c(3.0, 0.0), 0).unwrap(), c(1.0, 0.0));
    assert_eq!(pochhammer(c(-2.0, 0.0), 3).unwrap(), c(0.0, 0.0));
    assert!(close(pochhammer(c(1.0, 0.0), 10).unwrap(), c(3628800.0, 0.0), 1e-15));
    // (a)_{-1} = 1/(a - 1)
    assert!(close(pochhammer(c(2.5, 1.0), -1).unwrap(), c(1.0, 0.0) / c(1.5, 1.0), 1e-14));
}

#[test]
fn gauss_matches_arcsin() {
    // arcsin x = x ₂F₁(½, ½; 3/2; x²)
    for &x in &[0.1, 0.5, 0.9] {
        let f = gauss_2f1(c(0.5, 0.0), c(0.5, 0.0), c(1.5, 0.0), x * x).unwrap();
        assert!((x * f.value.re - f64::asin(x)).abs() < 1e-11);
    }
}

#[test]
fn bilateral_zeta() {
    // Σ_{n≠0} |n|^{-2} = π²/3
    let r = bilateral_sum(|n| if n == 0 { c(0.0, 0.0) } else { c(1.0 / (n * n) as f64, 0.0) }, -2.0).unwrap();
    assert!((r.value.re - PI * PI / 3.0).abs() < 1e-10);
}

#[test]
fn levin_alternating() {
    let terms: Vec<Complex> = (0..30).map(|k| c(if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0), 0.0)).collect();
    let r = levin_tail_sum(&terms, 1.0);
    assert!((r.value.re - 2f64.ln()).abs() < 1e-12);
}

#[test]
fn quadrature_is_exact_on_trig_polynomials() {
    let v = circle_quadrature(|phi| c((3.0 * phi).cos().powi(2), 0.0), 16);
    assert!((v.re - 0.5).abs() < 1e-15);
    let v = torus_quadrature_2d(|a, b| c((a - b).cos().powi(2) + 1.0, 0.0), 16);
    assert!((v.re - 1.5).abs() < 1e-14);
}

proptest! {
    #[test]
    fn gamma_recurrence(re in -6.0f64..8.0, im in 0.1f64..5.0) {
        let z = c(re, im);
        let lhs = log_gamma(z + 1.0).unwrap().exp();
        let rhs = z * log_gamma(z).unwrap().exp();
        prop_assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn gamma_reflection(re in -4.0f64..4.0, im in 0.05f64..3.0) {
        let z = c(re, im);
        let prod = log_gamma(z).unwrap().exp() * log_gamma(c(1.0, 0.0) - z).unwrap().exp();
        let expected = c(PI, 0.0) / (z * PI).sin();
        prop_assert!(close(prod, expected, 1e-11));
    }

    #[test]
    fn conjugate_symmetry(re in -5.0f64..5.0, im in 0.1f64..4.0) {
        let z = c(re, im);
        let a = log_gamma(z).unwrap().exp().conj();
        let b = log_gamma(z.conj()).unwrap().exp();
        prop_assert!(close(a, b, 1e-13));
    }

    #[test]
    fn pochhammer_recurrence(re in -5.0f64..5.0, im in 0.1f64..3.0, n in 0i64..40) {
        let a = c(re, im);
        let lhs = pochhammer(a, n + 1).unwrap();
        let rhs = pochhammer(a, n).unwrap() * (a + n as f64);
        prop_assert!(close(lhs, rhs, 1e-11 * (1.0 + rhs.norm())));
    }

    #[test]
    fn euler_transformation(a in -1.5f64..1.5, b in -1.5f64..1.5, cc in 0.6f64..3.0, x in 0.0f64..0.6) {
        // ₂F₁(a, b; c; x) = (1 − x)^{c−a−b} ₂F₁(c − a, c − b; c; x)
        let lhs = gauss_2f1(c(a, 0.0), c(b, 0.0), c(cc, 0.0), x).unwrap().value;
        let rhs = gauss_2f1(c(cc - a, 0.0), c(cc - b, 0.0), c(cc, 0.0), x).unwrap().value * (1.0 - x).powf(cc - a - b);
        prop_assert!(close(lhs, rhs, 1e-10));
    }
}
