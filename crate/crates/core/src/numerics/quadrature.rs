use std::f64::consts::PI;

use rayon::prelude::*;

use super::{real, Complex};
use crate::error::{Error, Result};

/// Mean of f over [0, 2π) on N equispaced nodes shifted by half a step.
pub fn circle_quadrature<F>(f: F, n_points: usize) -> Complex
where
    F: Fn(f64) -> Complex,
{
    let n = n_points.max(1);
    let h = 2.0 * PI / n as f64;
    let mut sum = real(0.0);
    for k in 0..n {
        sum += f((k as f64 + 0.5) * h);
    }
    sum / n as f64
}

/// Doubles N from `n_start` until two successive rules agree to `tol`
/// (relative, with an absolute floor of `tol`). Returns the value and the N used.
pub fn circle_quadrature_adaptive<F>(
    f: F,
    n_start: usize,
    tol: f64,
    n_max: usize,
) -> Result<(Complex, usize)>
where
    F: Fn(f64) -> Complex,
{
    let mut n = n_start.max(8);
    let mut prev = circle_quadrature(&f, n);
    while n < n_max {
        n *= 2;
        let next = circle_quadrature(&f, n);
        let diff = (next - prev).norm();
        if diff <= tol * next.norm().max(1.0) {
            return Ok((next, n));
        }
        prev = next;
    }
    Err(Error::NoConvergence { terms: n, residual: f64::NAN })
}

/// Mean of f over the torus [0, 2π)² with half-step offsets in both variables.
pub fn torus_quadrature_2d<F>(f: F, n_points: usize) -> Complex
where
    F: Fn(f64, f64) -> Complex + Sync,
{
    torus_quadrature_2d_offset(f, n_points, (0.5, 0.5))
}

/// Torus rule with node offsets given in units of the grid step.
/// Rows are evaluated in parallel and reduced in a fixed order.
pub fn torus_quadrature_2d_offset<F>(f: F, n_points: usize, offset: (f64, f64)) -> Complex
where
    F: Fn(f64, f64) -> Complex + Sync,
{
    let n = n_points.max(1);
    let h = 2.0 * PI / n as f64;
    let rows: Vec<Complex> = (0..n)
        .into_par_iter()
        .map(|j| {
            let u = (j as f64 + offset.0) * h;
            let mut s = real(0.0);
            for k in 0..n {
                s += f(u, (k as f64 + offset.1) * h);
            }
            s
        })
        .collect();
    rows.iter().sum::<Complex>() / (n * n) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_modes() {
        assert!((circle_quadrature(|_| real(1.0), 10) - 1.0).norm() < 1e-15);
        let e = circle_quadrature(|t| Complex::new(0.0, t).exp(), 16);
        assert!(e.norm() < 1e-15);
        assert!((torus_quadrature_2d(|_, _| real(1.0), 12) - 1.0).norm() < 1e-14);
        let m = torus_quadrature_2d(|a, b| Complex::new(0.0, a - b).exp(), 16);
        assert!(m.norm() < 1e-15);
    }

    #[test]
    fn separable_matches_product() {
        let g = |t: f64| real((t.cos() + 2.0).ln());
        let h = |t: f64| Complex::new(0.0, 2.0 * t).exp() * (1.3 + t.sin()).powi(-1);
        let n = 64;
        let prod = circle_quadrature(g, n) * circle_quadrature(h, n);
        let tor = torus_quadrature_2d(|a, b| g(a) * h(b), n);
        assert!((prod - tor).norm() < 1e-12);
    }

    #[test]
    fn adaptive_doubling_converges() {
        let (v, n) =
            circle_quadrature_adaptive(|t| real(1.0 / (2.0 - t.cos())), 8, 1e-12, 1 << 12).unwrap();
        assert!((v.re - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!(n <= 128);
    }
}
