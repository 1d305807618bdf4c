//! Special-function kernels and quadrature rules shared by the rest of the crate.

mod gamma;
mod hypergeometric;
mod quadrature;
mod series;

pub use gamma::{is_nonpositive_integer, log_gamma, pochhammer, reciprocal_gamma, POLE_TOL};
pub use hypergeometric::{gauss_2f1, gauss_2f1_with};
pub use quadrature::{
    circle_quadrature, circle_quadrature_adaptive, torus_quadrature_2d, torus_quadrature_2d_offset,
};
pub use series::{bilateral_extent, bilateral_sum, bilateral_sum_with, levin_t, levin_tail_sum};

pub type Complex = num_complex::Complex64;

/// Value of an infinite series together with its bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex,
    pub terms_used: usize,
    /// Estimated absolute truncation error, always ≥ 0.
    pub err_estimate: f64,
}

impl SeriesResult {
    pub fn exact(value: Complex) -> Self {
        SeriesResult { value, terms_used: 0, err_estimate: 0.0 }
    }
}

/// Tolerances shared by the series and quadrature evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Relative stopping tolerance for power series.
    pub tol: f64,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
    /// Grid size for circle quadratures (matrix elements, oracles).
    pub quad_points: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { tol: 1e-12, max_terms: 200_000, quad_points: 1024 }
    }
}

pub(crate) fn real(x: f64) -> Complex {
    Complex::new(x, 0.0)
}
