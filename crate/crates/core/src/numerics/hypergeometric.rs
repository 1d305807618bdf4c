use super::gamma::is_nonpositive_integer;
use super::{real, Complex, Config, SeriesResult};
use crate::error::{Error, Result};

/// Gauss ₂F₁(a, b; c; x) for 0 ≤ x < 1 by direct power series.
pub fn gauss_2f1(a: Complex, b: Complex, c: Complex, x: f64) -> Result<SeriesResult> {
    gauss_2f1_with(a, b, c, x, &Config::default())
}

pub fn gauss_2f1_with(
    a: Complex,
    b: Complex,
    c: Complex,
    x: f64,
    cfg: &Config,
) -> Result<SeriesResult> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("2F1 argument x = {x} outside [0, 1)")));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Pole(format!("2F1 lower parameter c = {c} is a nonpositive integer")));
    }
    let mut sum = real(1.0);
    let mut term = real(1.0);
    if x == 0.0 {
        return Ok(SeriesResult { value: sum, terms_used: 1, err_estimate: 0.0 });
    }
    let mut small_run = 0;
    let mut prev_mag = 1.0;
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        let mag = term.norm();
        if mag == 0.0 {
            return Ok(SeriesResult { value: sum, terms_used: n + 2, err_estimate: 0.0 });
        }
        // Term ratios tend to x, so the tail is about mag·x/(1 − x).
        let ratio = (mag / prev_mag).max(x);
        let tail = if ratio < 1.0 { mag * ratio / (1.0 - ratio) } else { f64::INFINITY };
        if mag < cfg.tol * sum.norm() && tail < cfg.tol * sum.norm() {
            small_run += 1;
            if small_run == 3 {
                return Ok(SeriesResult { value: sum, terms_used: n + 2, err_estimate: tail });
            }
        } else {
            small_run = 0;
        }
        prev_mag = mag;
    }
    Err(Error::NoConvergence { terms: cfg.max_terms, residual: term.norm() })
}
