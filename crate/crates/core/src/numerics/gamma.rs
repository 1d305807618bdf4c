use std::f64::consts::{LN_2, PI};

use super::{real, Complex};
use crate::error::{Error, Result};

/// Distance below which an argument counts as sitting on a Γ pole.
pub const POLE_TOL: f64 = 1e-12;

/// Stirling coefficients B₂ₖ / (2k(2k−1)), k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// Below this modulus the argument is shifted upward before Stirling is applied.
const STIRLING_MIN: f64 = 15.0;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

const POCHHAMMER_PRODUCT_MAX: u64 = 64;

pub fn is_nonpositive_integer(z: Complex) -> bool {
    z.im.abs() <= POLE_TOL && z.re <= POLE_TOL && (z.re - z.re.round()).abs() <= POLE_TOL
}

fn is_integer_in(z: Complex, lo: i64, hi: i64) -> bool {
    let r = z.re.round();
    z.im.abs() <= POLE_TOL && (z.re - r).abs() <= POLE_TOL && r >= lo as f64 && r <= hi as f64
}

fn reduce_branch(mut z: Complex) -> Complex {
    let two_pi = 2.0 * PI;
    z.im -= two_pi * (z.im / two_pi).round();
    if z.im <= -PI {
        z.im += two_pi;
    } else if z.im > PI {
        z.im -= two_pi;
    }
    z
}

fn stirling(w: Complex) -> Complex {
    let u = (w * w).inv();
    let mut s = real(STIRLING[STIRLING.len() - 1]);
    for &cf in STIRLING.iter().rev().skip(1) {
        s = s * u + cf;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + s / w
}

// log Γ for Re z ≥ 1/2, branch not yet reduced.
fn log_gamma_right(z: Complex) -> Complex {
    let mut w = z;
    let mut prod = real(1.0);
    while w.norm() < STIRLING_MIN {
        prod *= w;
        w += 1.0;
    }
    stirling(w) - prod.ln()
}

// ln sin(πz), any branch.
fn ln_sin_pi(z: Complex) -> Complex {
    let n = z.re.round();
    let w = z - n;
    let parity = if (n as i64).rem_euclid(2) == 1 { Complex::new(0.0, PI) } else { real(0.0) };
    let body = if w.im.abs() < 2.0 {
        (w * PI).sin().ln()
    } else if w.im > 0.0 {
        let e = (Complex::new(0.0, 2.0 * PI) * w).exp();
        Complex::new(PI * w.im - LN_2, PI / 2.0 - PI * w.re) + (1.0 - e).ln()
    } else {
        let e = (Complex::new(0.0, -2.0 * PI) * w).exp();
        Complex::new(-PI * w.im - LN_2, PI * w.re - PI / 2.0) + (1.0 - e).ln()
    };
    body + parity
}

/// Principal-branch log Γ(z): real part ln|Γ(z)|, imaginary part the
/// argument of Γ(z) reduced to (−π, π].
pub fn log_gamma(z: Complex) -> Result<Complex> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("Gamma has a pole at {}", z.re.round())));
    }
    let v = if z.re >= 0.5 {
        log_gamma_right(z)
    } else {
        real(PI.ln()) - ln_sin_pi(z) - log_gamma_right(1.0 - z)
    };
    Ok(reduce_branch(v))
}

/// 1/Γ(z); exactly zero on the poles.
pub fn reciprocal_gamma(z: Complex) -> Complex {
    if is_nonpositive_integer(z) {
        return real(0.0);
    }
    // Small positive integers come out exact this way.
    if z.im == 0.0 && z.re == z.re.round() && (1.0..=20.0).contains(&z.re) {
        let mut f = 1.0;
        for k in 2..(z.re as u64) {
            f *= k as f64;
        }
        return real(1.0 / f);
    }
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => real(0.0),
    }
}

fn rising(a: Complex, n: u64) -> Result<Complex> {
    if n <= POCHHAMMER_PRODUCT_MAX {
        let mut p = real(1.0);
        for k in 0..n {
            p *= a + k as f64;
        }
        return Ok(p);
    }
    if is_nonpositive_integer(a) {
        let a0 = a.re.round();
        if -a0 < n as f64 {
            return Ok(real(0.0));
        }
        // (a)ₙ = (−1)ⁿ (1−a−n)ₙ with 1−a−n a positive integer.
        let flipped = rising(real(1.0 - a0 - n as f64), n)?;
        return Ok(if n % 2 == 1 { -flipped } else { flipped });
    }
    Ok((log_gamma(a + n as f64)? - log_gamma(a)?).exp())
}

/// Pochhammer symbol (a)ₙ for any integer n; (a)₋ₖ = 1/((a−1)⋯(a−k)).
pub fn pochhammer(a: Complex, n: i64) -> Result<Complex> {
    let v = if n >= 0 {
        rising(a, n as u64)?
    } else {
        let k = n.unsigned_abs();
        if is_integer_in(a, 1, k as i64) {
            return Err(Error::Pole(format!(
                "({a})_{n} has a vanishing factor in its denominator"
            )));
        }
        rising(a - k as f64, k)?.inv()
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("({a})_{n}")))
    }
}
