//! Representations of SO₀(2,1) on homogeneous functions of degree σ on the
//! cone, written in the canonical basis eₘ(φ) = e^{imφ}.
//!
//! T(g)F(k) = F(g⁻¹k). On the circle this reads T(rotation(φ₁))f(φ) = f(φ − φ₁)
//! and T(boost02(α))f(φ) = ω_α^σ f(φ_α). The matrix element t_{m'm}(g) is the
//! coefficient of e_{m'} in T(g)eₘ.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::group::{cartan_decompose, GroupElement};
use crate::numerics::{
    gauss_2f1_with, is_nonpositive_integer, levin_tail_sum, log_gamma, pochhammer,
    reciprocal_gamma, Complex, Config, SeriesResult,
};

const CLASSIFY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Series {
    /// σ = −1/2 + iρ
    Principal { rho: f64 },
    /// real σ in (−1, 0)
    Complementary,
    /// integer σ
    DiscreteInteger(i64),
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepLabel {
    pub sigma: Complex,
    pub series: Series,
}

pub fn classify(sigma: Complex) -> RepLabel {
    let series = if (sigma.re + 0.5).abs() <= CLASSIFY_TOL {
        Series::Principal { rho: sigma.im }
    } else if sigma.im.abs() <= CLASSIFY_TOL && (sigma.re - sigma.re.round()).abs() <= CLASSIFY_TOL {
        Series::DiscreteInteger(sigma.re.round() as i64)
    } else if sigma.im.abs() <= CLASSIFY_TOL && sigma.re > -1.0 && sigma.re < 0.0 {
        Series::Complementary
    } else {
        Series::Generic
    };
    RepLabel { sigma, series }
}

fn is_real(z: Complex) -> bool {
    z.im == 0.0
}

fn clean(z: Complex, real_input: bool) -> Complex {
    if real_input {
        Complex::new(z.re, 0.0)
    } else {
        z
    }
}

/// Φₘ = Γ(m+σ+1)/Γ(m−σ).
///
/// A pole of the denominator alone gives 0; a pole of the numerator alone is
/// an error. When both are poles (integer σ, m ≤ min(σ, −σ−1)) the value is
/// the limit along σ, q!/p! with p = −(m+σ+1) and q = σ − m.
pub fn phi_m(sigma: Complex, m: i64) -> Result<Complex> {
    let num = sigma + (m as f64 + 1.0);
    let den = (m as f64) - sigma;
    let (num_pole, den_pole) = (is_nonpositive_integer(num), is_nonpositive_integer(den));
    match (num_pole, den_pole) {
        (true, true) => {
            let p = -num.re.round() as i64;
            let q = -den.re.round() as i64;
            let l = log_gamma(Complex::new(q as f64 + 1.0, 0.0))?
                - log_gamma(Complex::new(p as f64 + 1.0, 0.0))?;
            Ok(Complex::new(l.re.exp(), 0.0))
        }
        (false, true) => Ok(Complex::new(0.0, 0.0)),
        (true, false) => Err(Error::Pole(format!("Gamma({num}) in the numerator of Phi_{m}"))),
        (false, false) => {
            let v = (log_gamma(num)? - log_gamma(den)?).exp();
            Ok(clean(v, is_real(sigma)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Degeneracy {
    pub fplus: bool,
    pub fminus: bool,
    pub f0: bool,
}

/// Membership of eₘ in the invariant subspaces of an integer-σ representation.
pub fn degeneracy_membership(sigma: i64, m: i64) -> Degeneracy {
    Degeneracy {
        fplus: m >= -sigma,
        fminus: m <= sigma,
        f0: sigma >= 0 && m.abs() <= sigma,
    }
}

// (−λ)_m / Γ(m+λ+1) for m ≥ 0 without intermediate overflow.
fn poch_over_gamma(lambda: Complex, m: u64) -> Result<Complex> {
    if m <= 64 {
        return Ok(pochhammer(-lambda, m as i64)? * reciprocal_gamma(lambda + (m as f64 + 1.0)));
    }
    let top = -lambda + m as f64;
    let bottom = lambda + (m as f64 + 1.0);
    if is_nonpositive_integer(-lambda) || is_nonpositive_integer(bottom) {
        return pochhammer(-lambda, m as i64).map(|p| p * reciprocal_gamma(bottom));
    }
    Ok((log_gamma(top)? - log_gamma(-lambda)? - log_gamma(bottom)?).exp())
}

/// Coefficient aₘ of (1 − cos ψ)^λ = Σ aₘ e^{imψ}:
/// aₘ = 2^λ Γ(λ+1/2) (−λ)_{|m|} / (√π Γ(|m|+λ+1)).
pub fn fourier_lambda(lambda: Complex, m: i64) -> Result<Complex> {
    let pre = Complex::new(2.0, 0.0).powc(lambda) * log_gamma(lambda + 0.5)?.exp() / PI.sqrt();
    let v = pre * poch_over_gamma(lambda, m.unsigned_abs())?;
    Ok(clean(v, is_real(lambda)))
}

/// Sum of the expansion of (1 − cos ψ)^λ at ψ: the first modes directly, the
/// two tails Σ aₘ e^{±imψ} by Levin t-acceleration.
pub fn fourier_reconstruct(lambda: Complex, psi: f64) -> Result<SeriesResult> {
    const DIRECT: i64 = 20;
    const TAIL: i64 = 32;
    let mut value = fourier_lambda(lambda, 0)?;
    for m in 1..DIRECT {
        value += fourier_lambda(lambda, m)? * 2.0 * (m as f64 * psi).cos();
    }
    let mut err = 0.0;
    let mut used = 2 * DIRECT as usize - 1;
    for sign in [1.0, -1.0] {
        let tail = (DIRECT..DIRECT + TAIL)
            .map(|m| Ok(fourier_lambda(lambda, m)? * Complex::new(0.0, sign * m as f64 * psi).exp()))
            .collect::<Result<Vec<_>>>()?;
        let t = levin_tail_sum(&tail, DIRECT as f64);
        value += t.value;
        err += t.err_estimate;
        used += t.terms_used;
    }
    Ok(SeriesResult { value, terms_used: used, err_estimate: err })
}

/// Zonal spherical function (cosh α)^σ ₂F₁((1−σ)/2, −σ/2; 1; tanh²α).
pub fn zonal(sigma: Complex, alpha: f64) -> Result<SeriesResult> {
    zonal_with(sigma, alpha, &Config::default())
}

pub fn zonal_with(sigma: Complex, alpha: f64, cfg: &Config) -> Result<SeriesResult> {
    assoc_with(sigma, 0, alpha, cfg)
}

/// Associated spherical function, the m-th Fourier mode of (cosh α − sinh α cos φ)^σ:
/// (−σ)ₘ/(2ᵐ m!) (cosh α)^σ (tanh α)ᵐ ₂F₁((m−σ)/2, (m−σ+1)/2; m+1; tanh²α).
///
/// The mode integral is even in m, so negative m reuses |m|.
pub fn assoc(sigma: Complex, m: i64, alpha: f64) -> Result<SeriesResult> {
    assoc_with(sigma, m, alpha, &Config::default())
}

pub fn assoc_with(sigma: Complex, m: i64, alpha: f64, cfg: &Config) -> Result<SeriesResult> {
    if !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha = {alpha}")));
    }
    let k = m.unsigned_abs();
    let kf = k as f64;
    let t = alpha.tanh();
    if k > 0 && alpha == 0.0 {
        return Ok(SeriesResult::exact(Complex::new(0.0, 0.0)));
    }
    let x = t * t;
    let f = gauss_2f1_with((kf - sigma) / 2.0, (kf - sigma + 1.0) / 2.0, Complex::new(kf + 1.0, 0.0), x, cfg)?;
    let mut pre = (sigma * alpha.cosh().ln()).exp();
    if k > 0 {
        let fact = log_gamma(Complex::new(kf + 1.0, 0.0))?.re.exp();
        pre *= pochhammer(-sigma, k as i64)? / (2f64.powi(k as i32) * fact) * t.powi(k as i32);
    }
    let value = clean(pre * f.value, is_real(sigma));
    let err = pre.norm() * f.err_estimate;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow(format!("assoc({sigma}, {m}, {alpha})")));
    }
    Ok(SeriesResult { value, terms_used: f.terms_used, err_estimate: err })
}

/// (1/2π)∫ (cosh α − sinh α cos φ)^σ e^{imφ} dφ by quadrature; the
/// independent path for [`assoc`] and [`zonal`].
pub fn assoc_integral(sigma: Complex, m: i64, alpha: f64, n_points: usize) -> Complex {
    let (c, s) = (alpha.cosh(), alpha.sinh());
    crate::numerics::circle_quadrature(
        |phi| {
            let w = c - s * phi.cos();
            (sigma * w.ln()).exp() * Complex::new(0.0, m as f64 * phi).exp()
        },
        n_points,
    )
}

// Samples of T(boost02(α))eₘ on an N-point half-offset grid.
fn boost_samples(sigma: Complex, m: i64, alpha: f64, n: usize) -> Vec<(f64, Complex)> {
    let (c, s) = (alpha.cosh(), alpha.sinh());
    let h = 2.0 * PI / n as f64;
    (0..n)
        .map(|k| {
            let phi = (k as f64 + 0.5) * h;
            let (sp, cp) = phi.sin_cos();
            let w = c - s * cp;
            // e^{iφ_α} as a unit complex number; no angle unwrapping needed
            let z = Complex::new((c * cp - s) / w, sp / w);
            (phi, (sigma * w.ln()).exp() * z.powi(m as i32))
        })
        .collect()
}

fn project(samples: &[(f64, Complex)], m_out: i64) -> Complex {
    let n = samples.len() as f64;
    samples
        .iter()
        .map(|&(phi, v)| v * Complex::new(0.0, -(m_out as f64) * phi).exp())
        .sum::<Complex>()
        / n
}

const MAX_QUAD: usize = 1 << 18;

/// Column t_{m',m}(boost02(α)) for m' = m_lo..=m_hi, by offset trapezoidal
/// quadrature refined until two successive grids agree to ~1e-13.
pub fn boost_column(sigma: Complex, m_in: i64, alpha: f64, m_lo: i64, m_hi: i64) -> Result<Vec<Complex>> {
    let span = (m_hi - m_lo).unsigned_abs() as usize + m_in.unsigned_abs() as usize;
    let mut n = (64usize).max((4 * (span + m_lo.unsigned_abs() as usize + m_hi.unsigned_abs() as usize)).next_power_of_two());
    let col = |n: usize| {
        let s = boost_samples(sigma, m_in, alpha, n);
        (m_lo..=m_hi).map(|mo| project(&s, mo)).collect::<Vec<_>>()
    };
    let mut prev = col(n);
    while n < MAX_QUAD {
        n *= 2;
        let next = col(n);
        let scale = next.iter().map(|v| v.norm()).fold(1.0, f64::max);
        let diff = next.iter().zip(&prev).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        if diff <= 1e-13 * scale {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NoConvergence { terms: n, residual: f64::NAN })
}

/// t_{m_out, m_in}(g) = e^{−i m_out φ₁} t_{m_out m_in}(boost02(α)) e^{−i m_in φ₂}
/// for g = rotation(φ₁)·boost02(α)·rotation(φ₂).
pub fn matrix_element(sigma: Complex, m_out: i64, m_in: i64, g: &GroupElement) -> Result<Complex> {
    let ca = cartan_decompose(g);
    let phase = Complex::new(0.0, -(m_out as f64) * ca.phi1 - (m_in as f64) * ca.phi2).exp();
    if ca.alpha == 0.0 {
        return Ok(if m_out == m_in { phase } else { Complex::new(0.0, 0.0) });
    }
    let col = boost_column(sigma, m_in, ca.alpha, m_out, m_out)?;
    Ok(phase * col[0])
}

/// Column t_{m',m_in}(g) for m' = −window..=window.
pub fn rep_column(sigma: Complex, m_in: i64, g: &GroupElement, window: i64) -> Result<Vec<Complex>> {
    let ca = cartan_decompose(g);
    let col = if ca.alpha == 0.0 {
        (-window..=window)
            .map(|mo| if mo == m_in { Complex::new(1.0, 0.0) } else { Complex::new(0.0, 0.0) })
            .collect()
    } else {
        boost_column(sigma, m_in, ca.alpha, -window, window)?
    };
    Ok((-window..=window)
        .zip(col)
        .map(|(mo, t)| t * Complex::new(0.0, -(mo as f64) * ca.phi1 - (m_in as f64) * ca.phi2).exp())
        .collect())
}

/// Dense block t_{m'm}(g), |m|, |m'| ≤ window; entry [m'+window][m+window].
pub fn rep_matrix(sigma: Complex, g: &GroupElement, window: i64) -> Result<Vec<Vec<Complex>>> {
    let size = (2 * window + 1) as usize;
    let mut out = vec![vec![Complex::new(0.0, 0.0); size]; size];
    for m in -window..=window {
        let col = rep_column(sigma, m, g, window)?;
        for (i, t) in col.into_iter().enumerate() {
            out[i][(m + window) as usize] = t;
        }
    }
    Ok(out)
}

/// Σ_{m'} |t_{m'm}(boost02(α))|², widening the window around m until the
/// two outermost entries fall below 1e-10 in modulus.
pub fn column_norm_sq(sigma: Complex, m: i64, alpha: f64) -> Result<(f64, i64)> {
    let mut half = 8i64;
    loop {
        let col = boost_column(sigma, m, alpha, m - half, m + half)?;
        let edge = col[0].norm().max(col[col.len() - 1].norm());
        if edge < 1e-10 || half >= 4096 {
            return Ok((col.iter().map(|v| v.norm_sqr()).sum(), half));
        }
        half *= 2;
    }
}

/// Finitely supported vector Σ fₘ eₘ.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FourierVector {
    pub coeffs: BTreeMap<i64, Complex>,
}

impl FourierVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, Complex)>>(pairs: I) -> Self {
        FourierVector { coeffs: pairs.into_iter().collect() }
    }

    pub fn basis(m: i64) -> Self {
        Self::from_pairs([(m, Complex::new(1.0, 0.0))])
    }

    pub fn get(&self, m: i64) -> Complex {
        self.coeffs.get(&m).copied().unwrap_or_default()
    }

    /// Smallest M with every nonzero entry inside [−M, M].
    pub fn window(&self) -> i64 {
        self.coeffs.iter().filter(|(_, v)| v.norm() > 0.0).map(|(m, _)| m.abs()).max().unwrap_or(0)
    }

    /// T(g) applied and truncated to |m'| ≤ window.
    pub fn transform(&self, sigma: Complex, g: &GroupElement, window: i64) -> Result<FourierVector> {
        let mut out = BTreeMap::new();
        for (&m, &fm) in &self.coeffs {
            let col = rep_column(sigma, m, g, window)?;
            for (mo, t) in (-window..=window).zip(col) {
                *out.entry(mo).or_insert(Complex::new(0.0, 0.0)) += t * fm;
            }
        }
        Ok(FourierVector { coeffs: out })
    }
}

/// Invariant Hermitian form with c₀ = 1:
/// 2^{−σ−1}/(√π Γ(σ+1)) Σₘ Φₘ conj(f1ₘ) f2ₘ.
pub fn hermitian_form(f1: &FourierVector, f2: &FourierVector, sigma: f64) -> Result<Complex> {
    let s = Complex::new(sigma, 0.0);
    if is_nonpositive_integer(s + 1.0) {
        return Err(Error::Pole(format!("Gamma({}) in the form prefactor", sigma + 1.0)));
    }
    let pre = 2f64.powf(-sigma - 1.0) / PI.sqrt() * reciprocal_gamma(s + 1.0).re;
    let mut acc = Complex::new(0.0, 0.0);
    for (&m, &a) in &f1.coeffs {
        let b = f2.get(m);
        if a.norm() == 0.0 || b.norm() == 0.0 {
            continue;
        }
        acc += phi_m(s, m)? * a.conj() * b;
    }
    Ok(acc * pre)
}
