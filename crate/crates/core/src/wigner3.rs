//! Wigner coefficients of SO₀(2,1): values of the invariant trilinear form
//! on canonical basis vectors, normalized to 1 at m = (0, 0, 0).
//!
//! Each kernel factor [1 − cos ψ]^β / Γ(β + 1/2) has Fourier coefficients
//! 2^β/√π · B_{|k|}(β) with B_k(β) = (−β)_k / Γ(k + β + 1). The selection
//! rule leaves a single bilateral sum over n, with k = n + m₃, n, n − m₁ for
//! β₁, β₂, β₃. After normalization
//!
//!   W(m) = Γ(−σ₁)Γ(−σ₂)Γ(−σ₃)/Γ(1 + β₁ + β₂ + β₃) · Σₙ B_{|n+m₃|}(β₁) B_{|n|}(β₂) B_{|n−m₁|}(β₃),
//!
//! using 1 + βᵢ + βⱼ = −σₖ. Terms decay like |n|^{σ₁+σ₂+σ₃}.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{circle_action, GroupElement};
use crate::numerics::{
    bilateral_extent, bilateral_sum_with, circle_quadrature, is_nonpositive_integer, log_gamma,
    pochhammer, reciprocal_gamma, torus_quadrature_2d_offset, Complex, Config, SeriesResult,
};
use crate::rep::rep_column;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaTriple {
    pub b1: Complex,
    pub b2: Complex,
    pub b3: Complex,
}

impl BetaTriple {
    pub fn as_array(&self) -> [Complex; 3] {
        [self.b1, self.b2, self.b3]
    }

    pub fn sum(&self) -> Complex {
        self.b1 + self.b2 + self.b3
    }
}

/// β₁ = (σ₁−σ₂−σ₃−1)/2 and cyclic.
pub fn betas(s1: Complex, s2: Complex, s3: Complex) -> BetaTriple {
    BetaTriple {
        b1: (s1 - s2 - s3 - 1.0) / 2.0,
        b2: (s2 - s3 - s1 - 1.0) / 2.0,
        b3: (s3 - s1 - s2 - 1.0) / 2.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerQuery {
    pub sigmas: [Complex; 3],
    pub ms: [i64; 3],
}

impl WignerQuery {
    pub fn new(sigmas: [Complex; 3], ms: [i64; 3]) -> Self {
        WignerQuery { sigmas, ms }
    }

    pub fn betas(&self) -> BetaTriple {
        betas(self.sigmas[0], self.sigmas[1], self.sigmas[2])
    }
}

// [1 − cos ψ]^β with 1 − cos ψ = 2 sin²(ψ/2).
fn one_minus_cos_pow(psi: f64, beta: Complex) -> Result<Complex> {
    let x = 2.0 * (0.5 * psi).sin().powi(2);
    if x == 0.0 {
        return if beta == Complex::new(0.0, 0.0) {
            Ok(Complex::new(1.0, 0.0))
        } else if beta.re > 0.0 {
            Ok(Complex::new(0.0, 0.0))
        } else {
            Err(Error::SingularPoint(format!("coincident angles with exponent {beta}")))
        };
    }
    Ok((beta * x.ln()).exp())
}

/// Invariant kernel with unit constant:
/// Π [1 − cos(φᵢ − φⱼ)]^{βₖ} / Γ(βₖ + 1/2) over the pairs (1,2)→β₃, (2,3)→β₁, (3,1)→β₂.
pub fn kernel_k3(b: &BetaTriple, phi1: f64, phi2: f64, phi3: f64) -> Result<Complex> {
    let f3 = one_minus_cos_pow(phi1 - phi2, b.b3)? * reciprocal_gamma(b.b3 + 0.5);
    let f1 = one_minus_cos_pow(phi2 - phi3, b.b1)? * reciprocal_gamma(b.b1 + 0.5);
    let f2 = one_minus_cos_pow(phi3 - phi1, b.b2)? * reciprocal_gamma(b.b2 + 0.5);
    Ok(f1 * f2 * f3)
}

/// Relative residual of K(φ_α) = Π ω_α(φᵢ)^{σᵢ+1} K(φ) under boost02(α).
pub fn kernel_functional_residual(sigmas: [Complex; 3], alpha: f64, phis: [f64; 3]) -> Result<f64> {
    let b = betas(sigmas[0], sigmas[1], sigmas[2]);
    let moved: Vec<(f64, f64)> = phis.iter().map(|&p| circle_action(alpha, p)).collect();
    let lhs = kernel_k3(&b, moved[0].1, moved[1].1, moved[2].1)?;
    let mut rhs = kernel_k3(&b, phis[0], phis[1], phis[2])?;
    for i in 0..3 {
        rhs *= ((sigmas[i] + 1.0) * moved[i].0.ln()).exp();
    }
    Ok((lhs - rhs).norm() / rhs.norm().max(f64::MIN_POSITIVE))
}

/// Γ(−σ₁)Γ(−σ₂)Γ(−σ₃)/Γ(1 + β₁ + β₂ + β₃), the factor that puts W(0,0,0) at 1.
fn normalization(sigmas: &[Complex; 3], b: &BetaTriple) -> Result<Complex> {
    let mut l = -log_gamma(b.sum() + 1.0)?;
    for s in sigmas {
        l += log_gamma(-*s)?;
    }
    Ok(l.exp())
}

/// Unit-constant normalization of the defining triple integral:
/// 2^{(Σσ+3)/2} π^{3/2} Γ(−σ₁)Γ(−σ₂)Γ(−σ₃)/Γ(1 + Σβ).
pub fn normalization_constant(sigmas: [Complex; 3]) -> Result<Complex> {
    let b = betas(sigmas[0], sigmas[1], sigmas[2]);
    let ssum: Complex = sigmas.iter().sum();
    Ok(Complex::new(2.0, 0.0).powc((ssum + 3.0) / 2.0) * PI.powf(1.5) * normalization(&sigmas, &b)?)
}

fn fourier_ratio(beta: Complex, k: usize) -> Complex {
    let kf = k as f64;
    if k <= 64 {
        return pochhammer(-beta, k as i64).unwrap_or_default() * reciprocal_gamma(beta + kf + 1.0);
    }
    if is_nonpositive_integer(-beta) || is_nonpositive_integer(beta + kf + 1.0) {
        return Complex::new(0.0, 0.0);
    }
    match (log_gamma(kf - beta), log_gamma(-beta), log_gamma(beta + kf + 1.0)) {
        (Ok(a), Ok(b), Ok(c)) => (a - b - c).exp(),
        _ => Complex::new(0.0, 0.0),
    }
}

/// Convergence gate shared by both closed-form paths.
pub fn check_gate(sigmas: &[Complex; 3]) -> Result<Complex> {
    let s: Complex = sigmas.iter().sum();
    if !(s.re < -1.0) {
        return Err(Error::NoConvergence { terms: 0, residual: f64::INFINITY });
    }
    Ok(s)
}

/// Fixed σ-triple with cached Fourier ratios, for evaluating many m-triples.
#[derive(Debug, Clone)]
pub struct WignerEngine {
    sigmas: [Complex; 3],
    betas: BetaTriple,
    decay: Complex,
    norm: Complex,
    ratios: [Vec<Complex>; 3],
    cfg: Config,
}

impl WignerEngine {
    pub fn new(sigmas: [Complex; 3]) -> Result<Self> {
        Self::with_config(sigmas, Config::default())
    }

    pub fn with_config(sigmas: [Complex; 3], cfg: Config) -> Result<Self> {
        let decay = check_gate(&sigmas)?;
        let b = betas(sigmas[0], sigmas[1], sigmas[2]);
        let norm = normalization(&sigmas, &b)?;
        let len = bilateral_extent(&cfg) + 64;
        let ratios = b.as_array().map(|beta| {
            let mut v = Vec::with_capacity(len);
            for k in 0..len.min(64) {
                v.push(fourier_ratio(beta, k));
            }
            for k in 64..len {
                let prev: Complex = v[k - 1];
                v.push(prev * (k as f64 - 1.0 - beta) / (beta + k as f64));
            }
            v
        });
        Ok(WignerEngine { sigmas, betas: b, decay, norm, ratios, cfg })
    }

    pub fn sigmas(&self) -> [Complex; 3] {
        self.sigmas
    }

    pub fn betas(&self) -> BetaTriple {
        self.betas
    }

    fn ratio(&self, i: usize, k: i64) -> Complex {
        let k = k.unsigned_abs() as usize;
        match self.ratios[i].get(k) {
            Some(v) => *v,
            None => fourier_ratio(self.betas.as_array()[i], k),
        }
    }

    /// Normalized Wigner coefficient by the symmetric bilateral sum.
    pub fn coefficient(&self, ms: [i64; 3]) -> Result<SeriesResult> {
        if ms.iter().sum::<i64>() != 0 {
            return Ok(SeriesResult::exact(Complex::new(0.0, 0.0)));
        }
        let [m1, _, m3] = ms;
        let term = |n: i64| self.ratio(0, n + m3) * self.ratio(1, n) * self.ratio(2, n - m1);
        let s = bilateral_sum_with(term, self.decay, &self.cfg)?;
        Ok(SeriesResult {
            value: s.value * self.norm,
            terms_used: s.terms_used,
            err_estimate: s.err_estimate * self.norm.norm(),
        })
    }

    /// The same coefficient through the ₃H₃ packaging
    /// (−1)^{m₁} · norm · (−β₁)_{m₃}/(1+β₃)_{m₁} / [Γ(β₂+1)Γ(β₃−m₁+1)Γ(β₁+m₃+1)]
    ///   · ₃H₃(−β₃−m₁, −β₁+m₃, −β₂; β₃−m₁+1, β₁+m₃+1, β₂+1; 1).
    pub fn coefficient_3h3(&self, ms: [i64; 3]) -> Result<SeriesResult> {
        if ms.iter().sum::<i64>() != 0 {
            return Ok(SeriesResult::exact(Complex::new(0.0, 0.0)));
        }
        let [m1, _, m3] = ms;
        let BetaTriple { b1, b2, b3 } = self.betas;
        let (m1f, m3f) = (m1 as f64, m3 as f64);
        let top = [-b3 - m1f, -b1 + m3f, -b2];
        let bottom = [b3 - m1f + 1.0, b1 + m3f + 1.0, b2 + 1.0];
        let sign = if m1.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let pre = self.norm
            * sign
            * reciprocal_gamma(b2 + 1.0)
            * reciprocal_gamma(b3 - m1f + 1.0)
            * reciprocal_gamma(b1 + m3f + 1.0)
            * pochhammer(-b1, m3)?
            / pochhammer(b3 + 1.0, m1)?;

        let extent = bilateral_extent(&self.cfg) as i64;
        let terms = bilateral_h33_terms(&top, &bottom, extent)?;
        let h = bilateral_sum_with(|n| terms[(n + extent) as usize], self.decay, &self.cfg)?;
        let value = pre * h.value;
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Pole("3H3 packaging is singular for this query".into()));
        }
        Ok(SeriesResult { value, terms_used: h.terms_used, err_estimate: h.err_estimate * pre.norm() })
    }
}

// Π (aᵢ)ₙ/(bᵢ)ₙ for n = −extent..=extent by two-sided ratio recurrences.
fn bilateral_h33_terms(top: &[Complex; 3], bottom: &[Complex; 3], extent: i64) -> Result<Vec<Complex>> {
    let len = (2 * extent + 1) as usize;
    let mut t = vec![Complex::new(0.0, 0.0); len];
    let mid = extent as usize;
    t[mid] = Complex::new(1.0, 0.0);
    for n in 0..extent {
        let nf = n as f64;
        let mut r = Complex::new(1.0, 0.0);
        for i in 0..3 {
            r *= (top[i] + nf) / (bottom[i] + nf);
        }
        t[mid + n as usize + 1] = t[mid + n as usize] * r;
    }
    for n in 0..extent {
        // term(−n−1) = term(−n) · Π (bᵢ − n − 1)/(aᵢ − n − 1)
        let nf = -(n as f64) - 1.0;
        let mut r = Complex::new(1.0, 0.0);
        for i in 0..3 {
            r *= (bottom[i] + nf) / (top[i] + nf);
        }
        t[mid - n as usize - 1] = t[mid - n as usize] * r;
    }
    if t.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::Pole("3H3 term hits a Pochhammer pole".into()));
    }
    Ok(t)
}

/// Normalized Wigner coefficient; exactly 0 off the selection rule.
pub fn wigner_coefficient(q: &WignerQuery) -> Result<SeriesResult> {
    wigner_coefficient_with(q, &Config::default())
}

pub fn wigner_coefficient_with(q: &WignerQuery, cfg: &Config) -> Result<SeriesResult> {
    if q.ms.iter().sum::<i64>() != 0 {
        return Ok(SeriesResult::exact(Complex::new(0.0, 0.0)));
    }
    WignerEngine::with_config(q.sigmas, *cfg)?.coefficient(q.ms)
}

/// The ₃H₃ form of [`wigner_coefficient`].
pub fn wigner_coefficient_3h3(q: &WignerQuery) -> Result<SeriesResult> {
    wigner_coefficient_3h3_with(q, &Config::default())
}

pub fn wigner_coefficient_3h3_with(q: &WignerQuery, cfg: &Config) -> Result<SeriesResult> {
    if q.ms.iter().sum::<i64>() != 0 {
        return Ok(SeriesResult::exact(Complex::new(0.0, 0.0)));
    }
    WignerEngine::with_config(q.sigmas, *cfg)?.coefficient_3h3(q.ms)
}

/// Quadrature value of the defining triple integral.
///
/// Translation invariance pins φ₃ = 0: the (u, v) = (φ₁−φ₃, φ₂−φ₃) average of
/// K(u, v, 0) e^{i(m₁u + m₂v)} times the φ₃ average of e^{i(m₁+m₂+m₃)φ₃}.
/// The v nodes sit a quarter step off the u nodes so the diagonal u = v, where
/// the (1,2) factor is singular, is never sampled.
pub fn wigner_oracle(q: &WignerQuery, n_points: usize) -> Result<Complex> {
    let b = q.betas();
    if b.as_array().iter().any(|x| x.re <= -0.5) {
        return Err(Error::Domain("oracle needs Re beta > -1/2 for integrability".into()));
    }
    let c = normalization_constant(q.sigmas)?;
    let [m1, m2, m3] = q.ms;
    let msum = (m1 + m2 + m3) as f64;
    let phase = circle_quadrature(|t| Complex::new(0.0, msum * t).exp(), n_points);
    if msum != 0.0 {
        return Ok(c * phase);
    }
    let pre = reciprocal_gamma(b.b1 + 0.5) * reciprocal_gamma(b.b2 + 0.5) * reciprocal_gamma(b.b3 + 0.5);
    let real_exponents = b.as_array().iter().all(|x| x.im == 0.0);
    let (e1, e2, e3) = (b.b1, b.b2, b.b3);
    let avg = torus_quadrature_2d_offset(
        |u, v| {
            let x3 = 2.0 * (0.5 * (u - v)).sin().powi(2);
            let x1 = 2.0 * (0.5 * v).sin().powi(2);
            let x2 = 2.0 * (0.5 * u).sin().powi(2);
            let k = if real_exponents {
                Complex::new((e3.re * x3.ln() + e1.re * x1.ln() + e2.re * x2.ln()).exp(), 0.0)
            } else {
                (e3 * x3.ln() + e1 * x1.ln() + e2 * x2.ln()).exp()
            };
            k * Complex::new(0.0, m1 as f64 * u + m2 as f64 * v).exp()
        },
        n_points,
        (0.5, 0.75),
    );
    Ok(c * pre * avg * phase)
}

/// |W(m) − Σ_{|m'ᵢ| ≤ M, Σm' = 0} W(m') Π t^{σᵢ}_{m'ᵢ mᵢ}(g)|.
pub fn covariance_residual(q: &WignerQuery, g: &GroupElement, big_m: i64) -> Result<f64> {
    covariance_residual_with(q, g, big_m, &Config::default())
}

pub fn covariance_residual_with(
    q: &WignerQuery,
    g: &GroupElement,
    big_m: i64,
    cfg: &Config,
) -> Result<f64> {
    let mmax = q.ms.iter().map(|m| m.abs()).max().unwrap_or(0);
    if big_m < mmax + 5 {
        return Err(Error::Domain(format!("truncation M = {big_m} must be at least {}", mmax + 5)));
    }
    let engine = WignerEngine::with_config(q.sigmas, *cfg)?;
    let lhs = engine.coefficient(q.ms)?.value;
    let cols: Vec<Vec<Complex>> = (0..3)
        .map(|i| rep_column(q.sigmas[i], q.ms[i], g, big_m))
        .collect::<Result<_>>()?;
    let idx = |m: i64| (m + big_m) as usize;
    let rows: Vec<Result<Complex>> = (-big_m..=big_m)
        .into_par_iter()
        .map(|a| {
            let mut acc = Complex::new(0.0, 0.0);
            for b in -big_m..=big_m {
                let c = -a - b;
                if c.abs() > big_m {
                    continue;
                }
                let t = cols[0][idx(a)] * cols[1][idx(b)] * cols[2][idx(c)];
                if t.norm() == 0.0 {
                    continue;
                }
                acc += engine.coefficient([a, b, c])?.value * t;
            }
            Ok(acc)
        })
        .collect();
    let mut rhs = Complex::new(0.0, 0.0);
    for r in rows {
        rhs += r?;
    }
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{boost02, rotation};

    fn r(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    #[test]
    fn beta_examples() {
        let b = betas(r(-0.5), r(-0.5), r(-0.5));
        assert!(b.as_array().iter().all(|x| (x - r(-0.25)).norm() < 1e-15));
        let b = betas(r(-1.8), r(-1.8), r(-1.8));
        assert!(b.as_array().iter().all(|x| (x - r(0.4)).norm() < 1e-15));
        let s = [Complex::new(-0.3, 1.0), Complex::new(-0.9, -0.2), Complex::new(-0.6, 0.4)];
        let b = betas(s[0], s[1], s[2]);
        assert!((b.sum() + (s[0] + s[1] + s[2] + 3.0) / 2.0).norm() < 1e-15);
    }

    #[test]
    fn kernel_examples() {
        let zero = BetaTriple { b1: r(0.0), b2: r(0.0), b3: r(0.0) };
        let k = kernel_k3(&zero, 0.3, 1.0, 2.0).unwrap();
        assert!((k - r(PI.powf(-1.5))).norm() < 1e-15);
        let b = betas(r(-0.7), Complex::new(-0.5, 0.8), r(-1.1));
        let a = kernel_k3(&b, 0.2, 1.9, 4.0).unwrap();
        let s = kernel_k3(&b, 0.2 + 0.77, 1.9 + 0.77, 4.0 + 0.77).unwrap();
        assert!((a - s).norm() < 1e-13 * a.norm());
        let neg = betas(r(-0.5), r(-0.5), r(-0.5));
        assert!(matches!(kernel_k3(&neg, 1.0, 1.0, 2.0), Err(Error::SingularPoint(_))));
    }

    #[test]
    fn functional_equation() {
        let s = [Complex::new(-0.5, 0.3), r(-0.8), Complex::new(-1.2, -0.4)];
        let res = kernel_functional_residual(s, 0.9, [0.4, 2.5, 5.1]).unwrap();
        assert!(res < 1e-12, "{res}");
    }

    #[test]
    fn normalization_and_selection() {
        let s = [r(-1.8); 3];
        let w = wigner_coefficient(&WignerQuery::new(s, [0, 0, 0])).unwrap();
        assert!((w.value - 1.0).norm() < 1e-10);
        let w = wigner_coefficient(&WignerQuery::new(s, [1, 1, 1])).unwrap();
        assert_eq!(w.value, r(0.0));
    }

    #[test]
    fn known_real_values() {
        let e = WignerEngine::new([r(-1.8); 3]).unwrap();
        let v = e.coefficient([1, -1, 0]).unwrap().value;
        assert!((v.re + 2.0 / 9.0).abs() < 1e-11, "{v}");
        let v = e.coefficient([2, -3, 1]).unwrap().value;
        assert!((v.re - 0.027210884353741825).abs() < 1e-11, "{v}");
    }

    #[test]
    fn two_packagings_agree() {
        let s = [Complex::new(-0.5, 0.7), Complex::new(-0.5, -0.2), Complex::new(-0.5, 1.1)];
        let e = WignerEngine::new(s).unwrap();
        for ms in [[0, 0, 0], [1, -1, 0], [2, -3, 1], [-2, 0, 2]] {
            let a = e.coefficient(ms).unwrap().value;
            let b = e.coefficient_3h3(ms).unwrap().value;
            assert!((a - b).norm() < 1e-10, "{ms:?}: {a} vs {b}");
        }
    }

    #[test]
    fn gate() {
        let q = WignerQuery::new([r(-0.2), r(-0.3), r(-0.4)], [0, 0, 0]);
        assert!(matches!(wigner_coefficient(&q), Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn oracle_off_selection_rule() {
        let q = WignerQuery::new([r(-1.8); 3], [1, 1, 0]);
        assert!(wigner_oracle(&q, 64).unwrap().norm() < 1e-10);
        let q = WignerQuery::new([r(-1.5), r(-0.2), r(-0.2)], [0, 0, 0]);
        assert!(matches!(wigner_oracle(&q, 64), Err(Error::Domain(_))));
    }

    #[test]
    fn covariance_trivial_group_elements() {
        let s = [Complex::new(-0.5, 0.3), Complex::new(-0.5, -0.7), Complex::new(-0.5, 0.4)];
        let q = WignerQuery::new(s, [1, -1, 0]);
        assert!(covariance_residual(&q, &GroupElement::identity(), 6).unwrap() < 1e-12);
        assert!(covariance_residual(&q, &rotation(0.9), 6).unwrap() < 1e-10);
        assert!(matches!(covariance_residual(&q, &boost02(0.1), 3), Err(Error::Domain(_))));
    }
}
