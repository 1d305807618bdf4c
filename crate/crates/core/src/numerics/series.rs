use super::{real, Complex, Config, SeriesResult};
use crate::error::{Error, Result};

// Partial sums are taken at N₀·2^i for i = 0..=LEVELS.
const FIRST_CUTOFF: usize = 16;
const LEVELS: usize = 9;

/// Largest |n| + 1 that [`bilateral_sum_with`] will request under `cfg`.
pub fn bilateral_extent(cfg: &Config) -> usize {
    let mut levels = LEVELS;
    while levels > 1 && 2 * (FIRST_CUTOFF << levels) > cfg.max_terms {
        levels -= 1;
    }
    FIRST_CUTOFF << levels
}

/// Σ_{n∈ℤ} term(n) for terms decaying like |n|^s, Re s < −1.
///
/// Symmetric partial sums at geometrically spaced cutoffs are extrapolated by
/// iterated Richardson elimination of the tail exponents s+1, s, s−1, ….
/// The exponent may be complex; the tail expansion is then taken in the
/// complex powers N^{s+1−j}.
pub fn bilateral_sum<F>(term: F, decay_exponent: impl Into<Complex>) -> Result<SeriesResult>
where
    F: Fn(i64) -> Complex,
{
    bilateral_sum_with(term, decay_exponent, &Config::default())
}

pub fn bilateral_sum_with<F>(
    term: F,
    decay_exponent: impl Into<Complex>,
    cfg: &Config,
) -> Result<SeriesResult>
where
    F: Fn(i64) -> Complex,
{
    let s: Complex = decay_exponent.into();
    if !(s.re < -1.0) {
        return Err(Error::NoConvergence { terms: 0, residual: f64::INFINITY });
    }
    let n_max = bilateral_extent(cfg);
    let levels = (n_max / FIRST_CUTOFF).trailing_zeros() as usize;

    let mut partial = Vec::with_capacity(levels + 1);
    let mut acc = term(0);
    let mut scale = acc.norm();
    let mut next_cut = FIRST_CUTOFF;
    for n in 1..n_max as i64 {
        let pair = term(n) + term(-n);
        acc += pair;
        if (n as usize) < FIRST_CUTOFF {
            scale += pair.norm();
        }
        if n as usize + 1 == next_cut {
            partial.push(acc);
            next_cut *= 2;
        }
    }
    let terms_used = 2 * n_max - 1;

    let mut row = partial;
    let mut diagonal = vec![*row.last().unwrap()];
    for j in 0..levels {
        let f = real(2.0).powc(s + 1.0 - j as f64);
        row = row.windows(2).map(|w| (w[1] - f * w[0]) / (1.0 - f)).collect();
        diagonal.push(*row.last().unwrap());
    }
    let value = diagonal[levels];
    let err = (diagonal[levels] - diagonal[levels - 1]).norm();
    if !value.re.is_finite() || !value.im.is_finite() || err > 1e-6 * value.norm().max(scale) {
        return Err(Error::NoConvergence { terms: terms_used, residual: err });
    }
    Ok(SeriesResult { value, terms_used, err_estimate: err })
}

/// Levin t-transform of the series a₀ + a₁ + ⋯ with remainder estimates
/// ωⱼ = aⱼ and shift β. Entry k−1 of the result uses a₀..=aₖ.
pub fn levin_t(terms: &[Complex], beta: f64) -> Vec<Complex> {
    let mut partial = Vec::with_capacity(terms.len());
    let mut acc = real(0.0);
    for &a in terms {
        acc += a;
        partial.push(acc);
    }
    let mut out = Vec::with_capacity(terms.len().saturating_sub(1));
    for k in 1..terms.len() {
        let mut num = real(0.0);
        let mut den = real(0.0);
        let mut binom = 1.0;
        for j in 0..=k {
            let weight = ((beta + j as f64) / (beta + k as f64)).powi(k as i32 - 1);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let w = terms[j].inv() * (sign * binom * weight);
            num += w * partial[j];
            den += w;
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        out.push(num / den);
    }
    out
}

/// Sum of a slowly converging tail a₀ + a₁ + ⋯, accelerated with the Levin
/// t-transform; the order is picked where successive estimates agree best.
pub fn levin_tail_sum(terms: &[Complex], beta: f64) -> SeriesResult {
    if terms.iter().any(|a| a.norm() == 0.0) || terms.len() < 3 {
        let value = terms.iter().sum();
        return SeriesResult { value, terms_used: terms.len(), err_estimate: 0.0 };
    }
    let est = levin_t(terms, beta);
    let mut best = (est.len() - 1, f64::INFINITY);
    for k in 1..est.len() {
        let d = (est[k] - est[k - 1]).norm();
        if d < best.1 {
            best = (k, d);
        }
    }
    SeriesResult { value: est[best.0], terms_used: best.0 + 2, err_estimate: best.1 }
}
