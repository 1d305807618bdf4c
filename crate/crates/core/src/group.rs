//! SO₀(2,1) as 3×3 real matrices preserving η = diag(1, −1, −1).
//!
//! Coordinates are ordered (p₀, p₁, p₂). Cone points are written
//! k = ω(1, sin φ, cos φ); `rotation(φ)` advances the parameter φ, and
//! `boost02(α)` is oriented so that its inverse moves cone points by the
//! circle action ω_α = cosh α − sinh α cos φ.

use std::f64::consts::PI;
use std::ops::Mul;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;
pub type Mat3 = Matrix3<f64>;

pub fn eta() -> Mat3 {
    Mat3::from_diagonal(&Vec3::new(1.0, -1.0, -1.0))
}

/// p₀q₀ − p₁q₁ − p₂q₂
pub fn minkowski(p: &Vec3, q: &Vec3) -> f64 {
    p[0] * q[0] - p[1] * q[1] - p[2] * q[2]
}

pub fn wrap_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(2.0 * PI);
    if w >= 2.0 * PI {
        0.0
    } else {
        w
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    m: Mat3,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { m: Mat3::identity() }
    }

    /// Accepts a matrix that is pseudo-orthogonal, unimodular and
    /// orthochronous up to a tolerance scaled by its largest entry.
    pub fn from_matrix(m: Mat3) -> Result<Self> {
        let g = GroupElement { m };
        let scale = m.amax().max(1.0);
        if !m.iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("matrix has non-finite entries".into()));
        }
        if g.pseudo_orthogonality_defect() > 1e-10 * scale * scale {
            return Err(Error::Domain("matrix does not preserve the form diag(1,-1,-1)".into()));
        }
        if (m.determinant() - 1.0).abs() > 1e-10 * scale.powi(3) || m[(0, 0)] <= 0.0 {
            return Err(Error::Domain("matrix is not in the identity component".into()));
        }
        Ok(g)
    }

    pub(crate) fn from_matrix_unchecked(m: Mat3) -> Self {
        GroupElement { m }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        GroupElement { m: self.m * other.m }
    }

    /// η gᵀ η, exact for pseudo-orthogonal g.
    pub fn inverse(&self) -> GroupElement {
        let e = eta();
        GroupElement { m: e * self.m.transpose() * e }
    }

    pub fn act(&self, v: &Vec3) -> Vec3 {
        self.m * v
    }

    /// Largest entry of |gᵀηg − η|.
    pub fn pseudo_orthogonality_defect(&self) -> f64 {
        let e = eta();
        (self.m.transpose() * e * self.m - e).amax()
    }

    /// Largest entry of |g − h|.
    pub fn distance(&self, other: &GroupElement) -> f64 {
        (self.m - other.m).amax()
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.multiply(&rhs)
    }
}

impl Mul<&GroupElement> for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.multiply(rhs)
    }
}

pub fn multiply(a: &GroupElement, b: &GroupElement) -> GroupElement {
    a.multiply(b)
}

pub fn inverse(g: &GroupElement) -> GroupElement {
    g.inverse()
}

pub fn act(g: &GroupElement, v: &Vec3) -> Vec3 {
    g.act(v)
}

/// Rotation in the (p₁, p₂) plane taking the cone parameter φ₀ to φ₀ + φ.
pub fn rotation(phi: f64) -> GroupElement {
    let (s, c) = phi.sin_cos();
    GroupElement::from_matrix_unchecked(Mat3::new(1.0, 0.0, 0.0, 0.0, c, s, 0.0, -s, c))
}

/// Hyperbolic rotation in the (p₀, p₂) plane; (1,0,0) ↦ (cosh α, 0, sinh α).
pub fn boost02(alpha: f64) -> GroupElement {
    let (c, s) = (alpha.cosh(), alpha.sinh());
    GroupElement::from_matrix_unchecked(Mat3::new(c, 0.0, s, 0.0, 1.0, 0.0, s, 0.0, c))
}

/// Hyperbolic rotation in the (p₀, p₁) plane; (1,0,0) ↦ (cosh β, sinh β, 0).
pub fn boost01(beta: f64) -> GroupElement {
    let (c, s) = (beta.cosh(), beta.sinh());
    GroupElement::from_matrix_unchecked(Mat3::new(c, s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0))
}

/// Null-rotation family moving the cone point (1/2, 0, 1/2) along the
/// stereographic chart: B(b)(1/2,0,1/2) = ((1+b²)/2, b, (1−b²)/2).
pub fn horo_b(b: f64) -> GroupElement {
    let q = 0.5 * b * b;
    GroupElement::from_matrix_unchecked(Mat3::new(
        1.0 + q,
        b,
        q,
        b,
        1.0,
        b,
        -q,
        -b,
        1.0 - q,
    ))
}

/// Null-rotation family fixing (1/2, 0, 1/2).
pub fn horo_z(z: f64) -> GroupElement {
    let q = 0.5 * z * z;
    GroupElement::from_matrix_unchecked(Mat3::new(
        1.0 + q,
        z,
        -q,
        z,
        1.0,
        -z,
        q,
        z,
        1.0 - q,
    ))
}

/// g = rotation(phi1) · boost02(alpha) · rotation(phi2)
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanAngles {
    pub phi1: f64,
    pub alpha: f64,
    pub phi2: f64,
}

impl CartanAngles {
    pub fn compose(&self) -> GroupElement {
        rotation(self.phi1) * boost02(self.alpha) * rotation(self.phi2)
    }
}

// Below this sinh α the two rotation angles are not separable.
const CARTAN_DEGENERATE: f64 = 1e-13;

/// Cartan decomposition. At α = 0 the whole rotation is folded into phi1.
pub fn cartan_decompose(g: &GroupElement) -> CartanAngles {
    let m = g.matrix();
    // sinh α from the first column is accurate near the identity, where
    // arccosh of m₀₀ would lose half the digits.
    let sh = m[(1, 0)].hypot(m[(2, 0)]);
    let ch = m[(0, 0)].max(1.0);
    let alpha = if sh < 1.0 { sh.asinh() } else { ch.acosh() };
    if sh < CARTAN_DEGENERATE {
        return CartanAngles { phi1: wrap_angle(m[(1, 2)].atan2(m[(1, 1)])), alpha: 0.0, phi2: 0.0 };
    }
    CartanAngles {
        phi1: wrap_angle(m[(1, 0)].atan2(m[(2, 0)])),
        alpha,
        phi2: wrap_angle((-m[(0, 1)]).atan2(m[(0, 2)])),
    }
}

/// Circle action of boost02(α): returns (ω_α, φ_α) with
/// ω_α = cosh α − sinh α cos φ, sin φ_α = sin φ/ω_α,
/// cos φ_α = (cosh α cos φ − sinh α)/ω_α, φ_α ∈ [0, 2π).
pub fn circle_action(alpha: f64, phi: f64) -> (f64, f64) {
    let (c, s) = (alpha.cosh(), alpha.sinh());
    let (sp, cp) = phi.sin_cos();
    let omega = c - s * cp;
    let phi_new = wrap_angle(sp.atan2(c * cp - s));
    (omega, phi_new)
}

/// ω(1, sin φ, cos φ)
pub fn cone_point(omega: f64, phi: f64) -> Vec3 {
    let (s, c) = phi.sin_cos();
    Vec3::new(omega, omega * s, omega * c)
}

/// Inverse of [`cone_point`] for p₀ > 0.
pub fn cone_readout(v: &Vec3) -> (f64, f64) {
    (v[0], wrap_angle(v[1].atan2(v[2])))
}

/// Action of g on the circle of directions through g⁻¹: (ω, φ') with
/// g⁻¹·(1, sin φ, cos φ) = ω(1, sin φ', cos φ').
pub fn circle_action_of(g: &GroupElement, phi: f64) -> (f64, f64) {
    cone_readout(&g.inverse().act(&cone_point(1.0, phi)))
}
