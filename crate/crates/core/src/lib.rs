//! Representation theory of the pseudo-orthogonal group SO₀(2,1) and the
//! inhomogeneous group ISO(2,1).
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: complex Γ, Pochhammer symbols, the Gauss ₂F₁ series,
//!   bilateral-series summation with tail extrapolation, and offset
//!   trapezoidal rules on the circle and the torus.
//! - [`group`]: the 3×3 matrix realisation of SO₀(2,1), its one-parameter
//!   subgroups, the Cartan decomposition and the boost action on the circle.
//! - [`rep`]: series classification, invariant Hermitian forms, the Fourier
//!   expansion of `(1 − cos ψ)^λ`, zonal and associated spherical functions
//!   and canonical-basis matrix elements.
//! - [`wigner3`]: the invariant trilinear kernel and the Wigner coefficients
//!   of SO₀(2,1), with an independent quadrature oracle and the covariance
//!   check.
//! - [`iso21`]: semidirect multiplication, characters, orbit classification,
//!   Wigner operators, Wigner rotations and induced-representation
//!   multipliers of ISO(2,1).
//! - [`verify`]: the numbered verification suites shared by the acceptance
//!   tests and the `so21 verify` command.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod group;
pub mod iso21;
pub mod numerics;
pub mod rep;
pub mod verify;
pub mod wigner3;

pub use error::{Error, Result};
pub use numerics::{Complex, SeriesResult};
