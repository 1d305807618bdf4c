use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Γ-function (or a Pochhammer factor) was evaluated at a pole.
    #[error("pole: {0}")]
    Pole(String),

    #[error("no convergence after {terms} terms (residual {residual:e})")]
    NoConvergence { terms: usize, residual: f64 },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    /// A kernel with a negative exponent was evaluated on a coincident pair.
    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("result is not representable: {0}")]
    Overflow(String),

    #[error("momentum is not on a supported orbit: {0}")]
    OutOfOrbit(String),

    #[error("point is outside the chart domain: {0}")]
    OutOfChart(String),

    /// The Wigner rotation does not fix the base point; a convention bug upstream.
    #[error("Wigner rotation does not fix the base point (deviation {0:e})")]
    StabilizerMismatch(f64),

    #[error("representation label does not match the orbit: {0}")]
    LabelOrbitMismatch(String),

    #[error("unsupported orbit case: {0}")]
    UnsupportedCase(String),

    /// Null momentum on the lower light cone.
    #[error("ambiguous orbit classification: {0}")]
    AmbiguousClass(String),
}

impl Error {
    /// Stable snake_case tag, one per variant.
    pub fn status(&self) -> &'static str {
        match self {
            Error::Pole(_) => "pole",
            Error::NoConvergence { .. } => "no_convergence",
            Error::Domain(_) => "domain_error",
            Error::SingularPoint(_) => "singular_point",
            Error::Overflow(_) => "overflow",
            Error::OutOfOrbit(_) => "out_of_orbit",
            Error::OutOfChart(_) => "out_of_chart",
            Error::StabilizerMismatch(_) => "stabilizer_mismatch",
            Error::LabelOrbitMismatch(_) => "label_orbit_mismatch",
            Error::UnsupportedCase(_) => "unsupported_case",
            Error::AmbiguousClass(_) => "ambiguous_class",
        }
    }
}
