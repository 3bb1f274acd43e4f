use thiserror::Error;

/// Errors produced by the potential and landscape computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no permittivity defined for surface model {0}")]
    NoPermittivity(&'static str),

    #[error("retarded reflection coefficients undefined for surface model {0}")]
    RetardedUndefined(&'static str),

    #[error("quality factor undefined for surface model {0}")]
    QualityFactorUndefined(&'static str),

    #[error("polarizability pole at omega = {omega:e} rad/s")]
    Pole { omega: f64 },

    #[error("inconsistent sign: evanescent barrier requires blue detuning (got {detuning:e} rad/s)")]
    DetuningSign { detuning: f64 },

    #[error(
        "quadrature did not converge within {subdivisions} subdivisions \
         (estimate {estimate:e}, error bound {error_bound:e})"
    )]
    Quadrature {
        estimate: f64,
        error_bound: f64,
        subdivisions: usize,
    },

    #[error("finite-difference stencil at z = {z:e} m with step {step:e} m crosses the surface")]
    StencilDomain { z: f64, step: f64 },

    #[error("i/o: {0}")]
    Io(String),

    #[error("{operation} failed at z = {z:e} m: {source}")]
    AtPoint {
        operation: &'static str,
        z: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn at(self, operation: &'static str, z: f64) -> Self {
        match self {
            e @ Error::AtPoint { .. } => e,
            e => Error::AtPoint {
                operation,
                z,
                source: Box::new(e),
            },
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
