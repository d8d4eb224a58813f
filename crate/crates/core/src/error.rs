use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A Bessel evaluation was requested outside the supported envelope, or
    /// its result is not representable as a finite, normal `f64`.
    #[error("Bessel evaluation out of domain: order={order}, x={x} ({reason})")]
    BesselDomain {
        order: f64,
        x: f64,
        reason: &'static str,
    },

    /// An iterative special-function kernel failed to converge.
    #[error("{what} did not converge for order={order}, x={x}")]
    NoConvergence {
        what: &'static str,
        order: f64,
        x: f64,
    },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid solver option: {0}")]
    InvalidOption(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
