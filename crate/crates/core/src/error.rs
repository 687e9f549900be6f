use crate::constants::Unit;

/// Failures raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range {range}")]
    Domain {
        what: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("cannot convert {from:?} to {to:?}: dimension mismatch")]
    DimensionMismatch { from: Unit, to: Unit },
    #[error("root is not bracketed by [{lo}, {hi}]")]
    NotBracketed { lo: f64, hi: f64 },
    #[error("{0} did not converge")]
    NoConvergence(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64, range: &'static str) -> Error {
    Error::Domain { what, value, range }
}
