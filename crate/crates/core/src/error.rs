use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures reported by the numerical routines.
///
/// Values are carried as `f64` whatever the working scalar type so that the
/// error type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument `{name}` must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("argument `{name}` = {value} outside the domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(&'static str),

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (best estimate {value:e} ± {err:e})"
    )]
    NonConvergence {
        value: f64,
        err: f64,
        subdivisions: usize,
    },

    #[error("integrand shows no decay on [{start}, {limit}]")]
    TruncationFailure { start: f64, limit: f64 },

    #[error("inversion of zeta = {target:e} did not converge (last x = {last})")]
    IterationLimit { target: f64, last: f64 },
}

impl Error {
    pub(crate) fn non_finite(name: &'static str, value: f64) -> Self {
        Error::NonFinite { name, value }
    }

    pub(crate) fn domain(name: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            domain,
        }
    }
}
