use crate::error::Result;
use crate::scalar::{lit, Real};
use crate::specfun::{psi_squared_unchecked, OscillatorState};

use super::{integrate_semi_infinite_with_first_panel, QuadratureConfig};

/// How a [`TunnelingResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TunnelingMethod {
    Exact,
    Leading,
    SecondOrder,
    Olver,
}

impl TunnelingMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            TunnelingMethod::Exact => "exact",
            TunnelingMethod::Leading => "leading",
            TunnelingMethod::SecondOrder => "second-order",
            TunnelingMethod::Olver => "olver",
        }
    }
}

/// Probability mass of the `n`-th eigenstate beyond its turning points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TunnelingResult<T> {
    pub n: usize,
    pub value: T,
    pub method: TunnelingMethod,
    pub err_estimate: T,
}

/// `P_n = 2∫_ν^∞ ψ_n(x)² dx` with `ν = √(2n+1)`.
///
/// The first panel is pinned to width `ν^{-1/3}`, below the Airy-scale
/// boundary layer at the turning point.
pub fn tunneling_exact<T: Real>(n: usize, cfg: &QuadratureConfig<T>) -> Result<TunnelingResult<T>> {
    let state = OscillatorState::<T>::new(n);
    let first = state.nu.powf(-lit::<T>(1.0 / 3.0));
    let est = integrate_semi_infinite_with_first_panel(
        |x| psi_squared_unchecked(n, x),
        state.nu,
        Some(first),
        cfg,
    )?;
    let two = lit::<T>(2.0);
    Ok(TunnelingResult {
        n,
        value: (two * est.value).max(T::zero()).min(T::one()),
        method: TunnelingMethod::Exact,
        err_estimate: two * est.err,
    })
}
