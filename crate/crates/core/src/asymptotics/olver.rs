//! Olver's uniform approximation
//! `e^{-ν²x²/2} H_n(νx) = c_n (ζ/(x²−1))^{1/4} (Ai(ν^{4/3}ζ) + ε(x))`, `x ≥ 1`,
//! with `|ε| ≤ 1.36(e^{0.09/ν²} − 1) Ai(ν^{4/3}ζ)`.
//!
//! `c_n` overflows long before `n` gets interesting, so it is kept as a
//! logarithm; `rhs_value` is only finite for moderate `n`.

use crate::error::Result;
use crate::scalar::{lit, Real};
use crate::specfun::{ai_unchecked, ln_weighted_hermite, OscillatorState};

use super::zeta::{f_of_excess, zeta_of_x};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlverApprox<T> {
    pub n: usize,
    pub x: T,
    pub zeta: T,
    /// `ln c_n`
    pub ln_cn: T,
    /// `(ζ/(x²−1))^{1/4}`, equal to `2^{-1/6}` at `x = 1`.
    pub prefactor: T,
    /// `Ai(ν^{4/3} ζ)`
    pub airy: T,
    /// `c_n · prefactor · airy`
    pub rhs_value: T,
    /// Bound on `|ε(x)|`.
    pub eps_bound: T,
}

/// `1.36(e^{0.09/ν²} − 1)`, the relative size of the error envelope.
pub fn eps_multiplier<T: Real>(nu: T) -> T {
    lit::<T>(1.36) * (lit::<T>(0.09) / (nu * nu)).exp_m1()
}

/// `ln c_n = ½ ln 2π − ν²/4 + ((3ν² − 1)/6) ln ν`.
pub fn ln_olver_cn<T: Real>(nu: T) -> T {
    let nu2 = nu * nu;
    (lit::<T>(2.0) * T::PI()).ln() / lit(2.0) - nu2 / lit(4.0)
        + (lit::<T>(3.0) * nu2 - T::one()) / lit(6.0) * nu.ln()
}

pub fn olver_approx<T: Real>(n: usize, x: T) -> Result<OlverApprox<T>> {
    if n == 0 {
        return Err(crate::Error::domain("n", 0.0, "n >= 1"));
    }
    let point = zeta_of_x(x)?;
    let nu = OscillatorState::<T>::new(n).nu;
    let ln_cn = ln_olver_cn(nu);
    let prefactor = f_of_excess(x - T::one()).sqrt().sqrt();
    let airy = ai_unchecked(nu.powf(lit(4.0 / 3.0)) * point.zeta);
    let rhs_value = ln_cn.exp() * prefactor * airy;
    Ok(OlverApprox {
        n,
        x,
        zeta: point.zeta,
        ln_cn,
        prefactor,
        airy,
        rhs_value,
        eps_bound: eps_multiplier(nu) * airy,
    })
}

/// Comparison of the approximation against the exact left-hand side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlverCheck<T> {
    pub approx: OlverApprox<T>,
    /// `e^{-ν²x²/2} H_n(νx) / (c_n · prefactor)`, i.e. `Ai + ε`.
    pub scaled_exact: T,
    /// `|ε|` recovered from the exact value.
    pub deviation: T,
}

impl<T: Real> OlverCheck<T> {
    pub fn within_bound(&self) -> bool {
        self.deviation <= self.approx.eps_bound
    }
}

/// Evaluates the exact side in log-space through the normalized Hermite
/// recurrence and measures `|ε(x)|`.
pub fn olver_check<T: Real>(n: usize, x: T) -> Result<OlverCheck<T>> {
    let approx = olver_approx(n, x)?;
    let nu = OscillatorState::<T>::new(n).nu;
    let (sign, ln_abs) = ln_weighted_hermite(n, nu * x)?;
    let scaled_exact = sign * (ln_abs - approx.ln_cn - approx.prefactor.ln()).exp();
    Ok(OlverCheck {
        approx,
        scaled_exact,
        deviation: (scaled_exact - approx.airy).abs(),
    })
}
