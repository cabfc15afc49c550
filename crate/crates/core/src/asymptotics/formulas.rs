use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureConfig, TunnelingMethod, TunnelingResult};
use crate::scalar::{from_usize, lit, Real};
use crate::specfun::{ai_unchecked, GammaConstants, OscillatorState};

use super::zeta::{excess_of_zeta, f_of_excess, invert};

/// Coefficients of `P_n ≈ C₁ n^{-1/3} − C₂ n^{-1}`, derived from Γ(1/3) and
/// the Airy values at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticCoefficients<T> {
    /// `2/(3^{2/3} Γ(1/3)²) = 2∫₀^∞ Ai²`
    pub c1: T,
    /// `(2/5)∫₀^∞ t Ai² = −(2/15) Ai(0) Ai′(0)`
    pub c2: T,
    /// `F_∞ = 2^{-2/3} ∫₀^∞ Ai²`
    pub f_infinity: T,
}

impl<T: Real> AsymptoticCoefficients<T> {
    pub fn new() -> Self {
        Self::from_constants(&GammaConstants::new())
    }

    pub fn from_constants(g: &GammaConstants<T>) -> Self {
        let two = lit::<T>(2.0);
        AsymptoticCoefficients {
            c1: two * g.airy_square_integral(),
            c2: lit::<T>(0.4) * g.airy_square_first_moment(),
            f_infinity: two.powf(-lit::<T>(2.0 / 3.0)) * g.airy_square_integral(),
        }
    }
}

impl<T: Real> Default for AsymptoticCoefficients<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("n", 0.0, "n >= 1"))
    } else {
        Ok(())
    }
}

/// `C₁ n^{-1/3}`. The error estimate is the size of the first omitted
/// term, `C₂/n`.
pub fn leading_term<T: Real>(n: usize) -> Result<TunnelingResult<T>> {
    require_positive(n)?;
    let k = AsymptoticCoefficients::<T>::new();
    let nf = from_usize::<T>(n);
    Ok(TunnelingResult {
        n,
        value: k.c1 * nf.cbrt().recip(),
        method: TunnelingMethod::Leading,
        err_estimate: k.c2 / nf,
    })
}

/// `C₁ n^{-1/3} − C₂ n^{-1}`. The remainder is `O(n^{-4/3})` with an
/// unknown constant; `C₂ n^{-4/3}` is reported as its scale.
pub fn second_order<T: Real>(n: usize) -> Result<TunnelingResult<T>> {
    require_positive(n)?;
    let k = AsymptoticCoefficients::<T>::new();
    let nf = from_usize::<T>(n);
    Ok(TunnelingResult {
        n,
        value: k.c1 * nf.cbrt().recip() - k.c2 / nf,
        method: TunnelingMethod::SecondOrder,
        err_estimate: k.c2 / (nf * nf.cbrt()),
    })
}

/// `ν^{-4/3}` for the `n`-th state.
fn zeta_scale<T: Real>(n: usize) -> T {
    let nu = OscillatorState::<T>::new(n).nu;
    nu.powf(-lit::<T>(4.0 / 3.0))
}

/// `f_n(t) = ζ/(x²−1)` at the point where `ζ = ν^{-4/3} t`.
pub fn f_n<T: Real>(n: usize, t: T) -> Result<T> {
    if !(t >= T::zero()) {
        return Err(Error::domain("t", crate::scalar::to_f64(t), "t >= 0"));
    }
    let e = excess_of_zeta(zeta_scale::<T>(n) * t)?;
    Ok(f_of_excess(e))
}

/// `F_n = ∫₀^∞ f_n(t) Ai²(t) dt`.
pub fn big_f_n<T: Real>(n: usize, cfg: &QuadratureConfig<T>) -> Result<crate::quadrature::Estimate<T>> {
    require_positive(n)?;
    let scale = zeta_scale::<T>(n);
    integrate_semi_infinite(
        |t: T| {
            let e = invert(scale * t).0;
            let ai = ai_unchecked(t);
            f_of_excess(e) * ai * ai
        },
        T::zero(),
        cfg,
    )
}

/// Tunneling probability from Olver's uniform approximation:
/// `P_n = 4 a_n π ν e^{-ν²/2} ν^{(3ν²−1)/3} ν^{-4/3} F_n` with the error term
/// dropped. Since `|ε| ≤ η·Ai` pointwise, the neglected factor lies in
/// `[(1−η)², (1+η)²]`, which sets the reported error.
pub fn tunneling_olver<T: Real>(n: usize, cfg: &QuadratureConfig<T>) -> Result<TunnelingResult<T>> {
    require_positive(n)?;
    let nu = OscillatorState::<T>::new(n).nu;
    let nu2 = nu * nu;
    let ln_nu = nu.ln();
    let pi = T::PI();
    let ln_a_n = -(pi.ln() / lit(2.0))
        - from_usize::<T>(n) * T::LN_2()
        - crate::specfun::ln_factorial::<T>(n);
    let ln_prefactor = (lit::<T>(4.0) * pi).ln() + ln_a_n + ln_nu - nu2 / lit(2.0)
        + (lit::<T>(3.0) * nu2 - T::one()) / lit(3.0) * ln_nu
        - lit::<T>(4.0 / 3.0) * ln_nu;
    let prefactor = ln_prefactor.exp();
    let big_f = big_f_n(n, cfg)?;
    let eta = super::olver::eps_multiplier(nu);
    let value = prefactor * big_f.value;
    let spread = (T::one() + eta).powi(2) - T::one();
    Ok(TunnelingResult {
        n,
        value,
        method: TunnelingMethod::Olver,
        err_estimate: value * spread + prefactor * big_f.err,
    })
}
