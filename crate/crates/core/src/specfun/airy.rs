//! Airy function `Ai` and its derivative on `t ≥ −2`.
//!
//! Two branches:
//!
//! * Maclaurin series `Ai(t) = Ai(0)·F(t) + Ai′(0)·G(t)`, summed in
//!   double-double. For positive `t` the two halves grow like `Bi(t)` while
//!   their difference decays like `Ai(t)`, so the extra precision absorbs a
//!   cancellation of up to `e^{(4/3)t^{3/2}}`.
//! * The large-argument expansion
//!   `Ai(t) ~ e^{−ζ}/(2√π t^{1/4}) Σ (−1)^k u_k ζ^{−k}`, `ζ = (2/3)t^{3/2}`,
//!   truncated at its smallest term.
//!
//! The switch point is where the optimally truncated expansion reaches
//! working precision, `ζ ≈ −0.46 ln ε` (t ≈ 8.5 for `f64`, ≈ 4.9 for `f32`).
//! Beyond that point the series would lose more than ε²·e^{2ζ} ≈ ε.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Real};

use super::dd::Dd;

const AI0: (f64, f64) = (0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
const AI0_PRIME: (f64, f64) = (-0.258_819_403_792_806_8, 2.522_243_111_610_832e-17);

/// Lower end of the supported domain.
pub const AIRY_MIN_ARG: f64 = -2.0;

const MAX_SERIES_TERMS: usize = 200;
const MAX_ASYMPTOTIC_TERMS: usize = 40;

/// Branch that produced an [`AiryValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AiryMethod {
    MaclaurinSeries,
    AsymptoticExpansion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue<T> {
    pub t: T,
    pub value: T,
    pub method: AiryMethod,
    /// Absolute error estimate.
    pub err_estimate: T,
}

/// Argument above which the asymptotic expansion is used.
pub fn airy_switch_point<T: Real>() -> T {
    let zeta = -lit::<T>(0.46) * T::epsilon().ln();
    (lit::<T>(1.5) * zeta).powf(lit(2.0 / 3.0))
}

fn check<T: Real>(t: T) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::non_finite("t", to_f64(t)));
    }
    if t < lit(AIRY_MIN_ARG) {
        return Err(Error::domain("t", to_f64(t), "t >= -2"));
    }
    Ok(())
}

/// `Ai(t)` with the branch used and an absolute error estimate.
pub fn airy_ai<T: Real>(t: T) -> Result<AiryValue<T>> {
    check(t)?;
    Ok(eval(t, Kind::Value))
}

/// `Ai′(t)`.
pub fn airy_ai_prime<T: Real>(t: T) -> Result<T> {
    check(t)?;
    Ok(eval(t, Kind::Derivative).value)
}

/// `Ai(t)` forced onto the Maclaurin branch, for cross-checking the switch.
/// Accuracy degrades like `ε²e^{(4/3)t^{3/2}}` for large positive `t`.
pub fn airy_ai_series<T: Real>(t: T) -> AiryValue<T> {
    let (value, err_estimate) = maclaurin(t, Kind::Value);
    AiryValue {
        t,
        value,
        method: AiryMethod::MaclaurinSeries,
        err_estimate,
    }
}

/// `Ai(t)` forced onto the asymptotic branch; meaningful only for `t > 0`.
pub fn airy_ai_asymptotic<T: Real>(t: T) -> AiryValue<T> {
    let (value, err_estimate) = asymptotic(t, Kind::Value);
    AiryValue {
        t,
        value,
        method: AiryMethod::AsymptoticExpansion,
        err_estimate,
    }
}

/// `Ai(t)` for arguments already known to be in range.
#[inline]
pub(crate) fn ai_unchecked<T: Real>(t: T) -> T {
    eval(t, Kind::Value).value
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Value,
    Derivative,
}

fn eval<T: Real>(t: T, kind: Kind) -> AiryValue<T> {
    let (value, err_estimate, method) = if t <= airy_switch_point() {
        let (v, e) = maclaurin(t, kind);
        (v, e, AiryMethod::MaclaurinSeries)
    } else {
        let (v, e) = asymptotic(t, kind);
        (v, e, AiryMethod::AsymptoticExpansion)
    };
    AiryValue {
        t,
        value,
        method,
        err_estimate,
    }
}

/// Sums `a0·ΣF + a1·ΣG` (or the derivative series) in double-double.
fn maclaurin<T: Real>(t: T, kind: Kind) -> (T, T) {
    let a0 = Dd::<T>::from_f64_pair(AI0.0, AI0.1);
    let a1 = Dd::<T>::from_f64_pair(AI0_PRIME.0, AI0_PRIME.1);
    let t_dd = Dd::new(t);
    let t3 = t_dd.mul_real(t).mul_real(t);
    let tiny = T::epsilon() * T::epsilon();

    // (F, G) leading terms and the per-step factor denominators.
    let (mut f, mut g) = match kind {
        Kind::Value => (Dd::new(T::one()), t_dd),
        Kind::Derivative => ((t_dd * t_dd).div_real(lit(2.0)), Dd::new(T::one())),
    };
    let mut f_sum = f;
    let mut g_sum = g;
    let mut magnitude = f.abs() + g.abs();
    for k in 0..MAX_SERIES_TERMS {
        let k3 = from_usize::<T>(3 * k);
        let (fd, gd) = match kind {
            Kind::Value => (
                (k3 + lit(2.0)) * (k3 + lit(3.0)),
                (k3 + lit(3.0)) * (k3 + lit(4.0)),
            ),
            // F′ starts at k = 1, so its k-th step uses 3(k+1)(3(k+1)+2)
            Kind::Derivative => (
                (k3 + lit(3.0)) * (k3 + lit(5.0)),
                (k3 + T::one()) * (k3 + lit(3.0)),
            ),
        };
        f = (f * t3).div_real(fd);
        g = (g * t3).div_real(gd);
        f_sum = f_sum + f;
        g_sum = g_sum + g;
        magnitude = magnitude + f.abs() + g.abs();
        let sum_mag = f_sum.hi.abs() + g_sum.hi.abs();
        if f.hi.abs() + g.hi.abs() <= tiny * sum_mag {
            break;
        }
    }
    let value = (a0 * f_sum + a1 * g_sum).to_real();
    let err = T::epsilon() * value.abs() + lit::<T>(32.0) * tiny * magnitude.hi;
    (value, err)
}

fn asymptotic<T: Real>(t: T, kind: Kind) -> (T, T) {
    let zeta = lit::<T>(2.0 / 3.0) * t * t.sqrt();
    let inv = zeta.recip();
    let mut u = T::one();
    let mut term = T::one();
    let mut sum = T::one();
    let mut dropped = T::zero();
    for k in 0..MAX_ASYMPTOTIC_TERMS {
        let kf = from_usize::<T>(k);
        let six_k = lit::<T>(6.0) * kf;
        u = u * (six_k + T::one()) * (six_k + lit(3.0)) * (six_k + lit(5.0))
            / (lit::<T>(216.0) * (kf + T::one()) * (lit::<T>(2.0) * kf + T::one()));
        let coeff = match kind {
            Kind::Value => u,
            // v_k = −(6k+1)/(6k−1)·u_k with k → k+1
            Kind::Derivative => -u * (six_k + lit(7.0)) / (six_k + lit(5.0)),
        };
        let next = coeff * inv.powi(k as i32 + 1);
        let next = if k % 2 == 0 { -next } else { next };
        dropped = next.abs();
        if dropped >= term.abs() || dropped <= T::epsilon() * sum.abs() * lit(0.5) {
            break;
        }
        sum = sum + next;
        term = next;
    }
    let two_sqrt_pi = lit::<T>(2.0) * T::PI().sqrt();
    let q = t.sqrt().sqrt();
    let pre = (-zeta).exp() / two_sqrt_pi;
    let pre = match kind {
        Kind::Value => pre / q,
        Kind::Derivative => -pre * q,
    };
    let value = pre * sum;
    if value == T::zero() {
        return (value, T::zero());
    }
    let err = pre.abs() * dropped + T::epsilon() * value.abs() * (zeta + lit(4.0));
    (value, err)
}

/// Closed-form anchors for `Ai` and the Γ constants entering the asymptotic
/// tunneling coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaConstants<T> {
    pub gamma_one_third: T,
    pub gamma_two_thirds: T,
    /// `Ai(0) = 3^{-2/3}/Γ(2/3)`
    pub ai_zero: T,
    /// `Ai′(0) = −3^{-1/3}/Γ(1/3)`
    pub ai_prime_zero: T,
}

impl<T: Real> GammaConstants<T> {
    pub fn new() -> Self {
        let third = lit::<T>(1.0 / 3.0);
        let g13 = super::gamma::gamma(third);
        let g23 = super::gamma::gamma(lit::<T>(2.0 / 3.0));
        let three = lit::<T>(3.0);
        GammaConstants {
            gamma_one_third: g13,
            gamma_two_thirds: g23,
            ai_zero: three.powf(-lit::<T>(2.0 / 3.0)) / g23,
            ai_prime_zero: -three.powf(-third) / g13,
        }
    }

    /// `∫₀^∞ Ai²(t) dt = 1/(3^{2/3} Γ(1/3)²)`
    pub fn airy_square_integral(&self) -> T {
        T::one() / (lit::<T>(3.0).powf(lit(2.0 / 3.0)) * self.gamma_one_third.powi(2))
    }

    /// `∫₀^∞ t Ai²(t) dt = −Ai(0) Ai′(0) / 3`
    pub fn airy_square_first_moment(&self) -> T {
        -self.ai_zero * self.ai_prime_zero / lit(3.0)
    }
}

impl<T: Real> Default for GammaConstants<T> {
    fn default() -> Self {
        Self::new()
    }
}
