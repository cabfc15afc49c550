//! Normalized Hermite functions `ψ_n(x) = π^{-1/4} (2ⁿ n!)^{-1/2} H_n(x) e^{-x²/2}`.
//!
//! The recurrence runs on ψ directly, so the normalization constant is never
//! formed. The Gaussian factor is carried separately as a logarithm and the
//! running pair is renormalized whenever it grows large, which keeps every
//! intermediate representable for `n` up to at least 10⁶ and `|x| ≤ 2√(2n+1)`.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Real};

use super::gamma::ln_factorial;

/// Quantum number together with the turning-point coordinate `ν = √(2n+1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorState<T> {
    pub n: usize,
    pub nu: T,
}

impl<T: Real> OscillatorState<T> {
    pub fn new(n: usize) -> Self {
        OscillatorState {
            n,
            nu: (from_usize::<T>(2 * n) + T::one()).sqrt(),
        }
    }

    /// The classical turning points `(−ν, ν)`.
    pub fn turning_points(&self) -> (T, T) {
        (-self.nu, self.nu)
    }
}

/// `ψ_n(x) = mantissa · exp(log_scale)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledPsi<T> {
    pub mantissa: T,
    pub log_scale: T,
}

impl<T: Real> ScaledPsi<T> {
    pub fn value(self) -> T {
        if self.mantissa == T::zero() {
            return T::zero();
        }
        self.mantissa * self.log_scale.exp()
    }
}

pub(crate) fn psi_scaled<T: Real>(n: usize, x: T) -> ScaledPsi<T> {
    let two = lit::<T>(2.0);
    let mut log_scale = -x * x / two - T::PI().ln() / lit(4.0);
    let mut prev = T::one();
    if n == 0 {
        return ScaledPsi {
            mantissa: prev,
            log_scale,
        };
    }
    let mut cur = two.sqrt() * x;
    let limit = T::max_value().sqrt().sqrt();
    for k in 2..=n {
        let kf = from_usize::<T>(k);
        let next = (two / kf).sqrt() * x * cur - ((kf - T::one()) / kf).sqrt() * prev;
        prev = cur;
        cur = next;
        let mag = cur.abs();
        if mag > limit {
            prev = prev / mag;
            cur = cur / mag;
            log_scale = log_scale + mag.ln();
        }
    }
    ScaledPsi {
        mantissa: cur,
        log_scale,
    }
}

fn check_x<T: Real>(x: T) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::non_finite("x", to_f64(x)))
    }
}

/// Normalized oscillator eigenfunction `ψ_n(x)`.
pub fn hermite_psi<T: Real>(n: usize, x: T) -> Result<T> {
    check_x(x)?;
    Ok(psi_scaled(n, x).value())
}

/// Probability density `ψ_n(x)²`; never negative.
pub fn hermite_psi_squared<T: Real>(n: usize, x: T) -> Result<T> {
    check_x(x)?;
    Ok(psi_squared_unchecked(n, x))
}

#[inline]
pub(crate) fn psi_squared_unchecked<T: Real>(n: usize, x: T) -> T {
    let v = psi_scaled(n, x).value();
    (v * v).max(T::zero())
}

/// Sign and natural logarithm of `|e^{-y²/2} H_n(y)|`, the unnormalized
/// weighted Hermite polynomial, assembled without ever forming `H_n` or `n!`.
pub fn ln_weighted_hermite<T: Real>(n: usize, y: T) -> Result<(T, T)> {
    check_x(y)?;
    let s = psi_scaled(n, y);
    let sign = if s.mantissa < T::zero() {
        -T::one()
    } else {
        T::one()
    };
    let ln_norm = T::PI().ln() / lit(4.0)
        + (from_usize::<T>(n) * T::LN_2() + ln_factorial::<T>(n)) / lit(2.0);
    Ok((sign, s.mantissa.abs().ln() + s.log_scale + ln_norm))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_M14: f64 = 0.751_125_544_464_942_5;

    #[test]
    fn closed_forms_at_origin() {
        assert!((hermite_psi(0, 0.0_f64).unwrap() - PI_M14).abs() < 1e-15);
        assert_eq!(hermite_psi(1, 0.0_f64).unwrap(), 0.0);
        let psi2 = hermite_psi(2, 0.0_f64).unwrap();
        assert!((psi2 - -0.53112596601359845724).abs() < 1e-15);
        let sq = hermite_psi_squared(0, 0.0_f64).unwrap();
        assert!((sq - 0.564_189_583_547_756_3).abs() < 1e-15);
        assert_eq!(hermite_psi_squared(1, 0.0_f64).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_finite_x() {
        assert!(hermite_psi(3, f64::NAN).is_err());
        assert!(hermite_psi_squared(3, f64::INFINITY).is_err());
    }

    #[test]
    fn parity_is_bit_exact() {
        for n in [0usize, 1, 2, 7, 30, 151, 1000] {
            for x in [0.3_f64, 1.7, 5.25, 20.0, 44.9] {
                let p = hermite_psi(n, x).unwrap();
                let m = hermite_psi(n, -x).unwrap();
                let expect = if n % 2 == 0 { p } else { -p };
                assert_eq!(m.to_bits(), expect.to_bits(), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn no_overflow_at_large_index() {
        let n = 1_000_000;
        let st = OscillatorState::<f64>::new(n);
        for x in [0.0, 0.5 * st.nu, st.nu, 1.5 * st.nu, 2.0 * st.nu] {
            let v = hermite_psi(n, x).unwrap();
            assert!(v.is_finite(), "x={x}");
        }
        // Airy scale at the turning point: |ψ_n(ν)| ≈ 2^{1/4} n^{-1/12} Ai(0)
        let at_turn = hermite_psi(n, st.nu).unwrap().abs();
        let approx = 2f64.powf(0.25) * (n as f64).powf(-1.0 / 12.0) * 0.3550280538878172;
        assert!((at_turn / approx - 1.0).abs() < 1e-3, "{at_turn} vs {approx}");
    }

    #[test]
    fn turning_points_are_symmetric() {
        let st = OscillatorState::<f64>::new(40);
        assert_eq!(st.turning_points(), (-9.0, 9.0));
        let st = OscillatorState::<f64>::new(12345);
        assert!(((st.nu * st.nu) - 24691.0).abs() <= 4.0 * f64::EPSILON * 24691.0);
    }

    #[test]
    fn log_weighted_matches_direct_small_n() {
        // e^{-y²/2} H_3(y), H_3 = 8y³ − 12y
        let y = 1.3_f64;
        let direct = (-y * y / 2.0).exp() * (8.0 * y.powi(3) - 12.0 * y);
        let (s, l) = ln_weighted_hermite(3, y).unwrap();
        assert!((s * l.exp() - direct).abs() < 1e-13 * direct.abs());
    }
}
