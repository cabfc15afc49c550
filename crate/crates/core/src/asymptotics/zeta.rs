//! The turning-point map `ζ(x) = ((3/4)x√(x²−1) − (3/4)arccosh x)^{2/3}` on
//! `x ≥ 1`, its inverse, and `f(x) = ζ(x)/(x²−1)`.
//!
//! Everything is computed in terms of the excess `e = x − 1`. Close to the
//! turning point the two terms of the bracket cancel to `O(e^{3/2})`, so
//! for `e < ZETA_SERIES_CUTOFF` the power series
//! `ζ = 2^{1/3} e Σ c_k e^k` is used instead.

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

/// Excess `x − 1` below which the series path is taken.
pub const ZETA_SERIES_CUTOFF: f64 = 1e-3;

/// Coefficients of `ζ/(2^{1/3} e)` in powers of `e = x − 1`.
/// Exact rationals; see `series_coefficients_reproduce_direct_formula`.
pub(crate) const ZETA_SERIES: [f64; 9] = [
    1.0,
    1.0 / 10.0,
    -2.0 / 175.0,
    37.0 / 15_750.0,
    -1_849.0 / 3_031_875.0,
    71_237.0 / 394_143_750.0,
    -3_627_836.0 / 62_077_640_625.0,
    30_316_679.0 / 1_507_599_843_750.0,
    -39_984_347_342.0 / 5_514_046_428_515_625.0,
];

const NEWTON_MAX_STEPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaRegime {
    SeriesNearOne,
    Direct,
}

/// A point `(x, ζ(x))` of the map together with the path that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPoint<T> {
    pub x: T,
    pub zeta: T,
    pub regime: ZetaRegime,
}

fn series_sum<T: Real>(e: T) -> T {
    ZETA_SERIES
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * e + lit(c))
}

/// `ζ` as a function of the excess `e = x − 1 ≥ 0`.
pub(crate) fn zeta_of_excess<T: Real>(e: T) -> (T, ZetaRegime) {
    if e < lit(ZETA_SERIES_CUTOFF) {
        let cbrt2 = lit::<T>(2.0).cbrt();
        (cbrt2 * e * series_sum(e), ZetaRegime::SeriesNearOne)
    } else {
        let x = T::one() + e;
        let root = (e * (e + lit(2.0))).sqrt();
        let acosh = (e + root).ln_1p();
        let bracket = lit::<T>(0.75) * (x * root - acosh);
        (bracket.powf(lit(2.0 / 3.0)), ZetaRegime::Direct)
    }
}

/// `f = ζ/(x²−1)` as a function of the excess, with the limit `2^{-2/3}` at 0.
pub(crate) fn f_of_excess<T: Real>(e: T) -> T {
    if e < lit(ZETA_SERIES_CUTOFF) {
        lit::<T>(2.0).cbrt() * series_sum(e) / (e + lit(2.0))
    } else {
        zeta_of_excess(e).0 / (e * (e + lit(2.0)))
    }
}

fn check_x<T: Real>(x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::non_finite("x", to_f64(x)));
    }
    if x < T::one() {
        return Err(Error::domain("x", to_f64(x), "x >= 1"));
    }
    Ok(x - T::one())
}

pub fn zeta_of_x<T: Real>(x: T) -> Result<ZetaPoint<T>> {
    let e = check_x(x)?;
    let (zeta, regime) = zeta_of_excess(e);
    Ok(ZetaPoint { x, zeta, regime })
}

/// `dζ/dx = √((x²−1)/ζ) = f(x)^{-1/2}`.
pub fn zeta_derivative<T: Real>(x: T) -> Result<T> {
    let e = check_x(x)?;
    Ok(f_of_excess(e).sqrt().recip())
}

/// `f(x) = ζ(x)/(x²−1)`, equal to `2^{-2/3}` at `x = 1`.
pub fn f_of_x<T: Real>(x: T) -> Result<T> {
    let e = check_x(x)?;
    Ok(f_of_excess(e))
}

/// Inverse of [`zeta_of_x`].
pub fn x_of_zeta<T: Real>(zeta: T) -> Result<T> {
    Ok(T::one() + excess_of_zeta(zeta)?)
}

/// `x − 1` for the point with the given `ζ`, keeping full relative
/// precision near the turning point.
pub fn excess_of_zeta<T: Real>(zeta: T) -> Result<T> {
    if !zeta.is_finite() {
        return Err(Error::non_finite("zeta", to_f64(zeta)));
    }
    if zeta < T::zero() {
        return Err(Error::domain("zeta", to_f64(zeta), "zeta >= 0"));
    }
    let (e, converged) = invert(zeta);
    let residual = (zeta_of_excess(e).0 - zeta).abs();
    let tol = lit::<T>(1e-12).max(lit::<T>(16.0) * T::epsilon()) * zeta.max(T::one());
    if !converged && residual > tol {
        return Err(Error::IterationLimit {
            target: to_f64(zeta),
            last: to_f64(T::one() + e),
        });
    }
    Ok(e)
}

/// Safeguarded Newton on `ζ(e) = target`; returns the iterate and whether
/// the step size collapsed.
pub(crate) fn invert<T: Real>(target: T) -> (T, bool) {
    if target == T::zero() {
        return (T::zero(), true);
    }
    let cbrt2 = lit::<T>(2.0).cbrt();
    let mut e = if target < T::one() {
        let lin = target / cbrt2;
        lin - lin * lin / lit(10.0)
    } else {
        // ζ^{3/2} ≈ (3/4) x² for large x
        (lit::<T>(4.0 / 3.0) * target.powf(lit(1.5))).sqrt() - T::one()
    };
    e = e.max(T::min_positive_value());

    let mut lo = T::zero();
    let mut hi = e;
    while zeta_of_excess(hi).0 < target {
        lo = hi;
        hi = hi * lit(2.0) + T::one();
    }

    let half = lit::<T>(0.5);
    for _ in 0..NEWTON_MAX_STEPS {
        let phi = zeta_of_excess(e).0 - target;
        if phi == T::zero() {
            return (e, true);
        }
        if phi < T::zero() {
            lo = e;
        } else {
            hi = e;
        }
        let slope = f_of_excess(e).sqrt().recip();
        let mut next = e - phi / slope;
        if !(next > lo && next < hi) {
            next = half * (lo + hi);
        }
        let step = (next - e).abs();
        e = next;
        if step <= lit::<T>(2.0) * T::epsilon() * e || hi - lo <= T::epsilon() * hi {
            return (e, true);
        }
    }
    (e, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turning_point() {
        let p = zeta_of_x(1.0_f64).unwrap();
        assert_eq!(p.zeta, 0.0);
        assert_eq!(p.regime, ZetaRegime::SeriesNearOne);
        assert_eq!(x_of_zeta(0.0_f64).unwrap(), 1.0);
        assert!((f_of_x(1.0_f64).unwrap() - 2f64.powf(-2.0 / 3.0)).abs() < 1e-16);
    }

    #[test]
    fn linear_slope_at_turning_point() {
        let e = 1e-6_f64;
        let z = zeta_of_x(1.0 + e).unwrap().zeta;
        assert!((z / e / 2f64.cbrt() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn reference_values() {
        // 40-digit references
        let c = 1f64.cosh();
        let p = zeta_of_x(c).unwrap();
        assert_eq!(p.regime, ZetaRegime::Direct);
        assert!((p.zeta - 0.7193181829066326826).abs() < 1e-14);
        assert!((f_of_x(c).unwrap() - 0.52083071827864477399).abs() < 1e-14);
        for (x, f, z) in [
            (1.1_f64, 0.6058948355240270021, 0.12723791546004578345),
            (2.0, 0.45795942073469274664, 1.3738782622040782399),
            (10.0, 0.17543130218053290899, 17.36769891587275799),
            (50.0, 0.060763496155581993823, 151.84797689279940256),
        ] {
            assert!((f_of_x(x).unwrap() / f - 1.0).abs() < 1e-14, "f({x})");
            assert!((zeta_of_x(x).unwrap().zeta / z - 1.0).abs() < 1e-14, "zeta({x})");
        }
    }

    #[test]
    fn series_coefficients_reproduce_direct_formula() {
        // Away from cancellation the direct formula is accurate; the series must
        // match it there. Truncation of the 9-term series is ~c₉e⁹.
        for e in [0.02_f64, 0.05, 0.1] {
            let x = 1.0 + e;
            let root = (e * (e + 2.0)).sqrt();
            let direct = (0.75 * (x * root - x.acosh())).powf(2.0 / 3.0);
            let series = 2f64.cbrt() * e * series_sum(e);
            assert!((series / direct - 1.0).abs() < 1e-13, "e={e}");
        }
    }

    #[test]
    fn continuous_across_series_cutoff() {
        let below = ZETA_SERIES_CUTOFF * (1.0 - 1e-12);
        let (zb, rb) = zeta_of_excess(below);
        let (za, ra) = zeta_of_excess(ZETA_SERIES_CUTOFF);
        assert_eq!((rb, ra), (ZetaRegime::SeriesNearOne, ZetaRegime::Direct));
        assert!((za / zb - 1.0).abs() < 1e-12);
        assert!((f_of_excess(ZETA_SERIES_CUTOFF) / f_of_excess(below) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_examples() {
        let c = 1f64.cosh();
        let z = zeta_of_x(c).unwrap().zeta;
        assert!((x_of_zeta(z).unwrap() - c).abs() < 1e-10);
        let x = x_of_zeta(1e-8_f64).unwrap();
        assert!((x - (1.0 + 2f64.powf(-1.0 / 3.0) * 1e-8)).abs() < 1e-14);
        for z in [1e-300_f64, 1e-3, 0.9, 1.1, 40.0, 1e6] {
            let e = excess_of_zeta(z).unwrap();
            let back = zeta_of_excess(e).0;
            assert!((back - z).abs() <= 1e-12 * z.max(1.0), "z={z}");
        }
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(zeta_of_x(0.99_f64).is_err());
        assert!(f_of_x(f64::NAN).is_err());
        assert!(x_of_zeta(-1e-9_f64).is_err());
        assert!(zeta_derivative(0.5_f64).is_err());
    }
}
