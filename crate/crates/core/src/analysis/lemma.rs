use crate::asymptotics::f_of_x;
use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Real};

/// Smallest `x − 1` on the default grid.
pub const DEFAULT_MIN_EXCESS: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaReport<T> {
    pub grid_size: usize,
    /// Largest increase `f(x_{i+1}) − f(x_i)` seen; negative when strictly decreasing.
    pub max_violation: T,
    /// `f(1)`
    pub endpoint_left: T,
    /// `f(x_max)`
    pub endpoint_decay: T,
    pub passed: bool,
}

/// Checks on a geometric grid that `f(x) = ζ(x)/(x²−1)` decreases on
/// `(1, x_max]` and starts from `2^{-2/3}`.
pub fn lemma_check<T: Real>(x_max: T, grid_size: usize) -> Result<LemmaReport<T>> {
    lemma_check_with(x_max, grid_size, lit(DEFAULT_MIN_EXCESS))
}

/// As [`lemma_check`], with the grid's first point at `1 + min_excess`.
pub fn lemma_check_with<T: Real>(x_max: T, grid_size: usize, min_excess: T) -> Result<LemmaReport<T>> {
    if !(x_max > T::one()) || !x_max.is_finite() {
        return Err(Error::domain("x_max", to_f64(x_max), "x_max > 1"));
    }
    if grid_size < 100 {
        return Err(Error::domain("grid_size", grid_size as f64, "grid_size >= 100"));
    }
    let span = x_max - T::one();
    if !(min_excess > T::zero() && min_excess < span) {
        return Err(Error::domain(
            "min_excess",
            to_f64(min_excess),
            "0 < min_excess < x_max - 1",
        ));
    }

    let endpoint_left = f_of_x(T::one())?;
    let log_ratio = (span / min_excess).ln() / from_usize::<T>(grid_size - 1);
    let mut prev = endpoint_left;
    let mut max_violation = T::neg_infinity();
    let mut slack_ok = true;
    let mut last = endpoint_left;
    for i in 0..grid_size {
        let x = if i + 1 == grid_size {
            x_max
        } else {
            T::one() + min_excess * (log_ratio * from_usize(i)).exp()
        };
        let f = f_of_x(x)?;
        let rise = f - prev;
        max_violation = max_violation.max(rise);
        if rise > lit::<T>(2.0) * T::epsilon() * prev.abs() {
            slack_ok = false;
        }
        prev = f;
        last = f;
    }
    let target = lit::<T>(2.0).powf(-lit::<T>(2.0 / 3.0));
    let passed = slack_ok && (endpoint_left - target).abs() <= lit(1e-8);
    Ok(LemmaReport {
        grid_size,
        max_violation,
        endpoint_left,
        endpoint_decay: last,
        passed,
    })
}
