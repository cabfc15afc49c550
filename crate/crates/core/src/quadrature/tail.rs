use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Real};

use super::{integrate_with_breaks, Estimate, QuadratureConfig, TailStrategy};

// Peak search window [a, a + PROBE_SPAN] and decay search limit a + DECAY_LIMIT.
const PROBE_SPAN: f64 = 5.0;
const PROBE_POINTS: usize = 64;
const DECAY_LIMIT: f64 = 100.0;
const BELOW_RUN: usize = 3;

/// `∫_a^∞ f(x) dx` for an integrand that decays at least exponentially.
///
/// The reduction to a finite interval follows `cfg.tail_strategy`. With
/// truncation the reported error includes an estimate of the discarded
/// remainder.
pub fn integrate_semi_infinite<T, F>(f: F, a: T, cfg: &QuadratureConfig<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    integrate_semi_infinite_with_first_panel(f, a, None, cfg)
}

/// As [`integrate_semi_infinite`], but the first panel `[a, a + w]` is fixed
/// so the adaptive rule cannot step over structure at the left edge.
pub(crate) fn integrate_semi_infinite_with_first_panel<T, F>(
    f: F,
    a: T,
    first_panel: Option<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<Estimate<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    cfg.validate()?;
    if !a.is_finite() {
        return Err(Error::non_finite("a", to_f64(a)));
    }
    match cfg.tail_strategy {
        TailStrategy::Truncation => truncated(&f, a, first_panel, cfg),
        TailStrategy::Substitution => substituted(&f, a, first_panel, cfg),
    }
}

fn truncated<T, F>(f: &F, a: T, first_panel: Option<T>, cfg: &QuadratureConfig<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    let h = lit::<T>(PROBE_SPAN) / from_usize(PROBE_POINTS);
    let limit = a + lit(DECAY_LIMIT);
    let at = |i: usize| a + h * from_usize(i);

    let (mut peak, mut peak_idx) = (T::zero(), 0usize);
    for i in 0..=PROBE_POINTS {
        let v = f(at(i)).abs();
        if v > peak {
            peak = v;
            peak_idx = i;
        }
    }
    if peak == T::zero() {
        return Err(Error::TruncationFailure {
            start: to_f64(a),
            limit: to_f64(a + lit(PROBE_SPAN)),
        });
    }

    let threshold = peak * lit::<T>(10.0).powf(-cfg.tail_cutoff_decades);
    let mut below = 0usize;
    let mut i = peak_idx + 1;
    let cut = loop {
        let x = at(i);
        if x > limit {
            return Err(Error::TruncationFailure {
                start: to_f64(a),
                limit: to_f64(limit),
            });
        }
        if f(x).abs() <= threshold {
            below += 1;
            if below == BELOW_RUN {
                break i;
            }
        } else {
            below = 0;
        }
        i += 1;
    };
    let b = at(cut);

    let f_b = f(b).abs();
    let f_prev = f(at(cut - 1)).abs();
    let remainder = if f_b == T::zero() {
        T::zero()
    } else if f_prev > f_b {
        f_b * h / (f_prev / f_b).ln()
    } else {
        f_b * lit(DECAY_LIMIT)
    };

    let mut breaks = vec![a];
    if let Some(w) = first_panel {
        if a + w < b {
            breaks.push(a + w);
        }
    }
    breaks.push(b);
    let mut est = integrate_with_breaks(f, &breaks, cfg)?;
    est.err = est.err + remainder;
    Ok(est)
}

fn substituted<T, F>(f: &F, a: T, first_panel: Option<T>, cfg: &QuadratureConfig<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    let g = |u: T| {
        let one_minus = T::one() - u;
        f(a + u / one_minus) / (one_minus * one_minus)
    };
    let mut breaks = vec![T::zero()];
    if let Some(w) = first_panel {
        breaks.push(w / (T::one() + w));
    }
    breaks.push(T::one());
    integrate_with_breaks(g, &breaks, cfg)
}
