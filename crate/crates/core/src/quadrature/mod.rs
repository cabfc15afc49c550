//! Adaptive Gauss–Kronrod quadrature on finite and semi-infinite intervals,
//! and the exact tunneling probability built on it.

mod kronrod;
mod tail;
mod tunneling;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

use kronrod::{gk21, Panel};

pub use tail::integrate_semi_infinite;
pub(crate) use tail::integrate_semi_infinite_with_first_panel;
pub use tunneling::{tunneling_exact, TunnelingMethod, TunnelingResult};

/// How `[a, ∞)` is reduced to a finite problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailStrategy {
    /// Cut the interval where the integrand has decayed by
    /// `tail_cutoff_decades` below its near-edge peak.
    #[default]
    Truncation,
    /// Map `x = a + u/(1−u)` onto `[0, 1)`.
    Substitution,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    /// Upper bound on the number of panels.
    pub max_subdivisions: usize,
    pub tail_cutoff_decades: T,
    pub tail_strategy: TailStrategy,
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: lit(1e-11),
            abs_tol: lit(1e-15),
            max_subdivisions: 2000,
            tail_cutoff_decades: lit(20.0),
            tail_strategy: TailStrategy::Truncation,
        }
    }
}

impl<T: Real> QuadratureConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero()) {
            return Err(Error::InvalidConfig("rel_tol must be positive"));
        }
        if !(self.abs_tol > T::zero()) {
            return Err(Error::InvalidConfig("abs_tol must be positive"));
        }
        if self.max_subdivisions < 10 {
            return Err(Error::InvalidConfig("max_subdivisions must be at least 10"));
        }
        if !(self.tail_cutoff_decades > T::zero()) {
            return Err(Error::InvalidConfig("tail_cutoff_decades must be positive"));
        }
        Ok(())
    }

    pub fn with_tail_strategy(mut self, strategy: TailStrategy) -> Self {
        self.tail_strategy = strategy;
        self
    }

    fn tolerance(&self, value: T) -> T {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Integral value with its absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub err: T,
    /// Number of bisections performed.
    pub subdivisions: usize,
}

struct ByError<T>(Panel<T>);

impl<T: Real> PartialEq for ByError<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: Real> Eq for ByError<T> {}
impl<T: Real> PartialOrd for ByError<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for ByError<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .err
            .partial_cmp(&other.0.err)
            .unwrap_or(Ordering::Equal)
    }
}

fn check_endpoint<T: Real>(name: &'static str, v: T) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::non_finite(name, to_f64(v)))
    }
}

/// `∫_a^b f(x) dx` by globally adaptive 21-point Gauss–Kronrod bisection.
///
/// Converged when the summed error estimate is at most
/// `max(abs_tol, rel_tol·|value|)`. Exhausting `max_subdivisions` panels
/// yields [`Error::NonConvergence`] carrying the best estimate.
pub fn integrate_finite<T, F>(f: F, a: T, b: T, cfg: &QuadratureConfig<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    integrate_with_breaks(f, &[a, b], cfg)
}

/// As [`integrate_finite`], starting from the partition given by the
/// strictly increasing `breaks` (at least two points).
pub fn integrate_with_breaks<T, F>(f: F, breaks: &[T], cfg: &QuadratureConfig<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    cfg.validate()?;
    if breaks.len() < 2 {
        return Err(Error::InvalidConfig("need at least two break points"));
    }
    for &p in breaks {
        check_endpoint("endpoint", p)?;
    }
    for w in breaks.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::domain("b", to_f64(w[1]), "b > a"));
        }
    }

    let mut heap: BinaryHeap<ByError<T>> = breaks
        .windows(2)
        .map(|w| ByError(gk21(&f, w[0], w[1])))
        .collect();
    let mut subdivisions = 0usize;

    loop {
        let (value, err) = heap
            .iter()
            .fold((T::zero(), T::zero()), |(v, e), p| (v + p.0.value, e + p.0.err));
        if err <= cfg.tolerance(value) {
            return Ok(Estimate {
                value,
                err,
                subdivisions,
            });
        }
        let worst = heap.peek().map(|p| p.0).expect("non-empty panel set");
        let mid = lit::<T>(0.5) * (worst.a + worst.b);
        let splittable = worst.a < mid && mid < worst.b;
        if heap.len() >= cfg.max_subdivisions || !splittable {
            return Err(Error::NonConvergence {
                value: to_f64(value),
                err: to_f64(err),
                subdivisions,
            });
        }
        heap.pop();
        heap.push(ByError(gk21(&f, worst.a, mid)));
        heap.push(ByError(gk21(&f, mid, worst.b)));
        subdivisions += 1;
    }
}
