//! Validation harness: comparisons of exact and asymptotic tunneling
//! probabilities, the `F_∞/F_n` ratio sweep, a grid check of the
//! monotonicity of `f = ζ/(x²−1)`, and the datasets behind the figures.
//!
//! Sweeps run in parallel over `n`; results always come back in input order.

mod compare;
pub mod csv;
mod figures;
mod lemma;

pub use compare::{compare_sweep, ratio_sweep, ComparisonRow, RatioPoint};
pub use figures::{
    classical_density, figure_dataset, rescaled_density, Cell, Figure, FigureParams, Table,
    FIGURE_IDS,
};
pub use lemma::{lemma_check, lemma_check_with, LemmaReport, DEFAULT_MIN_EXCESS};
