//! Asymptotic machinery for the tunneling probability: the `ζ` turning-point
//! map, the Airy-weighted integral `F_n`, the closed-form leading and
//! second-order formulas, and Olver's uniform approximation.

mod formulas;
mod olver;
mod zeta;

pub use formulas::{
    big_f_n, f_n, leading_term, second_order, tunneling_olver, AsymptoticCoefficients,
};
pub use olver::{eps_multiplier, ln_olver_cn, olver_approx, olver_check, OlverApprox, OlverCheck};
pub use zeta::{
    excess_of_zeta, f_of_x, x_of_zeta, zeta_derivative, zeta_of_x, ZetaPoint, ZetaRegime,
    ZETA_SERIES_CUTOFF,
};
