//! Special functions: oscillator eigenfunctions, Airy `Ai`, Γ.

mod airy;
mod dd;
mod gamma;
mod hermite;

pub use airy::{
    airy_ai, airy_ai_asymptotic, airy_ai_prime, airy_ai_series, airy_switch_point, AiryMethod, AiryValue, GammaConstants,
    AIRY_MIN_ARG,
};
pub use gamma::{gamma, ln_factorial, ln_gamma};
pub use hermite::{hermite_psi, hermite_psi_squared, ln_weighted_hermite, OscillatorState};

pub(crate) use airy::ai_unchecked;
pub(crate) use hermite::psi_squared_unchecked;
