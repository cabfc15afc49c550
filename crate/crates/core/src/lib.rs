//! Tunneling probabilities of quantum harmonic oscillator eigenstates.
//!
//! The probability that the `n`-th eigenstate is found beyond its classical
//! turning points `±√(2n+1)` is computed two ways:
//!
//! * exactly, by adaptive quadrature of `ψ_n²` over the forbidden region
//!   ([`quadrature::tunneling_exact`]);
//! * asymptotically, from the Airy-type expansions
//!   `P ≈ C₁ n^{-1/3}` and `P ≈ C₁ n^{-1/3} − C₂ n^{-1}`
//!   ([`asymptotics::leading_term`], [`asymptotics::second_order`]), and from
//!   Olver's uniform approximation with its explicit error envelope
//!   ([`asymptotics::olver_approx`], [`asymptotics::tunneling_olver`]).
//!
//! All numerics are generic over the scalar type through [`Real`]; the
//! aliases at the crate root pin the `f64` instantiations used by the CLI.
//!
//! ```
//! use qho_tunnel::{quadrature, asymptotics, QuadratureConfigF64};
//!
//! let cfg = QuadratureConfigF64::default();
//! let exact = quadrature::tunneling_exact(1, &cfg).unwrap();
//! assert!((exact.value - 0.1116).abs() < 5e-5);
//!
//! let lead = asymptotics::leading_term::<f64>(1000).unwrap();
//! assert!((lead.value - 0.0133975).abs() < 1e-7);
//! ```

pub mod analysis;
pub mod asymptotics;
mod error;
pub mod quadrature;
mod scalar;
pub mod specfun;

pub use error::{Error, Result};
pub use scalar::Real;

pub type AiryValueF64 = specfun::AiryValue<f64>;
pub type GammaConstantsF64 = specfun::GammaConstants<f64>;
pub type OscillatorStateF64 = specfun::OscillatorState<f64>;
pub type QuadratureConfigF64 = quadrature::QuadratureConfig<f64>;
pub type QuadratureEstimateF64 = quadrature::Estimate<f64>;
pub type TunnelingResultF64 = quadrature::TunnelingResult<f64>;
pub type ZetaPointF64 = asymptotics::ZetaPoint<f64>;
pub type OlverApproxF64 = asymptotics::OlverApprox<f64>;
pub type ComparisonRowF64 = analysis::ComparisonRow<f64>;
pub type LemmaReportF64 = analysis::LemmaReport<f64>;

pub type AiryValueF32 = specfun::AiryValue<f32>;
pub type QuadratureConfigF32 = quadrature::QuadratureConfig<f32>;
pub type TunnelingResultF32 = quadrature::TunnelingResult<f32>;
