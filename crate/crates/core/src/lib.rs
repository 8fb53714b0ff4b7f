//! Exact relations between conditional entropy and error probability in
//! binary classification.
//!
//! The crate computes the classical Fano and Kovalevskij bounds together
//! with the exact analytical envelopes obtained from the closed-form
//! conditional entropy of a binary joint table, for both Bayes and
//! arbitrary-classifier errors. Every bound ships with an independent
//! certification path: brute-force extremization oracles, deterministic
//! Monte Carlo falsification, and admissibility probing of diagram points.
//!
//! The numeric kernels are generic over the scalar type through
//! [`real::Real`] (implemented for `f32` and `f64`); the `*64` aliases at the
//! crate root pick the double-precision instantiation the tolerances are
//! calibrated for.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod entropy;
pub mod real;
pub mod settings;
mod solve;
pub mod types;
pub mod verifier;

pub use bounds::{
    analytical_upper, analytical_upper_inverse, bayes_error_cap, classify_point,
    conditional_entropy_max, curve_samples, fano_lower_bound, general_upper_bound,
    half_error_entropy, kovalevskij_upper_bound, mirrored_analytical_lower, BoundQuery,
    Membership, Verdict,
};
pub use entropy::{
    binary_entropy, binary_entropy_inverse, conditional_entropy, mi_derivative_in_e,
    mutual_information, prior_entropy, EntropyBranch,
};
pub use real::Real;
pub use settings::{
    fano_family_setting, key_point_setting, mirrored_extremal_setting, symmetric_noise_setting,
    upper_extremal_setting, KeyPointKind,
};
pub use types::{
    Bits, BoundCurve, BoundKind, DiagramPoint, DomainError, ErrorKind, JointSetting, Priors,
    Probability, VerificationReport,
};
pub use verifier::{
    admissibility_probe, bound_slacks, brute_force_max_h, brute_force_min_h, certify_bounds,
    derivative_check, sample_setting, tightness_report, OracleResult, PriorsMode, ProbeOutcome,
    SamplerConfig,
};

/// Double-precision instantiations; the documented tolerance ladder
/// (1e-12 validation, 1e-10 identities, 1e-9 boundaries) applies to these.
pub type Probability64 = types::Probability<f64>;
pub type Bits64 = types::Bits<f64>;
pub type Priors64 = types::Priors<f64>;
pub type JointSetting64 = types::JointSetting<f64>;
pub type DiagramPoint64 = types::DiagramPoint<f64>;
pub type BoundCurve64 = types::BoundCurve<f64>;
pub type VerificationReport64 = types::VerificationReport<f64>;
pub type BoundQuery64 = bounds::BoundQuery<f64>;
pub type Membership64 = bounds::Membership<f64>;
pub type SamplerConfig64 = verifier::SamplerConfig<f64>;
pub type OracleResult64 = verifier::OracleResult<f64>;
pub type ProbeOutcome64 = verifier::ProbeOutcome<f64>;

/// Single-precision instantiations for callers that trade accuracy for size;
/// the scaled `f32` tolerance ladder applies.
pub type Probability32 = types::Probability<f32>;
pub type Bits32 = types::Bits<f32>;
pub type Priors32 = types::Priors<f32>;
pub type JointSetting32 = types::JointSetting<f32>;
