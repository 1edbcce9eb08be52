//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong when building states or evaluating the
/// chirality dynamics. Payload values are reported as `f64` regardless of
/// the working precision; they are diagnostic only.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Coin angle outside the closed interval [0, pi/2].
    #[error("coin angle theta = {theta} lies outside [0, pi/2]")]
    ThetaOutOfRange { theta: f64 },

    /// Operation needs theta strictly inside (0, pi/2), e.g. anything
    /// dividing by tan(theta).
    #[error("theta = {theta} must lie strictly inside (0, pi/2) here")]
    ThetaAtEndpoint { theta: f64 },

    /// State (or spinor) norm too far from 1.
    #[error("squared norm {norm_sqr} deviates from 1 by more than {tol}")]
    NotNormalized { norm_sqr: f64, tol: f64 },

    /// Chirality probabilities do not form a distribution.
    #[error("chirality pair ({p_left}, {p_right}) is not a probability distribution")]
    InvalidDistribution { p_left: f64, p_right: f64 },

    /// A master-equation update left [0, 1]; the supplied coherence cannot
    /// come from an actual quantum state with these probabilities.
    #[error("coherence {re_q} drives p_left to {p_left}, outside [0, 1]")]
    InconsistentCoherence { re_q: f64, p_left: f64 },

    /// No stationary chirality distribution exists for this coherence.
    #[error("|2 Re Q0 / tan(theta)| = {ratio} exceeds 1: stationary distribution infeasible")]
    InfeasibleCoherence { ratio: f64 },

    /// Reduced coin data violates the Cauchy-Schwarz bound |q|^2 <= pL * pR
    /// beyond round-off.
    #[error("reduced coin data invalid: |q|^2 exceeds p_left * p_right by {excess}")]
    InvalidDensity { excess: f64 },

    /// No phase delta satisfies cos(delta) = tan(theta) / tan(2 alpha).
    #[error("no phase exists: tan(theta)/tan(2 alpha) = {ratio} lies outside [-1, 1]")]
    NoValidPhase { ratio: f64 },

    /// Mixing angle outside its domain.
    #[error("mixing angle alpha = {alpha} lies outside its domain")]
    AlphaOutOfRange { alpha: f64 },

    /// Relative phase outside [0, pi].
    #[error("phase delta = {delta} lies outside [0, pi]")]
    DeltaOutOfRange { delta: f64 },

    /// Gaussian width outside the regime where the asymptotic formulas hold.
    #[error("gaussian width sigma0 = {sigma0} not in the supported regime (> 10)")]
    SigmaOutOfRange { sigma0: f64 },

    /// Requested entanglement entropy outside [0, 1].
    #[error("entropy target {s0} lies outside [0, 1]")]
    EntropyOutOfRange { s0: f64 },

    /// The requested (alpha, theta) pair admits no stationary phase, hence
    /// no asymptotic prediction.
    #[error("|cos(2 alpha)| = {cos_two_alpha} exceeds cos(theta) = {cos_theta}: outside the feasible band")]
    InfeasibleMixing { cos_two_alpha: f64, cos_theta: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
