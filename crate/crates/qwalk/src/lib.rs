//! Discrete-time quantum walk on the integer line, focused on the global
//! chirality distribution: the pair of probabilities of the two coin
//! components summed over all positions.
//!
//! The crate provides
//!
//! - exact amplitude evolution and the position-resolved probability map
//!   ([`walk`]),
//! - chirality observables, the reduced coin density and its entanglement
//!   entropy ([`observables`]),
//! - the two-state master equation obeyed by the chirality distribution,
//!   its closed form and stationary point ([`markov`]),
//! - the long-time Bessel form of the amplitudes and its conserved
//!   quantities ([`asymptotics`], [`bessel`]),
//! - Gaussian initial conditions with a stationary phase, closed-form
//!   asymptotic predictions, and the inverse design of an initial state
//!   from a target entanglement entropy ([`gaussian`]).
//!
//! All numerics are generic over the scalar via [`WalkFloat`]; `f64` is the
//! intended working precision, with `f32` available for cheap scans.
//!
//! ```
//! use num_complex::Complex;
//! use qwalk::{CoinParams64, WalkerState64};
//! use qwalk::observables::{entanglement_entropy, gcd, reduced_density};
//!
//! let coin = CoinParams64::new(std::f64::consts::FRAC_PI_4).unwrap();
//! let start = WalkerState64::localized(Complex::new(1.0, 0.0), Complex::new(0.0, 0.0), 0).unwrap();
//! let state = start.evolve(&coin, 100);
//!
//! let dist = gcd(&state).unwrap();
//! let report = entanglement_entropy(&reduced_density(&state).unwrap()).unwrap();
//! assert!((dist.p_left() + dist.p_right() - 1.0).abs() < 1e-12);
//! assert!(report.entropy() > 0.0 && report.entropy() <= 1.0);
//! ```

pub mod asymptotics;
pub mod bessel;
mod error;
mod float;
pub mod gaussian;
pub mod markov;
pub mod observables;
pub mod walk;

pub use error::{Error, Result};
pub use float::WalkFloat;

pub use asymptotics::{asymptotic_invariants, asymptotic_state, AsymptoticInvariants};
pub use bessel::{bessel_row, support_order, BesselRow};
pub use gaussian::{
    build_gaussian_state, design_from_entropy, predict_asymptotics, solve_delta, AsymptoticRecord,
    Branch, GaussianInitParams,
};
pub use markov::{closed_form, master_step, stationary_gcd, GcdTrajectoryPoint};
pub use observables::{
    binary_entropy, coherence, entanglement_entropy, gcd, reduced_density, ChiralityDist,
    EntanglementReport, ReducedCoinState,
};
pub use walk::{CoinParams, PositionDist, PositionProfile, WalkerState};

/// Double-precision aliases for the main domain types.
pub type CoinParams64 = walk::CoinParams<f64>;
pub type WalkerState64 = walk::WalkerState<f64>;
pub type PositionProfile64 = walk::PositionProfile<f64>;
pub type ChiralityDist64 = observables::ChiralityDist<f64>;
pub type ReducedCoinState64 = observables::ReducedCoinState<f64>;
pub type EntanglementReport64 = observables::EntanglementReport<f64>;
pub type BesselRow64 = bessel::BesselRow<f64>;
pub type GaussianInitParams64 = gaussian::GaussianInitParams<f64>;
pub type AsymptoticRecord64 = gaussian::AsymptoticRecord<f64>;

/// Single-precision aliases.
pub type CoinParams32 = walk::CoinParams<f32>;
pub type WalkerState32 = walk::WalkerState<f32>;
pub type ChiralityDist32 = observables::ChiralityDist<f32>;
