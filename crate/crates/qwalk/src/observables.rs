//! Chirality-level observables: the global chirality distribution, the
//! coherence sum, the reduced coin density and its entanglement entropy.
//!
//! The reduced coin state of a walker is the 2x2 density matrix
//!
//! ```text
//! rho_c = [[ P_L, Q ], [ conj(Q), P_R ]]
//! ```
//!
//! with P_L = sum |a_k|^2, P_R = sum |b_k|^2 and Q = sum a_k conj(b_k).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{cast, WalkFloat};
use crate::walk::WalkerState;

/// Global chirality distribution (P_L, P_R): the probabilities of the two
/// coin components regardless of position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralityDist<T> {
    p_left: T,
    p_right: T,
}

impl<T: WalkFloat> ChiralityDist<T> {
    /// Validates that (p_left, p_right) is a probability pair summing to 1
    /// within `T::NORM_TOL`.
    pub fn new(p_left: T, p_right: T) -> Result<Self> {
        Self::with_tolerance(p_left, p_right, T::NORM_TOL)
    }

    fn with_tolerance(p_left: T, p_right: T, tol: T) -> Result<Self> {
        let ok = (p_left + p_right - T::one()).abs() <= tol
            && p_left >= -tol
            && p_right >= -tol
            && p_left <= T::one() + tol
            && p_right <= T::one() + tol;
        if !ok {
            return Err(Error::InvalidDistribution {
                p_left: p_left.to_f64().unwrap_or(f64::NAN),
                p_right: p_right.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { p_left, p_right })
    }

    pub fn p_left(&self) -> T {
        self.p_left
    }

    pub fn p_right(&self) -> T {
        self.p_right
    }
}

/// Reduced coin density matrix data: diagonal (p_left, p_right) and
/// off-diagonal coherence q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCoinState<T> {
    p_left: T,
    p_right: T,
    q: Complex<T>,
}

impl<T: WalkFloat> ReducedCoinState<T> {
    /// Validates unit trace and the positivity bound |q|^2 <= p_left * p_right
    /// (up to round-off).
    pub fn new(p_left: T, p_right: T, q: Complex<T>) -> Result<Self> {
        ChiralityDist::new(p_left, p_right)?;
        let four = cast::<T>(4.0);
        let excess = q.norm_sqr() - p_left * p_right;
        if excess > T::NORM_TOL / four {
            return Err(Error::InvalidDensity {
                excess: excess.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { p_left, p_right, q })
    }

    pub fn p_left(&self) -> T {
        self.p_left
    }

    pub fn p_right(&self) -> T {
        self.p_right
    }

    pub fn q(&self) -> Complex<T> {
        self.q
    }
}

/// Eigenvalues of the reduced coin density and the resulting von Neumann
/// entropy in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport<T> {
    lambda_plus: T,
    lambda_minus: T,
    entropy: T,
}

impl<T: WalkFloat> EntanglementReport<T> {
    pub fn lambda_plus(&self) -> T {
        self.lambda_plus
    }

    pub fn lambda_minus(&self) -> T {
        self.lambda_minus
    }

    pub fn entropy(&self) -> T {
        self.entropy
    }
}

/// Global chirality distribution of a state.
///
/// Accepts truncation-level norm slack (`T::TRUNC_TOL`) so that
/// Bessel-propagated approximate states can be measured; exactly evolved
/// states sit far inside the gate.
pub fn gcd<T: WalkFloat>(state: &WalkerState<T>) -> Result<ChiralityDist<T>> {
    let p_left = state.left_amp().iter().map(|a| a.norm_sqr()).sum();
    let p_right = state.right_amp().iter().map(|b| b.norm_sqr()).sum();
    ChiralityDist::with_tolerance(p_left, p_right, T::TRUNC_TOL)
}

/// Coherence sum Q = sum_k a_k conj(b_k).
pub fn coherence<T: WalkFloat>(state: &WalkerState<T>) -> Complex<T> {
    let mut q = Complex::new(T::zero(), T::zero());
    for (_, a, b) in state.sites() {
        q = q + a * b.conj();
    }
    q
}

/// Reduced coin density data of a state.
pub fn reduced_density<T: WalkFloat>(state: &WalkerState<T>) -> Result<ReducedCoinState<T>> {
    let p_left = state.left_amp().iter().map(|a| a.norm_sqr()).sum();
    let p_right = state.right_amp().iter().map(|b| b.norm_sqr()).sum();
    ReducedCoinState::new(p_left, p_right, coherence(state))
}

/// Eigenvalues and entropy of a reduced coin density.
///
/// The eigenvalues are lambda_{+,-} = (1 +- sqrt(1 + 4 (|q|^2 - pL pR))) / 2.
/// The square-root argument is clamped into [0, 1] only when it strays
/// outside by at most `T::NORM_TOL` (round-off); larger violations are
/// rejected as invalid density data.
pub fn entanglement_entropy<T: WalkFloat>(
    rc: &ReducedCoinState<T>,
) -> Result<EntanglementReport<T>> {
    let one = T::one();
    let half = cast::<T>(0.5);
    let four = cast::<T>(4.0);
    let mut arg = one + four * (rc.q().norm_sqr() - rc.p_left() * rc.p_right());
    if arg < T::zero() || arg > one {
        if arg >= -T::NORM_TOL && arg <= one + T::NORM_TOL {
            arg = arg.max(T::zero()).min(one);
        } else {
            let excess = (arg - one).max(-arg);
            return Err(Error::InvalidDensity {
                excess: excess.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let root = arg.sqrt();
    let lambda_plus = half * (one + root);
    let lambda_minus = half * (one - root);
    Ok(EntanglementReport {
        lambda_plus,
        lambda_minus,
        entropy: binary_entropy(lambda_plus),
    })
}

/// Binary entropy -p log2 p - (1-p) log2 (1-p) with the 0 log 0 = 0
/// convention; the result is pinned into [0, 1] against round-off.
pub fn binary_entropy<T: WalkFloat>(p: T) -> T {
    let one = T::one();
    let term = |x: T| {
        if x <= T::zero() || x >= one {
            T::zero()
        } else {
            -x * x.log2()
        }
    };
    (term(p) + term(one - p)).max(T::zero()).min(one)
}
