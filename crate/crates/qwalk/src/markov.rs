//! Two-state Markov dynamics of the global chirality distribution.
//!
//! Summing the position-resolved probability map over all sites leaves a
//! master equation for (P_L, P_R) alone, driven by the real part of the
//! coherence sum Q:
//!
//! ```text
//! P_L(t+1) = P_L cos^2(theta) + P_R sin^2(theta) + Re Q(t) sin(2 theta)
//! P_R(t+1) = P_L sin^2(theta) + P_R cos^2(theta) - Re Q(t) sin(2 theta)
//! ```
//!
//! For constant Re Q the recurrence closes and has an explicit solution and
//! a stationary point.

use crate::error::{Error, Result};
use crate::float::{cast, pow_u64, WalkFloat};
use crate::observables::ChiralityDist;
use crate::walk::CoinParams;

/// One sample of a chirality trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcdTrajectoryPoint<T> {
    pub time: u64,
    pub dist: ChiralityDist<T>,
}

/// Advances the chirality distribution one step under coherence `re_q`.
///
/// `re_q` must lie in [-1/2, 1/2] (the range a normalized spinor allows).
/// An update that leaves [0, 1] beyond round-off means `re_q` is not
/// consistent with any quantum state having this distribution; that is
/// reported as an error rather than clamped away.
pub fn master_step<T: WalkFloat>(
    dist: &ChiralityDist<T>,
    re_q: T,
    coin: &CoinParams<T>,
) -> Result<ChiralityDist<T>> {
    let half = cast::<T>(0.5);
    if re_q.abs() > half + T::NORM_TOL {
        return Err(Error::InconsistentCoherence {
            re_q: re_q.to_f64().unwrap_or(f64::NAN),
            p_left: f64::NAN,
        });
    }
    let cc = coin.cos_theta() * coin.cos_theta();
    let ss = coin.sin_theta() * coin.sin_theta();
    let drive = re_q * coin.sin_two_theta();
    let p_left = cc * dist.p_left() + ss * dist.p_right() + drive;
    let p_right = ss * dist.p_left() + cc * dist.p_right() - drive;
    ChiralityDist::new(p_left, p_right).map_err(|_| Error::InconsistentCoherence {
        re_q: re_q.to_f64().unwrap_or(f64::NAN),
        p_left: p_left.to_f64().unwrap_or(f64::NAN),
    })
}

/// Closed-form chirality distribution after `t` steps at constant coherence:
///
/// ```text
/// P_L(t) = [(1 + c^t) P_L(0) + (1 - c^t) P_R(0)] / 2 + Re Q (1 - c^t) / tan(theta)
/// ```
///
/// with c = cos(2 theta), and P_R(t) the mirror image. Requires theta
/// strictly inside (0, pi/2); c^t is evaluated by repeated squaring.
pub fn closed_form<T: WalkFloat>(
    init: &ChiralityDist<T>,
    re_q: T,
    coin: &CoinParams<T>,
    t: u64,
) -> Result<ChiralityDist<T>> {
    coin.require_interior()?;
    let half = cast::<T>(0.5);
    let one = T::one();
    let ct = pow_u64(coin.cos_two_theta(), t);
    let drive = re_q * (one - ct) / coin.tan_theta();
    let p_left = half * ((one + ct) * init.p_left() + (one - ct) * init.p_right()) + drive;
    let p_right = half * ((one - ct) * init.p_left() + (one + ct) * init.p_right()) - drive;
    ChiralityDist::new(p_left, p_right)
}

/// Stationary chirality distribution for constant coherence:
///
/// ```text
/// Pi_L = [1 + 2 Re Q0 / tan(theta)] / 2,    Pi_R = 1 - Pi_L
/// ```
///
/// Errors when |2 Re Q0 / tan(theta)| > 1, since no probability pair exists
/// then; a round-off overshoot within `T::NORM_TOL` is pinned to the
/// boundary instead.
pub fn stationary_gcd<T: WalkFloat>(re_q0: T, coin: &CoinParams<T>) -> Result<ChiralityDist<T>> {
    coin.require_interior()?;
    let one = T::one();
    let half = cast::<T>(0.5);
    let two = cast::<T>(2.0);
    let mut ratio = two * re_q0 / coin.tan_theta();
    if ratio.abs() > one {
        if ratio.abs() <= one + T::NORM_TOL {
            ratio = ratio.signum();
        } else {
            return Err(Error::InfeasibleCoherence {
                ratio: ratio.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    ChiralityDist::new(half * (one + ratio), half * (one - ratio))
}
