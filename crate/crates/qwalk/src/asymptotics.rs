//! Long-time form of the walk: amplitude propagation through a Bessel
//! kernel, and the conserved quantities that fix the asymptotic regime.
//!
//! For large times the left component obeys
//!
//! ```text
//! a_k(t) ~ sum_l (-1)^{k-l} a_l(0) J_{k-l}(t cos(theta))
//! ```
//!
//! (and likewise b), so the chirality sums P_L, P_R and the coherence Q
//! computed from the initial amplitudes are conserved by this kernel, up to
//! the truncation of the Bessel row.

use num_complex::Complex;

use crate::bessel::{bessel_row, support_order};
use crate::error::Result;
use crate::float::{cast_u64, WalkFloat};
use crate::walk::{CoinParams, WalkerState};

/// Chirality invariants of an initial state: the coherence sum and the
/// asymptotic chirality probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticInvariants<T> {
    pub q0: Complex<T>,
    pub pi_left: T,
    pub pi_right: T,
}

/// Conserved quantities of the asymptotic dynamics, read off the initial
/// amplitudes: Q0 = sum a conj(b), Pi_L = sum |a|^2, Pi_R = sum |b|^2.
pub fn asymptotic_invariants<T: WalkFloat>(init: &WalkerState<T>) -> AsymptoticInvariants<T> {
    let mut q0 = Complex::new(T::zero(), T::zero());
    let mut pi_left = T::zero();
    let mut pi_right = T::zero();
    for (_, a, b) in init.sites() {
        q0 = q0 + a * b.conj();
        pi_left += a.norm_sqr();
        pi_right += b.norm_sqr();
    }
    AsymptoticInvariants {
        q0,
        pi_left,
        pi_right,
    }
}

/// Long-time state at step `t`: the initial amplitudes pushed through the
/// Bessel kernel with argument t cos(theta).
///
/// The output norm is within `T::TRUNC_TOL` of 1 (kernel orthogonality up to
/// row truncation); it is not renormalized.
pub fn asymptotic_state<T: WalkFloat>(
    init: &WalkerState<T>,
    coin: &CoinParams<T>,
    t: u64,
) -> Result<WalkerState<T>> {
    coin.require_interior()?;
    bessel_propagate(init, cast_u64::<T>(t) * coin.cos_theta(), t)
}

/// The raw kernel behind [`asymptotic_state`], with the Bessel argument
/// supplied directly. At x = 0 the kernel is the identity.
pub fn bessel_propagate<T: WalkFloat>(
    init: &WalkerState<T>,
    x: T,
    t: u64,
) -> Result<WalkerState<T>> {
    let (lo, hi) = init.site_range();
    let reach = support_order(x) as i64;
    let width = hi - lo;
    let row = bessel_row(x, (reach + width) as usize);

    let zero = Complex::new(T::zero(), T::zero());
    let out_len = (width + 2 * reach + 1) as usize;
    let mut left = vec![zero; out_len];
    let mut right = vec![zero; out_len];
    for (l, a, b) in init.sites() {
        for (j, (la, rb)) in left.iter_mut().zip(right.iter_mut()).enumerate() {
            let k = lo - reach + j as i64;
            let kernel = row.get(k - l);
            let signed = if (k - l).rem_euclid(2) == 0 {
                kernel
            } else {
                -kernel
            };
            *la = *la + a * signed;
            *rb = *rb + b * signed;
        }
    }
    WalkerState::with_norm_tolerance(t, lo - reach, left, right, T::TRUNC_TOL)
}
