//! Extended Gaussian initial conditions and the inverse problem: choosing
//! the initial state so the walk relaxes to a prescribed entanglement.
//!
//! The family is
//!
//! ```text
//! a_k(0) = sqrt(G(k)) cos(alpha)
//! b_k(0) = sqrt(G(k)) sin(alpha) e^{i delta}
//! ```
//!
//! with G a normalized Gaussian of width sigma0 centered at k0. When the
//! phase satisfies cos(delta) = tan(theta) / tan(2 alpha) the chirality
//! distribution is stationary from the start, and every asymptotic quantity
//! has a closed form in (alpha, theta).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{cast, cast_i64, WalkFloat};
use crate::observables::{binary_entropy, ChiralityDist};
use crate::walk::{CoinParams, WalkerState};

/// Parameters of the Gaussian family.
///
/// `sigma0` must exceed 10: the asymptotic formulas assume a spatially
/// smooth envelope, and narrower packets fall outside their regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianInitParams<T> {
    sigma0: T,
    k0: i64,
    alpha: T,
    delta: T,
}

impl<T: WalkFloat> GaussianInitParams<T> {
    /// Validates sigma0 > 10, alpha in [0, pi/2], delta in [0, pi].
    pub fn new(sigma0: T, k0: i64, alpha: T, delta: T) -> Result<Self> {
        if sigma0 <= cast::<T>(10.0) || !sigma0.is_finite() {
            return Err(Error::SigmaOutOfRange {
                sigma0: sigma0.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(alpha >= T::zero() && alpha <= T::FRAC_PI_2()) {
            return Err(Error::AlphaOutOfRange {
                alpha: alpha.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(delta >= T::zero() && delta <= T::PI()) {
            return Err(Error::DeltaOutOfRange {
                delta: delta.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            sigma0,
            k0,
            alpha,
            delta,
        })
    }

    /// Same family with the phase chosen to make the chirality distribution
    /// stationary under the given coin.
    pub fn stationary(sigma0: T, k0: i64, alpha: T, coin: &CoinParams<T>) -> Result<Self> {
        let delta = solve_delta(alpha, coin)?;
        Self::new(sigma0, k0, alpha, delta)
    }

    pub fn sigma0(&self) -> T {
        self.sigma0
    }

    pub fn k0(&self) -> i64 {
        self.k0
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn delta(&self) -> T {
        self.delta
    }
}

/// Closed-form asymptotic quantities of a stationary-phase Gaussian walk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticRecord<T> {
    pub pi_left: T,
    pub pi_right: T,
    /// Asymptotic coherence; real for the stationary-phase family.
    pub q0: Complex<T>,
    pub lambda_plus: T,
    pub lambda_minus: T,
    /// Asymptotic entanglement entropy (bits).
    pub s0: T,
    /// Shannon entropy of (Pi_L, Pi_R) (bits).
    pub s_shannon: T,
}

/// Branch of the inverse problem: `Left` selects Pi_L >= 1/2, `Right` the
/// mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Left,
    Right,
}

/// Mixing and phase angles produced by [`design_from_entropy`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignAngles<T> {
    pub alpha: T,
    pub delta: T,
}

impl<T: WalkFloat> DesignAngles<T> {
    /// Packages the angles with an envelope into full initial-state
    /// parameters.
    pub fn into_params(self, sigma0: T, k0: i64) -> Result<GaussianInitParams<T>> {
        GaussianInitParams::new(sigma0, k0, self.alpha, self.delta)
    }
}

/// Builds the t = 0 walker state for the given parameters.
///
/// The envelope is evaluated on the window k0 +- ceil(8 sigma0) and then
/// normalized exactly, so the truncated tails never bias the chirality
/// sums: the distribution is (cos^2 alpha, sin^2 alpha) to round-off.
pub fn build_gaussian_state<T: WalkFloat>(params: &GaussianInitParams<T>) -> WalkerState<T> {
    let half_width = (cast::<T>(8.0) * params.sigma0)
        .ceil()
        .to_i64()
        .expect("window width must fit an i64");
    let four_var = cast::<T>(4.0) * params.sigma0 * params.sigma0;

    let n = (2 * half_width + 1) as usize;
    let mut envelope = Vec::with_capacity(n);
    let mut total = T::zero();
    for j in 0..n {
        let k = params.k0 - half_width + j as i64;
        let d = cast_i64::<T>(k - params.k0);
        let g = (-d * d / four_var).exp();
        total += g * g;
        envelope.push(g);
    }
    let scale = total.sqrt().recip();

    let ca = params.alpha.cos();
    let sa = params.alpha.sin();
    let phase = Complex::new(params.delta.cos(), params.delta.sin());
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for g in envelope {
        let amp = g * scale;
        left.push(Complex::new(amp * ca, T::zero()));
        right.push(phase * (amp * sa));
    }
    WalkerState::new(params.k0 - half_width, left, right)
        .expect("gaussian construction is normalized by design")
}

/// Solves cos(delta) = tan(theta) / tan(2 alpha) for delta in [0, pi].
///
/// At alpha = pi/4 the right-hand side vanishes in the limit and delta is
/// exactly pi/2. Errors when no phase exists (|ratio| > 1) or when alpha is
/// at an endpoint where the equation degenerates.
pub fn solve_delta<T: WalkFloat>(alpha: T, coin: &CoinParams<T>) -> Result<T> {
    coin.require_interior()?;
    if !(alpha > T::zero() && alpha < T::FRAC_PI_2()) {
        return Err(Error::AlphaOutOfRange {
            alpha: alpha.to_f64().unwrap_or(f64::NAN),
        });
    }
    if alpha == T::FRAC_PI_4() {
        return Ok(T::FRAC_PI_2());
    }
    let mut ratio = coin.tan_theta() / (alpha + alpha).tan();
    if ratio.abs() > T::one() {
        if ratio.abs() <= T::one() + T::NORM_TOL {
            ratio = ratio.signum();
        } else {
            return Err(Error::NoValidPhase {
                ratio: ratio.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(ratio.acos())
}

/// Asymptotic quantities for a stationary-phase Gaussian with mixing angle
/// `alpha`:
///
/// ```text
/// Pi_L = cos^2(alpha)              Re Q0 = cos(2 alpha) tan(theta) / 2
/// Lambda_+- = [1 +- |cos(2 alpha)| / cos(theta)] / 2
/// ```
///
/// Requires |cos(2 alpha)| <= cos(theta) (equivalently, a solvable phase).
pub fn predict_asymptotics<T: WalkFloat>(
    alpha: T,
    coin: &CoinParams<T>,
) -> Result<AsymptoticRecord<T>> {
    coin.require_interior()?;
    if !(alpha >= T::zero() && alpha <= T::FRAC_PI_2()) {
        return Err(Error::AlphaOutOfRange {
            alpha: alpha.to_f64().unwrap_or(f64::NAN),
        });
    }
    let half = cast::<T>(0.5);
    let one = T::one();
    let cos2a = (alpha + alpha).cos();
    let mut ratio = cos2a.abs() / coin.cos_theta();
    if ratio > one {
        if ratio <= one + T::NORM_TOL {
            ratio = one;
        } else {
            return Err(Error::InfeasibleMixing {
                cos_two_alpha: cos2a.to_f64().unwrap_or(f64::NAN),
                cos_theta: coin.cos_theta().to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let ca = alpha.cos();
    let sa = alpha.sin();
    let lambda_plus = half * (one + ratio);
    let lambda_minus = half * (one - ratio);
    let pi_left = ca * ca;
    Ok(AsymptoticRecord {
        pi_left,
        pi_right: sa * sa,
        q0: Complex::new(half * cos2a * coin.tan_theta(), T::zero()),
        lambda_plus,
        lambda_minus,
        s0: binary_entropy(lambda_plus),
        s_shannon: binary_entropy(pi_left),
    })
}

/// Shannon entropy of a chirality distribution, in bits.
pub fn shannon_entropy<T: WalkFloat>(dist: &ChiralityDist<T>) -> T {
    binary_entropy(dist.p_left())
}

/// Inverse problem: find (alpha, delta) whose asymptotic entanglement
/// entropy equals `s0` under the given coin.
///
/// The larger eigenvalue is located by bisecting the (strictly decreasing)
/// binary entropy over [1/2, 1] to within `T::NORM_TOL`; the branch picks
/// which of the two mirror-image mixing angles is returned.
pub fn design_from_entropy<T: WalkFloat>(
    s0: T,
    coin: &CoinParams<T>,
    branch: Branch,
) -> Result<DesignAngles<T>> {
    coin.require_interior()?;
    if !(s0 >= T::zero() && s0 <= T::one()) || !s0.is_finite() {
        return Err(Error::EntropyOutOfRange {
            s0: s0.to_f64().unwrap_or(f64::NAN),
        });
    }
    let lambda = invert_binary_entropy(s0);
    let two = cast::<T>(2.0);
    let signed = match branch {
        Branch::Left => (two * lambda - T::one()) * coin.cos_theta(),
        Branch::Right => -(two * lambda - T::one()) * coin.cos_theta(),
    };
    let alpha = signed.acos() / two;
    let delta = solve_delta(alpha, coin)?;
    Ok(DesignAngles { alpha, delta })
}

/// Solves H(lambda) = s0 for lambda in [1/2, 1] by bisection.
fn invert_binary_entropy<T: WalkFloat>(s0: T) -> T {
    let half = cast::<T>(0.5);
    let mut lo = half;
    let mut hi = T::one();
    if (binary_entropy(lo) - s0).abs() <= T::NORM_TOL {
        return lo;
    }
    if (binary_entropy(hi) - s0).abs() <= T::NORM_TOL {
        return hi;
    }
    let mut mid = half * (lo + hi);
    for _ in 0..200 {
        mid = half * (lo + hi);
        let h = binary_entropy(mid);
        if (h - s0).abs() <= T::NORM_TOL || mid == lo || mid == hi {
            break;
        }
        if h > s0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    mid
}
