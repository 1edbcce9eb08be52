//! Discrete-time quantum walk on the integer line.
//!
//! A walker state carries a two-component spinor (a_k, b_k) per site k.
//! One time step rotates the spinor by the coin angle theta and shifts the
//! components in opposite directions:
//!
//! ```text
//! a_k(t+1) =  a_{k+1}(t) cos(theta) + b_{k+1}(t) sin(theta)
//! b_k(t+1) =  a_{k-1}(t) sin(theta) - b_{k-1}(t) cos(theta)
//! ```
//!
//! States are stored as dense windows over the occupied sites; the window
//! grows with the light cone and never contains stale nonzero amplitudes
//! outside it.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{cast_i64, WalkFloat};

/// Coin angle together with its cached trigonometric values.
///
/// At the endpoints theta = 0 and theta = pi/2 the cached pair is snapped to
/// exactly (1, 0) and (0, 1) so the degenerate walks shift amplitudes
/// without leaking round-off into the orthogonal component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams<T> {
    theta: T,
    cos_theta: T,
    sin_theta: T,
}

impl<T: WalkFloat> CoinParams<T> {
    /// Validates theta in [0, pi/2] and caches cos/sin.
    pub fn new(theta: T) -> Result<Self> {
        if !(theta >= T::zero() && theta <= T::FRAC_PI_2()) {
            return Err(Error::ThetaOutOfRange {
                theta: theta.to_f64().unwrap_or(f64::NAN),
            });
        }
        let (cos_theta, sin_theta) = if theta == T::zero() {
            (T::one(), T::zero())
        } else if theta == T::FRAC_PI_2() {
            (T::zero(), T::one())
        } else {
            (theta.cos(), theta.sin())
        };
        debug_assert!(
            (cos_theta * cos_theta + sin_theta * sin_theta - T::one()).abs() < T::NORM_TOL
        );
        Ok(Self {
            theta,
            cos_theta,
            sin_theta,
        })
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn cos_theta(&self) -> T {
        self.cos_theta
    }

    pub fn sin_theta(&self) -> T {
        self.sin_theta
    }

    /// cos(2 theta) = cos^2(theta) - sin^2(theta); zero to within one ulp at
    /// theta = pi/4, where the chirality dynamics loses its memory term.
    pub fn cos_two_theta(&self) -> T {
        self.cos_theta * self.cos_theta - self.sin_theta * self.sin_theta
    }

    /// sin(2 theta) = 2 sin(theta) cos(theta).
    pub fn sin_two_theta(&self) -> T {
        (T::one() + T::one()) * self.sin_theta * self.cos_theta
    }

    /// tan(theta); infinite at theta = pi/2, so gate with
    /// [`CoinParams::require_interior`] before dividing by it.
    pub fn tan_theta(&self) -> T {
        self.sin_theta / self.cos_theta
    }

    /// Errors unless theta lies strictly inside (0, pi/2).
    pub fn require_interior(&self) -> Result<()> {
        if self.theta == T::zero() || self.theta == T::FRAC_PI_2() {
            return Err(Error::ThetaAtEndpoint {
                theta: self.theta.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }
}

/// Spinor wave function over a contiguous site window.
///
/// `left_amp[j]` and `right_amp[j]` are the amplitudes (a, b) at site
/// `origin + j`. Amplitudes outside the window are exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkerState<T> {
    time: u64,
    origin: i64,
    left_amp: Vec<Complex<T>>,
    right_amp: Vec<Complex<T>>,
}

impl<T: WalkFloat> WalkerState<T> {
    /// Builds a t = 0 state from explicit amplitude windows.
    ///
    /// The two vectors must have equal nonzero length and total squared norm
    /// within `T::NORM_TOL` of 1.
    pub fn new(origin: i64, left_amp: Vec<Complex<T>>, right_amp: Vec<Complex<T>>) -> Result<Self> {
        Self::with_norm_tolerance(0, origin, left_amp, right_amp, T::NORM_TOL)
    }

    /// As [`WalkerState::new`] but with an explicit time stamp and norm
    /// tolerance. Approximate constructions (Bessel propagation) carry
    /// truncation-level norm error and use a looser gate.
    pub fn with_norm_tolerance(
        time: u64,
        origin: i64,
        left_amp: Vec<Complex<T>>,
        right_amp: Vec<Complex<T>>,
        tol: T,
    ) -> Result<Self> {
        assert_eq!(
            left_amp.len(),
            right_amp.len(),
            "component windows must be aligned"
        );
        assert!(!left_amp.is_empty(), "state window must be nonempty");
        let mut state = Self {
            time,
            origin,
            left_amp,
            right_amp,
        };
        let n = state.norm_sqr();
        if (n - T::one()).abs() > tol {
            return Err(Error::NotNormalized {
                norm_sqr: n.to_f64().unwrap_or(f64::NAN),
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        state.trim();
        Ok(state)
    }

    /// Walker started at a single site with spinor (c_left, c_right).
    ///
    /// The spinor must be normalized: |c_left|^2 + |c_right|^2 = 1 within
    /// `T::NORM_TOL`.
    pub fn localized(c_left: Complex<T>, c_right: Complex<T>, site: i64) -> Result<Self> {
        Self::new(site, vec![c_left], vec![c_right])
    }

    fn from_parts_unchecked(
        time: u64,
        origin: i64,
        left_amp: Vec<Complex<T>>,
        right_amp: Vec<Complex<T>>,
    ) -> Self {
        let mut state = Self {
            time,
            origin,
            left_amp,
            right_amp,
        };
        state.trim();
        state
    }

    /// Drops exactly-zero sites at both window edges (never emptying the
    /// window), keeping the stored support tight against the light cone.
    fn trim(&mut self) {
        let zero = Complex::new(T::zero(), T::zero());
        let mut lo = 0;
        let mut hi = self.left_amp.len();
        while hi - lo > 1 && self.left_amp[lo] == zero && self.right_amp[lo] == zero {
            lo += 1;
        }
        while hi - lo > 1 && self.left_amp[hi - 1] == zero && self.right_amp[hi - 1] == zero {
            hi -= 1;
        }
        if lo > 0 || hi < self.left_amp.len() {
            self.left_amp.drain(..lo);
            self.left_amp.truncate(hi - lo);
            self.right_amp.drain(..lo);
            self.right_amp.truncate(hi - lo);
            self.origin += lo as i64;
        }
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    /// Site index of the first window entry.
    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// Number of stored sites.
    pub fn len(&self) -> usize {
        self.left_amp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left_amp.is_empty()
    }

    /// Inclusive site range `[min, max]` of the stored window.
    pub fn site_range(&self) -> (i64, i64) {
        (self.origin, self.origin + self.left_amp.len() as i64 - 1)
    }

    pub fn left_amp(&self) -> &[Complex<T>] {
        &self.left_amp
    }

    pub fn right_amp(&self) -> &[Complex<T>] {
        &self.right_amp
    }

    /// Spinor at site k; exactly zero outside the stored window.
    pub fn amp_at(&self, k: i64) -> (Complex<T>, Complex<T>) {
        let j = k - self.origin;
        if j < 0 || j >= self.left_amp.len() as i64 {
            let zero = Complex::new(T::zero(), T::zero());
            (zero, zero)
        } else {
            (self.left_amp[j as usize], self.right_amp[j as usize])
        }
    }

    /// Iterates `(site, a, b)` over the stored window.
    pub fn sites(&self) -> impl Iterator<Item = (i64, Complex<T>, Complex<T>)> + '_ {
        self.left_amp
            .iter()
            .zip(self.right_amp.iter())
            .enumerate()
            .map(move |(j, (a, b))| (self.origin + j as i64, *a, *b))
    }

    /// Total squared norm sum_k |a_k|^2 + |b_k|^2.
    pub fn norm_sqr(&self) -> T {
        self.left_amp
            .iter()
            .zip(self.right_amp.iter())
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }

    /// Advances the walk by one time step.
    ///
    /// The output window extends one site on each side; edge sites whose
    /// amplitudes come out exactly zero are trimmed again, so degenerate
    /// coins (theta = 0 or pi/2) keep single-component supports exact.
    pub fn step(&self, coin: &CoinParams<T>) -> WalkerState<T> {
        let n = self.left_amp.len();
        let c = coin.cos_theta();
        let s = coin.sin_theta();
        let zero = Complex::new(T::zero(), T::zero());

        let mut left = Vec::with_capacity(n + 2);
        let mut right = Vec::with_capacity(n + 2);
        // New window starts one site left of the old one; entry j reads the
        // old entry j for the left component and j - 2 for the right one.
        for j in 0..n + 2 {
            left.push(if j < n {
                self.left_amp[j] * c + self.right_amp[j] * s
            } else {
                zero
            });
            right.push(if j >= 2 && j - 2 < n {
                self.left_amp[j - 2] * s - self.right_amp[j - 2] * c
            } else {
                zero
            });
        }
        Self::from_parts_unchecked(self.time + 1, self.origin - 1, left, right)
    }

    /// Applies [`WalkerState::step`] `steps` times.
    pub fn evolve(&self, coin: &CoinParams<T>, steps: u64) -> WalkerState<T> {
        let mut state = self.clone();
        for _ in 0..steps {
            state = state.step(coin);
        }
        state
    }

    /// Standard deviation of the position distribution P_k = |a_k|^2 + |b_k|^2.
    pub fn position_spread(&self) -> T {
        let mut mean = T::zero();
        let mut mean_sq = T::zero();
        for (k, a, b) in self.sites() {
            let p = a.norm_sqr() + b.norm_sqr();
            let kf = cast_i64::<T>(k);
            mean += kf * p;
            mean_sq += kf * kf * p;
        }
        (mean_sq - mean * mean).max(T::zero()).sqrt()
    }
}

/// Position-resolved probabilities and interference terms of a state:
/// p_left_k = |a_k|^2, p_right_k = |b_k|^2, beta_k = Re(a_k conj(b_k)).
#[derive(Debug, Clone, PartialEq)]
pub struct PositionProfile<T> {
    origin: i64,
    p_left: Vec<T>,
    p_right: Vec<T>,
    beta: Vec<T>,
}

impl<T: WalkFloat> PositionProfile<T> {
    /// Extracts the profile of a walker state.
    pub fn from_state(state: &WalkerState<T>) -> Self {
        let mut p_left = Vec::with_capacity(state.len());
        let mut p_right = Vec::with_capacity(state.len());
        let mut beta = Vec::with_capacity(state.len());
        for (_, a, b) in state.sites() {
            p_left.push(a.norm_sqr());
            p_right.push(b.norm_sqr());
            beta.push((a * b.conj()).re);
        }
        Self {
            origin: state.origin(),
            p_left,
            p_right,
            beta,
        }
    }

    /// Builds a profile from raw per-site data.
    ///
    /// Validates that probabilities are nonnegative, sum to 1 within
    /// `T::NORM_TOL`, and that each |beta_k| respects the Cauchy-Schwarz
    /// bound sqrt(p_left_k * p_right_k) up to round-off.
    pub fn new(origin: i64, p_left: Vec<T>, p_right: Vec<T>, beta: Vec<T>) -> Result<Self> {
        assert_eq!(p_left.len(), p_right.len(), "windows must be aligned");
        assert_eq!(p_left.len(), beta.len(), "windows must be aligned");
        let total: T = p_left.iter().chain(p_right.iter()).copied().sum();
        if (total - T::one()).abs() > T::NORM_TOL
            || p_left.iter().chain(p_right.iter()).any(|&p| p < T::zero())
        {
            return Err(Error::InvalidDistribution {
                p_left: p_left
                    .iter()
                    .copied()
                    .sum::<T>()
                    .to_f64()
                    .unwrap_or(f64::NAN),
                p_right: p_right
                    .iter()
                    .copied()
                    .sum::<T>()
                    .to_f64()
                    .unwrap_or(f64::NAN),
            });
        }
        for ((&pl, &pr), &bk) in p_left.iter().zip(&p_right).zip(&beta) {
            let excess = bk * bk - pl * pr;
            if excess > T::NORM_TOL {
                return Err(Error::InvalidDensity {
                    excess: excess.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self {
            origin,
            p_left,
            p_right,
            beta,
        })
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.p_left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p_left.is_empty()
    }

    pub fn p_left(&self) -> &[T] {
        &self.p_left
    }

    pub fn p_right(&self) -> &[T] {
        &self.p_right
    }

    pub fn beta(&self) -> &[T] {
        &self.beta
    }

    /// Advances the probability map by one step:
    ///
    /// ```text
    /// P_{k,L}(t+1) = P_{k+1,L} cos^2 + P_{k+1,R} sin^2 + beta_{k+1} sin(2 theta)
    /// P_{k,R}(t+1) = P_{k-1,L} sin^2 + P_{k-1,R} cos^2 - beta_{k-1} sin(2 theta)
    /// ```
    ///
    /// The output carries no interference data: the new beta would require
    /// amplitudes, which probabilities alone do not determine.
    pub fn prob_step(&self, coin: &CoinParams<T>) -> PositionDist<T> {
        let n = self.p_left.len();
        let cc = coin.cos_theta() * coin.cos_theta();
        let ss = coin.sin_theta() * coin.sin_theta();
        let s2 = coin.sin_two_theta();

        let mut p_left = Vec::with_capacity(n + 2);
        let mut p_right = Vec::with_capacity(n + 2);
        for j in 0..n + 2 {
            p_left.push(if j < n {
                cc * self.p_left[j] + ss * self.p_right[j] + s2 * self.beta[j]
            } else {
                T::zero()
            });
            p_right.push(if j >= 2 && j - 2 < n {
                ss * self.p_left[j - 2] + cc * self.p_right[j - 2] - s2 * self.beta[j - 2]
            } else {
                T::zero()
            });
        }
        PositionDist {
            origin: self.origin - 1,
            p_left,
            p_right,
        }
    }
}

/// Probability-only position distribution, as produced by
/// [`PositionProfile::prob_step`].
#[derive(Debug, Clone, PartialEq)]
pub struct PositionDist<T> {
    origin: i64,
    p_left: Vec<T>,
    p_right: Vec<T>,
}

impl<T: WalkFloat> PositionDist<T> {
    /// Extracts |a_k|^2 and |b_k|^2 from a state.
    pub fn from_state(state: &WalkerState<T>) -> Self {
        Self {
            origin: state.origin(),
            p_left: state.left_amp().iter().map(|a| a.norm_sqr()).collect(),
            p_right: state.right_amp().iter().map(|b| b.norm_sqr()).collect(),
        }
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.p_left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p_left.is_empty()
    }

    pub fn p_left(&self) -> &[T] {
        &self.p_left
    }

    pub fn p_right(&self) -> &[T] {
        &self.p_right
    }

    /// Probability pair at site k; zero outside the window.
    pub fn at(&self, k: i64) -> (T, T) {
        let j = k - self.origin;
        if j < 0 || j >= self.p_left.len() as i64 {
            (T::zero(), T::zero())
        } else {
            (self.p_left[j as usize], self.p_right[j as usize])
        }
    }

    pub fn total(&self) -> T {
        self.p_left.iter().chain(self.p_right.iter()).copied().sum()
    }
}
