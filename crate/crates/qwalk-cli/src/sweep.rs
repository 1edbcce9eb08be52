//! Entropy surface sweeps over coin angle and stationary left weight.
//!
//! For each (theta, pi_left) pair the sweep reports the asymptotic
//! entanglement entropy of the Gaussian family member that reaches that
//! stationary weight, or marks the pair infeasible when no member does.

use std::path::Path;

use anyhow::Context;
use serde::Serialize;

use qwalk::{binary_entropy, CoinParams64};

use crate::format::fmt_float;

/// One grid point of the sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub theta: f64,
    pub pi_left: f64,
    /// Asymptotic entanglement entropy, absent when the point is infeasible.
    pub s0: Option<f64>,
    pub feasible: bool,
}

/// Evaluate the entropy surface on the product grid `thetas` x `pi_grid`.
///
/// A stationary weight is reachable only when |2 pi_left - 1| <= cos(theta);
/// outside that band the row is kept with `feasible = false` so the grid
/// shape of the output never depends on the values.
pub fn sweep_entropy_surface(thetas: &[f64], pi_grid: &[f64]) -> anyhow::Result<Vec<SweepPoint>> {
    let mut points = Vec::with_capacity(thetas.len() * pi_grid.len());
    for &theta in thetas {
        let coin = CoinParams64::new(theta)?;
        coin.require_interior()?;
        for &pi_left in pi_grid {
            anyhow::ensure!(
                (0.0..=1.0).contains(&pi_left),
                "pi_left must lie in [0, 1], got {pi_left}"
            );
            let cos_two_alpha = 2.0 * pi_left - 1.0;
            let feasible = cos_two_alpha.abs() <= coin.cos_theta();
            let s0 = feasible.then(|| {
                let lambda_plus = 0.5 * (1.0 + cos_two_alpha.abs() / coin.cos_theta());
                binary_entropy(lambda_plus)
            });
            points.push(SweepPoint {
                theta,
                pi_left,
                s0,
                feasible,
            });
        }
    }
    Ok(points)
}

/// Build an inclusive, evenly spaced grid of stationary weights.
pub fn pi_grid(min: f64, max: f64, count: usize) -> anyhow::Result<Vec<f64>> {
    anyhow::ensure!(count >= 2, "grid needs at least 2 points, got {count}");
    anyhow::ensure!(
        min < max && (0.0..=1.0).contains(&min) && (0.0..=1.0).contains(&max),
        "grid bounds must satisfy 0 <= min < max <= 1, got [{min}, {max}]"
    );
    let step = (max - min) / (count - 1) as f64;
    Ok((0..count).map(|i| min + step * i as f64).collect())
}

/// Write a sweep as CSV; infeasible rows carry an empty entropy field.
pub fn write_sweep_csv(path: &Path, points: &[SweepPoint]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create output file {}", path.display()))?;
    w.write_record(["theta", "pi_left", "s0", "feasible"])?;
    for p in points {
        w.write_record([
            fmt_float(p.theta),
            fmt_float(p.pi_left),
            p.s0.map(fmt_float).unwrap_or_default(),
            p.feasible.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    #[test]
    fn balanced_weight_reaches_full_entropy() {
        let points = sweep_entropy_surface(&[FRAC_PI_4], &[0.5]).unwrap();
        assert_eq!(points.len(), 1);
        assert!(points[0].feasible);
        let s0 = points[0].s0.unwrap();
        assert!(
            (s0 - 1.0).abs() < 1e-15,
            "pi_left = 1/2 must give maximal entropy, got {s0}"
        );
    }

    #[test]
    fn weights_outside_the_band_are_infeasible() {
        // cos(pi/3) = 1/2, so pi_left = 0.9 needs |2 0.9 - 1| = 0.8 > 1/2.
        let points = sweep_entropy_surface(&[FRAC_PI_3], &[0.9]).unwrap();
        assert!(!points[0].feasible);
        assert!(points[0].s0.is_none());
    }

    #[test]
    fn the_surface_is_symmetric_about_the_balanced_weight() {
        let grid = pi_grid(0.3, 0.7, 41).unwrap();
        let points = sweep_entropy_surface(&[0.9], &grid).unwrap();
        for (a, b) in points.iter().zip(points.iter().rev()) {
            assert!(
                (a.pi_left + b.pi_left - 1.0).abs() < 1e-12,
                "grid is not mirror symmetric"
            );
            match (a.s0, b.s0) {
                (Some(sa), Some(sb)) => assert!(
                    (sa - sb).abs() < 1e-12,
                    "entropy differs between pi_left = {} and {}: {} vs {}",
                    a.pi_left,
                    b.pi_left,
                    sa,
                    sb
                ),
                (None, None) => {}
                _ => panic!("feasibility is not symmetric"),
            }
        }
    }

    #[test]
    fn grid_endpoints_are_exact() {
        let grid = pi_grid(0.1, 0.9, 5).unwrap();
        assert_eq!(grid.len(), 5);
        assert!((grid[0] - 0.1).abs() < 1e-15);
        assert!((grid[4] - 0.9).abs() < 1e-12);
        assert!(pi_grid(0.5, 0.5, 3).is_err());
        assert!(pi_grid(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn degenerate_coins_are_rejected() {
        assert!(sweep_entropy_surface(&[0.0], &[0.5]).is_err());
    }
}
