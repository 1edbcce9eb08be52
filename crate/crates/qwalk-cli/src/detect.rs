//! Convergence-time detection on recorded series.
//!
//! A series has converged at the first recorded time t0 >= 1 from which every
//! sample in a lookahead window stays within epsilon of the trailing mean,
//! the average of all samples from the candidate to the end of the series.
//! A series that never settles is a reportable outcome, not an error.

use serde::Serialize;

/// Summary of a detected convergence.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    /// First recorded time from which the series stays near its trailing mean.
    pub t0: u64,
    /// Mean of all samples from t0 to the end of the series.
    pub asymptotic_mean: f64,
    /// Largest deviation from that mean over the whole tail, window included.
    pub max_residual: f64,
}

/// Scan a (time, value) series for its convergence time.
///
/// Returns `Ok(None)` when no candidate qualifies; that is the no-convergence
/// outcome. Errors are reserved for unusable inputs.
pub fn detect_t0(
    samples: &[(u64, f64)],
    epsilon: f64,
    window: usize,
) -> anyhow::Result<Option<ConvergenceReport>> {
    anyhow::ensure!(epsilon > 0.0, "epsilon must be positive, got {epsilon}");
    anyhow::ensure!(window >= 2, "window must be at least 2, got {window}");
    anyhow::ensure!(
        samples.len() > window,
        "series of {} samples is shorter than the window {}",
        samples.len(),
        window
    );
    for pair in samples.windows(2) {
        anyhow::ensure!(
            pair[0].0 < pair[1].0,
            "sample times must be strictly increasing, got {} then {}",
            pair[0].0,
            pair[1].0
        );
    }

    let n = samples.len();
    // suffix[i] holds the sum of all values from index i to the end.
    let mut suffix = vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + samples[i].1;
    }

    for i in 0..n {
        if samples[i].0 < 1 {
            continue;
        }
        // The lookahead window must fit inside the series.
        if i + window >= n {
            break;
        }
        let mean = suffix[i] / (n - i) as f64;
        let settled = samples[i..=i + window]
            .iter()
            .all(|&(_, v)| (v - mean).abs() < epsilon);
        if settled {
            let max_residual = samples[i..]
                .iter()
                .map(|&(_, v)| (v - mean).abs())
                .fold(0.0, f64::max);
            return Ok(Some(ConvergenceReport {
                t0: samples[i].0,
                asymptotic_mean: mean,
                max_residual,
            }));
        }
    }
    Ok(None)
}
