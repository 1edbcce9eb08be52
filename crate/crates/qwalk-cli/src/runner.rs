//! Evolution drivers and trajectory files.
//!
//! - `run_evolution` steps the exact walk and samples observables on a stride
//! - `run_markov` evaluates the closed-form chirality trajectory
//! - the CSV writers emit one header row plus one row per sample

use std::path::Path;

use anyhow::Context;
use serde::Serialize;

use qwalk::{
    closed_form, coherence, entanglement_entropy, gcd, reduced_density, ChiralityDist64,
    CoinParams64, WalkerState64,
};

use crate::format::fmt_float;

/// Observables sampled from the exact walk at one recorded time.
#[derive(Debug, Clone, Serialize)]
pub struct EvolutionRecord {
    pub t: u64,
    pub p_left: f64,
    pub p_right: f64,
    pub re_q: f64,
    pub im_q: f64,
    pub entropy: f64,
    pub sigma: f64,
    pub norm: f64,
}

/// Measure every recorded observable on one state.
pub fn measure(state: &WalkerState64) -> anyhow::Result<EvolutionRecord> {
    let dist = gcd(state)?;
    let q = coherence(state);
    let rho = reduced_density(state)?;
    let report = entanglement_entropy(&rho)?;
    Ok(EvolutionRecord {
        t: state.time(),
        p_left: dist.p_left(),
        p_right: dist.p_right(),
        re_q: q.re,
        im_q: q.im,
        entropy: report.entropy(),
        sigma: state.position_spread(),
        norm: state.norm_sqr().sqrt(),
    })
}

/// Step the walk `max_time` times and record observables every `stride` steps.
///
/// Rows correspond to t = stride, 2 stride, ... up to max_time; the initial
/// state itself is not a row.
pub fn run_evolution(
    coin: &CoinParams64,
    init: &WalkerState64,
    max_time: u64,
    stride: u64,
) -> anyhow::Result<Vec<EvolutionRecord>> {
    anyhow::ensure!(stride >= 1, "record_stride must be at least 1");
    let mut records = Vec::with_capacity((max_time / stride) as usize);
    let mut state = init.clone();
    for t in 1..=max_time {
        state = state.step(coin);
        if t % stride == 0 {
            records.push(measure(&state)?);
        }
    }
    Ok(records)
}

/// One point of a closed-form chirality trajectory.
#[derive(Debug, Clone, Serialize)]
pub struct MarkovRecord {
    pub t: u64,
    pub p_left: f64,
    pub p_right: f64,
}

/// Evaluate the closed-form trajectory at t = 0, stride, 2 stride, ... max_time.
pub fn run_markov(
    coin: &CoinParams64,
    init: &ChiralityDist64,
    re_q: f64,
    max_time: u64,
    stride: u64,
) -> anyhow::Result<Vec<MarkovRecord>> {
    anyhow::ensure!(stride >= 1, "record_stride must be at least 1");
    let mut records = Vec::with_capacity((max_time / stride + 1) as usize);
    let mut t = 0;
    while t <= max_time {
        let dist = closed_form(init, re_q, coin, t)?;
        records.push(MarkovRecord {
            t,
            p_left: dist.p_left(),
            p_right: dist.p_right(),
        });
        t += stride;
    }
    Ok(records)
}

/// Write an evolution series as CSV with a fixed column order.
pub fn write_evolution_csv(path: &Path, records: &[EvolutionRecord]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create output file {}", path.display()))?;
    w.write_record([
        "t", "p_left", "p_right", "re_q", "im_q", "entropy", "sigma", "norm",
    ])?;
    for r in records {
        w.write_record([
            r.t.to_string(),
            fmt_float(r.p_left),
            fmt_float(r.p_right),
            fmt_float(r.re_q),
            fmt_float(r.im_q),
            fmt_float(r.entropy),
            fmt_float(r.sigma),
            fmt_float(r.norm),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Write a closed-form chirality trajectory as CSV.
pub fn write_markov_csv(path: &Path, records: &[MarkovRecord]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create output file {}", path.display()))?;
    w.write_record(["t", "p_left", "p_right"])?;
    for r in records {
        w.write_record([r.t.to_string(), fmt_float(r.p_left), fmt_float(r.p_right)])?;
    }
    w.flush()?;
    Ok(())
}

/// Read a (time, value) series back out of a CSV file by column name.
pub fn read_series_csv(
    path: &Path,
    time_column: &str,
    value_column: &str,
) -> anyhow::Result<Vec<(u64, f64)>> {
    let mut reader = csv::Reader::from_path(path)
        .with_context(|| format!("cannot read series file {}", path.display()))?;
    let headers = reader.headers()?.clone();
    let t_idx = headers
        .iter()
        .position(|h| h == time_column)
        .with_context(|| format!("no column named {time_column}"))?;
    let v_idx = headers
        .iter()
        .position(|h| h == value_column)
        .with_context(|| format!("no column named {value_column}"))?;
    let mut series = Vec::new();
    for row in reader.records() {
        let row = row?;
        let t: u64 = row
            .get(t_idx)
            .context("short row")?
            .parse()
            .context("unparseable time entry")?;
        let v: f64 = row
            .get(v_idx)
            .context("short row")?
            .parse()
            .context("unparseable value entry")?;
        series.push((t, v));
    }
    Ok(series)
}
