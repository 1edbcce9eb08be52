//! Experiment plumbing around the `qwalk` library.
//!
//! - `config`: JSON run descriptions and initial-state construction
//! - `runner`: evolution and closed-form trajectory drivers plus CSV files
//! - `detect`: convergence-time detection on recorded series
//! - `sweep`: entropy surface grids over coin angle and stationary weight
//! - `format`: the fixed float-to-text convention all CSV columns share

pub mod config;
pub mod detect;
pub mod format;
pub mod runner;
pub mod sweep;

pub use config::{
    build_state, merge_init, parse_complex, BranchSpec, InitKind, InitOverrides, InitSpec,
    RunConfig,
};
pub use detect::{detect_t0, ConvergenceReport};
pub use format::fmt_float;
pub use runner::{
    measure, read_series_csv, run_evolution, run_markov, write_evolution_csv, write_markov_csv,
    EvolutionRecord, MarkovRecord,
};
pub use sweep::{pi_grid, sweep_entropy_surface, write_sweep_csv, SweepPoint};
