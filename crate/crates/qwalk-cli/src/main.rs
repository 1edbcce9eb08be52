//! Command-line front end.
//!
//! Every subcommand prints a single JSON summary line on stdout; bulk data
//! goes to CSV files. Any failure prints a single JSON error line on stderr
//! and exits nonzero.

use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qwalk::{
    asymptotic_state, build_gaussian_state, coherence, design_from_entropy, gcd,
    predict_asymptotics, solve_delta, stationary_gcd, ChiralityDist64, CoinParams64,
    GaussianInitParams64,
};
use qwalk_cli::{
    config::{merge_init, parse_complex, BranchSpec, InitKind, InitOverrides, RunConfig},
    detect::detect_t0,
    runner::{read_series_csv, run_evolution, run_markov, write_evolution_csv, write_markov_csv},
    sweep::{pi_grid, sweep_entropy_surface, write_sweep_csv},
};

#[derive(Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Discrete-time quantum walk experiments on the line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Step the exact walk and write an observable series as CSV.
    Evolve(EvolveArgs),
    /// Write the closed-form chirality trajectory as CSV.
    Markov(MarkovArgs),
    /// Propagate a Gaussian start to one late time through the Bessel kernel.
    Asymptotic(AsymptoticArgs),
    /// Solve for the Gaussian angles that reach a target asymptotic entropy.
    Design(DesignArgs),
    /// Tabulate the entropy surface over coin angle and stationary weight.
    Sweep(SweepArgs),
    /// Detect the convergence time of a recorded series.
    Detect(DetectArgs),
}

#[derive(Args)]
struct EvolveArgs {
    /// JSON run description; the flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Coin angle in radians.
    #[arg(long)]
    theta: Option<f64>,
    /// Initial-condition family.
    #[arg(long, value_enum)]
    init: Option<InitKind>,
    /// Start site of a localized walker.
    #[arg(long)]
    site: Option<i64>,
    /// Left amplitude of a localized walker, "re" or "re,im".
    #[arg(long)]
    c_left: Option<String>,
    /// Right amplitude of a localized walker, "re" or "re,im".
    #[arg(long)]
    c_right: Option<String>,
    /// Width of a Gaussian profile.
    #[arg(long)]
    sigma0: Option<f64>,
    /// Center site of a Gaussian profile.
    #[arg(long)]
    k0: Option<i64>,
    /// Mixing angle of a Gaussian start.
    #[arg(long)]
    alpha: Option<f64>,
    /// Relative phase of a Gaussian start; omitted means solve for it.
    #[arg(long)]
    delta: Option<f64>,
    /// Target asymptotic entropy of a designed start.
    #[arg(long)]
    s0_target: Option<f64>,
    /// Design branch of a designed start.
    #[arg(long, value_enum)]
    branch: Option<BranchSpec>,
    /// Number of time steps.
    #[arg(long)]
    max_time: Option<u64>,
    /// Record every this many steps.
    #[arg(long)]
    stride: Option<u64>,
    /// Output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also run convergence detection on the recorded left-weight series.
    #[arg(long)]
    detect: bool,
    /// Detection tolerance.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Detection lookahead window, in recorded samples.
    #[arg(long)]
    window: Option<usize>,
}

#[derive(Args)]
struct MarkovArgs {
    /// Coin angle in radians.
    #[arg(long)]
    theta: f64,
    /// Initial left weight.
    #[arg(long)]
    p_left: f64,
    /// Real part of the conserved coherence.
    #[arg(long, default_value_t = 0.0)]
    re_q: f64,
    /// Last time to evaluate.
    #[arg(long)]
    max_time: u64,
    /// Evaluate every this many steps.
    #[arg(long, default_value_t = 1)]
    stride: u64,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AsymptoticArgs {
    /// Coin angle in radians.
    #[arg(long)]
    theta: f64,
    /// Width of the Gaussian start.
    #[arg(long)]
    sigma0: f64,
    /// Center site of the Gaussian start.
    #[arg(long, default_value_t = 0)]
    k0: i64,
    /// Mixing angle of the Gaussian start.
    #[arg(long)]
    alpha: f64,
    /// Relative phase; omitted means solve for it.
    #[arg(long)]
    delta: Option<f64>,
    /// Time to propagate to.
    #[arg(long)]
    time: u64,
}

#[derive(Args)]
struct DesignArgs {
    /// Target asymptotic entanglement entropy in [0, 1].
    #[arg(long)]
    s0: f64,
    /// Coin angle in radians.
    #[arg(long)]
    theta: f64,
    /// Which of the two mirror solutions to take.
    #[arg(long, value_enum)]
    branch: BranchSpec,
    /// Gaussian width the angles will be used with.
    #[arg(long, default_value_t = 50.0)]
    sigma0: f64,
    /// Gaussian center site.
    #[arg(long, default_value_t = 0)]
    k0: i64,
}

#[derive(Args)]
struct SweepArgs {
    /// Coin angles to sweep, comma separated.
    #[arg(long, value_delimiter = ',',
        default_values_t = [
            std::f64::consts::FRAC_PI_6,
            std::f64::consts::FRAC_PI_4,
            std::f64::consts::FRAC_PI_3,
        ])]
    thetas: Vec<f64>,
    /// Smallest stationary left weight on the grid.
    #[arg(long, default_value_t = 0.02)]
    pi_min: f64,
    /// Largest stationary left weight on the grid.
    #[arg(long, default_value_t = 0.98)]
    pi_max: f64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 49)]
    pi_count: usize,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DetectArgs {
    /// CSV series to scan.
    #[arg(long)]
    input: PathBuf,
    /// Detection tolerance.
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    /// Lookahead window, in recorded samples.
    #[arg(long, default_value_t = 50)]
    window: usize,
    /// Column holding the sample times.
    #[arg(long, default_value = "t")]
    time_column: String,
    /// Column holding the sample values.
    #[arg(long, default_value = "p_left")]
    value_column: String,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return;
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            std::process::exit(2);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("{}", json!({ "error": format!("{e:#}") }));
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Evolve(args) => cmd_evolve(args),
        Command::Markov(args) => cmd_markov(args),
        Command::Asymptotic(args) => cmd_asymptotic(args),
        Command::Design(args) => cmd_design(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Detect(args) => cmd_detect(args),
    }
}

/// Layer the evolve flags over an optional config file.
fn resolve_config(args: &EvolveArgs) -> anyhow::Result<RunConfig> {
    let base = args
        .config
        .as_deref()
        .map(RunConfig::from_path)
        .transpose()?;
    let overrides = InitOverrides {
        kind: args.init,
        site: args.site,
        c_left: args.c_left.as_deref().map(parse_complex).transpose()?,
        c_right: args.c_right.as_deref().map(parse_complex).transpose()?,
        sigma0: args.sigma0,
        k0: args.k0,
        alpha: args.alpha,
        delta: args.delta,
        s0_target: args.s0_target,
        branch: args.branch,
    };
    let init = merge_init(base.as_ref().map(|c| &c.init), &overrides)?;
    let theta = args
        .theta
        .or(base.as_ref().map(|c| c.theta))
        .context("no coin angle: pass --theta or set \"theta\" in the config")?;
    let max_time = args
        .max_time
        .or(base.as_ref().map(|c| c.max_time))
        .context("no horizon: pass --max-time or set \"max_time\" in the config")?;
    let cfg = RunConfig {
        theta,
        init,
        max_time,
        record_stride: args
            .stride
            .or(base.as_ref().map(|c| c.record_stride))
            .unwrap_or(1),
        output: args
            .out
            .clone()
            .or(base.as_ref().and_then(|c| c.output.clone())),
        epsilon: args
            .epsilon
            .or(base.as_ref().map(|c| c.epsilon))
            .unwrap_or(0.01),
        window: args
            .window
            .or(base.as_ref().map(|c| c.window))
            .unwrap_or(50),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn cmd_evolve(args: EvolveArgs) -> anyhow::Result<()> {
    let cfg = resolve_config(&args)?;
    let out = cfg
        .output
        .clone()
        .context("no output path: pass --out or set \"output\" in the config")?;
    let (coin, state) = cfg.build_initial()?;
    let records = run_evolution(&coin, &state, cfg.max_time, cfg.record_stride)?;
    write_evolution_csv(&out, &records)?;
    let mut summary = json!({
        "command": "evolve",
        "theta": cfg.theta,
        "max_time": cfg.max_time,
        "record_stride": cfg.record_stride,
        "rows": records.len(),
        "output": out,
    });
    if let Some(last) = records.last() {
        summary["final"] = json!({
            "t": last.t,
            "p_left": last.p_left,
            "entropy": last.entropy,
            "sigma": last.sigma,
            "norm": last.norm,
        });
    }
    if args.detect {
        let series: Vec<(u64, f64)> = records.iter().map(|r| (r.t, r.p_left)).collect();
        summary["detection"] = match detect_t0(&series, cfg.epsilon, cfg.window)? {
            Some(rep) => json!({
                "converged": true,
                "t0": rep.t0,
                "asymptotic_mean": rep.asymptotic_mean,
                "max_residual": rep.max_residual,
            }),
            None => json!({ "converged": false }),
        };
    }
    println!("{summary}");
    Ok(())
}

fn cmd_markov(args: MarkovArgs) -> anyhow::Result<()> {
    let coin = CoinParams64::new(args.theta)?;
    let init = ChiralityDist64::new(args.p_left, 1.0 - args.p_left)?;
    let records = run_markov(&coin, &init, args.re_q, args.max_time, args.stride)?;
    write_markov_csv(&args.out, &records)?;
    let stationary = stationary_gcd(args.re_q, &coin)?;
    println!(
        "{}",
        json!({
            "command": "markov",
            "theta": args.theta,
            "re_q": args.re_q,
            "rows": records.len(),
            "output": args.out,
            "stationary_p_left": stationary.p_left(),
        })
    );
    Ok(())
}

fn cmd_asymptotic(args: AsymptoticArgs) -> anyhow::Result<()> {
    let coin = CoinParams64::new(args.theta)?;
    let delta = match args.delta {
        Some(d) => d,
        None => solve_delta(args.alpha, &coin)?,
    };
    let params = GaussianInitParams64::new(args.sigma0, args.k0, args.alpha, delta)?;
    let init = build_gaussian_state(&params);
    let state = asymptotic_state(&init, &coin, args.time)?;
    let dist = gcd(&state)?;
    let q = coherence(&state);
    let predicted = predict_asymptotics(args.alpha, &coin)?;
    println!(
        "{}",
        json!({
            "command": "asymptotic",
            "t": args.time,
            "argument": args.time as f64 * coin.cos_theta(),
            "delta": delta,
            "p_left": dist.p_left(),
            "p_right": dist.p_right(),
            "re_q": q.re,
            "im_q": q.im,
            "norm": state.norm_sqr().sqrt(),
            "predicted": {
                "pi_left": predicted.pi_left,
                "pi_right": predicted.pi_right,
                "s0": predicted.s0,
            },
        })
    );
    Ok(())
}

fn cmd_design(args: DesignArgs) -> anyhow::Result<()> {
    let coin = CoinParams64::new(args.theta)?;
    let angles = design_from_entropy(args.s0, &coin, args.branch.into())?;
    let (alpha, delta) = (angles.alpha, angles.delta);
    let record = predict_asymptotics(alpha, &coin)?;
    // Validates the width the caller intends to pair the angles with.
    angles.into_params(args.sigma0, args.k0)?;
    println!(
        "{}",
        json!({
            "command": "design",
            "theta": args.theta,
            "s0_target": args.s0,
            "branch": match args.branch {
                BranchSpec::Left => "left",
                BranchSpec::Right => "right",
            },
            "alpha": alpha,
            "delta": delta,
            "sigma0": args.sigma0,
            "k0": args.k0,
            "pi_left": record.pi_left,
            "pi_right": record.pi_right,
            "re_q0": record.q0.re,
            "im_q0": record.q0.im,
            "lambda_plus": record.lambda_plus,
            "lambda_minus": record.lambda_minus,
            "s0": record.s0,
            "s_shannon": record.s_shannon,
        })
    );
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<()> {
    let grid = pi_grid(args.pi_min, args.pi_max, args.pi_count)?;
    let points = sweep_entropy_surface(&args.thetas, &grid)?;
    write_sweep_csv(&args.out, &points)?;
    let feasible = points.iter().filter(|p| p.feasible).count();
    println!(
        "{}",
        json!({
            "command": "sweep",
            "thetas": args.thetas.len(),
            "grid_points": grid.len(),
            "rows": points.len(),
            "feasible": feasible,
            "output": args.out,
        })
    );
    Ok(())
}

fn cmd_detect(args: DetectArgs) -> anyhow::Result<()> {
    let series = read_series_csv(&args.input, &args.time_column, &args.value_column)?;
    let summary = match detect_t0(&series, args.epsilon, args.window)? {
        Some(rep) => json!({
            "command": "detect",
            "samples": series.len(),
            "converged": true,
            "t0": rep.t0,
            "asymptotic_mean": rep.asymptotic_mean,
            "max_residual": rep.max_residual,
        }),
        None => json!({
            "command": "detect",
            "samples": series.len(),
            "converged": false,
        }),
    };
    println!("{summary}");
    Ok(())
}
