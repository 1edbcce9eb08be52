//! Run configuration.
//!
//! - `RunConfig` is the JSON shape a run file deserializes into
//! - command-line flags override individual fields after the file loads
//! - `build_initial` turns the validated config into a coin and a start state

use std::path::PathBuf;

use anyhow::{bail, Context};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use qwalk::{
    design_from_entropy, solve_delta, Branch, CoinParams64, GaussianInitParams64, WalkerState64,
};

/// Which design branch to take when two mixing angles share a target entropy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum BranchSpec {
    /// Majority weight on the left chirality component.
    Left,
    /// Majority weight on the right chirality component.
    Right,
}

impl From<BranchSpec> for Branch {
    fn from(b: BranchSpec) -> Branch {
        match b {
            BranchSpec::Left => Branch::Left,
            BranchSpec::Right => Branch::Right,
        }
    }
}

/// Initial condition of a run.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitSpec {
    /// Walker concentrated on a single site with an explicit spinor.
    Localized {
        #[serde(default)]
        site: i64,
        #[serde(default = "one")]
        c_left_re: f64,
        #[serde(default)]
        c_left_im: f64,
        #[serde(default)]
        c_right_re: f64,
        #[serde(default)]
        c_right_im: f64,
    },
    /// Gaussian position profile with a uniform spinor.
    Gaussian {
        sigma0: f64,
        #[serde(default)]
        k0: i64,
        alpha: f64,
        /// Relative phase; omitted means "solve for the stationary phase".
        #[serde(default)]
        delta: Option<f64>,
    },
    /// Gaussian profile whose angles come from a target entanglement entropy.
    Designed {
        s0_target: f64,
        branch: BranchSpec,
        sigma0: f64,
        #[serde(default)]
        k0: i64,
    },
}

fn one() -> f64 {
    1.0
}

/// Full description of an evolution run.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub theta: f64,
    pub init: InitSpec,
    pub max_time: u64,
    #[serde(default = "default_stride")]
    pub record_stride: u64,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_window")]
    pub window: usize,
}

fn default_stride() -> u64 {
    1
}

fn default_epsilon() -> f64 {
    0.01
}

fn default_window() -> usize {
    50
}

impl RunConfig {
    /// Load a config from a JSON file.
    pub fn from_path(path: &std::path::Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        let cfg: RunConfig = serde_json::from_str(&text)
            .with_context(|| format!("cannot parse config file {}", path.display()))?;
        Ok(cfg)
    }

    /// Check the cross-field invariants that serde cannot express.
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.max_time < 1 {
            bail!("max_time must be at least 1, got {}", self.max_time);
        }
        if self.record_stride < 1 {
            bail!("record_stride must be at least 1, got {}", self.record_stride);
        }
        if self.epsilon <= 0.0 || self.epsilon.is_nan() {
            bail!("epsilon must be positive, got {}", self.epsilon);
        }
        if self.window < 2 {
            bail!("window must be at least 2, got {}", self.window);
        }
        Ok(())
    }

    /// Build the coin and the initial state this config describes.
    pub fn build_initial(&self) -> anyhow::Result<(CoinParams64, WalkerState64)> {
        let coin = CoinParams64::new(self.theta)?;
        let state = build_state(&self.init, &coin)?;
        Ok((coin, state))
    }
}

/// Materialize an initial state next to an already validated coin.
pub fn build_state(init: &InitSpec, coin: &CoinParams64) -> anyhow::Result<WalkerState64> {
    match *init {
        InitSpec::Localized {
            site,
            c_left_re,
            c_left_im,
            c_right_re,
            c_right_im,
        } => {
            let state = WalkerState64::localized(
                Complex::new(c_left_re, c_left_im),
                Complex::new(c_right_re, c_right_im),
                site,
            )?;
            Ok(state)
        }
        InitSpec::Gaussian {
            sigma0,
            k0,
            alpha,
            delta,
        } => {
            let delta = match delta {
                Some(d) => d,
                None => solve_delta(alpha, coin)?,
            };
            let params = GaussianInitParams64::new(sigma0, k0, alpha, delta)?;
            Ok(qwalk::build_gaussian_state(&params))
        }
        InitSpec::Designed {
            s0_target,
            branch,
            sigma0,
            k0,
        } => {
            let angles = design_from_entropy(s0_target, coin, branch.into())?;
            let params = angles.into_params(sigma0, k0)?;
            Ok(qwalk::build_gaussian_state(&params))
        }
    }
}

/// Initial-condition family selector for the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InitKind {
    Localized,
    Gaussian,
    Designed,
}

impl InitKind {
    fn of(spec: &InitSpec) -> InitKind {
        match spec {
            InitSpec::Localized { .. } => InitKind::Localized,
            InitSpec::Gaussian { .. } => InitKind::Gaussian,
            InitSpec::Designed { .. } => InitKind::Designed,
        }
    }

    fn name(self) -> &'static str {
        match self {
            InitKind::Localized => "localized",
            InitKind::Gaussian => "gaussian",
            InitKind::Designed => "designed",
        }
    }
}

/// Flag-level overrides applied on top of a config file's init block.
#[derive(Debug, Clone, Default)]
pub struct InitOverrides {
    pub kind: Option<InitKind>,
    pub site: Option<i64>,
    pub c_left: Option<(f64, f64)>,
    pub c_right: Option<(f64, f64)>,
    pub sigma0: Option<f64>,
    pub k0: Option<i64>,
    pub alpha: Option<f64>,
    pub delta: Option<f64>,
    pub s0_target: Option<f64>,
    pub branch: Option<BranchSpec>,
}

/// Parse a complex amplitude given as "re" or "re,im".
pub fn parse_complex(text: &str) -> anyhow::Result<(f64, f64)> {
    let mut parts = text.split(',');
    let re: f64 = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .with_context(|| format!("bad real part in {text:?}"))?;
    let im: f64 = match parts.next() {
        Some(p) => p
            .trim()
            .parse()
            .with_context(|| format!("bad imaginary part in {text:?}"))?,
        None => 0.0,
    };
    if parts.next().is_some() {
        bail!("amplitude {text:?} has more than two components");
    }
    Ok((re, im))
}

/// Combine a config file's init block with command-line overrides.
///
/// The flags select the family when `kind` is given, otherwise the file's
/// family stands; fields of the chosen family start from the file when the
/// families match and are then overridden one by one. Flags that belong to a
/// different family are rejected rather than ignored.
pub fn merge_init(base: Option<&InitSpec>, over: &InitOverrides) -> anyhow::Result<InitSpec> {
    let kind = over
        .kind
        .or_else(|| base.map(InitKind::of))
        .context("no initial condition: pass --init or a config file with an init block")?;
    let mut stray: Vec<&str> = Vec::new();
    let spec = match kind {
        InitKind::Localized => {
            let mut site = 0;
            let mut c_left = (1.0, 0.0);
            let mut c_right = (0.0, 0.0);
            if let Some(InitSpec::Localized {
                site: s,
                c_left_re,
                c_left_im,
                c_right_re,
                c_right_im,
            }) = base
            {
                site = *s;
                c_left = (*c_left_re, *c_left_im);
                c_right = (*c_right_re, *c_right_im);
            }
            if let Some(s) = over.site {
                site = s;
            }
            if let Some(c) = over.c_left {
                c_left = c;
            }
            if let Some(c) = over.c_right {
                c_right = c;
            }
            if over.sigma0.is_some() {
                stray.push("--sigma0");
            }
            if over.k0.is_some() {
                stray.push("--k0");
            }
            if over.alpha.is_some() {
                stray.push("--alpha");
            }
            if over.delta.is_some() {
                stray.push("--delta");
            }
            if over.s0_target.is_some() {
                stray.push("--s0-target");
            }
            if over.branch.is_some() {
                stray.push("--branch");
            }
            InitSpec::Localized {
                site,
                c_left_re: c_left.0,
                c_left_im: c_left.1,
                c_right_re: c_right.0,
                c_right_im: c_right.1,
            }
        }
        InitKind::Gaussian => {
            let mut sigma0 = None;
            let mut k0 = 0;
            let mut alpha = None;
            let mut delta = None;
            if let Some(InitSpec::Gaussian {
                sigma0: s,
                k0: k,
                alpha: a,
                delta: d,
            }) = base
            {
                sigma0 = Some(*s);
                k0 = *k;
                alpha = Some(*a);
                delta = *d;
            }
            if let Some(s) = over.sigma0 {
                sigma0 = Some(s);
            }
            if let Some(k) = over.k0 {
                k0 = k;
            }
            if let Some(a) = over.alpha {
                alpha = Some(a);
            }
            if let Some(d) = over.delta {
                delta = Some(d);
            }
            if over.site.is_some() {
                stray.push("--site");
            }
            if over.c_left.is_some() {
                stray.push("--c-left");
            }
            if over.c_right.is_some() {
                stray.push("--c-right");
            }
            if over.s0_target.is_some() {
                stray.push("--s0-target");
            }
            if over.branch.is_some() {
                stray.push("--branch");
            }
            InitSpec::Gaussian {
                sigma0: sigma0.context("gaussian init needs --sigma0")?,
                k0,
                alpha: alpha.context("gaussian init needs --alpha")?,
                delta,
            }
        }
        InitKind::Designed => {
            let mut s0_target = None;
            let mut branch = None;
            let mut sigma0 = None;
            let mut k0 = 0;
            if let Some(InitSpec::Designed {
                s0_target: s,
                branch: b,
                sigma0: sg,
                k0: k,
            }) = base
            {
                s0_target = Some(*s);
                branch = Some(*b);
                sigma0 = Some(*sg);
                k0 = *k;
            }
            if let Some(s) = over.s0_target {
                s0_target = Some(s);
            }
            if let Some(b) = over.branch {
                branch = Some(b);
            }
            if let Some(s) = over.sigma0 {
                sigma0 = Some(s);
            }
            if let Some(k) = over.k0 {
                k0 = k;
            }
            if over.site.is_some() {
                stray.push("--site");
            }
            if over.c_left.is_some() {
                stray.push("--c-left");
            }
            if over.c_right.is_some() {
                stray.push("--c-right");
            }
            if over.alpha.is_some() {
                stray.push("--alpha");
            }
            if over.delta.is_some() {
                stray.push("--delta");
            }
            InitSpec::Designed {
                s0_target: s0_target.context("designed init needs --s0-target")?,
                branch: branch.context("designed init needs --branch")?,
                sigma0: sigma0.context("designed init needs --sigma0")?,
                k0,
            }
        }
    };
    if !stray.is_empty() {
        bail!(
            "flags {} do not apply to a {} initial condition",
            stray.join(", "),
            kind.name()
        );
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_minimal_config_with_defaults() {
        let text = r#"{
            "theta": 0.7853981633974483,
            "init": {"type": "localized"},
            "max_time": 100
        }"#;
        let cfg: RunConfig = serde_json::from_str(text).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.record_stride, 1);
        assert_eq!(cfg.window, 50);
        assert!((cfg.epsilon - 0.01).abs() < 1e-15);
        assert!(cfg.output.is_none());
        let (coin, state) = cfg.build_initial().unwrap();
        assert!((coin.theta() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert_eq!(state.site_range(), (0, 0));
    }

    #[test]
    fn parses_a_gaussian_config_and_solves_the_phase() {
        let text = r#"{
            "theta": 0.7853981633974483,
            "init": {"type": "gaussian", "sigma0": 20.0, "alpha": 0.7853981633974483},
            "max_time": 10,
            "record_stride": 2
        }"#;
        let cfg: RunConfig = serde_json::from_str(text).unwrap();
        let (_, state) = cfg.build_initial().unwrap();
        // alpha = pi/4 solves to delta = pi/2, so left and right carry equal weight.
        let dist = qwalk::gcd(&state).unwrap();
        assert!(
            (dist.p_left() - 0.5).abs() < 1e-12,
            "expected balanced weights, got p_left = {}",
            dist.p_left()
        );
    }

    #[test]
    fn parses_a_designed_config() {
        let text = r#"{
            "theta": 1.0471975511965976,
            "init": {"type": "designed", "s0_target": 0.9, "branch": "right", "sigma0": 15.0},
            "max_time": 10
        }"#;
        let cfg: RunConfig = serde_json::from_str(text).unwrap();
        let (coin, state) = cfg.build_initial().unwrap();
        let angles = design_from_entropy(0.9, &coin, Branch::Right).unwrap();
        let report = qwalk::predict_asymptotics(angles.alpha, &coin).unwrap();
        assert!(
            (report.s0 - 0.9).abs() < 1e-10,
            "designed target missed: {}",
            report.s0
        );
        assert!(report.pi_right > 0.5, "right branch should favor the right");
        assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_cross_field_values() {
        let base = RunConfig {
            theta: 0.5,
            init: InitSpec::Localized {
                site: 0,
                c_left_re: 1.0,
                c_left_im: 0.0,
                c_right_re: 0.0,
                c_right_im: 0.0,
            },
            max_time: 10,
            record_stride: 1,
            output: None,
            epsilon: 0.01,
            window: 50,
        };
        let mut bad = base.clone();
        bad.max_time = 0;
        assert!(bad.validate().is_err());
        let mut bad = base.clone();
        bad.record_stride = 0;
        assert!(bad.validate().is_err());
        let mut bad = base.clone();
        bad.epsilon = 0.0;
        assert!(bad.validate().is_err());
        let mut bad = base;
        bad.window = 1;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{
            "theta": 0.5,
            "init": {"type": "localized"},
            "max_time": 10,
            "typo_field": 3
        }"#;
        assert!(serde_json::from_str::<RunConfig>(text).is_err());
    }

    #[test]
    fn complex_amplitudes_parse_with_and_without_an_imaginary_part() {
        assert_eq!(parse_complex("0.5").unwrap(), (0.5, 0.0));
        assert_eq!(parse_complex("0.5, -0.25").unwrap(), (0.5, -0.25));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn overrides_replace_fields_of_a_matching_init() {
        let base = InitSpec::Gaussian {
            sigma0: 20.0,
            k0: 5,
            alpha: 0.3,
            delta: Some(1.0),
        };
        let over = InitOverrides {
            alpha: Some(0.6),
            ..InitOverrides::default()
        };
        let merged = merge_init(Some(&base), &over).unwrap();
        match merged {
            InitSpec::Gaussian {
                sigma0,
                k0,
                alpha,
                delta,
            } => {
                assert_eq!(sigma0, 20.0);
                assert_eq!(k0, 5);
                assert_eq!(alpha, 0.6);
                assert_eq!(delta, Some(1.0));
            }
            other => panic!("unexpected init {other:?}"),
        }
    }

    #[test]
    fn changing_family_discards_the_file_init() {
        let base = InitSpec::Gaussian {
            sigma0: 20.0,
            k0: 5,
            alpha: 0.3,
            delta: None,
        };
        let over = InitOverrides {
            kind: Some(InitKind::Localized),
            site: Some(-3),
            ..InitOverrides::default()
        };
        let merged = merge_init(Some(&base), &over).unwrap();
        match merged {
            InitSpec::Localized { site, c_left_re, .. } => {
                assert_eq!(site, -3);
                assert_eq!(c_left_re, 1.0);
            }
            other => panic!("unexpected init {other:?}"),
        }
    }

    #[test]
    fn flags_from_another_family_are_rejected() {
        let over = InitOverrides {
            kind: Some(InitKind::Localized),
            sigma0: Some(12.0),
            ..InitOverrides::default()
        };
        let err = merge_init(None, &over).unwrap_err();
        assert!(
            err.to_string().contains("--sigma0"),
            "error should name the stray flag: {err}"
        );
    }

    #[test]
    fn missing_required_init_fields_are_reported() {
        let over = InitOverrides {
            kind: Some(InitKind::Gaussian),
            sigma0: Some(15.0),
            ..InitOverrides::default()
        };
        let err = merge_init(None, &over).unwrap_err();
        assert!(err.to_string().contains("--alpha"), "got: {err}");
        assert!(merge_init(None, &InitOverrides::default()).is_err());
    }
}
