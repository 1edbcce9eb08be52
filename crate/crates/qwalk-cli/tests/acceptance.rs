//! Acceptance suite: one test per criterion, each printing a verdict line.
//!
//! Run with `cargo test -p qwalk-cli --test acceptance -- --nocapture` to see
//! one `criterion NN ...: PASS (...)` line per criterion.

use num_complex::Complex;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qwalk::{
    asymptotic_state, bessel_row, build_gaussian_state, closed_form, coherence,
    design_from_entropy, entanglement_entropy, gcd, master_step, predict_asymptotics,
    reduced_density, solve_delta, stationary_gcd, Branch, ChiralityDist64, CoinParams64,
    GaussianInitParams64, WalkerState64,
};
use qwalk_cli::{detect_t0, pi_grid, sweep_entropy_surface};

const THETAS: [f64; 3] = [
    std::f64::consts::FRAC_PI_6,
    std::f64::consts::FRAC_PI_4,
    std::f64::consts::FRAC_PI_3,
];

fn report(num: &str, label: &str, ok: bool, evidence: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {num} {label}: {verdict} ({evidence})");
    assert!(ok, "criterion {num} {label}: {verdict} ({evidence})");
}

/// The reference wide Gaussian start: width 100 at the origin, left weight
/// 0.3, relative phase solved so the chirality weights persist.
fn reference_gaussian(coin: &CoinParams64) -> WalkerState64 {
    let alpha = 0.3f64.sqrt().acos();
    let delta = solve_delta(alpha, coin).unwrap();
    let params = GaussianInitParams64::new(100.0, 0, alpha, delta).unwrap();
    build_gaussian_state(&params)
}

fn balanced_localized() -> WalkerState64 {
    WalkerState64::localized(
        Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex::new(0.0, std::f64::consts::FRAC_1_SQRT_2),
        0,
    )
    .unwrap()
}

#[test]
fn criterion_01_unitarity_over_long_horizons() {
    let mut worst: f64 = 0.0;
    for &theta in &THETAS {
        let coin = CoinParams64::new(theta).unwrap();
        for init in [balanced_localized(), reference_gaussian(&coin)] {
            let mut state = init;
            for t in 1..=10_000u64 {
                state = state.step(&coin);
                if t % 200 == 0 || t == 10_000 {
                    worst = worst.max((state.norm_sqr() - 1.0).abs());
                }
            }
        }
    }
    report(
        "01",
        "unitarity over 10^4 steps",
        worst < 1e-9,
        &format!("max |norm^2 - 1| = {worst:.3e} across 6 runs"),
    );
}

#[test]
fn criterion_02_chirality_settles_at_its_initial_weight() {
    let mut evidence = Vec::new();
    let mut ok = true;
    for &theta in &THETAS {
        let coin = CoinParams64::new(theta).unwrap();
        let mut state = reference_gaussian(&coin);
        let mut series = Vec::with_capacity(2000);
        for t in 1..=2000u64 {
            state = state.step(&coin);
            series.push((t, gcd(&state).unwrap().p_left()));
        }
        let rep = detect_t0(&series, 0.01, 50)
            .unwrap()
            .expect("the weight series should settle within 2000 steps");
        let dev = (rep.asymptotic_mean - 0.3).abs();
        ok &= dev <= 0.01;
        evidence.push(format!(
            "theta = {theta:.4}: t0 = {}, mean = {:.5}",
            rep.t0, rep.asymptotic_mean
        ));
    }
    report(
        "02",
        "left weight settles at 0.3 +- 0.01",
        ok,
        &evidence.join("; "),
    );
}

#[test]
fn criterion_03_master_step_is_an_identity_along_trajectories() {
    let coin = CoinParams64::new(std::f64::consts::FRAC_PI_3).unwrap();
    // An off-stationary phase keeps the weights moving the whole time.
    let params = GaussianInitParams64::new(25.0, 0, 0.6, 1.0).unwrap();
    let mut state = build_gaussian_state(&params);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let dist = gcd(&state).unwrap();
        let re_q = coherence(&state).re;
        let predicted = master_step(&dist, re_q, &coin).unwrap();
        state = state.step(&coin);
        let actual = gcd(&state).unwrap();
        worst = worst.max((predicted.p_left() - actual.p_left()).abs());
    }
    report(
        "03",
        "one-step master update matches the walk exactly",
        worst < 1e-12,
        &format!("max |predicted - simulated| = {worst:.3e} over 500 steps"),
    );
}

#[test]
fn criterion_04_closed_form_equals_iterated_updates() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let theta = rng.gen_range(0.15..1.42);
        let coin = CoinParams64::new(theta).unwrap();
        // Sample a coherence and a start inside the oscillation envelope so
        // every iterate stays a valid distribution; the cap keeps the
        // coherence itself inside the spinor bound |q| <= 1/2.
        let cap = 0.8f64.min(0.98 / coin.tan_theta());
        let ratio: f64 = rng.gen_range(-cap..cap);
        let re_q = 0.5 * ratio * coin.tan_theta();
        let p_star = 0.5 * (1.0 + ratio);
        let room = p_star.min(1.0 - p_star) * 0.99;
        let p0 = p_star + rng.gen_range(-1.0..1.0) * room;
        let init = ChiralityDist64::new(p0, 1.0 - p0).unwrap();
        let t = rng.gen_range(0..=200u64);
        let mut iterated = init;
        for _ in 0..t {
            iterated = master_step(&iterated, re_q, &coin).unwrap();
        }
        let direct = closed_form(&init, re_q, &coin, t).unwrap();
        worst = worst.max((direct.p_left() - iterated.p_left()).abs());
    }
    report(
        "04",
        "closed form equals iterated master steps",
        worst < 1e-12,
        &format!("max deviation {worst:.3e} over 1000 cases, t <= 200"),
    );
}

#[test]
fn criterion_05_stationary_weights_close_the_algebra() {
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let theta = (i + 1) as f64 * std::f64::consts::FRAC_PI_2 / 21.0;
        let coin = CoinParams64::new(theta).unwrap();
        for j in 0..20 {
            // alpha spans the feasible band [theta/2, (pi - theta)/2].
            let lo = theta / 2.0;
            let hi = (std::f64::consts::PI - theta) / 2.0;
            let alpha = lo + (hi - lo) * j as f64 / 19.0;
            let q0 = 0.5 * (2.0 * alpha).cos() * coin.tan_theta();
            let stat = stationary_gcd(q0, &coin).unwrap();
            let cos_sq = alpha.cos().powi(2);
            worst = worst
                .max((stat.p_left() - cos_sq).abs())
                .max((stat.p_right() - (1.0 - cos_sq)).abs());
        }
    }
    report(
        "05",
        "stationary weights reproduce (cos^2 a, sin^2 a)",
        worst <= 1e-14,
        &format!("max deviation {worst:.3e} on a 20x20 feasible grid"),
    );
}

/// Ascending power series for J_1, an oracle independent of the row engine.
fn j1_series(x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = half;
    let mut sum = term;
    for m in 1..40 {
        term *= -(half * half) / (m as f64 * (m + 1) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

#[test]
fn criterion_06_bessel_engine_orthogonality_and_pinned_value() {
    let mut worst: f64 = 0.0;
    for &x in &[10.0f64, 100.0, 1000.0, 10_000.0] {
        let order = qwalk::support_order(x) + 10;
        let row = bessel_row(x, order);
        for &k in &[0i64, 1, 5] {
            let mut sum = 0.0;
            for j in -(order as i64)..=order as i64 {
                sum += row.get(j) * row.get(j - k);
            }
            let target = if k == 0 { 1.0 } else { 0.0 };
            worst = worst.max((sum - target).abs());
        }
    }
    let j1 = bessel_row(1.0f64, 2).get(1);
    let oracle_dev = (j1 - j1_series(1.0)).abs();
    let pinned_dev = (j1 - 0.4400505857).abs();
    let ok = worst < 1e-10 && oracle_dev < 1e-12 && pinned_dev < 1e-9;
    report(
        "06",
        "Bessel rows pass orthogonality and the pinned J_1(1)",
        ok,
        &format!(
            "max orthogonality defect {worst:.3e}; |J_1(1) - series| = {oracle_dev:.3e}; \
             |J_1(1) - 0.4400505857| = {pinned_dev:.3e}"
        ),
    );
}

#[test]
fn criterion_07_late_time_kernel_matches_exact_evolution() {
    let coin = CoinParams64::new(std::f64::consts::FRAC_PI_4).unwrap();
    let alpha = std::f64::consts::FRAC_PI_3;
    let delta = solve_delta(alpha, &coin).unwrap();
    let params = GaussianInitParams64::new(20.0, 0, alpha, delta).unwrap();
    let init = build_gaussian_state(&params);
    let exact = init.evolve(&coin, 1000);
    let propagated = asymptotic_state(&init, &coin, 1000).unwrap();
    let exact_dist = gcd(&exact).unwrap();
    let kernel_dist = gcd(&propagated).unwrap();
    let dev = (exact_dist.p_left() - kernel_dist.p_left()).abs();
    report(
        "07",
        "Bessel propagation reproduces the exact weights at t = 1000",
        dev < 0.01,
        &format!(
            "exact p_left = {:.6}, kernel p_left = {:.6}, deviation {dev:.3e}",
            exact_dist.p_left(),
            kernel_dist.p_left()
        ),
    );
}

#[test]
fn criterion_08_entropy_extremes_are_reached() {
    let mut evidence = Vec::new();
    let mut ok = true;
    for &theta in &THETAS {
        let coin = CoinParams64::new(theta).unwrap();

        // Balanced mixing: maximal asymptotic entanglement.
        let predicted_max = predict_asymptotics(std::f64::consts::FRAC_PI_4, &coin)
            .unwrap()
            .s0;
        let delta = solve_delta(std::f64::consts::FRAC_PI_4, &coin).unwrap();
        let params =
            GaussianInitParams64::new(100.0, 0, std::f64::consts::FRAC_PI_4, delta).unwrap();
        let state = build_gaussian_state(&params).evolve(&coin, 2000);
        let s_max = entanglement_entropy(&reduced_density(&state).unwrap())
            .unwrap()
            .entropy();

        // Half-coin mixing: no asymptotic entanglement.
        let predicted_min = predict_asymptotics(theta / 2.0, &coin).unwrap().s0;
        let delta = solve_delta(theta / 2.0, &coin).unwrap();
        let params = GaussianInitParams64::new(100.0, 0, theta / 2.0, delta).unwrap();
        let state = build_gaussian_state(&params).evolve(&coin, 2000);
        let s_min = entanglement_entropy(&reduced_density(&state).unwrap())
            .unwrap()
            .entropy();

        ok &= (predicted_max - 1.0).abs() < 1e-12
            && (s_max - 1.0).abs() < 1e-3
            && predicted_min.abs() < 1e-12
            && s_min < 1e-3;
        evidence.push(format!(
            "theta = {theta:.4}: S(2000) = {s_max:.6} (top), {s_min:.2e} (bottom)"
        ));
    }
    report(
        "08",
        "entropy reaches 1 at balanced mixing and 0 at half-coin mixing",
        ok,
        &evidence.join("; "),
    );
}

#[test]
fn criterion_09_design_round_trip_through_full_simulation() {
    let targets = [0.99, 0.95, 0.90, 0.85, 0.70];
    let mut worst_predicted: f64 = 0.0;
    let mut worst_simulated: f64 = 0.0;
    for &theta in &THETAS {
        let coin = CoinParams64::new(theta).unwrap();
        for &s0 in &targets {
            for branch in [Branch::Left, Branch::Right] {
                let angles = design_from_entropy(s0, &coin, branch).unwrap();
                let predicted = predict_asymptotics(angles.alpha, &coin).unwrap().s0;
                worst_predicted = worst_predicted.max((predicted - s0).abs());
                let params = angles.into_params(100.0, 0).unwrap();
                let state = build_gaussian_state(&params).evolve(&coin, 2000);
                let simulated = entanglement_entropy(&reduced_density(&state).unwrap())
                    .unwrap()
                    .entropy();
                worst_simulated = worst_simulated.max((simulated - s0).abs());
            }
        }
    }
    let ok = worst_predicted < 1e-10 && worst_simulated < 0.01;
    report(
        "09",
        "designed states hit their entropy targets end to end",
        ok,
        &format!(
            "max |predicted - target| = {worst_predicted:.3e}, \
             max |S(2000) - target| = {worst_simulated:.3e} over 30 runs"
        ),
    );
}

#[test]
fn criterion_10_entropy_formula_matches_direct_diagonalization() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let p_left: f64 = rng.gen_range(0.02..0.98);
        let p_right = 1.0 - p_left;
        let frac = rng.gen_range(0.0..0.999);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let q = Complex::from_polar(frac * (p_left * p_right).sqrt(), phase);
        let rho = qwalk::ReducedCoinState64::new(p_left, p_right, q).unwrap();
        let entropy = entanglement_entropy(&rho).unwrap().entropy();

        // Oracle: roots of the characteristic polynomial via trace and
        // determinant, then the entropy sum evaluated term by term.
        let det = p_left * p_right - q.norm_sqr();
        let disc = (1.0 - 4.0 * det).max(0.0).sqrt();
        let lambdas = [0.5 * (1.0 + disc), 0.5 * (1.0 - disc)];
        let oracle: f64 = lambdas
            .iter()
            .map(|&l| if l > 0.0 { -l * l.log2() } else { 0.0 })
            .sum();
        worst = worst.max((entropy - oracle).abs());
    }
    report(
        "10",
        "entropy formula agrees with 2x2 diagonalization",
        worst < 1e-12,
        &format!("max deviation {worst:.3e} over 1000 random densities"),
    );
}

#[test]
fn criterion_11_entropy_surface_symmetry_and_two_root_structure() {
    let grid = pi_grid(0.02, 0.98, 49).unwrap();
    let mut ok = true;
    let mut notes = Vec::new();

    for &theta in &THETAS {
        let points = sweep_entropy_surface(&[theta], &grid).unwrap();
        // Mirror symmetry about the balanced weight.
        for (a, b) in points.iter().zip(points.iter().rev()) {
            match (a.s0, b.s0) {
                (Some(sa), Some(sb)) => ok &= (sa - sb).abs() < 1e-12,
                (None, None) => {}
                _ => ok = false,
            }
        }
        // Within the feasible band the entropy falls strictly away from 1/2,
        // so every level below 1 is crossed exactly twice.
        let upper: Vec<f64> = points
            .iter()
            .filter(|p| p.pi_left >= 0.5 && p.feasible)
            .filter_map(|p| p.s0)
            .collect();
        ok &= upper.windows(2).all(|w| w[1] < w[0]);
        notes.push(format!(
            "theta = {theta:.4}: {} feasible upper-half points, strictly decreasing",
            upper.len()
        ));
    }

    // The two designed solutions for one level sit symmetrically, and their
    // separation shrinks as the coin angle grows.
    let mut gaps = Vec::new();
    for &theta in &THETAS {
        let coin = CoinParams64::new(theta).unwrap();
        let left = design_from_entropy(0.8, &coin, Branch::Left).unwrap();
        let right = design_from_entropy(0.8, &coin, Branch::Right).unwrap();
        let pl_left = predict_asymptotics(left.alpha, &coin).unwrap().pi_left;
        let pl_right = predict_asymptotics(right.alpha, &coin).unwrap().pi_left;
        ok &= (pl_left + pl_right - 1.0).abs() < 1e-12 && pl_left > pl_right;
        gaps.push(pl_left - pl_right);
    }
    ok &= gaps[0] > gaps[1] && gaps[1] > gaps[2];
    notes.push(format!(
        "branch gaps at S0 = 0.8: {:.4} > {:.4} > {:.4}",
        gaps[0], gaps[1], gaps[2]
    ));

    report(
        "11",
        "entropy surface is symmetric with a two-root level structure",
        ok,
        &notes.join("; "),
    );
}

#[test]
fn criterion_12_spread_grows_linearly_in_time() {
    let coin = CoinParams64::new(std::f64::consts::FRAC_PI_4).unwrap();
    let at_1000 = balanced_localized().evolve(&coin, 1000);
    let sigma_1000 = at_1000.position_spread();
    let sigma_2000 = at_1000.evolve(&coin, 1000).position_spread();
    let ratio = sigma_2000 / sigma_1000;
    report(
        "12",
        "position spread doubles when time doubles",
        (1.9..=2.1).contains(&ratio),
        &format!("sigma(2000)/sigma(1000) = {ratio:.4}"),
    );
}
