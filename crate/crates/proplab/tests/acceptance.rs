//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`.

use rand::{Rng, SeedableRng};

use proplab::{
    bts_height_gain, compare_orderings, free_space_loss, hata_loss, lee_loss, log_distance_loss,
    max_radius, ms_height_gain, okumura_loss, run_sweep, Environment, FigurePreset, LeeParameters,
    LeeScenario, LogDistanceParams, Model, ModelEvaluator, OkumuraCurves, RadioLink, Strictness,
    SweepResult,
};

fn check(criterion: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("{status}: {criterion} - {detail}");
    assert!(ok, "{criterion}: {detail}");
}

fn evaluator() -> ModelEvaluator<'static> {
    ModelEvaluator::new(OkumuraCurves::default_table())
}

fn preset_result(preset: FigurePreset) -> SweepResult {
    let eval = evaluator()
        .with_env(preset.env())
        .with_strictness(preset.strictness());
    run_sweep(&preset.spec(), &eval).unwrap()
}

/// Criterion 1: the all-nominal Lee scenario at d = 1.6 km, f = 900 MHz
/// yields exactly 124 dB in nominal-exact alpha4 mode.
#[test]
fn criterion_1_lee_nominal_anchor() {
    let loss = lee_loss(&LeeScenario::nominal(), &LeeParameters::default()).unwrap();
    check(
        "criterion 1 (lee nominal anchor)",
        (loss.value_db - 124.0).abs() < 1e-6,
        &format!("nominal scenario -> {:.9} dB (expected 124.0 +/- 1e-6)", loss.value_db),
    );
}

/// Criterion 2: Hata closed-form values against independently hand-computed
/// oracles at (900 MHz, 30 m, 3 m), 1 km and 2 km.
#[test]
fn criterion_2_hata_oracle() {
    let link = RadioLink::new(900.0, 1.0, 30.0, 3.0).unwrap();
    let at_1km = hata_loss(&link, Strictness::Strict).unwrap().value_db;
    let at_2km = hata_loss(&link.with_distance(2.0), Strictness::Strict)
        .unwrap()
        .value_db;
    check(
        "criterion 2 (hata closed-form oracle)",
        (at_1km - 123.73).abs() < 0.01 && (at_2km - 134.33).abs() < 0.01,
        &format!("1 km -> {at_1km:.4} dB (123.73), 2 km -> {at_2km:.4} dB (134.33), tol 0.01"),
    );
}

/// Criterion 3: Okumura structure - interpolation node-exactness over the
/// whole default table, gain spot values, loss monotone in distance.
#[test]
fn criterion_3_okumura_structure() {
    let table = OkumuraCurves::default_table();

    let mut node_errors = 0usize;
    for (i, &f) in table.frequencies_mhz().iter().enumerate() {
        for (j, &d) in table.distances_km().iter().enumerate() {
            let mut flags = Vec::new();
            let v = table.amu(f, d, Strictness::Strict, &mut flags).unwrap();
            if v != table.amu_at_node(i, j) {
                node_errors += 1;
            }
        }
    }

    let mut flags = Vec::new();
    let g_bts_100 = bts_height_gain(100.0, Strictness::Permissive, &mut flags).unwrap();
    let g_ms_3 = ms_height_gain(3.0, Strictness::Strict, &mut flags).unwrap();
    let g_ms_5 = ms_height_gain(5.0, Strictness::Strict, &mut flags).unwrap();
    let gains_ok = (g_bts_100 + 6.02).abs() < 0.01
        && g_ms_3.abs() < 0.01
        && (g_ms_5 - 4.44).abs() < 0.01;

    let mut monotone = true;
    let mut prev = f64::NEG_INFINITY;
    for step in 0..100 {
        let d = 1.0 + 99.0 * step as f64 / 99.0;
        let link = RadioLink::new(900.0, d, 50.0, 3.0).unwrap();
        let v = okumura_loss(&link, Environment::Urban, table, Strictness::Strict)
            .unwrap()
            .value_db;
        if v <= prev {
            monotone = false;
        }
        prev = v;
    }

    check(
        "criterion 3 (okumura structural suite)",
        node_errors == 0 && gains_ok && monotone,
        &format!(
            "node errors: {node_errors}/96, G(100m)={g_bts_100:.3}, G(3m)={g_ms_3:.3}, G(5m)={g_ms_5:.3}, monotone in d: {monotone}"
        ),
    );
}

/// Criterion 4: figure-behavior monotonicity at the paper scenario presets,
/// 50 grid points per sweep.
#[test]
fn criterion_4_figure_behavior() {
    let non_increasing = |s: &[f64]| s.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let strictly_increasing = |s: &[f64]| s.windows(2).all(|w| w[1] > w[0]);

    let mut ok = true;
    let mut details = Vec::new();
    for (preset, check_fn, what) in [
        (
            FigurePreset::Fig10,
            &non_increasing as &dyn Fn(&[f64]) -> bool,
            "non-increasing in bts height",
        ),
        (FigurePreset::Fig11, &non_increasing, "non-increasing in ms height"),
        (
            FigurePreset::Fig12,
            &strictly_increasing as &dyn Fn(&[f64]) -> bool,
            "strictly increasing in distance",
        ),
    ] {
        let result = preset_result(preset);
        assert!(result.axis.len() >= 50);
        for series in &result.series {
            let values: Vec<f64> = series.losses.iter().map(|l| l.value_db).collect();
            let holds = check_fn(&values);
            if !holds {
                ok = false;
                details.push(format!("{} {} violated", series.model, what));
            }
        }
    }
    let detail = if details.is_empty() {
        "all models monotone on all three preset sweeps (50 points each)".to_string()
    } else {
        details.join("; ")
    };
    check("criterion 4 (figure-behavior monotonicity)", ok, &detail);
}

fn golden(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/goldens")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

/// Criterion 5a: the ordering reports for the three presets match the frozen
/// golden files.
#[test]
fn criterion_5a_ordering_reports_frozen() {
    let mut ok = true;
    for (preset, file) in [
        (FigurePreset::Fig10, "fig10_ordering.txt"),
        (FigurePreset::Fig11, "fig11_ordering.txt"),
        (FigurePreset::Fig12, "fig12_ordering.txt"),
    ] {
        let report = compare_orderings(&preset_result(preset)).unwrap().to_string();
        if report != golden(file) {
            ok = false;
            println!("regression in {file}:\n--- frozen ---\n{}--- current ---\n{report}", golden(file));
        }
    }
    check(
        "criterion 5a (ordering report goldens)",
        ok,
        "fig10/fig11/fig12 reports match frozen files",
    );
}

/// Criterion 5b: Hata has the maximum loss on the BTS-height sweep at >= 90%
/// of grid points.
#[test]
fn criterion_5b_hata_max_on_bts_sweep() {
    let f = preset_result(FigurePreset::Fig10).fraction_max(Model::Hata);
    check(
        "criterion 5b (hata max, bts sweep)",
        f >= 0.9,
        &format!("hata is max at {:.0}% of points", 100.0 * f),
    );
}

/// Criterion 5c: Okumura has the minimum loss on all three sweeps at >= 90%
/// of grid points.
#[test]
fn criterion_5c_okumura_min_on_all_sweeps() {
    let mut ok = true;
    let mut parts = Vec::new();
    for preset in FigurePreset::ALL {
        let f = preset_result(preset).fraction_min(Model::Okumura);
        parts.push(format!("{preset}: {:.0}%", 100.0 * f));
        ok &= f >= 0.9;
    }
    check(
        "criterion 5c (okumura min, all sweeps)",
        ok,
        &parts.join(", "),
    );
}

/// Criterion 5d: Lee maximum on the MS-height sweep at >= 90% of points.
///
/// Known-failing: with the printed formulas at 900 MHz the Hata urban loss
/// exceeds the Lee loss over the entire joint validity region (the gap is
/// 5-10 dB for every admissible fixed distance and BTS height), so no
/// scenario reconstruction can make Lee the maximum here. The report is
/// still generated and frozen; the crossover-free dominance of Hata is
/// visible in fig11_ordering.txt.
#[test]
fn criterion_5d_lee_max_on_ms_sweep() {
    let f = preset_result(FigurePreset::Fig11).fraction_max(Model::Lee);
    check(
        "criterion 5d (lee max, ms sweep)",
        f >= 0.9,
        &format!("lee is max at {:.0}% of points", 100.0 * f),
    );
}

/// Criterion 5e: Lee maximum on the distance sweep at >= 90% of points.
///
/// Known-failing for the same reason as the MS-height sweep: Hata's distance
/// slope (44.9 - 6.55 log10 h_te, about 35 dB/decade at 30.48 m) exceeds
/// Lee's 30.5 dB/decade and Hata already starts higher at 1 km.
#[test]
fn criterion_5e_lee_max_on_distance_sweep() {
    let f = preset_result(FigurePreset::Fig12).fraction_max(Model::Lee);
    check(
        "criterion 5e (lee max, distance sweep)",
        f >= 0.9,
        &format!("lee is max at {:.0}% of points", 100.0 * f),
    );
}

/// Criterion 6: max_radius(model, loss(model, d)) = d within 1 m for 20
/// random valid distances per model.
#[test]
fn criterion_6_radius_round_trip() {
    let eval = evaluator();
    let template = RadioLink::new(900.0, 1.0, 50.0, 3.0).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0b57_ac1e);
    let mut worst = 0.0f64;
    for model in Model::SWEEP_ORDER {
        let (d_min, d_max) = eval.distance_window(model);
        for _ in 0..20 {
            let d = rng.gen_range(d_min.max(d_min * 1.01)..d_max * 0.99);
            let loss = eval.loss(model, &template.with_distance(d)).unwrap().value_db;
            let outcome = max_radius(&eval, model, &template, loss).unwrap();
            worst = worst.max((outcome.radius_km - d).abs());
        }
    }
    check(
        "criterion 6 (radius inversion round trip)",
        worst < 1e-3,
        &format!("worst error {:.3} m over 60 random distances", worst * 1e6 / 1e3),
    );
}

/// Criterion 7: exactness identities to 1e-9 dB.
#[test]
fn criterion_7_exactness_identities() {
    let mut ok = true;

    // +20 log10 2 dB per distance doubling, free space.
    for d in [0.5, 3.0, 48.0] {
        let l = RadioLink::new(900.0, d, 30.0, 3.0).unwrap();
        let a = free_space_loss(&l).unwrap().value_db;
        let b = free_space_loss(&l.with_distance(2.0 * d)).unwrap().value_db;
        ok &= (b - a - 6.020599913279624).abs() < 1e-9;
    }

    // 30.5 dB per distance decade, Lee, three decade pairs.
    let params = LeeParameters::default();
    for d in [0.16, 1.6, 8.0] {
        let near = lee_loss(
            &LeeScenario::with_link(RadioLink::new(900.0, d, 30.48, 3.0).unwrap()),
            &params,
        )
        .unwrap()
        .value_db;
        let far = lee_loss(
            &LeeScenario::with_link(RadioLink::new(900.0, 10.0 * d, 30.48, 3.0).unwrap()),
            &params,
        )
        .unwrap()
        .value_db;
        ok &= (far - near - 30.5).abs() < 1e-9;
    }

    // -20 log10 2 dB per BTS-height doubling, Lee alpha1.
    for h in [15.24, 30.48, 61.0] {
        let low = lee_loss(
            &LeeScenario::with_link(RadioLink::new(900.0, 1.6, h, 3.0).unwrap()),
            &params,
        )
        .unwrap()
        .value_db;
        let high = lee_loss(
            &LeeScenario::with_link(RadioLink::new(900.0, 1.6, 2.0 * h, 3.0).unwrap()),
            &params,
        )
        .unwrap()
        .value_db;
        ok &= (low - high - 6.020599913279624).abs() < 1e-9;
    }

    // Log-distance with n = 2 equals free space.
    let ld_params = LogDistanceParams::default();
    for d in [1.0, 7.0, 63.0] {
        let l = RadioLink::new(900.0, d, 30.0, 3.0).unwrap();
        let reference = free_space_loss(&l.with_distance(1.0)).unwrap();
        let ld = log_distance_loss(&l, &ld_params, &reference).unwrap().value_db;
        let fs = free_space_loss(&l).unwrap().value_db;
        ok &= (ld - fs).abs() < 1e-9;
    }

    check(
        "criterion 7 (exactness identities)",
        ok,
        "free-space doubling, lee decade slope, lee bts doubling, log-distance n=2, all to 1e-9 dB",
    );
}
