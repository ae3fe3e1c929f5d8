//! Property-based invariants across the model library.

use proptest::prelude::*;

use proplab::{
    free_space_loss, log_distance_loss, max_radius, okumura_loss, Environment, LeeParameters,
    LeeScenario, LogDistanceParams, Model, ModelEvaluator, OkumuraCurves, RadioLink, Strictness,
};

fn link(f: f64, d: f64, hte: f64, hre: f64) -> RadioLink {
    RadioLink::new(f, d, hte, hre).unwrap()
}

proptest! {
    /// Free-space loss difference between any two distances is exactly the
    /// 20 log10 ratio.
    #[test]
    fn free_space_distance_ratio(d1 in 0.001f64..1000.0, d2 in 0.001f64..1000.0) {
        let a = free_space_loss(&link(900.0, d1, 30.0, 3.0)).unwrap().value_db;
        let b = free_space_loss(&link(900.0, d2, 30.0, 3.0)).unwrap().value_db;
        prop_assert!((b - a - 20.0 * (d2 / d1).log10()).abs() < 1e-9);
    }

    /// Log-distance with n = 2 and a free-space reference collapses to
    /// free-space loss at any distance past the reference.
    #[test]
    fn log_distance_n2_equals_free_space(d in 1.0f64..500.0, f in 150.0f64..1920.0) {
        let params = LogDistanceParams::default();
        let l = link(f, d, 30.0, 3.0);
        let reference = free_space_loss(&l.with_distance(1.0)).unwrap();
        let ld = log_distance_loss(&l, &params, &reference).unwrap().value_db;
        let fs = free_space_loss(&l).unwrap().value_db;
        prop_assert!((ld - fs).abs() < 1e-9);
    }

    /// Model operations are pure: the same input gives bit-identical output.
    #[test]
    fn evaluations_are_deterministic(
        d in 1.0f64..100.0,
        hte in 30.5f64..99.5,
        hre in 1.0f64..9.5,
    ) {
        let eval = ModelEvaluator::new(OkumuraCurves::default_table());
        let l = link(900.0, d, hte, hre);
        for model in [Model::FreeSpace, Model::Okumura, Model::Hata, Model::Lee] {
            let a = eval.loss(model, &l).unwrap();
            let b = eval.loss(model, &l).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    /// Lee loss moves by exactly the 30.5 dB/decade slope.
    #[test]
    fn lee_decade_slope(d in 0.1f64..10.0) {
        let params = LeeParameters::default();
        let near = proplab::lee_loss(&LeeScenario::with_link(link(900.0, d, 30.48, 3.0)), &params)
            .unwrap().value_db;
        let far = proplab::lee_loss(&LeeScenario::with_link(link(900.0, 10.0 * d, 30.48, 3.0)), &params)
            .unwrap().value_db;
        prop_assert!((far - near - 30.5).abs() < 1e-9);
    }

    /// Okumura loss is monotone: non-increasing in both antenna heights,
    /// strictly increasing in distance.
    #[test]
    fn okumura_monotonicity(
        d in 1.0f64..99.0,
        hte in 31.0f64..98.0,
        hre in 0.5f64..9.0,
    ) {
        let t = OkumuraCurves::default_table();
        let base = okumura_loss(&link(900.0, d, hte, hre), Environment::Urban, t, Strictness::Strict)
            .unwrap().value_db;
        let taller_bts = okumura_loss(&link(900.0, d, hte + 1.0, hre), Environment::Urban, t, Strictness::Strict)
            .unwrap().value_db;
        prop_assert!(taller_bts <= base + 1e-12);
        let taller_ms = okumura_loss(&link(900.0, d, hte, hre + 0.5), Environment::Urban, t, Strictness::Strict)
            .unwrap().value_db;
        prop_assert!(taller_ms <= base + 1e-12);
        let farther = okumura_loss(&link(900.0, d * 1.01, hte, hre), Environment::Urban, t, Strictness::Strict)
            .unwrap().value_db;
        prop_assert!(farther > base);
    }

    /// The loss excess over free space depends only on the scenario, not the
    /// absolute loss level: it is unchanged when both are recomputed.
    #[test]
    fn okumura_excess_is_scenario_function(d in 1.0f64..100.0, hre in 0.5f64..9.5) {
        let t = OkumuraCurves::default_table();
        let l = link(900.0, d, 50.0, hre);
        let excess = okumura_loss(&l, Environment::Suburban, t, Strictness::Strict).unwrap().value_db
            - free_space_loss(&l).unwrap().value_db;
        let mut flags = Vec::new();
        let expected = t.amu(900.0, d, Strictness::Strict, &mut flags).unwrap()
            - proplab::bts_height_gain(50.0, Strictness::Strict, &mut flags).unwrap()
            - proplab::ms_height_gain(hre, Strictness::Strict, &mut flags).unwrap()
            - t.garea(Environment::Suburban);
        prop_assert!((excess - expected).abs() < 1e-9);
    }

    /// Radius inversion round-trips loss-at-distance for every model.
    #[test]
    fn radius_inversion_round_trip(d in 1.01f64..99.0) {
        let eval = ModelEvaluator::new(OkumuraCurves::default_table());
        let template = link(900.0, 1.0, 50.0, 3.0);
        for model in Model::SWEEP_ORDER {
            let loss = eval.loss(model, &template.with_distance(d)).unwrap().value_db;
            let outcome = max_radius(&eval, model, &template, loss).unwrap();
            prop_assert!((outcome.radius_km - d).abs() < 1e-3,
                "{model} at {d}: {}", outcome.radius_km);
        }
    }

    /// Curve tables survive a serialize/parse round trip.
    #[test]
    fn curve_table_round_trip(
        base in 5.0f64..40.0,
        df in 1.0f64..10.0,
        dd in 0.5f64..5.0,
        open in 0.0f64..30.0,
        suburban in 0.0f64..10.0,
    ) {
        let freqs = vec![150.0, 450.0, 900.0, 1920.0];
        let dists = vec![1.0, 5.0, 20.0, 100.0];
        let amu: Vec<Vec<f64>> = (0..freqs.len())
            .map(|i| (0..dists.len()).map(|j| base + df * i as f64 + dd * j as f64).collect())
            .collect();
        let curves = OkumuraCurves::new(freqs, dists, amu, [open, suburban, 0.0]).unwrap();
        let reparsed = OkumuraCurves::parse(&curves.to_csv()).unwrap();
        prop_assert_eq!(curves, reparsed);
    }
}
