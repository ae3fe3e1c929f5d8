//! Parameter-sweep engine: per-model sweeps over BTS height, MS height and
//! T-R distance, cross-model ordering reports, and link-budget radius
//! inversion by bisection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freespace::{default_reference_loss, free_space_loss, log_distance_loss, LogDistanceParams};
use crate::hata::{self, hata_loss};
use crate::lee::{lee_loss_with_mode, LeeParameters, LeeScenario};
use crate::link::{Model, PathLossDb, RadioLink, Strictness};
use crate::okumura::{self, okumura_loss, Environment, OkumuraCurves};

/// Evaluates any model for a link under one fixed configuration (curves,
/// environment, Lee calibration, strictness).
#[derive(Debug, Clone)]
pub struct ModelEvaluator<'a> {
    pub curves: &'a OkumuraCurves,
    pub env: Environment,
    pub lee_params: LeeParameters,
    pub tx_power_w: f64,
    pub bts_gain_db: f64,
    pub log_distance: LogDistanceParams,
    pub strictness: Strictness,
}

impl<'a> ModelEvaluator<'a> {
    pub fn new(curves: &'a OkumuraCurves) -> Self {
        let lee_params = LeeParameters::default();
        ModelEvaluator {
            curves,
            env: Environment::Urban,
            lee_params: lee_params.clone(),
            tx_power_w: lee_params.nominal_tx_power_w,
            bts_gain_db: lee_params.nominal_bts_gain_db,
            log_distance: LogDistanceParams::default(),
            strictness: Strictness::Strict,
        }
    }

    pub fn with_env(mut self, env: Environment) -> Self {
        self.env = env;
        self
    }

    pub fn with_strictness(mut self, strictness: Strictness) -> Self {
        self.strictness = strictness;
        self
    }

    pub fn loss(&self, model: Model, link: &RadioLink) -> Result<PathLossDb> {
        match model {
            Model::FreeSpace => free_space_loss(link),
            Model::LogDistance => {
                let reference = default_reference_loss(link, &self.log_distance)?;
                log_distance_loss(link, &self.log_distance, &reference)
            }
            Model::Okumura => okumura_loss(link, self.env, self.curves, self.strictness),
            Model::Hata => hata_loss(link, self.strictness),
            Model::Lee => {
                let mut scenario =
                    LeeScenario::new(*link, self.tx_power_w, self.bts_gain_db)?;
                scenario.environment_k = None;
                lee_loss_with_mode(&scenario, &self.lee_params, self.strictness)
            }
        }
    }

    /// Distance window used for sweeps and radius inversion, in km.
    pub fn distance_window(&self, model: Model) -> (f64, f64) {
        match model {
            Model::Okumura => okumura::DIST_RANGE_KM,
            Model::Hata => (hata::MIN_DISTANCE_KM, hata::MAX_DISTANCE_KM),
            Model::Lee => (0.1, 100.0),
            Model::FreeSpace => (0.01, 1000.0),
            Model::LogDistance => (self.log_distance.reference_distance_km, 1000.0),
        }
    }
}

/// Which link parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SweepAxis {
    #[serde(rename = "bts_height")]
    BtsHeight,
    #[serde(rename = "ms_height")]
    MsHeight,
    #[serde(rename = "distance")]
    Distance,
}

impl SweepAxis {
    pub fn name(&self) -> &'static str {
        match self {
            SweepAxis::BtsHeight => "bts_height",
            SweepAxis::MsHeight => "ms_height",
            SweepAxis::Distance => "distance",
        }
    }

    /// Column header for CSV output, unit included.
    pub fn column(&self) -> &'static str {
        match self {
            SweepAxis::BtsHeight => "bts_height_m",
            SweepAxis::MsHeight => "ms_height_m",
            SweepAxis::Distance => "distance_km",
        }
    }

    pub fn apply(&self, base: &RadioLink, value: f64) -> RadioLink {
        let mut link = *base;
        match self {
            SweepAxis::BtsHeight => link.bts_height_m = value,
            SweepAxis::MsHeight => link.ms_height_m = value,
            SweepAxis::Distance => link.distance_km = value,
        }
        link
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bts_height" | "bts-height" => Ok(SweepAxis::BtsHeight),
            "ms_height" | "ms-height" => Ok(SweepAxis::MsHeight),
            "distance" => Ok(SweepAxis::Distance),
            other => Err(format!(
                "unknown sweep axis '{other}' (expected bts_height, ms_height or distance)"
            )),
        }
    }
}

/// Sweep definition: vary one parameter over [from, to] in `steps` uniform
/// samples (linear by default, log-spaced on request) with everything else
/// fixed by `base`.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub vary: SweepAxis,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub base: RadioLink,
    pub models: Vec<Model>,
    pub log_spacing: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let invalid = |message: String| Error::InvalidSweep { message };
        if !(self.from < self.to) {
            return Err(invalid(format!(
                "--from ({}) must be less than --to ({})",
                self.from, self.to
            )));
        }
        if self.from <= 0.0 || !self.to.is_finite() {
            return Err(invalid("sweep bounds must be positive and finite".into()));
        }
        if self.steps < 2 {
            return Err(invalid("--steps must be at least 2".into()));
        }
        if self.models.is_empty() {
            return Err(invalid("--models must name at least one model".into()));
        }
        for m in &self.models {
            if !Model::SWEEP_ORDER.contains(m) {
                return Err(invalid(format!(
                    "model '{m}' cannot be swept (sweeps cover okumura, hata, lee)"
                )));
            }
        }
        Ok(())
    }

    pub fn axis_points(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                if self.log_spacing {
                    10f64.powf(self.from.log10() + t * (self.to.log10() - self.from.log10()))
                } else {
                    self.from + t * (self.to - self.from)
                }
            })
            .collect()
    }

    /// Selected models in canonical output order (okumura, hata, lee).
    pub fn ordered_models(&self) -> Vec<Model> {
        Model::SWEEP_ORDER
            .iter()
            .copied()
            .filter(|m| self.models.contains(m))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelSeries {
    pub model: Model,
    pub losses: Vec<PathLossDb>,
}

/// A completed sweep: the axis sample values and one aligned loss series per
/// model.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub vary: SweepAxis,
    pub axis: Vec<f64>,
    pub series: Vec<ModelSeries>,
}

impl SweepResult {
    pub fn series_for(&self, model: Model) -> Option<&ModelSeries> {
        self.series.iter().find(|s| s.model == model)
    }

    /// Fraction of axis points at which `model` has the highest loss
    /// (ties count in its favor).
    pub fn fraction_max(&self, model: Model) -> f64 {
        self.fraction_extreme(model, true)
    }

    /// Fraction of axis points at which `model` has the lowest loss.
    pub fn fraction_min(&self, model: Model) -> f64 {
        self.fraction_extreme(model, false)
    }

    fn fraction_extreme(&self, model: Model, max: bool) -> f64 {
        let Some(target) = self.series_for(model) else {
            return 0.0;
        };
        if self.axis.is_empty() {
            return 0.0;
        }
        let hits = (0..self.axis.len())
            .filter(|&i| {
                self.series.iter().all(|s| {
                    if max {
                        target.losses[i].value_db >= s.losses[i].value_db
                    } else {
                        target.losses[i].value_db <= s.losses[i].value_db
                    }
                })
            })
            .count();
        hits as f64 / self.axis.len() as f64
    }
}

/// Run a sweep. In strict mode every (model, point) range violation is
/// collected and reported before aborting; in permissive mode violations
/// become per-point flags on the results.
pub fn run_sweep(spec: &SweepSpec, eval: &ModelEvaluator) -> Result<SweepResult> {
    spec.validate()?;
    let axis = spec.axis_points();
    let mut series = Vec::new();
    let mut violations = Vec::new();
    for model in spec.ordered_models() {
        let mut losses = Vec::with_capacity(axis.len());
        for &x in &axis {
            let link = spec.vary.apply(&spec.base, x);
            match eval.loss(model, &link) {
                Ok(loss) => losses.push(loss),
                Err(e) => violations.push(format!("{model} at {}={x}: {e}", spec.vary.name())),
            }
        }
        series.push(ModelSeries { model, losses });
    }
    if !violations.is_empty() {
        return Err(Error::SweepViolations { violations });
    }
    Ok(SweepResult {
        vary: spec.vary,
        axis,
        series,
    })
}

const TIE_EPSILON_DB: f64 = 1e-9;

/// One interval where two model series swap order.
#[derive(Debug, Clone, PartialEq)]
pub struct Crossover {
    pub first: Model,
    pub second: Model,
    pub axis_low: f64,
    pub axis_high: f64,
}

/// Per-sweep cross-model ordering summary.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderingReport {
    pub vary: SweepAxis,
    pub axis_low: f64,
    pub axis_high: f64,
    pub points: usize,
    pub models: Vec<Model>,
    /// Most frequent loss ordering, highest loss first.
    pub dominant: Vec<Model>,
    /// Number of points at which the dominant ordering holds.
    pub dominant_points: usize,
    /// Points with at least one tie (within 1e-9 dB).
    pub tie_points: usize,
    pub crossovers: Vec<Crossover>,
}

impl OrderingReport {
    pub fn dominant_fraction(&self) -> f64 {
        self.dominant_points as f64 / self.points as f64
    }

    pub fn holds_everywhere(&self) -> bool {
        self.dominant_points == self.points
    }
}

impl fmt::Display for OrderingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "axis: {} from {} to {} ({} points)",
            self.vary, self.axis_low, self.axis_high, self.points
        )?;
        let names: Vec<&str> = self.models.iter().map(|m| m.name()).collect();
        writeln!(f, "models: {}", names.join(", "))?;
        let order: Vec<&str> = self.dominant.iter().map(|m| m.name()).collect();
        writeln!(f, "dominant ordering (loss high to low): {}", order.join(" >= "))?;
        writeln!(
            f,
            "dominant holds at {}/{} points ({:.1}%)",
            self.dominant_points,
            self.points,
            100.0 * self.dominant_fraction()
        )?;
        writeln!(f, "tie points: {}", self.tie_points)?;
        if self.crossovers.is_empty() {
            writeln!(f, "crossovers: none")?;
        } else {
            for c in &self.crossovers {
                writeln!(
                    f,
                    "crossover {}/{} between {} and {}",
                    c.first, c.second, c.axis_low, c.axis_high
                )?;
            }
        }
        Ok(())
    }
}

/// Rank the models of a sweep by loss at every axis point and summarize.
pub fn compare_orderings(result: &SweepResult) -> Result<OrderingReport> {
    if result.series.len() < 2 {
        return Err(Error::InvalidSweep {
            message: "ordering comparison needs at least two models".into(),
        });
    }
    let points = result.axis.len();
    let models: Vec<Model> = result.series.iter().map(|s| s.model).collect();

    let mut rankings: Vec<Vec<Model>> = Vec::with_capacity(points);
    let mut tie_points = 0;
    for i in 0..points {
        let mut at_point: Vec<(Model, f64)> = result
            .series
            .iter()
            .map(|s| (s.model, s.losses[i].value_db))
            .collect();
        at_point.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        if at_point
            .windows(2)
            .any(|w| (w[0].1 - w[1].1).abs() <= TIE_EPSILON_DB)
        {
            tie_points += 1;
        }
        rankings.push(at_point.into_iter().map(|(m, _)| m).collect());
    }

    // Modal ranking.
    let mut dominant = rankings[0].clone();
    let mut dominant_points = 0;
    for candidate in &rankings {
        let count = rankings.iter().filter(|r| *r == candidate).count();
        if count > dominant_points {
            dominant_points = count;
            dominant = candidate.clone();
        }
    }

    // Pairwise sign changes between adjacent axis points.
    let mut crossovers = Vec::new();
    for (ai, &a) in models.iter().enumerate() {
        for &b in models.iter().skip(ai + 1) {
            let sa = &result.series_for(a).unwrap().losses;
            let sb = &result.series_for(b).unwrap().losses;
            for i in 0..points.saturating_sub(1) {
                let d0 = sa[i].value_db - sb[i].value_db;
                let d1 = sa[i + 1].value_db - sb[i + 1].value_db;
                if d0 * d1 < 0.0 && d0.abs() > TIE_EPSILON_DB && d1.abs() > TIE_EPSILON_DB {
                    crossovers.push(Crossover {
                        first: a,
                        second: b,
                        axis_low: result.axis[i],
                        axis_high: result.axis[i + 1],
                    });
                }
            }
        }
    }

    Ok(OrderingReport {
        vary: result.vary,
        axis_low: result.axis[0],
        axis_high: *result.axis.last().unwrap(),
        points,
        models,
        dominant,
        dominant_points,
        tie_points,
        crossovers,
    })
}

/// Result of a link-budget radius inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusOutcome {
    pub radius_km: f64,
    /// The whole validity range was under budget; radius is the model's
    /// maximum valid distance.
    pub saturated: bool,
}

/// Bisection resolution: 1 m expressed in km, with margin.
const RADIUS_TOLERANCE_KM: f64 = 1e-4;

/// Largest distance within the model's validity window whose loss stays at
/// or under `max_loss_db`. Relies on every model being monotone increasing
/// in distance.
pub fn max_radius(
    eval: &ModelEvaluator,
    model: Model,
    link_template: &RadioLink,
    max_loss_db: f64,
) -> Result<RadiusOutcome> {
    let (d_min, d_max) = eval.distance_window(model);
    let loss_at = |d: f64| -> Result<f64> {
        Ok(eval.loss(model, &link_template.with_distance(d))?.value_db)
    };
    let min_loss = loss_at(d_min)?;
    if min_loss > max_loss_db {
        return Err(Error::NoCoverage {
            min_distance_km: d_min,
            min_loss_db: min_loss,
            budget_db: max_loss_db,
        });
    }
    if loss_at(d_max)? <= max_loss_db {
        return Ok(RadiusOutcome {
            radius_km: d_max,
            saturated: true,
        });
    }
    // Invariant: loss(lo) <= budget < loss(hi).
    let (mut lo, mut hi) = (d_min, d_max);
    while hi - lo > RADIUS_TOLERANCE_KM {
        let mid = 0.5 * (lo + hi);
        if loss_at(mid)? <= max_loss_db {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RadiusOutcome {
        radius_km: lo,
        saturated: false,
    })
}

/// Reconstruction presets for the paper-style comparison figures at 900 MHz:
/// fig10 varies BTS height, fig11 MS height, fig12 distance. Fixed values
/// come from the Lee nominal calibration (d = 5 km for the height sweeps,
/// h_b = 30.48 m, h_m = 3 m); the Okumura environment is open country.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePreset {
    Fig10,
    Fig11,
    Fig12,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 3] = [FigurePreset::Fig10, FigurePreset::Fig11, FigurePreset::Fig12];

    pub fn name(&self) -> &'static str {
        match self {
            FigurePreset::Fig10 => "paper-fig10",
            FigurePreset::Fig11 => "paper-fig11",
            FigurePreset::Fig12 => "paper-fig12",
        }
    }

    pub fn spec(&self) -> SweepSpec {
        let base = RadioLink {
            frequency_mhz: 900.0,
            distance_km: 5.0,
            bts_height_m: 30.48,
            ms_height_m: 3.0,
        };
        let (vary, from, to) = match self {
            FigurePreset::Fig10 => (SweepAxis::BtsHeight, 30.0, 100.0),
            FigurePreset::Fig11 => (SweepAxis::MsHeight, 1.0, 10.0),
            FigurePreset::Fig12 => (SweepAxis::Distance, 1.0, 20.0),
        };
        SweepSpec {
            vary,
            from,
            to,
            steps: 50,
            base,
            models: Model::SWEEP_ORDER.to_vec(),
            log_spacing: false,
        }
    }

    pub fn env(&self) -> Environment {
        Environment::Open
    }

    /// The height presets touch the open endpoints of Okumura's printed
    /// windows, so they run permissively; the distance preset is strictly
    /// valid for all three models.
    pub fn strictness(&self) -> Strictness {
        match self {
            FigurePreset::Fig12 => Strictness::Strict,
            _ => Strictness::Permissive,
        }
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigurePreset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "paper-fig10" | "fig10" => Ok(FigurePreset::Fig10),
            "paper-fig11" | "fig11" => Ok(FigurePreset::Fig11),
            "paper-fig12" | "fig12" => Ok(FigurePreset::Fig12),
            other => Err(format!(
                "unknown preset '{other}' (expected paper-fig10, paper-fig11 or paper-fig12)"
            )),
        }
    }
}
