//! Command-line front end: `propagation-lab <compute|sweep|radius|curves>`.
//!
//! Exit codes: 0 success, 2 usage/validation error, 3 range error in strict
//! mode, 4 no coverage.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::freespace::LogDistanceParams;
use crate::lee::{Alpha4Mode, LeeParameters};
use crate::link::{Flag, Model, RadioLink, Strictness};
use crate::okumura::{Environment, OkumuraCurves};
use crate::sweep::{
    compare_orderings, max_radius, run_sweep, FigurePreset, ModelEvaluator, SweepAxis, SweepResult,
    SweepSpec,
};

pub const SCHEMA_VERSION: u32 = 1;
/// Environment variable naming a default curve-file override.
pub const CURVES_ENV_VAR: &str = "PROPLAB_CURVES";

#[derive(Debug, Parser)]
#[command(name = "propagation-lab", version, about = "Large-scale radio path loss models: compute, sweep, compare and invert")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute path loss for one scenario with one or more models.
    Compute(ComputeArgs),
    /// Sweep one parameter and emit per-model loss columns (CSV/JSON).
    Sweep(SweepArgs),
    /// Invert a link budget: largest distance whose loss fits the budget.
    Radius(RadiusArgs),
    /// Validate or dump Okumura curve files.
    Curves(CurvesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format '{other}' (expected json or csv)")),
        }
    }
}

fn parse_model(s: &str) -> std::result::Result<Model, String> {
    s.parse()
}

fn parse_env(s: &str) -> std::result::Result<Environment, String> {
    s.parse()
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse()
}

fn parse_axis(s: &str) -> std::result::Result<SweepAxis, String> {
    s.parse()
}

fn parse_fig_preset(s: &str) -> std::result::Result<FigurePreset, String> {
    s.parse()
}

/// Scenario flags shared by compute and radius.
#[derive(Debug, Args)]
struct ScenarioArgs {
    /// Carrier frequency in MHz.
    #[arg(long = "freq-mhz")]
    freq_mhz: Option<f64>,
    /// T-R distance in km.
    #[arg(long = "distance-km")]
    distance_km: Option<f64>,
    /// BTS antenna height in m.
    #[arg(long = "bts-height-m")]
    bts_height_m: Option<f64>,
    /// MS antenna height in m.
    #[arg(long = "ms-height-m")]
    ms_height_m: Option<f64>,
    /// Okumura environment class (open|suburban|urban).
    #[arg(long, value_parser = parse_env, default_value = "urban")]
    env: Environment,
    /// Evaluate outside validity windows, marking results instead of erroring.
    #[arg(long)]
    permissive: bool,
    /// Okumura curve file (default: built-in table, or $PROPLAB_CURVES).
    #[arg(long)]
    curves: Option<PathBuf>,
    /// Log-distance path loss exponent n.
    #[arg(long, default_value_t = 2.0)]
    exponent: f64,
    /// Log-distance reference distance d0 in km.
    #[arg(long = "ref-distance-km", default_value_t = 1.0)]
    ref_distance_km: f64,
    /// Lee: transmit power in W.
    #[arg(long = "tx-power-w", default_value_t = 10.0)]
    tx_power_w: f64,
    /// Lee: BTS antenna gain in dB.
    #[arg(long = "bts-gain-db", default_value_t = 6.0)]
    bts_gain_db: f64,
    /// Lee: frequency-slope exponent k (2 or 3).
    #[arg(long = "lee-k", default_value_t = 3)]
    lee_k: u8,
    /// Lee: alpha5 exponent n in [2, 3].
    #[arg(long = "lee-n", default_value_t = 2.0)]
    lee_n: f64,
    /// Lee: compute alpha4 as 10^(Gb/10)/4 as printed instead of the
    /// nominal-exact calibration.
    #[arg(long = "alpha4-literal")]
    alpha4_literal: bool,
}

impl ScenarioArgs {
    fn strictness(&self) -> Strictness {
        if self.permissive {
            Strictness::Permissive
        } else {
            Strictness::Strict
        }
    }

    fn lee_params(&self) -> LeeParameters {
        LeeParameters {
            k_exponent: self.lee_k,
            alpha5_exponent: self.lee_n,
            alpha4_mode: if self.alpha4_literal {
                Alpha4Mode::Literal
            } else {
                Alpha4Mode::NominalExact
            },
            ..LeeParameters::default()
        }
    }

    fn load_curves(&self) -> std::result::Result<OkumuraCurves, CliError> {
        load_curves(self.curves.as_deref())
    }

    fn evaluator<'a>(&self, curves: &'a OkumuraCurves) -> std::result::Result<ModelEvaluator<'a>, CliError> {
        let log_distance = LogDistanceParams::new(self.exponent, self.ref_distance_km)?;
        Ok(ModelEvaluator {
            curves,
            env: self.env,
            lee_params: self.lee_params(),
            tx_power_w: self.tx_power_w,
            bts_gain_db: self.bts_gain_db,
            log_distance,
            strictness: self.strictness(),
        })
    }

    fn link(&self, defaults: Option<RadioLink>) -> std::result::Result<RadioLink, CliError> {
        let pick = |value: Option<f64>, default: Option<f64>, flag: &str| {
            value.or(default).ok_or_else(|| CliError::Usage(format!("missing {flag}")))
        };
        let d = defaults;
        Ok(RadioLink {
            frequency_mhz: pick(self.freq_mhz, d.map(|l| l.frequency_mhz), "--freq-mhz")?,
            distance_km: pick(self.distance_km, d.map(|l| l.distance_km), "--distance-km")?,
            bts_height_m: pick(self.bts_height_m, d.map(|l| l.bts_height_m), "--bts-height-m")?,
            ms_height_m: pick(self.ms_height_m, d.map(|l| l.ms_height_m), "--ms-height-m")?,
        })
    }

    fn echo(&self, link: &RadioLink) -> ScenarioEcho {
        ScenarioEcho {
            freq_mhz: link.frequency_mhz,
            distance_km: link.distance_km,
            bts_height_m: link.bts_height_m,
            ms_height_m: link.ms_height_m,
            env: self.env,
            permissive: self.permissive,
            exponent: self.exponent,
            ref_distance_km: self.ref_distance_km,
            tx_power_w: self.tx_power_w,
            bts_gain_db: self.bts_gain_db,
            lee_k: self.lee_k,
            lee_n: self.lee_n,
            alpha4_literal: self.alpha4_literal,
        }
    }
}

#[derive(Debug, Args)]
struct ComputeArgs {
    /// Model to evaluate (repeatable / comma-separated):
    /// free-space, log-distance, okumura, hata, lee.
    #[arg(long = "model", value_parser = parse_model, value_delimiter = ',', required_unless_present = "preset")]
    models: Vec<Model>,
    /// Scenario preset: "nominal" is the Lee all-nominal calibration point.
    #[arg(long)]
    preset: Option<String>,
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Output format (json|csv).
    #[arg(long, value_parser = parse_format, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Parameter to vary: bts_height, ms_height or distance.
    #[arg(long, value_parser = parse_axis, required_unless_present = "preset")]
    vary: Option<SweepAxis>,
    #[arg(long)]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Models to sweep (comma-separated subset of okumura,hata,lee).
    #[arg(long, value_parser = parse_model, value_delimiter = ',', default_value = "okumura,hata,lee")]
    models: Vec<Model>,
    /// Figure reconstruction preset: paper-fig10, paper-fig11, paper-fig12.
    #[arg(long, value_parser = parse_fig_preset)]
    preset: Option<FigurePreset>,
    /// Space the axis logarithmically.
    #[arg(long = "log-spacing")]
    log_spacing: bool,
    /// Print the cross-model ordering report instead of the data table.
    #[arg(long = "check-ordering")]
    check_ordering: bool,
    #[command(flatten)]
    scenario: ScenarioArgs,
    #[arg(long, value_parser = parse_format, default_value = "csv")]
    format: OutputFormat,
    /// Write the data table to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RadiusArgs {
    #[arg(long = "model", value_parser = parse_model)]
    model: Model,
    /// Link budget: maximum tolerable path loss in dB.
    #[arg(long = "max-loss-db")]
    max_loss_db: f64,
    #[command(flatten)]
    scenario: ScenarioArgs,
    #[arg(long, value_parser = parse_format, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct CurvesArgs {
    #[command(subcommand)]
    action: CurvesAction,
}

#[derive(Debug, Subcommand)]
enum CurvesAction {
    /// Check a curve file against the table invariants.
    Validate { file: PathBuf },
    /// Print a curve table (a file, $PROPLAB_CURVES, or the built-in default)
    /// in the curve-file format.
    Dump { file: Option<PathBuf> },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Model(Error),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Model(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Model(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Model(e) => e.exit_code(),
        }
    }
}

#[derive(Debug, Serialize)]
struct ScenarioEcho {
    freq_mhz: f64,
    distance_km: f64,
    bts_height_m: f64,
    ms_height_m: f64,
    env: Environment,
    permissive: bool,
    exponent: f64,
    ref_distance_km: f64,
    tx_power_w: f64,
    bts_gain_db: f64,
    lee_k: u8,
    lee_n: f64,
    alpha4_literal: bool,
}

#[derive(Debug, Serialize)]
struct ComputeRecord {
    model: Model,
    value_db: f64,
    flags: Vec<Flag>,
    scenario: ScenarioEcho,
}

#[derive(Debug, Serialize)]
struct RadiusRecord {
    model: Model,
    radius_km: f64,
    max_loss_db: f64,
    flags: Vec<Flag>,
    scenario: ScenarioEcho,
}

#[derive(Debug, Serialize)]
struct Document<T: Serialize> {
    schema_version: u32,
    records: Vec<T>,
}

#[derive(Debug, Serialize)]
struct SweepDocument {
    schema_version: u32,
    vary: SweepAxis,
    axis: Vec<f64>,
    series: Vec<SweepSeriesJson>,
}

#[derive(Debug, Serialize)]
struct SweepSeriesJson {
    model: Model,
    values_db: Vec<f64>,
    flags: Vec<Vec<Flag>>,
}

/// Parse argv and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> std::result::Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Radius(args) => cmd_radius(args),
        Command::Curves(args) => cmd_curves(args),
    }
}

fn load_curves(path: Option<&std::path::Path>) -> std::result::Result<OkumuraCurves, CliError> {
    let from_env = std::env::var_os(CURVES_ENV_VAR).map(PathBuf::from);
    let path = path.map(PathBuf::from).or(from_env);
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| CliError::Io(format!("cannot read curve file {}: {e}", p.display())))?;
            Ok(OkumuraCurves::parse(&text)?)
        }
        None => Ok(OkumuraCurves::default_table().clone()),
    }
}

fn cmd_compute(args: ComputeArgs) -> std::result::Result<(), CliError> {
    let defaults = match args.preset.as_deref() {
        Some("nominal") => Some(RadioLink {
            frequency_mhz: 900.0,
            distance_km: 1.6,
            bts_height_m: 30.48,
            ms_height_m: 3.0,
        }),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown preset '{other}' (compute supports --preset nominal)"
            )))
        }
        None => None,
    };
    let models = if args.models.is_empty() {
        vec![Model::Lee]
    } else {
        args.models.clone()
    };
    let link = args.scenario.link(defaults)?;
    let curves = args.scenario.load_curves()?;
    let eval = args.scenario.evaluator(&curves)?;

    let mut records = Vec::new();
    for model in models {
        let loss = eval.loss(model, &link)?;
        records.push(ComputeRecord {
            model,
            value_db: loss.value_db,
            flags: loss.flags,
            scenario: args.scenario.echo(&link),
        });
    }

    match args.format {
        OutputFormat::Json => print_json(&Document {
            schema_version: SCHEMA_VERSION,
            records,
        }),
        OutputFormat::Csv => {
            println!("model,value_db,flags,freq_mhz,distance_km,bts_height_m,ms_height_m,env,permissive");
            for r in records {
                println!(
                    "{},{:.2},{},{},{},{},{},{},{}",
                    r.model,
                    r.value_db,
                    join_flags(&r.flags),
                    r.scenario.freq_mhz,
                    r.scenario.distance_km,
                    r.scenario.bts_height_m,
                    r.scenario.ms_height_m,
                    r.scenario.env,
                    r.scenario.permissive
                );
            }
        }
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> std::result::Result<(), CliError> {
    let preset_spec = args.preset.map(|p| p.spec());
    let base_defaults = preset_spec.as_ref().map(|s| s.base).or(Some(RadioLink {
        frequency_mhz: 900.0,
        distance_km: 5.0,
        bts_height_m: 30.48,
        ms_height_m: 3.0,
    }));
    let base = args.scenario.link(base_defaults)?;

    let vary = args
        .vary
        .or(preset_spec.as_ref().map(|s| s.vary))
        .ok_or_else(|| CliError::Usage("missing --vary (or --preset)".into()))?;
    let pick = |v: Option<f64>, p: Option<f64>, flag: &str| {
        v.or(p).ok_or_else(|| CliError::Usage(format!("missing {flag}")))
    };
    let from = pick(args.from, preset_spec.as_ref().map(|s| s.from), "--from")?;
    let to = pick(args.to, preset_spec.as_ref().map(|s| s.to), "--to")?;
    let steps = args
        .steps
        .or(preset_spec.as_ref().map(|s| s.steps))
        .ok_or_else(|| CliError::Usage("missing --steps".into()))?;

    let spec = SweepSpec {
        vary,
        from,
        to,
        steps,
        base,
        models: args.models.clone(),
        log_spacing: args.log_spacing,
    };

    let curves = args.scenario.load_curves()?;
    let mut eval = args.scenario.evaluator(&curves)?;
    if let Some(preset) = args.preset {
        eval.env = preset.env();
        if preset.strictness().is_permissive() {
            eval.strictness = Strictness::Permissive;
        }
    }

    let result = run_sweep(&spec, &eval)?;

    if args.check_ordering {
        let report = compare_orderings(&result)?;
        print!("{report}");
        return Ok(());
    }

    let rendered = match args.format {
        OutputFormat::Csv => sweep_csv(&result),
        OutputFormat::Json => {
            let doc = SweepDocument {
                schema_version: SCHEMA_VERSION,
                vary: result.vary,
                axis: result.axis.clone(),
                series: result
                    .series
                    .iter()
                    .map(|s| SweepSeriesJson {
                        model: s.model,
                        values_db: s.losses.iter().map(|l| l.value_db).collect(),
                        flags: s.losses.iter().map(|l| l.flags.clone()).collect(),
                    })
                    .collect(),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
            text.push('\n');
            text
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::new();
    out.push_str(result.vary.column());
    for s in &result.series {
        out.push(',');
        out.push_str(s.model.name());
    }
    out.push('\n');
    for (i, x) in result.axis.iter().enumerate() {
        out.push_str(&format!("{x}"));
        for s in &result.series {
            out.push_str(&format!(",{:.2}", s.losses[i].value_db));
        }
        out.push('\n');
    }
    out
}

fn cmd_radius(args: RadiusArgs) -> std::result::Result<(), CliError> {
    let curves = args.scenario.load_curves()?;
    let eval = args.scenario.evaluator(&curves)?;
    // The template's own distance is replaced during the search; default it
    // so the user does not have to pass --distance-km.
    let scenario_with_distance = ScenarioArgs {
        distance_km: args.scenario.distance_km.or(Some(1.0)),
        ..args.scenario
    };
    let link = scenario_with_distance.link(None)?;
    let outcome = max_radius(&eval, args.model, &link, args.max_loss_db)?;
    let mut flags = Vec::new();
    if outcome.saturated {
        flags.push(Flag::Saturated);
    }
    let record = RadiusRecord {
        model: args.model,
        radius_km: outcome.radius_km,
        max_loss_db: args.max_loss_db,
        flags,
        scenario: scenario_with_distance.echo(&link),
    };
    match args.format {
        OutputFormat::Json => print_json(&Document {
            schema_version: SCHEMA_VERSION,
            records: vec![record],
        }),
        OutputFormat::Csv => {
            println!("model,radius_km,max_loss_db,flags");
            println!(
                "{},{:.2},{:.2},{}",
                record.model,
                record.radius_km,
                record.max_loss_db,
                join_flags(&record.flags)
            );
        }
    }
    Ok(())
}

fn cmd_curves(args: CurvesArgs) -> std::result::Result<(), CliError> {
    match args.action {
        CurvesAction::Validate { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", file.display())))?;
            let curves = OkumuraCurves::parse(&text)?;
            println!(
                "ok: {} frequencies x {} distances, garea open={} suburban={} urban={}",
                curves.frequencies_mhz().len(),
                curves.distances_km().len(),
                curves.garea(Environment::Open),
                curves.garea(Environment::Suburban),
                curves.garea(Environment::Urban)
            );
            Ok(())
        }
        CurvesAction::Dump { file } => {
            let curves = load_curves(file.as_deref())?;
            print!("{}", curves.to_csv());
            Ok(())
        }
    }
}

fn join_flags(flags: &[Flag]) -> String {
    flags
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn print_json<T: Serialize>(doc: &T) {
    println!("{}", serde_json::to_string_pretty(doc).expect("serializable"));
}
