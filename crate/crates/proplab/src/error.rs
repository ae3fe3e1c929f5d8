use std::fmt;

use crate::link::Model;

pub type Result<T> = std::result::Result<T, Error>;

/// A scenario parameter, named after the CLI flag that carries it so that
/// error messages point the user at the right knob.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Param {
    FrequencyMhz,
    DistanceKm,
    BtsHeightM,
    MsHeightM,
    TxPowerW,
    Exponent,
    ReferenceDistanceKm,
    LeeK,
    LeeN,
}

impl Param {
    pub fn flag(&self) -> &'static str {
        match self {
            Param::FrequencyMhz => "--freq-mhz",
            Param::DistanceKm => "--distance-km",
            Param::BtsHeightM => "--bts-height-m",
            Param::MsHeightM => "--ms-height-m",
            Param::TxPowerW => "--tx-power-w",
            Param::Exponent => "--exponent",
            Param::ReferenceDistanceKm => "--ref-distance-km",
            Param::LeeK => "--lee-k",
            Param::LeeN => "--lee-n",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("{param} must be positive (got {value})")]
    NonPositive { param: Param, value: f64 },

    #[error("{param} = {value} is outside the {model} validity range {min}..{max} (use --permissive to override)")]
    OutOfRange {
        model: Model,
        param: Param,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("--distance-km = {distance_km} is below the reference distance {reference_km} km; the log-distance formula holds only for d >= d0")]
    BelowReference { distance_km: f64, reference_km: f64 },

    #[error("{param} = {value} is invalid: {reason}")]
    InvalidParameter {
        param: Param,
        value: f64,
        reason: &'static str,
    },

    #[error("curve file line {line}: {message}")]
    CurveParse { line: usize, message: String },

    #[error("curve table invalid: {message}")]
    CurveInvalid { message: String },

    #[error("invalid sweep: {message}")]
    InvalidSweep { message: String },

    #[error("sweep range violations:\n{}", violations.join("\n"))]
    SweepViolations { violations: Vec<String> },

    #[error("no coverage: loss {min_loss_db:.2} dB at the minimum valid distance {min_distance_km} km already exceeds the budget {budget_db:.2} dB")]
    NoCoverage {
        min_distance_km: f64,
        min_loss_db: f64,
        budget_db: f64,
    },
}

impl Error {
    /// CLI exit code for this error: 2 validation, 3 range, 4 no-coverage.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OutOfRange { .. } | Error::BelowReference { .. } | Error::SweepViolations { .. } => 3,
            Error::NoCoverage { .. } => 4,
            _ => 2,
        }
    }
}
