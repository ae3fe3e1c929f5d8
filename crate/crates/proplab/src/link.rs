use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Param, Result};

/// Speed of light in m/s (exact SI value).
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 2.997_924_58e8;

/// The physical scenario every model evaluates: carrier frequency,
/// transmitter-receiver separation and the two antenna heights.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RadioLink {
    /// Carrier frequency in MHz (f_c).
    pub frequency_mhz: f64,
    /// T-R separation in km (d).
    pub distance_km: f64,
    /// Base-station antenna height in meters (h_te / h_b).
    pub bts_height_m: f64,
    /// Mobile antenna height in meters (h_re / h_m).
    pub ms_height_m: f64,
}

impl RadioLink {
    pub fn new(
        frequency_mhz: f64,
        distance_km: f64,
        bts_height_m: f64,
        ms_height_m: f64,
    ) -> Result<Self> {
        let link = RadioLink {
            frequency_mhz,
            distance_km,
            bts_height_m,
            ms_height_m,
        };
        link.validate()?;
        Ok(link)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive(Param::FrequencyMhz, self.frequency_mhz)?;
        require_positive(Param::DistanceKm, self.distance_km)?;
        require_positive(Param::BtsHeightM, self.bts_height_m)?;
        require_positive(Param::MsHeightM, self.ms_height_m)?;
        Ok(())
    }

    /// Same link with a different T-R distance.
    pub fn with_distance(&self, distance_km: f64) -> Self {
        RadioLink {
            distance_km,
            ..*self
        }
    }

    /// Wavelength in meters.
    pub fn wavelength_m(&self) -> f64 {
        SPEED_OF_LIGHT_M_PER_S / (self.frequency_mhz * 1e6)
    }
}

pub(crate) fn require_positive(param: Param, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { param, value })
    }
}

/// The model that produced a loss figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Model {
    #[serde(rename = "free-space")]
    FreeSpace,
    #[serde(rename = "log-distance")]
    LogDistance,
    #[serde(rename = "okumura")]
    Okumura,
    #[serde(rename = "hata")]
    Hata,
    #[serde(rename = "lee")]
    Lee,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::FreeSpace => "free-space",
            Model::LogDistance => "log-distance",
            Model::Okumura => "okumura",
            Model::Hata => "hata",
            Model::Lee => "lee",
        }
    }

    /// Canonical ordering used for sweep output columns.
    pub const SWEEP_ORDER: [Model; 3] = [Model::Okumura, Model::Hata, Model::Lee];
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "free-space" | "freespace" => Ok(Model::FreeSpace),
            "log-distance" => Ok(Model::LogDistance),
            "okumura" => Ok(Model::Okumura),
            "hata" => Ok(Model::Hata),
            "lee" => Ok(Model::Lee),
            other => Err(format!(
                "unknown model '{other}' (expected free-space, log-distance, okumura, hata or lee)"
            )),
        }
    }
}

/// Range handling: strict errors outside a model's stated validity window,
/// permissive evaluates anyway and marks the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Permissive,
}

impl Strictness {
    pub fn is_permissive(&self) -> bool {
        matches!(self, Strictness::Permissive)
    }
}

/// Marker attached to a permissive-mode result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    /// The parameter was outside the model's validity window; the formula was
    /// evaluated as printed.
    OutOfRange(Param),
    /// The query was clamped to the nearest table edge before interpolation.
    Clamped(Param),
    /// A radius search saturated at the model's maximum valid distance.
    Saturated,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flag::OutOfRange(p) => write!(f, "out-of-range:{}", p.flag()),
            Flag::Clamped(p) => write!(f, "clamped:{}", p.flag()),
            Flag::Saturated => f.write_str("saturated"),
        }
    }
}

impl serde::Serialize for Flag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A path loss value in dB together with the model that produced it and any
/// permissive-mode markers.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PathLossDb {
    pub value_db: f64,
    pub model: Model,
    pub flags: Vec<Flag>,
}

impl PathLossDb {
    pub fn new(value_db: f64, model: Model) -> Self {
        PathLossDb {
            value_db,
            model,
            flags: Vec::new(),
        }
    }

    pub fn with_flags(value_db: f64, model: Model, flags: Vec<Flag>) -> Self {
        PathLossDb {
            value_db,
            model,
            flags,
        }
    }

    pub fn is_flagged(&self) -> bool {
        !self.flags.is_empty()
    }
}

/// Range check shared by the model modules. In strict mode a value outside
/// [min, max] (or (min, max) when `exclusive`) is an error; in permissive
/// mode it is recorded in `flags` and evaluation proceeds.
pub(crate) fn check_range(
    model: Model,
    param: Param,
    value: f64,
    min: f64,
    max: f64,
    exclusive: bool,
    strictness: Strictness,
    flags: &mut Vec<Flag>,
) -> Result<()> {
    let inside = if exclusive {
        value > min && value < max
    } else {
        value >= min && value <= max
    };
    if inside {
        Ok(())
    } else if strictness.is_permissive() {
        flags.push(Flag::OutOfRange(param));
        Ok(())
    } else {
        Err(Error::OutOfRange {
            model,
            param,
            value,
            min,
            max,
        })
    }
}
