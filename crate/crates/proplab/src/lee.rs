//! Lee model: nominal-condition path loss with the alpha correction product
//! for off-nominal antenna heights, transmit power, gain and frequency.
//!
//! L = 124 + 30.5 log10(d/d0) + 10 k log10(f/fc) - alpha0,
//! alpha0 = 10 log10(a1 a2 a3 a4 a5)
//!
//! Note the frequency adjustment appears twice as printed: in the
//! 10 k log10(f/fc) term and again in a5 = (f/fc)^-n. Off-nominal
//! frequencies therefore partially double-count; at the nominal f = fc both
//! terms vanish. Implemented exactly as printed.

use crate::error::{Error, Param, Result};
use crate::link::{require_positive, Flag, Model, PathLossDb, RadioLink, Strictness};

/// How the nominal 6 dB BTS gain enters a4.
///
/// The printed definition a4 = Gb/4 alongside "a4 is considered 6 dB" is
/// self-inconsistent: 6 dB is 3.981 linear, not 4, leaving a 0.02 dB offset
/// at the all-nominal calibration point. `NominalExact` treats the nominal
/// gain as exactly a factor of 4 so the nominal scenario reproduces 124 dB;
/// `Literal` computes 10^(Gb/10)/4 as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alpha4Mode {
    #[default]
    NominalExact,
    Literal,
}

/// Lee nominal calibration constants and correction-ledger settings.
#[derive(Debug, Clone, PartialEq)]
pub struct LeeParameters {
    pub nominal_distance_km: f64,
    pub nominal_bts_height_m: f64,
    pub nominal_ms_height_m: f64,
    pub nominal_tx_power_w: f64,
    pub nominal_bts_gain_db: f64,
    /// Carried for documentation only; the printed ledger has no alpha
    /// factor for the mobile antenna gain.
    pub nominal_ms_gain_db: f64,
    pub nominal_frequency_mhz: f64,
    pub slope_db_per_decade: f64,
    pub intercept_db: f64,
    /// k = 2 below 450 MHz / suburban-open, 3 above 450 MHz / urban.
    pub k_exponent: u8,
    /// a5 exponent n, printed as 2 < n < 3; endpoints permitted, flagged
    /// when they matter (f != fc).
    pub alpha5_exponent: f64,
    pub alpha4_mode: Alpha4Mode,
}

impl Default for LeeParameters {
    fn default() -> Self {
        LeeParameters {
            nominal_distance_km: 1.6,
            nominal_bts_height_m: 30.48,
            nominal_ms_height_m: 3.0,
            nominal_tx_power_w: 10.0,
            nominal_bts_gain_db: 6.0,
            nominal_ms_gain_db: 0.0,
            nominal_frequency_mhz: 900.0,
            slope_db_per_decade: 30.5,
            intercept_db: 124.0,
            k_exponent: 3,
            alpha5_exponent: 2.0,
            alpha4_mode: Alpha4Mode::NominalExact,
        }
    }
}

impl LeeParameters {
    pub fn validate(&self) -> Result<()> {
        for (param, value) in [
            (Param::DistanceKm, self.nominal_distance_km),
            (Param::BtsHeightM, self.nominal_bts_height_m),
            (Param::MsHeightM, self.nominal_ms_height_m),
            (Param::TxPowerW, self.nominal_tx_power_w),
            (Param::FrequencyMhz, self.nominal_frequency_mhz),
        ] {
            require_positive(param, value)?;
        }
        if self.k_exponent != 2 && self.k_exponent != 3 {
            return Err(Error::InvalidParameter {
                param: Param::LeeK,
                value: self.k_exponent as f64,
                reason: "k must be 2 or 3",
            });
        }
        if !(2.0..=3.0).contains(&self.alpha5_exponent) {
            return Err(Error::InvalidParameter {
                param: Param::LeeN,
                value: self.alpha5_exponent,
                reason: "the alpha5 exponent n must lie in [2, 3]",
            });
        }
        Ok(())
    }
}

/// A concrete Lee evaluation scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct LeeScenario {
    pub link: RadioLink,
    pub tx_power_w: f64,
    pub bts_gain_db: f64,
    /// Override for k; defaults to the parameter set's k.
    pub environment_k: Option<u8>,
}

impl LeeScenario {
    pub fn new(link: RadioLink, tx_power_w: f64, bts_gain_db: f64) -> Result<Self> {
        require_positive(Param::TxPowerW, tx_power_w)?;
        link.validate()?;
        Ok(LeeScenario {
            link,
            tx_power_w,
            bts_gain_db,
            environment_k: None,
        })
    }

    /// The paper's all-nominal scenario at the calibration point.
    pub fn nominal() -> Self {
        let p = LeeParameters::default();
        LeeScenario {
            link: RadioLink {
                frequency_mhz: p.nominal_frequency_mhz,
                distance_km: p.nominal_distance_km,
                bts_height_m: p.nominal_bts_height_m,
                ms_height_m: p.nominal_ms_height_m,
            },
            tx_power_w: p.nominal_tx_power_w,
            bts_gain_db: p.nominal_bts_gain_db,
            environment_k: None,
        }
    }

    /// Nominal powers and gains, custom link.
    pub fn with_link(link: RadioLink) -> Self {
        LeeScenario {
            link,
            ..LeeScenario::nominal()
        }
    }

    fn k(&self, params: &LeeParameters) -> Result<u8> {
        let k = self.environment_k.unwrap_or(params.k_exponent);
        if k == 2 || k == 3 {
            Ok(k)
        } else {
            Err(Error::InvalidParameter {
                param: Param::LeeK,
                value: k as f64,
                reason: "k must be 2 or 3",
            })
        }
    }
}

/// The dimensionless correction factors a1..a5.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaFactors {
    /// (h_b / 30.48)^2
    pub a1: f64,
    /// (h_m / 3)^v with v = 1 below 3 m and v = 2 above (both 1 at 3 m).
    pub a2: f64,
    /// (P / 10 W)^2
    pub a3: f64,
    /// BTS gain relative to the nominal factor of 4.
    pub a4: f64,
    /// (f / fc)^-n
    pub a5: f64,
}

impl AlphaFactors {
    /// alpha0 = 10 log10(a1 a2 a3 a4 a5), in dB.
    pub fn alpha0_db(&self) -> f64 {
        10.0 * (self.a1 * self.a2 * self.a3 * self.a4 * self.a5).log10()
    }
}

pub fn alpha_factors(scenario: &LeeScenario, params: &LeeParameters) -> Result<AlphaFactors> {
    params.validate()?;
    scenario.link.validate()?;
    require_positive(Param::TxPowerW, scenario.tx_power_w)?;

    let a1 = (scenario.link.bts_height_m / params.nominal_bts_height_m).powi(2);
    let hm_ratio = scenario.link.ms_height_m / params.nominal_ms_height_m;
    let a2 = if scenario.link.ms_height_m > params.nominal_ms_height_m {
        hm_ratio.powi(2)
    } else {
        hm_ratio
    };
    let a3 = (scenario.tx_power_w / params.nominal_tx_power_w).powi(2);
    let a4 = match params.alpha4_mode {
        Alpha4Mode::NominalExact => {
            10f64.powf((scenario.bts_gain_db - params.nominal_bts_gain_db) / 10.0)
        }
        Alpha4Mode::Literal => 10f64.powf(scenario.bts_gain_db / 10.0) / 4.0,
    };
    let a5 = (scenario.link.frequency_mhz / params.nominal_frequency_mhz)
        .powf(-params.alpha5_exponent);
    Ok(AlphaFactors { a1, a2, a3, a4, a5 })
}

/// Lee path loss, exactly as printed (the paper labels the quantity dBm;
/// it is reported here as dB loss).
pub fn lee_loss(scenario: &LeeScenario, params: &LeeParameters) -> Result<PathLossDb> {
    lee_loss_with_mode(scenario, params, Strictness::Strict)
}

pub fn lee_loss_with_mode(
    scenario: &LeeScenario,
    params: &LeeParameters,
    _strictness: Strictness,
) -> Result<PathLossDb> {
    let alphas = alpha_factors(scenario, params)?;
    let k = scenario.k(params)? as f64;
    let mut flags = Vec::new();
    let off_nominal_freq = scenario.link.frequency_mhz != params.nominal_frequency_mhz;
    if off_nominal_freq
        && (params.alpha5_exponent == 2.0 || params.alpha5_exponent == 3.0)
    {
        flags.push(Flag::OutOfRange(Param::LeeN));
    }
    let value_db = params.intercept_db
        + params.slope_db_per_decade * (scenario.link.distance_km / params.nominal_distance_km).log10()
        + 10.0 * k * (scenario.link.frequency_mhz / params.nominal_frequency_mhz).log10()
        - alphas.alpha0_db();
    Ok(PathLossDb::with_flags(value_db, Model::Lee, flags))
}
