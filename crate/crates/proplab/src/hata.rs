//! Hata model: closed-form urban median path loss (large-city variant).
//!
//! L50(urban) = 69.55 + 26.16 log10 f - 13.82 log10 h_te - a(h_re)
//!              + (44.9 - 6.55 log10 h_te) log10 d

use crate::error::{Param, Result};
use crate::link::{check_range, require_positive, Flag, Model, PathLossDb, RadioLink, Strictness};

/// Validity: 150-1500 MHz, h_te 30-200 m, h_re 1-10 m, d >= 1 km.
pub const FREQ_RANGE_MHZ: (f64, f64) = (150.0, 1500.0);
pub const BTS_HEIGHT_RANGE_M: (f64, f64) = (30.0, 200.0);
pub const MS_HEIGHT_RANGE_M: (f64, f64) = (1.0, 10.0);
pub const MIN_DISTANCE_KM: f64 = 1.0;
/// Distance cap used for sweeps and radius inversion.
pub const MAX_DISTANCE_KM: f64 = 100.0;

/// Large-city mobile antenna correction a(h_re).
///
/// The two branches meet at 300 MHz where both printed conditions hold; the
/// high-frequency branch owns the boundary. They do not agree there for
/// general h_re, so the correction jumps at 300 MHz as printed.
pub fn mobile_correction(
    ms_height_m: f64,
    frequency_mhz: f64,
    strictness: Strictness,
    flags: &mut Vec<Flag>,
) -> Result<f64> {
    require_positive(Param::MsHeightM, ms_height_m)?;
    require_positive(Param::FrequencyMhz, frequency_mhz)?;
    check_range(
        Model::Hata,
        Param::MsHeightM,
        ms_height_m,
        MS_HEIGHT_RANGE_M.0,
        MS_HEIGHT_RANGE_M.1,
        false,
        strictness,
        flags,
    )?;
    check_range(
        Model::Hata,
        Param::FrequencyMhz,
        frequency_mhz,
        FREQ_RANGE_MHZ.0,
        FREQ_RANGE_MHZ.1,
        false,
        strictness,
        flags,
    )?;
    Ok(if frequency_mhz >= 300.0 {
        3.2 * (11.75 * ms_height_m).log10().powi(2) - 4.97
    } else {
        8.29 * (1.54 * ms_height_m).log10().powi(2) - 1.1
    })
}

/// Hata urban median path loss.
pub fn hata_loss(link: &RadioLink, strictness: Strictness) -> Result<PathLossDb> {
    link.validate()?;
    let mut flags = Vec::new();
    check_range(
        Model::Hata,
        Param::BtsHeightM,
        link.bts_height_m,
        BTS_HEIGHT_RANGE_M.0,
        BTS_HEIGHT_RANGE_M.1,
        false,
        strictness,
        &mut flags,
    )?;
    check_range(
        Model::Hata,
        Param::DistanceKm,
        link.distance_km,
        MIN_DISTANCE_KM,
        MAX_DISTANCE_KM,
        false,
        strictness,
        &mut flags,
    )?;
    let correction = mobile_correction(link.ms_height_m, link.frequency_mhz, strictness, &mut flags)?;
    let log_hte = link.bts_height_m.log10();
    let value_db = 69.55 + 26.16 * link.frequency_mhz.log10() - 13.82 * log_hte - correction
        + (44.9 - 6.55 * log_hte) * link.distance_km.log10();
    Ok(PathLossDb::with_flags(value_db, Model::Hata, flags))
}
