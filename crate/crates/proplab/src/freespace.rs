//! Free-space and log-distance path loss.

use crate::error::{Error, Param, Result};
use crate::link::{require_positive, Model, PathLossDb, RadioLink};

/// Log-distance model parameters: path loss exponent n and the close-in
/// reference distance d0 (typically 1 km for macrocells, 100 m for
/// microcells).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LogDistanceParams {
    pub exponent: f64,
    pub reference_distance_km: f64,
}

impl Default for LogDistanceParams {
    fn default() -> Self {
        LogDistanceParams {
            exponent: 2.0,
            reference_distance_km: 1.0,
        }
    }
}

impl LogDistanceParams {
    pub fn new(exponent: f64, reference_distance_km: f64) -> Result<Self> {
        require_positive(Param::Exponent, exponent)?;
        require_positive(Param::ReferenceDistanceKm, reference_distance_km)?;
        Ok(LogDistanceParams {
            exponent,
            reference_distance_km,
        })
    }
}

/// Free-space path loss: 20 log10(4 pi d / lambda) dB.
pub fn free_space_loss(link: &RadioLink) -> Result<PathLossDb> {
    link.validate()?;
    let distance_m = link.distance_km * 1000.0;
    let value_db = 20.0 * (4.0 * std::f64::consts::PI * distance_m / link.wavelength_m()).log10();
    Ok(PathLossDb::new(value_db, Model::FreeSpace))
}

/// Log-distance path loss: L(d0) + 10 n log10(d/d0) dB, defined for d >= d0.
pub fn log_distance_loss(
    link: &RadioLink,
    params: &LogDistanceParams,
    reference_loss_db: &PathLossDb,
) -> Result<PathLossDb> {
    link.validate()?;
    require_positive(Param::Exponent, params.exponent)?;
    require_positive(Param::ReferenceDistanceKm, params.reference_distance_km)?;
    if link.distance_km < params.reference_distance_km {
        return Err(Error::BelowReference {
            distance_km: link.distance_km,
            reference_km: params.reference_distance_km,
        });
    }
    let value_db = reference_loss_db.value_db
        + 10.0 * params.exponent * (link.distance_km / params.reference_distance_km).log10();
    Ok(PathLossDb::new(value_db, Model::LogDistance))
}

/// Reference loss at d0 computed with the free-space model; independent of
/// the link's own distance.
pub fn default_reference_loss(link: &RadioLink, params: &LogDistanceParams) -> Result<PathLossDb> {
    require_positive(Param::ReferenceDistanceKm, params.reference_distance_km)?;
    free_space_loss(&link.with_distance(params.reference_distance_km))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn link(f: f64, d: f64) -> RadioLink {
        RadioLink::new(f, d, 30.0, 3.0).unwrap()
    }

    #[test]
    fn free_space_900mhz_1km() {
        // 20*log10(4*pi*1000*900e6/2.99792458e8) = 91.5326...
        let loss = free_space_loss(&link(900.0, 1.0)).unwrap();
        assert!((loss.value_db - 91.5326334).abs() < 1e-6, "{}", loss.value_db);
    }

    #[test]
    fn free_space_frequency_doubling_adds_6db() {
        let a = free_space_loss(&link(900.0, 1.0)).unwrap().value_db;
        let b = free_space_loss(&link(1800.0, 1.0)).unwrap().value_db;
        assert!((b - a - 20.0 * 2.0_f64.log10()).abs() < 1e-9);
        assert!((b - 97.5532333).abs() < 1e-6);
    }

    #[test]
    fn free_space_distance_doubling_adds_6db() {
        for d in [0.2, 1.0, 7.5, 42.0] {
            let a = free_space_loss(&link(900.0, d)).unwrap().value_db;
            let b = free_space_loss(&link(900.0, 2.0 * d)).unwrap().value_db;
            assert!((b - a - 6.020599913279624).abs() < 1e-9);
        }
    }

    #[test]
    fn log_distance_identity_at_reference() {
        let params = LogDistanceParams::default();
        let reference = free_space_loss(&link(900.0, 1.0)).unwrap();
        let loss = log_distance_loss(&link(900.0, 1.0), &params, &reference).unwrap();
        assert_eq!(loss.value_db, reference.value_db);
    }

    #[test]
    fn log_distance_exponent_2_adds_20db_per_decade() {
        let params = LogDistanceParams::default();
        let reference = free_space_loss(&link(900.0, 1.0)).unwrap();
        let loss = log_distance_loss(&link(900.0, 10.0), &params, &reference).unwrap();
        assert!((loss.value_db - (reference.value_db + 20.0)).abs() < 1e-9);
        assert!((loss.value_db - 111.5326334).abs() < 1e-6);
    }

    #[test]
    fn log_distance_exponent_4_adds_40db_per_decade() {
        let params = LogDistanceParams::new(4.0, 1.0).unwrap();
        let reference = free_space_loss(&link(900.0, 1.0)).unwrap();
        let loss = log_distance_loss(&link(900.0, 10.0), &params, &reference).unwrap();
        assert!((loss.value_db - (reference.value_db + 40.0)).abs() < 1e-9);
    }

    #[test]
    fn log_distance_rejects_below_reference() {
        let params = LogDistanceParams::default();
        let reference = free_space_loss(&link(900.0, 1.0)).unwrap();
        let err = log_distance_loss(&link(900.0, 0.5), &params, &reference).unwrap_err();
        assert!(matches!(err, Error::BelowReference { .. }));
    }

    #[test]
    fn default_reference_ignores_link_distance() {
        let params = LogDistanceParams {
            exponent: 2.0,
            reference_distance_km: 0.1,
        };
        let a = default_reference_loss(&link(900.0, 1.0), &params).unwrap();
        let b = default_reference_loss(&link(900.0, 77.0), &params).unwrap();
        assert_eq!(a.value_db, b.value_db);
        assert!((a.value_db - 71.5326334).abs() < 1e-6);
    }
}
