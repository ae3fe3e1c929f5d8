//! Okumura model: free-space loss plus the median attenuation Amu(f, d) read
//! from digitized empirical curves, minus antenna height gains and the
//! environment gain G_AREA.
//!
//! L50 = L_F + Amu(f, d) - G(h_te) - G(h_re) - G_AREA

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Param, Result};
use crate::freespace::free_space_loss;
use crate::link::{check_range, require_positive, Flag, Model, PathLossDb, RadioLink, Strictness};

/// Validity window of the curves: 150-1920 MHz, 1-100 km.
pub const FREQ_RANGE_MHZ: (f64, f64) = (150.0, 1920.0);
pub const DIST_RANGE_KM: (f64, f64) = (1.0, 100.0);
/// Printed BTS height condition: 100 m > h_te > 30 m.
pub const BTS_HEIGHT_RANGE_M: (f64, f64) = (30.0, 100.0);
/// Okumura's original extension allows BTS heights up to 1 km (permissive).
pub const BTS_HEIGHT_EXTENDED_MAX_M: f64 = 1000.0;
pub const MS_HEIGHT_MAX_M: f64 = 10.0;

const DEFAULT_CURVES_CSV: &str = include_str!("data/okumura_default.csv");

/// Environment class selecting the G_AREA gain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Environment {
    #[serde(rename = "open")]
    Open,
    #[serde(rename = "suburban")]
    Suburban,
    #[serde(rename = "urban")]
    Urban,
}

impl Environment {
    pub const ALL: [Environment; 3] = [Environment::Open, Environment::Suburban, Environment::Urban];

    pub fn name(&self) -> &'static str {
        match self {
            Environment::Open => "open",
            Environment::Suburban => "suburban",
            Environment::Urban => "urban",
        }
    }
}

impl fmt::Display for Environment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Environment {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "open" => Ok(Environment::Open),
            "suburban" => Ok(Environment::Suburban),
            "urban" => Ok(Environment::Urban),
            other => Err(format!(
                "unknown environment '{other}' (expected open, suburban or urban)"
            )),
        }
    }
}

/// Digitized Amu(f, d) surface and per-environment G_AREA values.
///
/// Immutable after load; interpolation is bilinear in (log10 f, log10 d)
/// because the source charts use log axes.
#[derive(Debug, Clone, PartialEq)]
pub struct OkumuraCurves {
    frequencies_mhz: Vec<f64>,
    distances_km: Vec<f64>,
    /// amu_db[i][j] = Amu(frequencies_mhz[i], distances_km[j]).
    amu_db: Vec<Vec<f64>>,
    /// G_AREA per environment, in [open, suburban, urban] order.
    garea_db: [f64; 3],
    log_freq: Vec<f64>,
    log_dist: Vec<f64>,
}

impl OkumuraCurves {
    /// The built-in table digitized from the standard published curves.
    pub fn default_table() -> &'static OkumuraCurves {
        static TABLE: OnceLock<OkumuraCurves> = OnceLock::new();
        TABLE.get_or_init(|| {
            OkumuraCurves::parse(DEFAULT_CURVES_CSV).expect("embedded default curve table is valid")
        })
    }

    pub fn new(
        frequencies_mhz: Vec<f64>,
        distances_km: Vec<f64>,
        amu_db: Vec<Vec<f64>>,
        garea_db: [f64; 3],
    ) -> Result<Self> {
        let log_freq = frequencies_mhz.iter().map(|f| f.log10()).collect();
        let log_dist = distances_km.iter().map(|d| d.log10()).collect();
        let curves = OkumuraCurves {
            frequencies_mhz,
            distances_km,
            amu_db,
            garea_db,
            log_freq,
            log_dist,
        };
        curves.validate()?;
        Ok(curves)
    }

    /// Parse the curve-file format (see the crate README / `to_csv`).
    pub fn parse(source: &str) -> Result<Self> {
        let mut distances: Option<Vec<f64>> = None;
        let mut frequencies = Vec::new();
        let mut amu = Vec::new();
        let mut garea: [Option<f64>; 3] = [None, None, None];

        for (idx, raw) in source.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            match fields[0] {
                "amu" => {
                    if distances.is_some() {
                        return Err(parse_err(line_no, "duplicate 'amu' header row"));
                    }
                    let ds = fields[1..]
                        .iter()
                        .map(|s| parse_number(line_no, s))
                        .collect::<Result<Vec<f64>>>()?;
                    distances = Some(ds);
                }
                "garea" => {
                    if fields.len() != 3 {
                        return Err(parse_err(line_no, "expected 'garea,<class>,<value_db>'"));
                    }
                    let env: Environment = fields[1]
                        .parse()
                        .map_err(|e: String| parse_err(line_no, &e))?;
                    garea[env as usize] = Some(parse_number(line_no, fields[2])?);
                }
                _ => {
                    let Some(ds) = &distances else {
                        return Err(parse_err(line_no, "data row before the 'amu' header row"));
                    };
                    let f = parse_number(line_no, fields[0])?;
                    let values = fields[1..]
                        .iter()
                        .map(|s| parse_number(line_no, s))
                        .collect::<Result<Vec<f64>>>()?;
                    if values.len() != ds.len() {
                        return Err(parse_err(
                            line_no,
                            &format!("expected {} Amu values, found {}", ds.len(), values.len()),
                        ));
                    }
                    frequencies.push(f);
                    amu.push(values);
                }
            }
        }

        let distances = distances.ok_or_else(|| parse_err(0, "missing 'amu' header row"))?;
        let garea_db = [
            garea[0].ok_or_else(|| parse_err(0, "missing 'garea,open' row"))?,
            garea[1].ok_or_else(|| parse_err(0, "missing 'garea,suburban' row"))?,
            garea[2].ok_or_else(|| parse_err(0, "missing 'garea,urban' row"))?,
        ];
        OkumuraCurves::new(frequencies, distances, amu, garea_db)
    }

    /// Serialize back to the curve-file format. `parse(to_csv())` is the
    /// identity on the numeric content.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("amu");
        for d in &self.distances_km {
            out.push_str(&format!(",{d}"));
        }
        out.push('\n');
        for (f, row) in self.frequencies_mhz.iter().zip(&self.amu_db) {
            out.push_str(&format!("{f}"));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        for env in Environment::ALL {
            out.push_str(&format!("garea,{},{}\n", env, self.garea_db[env as usize]));
        }
        out
    }

    fn validate(&self) -> Result<()> {
        let invalid = |message: String| Error::CurveInvalid { message };
        if self.frequencies_mhz.is_empty() || self.distances_km.is_empty() {
            return Err(invalid("frequency and distance grids must be non-empty".into()));
        }
        for grid in [&self.frequencies_mhz, &self.distances_km] {
            if grid.iter().any(|v| !v.is_finite() || *v <= 0.0) {
                return Err(invalid("grid values must be positive and finite".into()));
            }
            if grid.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid("grids must be strictly ascending".into()));
            }
        }
        if self.amu_db.len() != self.frequencies_mhz.len() {
            return Err(invalid(format!(
                "expected {} Amu rows, found {}",
                self.frequencies_mhz.len(),
                self.amu_db.len()
            )));
        }
        for (i, row) in self.amu_db.iter().enumerate() {
            if row.len() != self.distances_km.len() {
                return Err(invalid(format!(
                    "Amu row for {} MHz has {} values, expected {}",
                    self.frequencies_mhz[i],
                    row.len(),
                    self.distances_km.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite() || *v < 0.0) {
                return Err(invalid(format!(
                    "Amu values for {} MHz must be finite and >= 0",
                    self.frequencies_mhz[i]
                )));
            }
            if let Some(w) = row.windows(2).position(|w| w[0] > w[1]) {
                return Err(invalid(format!(
                    "Amu decreases with distance at {} MHz between {} km and {} km",
                    self.frequencies_mhz[i], self.distances_km[w], self.distances_km[w + 1]
                )));
            }
        }
        if self.garea_db.iter().any(|v| !v.is_finite()) {
            return Err(invalid("G_AREA values must be finite".into()));
        }
        Ok(())
    }

    pub fn frequencies_mhz(&self) -> &[f64] {
        &self.frequencies_mhz
    }

    pub fn distances_km(&self) -> &[f64] {
        &self.distances_km
    }

    pub fn amu_at_node(&self, freq_index: usize, dist_index: usize) -> f64 {
        self.amu_db[freq_index][dist_index]
    }

    /// G_AREA for an environment class, in dB.
    pub fn garea(&self, env: Environment) -> f64 {
        self.garea_db[env as usize]
    }

    /// Median attenuation Amu(f, d) by bilinear interpolation in
    /// (log10 f, log10 d). Exact at grid nodes. Strict mode errors outside
    /// the 150-1920 MHz / 1-100 km validity window; permissive mode clamps
    /// to the nearest edge and flags the result.
    pub fn amu(
        &self,
        frequency_mhz: f64,
        distance_km: f64,
        strictness: Strictness,
        flags: &mut Vec<Flag>,
    ) -> Result<f64> {
        require_positive(Param::FrequencyMhz, frequency_mhz)?;
        require_positive(Param::DistanceKm, distance_km)?;
        let f = self.clamp_to_window(
            Param::FrequencyMhz,
            frequency_mhz,
            FREQ_RANGE_MHZ,
            strictness,
            flags,
        )?;
        let d = self.clamp_to_window(Param::DistanceKm, distance_km, DIST_RANGE_KM, strictness, flags)?;
        // Clamp to the grid hull as well, in case a user table covers less
        // than the full validity window.
        let f = f.clamp(self.frequencies_mhz[0], *self.frequencies_mhz.last().unwrap());
        let d = d.clamp(self.distances_km[0], *self.distances_km.last().unwrap());

        let (i, t) = segment(&self.log_freq, f.log10());
        let (j, u) = segment(&self.log_dist, d.log10());
        let v00 = self.amu_db[i][j];
        let v01 = self.amu_db[i][j + 1];
        let v10 = self.amu_db[i + 1][j];
        let v11 = self.amu_db[i + 1][j + 1];
        Ok(v00 * (1.0 - t) * (1.0 - u) + v10 * t * (1.0 - u) + v01 * (1.0 - t) * u + v11 * t * u)
    }

    fn clamp_to_window(
        &self,
        param: Param,
        value: f64,
        (min, max): (f64, f64),
        strictness: Strictness,
        flags: &mut Vec<Flag>,
    ) -> Result<f64> {
        if value >= min && value <= max {
            Ok(value)
        } else if strictness.is_permissive() {
            flags.push(Flag::Clamped(param));
            Ok(value.clamp(min, max))
        } else {
            Err(Error::OutOfRange {
                model: Model::Okumura,
                param,
                value,
                min,
                max,
            })
        }
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::CurveParse {
        line,
        message: message.to_string(),
    }
}

fn parse_number(line: usize, s: &str) -> Result<f64> {
    s.parse::<f64>()
        .map_err(|_| parse_err(line, &format!("invalid number '{s}'")))
}

/// Locate `x` in an ascending grid: returns the segment index and the
/// interpolation weight in [0, 1]. `x` must already lie within the hull.
fn segment(grid: &[f64], x: f64) -> (usize, f64) {
    let last = grid.len() - 1;
    let i = match grid.binary_search_by(|g| g.partial_cmp(&x).unwrap()) {
        Ok(i) => i.min(last - 1),
        Err(i) => i.saturating_sub(1).min(last - 1),
    };
    let t = (x - grid[i]) / (grid[i + 1] - grid[i]);
    (i, t)
}

/// BTS antenna height gain G(h_te) = 20 log10(h_te / 200) dB.
///
/// Strict mode enforces the printed condition 30 m < h_te < 100 m;
/// permissive mode allows heights up to 1 km (Okumura's extension), flagged.
pub fn bts_height_gain(
    bts_height_m: f64,
    strictness: Strictness,
    flags: &mut Vec<Flag>,
) -> Result<f64> {
    require_positive(Param::BtsHeightM, bts_height_m)?;
    if strictness.is_permissive() && bts_height_m > BTS_HEIGHT_EXTENDED_MAX_M {
        return Err(Error::OutOfRange {
            model: Model::Okumura,
            param: Param::BtsHeightM,
            value: bts_height_m,
            min: BTS_HEIGHT_RANGE_M.0,
            max: BTS_HEIGHT_EXTENDED_MAX_M,
        });
    }
    check_range(
        Model::Okumura,
        Param::BtsHeightM,
        bts_height_m,
        BTS_HEIGHT_RANGE_M.0,
        BTS_HEIGHT_RANGE_M.1,
        true,
        strictness,
        flags,
    )?;
    Ok(20.0 * (bts_height_m / 200.0).log10())
}

/// Mobile antenna height gain: 10 log10(h_re / 3) for h_re <= 3 m,
/// 20 log10(h_re / 3) for 3 m < h_re < 10 m. Continuous at 3 m.
pub fn ms_height_gain(
    ms_height_m: f64,
    strictness: Strictness,
    flags: &mut Vec<Flag>,
) -> Result<f64> {
    require_positive(Param::MsHeightM, ms_height_m)?;
    check_range(
        Model::Okumura,
        Param::MsHeightM,
        ms_height_m,
        0.0,
        MS_HEIGHT_MAX_M,
        true,
        strictness,
        flags,
    )?;
    let factor = if ms_height_m <= 3.0 { 10.0 } else { 20.0 };
    Ok(factor * (ms_height_m / 3.0).log10())
}

/// Okumura median path loss (Eq. form: L_F + Amu - G(h_te) - G(h_re) - G_AREA).
pub fn okumura_loss(
    link: &RadioLink,
    env: Environment,
    curves: &OkumuraCurves,
    strictness: Strictness,
) -> Result<PathLossDb> {
    link.validate()?;
    let mut flags = Vec::new();
    let free_space = free_space_loss(link)?;
    let amu = curves.amu(link.frequency_mhz, link.distance_km, strictness, &mut flags)?;
    let g_bts = bts_height_gain(link.bts_height_m, strictness, &mut flags)?;
    let g_ms = ms_height_gain(link.ms_height_m, strictness, &mut flags)?;
    let value_db = free_space.value_db + amu - g_bts - g_ms - curves.garea(env);
    Ok(PathLossDb::with_flags(value_db, Model::Okumura, flags))
}
