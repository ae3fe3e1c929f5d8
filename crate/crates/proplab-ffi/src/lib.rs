//! C ABI for the proplab path loss models.
//!
//! Conventions: every fallible function returns a `ProplabStatus` and writes
//! its result through out-pointers. Curve tables are opaque handles created
//! by `proplab_curves_default`/`proplab_curves_parse` and released with
//! `proplab_curves_free`. All functions are thread-safe; handles are
//! immutable after creation and may be shared across threads.

use std::ffi::{c_char, CStr};

use proplab::{
    free_space_loss, log_distance_loss, max_radius, Environment, Error, LogDistanceParams, Model,
    ModelEvaluator, OkumuraCurves, RadioLink, Strictness,
};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProplabStatus {
    Ok = 0,
    /// A null pointer was passed where a value is required.
    NullPointer = 1,
    /// A parameter is invalid (non-positive, bad enum value, bad UTF-8).
    InvalidArgument = 2,
    /// A parameter is outside the model's validity range (strict mode).
    OutOfRange = 3,
    /// The link budget cannot be met even at the minimum valid distance.
    NoCoverage = 4,
    /// The curve file failed to parse or violated a table invariant.
    ParseError = 5,
}

/// Path loss model selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProplabModel {
    FreeSpace = 0,
    LogDistance = 1,
    Okumura = 2,
    Hata = 3,
    Lee = 4,
}

impl From<ProplabModel> for Model {
    fn from(m: ProplabModel) -> Model {
        match m {
            ProplabModel::FreeSpace => Model::FreeSpace,
            ProplabModel::LogDistance => Model::LogDistance,
            ProplabModel::Okumura => Model::Okumura,
            ProplabModel::Hata => Model::Hata,
            ProplabModel::Lee => Model::Lee,
        }
    }
}

/// Okumura environment class.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProplabEnvironment {
    Open = 0,
    Suburban = 1,
    Urban = 2,
}

impl From<ProplabEnvironment> for Environment {
    fn from(e: ProplabEnvironment) -> Environment {
        match e {
            ProplabEnvironment::Open => Environment::Open,
            ProplabEnvironment::Suburban => Environment::Suburban,
            ProplabEnvironment::Urban => Environment::Urban,
        }
    }
}

/// Opaque handle to a validated Okumura curve table.
pub struct ProplabCurves {
    inner: OkumuraCurves,
}

fn status_of(err: &Error) -> ProplabStatus {
    match err {
        Error::OutOfRange { .. } | Error::BelowReference { .. } | Error::SweepViolations { .. } => {
            ProplabStatus::OutOfRange
        }
        Error::NoCoverage { .. } => ProplabStatus::NoCoverage,
        Error::CurveParse { .. } | Error::CurveInvalid { .. } => ProplabStatus::ParseError,
        _ => ProplabStatus::InvalidArgument,
    }
}

fn strictness(permissive: bool) -> Strictness {
    if permissive {
        Strictness::Permissive
    } else {
        Strictness::Strict
    }
}

/// A static description of a status code.
#[no_mangle]
pub extern "C" fn proplab_status_message(status: ProplabStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        ProplabStatus::Ok => b"ok\0",
        ProplabStatus::NullPointer => b"null pointer argument\0",
        ProplabStatus::InvalidArgument => b"invalid argument\0",
        ProplabStatus::OutOfRange => b"parameter outside model validity range\0",
        ProplabStatus::NoCoverage => b"link budget unreachable at minimum distance\0",
        ProplabStatus::ParseError => b"curve table parse or validation error\0",
    };
    msg.as_ptr() as *const c_char
}

/// New handle to the built-in default curve table. Never fails.
/// Release with `proplab_curves_free`.
#[no_mangle]
pub extern "C" fn proplab_curves_default() -> *mut ProplabCurves {
    Box::into_raw(Box::new(ProplabCurves {
        inner: OkumuraCurves::default_table().clone(),
    }))
}

/// Parse a curve table from a NUL-terminated string in the curve-file
/// format. On success writes a new handle to `out`.
///
/// # Safety
/// `text` must point to a valid NUL-terminated string and `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn proplab_curves_parse(
    text: *const c_char,
    out: *mut *mut ProplabCurves,
) -> ProplabStatus {
    if text.is_null() || out.is_null() {
        return ProplabStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return ProplabStatus::InvalidArgument;
    };
    match OkumuraCurves::parse(text) {
        Ok(curves) => {
            *out = Box::into_raw(Box::new(ProplabCurves { inner: curves }));
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a curve table handle. Passing NULL is a no-op.
///
/// # Safety
/// `curves` must be a handle previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn proplab_curves_free(curves: *mut ProplabCurves) {
    if !curves.is_null() {
        drop(Box::from_raw(curves));
    }
}

/// Free-space path loss in dB.
///
/// # Safety
/// `out_db` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn proplab_free_space_loss(
    freq_mhz: f64,
    distance_km: f64,
    out_db: *mut f64,
) -> ProplabStatus {
    if out_db.is_null() {
        return ProplabStatus::NullPointer;
    }
    match RadioLink::new(freq_mhz, distance_km, 1.0, 1.0).and_then(|l| free_space_loss(&l)) {
        Ok(loss) => {
            *out_db = loss.value_db;
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Log-distance path loss in dB with a free-space reference at
/// `ref_distance_km`.
///
/// # Safety
/// `out_db` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn proplab_log_distance_loss(
    freq_mhz: f64,
    distance_km: f64,
    exponent: f64,
    ref_distance_km: f64,
    out_db: *mut f64,
) -> ProplabStatus {
    if out_db.is_null() {
        return ProplabStatus::NullPointer;
    }
    let result = (|| {
        let link = RadioLink::new(freq_mhz, distance_km, 1.0, 1.0)?;
        let params = LogDistanceParams::new(exponent, ref_distance_km)?;
        let reference = proplab::default_reference_loss(&link, &params)?;
        log_distance_loss(&link, &params, &reference)
    })();
    match result {
        Ok(loss) => {
            *out_db = loss.value_db;
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Okumura median path loss in dB. `out_flagged` (optional) is set when a
/// permissive-mode evaluation left the validity window.
///
/// # Safety
/// `curves` must be a live handle; `out_db` must be valid; `out_flagged`
/// may be NULL.
#[no_mangle]
pub unsafe extern "C" fn proplab_okumura_loss(
    curves: *const ProplabCurves,
    freq_mhz: f64,
    distance_km: f64,
    bts_height_m: f64,
    ms_height_m: f64,
    env: ProplabEnvironment,
    permissive: bool,
    out_db: *mut f64,
    out_flagged: *mut bool,
) -> ProplabStatus {
    if curves.is_null() || out_db.is_null() {
        return ProplabStatus::NullPointer;
    }
    let result = RadioLink::new(freq_mhz, distance_km, bts_height_m, ms_height_m).and_then(|l| {
        proplab::okumura_loss(&l, env.into(), &(*curves).inner, strictness(permissive))
    });
    match result {
        Ok(loss) => {
            *out_db = loss.value_db;
            if !out_flagged.is_null() {
                *out_flagged = loss.is_flagged();
            }
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Hata urban median path loss in dB (large-city correction).
///
/// # Safety
/// `out_db` must be valid; `out_flagged` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn proplab_hata_loss(
    freq_mhz: f64,
    distance_km: f64,
    bts_height_m: f64,
    ms_height_m: f64,
    permissive: bool,
    out_db: *mut f64,
    out_flagged: *mut bool,
) -> ProplabStatus {
    if out_db.is_null() {
        return ProplabStatus::NullPointer;
    }
    let result = RadioLink::new(freq_mhz, distance_km, bts_height_m, ms_height_m)
        .and_then(|l| proplab::hata_loss(&l, strictness(permissive)));
    match result {
        Ok(loss) => {
            *out_db = loss.value_db;
            if !out_flagged.is_null() {
                *out_flagged = loss.is_flagged();
            }
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Lee path loss in dB with nominal-exact alpha4 calibration (pass
/// `alpha4_literal` for the as-printed 10^(Gb/10)/4 form).
///
/// # Safety
/// `out_db` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn proplab_lee_loss(
    freq_mhz: f64,
    distance_km: f64,
    bts_height_m: f64,
    ms_height_m: f64,
    tx_power_w: f64,
    bts_gain_db: f64,
    alpha4_literal: bool,
    out_db: *mut f64,
) -> ProplabStatus {
    if out_db.is_null() {
        return ProplabStatus::NullPointer;
    }
    let result = (|| {
        let link = RadioLink::new(freq_mhz, distance_km, bts_height_m, ms_height_m)?;
        let scenario = proplab::LeeScenario::new(link, tx_power_w, bts_gain_db)?;
        let params = proplab::LeeParameters {
            alpha4_mode: if alpha4_literal {
                proplab::Alpha4Mode::Literal
            } else {
                proplab::Alpha4Mode::NominalExact
            },
            ..proplab::LeeParameters::default()
        };
        proplab::lee_loss(&scenario, &params)
    })();
    match result {
        Ok(loss) => {
            *out_db = loss.value_db;
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Largest distance (km) whose loss stays within `max_loss_db`.
/// `out_saturated` (optional) is set when the whole validity range fits the
/// budget and the model's maximum distance is returned.
///
/// # Safety
/// `curves` must be a live handle; `out_km` must be valid; `out_saturated`
/// may be NULL.
#[no_mangle]
pub unsafe extern "C" fn proplab_max_radius(
    curves: *const ProplabCurves,
    model: ProplabModel,
    freq_mhz: f64,
    bts_height_m: f64,
    ms_height_m: f64,
    env: ProplabEnvironment,
    max_loss_db: f64,
    permissive: bool,
    out_km: *mut f64,
    out_saturated: *mut bool,
) -> ProplabStatus {
    if curves.is_null() || out_km.is_null() {
        return ProplabStatus::NullPointer;
    }
    let result = (|| {
        let template = RadioLink::new(freq_mhz, 1.0, bts_height_m, ms_height_m)?;
        let eval = ModelEvaluator::new(&(*curves).inner)
            .with_env(env.into())
            .with_strictness(strictness(permissive));
        max_radius(&eval, model.into(), &template, max_loss_db)
    })();
    match result {
        Ok(outcome) => {
            *out_km = outcome.radius_km;
            if !out_saturated.is_null() {
                *out_saturated = outcome.saturated;
            }
            ProplabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
