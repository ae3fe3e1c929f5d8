//! Exercises the C ABI surface from Rust, exactly as a foreign caller would.

use std::ffi::CString;
use std::ptr;

use proplab_ffi::*;

#[test]
fn free_space_loss_through_ffi() {
    let mut db = 0.0;
    let status = unsafe { proplab_free_space_loss(900.0, 1.0, &mut db) };
    assert_eq!(status, ProplabStatus::Ok);
    assert!((db - 91.5326).abs() < 0.001);

    let status = unsafe { proplab_free_space_loss(-900.0, 1.0, &mut db) };
    assert_eq!(status, ProplabStatus::InvalidArgument);
    assert_eq!(
        unsafe { proplab_free_space_loss(900.0, 1.0, ptr::null_mut()) },
        ProplabStatus::NullPointer
    );
}

#[test]
fn log_distance_matches_free_space_for_n2() {
    let mut ld = 0.0;
    let mut fs = 0.0;
    unsafe {
        assert_eq!(
            proplab_log_distance_loss(900.0, 10.0, 2.0, 1.0, &mut ld),
            ProplabStatus::Ok
        );
        assert_eq!(proplab_free_space_loss(900.0, 10.0, &mut fs), ProplabStatus::Ok);
    }
    assert!((ld - fs).abs() < 1e-9);
}

#[test]
fn hata_oracle_through_ffi() {
    let mut db = 0.0;
    let mut flagged = false;
    let status =
        unsafe { proplab_hata_loss(900.0, 1.0, 30.0, 3.0, false, &mut db, &mut flagged) };
    assert_eq!(status, ProplabStatus::Ok);
    assert!((db - 123.7293).abs() < 0.001);
    assert!(!flagged);

    // Out of range strict -> status; permissive -> flagged value.
    let status =
        unsafe { proplab_hata_loss(2000.0, 1.0, 30.0, 3.0, false, &mut db, &mut flagged) };
    assert_eq!(status, ProplabStatus::OutOfRange);
    let status =
        unsafe { proplab_hata_loss(2000.0, 1.0, 30.0, 3.0, true, &mut db, &mut flagged) };
    assert_eq!(status, ProplabStatus::Ok);
    assert!(flagged);
}

#[test]
fn lee_nominal_anchor_through_ffi() {
    let mut db = 0.0;
    let status =
        unsafe { proplab_lee_loss(900.0, 1.6, 30.48, 3.0, 10.0, 6.0, false, &mut db) };
    assert_eq!(status, ProplabStatus::Ok);
    assert!((db - 124.0).abs() < 1e-9, "{db}");

    let status = unsafe { proplab_lee_loss(900.0, 1.6, 30.48, 3.0, 10.0, 6.0, true, &mut db) };
    assert_eq!(status, ProplabStatus::Ok);
    assert!((db - 124.0206).abs() < 0.001, "{db}");
}

#[test]
fn okumura_and_radius_with_curve_handles() {
    let curves = proplab_curves_default();
    assert!(!curves.is_null());

    let mut db = 0.0;
    let mut flagged = false;
    let status = unsafe {
        proplab_okumura_loss(
            curves,
            900.0,
            5.0,
            50.0,
            3.0,
            ProplabEnvironment::Urban,
            false,
            &mut db,
            &mut flagged,
        )
    };
    assert_eq!(status, ProplabStatus::Ok);
    // 105.512 + 28 + 12.041 - 0 - 0
    assert!((db - 145.553).abs() < 0.01, "{db}");
    assert!(!flagged);

    let mut km = 0.0;
    let mut saturated = false;
    let status = unsafe {
        proplab_max_radius(
            curves,
            ProplabModel::Okumura,
            900.0,
            50.0,
            3.0,
            ProplabEnvironment::Urban,
            db,
            false,
            &mut km,
            &mut saturated,
        )
    };
    assert_eq!(status, ProplabStatus::Ok);
    assert!((km - 5.0).abs() < 1e-3, "{km}");
    assert!(!saturated);

    let status = unsafe {
        proplab_max_radius(
            curves,
            ProplabModel::Hata,
            900.0,
            50.0,
            3.0,
            ProplabEnvironment::Urban,
            10.0,
            false,
            &mut km,
            &mut saturated,
        )
    };
    assert_eq!(status, ProplabStatus::NoCoverage);

    unsafe { proplab_curves_free(curves) };
    unsafe { proplab_curves_free(ptr::null_mut()) };
}

#[test]
fn curve_parsing_through_ffi() {
    let good = CString::new(
        "amu,1,10\n900,20,30\ngarea,open,29\ngarea,suburban,9\ngarea,urban,0\n",
    )
    .unwrap();
    let mut handle: *mut ProplabCurves = ptr::null_mut();
    let status = unsafe { proplab_curves_parse(good.as_ptr(), &mut handle) };
    assert_eq!(status, ProplabStatus::Ok);
    assert!(!handle.is_null());
    unsafe { proplab_curves_free(handle) };

    let bad = CString::new("amu,1,10\n900,30,20\ngarea,open,29\ngarea,suburban,9\ngarea,urban,0\n")
        .unwrap();
    let status = unsafe { proplab_curves_parse(bad.as_ptr(), &mut handle) };
    assert_eq!(status, ProplabStatus::ParseError);
    assert_eq!(
        unsafe { proplab_curves_parse(ptr::null(), &mut handle) },
        ProplabStatus::NullPointer
    );
}

#[test]
fn status_messages_are_static_strings() {
    for status in [
        ProplabStatus::Ok,
        ProplabStatus::NullPointer,
        ProplabStatus::InvalidArgument,
        ProplabStatus::OutOfRange,
        ProplabStatus::NoCoverage,
        ProplabStatus::ParseError,
    ] {
        let ptr = proplab_status_message(status);
        assert!(!ptr.is_null());
        let msg = unsafe { std::ffi::CStr::from_ptr(ptr) }.to_str().unwrap();
        assert!(!msg.is_empty());
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header_path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/proplab.h");
    let header = std::fs::read_to_string(&header_path).expect("header generated at build time");
    for symbol in [
        "proplab_curves_default",
        "proplab_curves_parse",
        "proplab_curves_free",
        "proplab_free_space_loss",
        "proplab_log_distance_loss",
        "proplab_okumura_loss",
        "proplab_hata_loss",
        "proplab_lee_loss",
        "proplab_max_radius",
        "proplab_status_message",
        "ProplabStatus",
        "ProplabModel",
        "ProplabEnvironment",
        "ProplabCurves",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
