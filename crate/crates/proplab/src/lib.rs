//! Large-scale radio propagation path loss models.
//!
//! Implements the classic empirical and analytic models used for cellular
//! network planning at VHF/UHF: free-space loss, log-distance loss, and the
//! Okumura, Hata and Lee urban models, together with a parameter-sweep engine,
//! cross-model ordering reports and link-budget radius inversion.
//!
//! All loss values are median ("50th percentile") path loss in dB. Every
//! operation is a pure function over immutable values; everything here is
//! safe to share across threads.

pub mod cli;
pub mod error;
pub mod freespace;
pub mod hata;
pub mod lee;
pub mod link;
pub mod okumura;
pub mod sweep;

pub use error::{Error, Param, Result};
pub use freespace::{default_reference_loss, free_space_loss, log_distance_loss, LogDistanceParams};
pub use hata::{hata_loss, mobile_correction};
pub use lee::{alpha_factors, lee_loss, Alpha4Mode, AlphaFactors, LeeParameters, LeeScenario};
pub use link::{Flag, Model, PathLossDb, RadioLink, Strictness};
pub use okumura::{
    bts_height_gain, ms_height_gain, okumura_loss, Environment, OkumuraCurves,
};
pub use sweep::{
    compare_orderings, max_radius, run_sweep, FigurePreset, ModelEvaluator, OrderingReport,
    RadiusOutcome, SweepAxis, SweepResult, SweepSpec,
};
