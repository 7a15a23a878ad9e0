//! Below-threshold steady-state simulator for quantum frequency combs
//! generated by four-wave mixing in Kerr microring resonators.
//!
//! The crate computes, per comb mode μ, the classical operating point
//! (pump bistability, detunings, threshold surfaces) and the quantum
//! observables of the out-coupled signal/idler pair: photon spectral
//! density, two-mode squeezing versus local-oscillator angle, joint
//! second-order correlation and joint spectral intensity. Every closed
//! form is cross-validated by an independent linearized 4×4
//! input-output matrix engine driven by vacuum statistics.
//!
//! ## Layout
//!
//! - [`params`] — resonator rates, dispersion, efficiency, pump drive,
//!   derived nonlinearities and threshold power
//! - [`classical`] — pump cubic steady states, per-mode detunings,
//!   first comb mode, threshold regions
//! - [`input_output`] — the 4×4 linearized matrix engine (numerical
//!   oracle for everything below)
//! - [`observables`] — closed-form photon density, squeezing, g² and
//!   joint spectral intensity
//! - [`spectra`] — dataset builders sweeping μ, angle, detuning and
//!   pump power
//! - [`units`], [`config`], [`io`] — conversions, config loading and
//!   CSV/JSON emission
//!
//! ## Examples
//!
//! One runnable example per capability (`cargo run --release --example <name>`):
//!
//! - **`comb_spectrum`** — photon number and squeezing per comb mode,
//!   anomalous vs. normal dispersion
//! - **`squeezing_map`** — variance over detuning × LO angle with the
//!   optimal-angle ridge
//! - **`squeezing_limits`** — zero-detuning squeezing limits vs. pump
//! - **`jsi_map`** — joint spectral intensity over signal/idler detunings
//! - **`g2_correlation`** — joint second-order correlation vs. pump
//! - **`pump_bistability`** — classical pump steady-state branches
//! - **`threshold_map`** — per-mode threshold regions on a power axis
//! - **`oracle_crosscheck`** — closed forms vs. the matrix engine on
//!   random parameter tuples
//!
//! The `qfc` binary drives the same builders from config files:
//! `qfc comb --config configs/comb_anomalous.conf`.

pub mod classical;
pub mod config;
pub mod constants;
pub mod error;
pub mod input_output;
pub mod io;
pub mod linalg;
pub mod observables;
pub mod params;
pub mod spectra;
pub mod units;

pub use error::{Error, Result};
pub use params::{NormalizedPump, PumpDrive, ResonatorParams, MAX_NORMALIZED_PUMP};
