//! Physical constants (CODATA 2018).

use std::f64::consts::PI;

/// Reduced Planck constant [J·s], h / 2π with h exact.
///
/// To ten significant digits: 1.054571817e-34 J·s.
pub const HBAR: f64 = 6.62607015e-34 / (2.0 * PI);

/// Speed of light in vacuum [m/s] (exact).
pub const SPEED_OF_LIGHT: f64 = 2.99792458e8;

/// Angular frequency [rad/s] of light at vacuum wavelength `lambda` [m].
pub fn wavelength_to_omega(lambda: f64) -> f64 {
    2.0 * PI * SPEED_OF_LIGHT / lambda
}
