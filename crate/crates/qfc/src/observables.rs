//! Closed-form quantum observables of one signal/idler pair: photon
//! spectral density, pair moment, quadrature variance vs. local
//! oscillator angle, optimal angle, squeezing and anti-squeezing,
//! second-order correlations and the joint spectral intensity.
//!
//! All formulas are line-center values parameterized by the normalized
//! pump x = P_in/P_th and the effective mode detuning Δ. Densities are
//! the dimensionless coefficients of δ(ω−ω′) in the corresponding
//! two-frequency correlators, matching [`crate::input_output`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ResonatorParams;
use crate::units::to_db;

/// Squeezing/anti-squeezing at the optimal local-oscillator angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeResult {
    /// Squeezed variance ratio V_s/V_vac.
    pub v_s: f64,
    /// Anti-squeezed variance ratio V_as/V_vac.
    pub v_as: f64,
    /// Optimal squeezing angle [rad]; anti-squeezing sits at +π/2.
    pub phi_opt: f64,
    pub v_s_db: f64,
    pub v_as_db: f64,
}

/// Photon spectral density of the out-coupled signal (or idler) mode,
/// n(Δ) = 4Γ³κη·x² / (4Δ² + Γ²(1 − x²))².
pub fn photon_number(params: &ResonatorParams, x: f64, delta_eff: f64) -> f64 {
    let gt = params.gamma_total();
    let denom = 4.0 * delta_eff * delta_eff + gt * gt * (1.0 - x * x);
    4.0 * gt * gt * gt * params.kappa * params.eta * x * x / (denom * denom)
}

/// Pair moment ⟨b_out,s b_out,i⟩ of the out-coupled pair,
/// m(Δ) = 2κΓη·x·(Γ²x² − (2Δ + iΓ)²) / (4Δ² + Γ²(1 − x²))².
///
/// |m| is even in Δ and arg(m) odd (pump phase fixed to zero).
pub fn pair_moment(params: &ResonatorParams, x: f64, delta_eff: f64) -> Complex64 {
    let gt = params.gamma_total();
    let denom = 4.0 * delta_eff * delta_eff + gt * gt * (1.0 - x * x);
    let w = Complex64::new(2.0 * delta_eff, gt);
    let num = Complex64::new(gt * gt * x * x, 0.0) - w * w;
    2.0 * params.kappa * gt * params.eta * x * num / (denom * denom)
}

/// Two-mode quadrature variance at local-oscillator angle φ,
/// V(φ) = m·e^{2iφ} + m*·e^{−2iφ} + 2n + 1. π-periodic in φ; equals 1
/// for vacuum.
pub fn variance(params: &ResonatorParams, x: f64, delta_eff: f64, phi_lo: f64) -> f64 {
    let n = photon_number(params, x, delta_eff);
    let m = pair_moment(params, x, delta_eff);
    let rot = Complex64::from_polar(1.0, 2.0 * phi_lo);
    2.0 * (m * rot).re + 2.0 * n + 1.0
}

/// Local-oscillator angle minimizing the two-mode variance,
/// branching on the sign of 4Δ² − Γ² − σ² with σ = Γx:
///
/// φ_opt = −atan(4ΔΓ / (4Δ² − Γ²(1 + x²)))/2, shifted by π/2 on the
/// second branch. At Δ = 0 this is π/2; the anti-squeezing angle is
/// always φ_opt + π/2.
pub fn optimal_angle(params: &ResonatorParams, x: f64, delta_eff: f64) -> f64 {
    let gt = params.gamma_total();
    let y = 4.0 * delta_eff * gt;
    let den = 4.0 * delta_eff * delta_eff - gt * gt * (1.0 + x * x);
    let base = if den == 0.0 {
        // atan(±∞) limit approached from the den ≤ 0 side
        std::f64::consts::FRAC_PI_4.copysign(delta_eff)
    } else {
        -0.5 * (y / den).atan()
    };
    if den > 0.0 {
        base
    } else {
        base + std::f64::consts::FRAC_PI_2
    }
}

/// Squeezing and anti-squeezing at the optimal angle,
/// V_s/as = 1 + 2n ∓ 2|m|.
pub fn squeeze(params: &ResonatorParams, x: f64, delta_eff: f64) -> SqueezeResult {
    let n = photon_number(params, x, delta_eff);
    let m_abs = pair_moment(params, x, delta_eff).norm();
    let v_s = 1.0 + 2.0 * n - 2.0 * m_abs;
    let v_as = 1.0 + 2.0 * n + 2.0 * m_abs;
    SqueezeResult {
        v_s,
        v_as,
        phi_opt: optimal_angle(params, x, delta_eff),
        v_s_db: to_db(v_s),
        v_as_db: to_db(v_as),
    }
}

/// Zero-detuning squeezing limits,
/// V_s,opt = 1 − 4κη·x/(Γ(1 + x)²) and V_as,opt = 1 + 4κη·x/(Γ(1 − x)²).
///
/// V_s,opt → 1 − ηκ/Γ and V_as,opt → ∞ as x → 1.
pub fn squeeze_limits(params: &ResonatorParams, x: f64) -> (f64, f64) {
    let r = 4.0 * params.kappa * params.eta / params.gamma_total();
    let one_plus = (1.0 + x) * (1.0 + x);
    let one_minus = (1.0 - x) * (1.0 - x);
    (1.0 - r * x / one_plus, 1.0 + r * x / one_minus)
}

/// Zero-delay second-order autocorrelation of the signal (or idler)
/// mode alone: exactly 2, independent of all parameters — each mode by
/// itself is thermal.
pub fn g2_single() -> f64 {
    2.0
}

/// Joint zero-delay second-order correlation between signal and idler,
/// g²_si(0) = ([ (4Δ² + Γ²)/Γ² · 1/x ]² + x² − 8Δ²/Γ² + 6)/4.
///
/// Always ≥ 2, approaching the thermal value 2 as x → 1 at Δ = 0. The
/// divergence as x → 0 is physical (a lone signal photon almost surely
/// has its idler partner) and is reported as-is. x = 0 itself is an
/// undefined 0/0 correlation and rejected.
pub fn g2_joint(params: &ResonatorParams, x: f64, delta_eff: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Validity(format!(
            "joint correlation undefined at zero pump (x = {x})"
        )));
    }
    let gt = params.gamma_total();
    let d2g2 = delta_eff * delta_eff / (gt * gt);
    let lead = (4.0 * d2g2 + 1.0) / x;
    Ok(0.25 * (lead * lead + x * x - 8.0 * d2g2 + 6.0))
}

/// Joint spectral intensity for individually detuned signal and idler,
/// Φ = ⟨b_s† b_i† b_s b_i⟩
///   = 4κ²Γ²x²·(Γ⁴x⁴ + 2Γ²x²[3Γ² − 4Δ_iΔ_s] + [4Δ_i² + Γ²][4Δ_s² + Γ²])
///     / (Γ⁴x⁴ − 2Γ²x²[4Δ_iΔ_s + Γ²] + [4Δ_i² + Γ²][4Δ_s² + Γ²])²,
/// scaled by η². Symmetric under Δ_s ↔ Δ_i, maximal at Δ_s = Δ_i = 0,
/// and identical to the Gaussian factorization n_s·n_i + |m_si|².
pub fn jsi(params: &ResonatorParams, x: f64, delta_s: f64, delta_i: f64) -> f64 {
    let gt = params.gamma_total();
    let g2 = gt * gt;
    let g4x4 = g2 * g2 * x * x * x * x;
    let lorentz = (4.0 * delta_i * delta_i + g2) * (4.0 * delta_s * delta_s + g2);
    let cross = delta_i * delta_s;
    let num = g4x4 + 2.0 * g2 * x * x * (3.0 * g2 - 4.0 * cross) + lorentz;
    let den = g4x4 - 2.0 * g2 * x * x * (4.0 * cross + g2) + lorentz;
    let eta2 = params.eta * params.eta;
    eta2 * 4.0 * params.kappa * params.kappa * g2 * x * x * num / (den * den)
}
