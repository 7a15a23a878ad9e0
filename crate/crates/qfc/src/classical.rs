//! Classical below-threshold steady states.
//!
//! Pump-mode bistability from the Kerr + thermal cubic, per-mode
//! detunings at injection locking, the first comb mode, and the
//! threshold photon-number regions of the four-wave-mixing process.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::params::ResonatorParams;

/// Stability label of a pump steady-state root, by amplitude ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BranchStability {
    StableLower,
    UnstableMiddle,
    StableUpper,
}

/// One steady-state solution of the pump cubic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PumpRoot {
    /// Intracavity pump photon number |α_p|².
    pub photon_number: f64,
    pub stability: BranchStability,
}

/// Classical intracavity pump solution(s) at one drive point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PumpState {
    /// All real non-negative roots, sorted ascending in photon number.
    pub roots: Vec<PumpRoot>,
    /// Bare pump detuning Δ_p0 = ω_p − ω_{p,T0} [s⁻¹].
    pub delta_p0: f64,
    /// Normalized pump P_in/P_th (not clamped; classical solution only).
    pub x: f64,
}

/// Solve the pump steady state
/// u·[(Δ_p0 + g_tot·u)² + Γ²/4] = κ·P_in/ħω_p for u = |α_p|².
///
/// Solved analytically (Cardano on the nondimensionalized cubic), each
/// root polished with damped Newton steps; roots closer than 1e-9
/// relative are merged. With three roots the middle one is the unstable
/// branch of the Kerr bistability.
pub fn pump_steady_state(params: &ResonatorParams, p_in: f64, delta_p0: f64) -> PumpState {
    let gamma_t = params.gamma_total();
    let g_tot = params.g_total();
    let drive = params.kappa * p_in / params.photon_energy();
    let x = p_in / params.threshold_power();

    let roots = if drive == 0.0 {
        vec![0.0]
    } else if g_tot == 0.0 {
        // linear cavity: Lorentzian response
        vec![drive / (delta_p0 * delta_p0 + gamma_t * gamma_t / 4.0)]
    } else {
        // nondimensionalize: s = u g_tot/Γ, d0 = Δ_p0/Γ, f = drive g_tot/Γ³
        let d0 = delta_p0 / gamma_t;
        let f = drive * g_tot / (gamma_t * gamma_t * gamma_t);
        let s_roots = solve_pump_cubic(d0, f);
        s_roots.into_iter().map(|s| s * gamma_t / g_tot).collect()
    };

    let stability = match roots.len() {
        1 => vec![BranchStability::StableLower],
        2 => vec![BranchStability::StableLower, BranchStability::StableUpper],
        _ => vec![
            BranchStability::StableLower,
            BranchStability::UnstableMiddle,
            BranchStability::StableUpper,
        ],
    };

    PumpState {
        roots: roots
            .into_iter()
            .zip(stability)
            .map(|(photon_number, stability)| PumpRoot {
                photon_number,
                stability,
            })
            .collect(),
        delta_p0,
        x,
    }
}

/// Real non-negative roots of s³ + 2 d0 s² + (d0² + 1/4) s − f = 0,
/// sorted ascending.
fn solve_pump_cubic(d0: f64, f: f64) -> Vec<f64> {
    let b = 2.0 * d0;
    let c = d0 * d0 + 0.25;
    let d = -f;

    // depressed cubic t³ + p t + q, s = t − b/3
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = -b / 3.0;

    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let mut roots: Vec<f64> = if disc > 0.0 {
        let r = disc.sqrt();
        let t = (-q / 2.0 + r).cbrt() + (-q / 2.0 - r).cbrt();
        vec![t + shift]
    } else {
        // three real roots via the trigonometric form
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
            .collect()
    };

    // damped Newton polish on the original cubic
    for s in roots.iter_mut() {
        for _ in 0..50 {
            let fv = ((*s + b) * *s + c) * *s + d;
            let fp = (3.0 * *s + 2.0 * b) * *s + c;
            if fp.abs() < 1e-300 {
                break;
            }
            let mut step = fv / fp;
            if step.abs() > 0.5 * s.abs().max(1.0) {
                step *= 0.5;
            }
            *s -= step;
            if step.abs() <= 1e-15 * s.abs().max(1e-30) {
                break;
            }
        }
    }

    roots.retain(|s| *s >= -1e-12 * f.cbrt().max(1.0));
    for s in roots.iter_mut() {
        *s = s.max(0.0);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs().max(1e-300));
    roots
}

/// Intracavity pump photon number at injection locking,
/// |α_p|² = Γ·x / (2 g_opt) with x = P_in/P_th.
pub fn injection_locked_pump(params: &ResonatorParams, x: f64) -> f64 {
    params.gamma_total() * x / (2.0 * params.g_opt)
}

/// Bare pump detuning at injection locking,
/// Δ_p0 = −g_tot·Γ·x / (2 g_opt).
pub fn pump_detuning(params: &ResonatorParams, x: f64) -> f64 {
    -params.g_total() * params.gamma_total() * x / (2.0 * params.g_opt)
}

/// Detuning of comb mode μ at injection locking,
/// Δ_μ = D₂μ²/2 − Γ(g_th + 2 g_opt)·x / (2 g_opt).
pub fn mode_detuning(params: &ResonatorParams, x: f64, mu: i32) -> f64 {
    let mu2 = (mu as f64) * (mu as f64);
    0.5 * params.d2 * mu2
        - params.gamma_total() * (params.g_th + 2.0 * params.g_opt) * x / (2.0 * params.g_opt)
}

/// Effective pump-referenced detuning of mode μ,
/// Δ_μ,eff = D₂μ²/2 − Γx/2. The thermal nonlinearity cancels in the
/// difference Δ_μ − Δ_p0, so this depends on g_opt only through x.
pub fn effective_detuning(params: &ResonatorParams, x: f64, mu: i32) -> f64 {
    let mu2 = (mu as f64) * (mu as f64);
    0.5 * params.d2 * mu2 - 0.5 * params.gamma_total() * x
}

/// Relative mode number with both detunings at one operating point.
/// Even in μ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeIndexing {
    pub mu: i32,
    /// Δ_μ [s⁻¹].
    pub delta_mu: f64,
    /// Δ_μ,eff = Δ_μ − Δ_p0 [s⁻¹].
    pub delta_eff: f64,
}

impl ModeIndexing {
    pub fn at(params: &ResonatorParams, x: f64, mu: i32) -> Self {
        ModeIndexing {
            mu,
            delta_mu: mode_detuning(params, x, mu),
            delta_eff: effective_detuning(params, x, mu),
        }
    }
}

/// First comb mode to reach zero effective detuning.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstCombMode {
    /// Real-valued root μ = √(Γx/D₂).
    pub mu_real: f64,
    /// Nearest integer mode numbers bracketing the root.
    pub mu_below: i32,
    pub mu_above: i32,
}

/// Mode number where Δ_μ,eff crosses zero, μ = ±√(Γx/D₂).
///
/// `None` for normal dispersion (D₂ ≤ 0): the effective detuning never
/// crosses zero, so no classical comb line can start. Absence is a
/// value, not an error.
pub fn first_comb_mode(params: &ResonatorParams, x: f64) -> Option<FirstCombMode> {
    if params.d2 <= 0.0 {
        return None;
    }
    let mu = (params.gamma_total() * x / params.d2).sqrt();
    Some(FirstCombMode {
        mu_real: mu,
        mu_below: mu.floor() as i32,
        mu_above: mu.ceil() as i32,
    })
}

/// Pump photon-number interval [u_lo, u_hi] in which the four-wave-mixing
/// threshold condition for mode μ can be met at bare pump detuning Δ_p0.
///
/// Derived from det(L) = 0 with the mode detuning carrying its own
/// intensity shift, Δ(u) = Δ_p0 + D₂μ²/2 + (2g_opt + g_th)·u, which
/// makes the condition quadratic in u:
/// (G² − g²)u² + 2AGu + A² + Γ²/4 = 0, A = Δ_p0 + D₂μ²/2, G = 2g_opt + g_th.
///
/// `None` when the discriminant is negative or the branches are not
/// both non-negative. A discriminant within ±1e-12 (relative) of zero
/// is treated as a double root.
pub fn threshold_amplitude_region(
    params: &ResonatorParams,
    delta_p0: f64,
    mu: i32,
) -> Option<(f64, f64)> {
    let g = params.g_opt;
    let gamma_t = params.gamma_total();
    let big_g = 2.0 * params.g_opt + params.g_th;
    let denom = big_g * big_g - g * g;
    let a = delta_p0 + 0.5 * params.d2 * (mu as f64) * (mu as f64);

    let disc = a * a * g * g - denom * gamma_t * gamma_t / 4.0;
    let scale = a * a * g * g + denom * gamma_t * gamma_t / 4.0;
    if disc < -1e-12 * scale {
        return None;
    }
    let sqrt_disc = disc.max(0.0).sqrt();
    let u_lo = (-a * big_g - sqrt_disc) / denom;
    let u_hi = (-a * big_g + sqrt_disc) / denom;
    if u_lo < 0.0 {
        return None;
    }
    Some((u_lo, u_hi))
}

/// Bare detuning and photon number at which the lower branch of the
/// threshold region for μ is smallest. At that point the total mode
/// detuning vanishes and the photon number reduces to the zero-detuning
/// threshold root Γ/(2 g_opt).
pub fn min_threshold_amplitude(params: &ResonatorParams, mu: i32) -> (f64, f64) {
    let big_g = 2.0 * params.g_opt + params.g_th;
    let delta_p0 = -0.5 * params.d2 * (mu as f64) * (mu as f64)
        - big_g * params.gamma_total() / (2.0 * params.g_opt);
    let (u_lo, _) =
        threshold_amplitude_region(params, delta_p0, mu).expect("region exists at its own minimum");
    (delta_p0, u_lo)
}

/// Determinant of the linearized signal/idler drift matrix,
/// det(L) = (iΔ_s − Γ/2)(−iΔ_i − Γ/2) − g_opt²u².
///
/// The real part crosses zero in u at u = √(Δ_sΔ_i + Γ²/4)/g_opt, the
/// four-wave-mixing threshold; the imaginary part is returned for
/// diagnostics.
pub fn fwm_threshold_check(
    params: &ResonatorParams,
    u: f64,
    delta_s: f64,
    delta_i: f64,
) -> Complex64 {
    let half = params.gamma_total() / 2.0;
    let a = Complex64::new(-half, delta_s);
    let d = Complex64::new(-half, -delta_i);
    a * d - Complex64::new(params.g_opt * params.g_opt * u * u, 0.0)
}
