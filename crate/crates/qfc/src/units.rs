//! Conversions between intracavity photon numbers, photon fluxes and
//! optical powers, and the dB mapping used by the squeezing outputs.

use crate::constants::HBAR;
use crate::params::{Geometry, ResonatorParams};

/// Convert an intracavity photon number |α|² to a photon flux [1/s]
/// using the transmission rate t: |α_√Hz|² = t·|α|².
pub fn intracavity_to_flux(alpha_sq: f64, t: f64) -> f64 {
    t * alpha_sq
}

/// Convert a photon flux [1/s] to optical power, P = ħω·flux [W].
pub fn flux_to_power(flux: f64, omega: f64) -> f64 {
    HBAR * omega * flux
}

/// Inverse of [`flux_to_power`].
pub fn power_to_flux(power: f64, omega: f64) -> f64 {
    power / (HBAR * omega)
}

/// Default transmission rate t = v_g/L_eff (inverse round-trip time).
///
/// The conversion rate is not pinned down by the model itself; this
/// default is dimensionally the natural cavity-flux rate and every
/// dataset records whether it was defaulted or given explicitly.
pub fn default_transmission_rate(geometry: &Geometry) -> f64 {
    geometry.v_g / geometry.l_eff
}

/// Equivalent input power that sustains intracavity pump photon number
/// `u` at zero pump detuning: P = u·ħω_p·Γ²/(4κ).
///
/// This is the conversion that puts threshold photon-number regions,
/// the pump curve and P_th on one comparable power axis: the
/// zero-detuning threshold root Γ/(2 g_opt) maps exactly onto P_th.
pub fn resonant_input_power(u: f64, params: &ResonatorParams) -> f64 {
    let gt = params.gamma_total();
    u * params.photon_energy() * gt * gt / (4.0 * params.kappa)
}

/// Variance ratio to decibels, 10·log₁₀(v).
pub fn to_db(v: f64) -> f64 {
    10.0 * v.log10()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::wavelength_to_omega;

    #[test]
    fn flux_conversions() {
        assert_eq!(intracavity_to_flux(0.0, 5e11), 0.0);
        let f = intracavity_to_flux(120.0, 5e11);
        assert_eq!(intracavity_to_flux(120.0, 1e12), 2.0 * f);

        let omega = wavelength_to_omega(1550e-9);
        assert_eq!(flux_to_power(0.0, omega), 0.0);
        // one photon per second at 1550 nm
        let p = flux_to_power(1.0, omega);
        assert!((p - 1.2815779723541474e-19).abs() / p < 1e-12);
        // exact inverse round trip
        for flux in [1.0, 3.7e9, 1e15] {
            let back = power_to_flux(flux_to_power(flux, omega), omega);
            assert!((back - flux).abs() / flux < 1e-15);
        }
    }

    #[test]
    fn default_transmission_is_inverse_round_trip() {
        let geo = Geometry {
            n_eff: 1.9,
            l_eff: 400e-6,
            a_eff: 1e-12,
            v_g: 2e8,
            n2: 2.4e-19,
            m: None,
        };
        let t = default_transmission_rate(&geo);
        assert_eq!(t, 5e11);
        assert_eq!(intracavity_to_flux(2.0, t), 1e12);
    }

    #[test]
    fn resonant_power_maps_threshold_root_onto_threshold_power() {
        let p = crate::params::ResonatorParams {
            kappa: 3e8,
            gamma: 2e8,
            g_opt: 1.5,
            g_th: 10.0,
            d1: 0.0,
            d2: 6e7,
            eta: 1.0,
            omega_p: wavelength_to_omega(1550e-9),
            geometry: None,
            thermal: None,
        }
        .validated()
        .unwrap();
        let u_th = p.gamma_total() / (2.0 * p.g_opt);
        let power = resonant_input_power(u_th, &p);
        let p_th = p.threshold_power();
        assert!((power - p_th).abs() / p_th < 1e-14);
    }

    #[test]
    fn db_mapping() {
        assert_eq!(to_db(1.0), 0.0);
        assert!((to_db(0.2) - (-6.9897000433601875)).abs() < 1e-12);
        assert!((to_db(289.0) - 24.60897842756548).abs() < 1e-12);
    }
}
