//! Zero-detuning squeezing and anti-squeezing vs normalized pump, with
//! the x → 1 limit 1 − ηκ/Γ.
//!
//! Run: cargo run --release --example squeezing_limits

use qfc::observables::squeeze_limits;
use qfc::params::ResonatorParams;
use qfc::units::to_db;

fn main() -> qfc::Result<()> {
    let params = ResonatorParams {
        kappa: 8e8,
        gamma: 2e8,
        g_opt: 1.5e6,
        g_th: 0.0,
        d1: 0.0,
        d2: 1e7,
        eta: 1.0,
        omega_p: qfc::constants::wavelength_to_omega(1550e-9),
        geometry: None,
        thermal: None,
    }
    .validated()?;

    let escape = params.eta * params.kappa / params.gamma_total();
    println!(
        "ηκ/Γ = {escape}, so V_s saturates at {} ({:.3} dB)\n",
        1.0 - escape,
        to_db(1.0 - escape)
    );
    println!(
        "  {:>8}  {:>10}  {:>10}  {:>12}  {:>12}",
        "x", "V_s", "V_s (dB)", "V_as (dB)", "V_s·V_as"
    );
    for x in [0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99, 0.99895] {
        let (v_s, v_as) = squeeze_limits(&params, x);
        println!(
            "  {:>8}  {:>10.6}  {:>10.4}  {:>12.4}  {:>12.6}",
            x,
            v_s,
            to_db(v_s),
            to_db(v_as),
            v_s * v_as
        );
    }
    println!("\nθ=0 uncertainty product stays above 1; equality needs γ = 0 and η = 1:");
    let lossless = ResonatorParams {
        kappa: 1e9,
        gamma: 0.0,
        ..params
    }
    .validated()?;
    for x in [0.5, 0.9, 0.99] {
        let (v_s, v_as) = squeeze_limits(&lossless, x);
        println!(
            "  lossless x = {x:<5}  V_s·V_as − 1 = {:+.3e}",
            v_s * v_as - 1.0
        );
    }
    Ok(())
}
