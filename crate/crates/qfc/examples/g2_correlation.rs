//! Joint second-order correlation vs normalized pump: strongly
//! super-thermal at low pump, converging to the thermal value 2 near
//! threshold.
//!
//! Run: cargo run --release --example g2_correlation

use qfc::observables::{g2_joint, g2_single};
use qfc::params::ResonatorParams;

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

    println!("g² of each mode alone (thermal): {}", g2_single());
    println!("g² of coherent light: 1\n");

    let deltas = [0.0, 2e8, 4e8];
    println!(
        "  {:>6}  {:>14}  {:>14}  {:>14}",
        "x", "Δ=0", "Δ=2e8 s⁻¹", "Δ=4e8 s⁻¹"
    );
    for i in 1..=19 {
        let x = 0.05 * i as f64;
        let row: Vec<f64> = deltas
            .iter()
            .map(|&d| g2_joint(&params, x, d).unwrap())
            .collect();
        println!(
            "  {:>6.2}  {:>14.4}  {:>14.4}  {:>14.4}",
            x, row[0], row[1], row[2]
        );
    }
    let near = g2_joint(&params, qfc::MAX_NORMALIZED_PUMP, 0.0).unwrap();
    println!(
        "\nat the validity bound x = {}: g² = {near:.8}",
        qfc::MAX_NORMALIZED_PUMP
    );
    Ok(())
}
