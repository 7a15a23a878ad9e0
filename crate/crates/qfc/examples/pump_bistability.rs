//! Classical pump steady states over a detuning scan: the Kerr+thermal
//! cubic develops a bistable window above the knee.
//!
//! Run: cargo run --release --example pump_bistability

use qfc::classical::pump_steady_state;
use qfc::io::{write_dataset, OutputFormat};
use qfc::params::ResonatorParams;
use qfc::spectra::{pump_scan, GridSpec};

fn main() -> qfc::Result<()> {
    let params = ResonatorParams {
        kappa: 3e8,
        gamma: 2e8,
        g_opt: 1.5,
        g_th: 10.0,
        d1: 0.0,
        d2: 6e7,
        eta: 1.0,
        omega_p: qfc::constants::wavelength_to_omega(1550e-9),
        geometry: None,
        thermal: None,
    }
    .validated()?;
    let p_th = params.threshold_power();
    println!("threshold power P_th = {:.4} mW", p_th * 1e3);

    let p_in = 3.0 * p_th;
    let ds = pump_scan(&params, p_in, GridSpec::new(-8e9, 2e9, 401)?)?;
    write_dataset(&ds, "out/pump_scan.csv".as_ref(), OutputFormat::Csv)?;
    println!(
        "wrote out/pump_scan.csv ({} rows at P_in = 3 P_th)\n",
        ds.rows.len()
    );

    // locate the bistable window
    let mut window = (f64::INFINITY, f64::NEG_INFINITY);
    for delta in GridSpec::new(-8e9, 2e9, 2001)?.values() {
        if pump_steady_state(&params, p_in, delta).roots.len() == 3 {
            window.0 = window.0.min(delta);
            window.1 = window.1.max(delta);
        }
    }
    println!(
        "bistable window: Δ_p0 ∈ [{:.4e}, {:.4e}] s⁻¹",
        window.0, window.1
    );

    println!("\nbranches at a few detunings:");
    println!("  {:>12}  {:>30}", "Δ_p0 (s⁻¹)", "|α_p|² roots (photons)");
    for delta in [-6e9, -4e9, -2.5e9, -1e9, 0.0] {
        let st = pump_steady_state(&params, p_in, delta);
        let roots: Vec<String> = st
            .roots
            .iter()
            .map(|r| format!("{:.4e}", r.photon_number))
            .collect();
        println!("  {:>12.2e}  {:>30}", delta, roots.join(", "));
    }
    Ok(())
}
