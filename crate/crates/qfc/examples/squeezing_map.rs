//! Two-mode quadrature variance over effective detuning and local
//! oscillator angle, with the optimal-angle ridge.
//!
//! Run: cargo run --release --example squeezing_map

use qfc::io::{write_dataset, OutputFormat};
use qfc::observables::{optimal_angle, squeeze};
use qfc::params::{NormalizedPump, ResonatorParams};
use qfc::spectra::{squeezing_map, GridSpec};

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
    let x = 0.9;

    let ds = squeezing_map(
        &params,
        NormalizedPump::new(x)?,
        GridSpec::new(-2e9, 2e9, 81)?,
        GridSpec::new(0.0, std::f64::consts::PI, 61)?,
    )?;
    write_dataset(&ds, "out/squeezing_map.csv".as_ref(), OutputFormat::Csv)?;
    println!("wrote out/squeezing_map.csv ({} rows)", ds.rows.len());

    let v_col = ds.column_index("v").unwrap();
    let v_min = ds
        .rows
        .iter()
        .map(|r| r[v_col])
        .fold(f64::INFINITY, f64::min);
    let v_max = ds
        .rows
        .iter()
        .map(|r| r[v_col])
        .fold(f64::NEG_INFINITY, f64::max);
    println!("map extremes: {v_min:.2} dB squeezing, {v_max:.2} dB anti-squeezing\n");

    println!("optimal angle ridge at x = {x}:");
    println!(
        "  {:>12}  {:>10}  {:>9}  {:>9}",
        "Δ_eff (s⁻¹)", "φ_opt (rad)", "V_s (dB)", "V_as (dB)"
    );
    for i in -5..=5 {
        let delta = 4e8 * i as f64;
        let sq = squeeze(&params, x, delta);
        println!(
            "  {:>12.2e}  {:>10.4}  {:>9.3}  {:>9.3}",
            delta,
            optimal_angle(&params, x, delta),
            sq.v_s_db,
            sq.v_as_db
        );
    }
    Ok(())
}
