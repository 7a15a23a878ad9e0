//! Joint spectral intensity over signal/idler detunings at two pump
//! levels: symmetric detuning survives, anti-symmetric decays fast.
//!
//! Run: cargo run --release --example jsi_map

use qfc::io::{write_dataset, OutputFormat};
use qfc::observables::jsi;
use qfc::params::{NormalizedPump, ResonatorParams};
use qfc::spectra::{jsi_map, GridSpec};

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

    let grid = GridSpec::new(-1e9, 1e9, 81)?;
    for x in [0.95, 0.99] {
        let ds = jsi_map(&params, NormalizedPump::new(x)?, grid, grid)?;
        let max = ds.meta.extra["normalization"].as_f64().unwrap();
        let path = format!("out/jsi_x{}.csv", (x * 100.0) as u32);
        write_dataset(&ds, path.as_ref(), OutputFormat::Csv)?;
        println!("x = {x}: peak JSI = {max:.4e}, wrote {path}");
    }

    let gt = params.gamma_total();
    println!("\nsymmetric vs anti-symmetric detuning at x = 0.99 (values / peak):");
    let peak = jsi(&params, 0.99, 0.0, 0.0);
    println!(
        "  {:>10}  {:>14}  {:>14}",
        "d/Γ", "Φ(d, d)/Φ₀", "Φ(d, −d)/Φ₀"
    );
    for frac in [0.0, 0.1, 0.2, 0.4, 0.8] {
        let d = frac * gt;
        println!(
            "  {:>10}  {:>14.6}  {:>14.6}",
            frac,
            jsi(&params, 0.99, d, d) / peak,
            jsi(&params, 0.99, d, -d) / peak
        );
    }
    Ok(())
}
