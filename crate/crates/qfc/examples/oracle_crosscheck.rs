//! Closed forms vs the linearized 4×4 matrix engine on random
//! parameter tuples: photon density, pair moment, squeezing and the
//! lossless symplectic property.
//!
//! Run: cargo run --release --example oracle_crosscheck

use num_complex::Complex64;
use qfc::input_output::{build_drift, second_moments, transfer_matrices};
use qfc::linalg;
use qfc::observables::{pair_moment, photon_number, squeeze};
use qfc::params::ResonatorParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> qfc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bce);
    let trials = 5000;
    let mut worst_n: f64 = 0.0;
    let mut worst_m: f64 = 0.0;
    let mut worst_v: f64 = 0.0;
    let mut worst_symplectic: f64 = 0.0;

    for _ in 0..trials {
        let gamma = rng.random_range(0.0..1e10);
        let params = ResonatorParams {
            kappa: rng.random_range(1e7..1e10),
            gamma,
            g_opt: 1.5e6,
            g_th: 0.0,
            d1: 0.0,
            d2: 1e7,
            eta: rng.random_range(0.0..1.0),
            omega_p: qfc::constants::wavelength_to_omega(1550e-9),
            geometry: None,
            thermal: None,
        }
        .validated()?;
        let gt = params.gamma_total();
        let x = rng.random_range(0.0..0.99);
        let delta = rng.random_range(-5.0 * gt..5.0 * gt);

        let drift = build_drift(&params, x, delta, delta);
        let mom = second_moments(&drift, &params, 0.0, params.eta)?;
        let n = photon_number(&params, x, delta);
        let m = pair_moment(&params, x, delta);
        worst_n = worst_n.max((n - mom.n_s).abs() / n.abs().max(1e-300));
        worst_m = worst_m.max((m - mom.m_si).norm() / m.norm().max(1e-300));

        // squeezing assembled from matrix moments vs the closed form
        let sq = squeeze(&params, x, delta);
        let v_matrix = 1.0 + 2.0 * mom.n_s - 2.0 * mom.m_si.norm();
        worst_v = worst_v.max((sq.v_s - v_matrix).abs() / sq.v_as);

        // lossless input-output must be symplectic-unitary
        let lossless = ResonatorParams {
            gamma: 0.0,
            ..params.clone()
        }
        .validated()?;
        let t = transfer_matrices(&build_drift(&lossless, x, delta, delta), &lossless, 0.0)?;
        let mut j = linalg::zeros();
        for (i, v) in [1.0, -1.0, 1.0, -1.0].into_iter().enumerate() {
            j[i][i] = Complex64::new(v, 0.0);
        }
        let mjm = linalg::mul(&t.m_in, &linalg::mul(&j, &linalg::conj_transpose(&t.m_in)));
        worst_symplectic = worst_symplectic.max(linalg::inf_norm(&linalg::sub(&mjm, &j)));
    }

    println!("{trials} random tuples (κ, γ ∈ [1e7, 1e10], x ∈ [0, 0.99), Δ ∈ ±5Γ, η ∈ [0, 1]):");
    println!("  worst photon-density deviation   {worst_n:.3e}  (bound 1e-9)");
    println!("  worst pair-moment deviation      {worst_m:.3e}  (bound 1e-9)");
    println!("  worst squeezing deviation        {worst_v:.3e}  (relative to V_as)");
    println!("  worst symplectic residual (γ=0)  {worst_symplectic:.3e}  (bound 1e-10)");
    assert!(worst_n < 1e-9 && worst_m < 1e-9 && worst_symplectic < 1e-10);
    println!("\nclosed forms and the matrix engine agree.");
    Ok(())
}
