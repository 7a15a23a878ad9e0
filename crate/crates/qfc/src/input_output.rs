//! Linearized input-output engine for one signal/idler pair.
//!
//! Builds the 4×4 drift matrix of the out-coupled field equations on
//! the doubled basis (b_s, b_s†, b_i, b_i†) and derives all second
//! moments of the out-coupled pair numerically from vacuum-input
//! statistics. This is the numerical cross-check for every closed-form
//! observable in [`crate::observables`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat4, ONE};
use crate::params::ResonatorParams;

/// Drift matrix of the linearized signal/idler system.
///
/// Sparsity pattern: diagonal ∓iΔ − γ/2, anti-diagonal pump couplings
/// σ/2 and σ*/2, all other entries zero. The pump parameter is
/// σ = 2 g_opt α_p² = Γ·x, taken real-positive (pump phase zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftMatrix {
    pub k: CMat4,
    pub sigma: Complex64,
    pub delta_s_eff: f64,
    pub delta_i_eff: f64,
}

/// Build the drift matrix at normalized pump `x` and per-mode effective
/// detunings.
pub fn build_drift(
    params: &ResonatorParams,
    x: f64,
    delta_s_eff: f64,
    delta_i_eff: f64,
) -> DriftMatrix {
    let sigma = Complex64::new(params.gamma_total() * x, 0.0);
    let half_gamma = params.gamma / 2.0;
    let i = Complex64::i();

    let mut k = linalg::zeros();
    k[0][0] = -i * delta_s_eff - half_gamma;
    k[1][1] = i * delta_s_eff - half_gamma;
    k[2][2] = -i * delta_i_eff - half_gamma;
    k[3][3] = i * delta_i_eff - half_gamma;
    k[0][3] = sigma / 2.0;
    k[1][2] = sigma.conj() / 2.0;
    k[2][1] = sigma / 2.0;
    k[3][0] = sigma.conj() / 2.0;

    DriftMatrix {
        k,
        sigma,
        delta_s_eff,
        delta_i_eff,
    }
}

/// Transfer matrices mapping input and loss-channel operators to the
/// out-coupled field: B_out = M_in·B_in + M_loss·B_γ.
#[derive(Debug, Clone, Copy)]
pub struct TransferMatrices {
    pub m_in: CMat4,
    pub m_loss: CMat4,
    /// ∞-norm condition estimate of the inverted cavity response;
    /// values above 1e12 flag a near-singular parameter point.
    pub condition: f64,
}

impl TransferMatrices {
    pub fn is_ill_conditioned(&self) -> bool {
        self.condition > 1e12
    }
}

/// Frequency matrix for sideband offset ω from each comb-line center:
/// Ω = diag(iω, −iω, iω, −iω). All closed forms are line-center values
/// (ω = 0); ω ≠ 0 is exposed for spectrum exploration only.
fn omega_matrix(omega: f64) -> CMat4 {
    let i = Complex64::i();
    let mut m = linalg::zeros();
    m[0][0] = i * omega;
    m[1][1] = -i * omega;
    m[2][2] = i * omega;
    m[3][3] = -i * omega;
    m
}

/// Assemble M_in = −(Ω−K−κ/2)(Ω−K+κ/2)⁻¹ and the matching loss-channel
/// matrix so that B_out = M_in·B_in + M_loss·B_γ.
///
/// At γ = 0 the input map is symplectic-unitary on the doubled basis,
/// M_in·J·M_in† = J with J = diag(1, −1, 1, −1): lossless input-output
/// is canonical.
pub fn transfer_matrices(
    drift: &DriftMatrix,
    params: &ResonatorParams,
    omega: f64,
) -> Result<TransferMatrices> {
    let half_kappa = linalg::scale(&linalg::identity(), Complex64::new(params.kappa / 2.0, 0.0));
    let x_mat = linalg::sub(&omega_matrix(omega), &drift.k);
    let plus = linalg::add(&x_mat, &half_kappa);
    let minus = linalg::sub(&x_mat, &half_kappa);

    let (plus_inv, condition) = linalg::invert(&plus).ok_or_else(|| {
        Error::Singular(format!(
            "cavity response matrix singular at sigma={}, delta_s={}, delta_i={}, omega={omega}",
            drift.sigma, drift.delta_s_eff, drift.delta_i_eff
        ))
    })?;

    let m = linalg::mul(&minus, &plus_inv);
    let m_in = linalg::scale(&m, -ONE);
    // −(√γ/√κ)(M − 1) = √(γκ)·(Ω−K+κ/2)⁻¹
    let loss_scale = Complex64::new(-(params.gamma / params.kappa).sqrt(), 0.0);
    let m_loss = linalg::scale(&linalg::sub(&m, &linalg::identity()), loss_scale);

    Ok(TransferMatrices {
        m_in,
        m_loss,
        condition,
    })
}

/// Second moments of the out-coupled signal/idler pair.
///
/// `n_s`, `n_i` and `m_si` are line-center spectral densities: the
/// dimensionless coefficients of δ(ω−ω′) in ⟨b† b⟩ and ⟨b_s b_i⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumMoments {
    pub n_s: f64,
    pub n_i: f64,
    pub m_si: Complex64,
}

impl QuantumMoments {
    /// Gaussian physicality: the two-mode uncertainty product
    /// (1+2n_s)(1+2n_i) − 4|m|² must stay non-negative (V_s·V_as ≥ 1
    /// in the symmetric case).
    pub fn uncertainty_product(&self) -> f64 {
        (1.0 + 2.0 * self.n_s) * (1.0 + 2.0 * self.n_i) - 4.0 * self.m_si.norm_sqr()
    }
}

/// Second moments from vacuum-input statistics sandwiched through the
/// transfer matrices, with collection efficiency applied as n → ηn,
/// m → ηm (the beam-splitter vacuum admixture adds no moments).
pub fn second_moments(
    drift: &DriftMatrix,
    params: &ResonatorParams,
    omega: f64,
    eta: f64,
) -> Result<QuantumMoments> {
    let t = transfer_matrices(drift, params, omega)?;
    Ok(moments_from_transfer(&t, eta))
}

/// Contract the transfer matrices against the vacuum two-point function
/// ⟨V_j V_k⟩: only ⟨b b†⟩ pairs survive, entries (0,1) and (2,3).
fn moments_from_transfer(t: &TransferMatrices, eta: f64) -> QuantumMoments {
    let mut s = linalg::zeros();
    for m in [&t.m_in, &t.m_loss] {
        for a in 0..4 {
            for b in 0..4 {
                // Σ_jk M[a][j] M[b][k] ⟨V_j V_k⟩ with ⟨V_0 V_1⟩ = ⟨V_2 V_3⟩ = 1
                s[a][b] += m[a][0] * m[b][1] + m[a][2] * m[b][3];
            }
        }
    }
    // basis order: 0 b_s, 1 b_s†, 2 b_i, 3 b_i†
    let n_s = s[1][0];
    let n_i = s[3][2];
    let m_si = s[0][2];

    debug_assert!(n_s.im.abs() <= 1e-10 * n_s.re.abs().max(1e-30));
    debug_assert!(n_i.im.abs() <= 1e-10 * n_i.re.abs().max(1e-30));

    QuantumMoments {
        n_s: eta * n_s.re,
        n_i: eta * n_i.re,
        m_si: eta * m_si,
    }
}
