//! Tabular dataset builders: per-mode comb spectra, squeezing maps,
//! joint-spectral-intensity grids and threshold maps, with enough
//! metadata to regenerate any dataset bit-identically.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classical::{
    self, first_comb_mode, pump_steady_state, threshold_amplitude_region, BranchStability,
    ModeIndexing,
};
use crate::error::{Error, Result};
use crate::observables::{g2_joint, g2_single, optimal_angle, photon_number, squeeze, variance};
use crate::params::{NormalizedPump, ResonatorParams};
use crate::units::{resonant_input_power, to_db};

/// Inclusive linear grid (min, max, count).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::Config("grid count must be >= 1".into()));
        }
        if !(min.is_finite() && max.is_finite()) || max < min {
            return Err(Error::Config(format!("bad grid bounds [{min}, {max}]")));
        }
        Ok(GridSpec { min, max, count })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| self.min + step * i as f64)
            .collect()
    }
}

/// Ordered column descriptor; units are carried into the CSV header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub unit: String,
}

impl Column {
    fn new(name: &str, unit: &str) -> Self {
        Column {
            name: name.into(),
            unit: unit.into(),
        }
    }
}

/// Everything needed to regenerate a dataset bit-identically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetMeta {
    pub artifact_version: String,
    pub builder: String,
    pub params: ResonatorParams,
    pub sweep: BTreeMap<String, serde_json::Value>,
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl DatasetMeta {
    fn new(builder: &str, params: &ResonatorParams) -> Self {
        DatasetMeta {
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            builder: builder.to_string(),
            params: params.clone(),
            sweep: BTreeMap::new(),
            extra: BTreeMap::new(),
        }
    }
}

/// Tabular result set with a declared column schema. Every row holds
/// exactly schema-many finite entries; absent values are encoded by row
/// omission, never by NaN.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDataset {
    pub schema: Vec<Column>,
    pub rows: Vec<Vec<f64>>,
    pub meta: DatasetMeta,
}

impl SpectrumDataset {
    fn new(schema: Vec<Column>, meta: DatasetMeta) -> Self {
        SpectrumDataset {
            schema,
            rows: Vec::new(),
            meta,
        }
    }

    fn extend_rows<I: IntoIterator<Item = Vec<f64>>>(&mut self, rows: I) -> Result<()> {
        for row in rows {
            if row.len() != self.schema.len() {
                return Err(Error::Config(format!(
                    "row with {} entries against a {}-column schema",
                    row.len(),
                    self.schema.len()
                )));
            }
            if let Some(bad) = row.iter().find(|v| !v.is_finite()) {
                return Err(Error::Config(format!(
                    "non-finite value {bad} in dataset `{}`",
                    self.meta.builder
                )));
            }
            self.rows.push(row);
        }
        Ok(())
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.schema.iter().position(|c| c.name == name)
    }
}

/// Per-mode comb spectrum: photon density, squeezing at the optimal
/// angle and joint correlation for every μ ∈ [−mu_max, mu_max].
///
/// At zero pump the joint correlation is undefined, so the g2 column is
/// dropped and noted in the metadata.
pub fn comb_spectrum(
    params: &ResonatorParams,
    x: NormalizedPump,
    mu_max: u32,
) -> Result<SpectrumDataset> {
    let x = x.get();
    let mut schema = vec![
        Column::new("mu", "1"),
        Column::new("omega_abs", "rad/s"),
        Column::new("delta_eff", "rad/s"),
        Column::new("n", "1"),
        Column::new("v_s", "dB"),
        Column::new("v_as", "dB"),
        Column::new("phi_opt", "rad"),
    ];
    let with_g2 = x > 0.0;
    if with_g2 {
        schema.push(Column::new("g2_si", "1"));
    }

    let mut meta = DatasetMeta::new("comb_spectrum", params);
    meta.sweep.insert("mu_max".into(), json!(mu_max));
    meta.sweep.insert("x".into(), json!(x));
    if let Some(fcm) = first_comb_mode(params, x) {
        meta.extra.insert("mu_root".into(), json!(fcm.mu_real));
    }
    meta.extra.insert("g2_single".into(), json!(g2_single()));
    if !with_g2 {
        meta.extra.insert(
            "note".into(),
            json!("g2_si column omitted: undefined at zero pump"),
        );
    }

    let mu_range: Vec<i32> = (-(mu_max as i32)..=mu_max as i32).collect();
    let rows: Vec<Vec<f64>> = mu_range
        .par_iter()
        .map(|&mu| -> Result<Vec<f64>> {
            let delta = ModeIndexing::at(params, x, mu).delta_eff;
            let sq = squeeze(params, x, delta);
            let mut row = vec![
                mu as f64,
                params.omega_p + params.d1 * mu as f64,
                delta,
                photon_number(params, x, delta),
                sq.v_s_db,
                sq.v_as_db,
                sq.phi_opt,
            ];
            if with_g2 {
                row.push(g2_joint(params, x, delta)?);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    let mut ds = SpectrumDataset::new(schema, meta);
    ds.extend_rows(rows)?;
    Ok(ds)
}

/// Squeezing map V(Δ, φ) in dB over a detuning × angle grid, with the
/// optimal-angle ridge alongside each row.
pub fn squeezing_map(
    params: &ResonatorParams,
    x: NormalizedPump,
    delta_grid: GridSpec,
    phi_grid: GridSpec,
) -> Result<SpectrumDataset> {
    let x = x.get();
    let schema = vec![
        Column::new("delta_eff", "rad/s"),
        Column::new("phi_lo", "rad"),
        Column::new("v", "dB"),
        Column::new("phi_opt", "rad"),
    ];
    let mut meta = DatasetMeta::new("squeezing_map", params);
    meta.sweep.insert("delta_grid".into(), json!(delta_grid));
    meta.sweep.insert("phi_grid".into(), json!(phi_grid));
    meta.sweep.insert("x".into(), json!(x));

    let deltas = delta_grid.values();
    let phis = phi_grid.values();
    let rows: Vec<Vec<f64>> = deltas
        .par_iter()
        .flat_map_iter(|&delta| {
            let ridge = optimal_angle(params, x, delta);
            phis.iter()
                .map(move |&phi| vec![delta, phi, to_db(variance(params, x, delta, phi)), ridge])
        })
        .collect();

    let mut ds = SpectrumDataset::new(schema, meta);
    ds.extend_rows(rows)?;
    Ok(ds)
}

/// Joint spectral intensity over a signal × idler detuning grid, raw
/// and normalized to the grid maximum (recorded in the metadata).
pub fn jsi_map(
    params: &ResonatorParams,
    x: NormalizedPump,
    delta_s_grid: GridSpec,
    delta_i_grid: GridSpec,
) -> Result<SpectrumDataset> {
    let x = x.get();
    let schema = vec![
        Column::new("delta_s", "rad/s"),
        Column::new("delta_i", "rad/s"),
        Column::new("jsi", "1"),
        Column::new("jsi_norm", "1"),
    ];
    let mut meta = DatasetMeta::new("jsi_map", params);
    meta.sweep
        .insert("delta_s_grid".into(), json!(delta_s_grid));
    meta.sweep
        .insert("delta_i_grid".into(), json!(delta_i_grid));
    meta.sweep.insert("x".into(), json!(x));

    let d_s = delta_s_grid.values();
    let d_i = delta_i_grid.values();
    let raw: Vec<(f64, f64, f64)> = d_s
        .par_iter()
        .flat_map_iter(|&ds| {
            d_i.iter()
                .map(move |&di| (ds, di, crate::observables::jsi(params, x, ds, di)))
        })
        .collect();

    let max = raw.iter().map(|r| r.2).fold(0.0_f64, f64::max);
    meta.extra.insert("normalization".into(), json!(max));
    let norm = if max > 0.0 { max } else { 1.0 };

    let mut ds = SpectrumDataset::new(schema, meta);
    ds.extend_rows(raw.into_iter().map(|(s, i, v)| vec![s, i, v, v / norm]))?;
    Ok(ds)
}

/// Series codes used by [`threshold_map`] rows.
pub mod threshold_series {
    pub const REGION_LOWER: f64 = 0.0;
    pub const REGION_UPPER: f64 = 1.0;
    pub const PUMP_STABLE_LOWER: f64 = 2.0;
    pub const PUMP_UNSTABLE_MIDDLE: f64 = 3.0;
    pub const PUMP_STABLE_UPPER: f64 = 4.0;
    pub const THRESHOLD_REFERENCE: f64 = 5.0;
}

/// Threshold map over a bare pump detuning grid: per-μ threshold
/// photon-number regions, the pump bistability branches and the P_th
/// reference line, all on one power axis.
///
/// The photon numbers are converted to the equivalent resonant input
/// power P = u·ħω_p·Γ²/(4κ), which maps the zero-detuning threshold
/// root exactly onto P_th. Rows are omitted where a region or branch
/// does not exist.
pub fn threshold_map(
    params: &ResonatorParams,
    p_in: f64,
    delta_p0_grid: GridSpec,
    mu_max: u32,
) -> Result<SpectrumDataset> {
    if !p_in.is_finite() || p_in < 0.0 {
        return Err(Error::Config(format!(
            "pump power must be >= 0, got {p_in}"
        )));
    }
    let schema = vec![
        Column::new("delta_p0", "rad/s"),
        Column::new("series", "1"),
        Column::new("mu", "1"),
        Column::new("power", "W"),
    ];
    let mut meta = DatasetMeta::new("threshold_map", params);
    meta.sweep
        .insert("delta_p0_grid".into(), json!(delta_p0_grid));
    meta.sweep.insert("mu_max".into(), json!(mu_max));
    meta.sweep.insert("p_in".into(), json!(p_in));
    meta.extra
        .insert("p_th".into(), json!(params.threshold_power()));
    meta.extra.insert(
        "series_legend".into(),
        json!({
            "0": "threshold region lower bound",
            "1": "threshold region upper bound",
            "2": "pump branch stable-lower",
            "3": "pump branch unstable-middle",
            "4": "pump branch stable-upper",
            "5": "threshold power reference",
        }),
    );
    meta.extra.insert(
        "power_conversion".into(),
        json!("equivalent resonant input power u*hbar*omega_p*Gamma^2/(4*kappa)"),
    );

    let p_th = params.threshold_power();
    let deltas = delta_p0_grid.values();
    let rows: Vec<Vec<f64>> = deltas
        .par_iter()
        .flat_map_iter(|&delta_p0| {
            let mut rows = Vec::new();
            for mu in 0..=mu_max as i32 {
                if let Some((lo, hi)) = threshold_amplitude_region(params, delta_p0, mu) {
                    rows.push(vec![
                        delta_p0,
                        threshold_series::REGION_LOWER,
                        mu as f64,
                        resonant_input_power(lo, params),
                    ]);
                    rows.push(vec![
                        delta_p0,
                        threshold_series::REGION_UPPER,
                        mu as f64,
                        resonant_input_power(hi, params),
                    ]);
                }
            }
            let pump = pump_steady_state(params, p_in, delta_p0);
            for root in &pump.roots {
                let series = match root.stability {
                    BranchStability::StableLower => threshold_series::PUMP_STABLE_LOWER,
                    BranchStability::UnstableMiddle => threshold_series::PUMP_UNSTABLE_MIDDLE,
                    BranchStability::StableUpper => threshold_series::PUMP_STABLE_UPPER,
                };
                rows.push(vec![
                    delta_p0,
                    series,
                    0.0,
                    resonant_input_power(root.photon_number, params),
                ]);
            }
            rows.push(vec![
                delta_p0,
                threshold_series::THRESHOLD_REFERENCE,
                0.0,
                p_th,
            ]);
            rows
        })
        .collect();

    let mut ds = SpectrumDataset::new(schema, meta);
    ds.extend_rows(rows)?;
    Ok(ds)
}

/// Joint correlation g²_si over a pump × detuning grid. Grid points at
/// zero pump are omitted (the correlation is undefined there); the
/// single-mode thermal value is recorded in the metadata.
pub fn g2_sweep(
    params: &ResonatorParams,
    x_grid: GridSpec,
    delta_grid: GridSpec,
) -> Result<SpectrumDataset> {
    for x in x_grid.values() {
        NormalizedPump::new(x)?;
    }
    let schema = vec![
        Column::new("x", "1"),
        Column::new("delta_eff", "rad/s"),
        Column::new("g2_si", "1"),
    ];
    let mut meta = DatasetMeta::new("g2_sweep", params);
    meta.sweep.insert("x_grid".into(), json!(x_grid));
    meta.sweep.insert("delta_grid".into(), json!(delta_grid));
    meta.extra.insert("g2_single".into(), json!(g2_single()));
    meta.extra.insert("g2_thermal".into(), json!(2.0));
    meta.extra.insert("g2_coherent".into(), json!(1.0));

    let xs = x_grid.values();
    let deltas = delta_grid.values();
    let rows: Vec<Vec<f64>> = xs
        .par_iter()
        .flat_map_iter(|&x| {
            deltas.iter().filter_map(move |&delta| {
                g2_joint(params, x, delta).ok().map(|g| vec![x, delta, g])
            })
        })
        .collect();

    let mut ds = SpectrumDataset::new(schema, meta);
    ds.extend_rows(rows)?;
    Ok(ds)
}

/// Classical pump bistability scan over a bare detuning grid at fixed
/// input power: all steady-state branches as intracavity photon number.
pub fn pump_scan(
    params: &ResonatorParams,
    p_in: f64,
    delta_p0_grid: GridSpec,
) -> Result<SpectrumDataset> {
    if !p_in.is_finite() || p_in < 0.0 {
        return Err(Error::Config(format!(
            "pump power must be >= 0, got {p_in}"
        )));
    }
    let schema = vec![
        Column::new("delta_p0", "rad/s"),
        Column::new("branch", "1"),
        Column::new("photon_number", "1"),
    ];
    let mut meta = DatasetMeta::new("pump_scan", params);
    meta.sweep
        .insert("delta_p0_grid".into(), json!(delta_p0_grid));
    meta.sweep.insert("p_in".into(), json!(p_in));
    meta.extra.insert(
        "branch_legend".into(),
        json!({"0": "stable-lower", "1": "unstable-middle", "2": "stable-upper"}),
    );

    let rows: Vec<Vec<f64>> = delta_p0_grid
        .values()
        .par_iter()
        .flat_map_iter(|&delta| {
            let st = pump_steady_state(params, p_in, delta);
            st.roots.into_iter().map(move |root| {
                let branch = match root.stability {
                    BranchStability::StableLower => 0.0,
                    BranchStability::UnstableMiddle => 1.0,
                    BranchStability::StableUpper => 2.0,
                };
                vec![delta, branch, root.photon_number]
            })
        })
        .collect();

    let mut ds = SpectrumDataset::new(schema, meta);
    ds.extend_rows(rows)?;
    Ok(ds)
}

/// First comb mode as a dataset helper for the threshold subcommand
/// metadata: real root and integer candidates, if any.
pub fn first_comb_mode_meta(params: &ResonatorParams, x: f64) -> serde_json::Value {
    match classical::first_comb_mode(params, x) {
        Some(f) => json!({"mu_real": f.mu_real, "below": f.mu_below, "above": f.mu_above}),
        None => json!(null),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::effective_detuning;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params(d2: f64) -> ResonatorParams {
        ResonatorParams {
            kappa: 8e8,
            gamma: 2e8,
            g_opt: 1.5e6,
            g_th: 0.0,
            d1: 0.0,
            d2,
            eta: 1.0,
            omega_p: crate::constants::wavelength_to_omega(1550e-9),
            geometry: None,
            thermal: None,
        }
        .validated()
        .unwrap()
    }

    fn x(v: f64) -> NormalizedPump {
        NormalizedPump::new(v).unwrap()
    }

    #[test]
    fn grid_values_inclusive_linear() {
        let g = GridSpec::new(-1.0, 1.0, 5).unwrap();
        assert_eq!(g.values(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(GridSpec::new(2.0, 2.0, 1).unwrap().values(), vec![2.0]);
        assert!(GridSpec::new(1.0, 0.0, 4).is_err());
        assert!(GridSpec::new(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn comb_spectrum_zero_pump() {
        let p = params(1e7);
        let ds = comb_spectrum(&p, x(0.0), 10).unwrap();
        assert_eq!(ds.rows.len(), 21);
        // no g2 column at zero pump
        assert!(ds.column_index("g2_si").is_none());
        let n = ds.column_index("n").unwrap();
        let vs = ds.column_index("v_s").unwrap();
        let vas = ds.column_index("v_as").unwrap();
        for row in &ds.rows {
            assert_eq!(row[n], 0.0);
            assert_eq!(row[vs], 0.0);
            assert_eq!(row[vas], 0.0);
        }
    }

    #[test]
    fn comb_spectrum_anomalous_peaks_at_comb_mode() {
        let p = params(1e7);
        let ds = comb_spectrum(&p, x(0.99), 20).unwrap();
        assert_eq!(ds.rows.len(), 41);
        assert!(ds.column_index("g2_si").is_some());
        let n_col = ds.column_index("n").unwrap();
        let mu_col = ds.column_index("mu").unwrap();
        let best = ds
            .rows
            .iter()
            .max_by(|a, b| a[n_col].total_cmp(&b[n_col]))
            .unwrap();
        assert_eq!(best[mu_col].abs(), 10.0);
        // symmetric in ±μ
        for row in &ds.rows {
            let mu = row[mu_col] as i32;
            let mirror = ds.rows.iter().find(|r| r[mu_col] as i32 == -mu).unwrap();
            assert_eq!(row[n_col], mirror[n_col]);
        }
        assert!(
            (ds.meta.extra["mu_root"].as_f64().unwrap() - (1e9_f64 * 0.99 / 1e7).sqrt()).abs()
                < 1e-12
        );
    }

    #[test]
    fn comb_spectrum_normal_dispersion_peaks_at_center() {
        let p = params(-1e7);
        let ds = comb_spectrum(&p, x(0.9), 20).unwrap();
        let n_col = ds.column_index("n").unwrap();
        let mu_col = ds.column_index("mu").unwrap();
        let best = ds
            .rows
            .iter()
            .max_by(|a, b| a[n_col].total_cmp(&b[n_col]))
            .unwrap();
        assert_eq!(best[mu_col], 0.0);
        assert!(!ds.meta.extra.contains_key("mu_root"));
    }

    #[test]
    fn squeezing_map_structure() {
        let p = params(1e7);
        let delta = GridSpec::new(-2e9, 2e9, 41).unwrap();
        let phi = GridSpec::new(0.0, std::f64::consts::PI, 5).unwrap();
        let ds = squeezing_map(&p, x(0.9), delta, phi).unwrap();
        assert_eq!(ds.rows.len(), 41 * 5);
        let d_col = ds.column_index("delta_eff").unwrap();
        let phi_col = ds.column_index("phi_lo").unwrap();
        let v_col = ds.column_index("v").unwrap();
        let ridge_col = ds.column_index("phi_opt").unwrap();
        // ridge equals the scalar operation pointwise
        for row in &ds.rows {
            assert_eq!(row[ridge_col], optimal_angle(&p, 0.9, row[d_col]));
        }
        // global extrema sit on the Δ=0 slice and match the closed limits
        let (lo, hi) = crate::observables::squeeze_limits(&p, 0.9);
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
        assert!((v_min - to_db(lo)).abs() < 1e-9);
        assert!((v_max - to_db(hi)).abs() < 1e-9);
        // π-periodicity: φ=0 and φ=π rows agree
        for pair in ds.rows.chunks(5) {
            let first = &pair[0];
            let last = &pair[4];
            assert_eq!(first[phi_col], 0.0);
            assert_eq!(last[phi_col], std::f64::consts::PI);
            assert!((first[v_col] - last[v_col]).abs() <= 1e-12 * first[v_col].abs().max(1.0));
        }
    }

    #[test]
    fn jsi_map_normalization_and_symmetry() {
        let p = params(1e7);
        let grid = GridSpec::new(-1e9, 1e9, 21).unwrap();
        let ds99 = jsi_map(&p, x(0.99), grid, grid).unwrap();
        let norm = ds99.meta.extra["normalization"].as_f64().unwrap();
        assert!((norm - 125396342.22).abs() / 125396342.22 < 5e-3);
        let jsi_col = ds99.column_index("jsi").unwrap();
        let norm_col = ds99.column_index("jsi_norm").unwrap();
        let s_col = ds99.column_index("delta_s").unwrap();
        let i_col = ds99.column_index("delta_i").unwrap();
        // transpose symmetry: grid is square so (s, i) ↔ (i, s) rows exist
        let n = 21;
        for a in 0..n {
            for b in 0..n {
                let row = &ds99.rows[a * n + b];
                let swapped = &ds99.rows[b * n + a];
                assert_eq!(row[jsi_col], swapped[jsi_col]);
                assert_eq!(row[s_col], swapped[i_col]);
            }
        }
        // normalized column peaks at exactly 1
        let max_norm = ds99
            .rows
            .iter()
            .map(|r| r[norm_col])
            .fold(0.0_f64, f64::max);
        assert_eq!(max_norm, 1.0);
        // x = 0.95 grid strictly below the x = 0.99 grid pointwise
        let ds95 = jsi_map(&p, x(0.95), grid, grid).unwrap();
        for (a, b) in ds99.rows.iter().zip(&ds95.rows) {
            assert!(b[jsi_col] < a[jsi_col]);
        }
    }

    #[test]
    fn threshold_map_contains_threshold_chain_point() {
        // with the resonant-power conversion, the μ=0 region over the map
        // reaches down to exactly P_th
        let p = ResonatorParams {
            kappa: 3e8,
            gamma: 2e8,
            g_opt: 1.5,
            g_th: 0.0,
            d2: 6e7,
            ..params(6e7)
        }
        .validated()
        .unwrap();
        let (d_min, _) = classical::min_threshold_amplitude(&p, 0);
        let grid = GridSpec::new(d_min, d_min, 1).unwrap();
        let ds = threshold_map(&p, 1e-3, grid, 0).unwrap();
        let series_col = ds.column_index("series").unwrap();
        let power_col = ds.column_index("power").unwrap();
        let lower = ds
            .rows
            .iter()
            .find(|r| r[series_col] == threshold_series::REGION_LOWER)
            .unwrap();
        let p_th = p.threshold_power();
        assert!((lower[power_col] - p_th).abs() / p_th < 1e-12);
    }

    #[test]
    fn threshold_map_regions_shift_with_dispersion() {
        let mk = |d2: f64| {
            ResonatorParams {
                kappa: 3e8,
                gamma: 2e8,
                g_opt: 1.5,
                g_th: 10.0,
                d2,
                ..params(d2)
            }
            .validated()
            .unwrap()
        };
        // grid step must resolve the D₂μ²/2 onset shifts (3e7 per μ step)
        let grid = GridSpec::new(-1e10, 2e9, 1201).unwrap();
        let onset = |ds: &SpectrumDataset, mu: f64| {
            let series_col = ds.column_index("series").unwrap();
            let mu_col = ds.column_index("mu").unwrap();
            let d_col = ds.column_index("delta_p0").unwrap();
            ds.rows
                .iter()
                .filter(|r| r[series_col] == threshold_series::REGION_LOWER && r[mu_col] == mu)
                .map(|r| r[d_col])
                .fold(f64::NEG_INFINITY, f64::max)
        };
        let anomalous = threshold_map(&mk(6e7), 1e-3, grid, 4).unwrap();
        let normal = threshold_map(&mk(-6e7), 1e-3, grid, 4).unwrap();
        for mu in 0..4 {
            assert!(onset(&anomalous, (mu + 1) as f64) < onset(&anomalous, mu as f64));
            assert!(onset(&normal, (mu + 1) as f64) > onset(&normal, mu as f64));
        }
    }

    #[test]
    fn threshold_map_omits_empty_regions() {
        let p = ResonatorParams {
            kappa: 3e8,
            gamma: 2e8,
            g_opt: 1.5,
            g_th: 0.0,
            ..params(6e7)
        }
        .validated()
        .unwrap();
        // detuning range where no region exists for any μ
        let grid = GridSpec::new(0.0, 1e9, 11).unwrap();
        let ds = threshold_map(&p, 1e-3, grid, 3).unwrap();
        let series_col = ds.column_index("series").unwrap();
        assert!(ds
            .rows
            .iter()
            .all(|r| r[series_col] != threshold_series::REGION_LOWER
                && r[series_col] != threshold_series::REGION_UPPER));
        // but pump and reference rows are present at every grid point
        assert!(
            ds.rows
                .iter()
                .filter(|r| r[series_col] == threshold_series::THRESHOLD_REFERENCE)
                .count()
                == 11
        );
    }

    #[test]
    fn g2_sweep_omits_zero_pump_rows() {
        let p = params(1e7);
        let xg = GridSpec::new(0.0, 0.9, 10).unwrap();
        let dg = GridSpec::new(0.0, 4e8, 3).unwrap();
        let ds = g2_sweep(&p, xg, dg).unwrap();
        // 10 x-points × 3 deltas minus the 3 omitted x = 0 rows
        assert_eq!(ds.rows.len(), 27);
        let x_col = ds.column_index("x").unwrap();
        assert!(ds.rows.iter().all(|r| r[x_col] > 0.0));
        // monotonically decreasing toward thermal with growing pump
        let g_col = ds.column_index("g2_si").unwrap();
        let d_col = ds.column_index("delta_eff").unwrap();
        for w in ds.rows.windows(2) {
            if w[0][d_col] == w[1][d_col] && w[0][x_col] < w[1][x_col] {
                assert!(w[1][g_col] < w[0][g_col]);
            }
        }
        // validity gate applies to the grid itself
        let bad = GridSpec::new(0.9, 1.1, 3).unwrap();
        assert!(matches!(g2_sweep(&p, bad, dg), Err(Error::Validity(_))));
    }

    #[test]
    fn datasets_are_deterministic() {
        let p = params(1e7);
        let grid = GridSpec::new(-1e9, 1e9, 15).unwrap();
        let a = jsi_map(&p, x(0.9), grid, grid).unwrap();
        let b = jsi_map(&p, x(0.9), grid, grid).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dataset_rows_reproducible_from_scalar_operations() {
        // spot-check ~1% of rows against the underlying scalar calls
        let p = params(1e7);
        let ds = comb_spectrum(&p, x(0.9), 40).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let mu_col = ds.column_index("mu").unwrap();
        let n_col = ds.column_index("n").unwrap();
        let vs_col = ds.column_index("v_s").unwrap();
        let g2_col = ds.column_index("g2_si").unwrap();
        for _ in 0..ds.rows.len().div_ceil(50) {
            let row = &ds.rows[rng.random_range(0..ds.rows.len())];
            let mu = row[mu_col] as i32;
            let delta = effective_detuning(&p, 0.9, mu);
            assert_eq!(row[n_col], photon_number(&p, 0.9, delta));
            assert_eq!(row[vs_col], squeeze(&p, 0.9, delta).v_s_db);
            assert_eq!(row[g2_col], g2_joint(&p, 0.9, delta).unwrap());
        }
    }
}
