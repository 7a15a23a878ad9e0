//! Line-oriented run configuration: `[section]` headers and
//! `key = value [unit]` pairs, so parameter sets quoted with unit
//! suffixes (`kappa = 800 MHz`) translate one-to-one into config files.
//!
//! Parsing is strict: unknown sections or keys, duplicate keys, missing
//! required keys and wrong units are all rejected with the offending
//! key named. Every quantity is resolved to SI (plain angular s⁻¹ for
//! rates) before any computation sees it.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::constants::wavelength_to_omega;
use crate::error::{Error, Result};
use crate::io::OutputFormat;
use crate::params::{derive_g_opt, derive_g_th, Geometry, PumpDrive, ResonatorParams, Thermal};
use crate::spectra::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombSweep {
    pub mu_max: u32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeSweep {
    pub delta: GridSpec,
    pub phi: GridSpec,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JsiSweep {
    pub delta_s: GridSpec,
    pub delta_i: GridSpec,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdSweep {
    pub delta_p0: GridSpec,
    pub mu_max: u32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct G2Sweep {
    pub x: GridSpec,
    pub delta: GridSpec,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

/// Fully resolved run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub resonator: ResonatorParams,
    pub pump: PumpDrive,
    /// Photon-number → flux conversion rate t [1/s];
    /// defaults to v_g/L_eff when a geometry block is present.
    pub transmission_rate: Option<f64>,
    /// Whether the transmission rate was given explicitly or defaulted.
    pub t_provenance: &'static str,
    pub comb: Option<CombSweep>,
    pub squeeze: Option<SqueezeSweep>,
    pub jsi: Option<JsiSweep>,
    pub threshold: Option<ThresholdSweep>,
    pub g2: Option<G2Sweep>,
    pub output: OutputSpec,
    /// Non-fatal notes recorded during loading (e.g. a directly given
    /// rate overriding a derivable one).
    pub warnings: Vec<String>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<RunConfig> {
        let mut sections = split_sections(text)?;
        let mut warnings = Vec::new();

        let geometry = sections
            .remove("geometry")
            .map(parse_geometry)
            .transpose()?;
        let thermal = sections.remove("thermal").map(parse_thermal).transpose()?;

        let mut res = sections
            .remove("resonator")
            .ok_or_else(|| Error::Config("missing required section [resonator]".into()))?;
        let kappa = res.require_quantity("kappa", Unit::Rate)?;
        let gamma = res.require_quantity("gamma", Unit::Rate)?;
        let eta = res.require_quantity("eta", Unit::Dimensionless)?;
        let d1 = res.take_quantity("d1", Unit::Rate)?.unwrap_or(0.0);
        let d2 = res.require_quantity("d2", Unit::Rate)?;
        let omega_p = match (
            res.take_quantity("omega_p", Unit::Rate)?,
            res.take_quantity("lambda", Unit::Length)?,
        ) {
            (Some(w), None) => w,
            (None, Some(l)) => wavelength_to_omega(l),
            (Some(_), Some(_)) => {
                return Err(Error::Config(
                    "give exactly one of omega_p and lambda in [resonator], not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::Config(
                    "missing pump frequency: set omega_p [rad/s] or lambda [nm] in [resonator]"
                        .into(),
                ))
            }
        };
        let g_opt = match res.take_quantity("g_opt", Unit::Rate)? {
            Some(g) => {
                if geometry.is_some() {
                    warnings.push(
                        "g_opt given directly; ignoring the value derivable from [geometry]"
                            .to_string(),
                    );
                }
                g
            }
            None => derive_g_opt(geometry.as_ref(), omega_p).map_err(|_| {
                Error::Config("g_opt missing and no [geometry] block to derive it from".into())
            })?,
        };
        let g_th = match res.take_quantity("g_th", Unit::Rate)? {
            Some(g) => {
                if thermal.is_some() {
                    warnings.push(
                        "g_th given directly; ignoring the value derivable from [thermal]"
                            .to_string(),
                    );
                }
                g
            }
            None => match &thermal {
                Some(_) => derive_g_th(thermal.as_ref(), geometry.as_ref(), omega_p)?,
                None => 0.0,
            },
        };
        res.finish()?;

        let resonator = ResonatorParams {
            kappa,
            gamma,
            g_opt,
            g_th,
            d1,
            d2,
            eta,
            omega_p,
            geometry,
            thermal,
        }
        .validated()?;

        let mut pump_section = sections
            .remove("pump")
            .ok_or_else(|| Error::Config("missing required section [pump]".into()))?;
        let p_in = pump_section.take_quantity("p_in", Unit::Power)?;
        let p_n = pump_section.take_quantity("p_n", Unit::Dimensionless)?;
        pump_section.finish()?;
        let pump = match (p_in, p_n) {
            (Some(p), None) => PumpDrive::Power(p),
            (None, Some(x)) => PumpDrive::Normalized(x),
            (Some(_), Some(_)) => {
                return Err(Error::Config(
                    "give exactly one of p_in and p_n in [pump], not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::Config(
                    "missing pump drive: set p_in [W] or p_n".into(),
                ))
            }
        };

        let (transmission_rate, t_provenance) = match sections.remove("conversion") {
            Some(mut s) => {
                let t = s.require_quantity("t", Unit::Rate)?;
                s.finish()?;
                (Some(t), "explicit")
            }
            None => match &resonator.geometry {
                Some(geo) => (
                    Some(crate::units::default_transmission_rate(geo)),
                    "default",
                ),
                None => (None, "unset"),
            },
        };

        let comb = sections
            .remove("comb")
            .map(|mut s| -> Result<CombSweep> {
                let mu_max = s.require_integer("mu_max")?;
                s.finish()?;
                Ok(CombSweep { mu_max })
            })
            .transpose()?;

        let squeeze = sections
            .remove("squeeze")
            .map(|mut s| -> Result<SqueezeSweep> {
                let delta = s.require_grid("delta", Unit::Rate)?;
                let phi = s.require_grid("phi", Unit::Angle)?;
                s.finish()?;
                Ok(SqueezeSweep { delta, phi })
            })
            .transpose()?;

        let jsi = sections
            .remove("jsi")
            .map(|mut s| -> Result<JsiSweep> {
                let delta_s = s.require_grid("delta_s", Unit::Rate)?;
                let delta_i = s.require_grid("delta_i", Unit::Rate)?;
                s.finish()?;
                Ok(JsiSweep { delta_s, delta_i })
            })
            .transpose()?;

        let threshold = sections
            .remove("threshold")
            .map(|mut s| -> Result<ThresholdSweep> {
                let delta_p0 = s.require_grid("delta_p0", Unit::Rate)?;
                let mu_max = s.require_integer("mu_max")?;
                s.finish()?;
                Ok(ThresholdSweep { delta_p0, mu_max })
            })
            .transpose()?;

        let g2 = sections
            .remove("g2")
            .map(|mut s| -> Result<G2Sweep> {
                let x = s.require_grid("x", Unit::Dimensionless)?;
                let delta = s.require_grid("delta", Unit::Rate)?;
                s.finish()?;
                Ok(G2Sweep { x, delta })
            })
            .transpose()?;

        let output = sections
            .remove("output")
            .map(|mut s| -> Result<OutputSpec> {
                let path = s.take_string("path")?.map(PathBuf::from);
                let format = s
                    .take_string("format")?
                    .map(|f| f.parse::<OutputFormat>())
                    .transpose()?;
                s.finish()?;
                Ok(OutputSpec { path, format })
            })
            .transpose()?
            .unwrap_or_default();

        if let Some((name, _)) = sections.into_iter().next() {
            return Err(Error::Config(format!("unknown section [{name}]")));
        }

        Ok(RunConfig {
            resonator,
            pump,
            transmission_rate,
            t_provenance,
            comb,
            squeeze,
            jsi,
            threshold,
            g2,
            output,
            warnings,
        })
    }
}

fn parse_geometry(mut s: Section) -> Result<Geometry> {
    let geo = Geometry {
        n_eff: s.require_quantity("n_eff", Unit::Dimensionless)?,
        l_eff: s.require_quantity("l_eff", Unit::Length)?,
        a_eff: s.require_quantity("a_eff", Unit::Area)?,
        v_g: s.require_quantity("v_g", Unit::Velocity)?,
        n2: s.require_quantity("n2", Unit::Kerr)?,
        m: s.take_quantity("m", Unit::Dimensionless)?,
    };
    s.finish()?;
    Ok(geo)
}

fn parse_thermal(mut s: Section) -> Result<Thermal> {
    let th = Thermal {
        gamma_abs: s.require_quantity("gamma_abs", Unit::Rate)?,
        a_th: s.require_quantity("a_th", Unit::InverseTemperature)?,
        k_th: s.require_quantity("k_th", Unit::Conductivity)?,
    };
    s.finish()?;
    Ok(th)
}

// ─── low-level parsing ────────────────────────────────────────────────

#[derive(Debug)]
struct Section {
    name: String,
    entries: BTreeMap<String, String>,
}

impl Section {
    fn take_raw(&mut self, key: &str) -> Option<String> {
        self.entries.remove(key)
    }

    fn take_quantity(&mut self, key: &str, unit: Unit) -> Result<Option<f64>> {
        self.take_raw(key)
            .map(|raw| parse_quantity(&raw, unit, &self.name, key))
            .transpose()
    }

    fn require_quantity(&mut self, key: &str, unit: Unit) -> Result<f64> {
        self.take_quantity(key, unit)?.ok_or_else(|| {
            Error::Config(format!(
                "missing key `{key}` in [{}] (expected a value in {})",
                self.name,
                unit.describe()
            ))
        })
    }

    fn require_integer(&mut self, key: &str) -> Result<u32> {
        let raw = self.take_raw(key).ok_or_else(|| {
            Error::Config(format!("missing integer key `{key}` in [{}]", self.name))
        })?;
        raw.trim().parse::<u32>().map_err(|_| {
            Error::Config(format!(
                "key `{key}` in [{}] must be a non-negative integer, got `{raw}`",
                self.name
            ))
        })
    }

    fn take_string(&mut self, key: &str) -> Result<Option<String>> {
        Ok(self.take_raw(key).map(|s| s.trim().to_string()))
    }

    /// Grid triple `<key>_min`, `<key>_max`, `<key>_count`.
    fn require_grid(&mut self, key: &str, unit: Unit) -> Result<GridSpec> {
        let min = self.require_quantity(&format!("{key}_min"), unit)?;
        let max = self.require_quantity(&format!("{key}_max"), unit)?;
        let count = self.require_integer(&format!("{key}_count"))? as usize;
        GridSpec::new(min, max, count)
    }

    /// Reject any keys left unconsumed.
    fn finish(self) -> Result<()> {
        if let Some((key, _)) = self.entries.into_iter().next() {
            return Err(Error::Config(format!(
                "unknown key `{key}` in [{}]",
                self.name
            )));
        }
        Ok(())
    }
}

fn split_sections(text: &str) -> Result<BTreeMap<String, Section>> {
    let mut sections: BTreeMap<String, Section> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line = match raw_line.split_once('#') {
            Some((head, _)) => head.trim(),
            None => raw_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| {
                    Error::Config(format!("malformed section header at line {}", idx + 1))
                })?
                .trim()
                .to_string();
            if sections.contains_key(&name) {
                return Err(Error::Config(format!("duplicate section [{name}]")));
            }
            sections.insert(
                name.clone(),
                Section {
                    name: name.clone(),
                    entries: BTreeMap::new(),
                },
            );
            current = Some(name);
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!(
                "expected `key = value` at line {}: `{line}`",
                idx + 1
            ))
        })?;
        let section_name = current
            .clone()
            .ok_or_else(|| Error::Config(format!("key outside any section at line {}", idx + 1)))?;
        let section = sections.get_mut(&section_name).unwrap();
        let key = key.trim().to_string();
        if section.entries.contains_key(&key) {
            return Err(Error::Config(format!(
                "duplicate key `{key}` in [{section_name}]"
            )));
        }
        section.entries.insert(key, value.trim().to_string());
    }
    Ok(sections)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Unit {
    Rate,
    Power,
    Length,
    Area,
    Velocity,
    Kerr,
    InverseTemperature,
    Conductivity,
    Angle,
    Dimensionless,
}

impl Unit {
    fn describe(&self) -> &'static str {
        match self {
            Unit::Rate => "angular rate units (Hz, kHz, MHz, GHz, THz or s^-1; plain s^-1 scale)",
            Unit::Power => "power units (W, mW, uW, nW, pW)",
            Unit::Length => "length units (m, mm, um, nm)",
            Unit::Area => "area units (m^2, um^2)",
            Unit::Velocity => "velocity units (m/s)",
            Unit::Kerr => "nonlinear index units (m^2/W)",
            Unit::InverseTemperature => "inverse temperature units (1/K)",
            Unit::Conductivity => "thermal conductivity units (W/(m K))",
            Unit::Angle => "radians (rad)",
            Unit::Dimensionless => "a bare number",
        }
    }

    fn factor(&self, suffix: &str) -> Option<f64> {
        if suffix.is_empty() {
            return Some(1.0);
        }
        match self {
            Unit::Rate => match suffix {
                "Hz" => Some(1.0),
                "kHz" => Some(1e3),
                "MHz" => Some(1e6),
                "GHz" => Some(1e9),
                "THz" => Some(1e12),
                "s^-1" | "1/s" | "rad/s" => Some(1.0),
                _ => None,
            },
            Unit::Power => match suffix {
                "W" => Some(1.0),
                "mW" => Some(1e-3),
                "uW" => Some(1e-6),
                "nW" => Some(1e-9),
                "pW" => Some(1e-12),
                _ => None,
            },
            Unit::Length => match suffix {
                "m" => Some(1.0),
                "mm" => Some(1e-3),
                "um" => Some(1e-6),
                "nm" => Some(1e-9),
                _ => None,
            },
            Unit::Area => match suffix {
                "m^2" => Some(1.0),
                "um^2" => Some(1e-12),
                _ => None,
            },
            Unit::Velocity => (suffix == "m/s").then_some(1.0),
            Unit::Kerr => (suffix == "m^2/W").then_some(1.0),
            Unit::InverseTemperature => matches!(suffix, "1/K" | "K^-1").then_some(1.0),
            Unit::Conductivity => matches!(suffix, "W/(m K)" | "W/(m*K)" | "W/m/K").then_some(1.0),
            Unit::Angle => (suffix == "rad").then_some(1.0),
            Unit::Dimensionless => None,
        }
    }
}

fn parse_quantity(raw: &str, unit: Unit, section: &str, key: &str) -> Result<f64> {
    let raw = raw.trim();
    let (number_str, suffix) = match raw.split_once(char::is_whitespace) {
        Some((n, rest)) => (n, rest.trim()),
        None => (raw, ""),
    };
    let value: f64 = number_str.parse().map_err(|_| {
        Error::Config(format!(
            "key `{key}` in [{section}]: cannot parse `{number_str}` as a number"
        ))
    })?;
    let factor = unit.factor(suffix).ok_or_else(|| {
        Error::Config(format!(
            "key `{key}` in [{section}]: unit `{suffix}` not accepted, expected {}",
            unit.describe()
        ))
    })?;
    Ok(value * factor)
}
