//! Thin CLI over the qfc library: each subcommand loads a config file,
//! runs one dataset builder and writes CSV or JSON.
//!
//! Exit codes: 0 success, 2 config error, 3 validity error (e.g. pump
//! above the linearization bound), 4 numerical singularity.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qfc::config::RunConfig;
use qfc::error::{Error, Result};
use qfc::io::{write_dataset, OutputFormat};
use qfc::spectra::{self, SpectrumDataset};

#[derive(Parser)]
#[command(
    name = "qfc",
    version,
    about = "Quantum frequency comb steady-state datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-mode threshold regions, pump branches and the P_th line.
    Threshold(RunArgs),
    /// Photon number, squeezing and g² per comb mode.
    Comb(RunArgs),
    /// Squeezing map over detuning × local-oscillator angle.
    Squeeze(RunArgs),
    /// Joint second-order correlation over pump × detuning.
    G2(RunArgs),
    /// Joint spectral intensity over signal/idler detunings.
    Jsi(RunArgs),
}

#[derive(clap::Args)]
struct RunArgs {
    /// Run configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Output path (overrides the config's [output] path).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format (overrides the config's [output] format).
    #[arg(long)]
    format: Option<String>,
    /// Worker threads for the sweep (defaults to all cores).
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(path) => {
            println!("wrote {}", path.display());
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("qfc: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<PathBuf> {
    let (name, args) = match &command {
        Command::Threshold(a) => ("threshold", a),
        Command::Comb(a) => ("comb", a),
        Command::Squeeze(a) => ("squeeze", a),
        Command::G2(a) => ("g2", a),
        Command::Jsi(a) => ("jsi", a),
    };

    if let Some(n) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config(format!("cannot size the thread pool: {e}")))?;
    }

    let cfg = RunConfig::load(&args.config)?;
    for w in &cfg.warnings {
        eprintln!("qfc: warning: {w}");
    }

    let mut dataset = build(name, &cfg)?;
    dataset
        .meta
        .extra
        .insert("t_provenance".into(), serde_json::json!(cfg.t_provenance));
    if let Some(t) = cfg.transmission_rate {
        dataset
            .meta
            .extra
            .insert("transmission_rate".into(), serde_json::json!(t));
    }

    let format = match &args.format {
        Some(f) => f.parse::<OutputFormat>()?,
        None => cfg.output.format.unwrap_or(OutputFormat::Csv),
    };
    let path = args
        .out
        .clone()
        .or_else(|| cfg.output.path.clone())
        .unwrap_or_else(|| PathBuf::from(format!("qfc_{name}.{}", format.extension())));

    write_dataset(&dataset, &path, format)?;
    Ok(path)
}

fn build(name: &str, cfg: &RunConfig) -> Result<SpectrumDataset> {
    let params = &cfg.resonator;
    let missing =
        |section: &str| Error::Config(format!("config has no [{section}] section for `{section}`"));
    match name {
        "threshold" => {
            let sweep = cfg.threshold.ok_or_else(|| missing("threshold"))?;
            let p_in = cfg.pump.power_watts(params);
            let mut ds = spectra::threshold_map(params, p_in, sweep.delta_p0, sweep.mu_max)?;
            let x = p_in / params.threshold_power();
            ds.meta.extra.insert(
                "first_comb_mode".into(),
                spectra::first_comb_mode_meta(params, x),
            );
            Ok(ds)
        }
        "comb" => {
            let sweep = cfg.comb.ok_or_else(|| missing("comb"))?;
            let x = cfg.pump.normalized(params)?;
            spectra::comb_spectrum(params, x, sweep.mu_max)
        }
        "squeeze" => {
            let sweep = cfg.squeeze.ok_or_else(|| missing("squeeze"))?;
            let x = cfg.pump.normalized(params)?;
            spectra::squeezing_map(params, x, sweep.delta, sweep.phi)
        }
        "g2" => {
            let sweep = cfg.g2.ok_or_else(|| missing("g2"))?;
            spectra::g2_sweep(params, sweep.x, sweep.delta)
        }
        "jsi" => {
            let sweep = cfg.jsi.ok_or_else(|| missing("jsi"))?;
            let x = cfg.pump.normalized(params)?;
            spectra::jsi_map(params, x, sweep.delta_s, sweep.delta_i)
        }
        _ => unreachable!("subcommands are exhaustive"),
    }
}
