//! Config-driven batch front end: parse a run description, dispatch the
//! requested prediction or verification, and emit CSV artifacts plus a
//! human-readable report.
//!
//! Five modes are dispatched by [`run`]:
//!
//! * `predict` — jump data in, band chart out (`bands.csv`, thresholds in the
//!   report, band multiset printed);
//! * `spectrum` — finite sections (or a Nystrom discretization for kernel
//!   presets) at each requested size, eigenvalues and band-fill metrics out
//!   (`eigenvalues.csv`, `fill.csv`, plus `bands.csv` so the band ids the fill
//!   rows reference are on disk too);
//! * `verify-models` — the model-identity suite with per-check residual rows;
//! * `convert` — circle jump data translated to the line representation with
//!   its model-symbol assignments (`jumps.csv`);
//! * `probe-resolvent` — weighted resolvent norms at a list of shifts
//!   (`probe.csv`).
//!
//! Per-size work items of a spectrum run may execute concurrently (capped by
//! the `HANKEL_SPECTRA_THREADS` environment variable); emission is serialized
//! and ordered, so identical configs produce byte-identical CSV files.  The
//! process exit code is `0` exactly when every enabled check passed.

pub mod checks;
pub mod config;
pub mod emit;

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::models::{ModelError, ModelPreset, PresetKind};
use crate::predict::{
    predict, predict_from_coefficient_model, predict_from_kernel_model, CoefficientModel,
    KernelModel, OscillatoryTerm, PredictError, SpectralPrediction,
};
use crate::sections::{
    band_fill_metrics, nystrom_spectrum, section_spectrum, weighted_resolvent_probe,
    FillReport, HankelCoefficients, SectionSpectrum, SectionsError, SpectrumSource, WeightSpec,
};
use crate::symbols::{
    circle_to_line, normalize_jumps, normalize_line_jumps, Representation, SymbolError,
    SymbolSpec,
};

pub use checks::{verify_models, CheckOutcome, CHECK_GROUPS};
pub use config::{
    load_config, NystromParams, ProbeConfig, RunConfig, RunInput, RunMode, Tolerances,
};
pub use emit::fmt_f64;

/// Errors of the front end: config problems plus everything propagated from
/// the computational layers.
#[derive(Debug, Error)]
pub enum CliError {
    /// The config file could not be read or is not syntactically valid.
    #[error("config parse error: {0}")]
    ConfigParse(String),
    /// The config is well-formed but semantically invalid for the run.
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Sections(#[from] SectionsError),
    #[error(transparent)]
    Predict(#[from] PredictError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// What a run produced: the artifact paths, the printed summary, and the
/// overall verdict that decides the exit code.
#[derive(Debug, Clone)]
pub struct ReportBundle {
    pub files: Vec<PathBuf>,
    pub summary: Vec<String>,
    pub passed: bool,
}

/// Dispatch a validated run configuration.
pub fn run(config: &RunConfig) -> Result<ReportBundle, CliError> {
    std::fs::create_dir_all(&config.output_dir).map_err(|e| {
        CliError::Validation(format!(
            "cannot create output directory {}: {e}",
            config.output_dir.display()
        ))
    })?;
    match config.mode {
        RunMode::Predict => run_predict(config),
        RunMode::Spectrum => run_spectrum(config),
        RunMode::VerifyModels => run_verify_models(config),
        RunMode::Convert => run_convert(config),
        RunMode::ProbeResolvent => run_probe_resolvent(config),
    }
}

// ---------------------------------------------------------------------------
// Shared input plumbing.
// ---------------------------------------------------------------------------

/// The band-chart prediction for any input that has one.
fn prediction_for_input(input: &RunInput) -> Result<SpectralPrediction, CliError> {
    match input {
        RunInput::Symbol(spec) => {
            let nj = match spec.representation() {
                Representation::Circle => normalize_jumps(spec)?,
                Representation::Line => normalize_line_jumps(spec)?,
            };
            Ok(predict(&nj))
        }
        RunInput::Coefficients(model) => Ok(predict_from_coefficient_model(model)?),
        RunInput::Kernel(model) => Ok(predict_from_kernel_model(model)?),
        RunInput::Preset(preset) => prediction_for_preset(*preset),
        RunInput::None => Err(CliError::Validation(
            "this mode needs an input: give a [symbol] or [model] section".to_string(),
        )),
    }
}

/// Presets predict through their defining asymptotic model (symbol presets
/// through their jump tables).
fn prediction_for_preset(preset: ModelPreset) -> Result<SpectralPrediction, CliError> {
    match preset.kind() {
        PresetKind::CircleSymbol => {
            let spec = SymbolSpec::from_preset(preset);
            Ok(predict(&normalize_jumps(&spec)?))
        }
        PresetKind::LineSymbol => {
            let spec = SymbolSpec::from_preset(preset);
            Ok(predict(&normalize_line_jumps(&spec)?))
        }
        PresetKind::Coefficients => {
            let model = match preset {
                ModelPreset::HilbertCoeffs => CoefficientModel {
                    kappa_plus: 1.0,
                    kappa_minus: 0.0,
                    oscillatory: Vec::new(),
                    alpha0: 1.0,
                },
                ModelPreset::AlternatingCoeffs => CoefficientModel {
                    kappa_plus: 0.0,
                    kappa_minus: 1.0,
                    oscillatory: Vec::new(),
                    alpha0: 1.0,
                },
                ModelPreset::OscillatoryCoeffs { theta, phi } => CoefficientModel {
                    kappa_plus: 0.0,
                    kappa_minus: 0.0,
                    oscillatory: vec![OscillatoryTerm { kappa: 1.0, theta, phi }],
                    alpha0: 1.0,
                },
                _ => unreachable!(),
            };
            Ok(predict_from_coefficient_model(&model)?)
        }
        PresetKind::Kernel => {
            let model = match preset {
                ModelPreset::MehlerKernel => KernelModel {
                    h0: 0.0,
                    h_inf: 1.0,
                    oscillatory: Vec::new(),
                    alpha0: 1.0,
                    regular_at_origin: true,
                },
                ModelPreset::OscKernel { b, phi } => KernelModel {
                    h0: 0.0,
                    h_inf: 0.0,
                    oscillatory: vec![crate::predict::KernelOscillatoryTerm { h: 1.0, b, phi }],
                    alpha0: 1.0,
                    regular_at_origin: true,
                },
                ModelPreset::ExpOverTKernel => KernelModel {
                    h0: 1.0,
                    h_inf: 0.0,
                    oscillatory: Vec::new(),
                    alpha0: 1.0,
                    regular_at_origin: false,
                },
                _ => unreachable!(),
            };
            Ok(predict_from_kernel_model(&model)?)
        }
    }
}

/// Matrix-entry sequence for inputs that discretize as finite sections.
fn section_coefficients(input: &RunInput, count: usize) -> Result<HankelCoefficients, CliError> {
    match input {
        RunInput::Symbol(spec) => match spec.representation() {
            Representation::Circle => Ok(HankelCoefficients::from_spec(spec, count)?),
            Representation::Line => Err(CliError::Validation(
                "line-representation symbols have no matrix section; run convert on the circle \
                 data instead, or supply a circle symbol"
                    .to_string(),
            )),
        },
        RunInput::Coefficients(model) => {
            Ok(HankelCoefficients::from_values(coefficient_model_values(model, count)))
        }
        RunInput::Preset(preset) => match preset.kind() {
            PresetKind::Coefficients => Ok(HankelCoefficients::from_preset(*preset, count)?),
            PresetKind::CircleSymbol => {
                Ok(HankelCoefficients::from_spec(&SymbolSpec::from_preset(*preset), count)?)
            }
            PresetKind::LineSymbol => Err(CliError::Validation(
                "line-symbol presets have no matrix section; use the matching kernel preset"
                    .to_string(),
            )),
            PresetKind::Kernel => Err(CliError::Validation(
                "kernel presets are discretized by the Nystrom grid, not by sections".to_string(),
            )),
        },
        RunInput::Kernel(_) => Err(CliError::Validation(
            "asymptotic kernel models have no pointwise kernel; use a kernel preset".to_string(),
        )),
        RunInput::None => Err(CliError::Validation(
            "this mode needs an input: give a [symbol] or [model] section".to_string(),
        )),
    }
}

/// Canonical matrix entries of the asymptotic coefficient model (remainder
/// taken as zero).
fn coefficient_model_values(model: &CoefficientModel, count: usize) -> Vec<f64> {
    (0..count)
        .map(|n| {
            let alternating = if n % 2 == 0 { model.kappa_minus } else { -model.kappa_minus };
            let mut s = model.kappa_plus + alternating;
            for term in &model.oscillatory {
                s += 2.0 * term.kappa * (n as f64 * term.theta - term.phi).sin();
            }
            s / (std::f64::consts::PI * (n as f64 + 1.0))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// predict
// ---------------------------------------------------------------------------

fn run_predict(config: &RunConfig) -> Result<ReportBundle, CliError> {
    let prediction = prediction_for_input(&config.input)?;
    let bands_path = emit::write_bands_csv(&config.output_dir, &prediction)?;

    let mut summary = Vec::new();
    summary.push(format!("input: {}", config.input.source_id()));
    summary.push(format!(
        "essential spectrum: union of {} segment(s)",
        prediction.essential.len()
    ));
    for band in &prediction.ac_bands {
        summary.push(format!("  {}", emit::band_brief(band)));
    }
    for band in &prediction.modulus_bands {
        summary.push(format!("  {}", emit::band_brief(band)));
    }
    let thresholds: Vec<String> = prediction.thresholds.iter().map(|&t| fmt_f64(t)).collect();
    summary.push(format!("thresholds: {}", thresholds.join(" ")));

    let report_path = emit::write_report(&config.output_dir, &summary)?;
    Ok(ReportBundle { files: vec![bands_path, report_path], summary, passed: true })
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

/// How a spectrum run discretizes its input.
enum SpectrumWork {
    Sections(HankelCoefficients),
    Nystrom(ModelPreset),
}

/// Worker count: `HANKEL_SPECTRA_THREADS` if set (minimum 1), otherwise the
/// machine parallelism, never more than the number of work items.
fn worker_count(items: usize) -> usize {
    let cap = std::env::var("HANKEL_SPECTRA_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&k| k >= 1);
    let fallback = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    cap.unwrap_or(fallback).min(items.max(1))
}

/// Run every size through the discretizer, concurrently when allowed.
/// Results come back in size order regardless of scheduling.
fn compute_spectra(
    work: &SpectrumWork,
    sizes: &[usize],
    nystrom: NystromParams,
) -> Vec<Result<SectionSpectrum, SectionsError>> {
    let compute = |n: usize| -> Result<SectionSpectrum, SectionsError> {
        match work {
            SpectrumWork::Sections(coeffs) => section_spectrum(coeffs, n),
            SpectrumWork::Nystrom(preset) => {
                let panels = (n.div_ceil(nystrom.order)).max(1);
                nystrom_spectrum(*preset, nystrom.l, panels, nystrom.order)
            }
        }
    };

    let workers = worker_count(sizes.len());
    if workers <= 1 {
        return sizes.iter().map(|&n| compute(n)).collect();
    }

    let slots: Vec<Mutex<Option<Result<SectionSpectrum, SectionsError>>>> =
        sizes.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= sizes.len() {
                    break;
                }
                let result = compute(sizes[i]);
                *slots[i].lock().expect("result slot poisoned") = Some(result);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().expect("result slot poisoned").expect("work item skipped"))
        .collect()
}

fn run_spectrum(config: &RunConfig) -> Result<ReportBundle, CliError> {
    let source_id = config.input.source_id();
    let prediction = prediction_for_input(&config.input)?;
    let max_n = *config.sizes.last().expect("sizes validated non-empty");

    let work = match &config.input {
        RunInput::Preset(p) if p.kind() == PresetKind::Kernel => SpectrumWork::Nystrom(*p),
        other => SpectrumWork::Sections(section_coefficients(other, 2 * max_n - 1)?),
    };

    let results = compute_spectra(&work, &config.sizes, config.nystrom);

    // Collect successes in order; the first failure (if any) is reported
    // after everything computed so far has been flushed to disk.
    let mut spectra: Vec<SectionSpectrum> = Vec::new();
    let mut failure: Option<(usize, SectionsError)> = None;
    for (&n, result) in config.sizes.iter().zip(results) {
        match result {
            Ok(s) => spectra.push(s),
            Err(e) => {
                failure = Some((n, e));
                break;
            }
        }
    }

    let fills: Vec<(usize, FillReport)> = spectra
        .iter()
        .map(|s| (s.n, band_fill_metrics(s, &prediction.ac_bands, config.tolerances.leak)))
        .collect();

    let mut summary = Vec::new();
    summary.push(format!("input: {source_id}"));
    for band in &prediction.ac_bands {
        summary.push(format!("  {}", emit::band_brief(band)));
    }
    for spectrum in &spectra {
        let fill = &fills.iter().find(|(n, _)| *n == spectrum.n).expect("fill per spectrum").1;
        let worst_fill = fill
            .per_band
            .iter()
            .map(|b| b.fill_distance)
            .fold(0.0_f64, f64::max);
        summary.push(format!(
            "size {} ({}): lambda in [{:.6e}, {:.6e}], leaks {}, worst fill {:.3e}, {:.2} s",
            spectrum.n,
            spectrum.source.label(),
            spectrum.lambda_min(),
            spectrum.lambda_max(),
            fill.leak_count(),
            worst_fill,
            spectrum.elapsed_seconds,
        ));
    }

    let mut passed = true;
    if failure.is_none() && spectra.len() > 1 {
        let slack = config.tolerances.fill_slack;
        for (band_id, band) in prediction.ac_bands.iter().enumerate() {
            let series: Vec<f64> = fills
                .iter()
                .filter_map(|(_, f)| f.fill_distance(band_id))
                .collect();
            let monotone = series.windows(2).all(|w| w[1] <= w[0] + slack);
            if !monotone {
                passed = false;
            }
            summary.push(format!(
                "band {band_id} {} fill monotone: {}",
                emit::band_brief(band),
                if monotone { "PASS" } else { "FAIL" }
            ));
        }
        if spectra.iter().all(|s| s.source == SpectrumSource::Section) {
            let grows = spectra
                .windows(2)
                .all(|w| w[1].lambda_max() >= w[0].lambda_max() - slack);
            if !grows {
                passed = false;
            }
            summary.push(format!(
                "lambda_max non-decreasing: {}",
                if grows { "PASS" } else { "FAIL" }
            ));
        }
    }
    if let Some((n, ref e)) = failure {
        passed = false;
        summary.push(format!("size {n}: FAILED: {e}"));
    }
    summary.push(format!("spectrum: {}", if passed { "PASS" } else { "FAIL" }));

    // Single ordered emitter; partial results are flushed even on failure.
    let mut files = Vec::new();
    files.push(emit::write_bands_csv(&config.output_dir, &prediction)?);
    files.push(emit::write_eigenvalues_csv(&config.output_dir, &source_id, &spectra)?);
    files.push(emit::write_fill_csv(&config.output_dir, &source_id, &fills)?);
    files.push(emit::write_report(&config.output_dir, &summary)?);

    if let Some((_, e)) = failure {
        return Err(e.into());
    }
    Ok(ReportBundle { files, summary, passed })
}

// ---------------------------------------------------------------------------
// verify-models
// ---------------------------------------------------------------------------

fn run_verify_models(config: &RunConfig) -> Result<ReportBundle, CliError> {
    let rows = verify_models(&config.tolerances, config.only.as_deref())?;
    let mut summary: Vec<String> = rows.iter().map(CheckOutcome::line).collect();
    let failures = rows.iter().filter(|r| !r.passed).count();
    let passed = failures == 0;
    summary.push(if passed {
        format!("verify-models: all {} checks passed", rows.len())
    } else {
        format!("verify-models: {failures} of {} checks FAILED", rows.len())
    });
    let report_path = emit::write_report(&config.output_dir, &summary)?;
    Ok(ReportBundle { files: vec![report_path], summary, passed })
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

fn run_convert(config: &RunConfig) -> Result<ReportBundle, CliError> {
    let RunInput::Symbol(spec) = &config.input else {
        return Err(CliError::Validation(
            "convert needs a [symbol] section with circle jump data".to_string(),
        ));
    };
    if spec.representation() != Representation::Circle {
        return Err(CliError::Validation(
            "convert translates circle data to the line; the input is already a line symbol"
                .to_string(),
        ));
    }
    let line_spec = circle_to_line(spec)?;
    let jumps_path = emit::write_jumps_csv(&config.output_dir, line_spec.jumps())?;

    let mut summary = Vec::new();
    summary.push(format!("line jump table: {} row(s)", line_spec.jumps().len()));
    for jump in line_spec.jumps() {
        let loc = match jump.location {
            crate::symbols::JumpLocation::Line(crate::symbols::LinePoint::Finite(nu)) => {
                format!("{nu:.6}")
            }
            crate::symbols::JumpLocation::Line(crate::symbols::LinePoint::Infinity) => {
                "inf".to_string()
            }
            crate::symbols::JumpLocation::Circle(_) => unreachable!("line table"),
        };
        summary.push(format!(
            "  jump at {loc}: ({:.6}, {:.6})",
            jump.value.re, jump.value.im
        ));
    }

    // Model-symbol assignments carried by the normalized amplitudes.
    let nj = normalize_line_jumps(&line_spec)?;
    if nj.kappa_plus != 0.0 {
        summary.push(format!("model psi0: coefficient {}", fmt_f64(nj.kappa_plus)));
    }
    if nj.kappa_minus != 0.0 {
        summary.push(format!("model psi-inf: coefficient {}", fmt_f64(nj.kappa_minus)));
    }
    for pair in &nj.complex_pairs {
        let b = 0.5 / (0.5 * pair.theta).tan();
        let phi = std::f64::consts::PI - pair.theta - pair.psi;
        summary.push(format!(
            "model psi-phi-b: b {} phi {} coefficient {}",
            fmt_f64(b),
            fmt_f64(phi),
            fmt_f64(pair.kappa)
        ));
    }

    let report_path = emit::write_report(&config.output_dir, &summary)?;
    Ok(ReportBundle { files: vec![jumps_path, report_path], summary, passed: true })
}

// ---------------------------------------------------------------------------
// probe-resolvent
// ---------------------------------------------------------------------------

fn run_probe_resolvent(config: &RunConfig) -> Result<ReportBundle, CliError> {
    let probe = config.probe.as_ref().expect("probe config validated present");
    let n = config.sizes[0];
    let coeffs = section_coefficients(&config.input, 2 * n - 1)?;
    let weights = if probe.weights.is_empty() {
        WeightSpec::identity()
    } else {
        WeightSpec::new(probe.weights.clone())
    };

    let values = weighted_resolvent_probe(&coeffs, &weights, &probe.shifts, n)?;
    let probe_path = emit::write_probe_csv(&config.output_dir, &probe.shifts, &values)?;

    let mut summary = Vec::new();
    summary.push(format!(
        "input: {}, section size {n}, weight factors {}",
        config.input.source_id(),
        probe.weights.len()
    ));
    for (z, v) in probe.shifts.iter().zip(&values) {
        summary.push(format!("z = ({:.6}, {:.6}): probe {}", z.re, z.im, fmt_f64(*v)));
    }
    let report_path = emit::write_report(&config.output_dir, &summary)?;
    Ok(ReportBundle { files: vec![probe_path, report_path], summary, passed: true })
}
