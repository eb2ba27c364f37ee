//! Finite-dimensional verification machinery: truncated Hankel matrices,
//! dense symmetric eigensolvers, Nystrom discretization of integral kernels,
//! band-filling metrics, and a weighted resolvent probe.
//!
//! The spectral predictions of [`crate::predict`] concern infinite-dimensional
//! operators; this module checks them against computable finite sections.  A
//! truncated `N x N` Hankel matrix `[h_{n+m}]` needs coefficients `h_0, ...,
//! h_{2N-2}`, so every operation states how much coefficient data it requires
//! and fails loudly when short.  Eigenvalues of the sections fill the
//! predicted bands from inside as `N` grows (with spectral pollution
//! controlled by the band-filling metrics), while the Nystrom route
//! discretizes the integral-kernel models directly on an exponentially graded
//! grid.

mod eigen;
mod fill;
mod hankel;
mod jacobi;
mod nystrom;
mod resolvent;

pub use eigen::{eigenvalues_symmetric, symmetric_eigen};
pub use fill::{band_fill_metrics, BandFill, FillReport};
pub use hankel::{block_hankel_interleave_check, hankel_matrix, interlacing_check};
pub use jacobi::eigenvalues_jacobi;
pub use nystrom::{nystrom_grid, nystrom_matrix, nystrom_spectrum, NystromGrid};
pub use resolvent::{weighted_resolvent_probe, WeightFactor, WeightSpec};

use num_complex::Complex64;
use thiserror::Error;

use crate::models::{discrete_model_coefficients, ModelError, ModelPreset, PresetKind};
use crate::symbols::{fourier_coefficients, SymbolError, SymbolSpec};

/// Where a coefficient sequence came from; carried along so that reports can
/// name their sources and so provenance survives into CSV output.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientSource {
    /// Closed-form model coefficients of a preset.
    Preset(String),
    /// Fourier coefficients of a symbol spec.
    Fourier,
    /// Caller-supplied values.
    User,
}

/// A finite run `h_0, ..., h_{M-1}` of Hankel matrix coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelCoefficients {
    values: Vec<f64>,
    source: CoefficientSource,
}

impl HankelCoefficients {
    /// Wrap caller-supplied values.
    pub fn from_values(values: Vec<f64>) -> Self {
        HankelCoefficients { values, source: CoefficientSource::User }
    }

    /// Closed-form coefficients of a discrete model preset.
    pub fn from_preset(preset: ModelPreset, count: usize) -> Result<Self, SectionsError> {
        if preset.kind() != PresetKind::Coefficients {
            return Err(SectionsError::UnsupportedPreset {
                preset: format!("{preset:?}"),
                needed: "a coefficient-sequence preset",
            });
        }
        let mut values = Vec::with_capacity(count);
        for n in 0..count {
            values.push(discrete_model_coefficients(preset, n)?);
        }
        Ok(HankelCoefficients { values, source: CoefficientSource::Preset(format!("{preset:?}")) })
    }

    /// Fourier coefficients of a circle symbol spec.
    pub fn from_spec(spec: &SymbolSpec, count: usize) -> Result<Self, SectionsError> {
        let values = fourier_coefficients(spec, count)?;
        Ok(HankelCoefficients { values, source: CoefficientSource::Fourier })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn source(&self) -> &CoefficientSource {
        &self.source
    }

    /// The coefficient `h_n`, or an error when fewer than `n + 1` values are
    /// available.
    pub fn get(&self, n: usize) -> Result<f64, SectionsError> {
        self.values.get(n).copied().ok_or(SectionsError::InsufficientCoefficients {
            needed: n + 1,
            available: self.values.len(),
        })
    }

    /// Check that at least `needed` coefficients are present.
    pub fn require(&self, needed: usize) -> Result<(), SectionsError> {
        if self.values.len() < needed {
            return Err(SectionsError::InsufficientCoefficients {
                needed,
                available: self.values.len(),
            });
        }
        Ok(())
    }
}

/// Which discretization produced a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    /// Truncated Hankel matrix section.
    Section,
    /// Nystrom discretization of an integral kernel.
    Nystrom,
}

impl SpectrumSource {
    pub fn label(&self) -> &'static str {
        match self {
            SpectrumSource::Section => "section",
            SpectrumSource::Nystrom => "nystrom",
        }
    }
}

/// Eigenvalues of one finite-dimensional discretization, sorted ascending.
#[derive(Debug, Clone)]
pub struct SectionSpectrum {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub source: SpectrumSource,
    pub elapsed_seconds: f64,
}

impl SectionSpectrum {
    /// Largest eigenvalue (the matrices here are never 0-dimensional).
    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.first().expect("non-empty spectrum")
    }

    /// Distance from `x` to the nearest eigenvalue (infinite when empty).
    pub fn distance_to(&self, x: f64) -> f64 {
        self.eigenvalues.iter().fold(f64::INFINITY, |acc, &ev| acc.min((ev - x).abs()))
    }
}

/// Build the `N x N` section of a coefficient sequence and diagonalize it.
pub fn section_spectrum(
    coeffs: &HankelCoefficients,
    n: usize,
) -> Result<SectionSpectrum, SectionsError> {
    let start = std::time::Instant::now();
    let matrix = hankel_matrix(coeffs, n)?;
    let eigenvalues = eigenvalues_symmetric(&matrix)?;
    Ok(SectionSpectrum {
        n,
        eigenvalues,
        source: SpectrumSource::Section,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Errors raised by the finite-dimensional machinery.
#[derive(Debug, Error)]
pub enum SectionsError {
    /// An operation needed more of the coefficient sequence than is present.
    #[error("operation needs {needed} coefficients but only {available} are available")]
    InsufficientCoefficients { needed: usize, available: usize },
    /// The QL iteration exceeded its rotation budget.
    #[error("symmetric eigensolver failed to converge on a {size} x {size} matrix")]
    EigenNonConvergence { size: usize },
    /// The Jacobi sweep limit was exhausted.
    #[error("Jacobi eigensolver failed to converge on a {size} x {size} matrix")]
    JacobiNonConvergence { size: usize },
    /// A preset of the wrong family was supplied.
    #[error("preset {preset} cannot be used here (expected {needed})")]
    UnsupportedPreset { preset: String, needed: &'static str },
    /// A resolvent shift essentially on the section spectrum.
    #[error("shift {z} is within 1e-12 of the section spectrum; the resolvent is singular")]
    SingularShift { z: Complex64 },
    /// An inadmissible weight specification.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    /// Failure propagated from symbol machinery.
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    /// Failure propagated from model evaluation.
    #[error(transparent)]
    Model(#[from] ModelError),
}
