//! Spectral predictions from normalized jump data.
//!
//! For a self-adjoint Hankel operator with piecewise-continuous symbol the
//! essential spectrum, the absolutely continuous bands (with multiplicity),
//! the spectrum of the operator modulus, and the threshold set are all
//! determined by the normalized jump amplitudes alone:
//!
//! * `kappa(+1) = 2 i kappa_+` contributes the band `[0, kappa_+]`
//!   (or `[kappa_+, 0]` when negative) with multiplicity one;
//! * `kappa(-1) = 2 i kappa_-` contributes `[0, kappa_-]` likewise;
//! * each conjugate pair `kappa(a_j) = 2 kappa_j e^{i psi_j}` at
//!   `a_j = e^{i theta_j}` contributes the symmetric band
//!   `[-kappa_j, kappa_j]` with multiplicity one.
//!
//! The essential spectrum is the union of the corresponding segments; the
//! modulus spectrum collects one band `[0, |kappa(a)|/2]` per jump *point*
//! (so a conjugate pair contributes twice); the thresholds are `0` together
//! with all band endpoints.  Bands are kept as a multiset — coinciding bands
//! from different jumps stay separate entries, which is exactly how the
//! multiplicity of the absolutely continuous spectrum adds up.
//!
//! Two asymptotic input models are accepted besides explicit symbols: a
//! coefficient model for matrix entries `h_n ~ (pi (n+1))^{-1} [kappa_+ +
//! (-1)^n kappa_- + sum_j 2 kappa_j sin(n theta_j - phi_j)]` and a kernel
//! model for integral kernels `h(t) ~ (pi t)^{-1}` near zero and infinity
//! with oscillatory terms `2 h_j sin(b_j t - phi_j) / (pi t)` at infinity.
//! Both translate into the same normalized jump data.

use num_complex::Complex64;
use thiserror::Error;

use crate::symbols::{JumpPair, NormalizedJumps};

/// Tolerance used when deduplicating threshold values.
const THRESHOLD_DEDUP_TOL: f64 = 1e-12;
/// Oscillatory frequencies closer than this collide.
const FREQUENCY_TOL: f64 = 1e-9;

/// A straight segment in the complex plane with unordered endpoints.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub a: Complex64,
    pub b: Complex64,
}

impl Segment {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Segment { a, b }
    }

    pub fn real(lo: f64, hi: f64) -> Self {
        Segment { a: Complex64::new(lo, 0.0), b: Complex64::new(hi, 0.0) }
    }

    /// Endpoint-set equality up to `tol`, ignoring orientation.
    pub fn approx_eq(&self, other: &Segment, tol: f64) -> bool {
        let direct = (self.a - other.a).norm() <= tol && (self.b - other.b).norm() <= tol;
        let swapped = (self.a - other.b).norm() <= tol && (self.b - other.a).norm() <= tol;
        direct || swapped
    }

    /// Degenerate segments have coinciding endpoints.
    pub fn is_degenerate(&self) -> bool {
        (self.a - self.b).norm() == 0.0
    }
}

/// Which spectral object a band belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandKind {
    /// Band of the absolutely continuous spectrum of the operator itself.
    AbsolutelyContinuous,
    /// Band of the spectrum of the operator modulus.
    Modulus,
}

impl BandKind {
    /// Short label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            BandKind::AbsolutelyContinuous => "ac",
            BandKind::Modulus => "modulus",
        }
    }
}

/// A closed real interval `[lo, hi]` carrying a multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
    pub multiplicity: usize,
    pub kind: BandKind,
}

impl Band {
    pub fn new(lo: f64, hi: f64, multiplicity: usize, kind: BandKind) -> Self {
        assert!(lo <= hi, "band endpoints out of order: [{lo}, {hi}]");
        Band { lo, hi, multiplicity, kind }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// The full jump-data prediction for one operator.
#[derive(Debug, Clone)]
pub struct SpectralPrediction {
    pub essential: Vec<Segment>,
    pub ac_bands: Vec<Band>,
    pub modulus_bands: Vec<Band>,
    pub thresholds: Vec<f64>,
}

/// Essential spectrum as a union of segments, one per present jump group.
///
/// Every segment contains `0`; with no jumps at all the essential spectrum
/// degenerates to the single point `{0}`.
pub fn essential_spectrum(nj: &NormalizedJumps) -> Vec<Segment> {
    let mut segments = Vec::new();
    if nj.kappa_plus != 0.0 {
        segments.push(Segment::real(0.0, nj.kappa_plus));
    }
    if nj.kappa_minus != 0.0 {
        segments.push(Segment::real(0.0, nj.kappa_minus));
    }
    for pair in &nj.complex_pairs {
        // w = (2i)^{-1} sqrt(kappa(a) kappa(conj a)) = kappa_j for validated
        // (self-adjoint) data.
        segments.push(Segment::real(-pair.kappa, pair.kappa));
    }
    if segments.is_empty() {
        segments.push(Segment::real(0.0, 0.0));
    }
    segments
}

/// Bands of the absolutely continuous spectrum, multiplicity one each, kept
/// as a multiset in deterministic order (`+1` group, `-1` group, pairs by
/// increasing `theta`).
pub fn ac_spectrum(nj: &NormalizedJumps) -> Vec<Band> {
    let mut bands = Vec::new();
    for kappa in [nj.kappa_plus, nj.kappa_minus] {
        if kappa != 0.0 {
            bands.push(Band::new(
                kappa.min(0.0),
                kappa.max(0.0),
                1,
                BandKind::AbsolutelyContinuous,
            ));
        }
    }
    for pair in &nj.complex_pairs {
        bands.push(Band::new(-pair.kappa, pair.kappa, 1, BandKind::AbsolutelyContinuous));
    }
    bands
}

/// Bands of the modulus spectrum: one band `[0, |kappa(a)|/2]` per jump
/// point, so each conjugate pair contributes two identical bands.
pub fn modulus_spectrum(nj: &NormalizedJumps) -> Vec<Band> {
    let mut bands = Vec::new();
    for kappa in [nj.kappa_plus, nj.kappa_minus] {
        if kappa != 0.0 {
            bands.push(Band::new(0.0, kappa.abs(), 1, BandKind::Modulus));
        }
    }
    for pair in &nj.complex_pairs {
        bands.push(Band::new(0.0, pair.kappa, 1, BandKind::Modulus));
        bands.push(Band::new(0.0, pair.kappa, 1, BandKind::Modulus));
    }
    bands
}

/// Threshold set: `0` together with all endpoints of the absolutely
/// continuous bands, sorted ascending and deduplicated at `1e-12`.
pub fn thresholds(nj: &NormalizedJumps) -> Vec<f64> {
    let mut values = vec![0.0];
    for band in ac_spectrum(nj) {
        values.push(band.lo);
        values.push(band.hi);
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    for v in values {
        match out.last() {
            Some(&last) if (v - last).abs() <= THRESHOLD_DEDUP_TOL => {}
            _ => out.push(v),
        }
    }
    out
}

/// The combined prediction.
pub fn predict(nj: &NormalizedJumps) -> SpectralPrediction {
    SpectralPrediction {
        essential: essential_spectrum(nj),
        ac_bands: ac_spectrum(nj),
        modulus_bands: modulus_spectrum(nj),
        thresholds: thresholds(nj),
    }
}

/// Errors raised by the asymptotic input models.
#[derive(Debug, Error)]
pub enum PredictError {
    /// Two oscillatory terms share (or nearly share) a frequency.
    #[error("duplicate oscillatory frequency: {0}")]
    DuplicateFrequency(String),
    /// A model parameter is out of its admissible range.
    #[error("invalid model parameter: {0}")]
    InvalidParameter(String),
}

/// One oscillatory term of the coefficient model:
/// `2 kappa sin(n theta - phi) / (pi (n+1))`.
#[derive(Debug, Clone, Copy)]
pub struct OscillatoryTerm {
    pub kappa: f64,
    pub theta: f64,
    pub phi: f64,
}

/// Asymptotic model of Hankel matrix entries
/// `h_n = (pi (n+1))^{-1} [kappa_+ + (-1)^n kappa_- +
/// sum_j 2 kappa_j sin(n theta_j - phi_j)] + O(n^{-1-alpha0})`.
#[derive(Debug, Clone)]
pub struct CoefficientModel {
    pub kappa_plus: f64,
    pub kappa_minus: f64,
    pub oscillatory: Vec<OscillatoryTerm>,
    pub alpha0: f64,
}

/// Prediction from the coefficient model.  Frequencies must be distinct,
/// lie strictly inside `(0, pi)`, and carry positive amplitudes; the phase
/// `phi_j` links to the jump phase by `psi_j = phi_j - theta_j + pi/2`.
pub fn predict_from_coefficient_model(
    model: &CoefficientModel,
) -> Result<SpectralPrediction, PredictError> {
    if !(model.alpha0 > 0.0) {
        return Err(PredictError::InvalidParameter(format!(
            "remainder exponent alpha0 = {} must be positive",
            model.alpha0
        )));
    }
    for term in &model.oscillatory {
        if !(term.kappa > 0.0) {
            return Err(PredictError::InvalidParameter(format!(
                "oscillatory amplitude kappa = {} must be positive",
                term.kappa
            )));
        }
        if !(term.theta > FREQUENCY_TOL && term.theta < std::f64::consts::PI - FREQUENCY_TOL) {
            return Err(PredictError::InvalidParameter(format!(
                "oscillatory frequency theta = {} must lie strictly inside (0, pi)",
                term.theta
            )));
        }
    }
    for i in 0..model.oscillatory.len() {
        for j in (i + 1)..model.oscillatory.len() {
            if (model.oscillatory[i].theta - model.oscillatory[j].theta).abs() < FREQUENCY_TOL {
                return Err(PredictError::DuplicateFrequency(format!(
                    "theta = {} appears twice",
                    model.oscillatory[i].theta
                )));
            }
        }
    }
    let mut pairs: Vec<JumpPair> = model
        .oscillatory
        .iter()
        .map(|term| JumpPair {
            theta: term.theta,
            kappa: term.kappa,
            psi: term.phi - term.theta + std::f64::consts::FRAC_PI_2,
        })
        .collect();
    pairs.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    let nj = NormalizedJumps {
        kappa_plus: model.kappa_plus,
        kappa_minus: model.kappa_minus,
        complex_pairs: pairs,
    };
    Ok(predict(&nj))
}

/// One oscillatory term of the kernel model:
/// `2 h sin(b t - phi) / (pi t)` as `t -> infinity`.
#[derive(Debug, Clone, Copy)]
pub struct KernelOscillatoryTerm {
    pub h: f64,
    pub b: f64,
    pub phi: f64,
}

/// Asymptotic model of an integral Hankel kernel:
/// `h(t) ~ h0 / (pi t)` as `t -> 0` (absent when `regular_at_origin`),
/// `h(t) ~ [h_inf + sum_j 2 h_j sin(b_j t - phi_j)] / (pi t)` as
/// `t -> infinity`, remainders `O(t^{-1+alpha0})` / `O(t^{-1-alpha0})`.
#[derive(Debug, Clone)]
pub struct KernelModel {
    pub h0: f64,
    pub h_inf: f64,
    pub oscillatory: Vec<KernelOscillatoryTerm>,
    pub alpha0: f64,
    pub regular_at_origin: bool,
}

/// Prediction from the kernel model.  The origin singularity strength maps
/// to `kappa_+`, the decay strength at infinity to `kappa_-`, and each
/// oscillation `2 h_j sin(b_j t - phi_j)/(pi t)` to a conjugate pair at
/// `theta_j = 2 atan(1/(2 b_j))` with `kappa_j = h_j` and phase
/// `psi_j = pi - theta_j - phi_j`.
pub fn predict_from_kernel_model(model: &KernelModel) -> Result<SpectralPrediction, PredictError> {
    if !(model.alpha0 > 0.0) {
        return Err(PredictError::InvalidParameter(format!(
            "remainder exponent alpha0 = {} must be positive",
            model.alpha0
        )));
    }
    if model.regular_at_origin && model.h0 != 0.0 {
        return Err(PredictError::InvalidParameter(format!(
            "regular_at_origin contradicts a nonzero origin strength h0 = {}",
            model.h0
        )));
    }
    for term in &model.oscillatory {
        if !(term.h > 0.0) {
            return Err(PredictError::InvalidParameter(format!(
                "oscillatory amplitude h = {} must be positive",
                term.h
            )));
        }
        if !(term.b > FREQUENCY_TOL) {
            return Err(PredictError::InvalidParameter(format!(
                "oscillatory frequency b = {} must be positive",
                term.b
            )));
        }
    }
    for i in 0..model.oscillatory.len() {
        for j in (i + 1)..model.oscillatory.len() {
            if (model.oscillatory[i].b - model.oscillatory[j].b).abs() < FREQUENCY_TOL {
                return Err(PredictError::DuplicateFrequency(format!(
                    "b = {} appears twice",
                    model.oscillatory[i].b
                )));
            }
        }
    }
    let kappa_plus = if model.regular_at_origin { 0.0 } else { model.h0 };
    let mut pairs: Vec<JumpPair> = model
        .oscillatory
        .iter()
        .map(|term| {
            let theta = 2.0 * (1.0 / (2.0 * term.b)).atan();
            JumpPair { theta, kappa: term.h, psi: std::f64::consts::PI - theta - term.phi }
        })
        .collect();
    pairs.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    let nj = NormalizedJumps {
        kappa_plus,
        kappa_minus: model.h_inf,
        complex_pairs: pairs,
    };
    Ok(predict(&nj))
}
