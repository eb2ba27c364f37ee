//! C ABI over the spectral toolkit.
//!
//! The surface is deliberately small: build a band prediction from either
//! asymptotic model (discrete coefficients or half-line kernel), read it back
//! through accessor calls, diagonalize a finite Hankel section from a raw
//! coefficient array, and evaluate the odd spectral-density profile.  All
//! state lives behind opaque handles freed by the matching `_free` call;
//! every function returns an [`hs_status`] code and writes results through
//! out-pointers, so the ABI carries no Rust types.
//!
//! The header `include/hankel_spectra.h` is regenerated by the build script
//! when `cbindgen` is available and shipped with the crate.

#![allow(non_camel_case_types)]

use std::panic::{catch_unwind, AssertUnwindSafe};

use hankel_spectra::models::zeta;
use hankel_spectra::predict::{
    predict_from_coefficient_model, predict_from_kernel_model, CoefficientModel,
    KernelModel, KernelOscillatoryTerm, OscillatoryTerm, SpectralPrediction,
};
use hankel_spectra::sections::{section_spectrum, HankelCoefficients, SectionSpectrum};

/// Status code returned by every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum hs_status {
    /// Success.
    HS_OK = 0,
    /// A required pointer argument was null.
    HS_NULL_ARGUMENT = 1,
    /// Arguments were readable but violate a model contract.
    HS_INVALID_ARGUMENT = 2,
    /// The computation itself failed (e.g. eigensolver non-convergence).
    HS_COMPUTE_ERROR = 3,
    /// An output buffer was too small; nothing was written.
    HS_BUFFER_TOO_SMALL = 4,
}

/// One oscillatory term of the discrete coefficient model:
/// amplitude `kappa > 0`, frequency `theta` in `(0, pi)`, phase `phi`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct hs_osc_term {
    pub kappa: f64,
    pub theta: f64,
    pub phi: f64,
}

/// One oscillatory term of the half-line kernel model:
/// amplitude `h > 0`, frequency `b > 0`, phase `phi`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct hs_kernel_term {
    pub h: f64,
    pub b: f64,
    pub phi: f64,
}

/// Opaque band-prediction handle.
pub struct hs_prediction {
    inner: SpectralPrediction,
}

/// Opaque eigenvalue-list handle.
pub struct hs_spectrum {
    inner: SectionSpectrum,
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn hs_status_message(status: hs_status) -> *const std::os::raw::c_char {
    let msg: &'static [u8] = match status {
        hs_status::HS_OK => b"ok\0",
        hs_status::HS_NULL_ARGUMENT => b"null pointer argument\0",
        hs_status::HS_INVALID_ARGUMENT => b"invalid argument\0",
        hs_status::HS_COMPUTE_ERROR => b"computation failed\0",
        hs_status::HS_BUFFER_TOO_SMALL => b"output buffer too small\0",
    };
    msg.as_ptr() as *const std::os::raw::c_char
}

/// Shared tail: box a prediction into an out-pointer.
fn emit_prediction(
    result: Result<SpectralPrediction, impl std::fmt::Display>,
    out: *mut *mut hs_prediction,
) -> hs_status {
    match result {
        Ok(inner) => {
            let handle = Box::new(hs_prediction { inner });
            unsafe { *out = Box::into_raw(handle) };
            hs_status::HS_OK
        }
        Err(_) => hs_status::HS_INVALID_ARGUMENT,
    }
}

/// Band prediction from the discrete coefficient model
/// `h_n ~ (pi (n+1))^-1 [kappa_plus + (-1)^n kappa_minus
///   + sum_j 2 kappa_j sin(n theta_j - phi_j)]`.
///
/// `terms` may be null when `n_terms` is zero.  On success `*out` owns the
/// prediction; free it with [`hs_prediction_free`].
///
/// # Safety
/// `terms` must point to `n_terms` readable elements (or be null with
/// `n_terms == 0`); `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_predict_coefficient_model(
    kappa_plus: f64,
    kappa_minus: f64,
    terms: *const hs_osc_term,
    n_terms: usize,
    alpha0: f64,
    out: *mut *mut hs_prediction,
) -> hs_status {
    if out.is_null() || (terms.is_null() && n_terms > 0) {
        return hs_status::HS_NULL_ARGUMENT;
    }
    let slice = if n_terms == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(terms, n_terms)
    };
    let model = CoefficientModel {
        kappa_plus,
        kappa_minus,
        oscillatory: slice
            .iter()
            .map(|t| OscillatoryTerm { kappa: t.kappa, theta: t.theta, phi: t.phi })
            .collect(),
        alpha0,
    };
    match catch_unwind(AssertUnwindSafe(|| predict_from_coefficient_model(&model))) {
        Ok(result) => emit_prediction(result, out),
        Err(_) => hs_status::HS_COMPUTE_ERROR,
    }
}

/// Band prediction from the half-line kernel model
/// `h(t) ~ h0/t (t -> 0) + h_inf/t (t -> inf)
///   + sum_j 2 h_j cos(b_j log t + phi_j)/t`.
///
/// `regular_at_origin` is a boolean flag (nonzero = the kernel has no
/// singular contribution at the origin; requires `h0 == 0`).
///
/// # Safety
/// `terms` must point to `n_terms` readable elements (or be null with
/// `n_terms == 0`); `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_predict_kernel_model(
    h0: f64,
    h_inf: f64,
    terms: *const hs_kernel_term,
    n_terms: usize,
    alpha0: f64,
    regular_at_origin: i32,
    out: *mut *mut hs_prediction,
) -> hs_status {
    if out.is_null() || (terms.is_null() && n_terms > 0) {
        return hs_status::HS_NULL_ARGUMENT;
    }
    let slice = if n_terms == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(terms, n_terms)
    };
    let model = KernelModel {
        h0,
        h_inf,
        oscillatory: slice
            .iter()
            .map(|t| KernelOscillatoryTerm { h: t.h, b: t.b, phi: t.phi })
            .collect(),
        alpha0,
        regular_at_origin: regular_at_origin != 0,
    };
    match catch_unwind(AssertUnwindSafe(|| predict_from_kernel_model(&model))) {
        Ok(result) => emit_prediction(result, out),
        Err(_) => hs_status::HS_COMPUTE_ERROR,
    }
}

/// Number of a.c. bands, modulus bands, and thresholds in a prediction.
/// Any of the count out-pointers may be null to skip that count.
///
/// # Safety
/// `prediction` must be a live handle from a predict call; non-null count
/// pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_prediction_counts(
    prediction: *const hs_prediction,
    ac_bands: *mut usize,
    modulus_bands: *mut usize,
    thresholds: *mut usize,
) -> hs_status {
    let Some(p) = prediction.as_ref() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    if let Some(slot) = ac_bands.as_mut() {
        *slot = p.inner.ac_bands.len();
    }
    if let Some(slot) = modulus_bands.as_mut() {
        *slot = p.inner.modulus_bands.len();
    }
    if let Some(slot) = thresholds.as_mut() {
        *slot = p.inner.thresholds.len();
    }
    hs_status::HS_OK
}

unsafe fn read_band(
    band: Option<&hankel_spectra::predict::Band>,
    lo: *mut f64,
    hi: *mut f64,
    multiplicity: *mut usize,
) -> hs_status {
    let Some(band) = band else {
        return hs_status::HS_INVALID_ARGUMENT;
    };
    if let Some(slot) = lo.as_mut() {
        *slot = band.lo;
    }
    if let Some(slot) = hi.as_mut() {
        *slot = band.hi;
    }
    if let Some(slot) = multiplicity.as_mut() {
        *slot = band.multiplicity;
    }
    hs_status::HS_OK
}

/// Endpoints and multiplicity of the `index`-th a.c. band.  Out-pointers may
/// be null to skip a field; an out-of-range index returns
/// `HS_INVALID_ARGUMENT`.
///
/// # Safety
/// `prediction` must be a live handle; non-null out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn hs_prediction_ac_band(
    prediction: *const hs_prediction,
    index: usize,
    lo: *mut f64,
    hi: *mut f64,
    multiplicity: *mut usize,
) -> hs_status {
    let Some(p) = prediction.as_ref() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    read_band(p.inner.ac_bands.get(index), lo, hi, multiplicity)
}

/// Endpoints and multiplicity of the `index`-th modulus band.
///
/// # Safety
/// `prediction` must be a live handle; non-null out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn hs_prediction_modulus_band(
    prediction: *const hs_prediction,
    index: usize,
    lo: *mut f64,
    hi: *mut f64,
    multiplicity: *mut usize,
) -> hs_status {
    let Some(p) = prediction.as_ref() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    read_band(p.inner.modulus_bands.get(index), lo, hi, multiplicity)
}

/// Copy the ascending threshold list into `buffer` (capacity in elements);
/// `*written` receives the count.  Returns `HS_BUFFER_TOO_SMALL` without
/// writing when the capacity is insufficient.
///
/// # Safety
/// `prediction` must be a live handle; `buffer` must have `capacity`
/// writable elements; `written` (if non-null) must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_prediction_thresholds(
    prediction: *const hs_prediction,
    buffer: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> hs_status {
    let Some(p) = prediction.as_ref() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    let list = &p.inner.thresholds;
    if list.len() > capacity {
        return hs_status::HS_BUFFER_TOO_SMALL;
    }
    if buffer.is_null() && !list.is_empty() {
        return hs_status::HS_NULL_ARGUMENT;
    }
    for (k, &t) in list.iter().enumerate() {
        *buffer.add(k) = t;
    }
    if let Some(slot) = written.as_mut() {
        *slot = list.len();
    }
    hs_status::HS_OK
}

/// Release a prediction handle.  Null is a no-op.
///
/// # Safety
/// `prediction` must be a handle from a predict call, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_prediction_free(prediction: *mut hs_prediction) {
    if !prediction.is_null() {
        drop(Box::from_raw(prediction));
    }
}

/// Diagonalize the `n x n` Hankel section built from a raw coefficient array
/// (`matrix[i][j] = coefficients[i + j]`, so `len` must be at least
/// `2 n - 1`).  On success `*out` owns the spectrum handle.
///
/// # Safety
/// `coefficients` must point to `len` readable elements; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hs_section_spectrum(
    coefficients: *const f64,
    len: usize,
    n: usize,
    out: *mut *mut hs_spectrum,
) -> hs_status {
    if coefficients.is_null() || out.is_null() {
        return hs_status::HS_NULL_ARGUMENT;
    }
    if n == 0 || len < 2 * n - 1 {
        return hs_status::HS_INVALID_ARGUMENT;
    }
    let values = std::slice::from_raw_parts(coefficients, len).to_vec();
    if values.iter().any(|v| !v.is_finite()) {
        return hs_status::HS_INVALID_ARGUMENT;
    }
    let run = catch_unwind(AssertUnwindSafe(|| {
        let coeffs = HankelCoefficients::from_values(values);
        section_spectrum(&coeffs, n)
    }));
    match run {
        Ok(Ok(inner)) => {
            let handle = Box::new(hs_spectrum { inner });
            *out = Box::into_raw(handle);
            hs_status::HS_OK
        }
        Ok(Err(_)) | Err(_) => hs_status::HS_COMPUTE_ERROR,
    }
}

/// Number of eigenvalues held by a spectrum handle.
///
/// # Safety
/// `spectrum` must be a live handle; `n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_size(
    spectrum: *const hs_spectrum,
    n: *mut usize,
) -> hs_status {
    let Some(s) = spectrum.as_ref() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    let Some(slot) = n.as_mut() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    *slot = s.inner.eigenvalues.len();
    hs_status::HS_OK
}

/// Copy the ascending eigenvalue list into `buffer` (capacity in elements).
/// Returns `HS_BUFFER_TOO_SMALL` without writing when too small.
///
/// # Safety
/// `spectrum` must be a live handle; `buffer` must have `capacity` writable
/// elements; `written` (if non-null) must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_eigenvalues(
    spectrum: *const hs_spectrum,
    buffer: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> hs_status {
    let Some(s) = spectrum.as_ref() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    let list = &s.inner.eigenvalues;
    if list.len() > capacity {
        return hs_status::HS_BUFFER_TOO_SMALL;
    }
    if buffer.is_null() && !list.is_empty() {
        return hs_status::HS_NULL_ARGUMENT;
    }
    for (k, &v) in list.iter().enumerate() {
        *buffer.add(k) = v;
    }
    if let Some(slot) = written.as_mut() {
        *slot = list.len();
    }
    hs_status::HS_OK
}

/// Release a spectrum handle.  Null is a no-op.
///
/// # Safety
/// `spectrum` must be a handle from [`hs_section_spectrum`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_free(spectrum: *mut hs_spectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Odd spectral-density profile: `zeta(0+) = 1/2`, monotone decay to 0 at
/// `+inf`, `zeta(-nu) = -zeta(nu)`.  Non-finite input returns
/// `HS_INVALID_ARGUMENT`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_zeta(nu: f64, out: *mut f64) -> hs_status {
    let Some(slot) = out.as_mut() else {
        return hs_status::HS_NULL_ARGUMENT;
    };
    if !nu.is_finite() {
        return hs_status::HS_INVALID_ARGUMENT;
    }
    *slot = zeta(nu);
    hs_status::HS_OK
}
