//! Spectral structure of self-adjoint Hankel operators with piecewise-continuous
//! symbols.
//!
//! A bounded Hankel operator can be described in four equivalent ways: as a matrix
//! `[h_{n+m}]` acting on one-sided sequences, as an integral operator with kernel
//! `h(t+s)` on the half-line, and through its symbol on the unit circle or (after a
//! Cayley transform) on the real line.  When the symbol is piecewise continuous, the
//! essential and absolutely continuous spectra are determined entirely by the jump
//! data of the symbol: each jump contributes one spectral band, and the bands are
//! counted with multiplicity.
//!
//! This crate turns that dictionary into a numerical toolkit:
//!
//! * [`symbols`] — symbol specifications built from jump data, validation of the
//!   self-adjointness constraints, jump normalization, pointwise evaluation,
//!   Fourier coefficients, and the circle-to-line translation;
//! * [`models`] — the closed-form model symbols, coefficient sequences and integral
//!   kernels that realize a single jump, together with the special functions they
//!   are built from and the identities used to cross-check them;
//! * [`predict`] — band predictions (essential spectrum, a.c. bands with
//!   multiplicity, modulus bands, thresholds) computed from jump data alone;
//! * [`sections`] — verification machinery: finite Hankel sections, a dense
//!   symmetric eigensolver, Nystrom discretization of kernel models, band-filling
//!   metrics and a weighted resolvent probe;
//! * [`cli`] — configuration parsing and report/CSV emission for the
//!   `hankel-spectra` command-line tool;
//! * [`quad`] — the adaptive Gauss–Kronrod and panel Gauss–Legendre quadratures
//!   shared by the other modules.

pub mod cli;
pub mod models;
pub mod predict;
pub mod quad;
pub mod sections;
pub mod symbols;

pub use num_complex::Complex64;
