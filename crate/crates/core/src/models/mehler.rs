//! The explicitly diagonalizable integral model operator and its transform.
//!
//! The integral operator with kernel `1/(pi (2 + t + s))` on the half-line is
//! diagonalized by conical Legendre functions: for every `tau >= 0`,
//!
//! ```text
//! ∫_0^∞ P_{-1/2+i tau}(1+s) / (2 + t + s) ds = (pi / cosh(pi tau)) P_{-1/2+i tau}(1+t),
//! ```
//!
//! and the associated integral transform (conical kernel, spectral density
//! `sqrt(tau tanh(pi tau))`) is unitary on the half-line.  The identity
//! residual below is the crate's strongest end-to-end check of the quadrature
//! and special-function stack; the transform provides the diagonalization used
//! by the verification suite (multiplier `1/cosh(pi tau)`, Parseval).

use crate::models::legendre::{asymptotic_complex_terms, hypergeometric_corrections, legendre_conical};
use crate::models::ModelError;
use crate::quad;
use num_complex::Complex64;

/// Truncation point for the half-line integrals (the oscillatory integrand
/// decays like `s^{-3/2}`; the rest is compensated analytically).
const S_MAX: f64 = 1.0e4;

/// `∫_0^∞ P_{-1/2+i tau}(1+s)/(2 + t + s) ds`, computed as a truncated
/// adaptive integral plus the analytic tail obtained from the large-argument
/// expansion of the conical function.
pub(crate) fn mehler_integral_with_tail(tau: f64, t: f64) -> Result<f64, ModelError> {
    assert!(tau > 0.0, "the oscillatory tail expansion needs tau > 0");
    assert!(t >= 0.0);
    let c = 1.0 + t;
    // Body over x = 1 + s in [1, X], integrated in u = ln x to spread the
    // logarithmic oscillation evenly.
    let x_max = 1.0 + S_MAX;
    let body = quad::adaptive(
        &|u: f64| {
            let x = u.exp();
            x * legendre_conical(tau, x) / (c + x)
        },
        0.0,
        x_max.ln(),
        1e-10,
        20_000,
    )?;

    // Tail: expand P(x) ~ Re[C x^{-1/2+i tau}(1 + g1 x^-2 + g2 x^-4)] and
    // 1/(c+x) in powers of 1/x, then integrate term by term.
    let (_, cc) = asymptotic_complex_terms(tau, x_max);
    let (g1, g2) = hypergeometric_corrections(tau);
    let _ = g2; // fourth-order term is below rounding at this truncation
    let i = Complex64::new(0.0, 1.0);
    let coefs = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-c, 0.0),
        c * c + g1,
        -(c * c * c) - g1 * c,
    ];
    let mut tail = Complex64::new(0.0, 0.0);
    for (k, coef) in coefs.iter().enumerate() {
        let power = -0.5 - k as f64;
        let x_pow = Complex64::new(x_max, 0.0).powc(Complex64::new(power, tau));
        tail += cc * coef * x_pow / (Complex64::new(-power, 0.0) - i * tau);
    }
    Ok(body.value + tail.re)
}

/// Relative residual `|lhs - rhs| / |rhs|` of the eigenfunction identity of
/// the integral model operator at spectral parameter `tau > 0` and argument
/// `t >= 0`.
pub fn mehler_identity_residual(tau: f64, t: f64) -> Result<f64, ModelError> {
    let lhs = mehler_integral_with_tail(tau, t)?;
    let rhs = std::f64::consts::PI / (std::f64::consts::PI * tau).cosh()
        * legendre_conical(tau, 1.0 + t);
    Ok((lhs - rhs).abs() / rhs.abs())
}

/// Sampled output of the conical-kernel transform.
#[derive(Debug, Clone)]
pub struct MehlerFockTransform {
    pub tau_grid: Vec<f64>,
    pub values: Vec<f64>,
}

/// Conical-kernel transform
/// `(Psi f)(tau) = sqrt(tau tanh(pi tau)) ∫ P_{-1/2+i tau}(1+t) f(t) dt`
/// of a function supported on `[support.0, support.1]`, evaluated on the
/// given `tau` grid.
///
/// The integral is split at `t = 10`; the far part is integrated in `ln t`,
/// which keeps very wide windows (slowly decaying `f`) tractable.
pub fn mehler_fock_transform(
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    tau_grid: &[f64],
) -> Result<MehlerFockTransform, ModelError> {
    let (lo, hi) = support;
    assert!(lo >= 0.0 && hi > lo, "support must satisfy 0 <= lo < hi");
    let mut values = Vec::with_capacity(tau_grid.len());
    for &tau in tau_grid {
        assert!(tau >= 0.0);
        if tau == 0.0 {
            // Spectral density vanishes at tau = 0.
            values.push(0.0);
            continue;
        }
        let near_hi = hi.min(10.0);
        let mut total = 0.0;
        if near_hi > lo {
            total += quad::adaptive(
                &|t: f64| legendre_conical(tau, 1.0 + t) * f(t),
                lo,
                near_hi,
                1e-10,
                20_000,
            )?
            .value;
        }
        if hi > 10.0 {
            let start = lo.max(10.0);
            total += quad::adaptive(
                &|u: f64| {
                    let t = u.exp();
                    t * legendre_conical(tau, 1.0 + t) * f(t)
                },
                start.ln(),
                hi.ln(),
                1e-10,
                40_000,
            )?
            .value;
        }
        let density = (tau * (std::f64::consts::PI * tau).tanh()).sqrt();
        values.push(density * total);
    }
    Ok(MehlerFockTransform { tau_grid: tau_grid.to_vec(), values })
}
