//! Model symbols, coefficient sequences and integral kernels realizing a
//! single jump, together with the special functions they are built from.
//!
//! Every piecewise-continuous symbol is, up to a continuous error term, a sum
//! of translates of one universal object: the odd function [`zeta`] with its
//! jump of size one at the origin.  This module provides the closed-form
//! carriers of that jump in each representation (circle symbols, line symbols,
//! Hankel coefficient sequences, integral kernels), the two-by-two symbol
//! algebra used to reduce a symmetric pair of jumps to scalar models, the
//! conformal substitution that moves a jump pair to arbitrary conjugate
//! locations, and the explicitly diagonalizable integral model operator with
//! its eigenfunction identity.

mod conformal;
mod legendre;
mod mehler;
mod sigma;
mod special;
mod zeta;

pub use conformal::conformal_transform_symbol;
pub use legendre::{legendre_conical, legendre_conical_asymptotic, legendre_conical_raw};
pub use mehler::{mehler_fock_transform, mehler_identity_residual, MehlerFockTransform};
pub use sigma::{
    block_symbol_of_omega_phi, sigma_decomposition, MixingMatrix, SigmaDecomposition,
    TwoByTwoSymbol,
};
pub use special::{gamma_complex, si_ci, EULER_GAMMA};
pub use zeta::{zeta, zeta_direct, zeta_one_sided};

use num_complex::Complex64;
use thiserror::Error;

use crate::symbols::{CirclePoint, EvalPoint};

/// Distance below which an evaluation point is considered to sit exactly on a
/// jump location.
pub(crate) const JUMP_POINT_TOL: f64 = 1e-12;

/// Errors from model-symbol evaluation and the model identities.
#[derive(Debug, Error)]
pub enum ModelError {
    /// The requested point coincides (within `1e-12`) with a jump of the model.
    #[error("evaluation exactly at a jump point of the model symbol")]
    EvaluationAtJump,
    /// An adaptive quadrature inside a model computation failed to converge.
    #[error(transparent)]
    QuadratureNonConvergence(#[from] crate::quad::NonConvergence),
    /// Conformal substitution parameter outside the open unit interval.
    #[error("conformal parameter alpha = {0} must lie in (-1, 1)")]
    AlphaOutOfRange(f64),
    /// The preset does not support the requested operation (wrong family or
    /// wrong representation of the evaluation point).
    #[error("preset {preset} does not support {operation}")]
    PresetMismatch { preset: String, operation: &'static str },
}

/// Identifiers of the built-in model objects.
///
/// The variants fall into four families:
/// * circle symbols carrying jumps (`VPlus` … `OmegaPhiTheta`),
/// * line symbols (`Psi0`, `PsiInf`, `PsiPhiB`),
/// * Hankel coefficient sequences (`HilbertCoeffs`, `AlternatingCoeffs`,
///   `OscillatoryCoeffs`),
/// * integral kernels on the half-line (`MehlerKernel`, `OscKernel`,
///   `ExpOverTKernel`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelPreset {
    /// `v(-mu)`: jump `2i` at `+1`, vanishes at `-1`.
    VPlus,
    /// `v(mu) = -2i mu^{-1} zeta(nu(mu))`: jump `2i` at `-1`, vanishes at `+1`.
    VMinus,
    /// Argument-linear symbol `i (1 - psi/pi) e^{-i psi}` on `psi in [0, 2pi)`;
    /// jump `2i` at `+1`; Hankel coefficients `1/(pi (n+1))`.
    OmegaPlus,
    /// `OmegaPlus` composed with `mu -> -mu`; jump `2i` at `-1`.
    OmegaMinus,
    /// `(sin phi - mu cos phi) v(mu^2)`: jumps `±2 e^{±i phi}` at `±i`.
    OmegaPhi { phi: f64 },
    /// `OmegaPhi` moved by the conformal substitution with
    /// `alpha = tan(pi/4 - theta/2)`: jumps `2i e^{i(phi-theta)}` at `e^{i theta}`
    /// and `2i e^{i(theta-phi)}` at `e^{-i theta}`.
    OmegaPhiTheta { phi: f64, theta: f64 },
    /// Line symbol `(2i/pi) arctan(nu)`; jump `2i` at infinity; kernel
    /// `e^{-t}/(pi t)`.
    Psi0,
    /// Line symbol `2i zeta(nu)`; jump `2i` at the origin; kernel
    /// `1/(pi (2+t))` (the explicitly diagonalizable model operator).
    PsiInf,
    /// Line symbol `2 e^{-i phi} zeta(nu + b) - 2 e^{i phi} zeta(nu - b)`;
    /// jumps `-2 e^{i phi}` at `b` and `2 e^{-i phi}` at `-b`; kernel
    /// `2 sin(b t - phi) / (pi (2 + t))`.
    PsiPhiB { phi: f64, b: f64 },
    /// Coefficients `h_n = 1/(pi (n+1))` (the Hilbert matrix).
    HilbertCoeffs,
    /// Coefficients `h_n = (-1)^n/(pi (n+1))`.
    AlternatingCoeffs,
    /// Coefficients `h_n = 2 sin(n theta - phi) / (pi (n+1))`.
    OscillatoryCoeffs { theta: f64, phi: f64 },
    /// Kernel `h(t) = 1/(pi (2+t))`.
    MehlerKernel,
    /// Kernel `h(t) = 2 sin(b t - phi) / (pi (2+t))`.
    OscKernel { b: f64, phi: f64 },
    /// Kernel `h(t) = e^{-t}/(pi t)`.
    ExpOverTKernel,
}

/// The four preset families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetKind {
    CircleSymbol,
    LineSymbol,
    Coefficients,
    Kernel,
}

impl ModelPreset {
    pub fn kind(&self) -> PresetKind {
        use ModelPreset::*;
        match self {
            VPlus | VMinus | OmegaPlus | OmegaMinus | OmegaPhi { .. } | OmegaPhiTheta { .. } => {
                PresetKind::CircleSymbol
            }
            Psi0 | PsiInf | PsiPhiB { .. } => PresetKind::LineSymbol,
            HilbertCoeffs | AlternatingCoeffs | OscillatoryCoeffs { .. } => PresetKind::Coefficients,
            MehlerKernel | OscKernel { .. } | ExpOverTKernel => PresetKind::Kernel,
        }
    }

    fn mismatch(&self, operation: &'static str) -> ModelError {
        ModelError::PresetMismatch { preset: format!("{self:?}"), operation }
    }
}

/// Selects between the reflected pair `v_+` and `v_-` of one-jump symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The basic one-jump circle symbols `v_±` at `mu = e^{i angle}`.
///
/// `v_-(mu) = v(mu) = -2 i mu^{-1} zeta(nu)` with the Cayley parameter
/// `nu = -cot(angle/2)/2`; jump `2i` at `mu = -1`, value `0` at `mu = +1`.
/// `v_+(mu) = v(-mu)` carries the same jump reflected to `mu = +1`.
pub fn v_symbol(point: CirclePoint, sign: Sign) -> Result<Complex64, ModelError> {
    let angle = match sign {
        Sign::Minus => point.angle(),
        Sign::Plus => CirclePoint::new(point.angle() + std::f64::consts::PI).angle(),
    };
    if (angle - std::f64::consts::PI).abs() < JUMP_POINT_TOL {
        return Err(ModelError::EvaluationAtJump);
    }
    let nu = cayley_line_parameter(angle);
    let z = zeta::zeta(nu);
    // mu^{-1} = conj(mu) on the unit circle.
    let mu_inv = Complex64::new(angle.cos(), -angle.sin());
    Ok(Complex64::new(0.0, -2.0) * mu_inv * z)
}

/// Real Cayley parameter `nu = -cot(angle/2)/2` of the circle point
/// `e^{i angle}`; `angle = 0` maps to (negative) infinity.
pub(crate) fn cayley_line_parameter(angle: f64) -> f64 {
    let t = (0.5 * angle).tan();
    if t == 0.0 {
        f64::NEG_INFINITY
    } else {
        -0.5 / t
    }
}

/// Evaluate a symbol preset at a point of the matching representation.
pub fn model_symbol(preset: ModelPreset, point: EvalPoint) -> Result<Complex64, ModelError> {
    match (preset.kind(), point) {
        (PresetKind::CircleSymbol, EvalPoint::Circle(p)) => circle_model_symbol(preset, p),
        (PresetKind::LineSymbol, EvalPoint::Line(nu)) => line_model_symbol(preset, nu),
        _ => Err(preset.mismatch("symbol evaluation at this point representation")),
    }
}

fn circle_model_symbol(preset: ModelPreset, point: CirclePoint) -> Result<Complex64, ModelError> {
    let angle = point.angle();
    let mu = Complex64::new(angle.cos(), angle.sin());
    match preset {
        ModelPreset::VMinus => v_symbol(point, Sign::Minus),
        ModelPreset::VPlus => v_symbol(point, Sign::Plus),
        ModelPreset::OmegaPlus => {
            // Distance to the jump at angle 0 (mod 2 pi).
            if angle < JUMP_POINT_TOL || (2.0 * std::f64::consts::PI - angle) < JUMP_POINT_TOL {
                return Err(ModelError::EvaluationAtJump);
            }
            let i = Complex64::new(0.0, 1.0);
            Ok(i * (1.0 - angle / std::f64::consts::PI) * Complex64::new(angle.cos(), -angle.sin()))
        }
        ModelPreset::OmegaMinus => circle_model_symbol(
            ModelPreset::OmegaPlus,
            CirclePoint::new(angle + std::f64::consts::PI),
        ),
        ModelPreset::OmegaPhi { phi } => {
            let inner = v_symbol(CirclePoint::new(2.0 * angle), Sign::Minus)?;
            Ok((Complex64::new(phi.sin(), 0.0) - mu * phi.cos()) * inner)
        }
        ModelPreset::OmegaPhiTheta { phi, theta } => {
            assert!(
                theta > 0.0 && theta < std::f64::consts::PI,
                "OmegaPhiTheta needs theta in (0, pi), got {theta}"
            );
            let alpha = (std::f64::consts::FRAC_PI_4 - 0.5 * theta).tan();
            let m = (mu - alpha) / (1.0 - alpha * mu);
            let inner = circle_model_symbol(
                ModelPreset::OmegaPhi { phi },
                CirclePoint::new(m.arg()),
            )?;
            Ok(mu.conj() * m * inner)
        }
        _ => unreachable!("circle_model_symbol called with non-circle preset"),
    }
}

fn line_model_symbol(preset: ModelPreset, nu: f64) -> Result<Complex64, ModelError> {
    let i = Complex64::new(0.0, 1.0);
    match preset {
        ModelPreset::Psi0 => Ok(i * (2.0 / std::f64::consts::PI) * nu.atan()),
        ModelPreset::PsiInf => {
            if nu.abs() < JUMP_POINT_TOL {
                return Err(ModelError::EvaluationAtJump);
            }
            Ok(2.0 * i * zeta::zeta(nu))
        }
        ModelPreset::PsiPhiB { phi, b } => {
            if (nu - b).abs() < JUMP_POINT_TOL || (nu + b).abs() < JUMP_POINT_TOL {
                return Err(ModelError::EvaluationAtJump);
            }
            let e_minus = Complex64::new(phi.cos(), -phi.sin());
            let e_plus = Complex64::new(phi.cos(), phi.sin());
            Ok(2.0 * e_minus * zeta::zeta(nu + b) - 2.0 * e_plus * zeta::zeta(nu - b))
        }
        _ => unreachable!("line_model_symbol called with non-line preset"),
    }
}

/// Reference quadrature route for the `Psi0` line symbol:
/// `(2i/pi) ∫_0^∞ sin(t nu) e^{-t} / t dt`, independent of the arctangent
/// closed form.
pub fn psi0_quadrature(nu: f64) -> Result<Complex64, ModelError> {
    let body = crate::quad::adaptive(
        &|t: f64| if t == 0.0 { nu } else { (t * nu).sin() * (-t).exp() / t },
        0.0,
        60.0,
        1e-13,
        20_000,
    )?;
    Ok(Complex64::new(0.0, 2.0 / std::f64::consts::PI) * body.value)
}

/// Hankel coefficient `h_n` of a coefficient preset.
pub fn discrete_model_coefficients(preset: ModelPreset, n: usize) -> Result<f64, ModelError> {
    let denom = std::f64::consts::PI * (n as f64 + 1.0);
    match preset {
        ModelPreset::HilbertCoeffs => Ok(1.0 / denom),
        ModelPreset::AlternatingCoeffs => {
            Ok(if n % 2 == 0 { 1.0 / denom } else { -1.0 / denom })
        }
        ModelPreset::OscillatoryCoeffs { theta, phi } => {
            Ok(2.0 * (n as f64 * theta - phi).sin() / denom)
        }
        _ => Err(preset.mismatch("discrete coefficients")),
    }
}

/// Kernel value `h(t)` of a kernel preset, `t >= 0` (strictly positive for the
/// kernel singular at the origin).
pub fn integral_model_kernel(preset: ModelPreset, t: f64) -> Result<f64, ModelError> {
    assert!(t >= 0.0, "kernel argument must be non-negative, got {t}");
    match preset {
        ModelPreset::MehlerKernel => Ok(1.0 / (std::f64::consts::PI * (2.0 + t))),
        ModelPreset::OscKernel { b, phi } => {
            Ok(2.0 * (b * t - phi).sin() / (std::f64::consts::PI * (2.0 + t)))
        }
        ModelPreset::ExpOverTKernel => {
            assert!(t > 0.0, "kernel e^-t/(pi t) is singular at t = 0");
            Ok((-t).exp() / (std::f64::consts::PI * t))
        }
        _ => Err(preset.mismatch("integral kernel evaluation")),
    }
}
