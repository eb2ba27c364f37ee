//! Piecewise-continuous Hankel symbols: representation, validation,
//! normalization, evaluation, Fourier coefficients, and the circle-to-line
//! change of variables.
//!
//! A symbol lives on the unit circle (`omega(mu)`, `mu = e^{i angle}`) or on
//! the real line (`psi(nu)`), the two being linked by the Cayley transform
//! `mu(nu) = (nu - i/2)/(nu + i/2)`.  What the spectral predictions consume is
//! the *jump data*: the locations where the symbol is discontinuous together
//! with the differences of its one-sided limits,
//!
//! ```text
//! kappa(a) = lim_{e->0+} omega(a e^{ie}) - lim_{e->0+} omega(a e^{-ie}).
//! ```
//!
//! Self-adjointness of the Hankel operator forces `omega(conj mu) =
//! conj omega(mu)`, hence jumps at `±1` are purely imaginary and every jump at
//! a non-real location `a` is shadowed by the jump `-conj kappa(a)` at
//! `conj a`.
//!
//! # Line-representation jump bookkeeping
//!
//! Line jump values are stored in the convention produced by
//! [`circle_to_line`] (the transplanted symbol is `psi(nu) = -mu(nu)
//! omega(mu(nu))`):
//!
//! * at a finite nonzero `b`: the stored value is `psi(b+0) - psi(b-0)`;
//! * at `0`: the stored value is `psi(0-0) - psi(0+0)` (equal to
//!   `-kappa(-1)` of the circle symbol);
//! * at infinity: the stored value is `psi(-infinity) - psi(+infinity)`
//!   (equal to `-kappa(+1)`).
//!
//! The orientation flips at `0` and infinity mirror the translation rule of
//! the source material; [`normalize_line_jumps`] compensates for them, so the
//! normalized amplitudes — and therefore all spectral predictions — agree
//! exactly between a circle spec and its [`circle_to_line`] image.

mod convert;
mod fourier;

pub use convert::circle_to_line;
pub use fourier::{
    fourier_coefficients, fourier_coefficients_by_quadrature, fourier_coefficients_panel,
};

use num_complex::Complex64;
use thiserror::Error;

use crate::models::{self, model_symbol, ModelError, ModelPreset, PresetKind, Sign};

/// Angular tolerance for treating two circle points as equal.
pub(crate) const ANGLE_EQ_TOL: f64 = 1e-12;
/// Jump locations closer than this are rejected as duplicates.
pub(crate) const DUPLICATE_TOL: f64 = 1e-9;
/// Tolerance for the self-adjointness constraints on jump values.
pub(crate) const SELF_ADJOINT_TOL: f64 = 1e-12;
/// Regularity exponent assigned to built-in presets (smooth away from their
/// jumps, so any positive value is admissible).
const PRESET_BETA0: f64 = 3.0;

/// Map an angle to the canonical range `[0, 2 pi)`.
pub(crate) fn normalize_angle(angle: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let r = angle.rem_euclid(tau);
    if r == tau { 0.0 } else { r }
}

/// A point `e^{i angle}` of the unit circle, with the angle normalized to
/// `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirclePoint {
    angle: f64,
}

impl CirclePoint {
    pub fn new(angle: f64) -> Self {
        assert!(angle.is_finite(), "circle angle must be finite, got {angle}");
        CirclePoint { angle: normalize_angle(angle) }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// The complex number `e^{i angle}`.
    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.angle.cos(), self.angle.sin())
    }

    /// Angular distance on the circle (wrap-around aware).
    pub fn distance(&self, other: &CirclePoint) -> f64 {
        let d = (self.angle - other.angle).rem_euclid(std::f64::consts::TAU);
        d.min(std::f64::consts::TAU - d)
    }
}

/// A point of the extended real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinePoint {
    Finite(f64),
    Infinity,
}

/// Which of the two carrier domains a symbol lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Circle,
    Line,
}

/// Location of a jump in either representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JumpLocation {
    Circle(CirclePoint),
    Line(LinePoint),
}

impl JumpLocation {
    pub fn circle(angle: f64) -> Self {
        JumpLocation::Circle(CirclePoint::new(angle))
    }

    pub fn line(nu: f64) -> Self {
        assert!(nu.is_finite(), "finite line location required, got {nu}");
        JumpLocation::Line(LinePoint::Finite(nu))
    }

    pub fn infinity() -> Self {
        JumpLocation::Line(LinePoint::Infinity)
    }
}

/// One jump: where the symbol is discontinuous and by how much.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpDatum {
    pub location: JumpLocation,
    pub value: Complex64,
}

/// The part of a symbol left over once its jumps are accounted for, plus the
/// evaluation strategy for the whole symbol.
#[derive(Debug, Clone)]
pub enum ContinuousPart {
    /// Nothing beyond the canonical jump-carrying models.
    None,
    /// Real trigonometric-polynomial tail `sum_k c_k mu^k` added to the
    /// canonical models (circle representation only).
    Tail(Vec<f64>),
    /// The symbol *is* the given model preset.
    Preset(ModelPreset),
    /// Conformal (Möbius) substitution of another circle spec.
    Conformal { base: Box<SymbolSpec>, alpha: f64 },
    /// Line symbol obtained from a circle spec via the Cayley transform:
    /// `psi(nu) = -mu(nu) omega(mu(nu))`.
    CayleyFromCircle(Box<SymbolSpec>),
}

/// A piecewise-continuous symbol: representation tag, jump table, continuous
/// part, and the log-Hölder regularity exponent `beta0` of the non-jump part.
#[derive(Debug, Clone)]
pub struct SymbolSpec {
    representation: Representation,
    jumps: Vec<JumpDatum>,
    continuous_part: ContinuousPart,
    beta0: f64,
}

impl SymbolSpec {
    /// Wrap a symbol-family model preset (circle or line) as a spec, with its
    /// known jump table attached.
    pub fn from_preset(preset: ModelPreset) -> Self {
        assert!(
            matches!(preset.kind(), PresetKind::CircleSymbol | PresetKind::LineSymbol),
            "only symbol presets can back a SymbolSpec, got {preset:?}"
        );
        let representation = match preset.kind() {
            PresetKind::CircleSymbol => Representation::Circle,
            _ => Representation::Line,
        };
        SymbolSpec {
            representation,
            jumps: preset_jump_data(preset),
            continuous_part: ContinuousPart::Preset(preset),
            beta0: PRESET_BETA0,
        }
    }

    /// A spec synthesized from raw jump data alone (canonical models carry the
    /// jumps; no extra continuous part).
    pub fn from_jump_data(
        representation: Representation,
        jumps: Vec<JumpDatum>,
        beta0: f64,
    ) -> Self {
        SymbolSpec { representation, jumps, continuous_part: ContinuousPart::None, beta0 }
    }

    /// Fully explicit constructor.
    pub fn with_carrier(
        representation: Representation,
        jumps: Vec<JumpDatum>,
        continuous_part: ContinuousPart,
        beta0: f64,
    ) -> Self {
        SymbolSpec { representation, jumps, continuous_part, beta0 }
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn jumps(&self) -> &[JumpDatum] {
        &self.jumps
    }

    pub fn continuous_part(&self) -> &ContinuousPart {
        &self.continuous_part
    }

    pub fn beta0(&self) -> f64 {
        self.beta0
    }
}

/// The jump table of a symbol preset (circle and line symbol families).
pub fn preset_jump_data(preset: ModelPreset) -> Vec<JumpDatum> {
    let i = Complex64::new(0.0, 1.0);
    match preset {
        ModelPreset::VPlus | ModelPreset::OmegaPlus => {
            vec![JumpDatum { location: JumpLocation::circle(0.0), value: 2.0 * i }]
        }
        ModelPreset::VMinus | ModelPreset::OmegaMinus => {
            vec![JumpDatum {
                location: JumpLocation::circle(std::f64::consts::PI),
                value: 2.0 * i,
            }]
        }
        ModelPreset::OmegaPhi { phi } => vec![
            JumpDatum {
                location: JumpLocation::circle(std::f64::consts::FRAC_PI_2),
                value: 2.0 * Complex64::from_polar(1.0, phi),
            },
            JumpDatum {
                location: JumpLocation::circle(1.5 * std::f64::consts::PI),
                value: -2.0 * Complex64::from_polar(1.0, -phi),
            },
        ],
        ModelPreset::OmegaPhiTheta { phi, theta } => {
            let kappa = 2.0 * i * Complex64::from_polar(1.0, phi - theta);
            vec![
                JumpDatum { location: JumpLocation::circle(theta), value: kappa },
                JumpDatum { location: JumpLocation::circle(-theta), value: -kappa.conj() },
            ]
        }
        // Line presets, stored in the bookkeeping orientation documented in
        // the module docs (flipped at 0 and infinity).
        ModelPreset::Psi0 => {
            vec![JumpDatum { location: JumpLocation::infinity(), value: -2.0 * i }]
        }
        ModelPreset::PsiInf => {
            vec![JumpDatum { location: JumpLocation::line(0.0), value: -2.0 * i }]
        }
        ModelPreset::PsiPhiB { phi, b } => vec![
            JumpDatum {
                location: JumpLocation::line(b),
                value: -2.0 * Complex64::from_polar(1.0, phi),
            },
            JumpDatum {
                location: JumpLocation::line(-b),
                value: 2.0 * Complex64::from_polar(1.0, -phi),
            },
        ],
        _ => panic!("preset {preset:?} is not a symbol preset"),
    }
}

/// A point at which a symbol can be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalPoint {
    Circle(CirclePoint),
    Line(f64),
}

impl EvalPoint {
    pub fn circle(angle: f64) -> Self {
        EvalPoint::Circle(CirclePoint::new(angle))
    }

    pub fn line(nu: f64) -> Self {
        EvalPoint::Line(nu)
    }
}

/// The normalized jump amplitudes a circle symbol exposes to the spectral
/// predictions: `kappa(±1) = 2 i kappa_±` and, per conjugate pair with
/// `Im a_j > 0`, `kappa(a_j) = 2 kappa_j e^{i psi_j}` with `kappa_j > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedJumps {
    pub kappa_plus: f64,
    pub kappa_minus: f64,
    pub complex_pairs: Vec<JumpPair>,
}

/// One conjugate pair of jumps in normalized form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpPair {
    /// Location angle of the upper-half-plane member, in `(0, pi)`.
    pub theta: f64,
    /// Amplitude `kappa_j > 0`.
    pub kappa: f64,
    /// Phase `psi_j` of the jump value `2 kappa_j e^{i psi_j}`.
    pub psi: f64,
}

impl NormalizedJumps {
    /// Reconstruct the circle jump table this normalization came from
    /// (used for round-trip checks and for predictions on line input).
    pub fn to_circle_jumps(&self) -> Vec<JumpDatum> {
        let i = Complex64::new(0.0, 1.0);
        let mut jumps = Vec::new();
        if self.kappa_plus != 0.0 {
            jumps.push(JumpDatum {
                location: JumpLocation::circle(0.0),
                value: 2.0 * i * self.kappa_plus,
            });
        }
        if self.kappa_minus != 0.0 {
            jumps.push(JumpDatum {
                location: JumpLocation::circle(std::f64::consts::PI),
                value: 2.0 * i * self.kappa_minus,
            });
        }
        for pair in &self.complex_pairs {
            let kappa = 2.0 * pair.kappa * Complex64::from_polar(1.0, pair.psi);
            jumps.push(JumpDatum { location: JumpLocation::circle(pair.theta), value: kappa });
            jumps.push(JumpDatum {
                location: JumpLocation::circle(-pair.theta),
                value: -kappa.conj(),
            });
        }
        jumps
    }
}

/// Errors raised by symbol validation, evaluation, and transformation.
#[derive(Debug, Error)]
pub enum SymbolError {
    /// A jump value violates the self-adjointness constraints.
    #[error("self-adjointness violation: {0}")]
    SelfAdjointnessViolation(String),
    /// Two jump locations are closer than the duplicate tolerance.
    #[error("duplicate jump locations: {0}")]
    DuplicateLocation(String),
    /// The regularity exponent must be positive.
    #[error("regularity exponent beta0 = {0} must be positive")]
    NonPositiveBeta0(f64),
    /// Evaluation requested exactly at a jump location.
    #[error("evaluation exactly at a jump location of the symbol")]
    EvaluationAtJump,
    /// The evaluation point does not match the symbol's representation.
    #[error("evaluation point representation does not match the {0:?} symbol")]
    RepresentationMismatch(Representation),
    /// The operation requires the other representation.
    #[error("operation requires a {expected:?}-representation spec")]
    WrongRepresentation { expected: Representation },
    /// Failure propagated from a model evaluation or quadrature.
    #[error(transparent)]
    Model(ModelError),
}

impl From<ModelError> for SymbolError {
    fn from(err: ModelError) -> Self {
        match err {
            ModelError::EvaluationAtJump => SymbolError::EvaluationAtJump,
            other => SymbolError::Model(other),
        }
    }
}

impl From<crate::quad::NonConvergence> for SymbolError {
    fn from(err: crate::quad::NonConvergence) -> Self {
        SymbolError::Model(ModelError::QuadratureNonConvergence(err))
    }
}

/// Classification of a circle jump location.
enum CircleSlot {
    PlusOne,
    MinusOne,
    Complex(f64),
}

fn classify_circle_angle(angle: f64) -> CircleSlot {
    if angle < DUPLICATE_TOL || std::f64::consts::TAU - angle < DUPLICATE_TOL {
        CircleSlot::PlusOne
    } else if (angle - std::f64::consts::PI).abs() < DUPLICATE_TOL {
        CircleSlot::MinusOne
    } else {
        CircleSlot::Complex(angle)
    }
}

/// Validate a spec and return its normalized form: zero jumps dropped,
/// conjugate partners auto-completed, jumps sorted by location, invariants
/// enforced.
pub fn validate_symbol(spec: &SymbolSpec) -> Result<SymbolSpec, SymbolError> {
    if !(spec.beta0 > 0.0) {
        return Err(SymbolError::NonPositiveBeta0(spec.beta0));
    }
    match spec.representation {
        Representation::Circle => validate_circle(spec),
        Representation::Line => validate_line(spec),
    }
}

fn validate_circle(spec: &SymbolSpec) -> Result<SymbolSpec, SymbolError> {
    // Drop zero jumps, extract angles.
    let mut entries: Vec<(f64, Complex64)> = Vec::new();
    for jump in &spec.jumps {
        let point = match jump.location {
            JumpLocation::Circle(p) => p,
            JumpLocation::Line(_) => {
                return Err(SymbolError::SelfAdjointnessViolation(
                    "line jump location inside a circle-representation spec".into(),
                ))
            }
        };
        if jump.value.norm() == 0.0 {
            continue;
        }
        entries.push((point.angle(), jump.value));
    }

    // Duplicate locations.
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let d = CirclePoint::new(entries[i].0).distance(&CirclePoint::new(entries[j].0));
            if d < DUPLICATE_TOL {
                return Err(SymbolError::DuplicateLocation(format!(
                    "circle angles {} and {} are closer than {DUPLICATE_TOL}",
                    entries[i].0, entries[j].0
                )));
            }
        }
    }

    let mut normalized: Vec<JumpDatum> = Vec::new();
    let mut consumed = vec![false; entries.len()];
    for i in 0..entries.len() {
        if consumed[i] {
            continue;
        }
        let (angle, value) = entries[i];
        match classify_circle_angle(angle) {
            CircleSlot::PlusOne | CircleSlot::MinusOne => {
                let scale = value.norm().max(1.0);
                if value.re.abs() > SELF_ADJOINT_TOL * scale {
                    return Err(SymbolError::SelfAdjointnessViolation(format!(
                        "jump {value} at angle {angle} must be purely imaginary"
                    )));
                }
                let canonical = if matches!(classify_circle_angle(angle), CircleSlot::PlusOne) {
                    0.0
                } else {
                    std::f64::consts::PI
                };
                normalized.push(JumpDatum {
                    location: JumpLocation::circle(canonical),
                    value: Complex64::new(0.0, value.im),
                });
            }
            CircleSlot::Complex(angle) => {
                // Look for the conjugate partner.
                let partner_angle = normalize_angle(-angle);
                let mut partner: Option<usize> = None;
                for (j, &(other_angle, _)) in entries.iter().enumerate() {
                    if j != i
                        && !consumed[j]
                        && CirclePoint::new(other_angle)
                            .distance(&CirclePoint::new(partner_angle))
                            < DUPLICATE_TOL
                    {
                        partner = Some(j);
                        break;
                    }
                }
                let expected = -value.conj();
                if let Some(j) = partner {
                    let found = entries[j].1;
                    let scale = value.norm().max(1.0);
                    if (found - expected).norm() > SELF_ADJOINT_TOL * scale {
                        return Err(SymbolError::SelfAdjointnessViolation(format!(
                            "jump at the conjugate of angle {angle} is {found}, expected {expected}"
                        )));
                    }
                    consumed[j] = true;
                }
                normalized.push(JumpDatum {
                    location: JumpLocation::circle(angle),
                    value,
                });
                normalized.push(JumpDatum {
                    location: JumpLocation::circle(partner_angle),
                    value: expected,
                });
            }
        }
        consumed[i] = true;
    }

    normalized.sort_by(|a, b| {
        let ka = match a.location {
            JumpLocation::Circle(p) => p.angle(),
            _ => unreachable!(),
        };
        let kb = match b.location {
            JumpLocation::Circle(p) => p.angle(),
            _ => unreachable!(),
        };
        ka.partial_cmp(&kb).unwrap()
    });

    Ok(SymbolSpec {
        representation: Representation::Circle,
        jumps: normalized,
        continuous_part: spec.continuous_part.clone(),
        beta0: spec.beta0,
    })
}

fn validate_line(spec: &SymbolSpec) -> Result<SymbolSpec, SymbolError> {
    // Partition into (finite nu, value) entries and the infinity slot.
    let mut finite: Vec<(f64, Complex64)> = Vec::new();
    let mut at_infinity: Option<Complex64> = None;
    for jump in &spec.jumps {
        let point = match jump.location {
            JumpLocation::Line(p) => p,
            JumpLocation::Circle(_) => {
                return Err(SymbolError::SelfAdjointnessViolation(
                    "circle jump location inside a line-representation spec".into(),
                ))
            }
        };
        if jump.value.norm() == 0.0 {
            continue;
        }
        match point {
            LinePoint::Infinity => {
                if at_infinity.is_some() {
                    return Err(SymbolError::DuplicateLocation(
                        "two jumps at infinity".into(),
                    ));
                }
                at_infinity = Some(jump.value);
            }
            LinePoint::Finite(nu) => finite.push((nu, jump.value)),
        }
    }

    for i in 0..finite.len() {
        for j in (i + 1)..finite.len() {
            if (finite[i].0 - finite[j].0).abs() < DUPLICATE_TOL {
                return Err(SymbolError::DuplicateLocation(format!(
                    "line locations {} and {} are closer than {DUPLICATE_TOL}",
                    finite[i].0, finite[j].0
                )));
            }
        }
    }

    let mut normalized: Vec<JumpDatum> = Vec::new();
    if let Some(value) = at_infinity {
        let scale = value.norm().max(1.0);
        if value.re.abs() > SELF_ADJOINT_TOL * scale {
            return Err(SymbolError::SelfAdjointnessViolation(format!(
                "jump {value} at infinity must be purely imaginary"
            )));
        }
        normalized.push(JumpDatum {
            location: JumpLocation::infinity(),
            value: Complex64::new(0.0, value.im),
        });
    }

    let mut consumed = vec![false; finite.len()];
    for i in 0..finite.len() {
        if consumed[i] {
            continue;
        }
        let (nu, value) = finite[i];
        if nu.abs() < DUPLICATE_TOL {
            let scale = value.norm().max(1.0);
            if value.re.abs() > SELF_ADJOINT_TOL * scale {
                return Err(SymbolError::SelfAdjointnessViolation(format!(
                    "jump {value} at the origin must be purely imaginary"
                )));
            }
            normalized.push(JumpDatum {
                location: JumpLocation::line(0.0),
                value: Complex64::new(0.0, value.im),
            });
        } else {
            let mut partner: Option<usize> = None;
            for (j, &(other, _)) in finite.iter().enumerate() {
                if j != i && !consumed[j] && (other + nu).abs() < DUPLICATE_TOL {
                    partner = Some(j);
                    break;
                }
            }
            let expected = -value.conj();
            if let Some(j) = partner {
                let found = finite[j].1;
                let scale = value.norm().max(1.0);
                if (found - expected).norm() > SELF_ADJOINT_TOL * scale {
                    return Err(SymbolError::SelfAdjointnessViolation(format!(
                        "jump at {} is {found}, expected {expected}",
                        -nu
                    )));
                }
                consumed[j] = true;
            }
            normalized.push(JumpDatum { location: JumpLocation::line(nu), value });
            normalized.push(JumpDatum { location: JumpLocation::line(-nu), value: expected });
        }
        consumed[i] = true;
    }

    // Sort: finite ascending, infinity last.
    normalized.sort_by(|a, b| {
        let key = |d: &JumpDatum| match d.location {
            JumpLocation::Line(LinePoint::Finite(nu)) => (0, nu),
            JumpLocation::Line(LinePoint::Infinity) => (1, 0.0),
            _ => unreachable!(),
        };
        let (ta, na) = key(a);
        let (tb, nb) = key(b);
        ta.cmp(&tb).then(na.partial_cmp(&nb).unwrap())
    });

    Ok(SymbolSpec {
        representation: Representation::Line,
        jumps: normalized,
        continuous_part: spec.continuous_part.clone(),
        beta0: spec.beta0,
    })
}

/// Extract the normalized jump amplitudes of a validated circle spec.
pub fn normalize_jumps(spec: &SymbolSpec) -> Result<NormalizedJumps, SymbolError> {
    if spec.representation != Representation::Circle {
        return Err(SymbolError::WrongRepresentation { expected: Representation::Circle });
    }
    let validated = validate_symbol(spec)?;
    let mut nj = NormalizedJumps { kappa_plus: 0.0, kappa_minus: 0.0, complex_pairs: Vec::new() };
    for jump in &validated.jumps {
        let angle = match jump.location {
            JumpLocation::Circle(p) => p.angle(),
            _ => unreachable!(),
        };
        match classify_circle_angle(angle) {
            // kappa(±1) = 2 i kappa_±.
            CircleSlot::PlusOne => nj.kappa_plus = jump.value.im / 2.0,
            CircleSlot::MinusOne => nj.kappa_minus = jump.value.im / 2.0,
            CircleSlot::Complex(angle) => {
                if angle < std::f64::consts::PI {
                    nj.complex_pairs.push(JumpPair {
                        theta: angle,
                        kappa: jump.value.norm() / 2.0,
                        psi: jump.value.arg(),
                    });
                }
            }
        }
    }
    Ok(nj)
}

/// Normalized jump amplitudes of a validated line spec, expressed in circle
/// terms via the inverse Cayley transform so that predictions agree exactly
/// with the circle representation.
///
/// The stored-orientation conventions (see the module docs) give
/// `kappa_+ = -jump(infinity)/(2i)`, `kappa_- = -jump(0)/(2i)`, and per
/// finite pair (taking the negative-location member `b < 0`, which is the
/// image of the upper-half-plane circle point `a`): `kappa(a) = -conj(a) *
/// jump(b)` with `a = e^{i theta}`, `theta = 2 atan(-1/(2b))`.
pub fn normalize_line_jumps(spec: &SymbolSpec) -> Result<NormalizedJumps, SymbolError> {
    if spec.representation != Representation::Line {
        return Err(SymbolError::WrongRepresentation { expected: Representation::Line });
    }
    let validated = validate_symbol(spec)?;
    let mut nj = NormalizedJumps { kappa_plus: 0.0, kappa_minus: 0.0, complex_pairs: Vec::new() };
    for jump in &validated.jumps {
        match jump.location {
            JumpLocation::Line(LinePoint::Infinity) => {
                // value = 2 i * (-kappa_plus)
                nj.kappa_plus = -jump.value.im / 2.0;
            }
            JumpLocation::Line(LinePoint::Finite(nu)) if nu.abs() < DUPLICATE_TOL => {
                nj.kappa_minus = -jump.value.im / 2.0;
            }
            JumpLocation::Line(LinePoint::Finite(b)) if b < 0.0 => {
                let theta = 2.0 * (-1.0 / (2.0 * b)).atan();
                let a = Complex64::from_polar(1.0, theta);
                let kappa = -a.conj() * jump.value;
                nj.complex_pairs.push(JumpPair {
                    theta,
                    kappa: kappa.norm() / 2.0,
                    psi: kappa.arg(),
                });
            }
            _ => {} // positive finite locations: covered by their partner
        }
    }
    nj.complex_pairs.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    Ok(nj)
}

/// Evaluate a symbol at a point of its representation.
///
/// Jump locations themselves are excluded (within an angular / linear
/// distance of `1e-12`).
pub fn evaluate(spec: &SymbolSpec, point: EvalPoint) -> Result<Complex64, SymbolError> {
    match (spec.representation, point) {
        (Representation::Circle, EvalPoint::Circle(p)) => evaluate_circle(spec, p),
        (Representation::Line, EvalPoint::Line(nu)) => evaluate_line(spec, nu),
        _ => Err(SymbolError::RepresentationMismatch(spec.representation)),
    }
}

fn evaluate_circle(spec: &SymbolSpec, point: CirclePoint) -> Result<Complex64, SymbolError> {
    for jump in &spec.jumps {
        if let JumpLocation::Circle(p) = jump.location {
            if point.distance(&p) < ANGLE_EQ_TOL {
                return Err(SymbolError::EvaluationAtJump);
            }
        }
    }
    match &spec.continuous_part {
        ContinuousPart::Preset(preset) => Ok(model_symbol(*preset, EvalPoint::Circle(point))?),
        ContinuousPart::Conformal { base, alpha } => {
            let mu = point.to_complex();
            let m = (mu - *alpha) / (1.0 - *alpha * mu);
            let inner = evaluate_circle(base, CirclePoint::new(m.arg()))?;
            Ok(mu.conj() * m * inner)
        }
        ContinuousPart::None | ContinuousPart::Tail(_) => {
            let nj = normalize_jumps(spec)?;
            let mut value = Complex64::new(0.0, 0.0);
            if nj.kappa_plus != 0.0 {
                value += nj.kappa_plus * models::v_symbol(point, Sign::Plus)?;
            }
            if nj.kappa_minus != 0.0 {
                value += nj.kappa_minus * models::v_symbol(point, Sign::Minus)?;
            }
            for pair in &nj.complex_pairs {
                // The two-jump model with jump 2 i e^{i (phi - theta)} at
                // e^{i theta} carries kappa(a) = 2 kappa e^{i psi} for
                // phi = psi + theta - pi/2.
                let phi = pair.psi + pair.theta - std::f64::consts::FRAC_PI_2;
                let preset = ModelPreset::OmegaPhiTheta { phi, theta: pair.theta };
                value += pair.kappa * model_symbol(preset, EvalPoint::Circle(point))?;
            }
            if let ContinuousPart::Tail(coeffs) = &spec.continuous_part {
                let mu = point.to_complex();
                let mut power = Complex64::new(1.0, 0.0);
                for &c in coeffs {
                    value += c * power;
                    power *= mu;
                }
            }
            Ok(value)
        }
        ContinuousPart::CayleyFromCircle(_) => Err(SymbolError::RepresentationMismatch(
            Representation::Circle,
        )),
    }
}

fn evaluate_line(spec: &SymbolSpec, nu: f64) -> Result<Complex64, SymbolError> {
    for jump in &spec.jumps {
        if let JumpLocation::Line(LinePoint::Finite(b)) = jump.location {
            if (nu - b).abs() < ANGLE_EQ_TOL {
                return Err(SymbolError::EvaluationAtJump);
            }
        }
    }
    match &spec.continuous_part {
        ContinuousPart::Preset(preset) => Ok(model_symbol(*preset, EvalPoint::Line(nu))?),
        ContinuousPart::CayleyFromCircle(base) => {
            let mu = Complex64::new(nu, -0.5) / Complex64::new(nu, 0.5);
            let inner = evaluate_circle(base, CirclePoint::new(mu.arg()))?;
            Ok(-mu * inner)
        }
        ContinuousPart::None => {
            let nj = normalize_line_jumps(spec)?;
            let mut value = Complex64::new(0.0, 0.0);
            if nj.kappa_plus != 0.0 {
                value +=
                    nj.kappa_plus * model_symbol(ModelPreset::Psi0, EvalPoint::Line(nu))?;
            }
            if nj.kappa_minus != 0.0 {
                value +=
                    nj.kappa_minus * model_symbol(ModelPreset::PsiInf, EvalPoint::Line(nu))?;
            }
            // Finite pairs: take the stored value J at the positive location
            // b > 0; the model kappa * PsiPhiB(phi, b) has stored jump
            // -2 kappa e^{i phi} there, so kappa = |J|/2, phi = arg(J) + pi.
            for jump in &nj_line_positive_entries(spec)? {
                let (b, j_val) = *jump;
                let kappa = j_val.norm() / 2.0;
                let phi = normalize_angle(j_val.arg() + std::f64::consts::PI);
                value += kappa
                    * model_symbol(ModelPreset::PsiPhiB { phi, b }, EvalPoint::Line(nu))?;
            }
            Ok(value)
        }
        ContinuousPart::Tail(_) | ContinuousPart::Conformal { .. } => Err(
            SymbolError::RepresentationMismatch(Representation::Line),
        ),
    }
}

/// Finite positive-location jump entries of a validated line spec.
fn nj_line_positive_entries(spec: &SymbolSpec) -> Result<Vec<(f64, Complex64)>, SymbolError> {
    let validated = validate_symbol(spec)?;
    let mut out = Vec::new();
    for jump in &validated.jumps {
        if let JumpLocation::Line(LinePoint::Finite(b)) = jump.location {
            if b > DUPLICATE_TOL {
                out.push((b, jump.value));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn circle_jump(angle: f64, value: Complex64) -> JumpDatum {
        JumpDatum { location: JumpLocation::circle(angle), value }
    }

    #[test]
    fn circle_point_normalizes_and_measures_distance() {
        let p = CirclePoint::new(-0.5);
        assert!((p.angle() - (std::f64::consts::TAU - 0.5)).abs() < 1e-15);
        let q = CirclePoint::new(0.5);
        assert!((p.distance(&q) - 1.0).abs() < 1e-15);
        assert_eq!(CirclePoint::new(std::f64::consts::TAU).angle(), 0.0);
    }

    #[test]
    fn validate_accepts_imaginary_jump_at_one() {
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![circle_jump(0.0, Complex64::new(0.0, 2.0))],
            1.0,
        );
        let v = validate_symbol(&spec).unwrap();
        assert_eq!(v.jumps().len(), 1);
        let nj = normalize_jumps(&v).unwrap();
        assert_eq!(nj.kappa_plus, 1.0);
        assert_eq!(nj.kappa_minus, 0.0);
        assert!(nj.complex_pairs.is_empty());
    }

    #[test]
    fn validate_rejects_real_jump_at_one() {
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![circle_jump(0.0, Complex64::new(3.0, 0.0))],
            1.0,
        );
        assert!(matches!(
            validate_symbol(&spec),
            Err(SymbolError::SelfAdjointnessViolation(_))
        ));
    }

    #[test]
    fn validate_autocompletes_conjugate_partner() {
        let kappa = 2.0 * Complex64::from_polar(1.0, 0.7);
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![circle_jump(PI / 3.0, kappa)],
            1.0,
        );
        let v = validate_symbol(&spec).unwrap();
        assert_eq!(v.jumps().len(), 2);
        let partner = v
            .jumps()
            .iter()
            .find(|j| match j.location {
                JumpLocation::Circle(p) => (p.angle() - (2.0 * PI - PI / 3.0)).abs() < 1e-12,
                _ => false,
            })
            .expect("auto-completed partner");
        assert!((partner.value - (-kappa.conj())).norm() < 1e-15);
    }

    #[test]
    fn validate_rejects_wrong_partner_value() {
        let kappa = 2.0 * Complex64::from_polar(1.0, 0.7);
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(PI / 3.0, kappa),
                circle_jump(-PI / 3.0, kappa), // should be -conj(kappa)
            ],
            1.0,
        );
        assert!(matches!(
            validate_symbol(&spec),
            Err(SymbolError::SelfAdjointnessViolation(_))
        ));
    }

    #[test]
    fn validate_rejects_duplicates_and_bad_beta0() {
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(1.0, Complex64::new(1.0, 1.0)),
                circle_jump(1.0 + 1e-10, Complex64::new(1.0, -1.0)),
            ],
            1.0,
        );
        assert!(matches!(validate_symbol(&spec), Err(SymbolError::DuplicateLocation(_))));

        let spec = SymbolSpec::from_jump_data(Representation::Circle, vec![], 0.0);
        assert!(matches!(validate_symbol(&spec), Err(SymbolError::NonPositiveBeta0(_))));
    }

    #[test]
    fn validate_drops_zero_jumps() {
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(0.0, Complex64::new(0.0, 0.0)),
                circle_jump(PI, Complex64::new(0.0, 1.0)),
            ],
            1.0,
        );
        let v = validate_symbol(&spec).unwrap();
        assert_eq!(v.jumps().len(), 1);
    }

    #[test]
    fn normalize_jumps_examples() {
        // {at -1: i} -> kappa_minus = 1/2.
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![circle_jump(PI, Complex64::new(0.0, 1.0))],
            1.0,
        );
        let nj = normalize_jumps(&spec).unwrap();
        assert_eq!(nj.kappa_minus, 0.5);

        // {at i: 2 e^{i pi/4}, at -i: partner} -> (theta=pi/2, kappa=1, psi=pi/4).
        let kappa = 2.0 * Complex64::from_polar(1.0, PI / 4.0);
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(PI / 2.0, kappa),
                circle_jump(1.5 * PI, -kappa.conj()),
            ],
            1.0,
        );
        let nj = normalize_jumps(&spec).unwrap();
        assert_eq!(nj.complex_pairs.len(), 1);
        let pair = nj.complex_pairs[0];
        assert!((pair.theta - PI / 2.0).abs() < 1e-15);
        assert!((pair.kappa - 1.0).abs() < 1e-15);
        assert!((pair.psi - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn normalization_round_trip() {
        let kappa = 2.0 * Complex64::from_polar(1.3, 0.9);
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(0.0, Complex64::new(0.0, 2.0)),
                circle_jump(PI, Complex64::new(0.0, -0.8)),
                circle_jump(2.0, kappa),
            ],
            1.0,
        );
        let validated = validate_symbol(&spec).unwrap();
        let nj = normalize_jumps(&validated).unwrap();
        let rebuilt = nj.to_circle_jumps();
        assert_eq!(rebuilt.len(), validated.jumps().len());
        for (a, b) in validated.jumps().iter().zip({
            let mut r = rebuilt.clone();
            r.sort_by(|x, y| {
                let ka = match x.location {
                    JumpLocation::Circle(p) => p.angle(),
                    _ => unreachable!(),
                };
                let kb = match y.location {
                    JumpLocation::Circle(p) => p.angle(),
                    _ => unreachable!(),
                };
                ka.partial_cmp(&kb).unwrap()
            });
            r
        }) {
            assert!((a.value - b.value).norm() < 1e-12, "{:?} vs {:?}", a, b);
        }
    }

    #[test]
    fn evaluate_preset_examples() {
        // omega_+ at psi = pi is 0.
        let spec = SymbolSpec::from_preset(ModelPreset::OmegaPlus);
        let v = evaluate(&spec, EvalPoint::circle(PI)).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
        // v at mu = 1 is 0 (VMinus vanishes at +1).
        let spec = SymbolSpec::from_preset(ModelPreset::VMinus);
        let v = evaluate(&spec, EvalPoint::circle(0.0)).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
        // Self-adjointness at e^{i 0.3}.
        let spec = SymbolSpec::from_preset(ModelPreset::OmegaPhi { phi: 0.8 });
        let a = evaluate(&spec, EvalPoint::circle(0.3)).unwrap();
        let b = evaluate(&spec, EvalPoint::circle(-0.3)).unwrap();
        assert!((b - a.conj()).norm() < 1e-12);
        // Evaluation at a jump errors.
        let spec = SymbolSpec::from_preset(ModelPreset::VMinus);
        assert!(matches!(
            evaluate(&spec, EvalPoint::circle(PI)),
            Err(SymbolError::EvaluationAtJump)
        ));
        // Wrong-representation point.
        assert!(matches!(
            evaluate(&spec, EvalPoint::Line(0.5)),
            Err(SymbolError::RepresentationMismatch(_))
        ));
    }

    #[test]
    fn synthesized_spec_reproduces_requested_jumps() {
        // Build a spec with kappa_+ = 1, kappa_- = 0.5 and a pair at
        // theta = pi/3 with kappa_1 = 0.25, psi_1 = 0.4; probe each jump.
        let kappa_pair = 2.0 * 0.25 * Complex64::from_polar(1.0, 0.4);
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(0.0, Complex64::new(0.0, 2.0)),
                circle_jump(PI, Complex64::new(0.0, 1.0)),
                circle_jump(PI / 3.0, kappa_pair),
            ],
            1.0,
        );
        let spec = validate_symbol(&spec).unwrap();
        let eps = 1e-8;
        let probe = |at: f64| {
            let above = evaluate(&spec, EvalPoint::circle(at + eps)).unwrap();
            let below = evaluate(&spec, EvalPoint::circle(at - eps)).unwrap();
            above - below
        };
        assert!((probe(0.0) - Complex64::new(0.0, 2.0)).norm() < 1e-5);
        assert!((probe(PI) - Complex64::new(0.0, 1.0)).norm() < 1e-5);
        assert!((probe(PI / 3.0) - kappa_pair).norm() < 1e-5);
        // Conjugate location carries -conj(kappa).
        assert!((probe(-PI / 3.0) + kappa_pair.conj()).norm() < 1e-5);
    }

    #[test]
    fn tail_contributes_polynomial_part() {
        let spec = SymbolSpec::with_carrier(
            Representation::Circle,
            vec![],
            ContinuousPart::Tail(vec![0.25, -1.5, 0.5]),
            1.0,
        );
        let angle = 1.1;
        let mu = Complex64::from_polar(1.0, angle);
        let want = 0.25 - 1.5 * mu + 0.5 * mu * mu;
        let got = evaluate(&spec, EvalPoint::circle(angle)).unwrap();
        assert!((got - want).norm() < 1e-15);
    }

    #[test]
    fn line_preset_jump_tables_are_self_adjoint() {
        for preset in [
            ModelPreset::Psi0,
            ModelPreset::PsiInf,
            ModelPreset::PsiPhiB { phi: 0.3, b: 2.0 },
        ] {
            let spec = SymbolSpec::from_preset(preset);
            let v = validate_symbol(&spec).unwrap();
            assert_eq!(v.jumps().len(), spec.jumps().len(), "{preset:?}");
        }
    }

    #[test]
    fn synthesized_line_spec_matches_preset_models() {
        // A line spec holding exactly the PsiPhiB jump table must evaluate to
        // the PsiPhiB model itself (same canonical carrier).
        let (phi, b) = (0.35, 1.7);
        let preset = ModelPreset::PsiPhiB { phi, b };
        let synth = SymbolSpec::from_jump_data(
            Representation::Line,
            preset_jump_data(preset),
            1.0,
        );
        for nu in [-3.1, -0.4, 0.9, 5.0] {
            let a = evaluate(&synth, EvalPoint::Line(nu)).unwrap();
            let want = model_symbol(preset, EvalPoint::Line(nu)).unwrap();
            assert!((a - want).norm() < 1e-13, "nu = {nu}: {a} vs {want}");
        }
        // Same for the origin and infinity carriers.
        let synth0 = SymbolSpec::from_jump_data(
            Representation::Line,
            preset_jump_data(ModelPreset::PsiInf),
            1.0,
        );
        let v = evaluate(&synth0, EvalPoint::Line(0.4)).unwrap();
        let want = model_symbol(ModelPreset::PsiInf, EvalPoint::Line(0.4)).unwrap();
        assert!((v - want).norm() < 1e-14);
        let synth_inf = SymbolSpec::from_jump_data(
            Representation::Line,
            preset_jump_data(ModelPreset::Psi0),
            1.0,
        );
        let v = evaluate(&synth_inf, EvalPoint::Line(2.0)).unwrap();
        let want = model_symbol(ModelPreset::Psi0, EvalPoint::Line(2.0)).unwrap();
        assert!((v - want).norm() < 1e-14);
    }

    #[test]
    fn line_self_adjointness_of_synthesized_specs() {
        let spec = SymbolSpec::from_jump_data(
            Representation::Line,
            vec![
                JumpDatum {
                    location: JumpLocation::infinity(),
                    value: Complex64::new(0.0, -2.0),
                },
                JumpDatum {
                    location: JumpLocation::line(0.0),
                    value: Complex64::new(0.0, -1.0),
                },
                JumpDatum {
                    location: JumpLocation::line(1.5),
                    value: Complex64::from_polar(0.5, 2.2),
                },
            ],
            1.0,
        );
        let spec = validate_symbol(&spec).unwrap();
        for nu in [0.3, 1.1, 4.0, 9.5] {
            let a = evaluate(&spec, EvalPoint::Line(nu)).unwrap();
            let b = evaluate(&spec, EvalPoint::Line(-nu)).unwrap();
            assert!((b - a.conj()).norm() < 1e-12, "nu = {nu}");
        }
    }

    #[test]
    fn preset_jump_tables_match_probed_jumps() {
        // Circle presets: probe one-sided limits around each tabulated jump
        // and compare with the stored value.
        let presets = [
            ModelPreset::VPlus,
            ModelPreset::VMinus,
            ModelPreset::OmegaPlus,
            ModelPreset::OmegaMinus,
            ModelPreset::OmegaPhi { phi: 0.6 },
            ModelPreset::OmegaPhiTheta { phi: 0.6, theta: 2.0 },
        ];
        let eps = 1e-8;
        for preset in presets {
            let spec = SymbolSpec::from_preset(preset);
            for jump in spec.jumps() {
                let angle = match jump.location {
                    JumpLocation::Circle(p) => p.angle(),
                    _ => unreachable!(),
                };
                let above = evaluate(&spec, EvalPoint::circle(angle + eps)).unwrap();
                let below = evaluate(&spec, EvalPoint::circle(angle - eps)).unwrap();
                let probed = above - below;
                assert!(
                    (probed - jump.value).norm() < 1e-4,
                    "{preset:?} at angle {angle}: probed {probed}, stored {}",
                    jump.value
                );
            }
        }
        // Line presets with finite jumps.
        let spec = SymbolSpec::from_preset(ModelPreset::PsiPhiB { phi: 0.9, b: 1.2 });
        for jump in spec.jumps() {
            let b = match jump.location {
                JumpLocation::Line(LinePoint::Finite(b)) => b,
                _ => unreachable!(),
            };
            let probed = evaluate(&spec, EvalPoint::Line(b + eps)).unwrap()
                - evaluate(&spec, EvalPoint::Line(b - eps)).unwrap();
            assert!(
                (probed - jump.value).norm() < 1e-6,
                "PsiPhiB at {b}: probed {probed}, stored {}",
                jump.value
            );
        }
    }
}
