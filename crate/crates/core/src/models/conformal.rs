//! Conformal (Möbius) substitution acting on circle symbols.
//!
//! For `alpha in (-1, 1)` the substitution
//!
//! ```text
//! omega^(alpha)(mu) = mu^{-1} ((mu - alpha)/(1 - alpha mu)) omega((mu - alpha)/(1 - alpha mu))
//! ```
//!
//! maps Hankel symbols to Hankel symbols, preserves self-adjointness, fixes
//! the points `±1`, and moves every jump location by the inverse Möbius map
//! `a0 -> (a0 + alpha)/(1 + alpha a0)` while multiplying the jump value by the
//! continuous prefactor.  It is how the model pair of jumps at `±i` is carried
//! to an arbitrary conjugate pair `e^{±i theta}`.

use num_complex::Complex64;

use crate::models::ModelError;
use crate::symbols::{ContinuousPart, JumpLocation, Representation, SymbolSpec};

/// Apply the conformal substitution with parameter `alpha` to a circle-symbol
/// spec, relocating its jump table and wrapping its evaluator.
pub fn conformal_transform_symbol(spec: &SymbolSpec, alpha: f64) -> Result<SymbolSpec, ModelError> {
    if !alpha.is_finite() || alpha <= -1.0 || alpha >= 1.0 {
        return Err(ModelError::AlphaOutOfRange(alpha));
    }
    assert_eq!(
        spec.representation(),
        Representation::Circle,
        "conformal substitution acts on circle-representation symbols"
    );

    let mut jumps = Vec::with_capacity(spec.jumps().len());
    for jump in spec.jumps() {
        let angle = match jump.location {
            JumpLocation::Circle(p) => p.angle(),
            JumpLocation::Line(_) => unreachable!("circle spec carries circle jump locations"),
        };
        let a0 = Complex64::new(angle.cos(), angle.sin());
        let a = (a0 + alpha) / (1.0 + alpha * a0);
        // Unit modulus up to rounding; the prefactor at the new location is
        // a^{-1} a0 = conj(a) a0.
        let value = a.conj() * a0 * jump.value;
        jumps.push(crate::symbols::JumpDatum {
            location: JumpLocation::circle(a.arg()),
            value,
        });
    }

    Ok(SymbolSpec::with_carrier(
        Representation::Circle,
        jumps,
        ContinuousPart::Conformal { base: Box::new(spec.clone()), alpha },
        spec.beta0(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::ModelPreset;
    use crate::symbols::{evaluate, EvalPoint};
    use std::f64::consts::PI;

    #[test]
    fn rejects_alpha_outside_open_interval() {
        let spec = SymbolSpec::from_preset(ModelPreset::OmegaPhi { phi: 0.4 });
        assert!(matches!(
            conformal_transform_symbol(&spec, 1.0),
            Err(ModelError::AlphaOutOfRange(_))
        ));
        assert!(matches!(
            conformal_transform_symbol(&spec, -1.2),
            Err(ModelError::AlphaOutOfRange(_))
        ));
    }

    #[test]
    fn alpha_zero_is_the_identity_substitution() {
        let spec = SymbolSpec::from_preset(ModelPreset::OmegaPhi { phi: 0.4 });
        let moved = conformal_transform_symbol(&spec, 0.0).unwrap();
        for angle in [0.3, 2.0, 5.5] {
            let p = EvalPoint::circle(angle);
            let a = evaluate(&spec, p).unwrap();
            let b = evaluate(&moved, p).unwrap();
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn jump_at_i_lands_at_e_i_theta() {
        let theta = PI / 3.0;
        let alpha = (PI / 4.0 - theta / 2.0).tan();
        let spec = SymbolSpec::from_preset(ModelPreset::OmegaPhi { phi: 0.4 });
        let moved = conformal_transform_symbol(&spec, alpha).unwrap();
        let angles: Vec<f64> = moved
            .jumps()
            .iter()
            .map(|j| match j.location {
                JumpLocation::Circle(p) => p.angle(),
                _ => unreachable!(),
            })
            .collect();
        assert!(
            angles.iter().any(|&a| (a - theta).abs() < 1e-12),
            "angles {angles:?} missing theta = {theta}"
        );
        assert!(angles.iter().any(|&a| (a - (2.0 * PI - theta)).abs() < 1e-12));
    }

    #[test]
    fn matches_the_prebuilt_two_jump_preset() {
        // The conformal move of omega_phi coincides with the OmegaPhiTheta
        // preset both in jump data and pointwise values.
        let (phi, theta) = (0.4, PI / 3.0);
        let alpha = (PI / 4.0 - theta / 2.0).tan();
        let moved =
            conformal_transform_symbol(&SymbolSpec::from_preset(ModelPreset::OmegaPhi { phi }), alpha)
                .unwrap();
        let preset = ModelPreset::OmegaPhiTheta { phi, theta };
        for angle in [0.2, 1.5, 3.3, 5.0] {
            let p = EvalPoint::circle(angle);
            let a = evaluate(&moved, p).unwrap();
            let b = crate::models::model_symbol(preset, p).unwrap();
            assert!((a - b).norm() < 1e-12, "angle {angle}: {a} vs {b}");
        }
        // Jump value at e^{i theta} is 2 i e^{i (phi - theta)}.
        let jump = moved
            .jumps()
            .iter()
            .find(|j| match j.location {
                JumpLocation::Circle(p) => (p.angle() - theta).abs() < 1e-12,
                _ => false,
            })
            .expect("jump at theta");
        let want = 2.0 * Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, phi - theta);
        assert!((jump.value - want).norm() < 1e-12, "{} vs {want}", jump.value);
    }

    #[test]
    fn fixed_points_keep_their_jump_values() {
        let spec = SymbolSpec::from_preset(ModelPreset::VPlus);
        let moved = conformal_transform_symbol(&spec, 0.35).unwrap();
        let jump = &moved.jumps()[0];
        match jump.location {
            JumpLocation::Circle(p) => assert!(p.angle().abs() < 1e-12),
            _ => unreachable!(),
        }
        assert!((jump.value - Complex64::new(0.0, 2.0)).norm() < 1e-12);
    }
}
