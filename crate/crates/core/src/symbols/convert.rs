//! Circle-to-line change of variables for symbol specs.
//!
//! The Cayley transform `mu(nu) = (nu - i/2)/(nu + i/2)` identifies the unit
//! circle with the extended real line; a circle symbol `omega` transplants to
//! the line symbol
//!
//! ```text
//! psi(nu) = -mu(nu) omega(mu(nu)) .
//! ```
//!
//! Jump locations move accordingly: `+1` goes to infinity, `-1` to the
//! origin, and `a = e^{i theta}` with `theta in (0, pi)` to the negative
//! half-line point `b = (i/2)(1 + a)/(1 - a) = -cot(theta/2)/2`.  The stored
//! jump values follow the translation table
//!
//! ```text
//! at infinity:      -kappa(+1)
//! at the origin:    -kappa(-1)
//! at finite b:      -a kappa(a)      (and  conj(a) conj(kappa(a)) at -b)
//! ```
//!
//! whose orientation conventions are spelled out in the module docs of
//! [`crate::symbols`].  [`super::normalize_line_jumps`] inverts this table,
//! so normalized amplitudes — and every spectral prediction downstream —
//! agree exactly between a circle spec and its converted image.

use num_complex::Complex64;

use super::{
    validate_symbol, ContinuousPart, JumpDatum, JumpLocation, Representation, SymbolError,
    SymbolSpec,
};

/// Transplant a validated circle spec to the line representation.
///
/// The output carries the translated jump table and evaluates through the
/// Cayley substitution of the original symbol; jump count is preserved.
pub fn circle_to_line(spec: &SymbolSpec) -> Result<SymbolSpec, SymbolError> {
    if spec.representation() != Representation::Circle {
        return Err(SymbolError::WrongRepresentation { expected: Representation::Circle });
    }
    let validated = validate_symbol(spec)?;

    let mut jumps = Vec::with_capacity(validated.jumps().len());
    for jump in validated.jumps() {
        let angle = match jump.location {
            JumpLocation::Circle(p) => p.angle(),
            JumpLocation::Line(_) => unreachable!("circle spec carries circle jump locations"),
        };
        if angle == 0.0 {
            jumps.push(JumpDatum { location: JumpLocation::infinity(), value: -jump.value });
        } else if angle == std::f64::consts::PI {
            jumps.push(JumpDatum { location: JumpLocation::line(0.0), value: -jump.value });
        } else {
            // b(theta) = -cot(theta/2)/2; negative for the upper half-circle.
            let b = -0.5 / (0.5 * angle).tan();
            let a = Complex64::from_polar(1.0, angle);
            jumps.push(JumpDatum { location: JumpLocation::line(b), value: -a * jump.value });
        }
    }
    jumps.sort_by(|x, y| {
        let key = |d: &JumpDatum| match d.location {
            JumpLocation::Line(super::LinePoint::Finite(nu)) => (0, nu),
            JumpLocation::Line(super::LinePoint::Infinity) => (1, 0.0),
            _ => unreachable!(),
        };
        let (tx, nx) = key(x);
        let (ty, ny) = key(y);
        tx.cmp(&ty).then(nx.partial_cmp(&ny).unwrap())
    });

    Ok(SymbolSpec::with_carrier(
        Representation::Line,
        jumps,
        ContinuousPart::CayleyFromCircle(Box::new(validated.clone())),
        validated.beta0(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::ModelPreset;
    use crate::symbols::{
        evaluate, normalize_jumps, normalize_line_jumps, EvalPoint, LinePoint,
    };
    use std::f64::consts::PI;

    fn circle_jump(angle: f64, value: Complex64) -> JumpDatum {
        JumpDatum { location: JumpLocation::circle(angle), value }
    }

    fn find_line_jump(spec: &SymbolSpec, want: LinePoint) -> Complex64 {
        spec.jumps()
            .iter()
            .find(|j| match (j.location, want) {
                (JumpLocation::Line(LinePoint::Infinity), LinePoint::Infinity) => true,
                (JumpLocation::Line(LinePoint::Finite(b)), LinePoint::Finite(w)) => {
                    (b - w).abs() < 1e-12
                }
                _ => false,
            })
            .map(|j| j.value)
            .unwrap_or_else(|| panic!("no jump at {want:?} in {:?}", spec.jumps()))
    }

    #[test]
    fn translation_table_examples() {
        // kappa(i) = 2 -> stored (-1/2, -2i), partner (1/2, 2i)... the
        // partner at -i carries -conj(2) = -2, landing at +1/2 with value
        // conj(i) * ... = -(-i)(-2) = -2i conjugated; check both entries.
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![circle_jump(PI / 2.0, Complex64::new(2.0, 0.0))],
            1.0,
        );
        let line = circle_to_line(&spec).unwrap();
        assert_eq!(line.jumps().len(), 2);
        let at_minus_half = find_line_jump(&line, LinePoint::Finite(-0.5));
        assert!((at_minus_half - Complex64::new(0.0, -2.0)).norm() < 1e-14);
        let at_plus_half = find_line_jump(&line, LinePoint::Finite(0.5));
        assert!((at_plus_half - Complex64::new(0.0, -2.0)).norm() < 1e-14);

        // kappa(1) = 2i -> (infinity, -2i); kappa(-1) = 2i -> (0, -2i).
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(0.0, Complex64::new(0.0, 2.0)),
                circle_jump(PI, Complex64::new(0.0, 2.0)),
            ],
            1.0,
        );
        let line = circle_to_line(&spec).unwrap();
        assert_eq!(line.jumps().len(), 2);
        assert!(
            (find_line_jump(&line, LinePoint::Infinity) - Complex64::new(0.0, -2.0)).norm()
                < 1e-14
        );
        assert!(
            (find_line_jump(&line, LinePoint::Finite(0.0)) - Complex64::new(0.0, -2.0)).norm()
                < 1e-14
        );
    }

    #[test]
    fn jump_count_is_preserved_and_output_validates() {
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(0.0, Complex64::new(0.0, 2.0)),
                circle_jump(PI, Complex64::new(0.0, -1.0)),
                circle_jump(PI / 3.0, Complex64::from_polar(0.5, 0.4)),
            ],
            1.0,
        );
        let validated = validate_symbol(&spec).unwrap();
        let line = circle_to_line(&validated).unwrap();
        assert_eq!(line.jumps().len(), validated.jumps().len());
        let revalidated = validate_symbol(&line).unwrap();
        assert_eq!(revalidated.jumps().len(), line.jumps().len());
    }

    #[test]
    fn transplanted_symbol_is_line_self_adjoint() {
        let spec = SymbolSpec::from_preset(ModelPreset::OmegaPhi { phi: 0.8 });
        let line = circle_to_line(&spec).unwrap();
        for nu in [0.25, 0.8, 2.0, 7.5] {
            let a = evaluate(&line, EvalPoint::Line(nu)).unwrap();
            let b = evaluate(&line, EvalPoint::Line(-nu)).unwrap();
            assert!((b - a.conj()).norm() < 1e-12, "nu = {nu}");
        }
    }

    #[test]
    fn transplant_evaluates_to_minus_mu_omega_mu() {
        let spec = SymbolSpec::from_preset(ModelPreset::VPlus);
        let line = circle_to_line(&spec).unwrap();
        for nu in [-4.0, -1.0, 0.3, 1.7, 11.0] {
            let mu = Complex64::new(nu, -0.5) / Complex64::new(nu, 0.5);
            let omega = evaluate(&spec, EvalPoint::circle(mu.arg())).unwrap();
            let want = -mu * omega;
            let got = evaluate(&line, EvalPoint::Line(nu)).unwrap();
            assert!((got - want).norm() < 1e-14, "nu = {nu}");
        }
    }

    #[test]
    fn normalization_is_representation_invariant() {
        let kappa = 2.0 * 0.7 * Complex64::from_polar(1.0, -0.9);
        let spec = SymbolSpec::from_jump_data(
            Representation::Circle,
            vec![
                circle_jump(0.0, Complex64::new(0.0, 2.4)),
                circle_jump(PI, Complex64::new(0.0, 0.6)),
                circle_jump(2.0 * PI / 5.0, kappa),
            ],
            1.0,
        );
        let circle_nj = normalize_jumps(&spec).unwrap();
        let line_nj = normalize_line_jumps(&circle_to_line(&spec).unwrap()).unwrap();
        assert!((circle_nj.kappa_plus - line_nj.kappa_plus).abs() < 1e-13);
        assert!((circle_nj.kappa_minus - line_nj.kappa_minus).abs() < 1e-13);
        assert_eq!(circle_nj.complex_pairs.len(), line_nj.complex_pairs.len());
        for (c, l) in circle_nj.complex_pairs.iter().zip(line_nj.complex_pairs.iter()) {
            assert!((c.theta - l.theta).abs() < 1e-12, "{c:?} vs {l:?}");
            assert!((c.kappa - l.kappa).abs() < 1e-13, "{c:?} vs {l:?}");
            // Phases compared modulo 2 pi.
            let d = (c.psi - l.psi).rem_euclid(std::f64::consts::TAU);
            assert!(d.min(std::f64::consts::TAU - d) < 1e-12, "{c:?} vs {l:?}");
        }
    }
}
