//! Conical Legendre functions `P_{-1/2 + i tau}(x)` for `x >= 1`, the
//! eigenfunctions of the explicitly diagonalizable integral model operator.
//!
//! The production route evaluates the classical integral representation
//!
//! ```text
//! P_{-1/2+i tau}(cosh a) = (2/pi) ∫_0^a cos(tau s) / sqrt(2 cosh a - 2 cosh s) ds
//! ```
//!
//! after the substitution `s = a - u^2`, which removes the inverse-square-root
//! endpoint singularity and leaves a smooth integrand on `[0, sqrt(a)]`.  Two
//! independent checks are kept alongside: a raw adaptive route that attacks
//! the singular endpoint directly ([`legendre_conical_raw`]) and the
//! oscillatory large-`x` expansion ([`legendre_conical_asymptotic`]).

use num_complex::Complex64;

use crate::models::special::gamma_complex;
use crate::quad;

/// Conical Legendre function `P_{-1/2 + i tau}(x)`; requires `tau >= 0`,
/// `x >= 1`.  Real-valued.
pub fn legendre_conical(tau: f64, x: f64) -> f64 {
    assert!(tau >= 0.0, "conical parameter must be non-negative, got {tau}");
    assert!(x >= 1.0, "argument must satisfy x >= 1, got {x}");
    let a = x.acosh();
    if a == 0.0 {
        return 1.0;
    }
    let root_a = a.sqrt();
    // Smooth integrand after s = a - u^2:  2 cos(tau (a - u^2)) / sqrt(h(u)),
    // h(u) = (2 cosh a - 2 cosh(a - u^2)) / u^2, h(0) = 2 sinh a.
    let cosh_a = a.cosh();
    let sinh_a = a.sinh();
    let integrand = |u: f64| {
        let eps = u * u;
        let h = if eps < 1e-3 * (1.0 + a) {
            // Series for the cancelling difference.
            2.0 * sinh_a - cosh_a * eps + sinh_a * eps * eps / 3.0
                - cosh_a * eps * eps * eps / 12.0
        } else {
            (2.0 * cosh_a - 2.0 * (a - eps).cosh()) / eps
        };
        2.0 * (tau * (a - eps)).cos() / h.sqrt()
    };
    // Panel count follows the total oscillation tau * a of the cosine factor.
    let panels = 4 + (tau * a / 2.0).ceil() as usize;
    let value = quad::panel_gauss_legendre(&integrand, 0.0, root_a, panels, 24);
    value * 2.0 / std::f64::consts::PI
}

/// Raw reference route: adaptive quadrature of the untransformed integral up
/// to a sliver before the singular endpoint, plus the analytic value of the
/// sliver.  Independent of the substitution used by [`legendre_conical`].
pub fn legendre_conical_raw(tau: f64, x: f64) -> Result<f64, quad::NonConvergence> {
    assert!(tau >= 0.0 && x >= 1.0);
    let a = x.acosh();
    if a == 0.0 {
        return Ok(1.0);
    }
    let cosh_a = a.cosh();
    // The sliver cannot be made arbitrarily thin: the direct difference
    // 2 cosh a - 2 cosh s carries absolute rounding noise of order
    // eps * cosh a, so below an offset of roughly a * 1e-12 the integrand is
    // dominated by that noise and the error estimate (rightly) refuses to
    // drop.  At a * 1e-10 the noise is a 1e-6 relative ripple on the last
    // interval while the neglected sliver corrections are O(delta^{3/2}),
    // both far below the tolerance of this reference route.
    let delta = a * 1e-10;
    let body = quad::adaptive(
        &|s: f64| (tau * s).cos() / (2.0 * cosh_a - 2.0 * s.cosh()).sqrt(),
        0.0,
        a - delta,
        1e-12,
        40_000,
    )?;
    // Near s = a: integrand ~ cos(tau a) / sqrt(2 sinh(a) (a - s)).
    let sliver = (tau * a).cos() * 2.0 * delta.sqrt() / (2.0 * a.sinh()).sqrt();
    Ok((body.value + sliver) * 2.0 / std::f64::consts::PI)
}

/// Large-argument expansion
/// `P_{-1/2+i tau}(x) ≈ Re[ C(tau) x^{-1/2+i tau} (1 + g1 x^-2 + g2 x^-4) ]`
/// with `C(tau) = Gamma(i tau) 2^{1/2+i tau} / (sqrt(pi) Gamma(1/2+i tau))`.
///
/// Requires `tau > 0`.  Used as a cross-check at large `x` and for tail
/// compensation in the model-operator identity residual.
pub fn legendre_conical_asymptotic(tau: f64, x: f64) -> f64 {
    (asymptotic_complex_terms(tau, x).0).re
}

/// The complex amplitude `C(tau) x^{-1/2+i tau} (1 + g1 x^-2 + g2 x^-4)` and
/// the bare coefficient `C(tau)`, for reuse by tail integrals.
pub(crate) fn asymptotic_complex_terms(tau: f64, x: f64) -> (Complex64, Complex64) {
    assert!(tau > 0.0, "asymptotic form needs tau > 0, got {tau}");
    let i = Complex64::new(0.0, 1.0);
    let c = gamma_complex(i * tau) / (std::f64::consts::PI.sqrt() * gamma_complex(0.5 + i * tau))
        * Complex64::new(2.0, 0.0).powc(0.5 + i * tau);
    let (g1, g2) = hypergeometric_corrections(tau);
    let x2 = x * x;
    let series = 1.0 + g1 / x2 + g2 / (x2 * x2);
    let xc = Complex64::new(x, 0.0).powc(-0.5 + i * tau);
    (c * xc * series, c)
}

/// First two coefficients of `F(1/4 - i tau/2, 3/4 - i tau/2; 1 - i tau; x^-2)`.
pub(crate) fn hypergeometric_corrections(tau: f64) -> (Complex64, Complex64) {
    let i = Complex64::new(0.0, 1.0);
    let a = 0.25 - i * (tau / 2.0);
    let b = 0.75 - i * (tau / 2.0);
    let c = 1.0 - i * tau;
    let g1 = a * b / c;
    let g2 = g1 * (a + 1.0) * (b + 1.0) / ((c + 1.0) * 2.0);
    (g1, g2)
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath legenp references.
    const P_REF: [(f64, f64, f64); 6] = [
        (0.5, 2.0, 0.807_752_480_133_551_79),
        (1.0, 2.0, 0.556_413_548_935_076_01),
        (0.7, 3.0, 0.553_608_541_657_634_93),
        (2.0, 1.5, 0.258_496_512_548_996_30),
        (2.0, 6.0, -0.132_059_813_294_073_36),
        (1.0, 100.0, -0.026_019_363_659_461_481),
    ];

    #[test]
    fn reference_values() {
        for &(tau, x, want) in &P_REF {
            let got = legendre_conical(tau, x);
            assert!(
                (got - want).abs() < 1e-11,
                "P(tau={tau}, x={x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn value_one_at_argument_one() {
        for tau in [0.0, 0.5, 2.0] {
            assert_eq!(legendre_conical(tau, 1.0), 1.0);
        }
        // Continuous approach to 1 from the right.
        assert!((legendre_conical(0.5, 1.0001) - 0.999_975_000_781_221_79).abs() < 1e-11);
    }

    #[test]
    fn raw_and_substituted_routes_agree() {
        let sub = legendre_conical(0.7, 3.0);
        let raw = legendre_conical_raw(0.7, 3.0).unwrap();
        assert!((sub - raw).abs() < 1e-9, "substituted {sub} vs raw {raw}");
    }

    #[test]
    fn asymptotic_route_agrees_at_large_argument() {
        let exact = legendre_conical(1.0, 100.0);
        let asym = legendre_conical_asymptotic(1.0, 100.0);
        assert!(
            ((asym - exact) / exact).abs() < 1e-2,
            "asymptotic {asym} vs exact {exact}"
        );
        // With the hypergeometric corrections the agreement is much tighter.
        assert!(((asym - exact) / exact).abs() < 1e-8);
    }

    #[test]
    fn large_tau_large_x_stays_finite() {
        let v = legendre_conical(2.0, 1.0e4);
        assert!(v.is_finite() && v.abs() < 1.0);
    }
}
