//! Two-by-two symbol algebra for the symmetric jump pair at `±i`.
//!
//! Splitting a sequence into even- and odd-indexed halves turns a scalar
//! Hankel operator into a two-by-two block operator whose matrix symbol
//! `Sigma_phi` is built from the even and odd parts of the scalar symbol
//! `omega_phi`.  `Sigma_phi` splits as a principal part — a constant symmetric
//! matrix times the one-jump model `v` — plus a compact-smoothing correction
//! supported in the lower-right entry.  The constant orthogonal mixing matrix
//! `Y_phi` diagonalizes the principal part and exhibits the two spectral bands
//! `±[0, 1]`-scaled copies carried by the pair of jumps.

use num_complex::Complex64;

use crate::models::{model_symbol, v_symbol, ModelError, ModelPreset, Sign};
use crate::symbols::{CirclePoint, EvalPoint};

/// Value of a `2x2` matrix symbol at a single circle point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoByTwoSymbol {
    /// Entries in row-major order: `entries[i][j]` is row `i`, column `j`.
    pub entries: [[Complex64; 2]; 2],
}

impl TwoByTwoSymbol {
    pub fn zero() -> Self {
        TwoByTwoSymbol { entries: [[Complex64::new(0.0, 0.0); 2]; 2] }
    }

    pub fn add(&self, other: &TwoByTwoSymbol) -> TwoByTwoSymbol {
        let mut out = TwoByTwoSymbol::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j] + other.entries[i][j];
            }
        }
        out
    }

    /// Largest entrywise absolute difference to another matrix value.
    pub fn max_abs_diff(&self, other: &TwoByTwoSymbol) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        worst
    }
}

/// Constant real orthogonal `2x2` mixing matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingMatrix {
    pub entries: [[f64; 2]; 2],
}

impl MixingMatrix {
    /// Deviation of `Y^T Y` from the identity (largest entry).
    pub fn orthogonality_defect(&self) -> f64 {
        let y = &self.entries;
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let dot = y[0][i] * y[0][j] + y[1][i] * y[1][j];
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - want).abs());
            }
        }
        worst
    }

    /// `Y^T diag(1, -1) Y`.
    pub fn conjugated_sign_matrix(&self) -> [[f64; 2]; 2] {
        let y = &self.entries;
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = y[0][i] * y[0][j] - y[1][i] * y[1][j];
            }
        }
        out
    }
}

/// Decomposition of the block symbol of `omega_phi` into principal and
/// correction parts, with the orthogonal matrix mixing the two bands.
#[derive(Debug, Clone, Copy)]
pub struct SigmaDecomposition {
    pub phi: f64,
    /// Principal part is `principal_factor * v(mu)`; equals
    /// `[[sin phi, -cos phi], [-cos phi, -sin phi]]`.
    pub principal_factor: [[f64; 2]; 2],
    /// Orthogonal `Y_phi` with
    /// `principal_factor = Y^T diag(1, -1) Y`.
    pub mixing: MixingMatrix,
    /// True when `|cos phi| < 1e-12` and `mixing` is the explicit limit
    /// matrix rather than the generic closed form (which degenerates to 0/0).
    pub degenerate: bool,
}

impl SigmaDecomposition {
    /// Principal part `Sigma^0_phi(mu) = principal_factor * v(mu)`.
    pub fn principal(&self, point: CirclePoint) -> Result<TwoByTwoSymbol, ModelError> {
        let v = v_symbol(point, Sign::Minus)?;
        let mut out = TwoByTwoSymbol::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.principal_factor[i][j] * v;
            }
        }
        Ok(out)
    }

    /// Correction `Sigma~_phi(mu)`: zero except the lower-right entry
    /// `sin(phi) (1 + conj mu) v(mu)`, whose symbol vanishes at the jump pair.
    pub fn correction(&self, point: CirclePoint) -> Result<TwoByTwoSymbol, ModelError> {
        let v = v_symbol(point, Sign::Minus)?;
        let angle = point.angle();
        let mu_conj = Complex64::new(angle.cos(), -angle.sin());
        let mut out = TwoByTwoSymbol::zero();
        out.entries[1][1] = self.phi.sin() * (1.0 + mu_conj) * v;
        Ok(out)
    }

    /// Full block symbol `Sigma_phi = Sigma^0_phi + Sigma~_phi`.
    pub fn total(&self, point: CirclePoint) -> Result<TwoByTwoSymbol, ModelError> {
        Ok(self.principal(point)?.add(&self.correction(point)?))
    }
}

/// Build the principal/correction split and the mixing matrix for the block
/// symbol of `omega_phi`.
///
/// When `|cos phi| < 1e-12` the generic closed form for `Y_phi` degenerates;
/// the exact limit matrix is returned instead (identity for `sin phi = +1`,
/// the antidiagonal sign-flip for `sin phi = -1`) and `degenerate` is set.
pub fn sigma_decomposition(phi: f64) -> SigmaDecomposition {
    let (s, c) = (phi.sin(), phi.cos());
    let principal_factor = [[s, -c], [-c, -s]];
    let (mixing, degenerate) = if c.abs() < 1e-12 {
        let limit = if s > 0.0 {
            [[1.0, 0.0], [0.0, 1.0]]
        } else {
            [[0.0, -1.0], [-1.0, 0.0]]
        };
        (MixingMatrix { entries: limit }, true)
    } else {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let rm = (1.0 - s).sqrt();
        let rp = (1.0 + s).sqrt();
        (
            MixingMatrix {
                entries: [
                    [inv_sqrt2 * c / rm, -inv_sqrt2 * rm],
                    [inv_sqrt2 * c / rp, inv_sqrt2 * rp],
                ],
            },
            false,
        )
    };
    SigmaDecomposition { phi, principal_factor, mixing, degenerate }
}

/// Block symbol of `omega_phi` computed directly from its even and odd parts —
/// an independent route used to cross-check [`sigma_decomposition`].
///
/// With `z` a square root of `mu`:
/// `sigma_11 = omega_even(z)`, `sigma_22 = mu^{-1} omega_even(z)`,
/// `sigma_12 = sigma_21 = z^{-1} omega_odd(z)`.
pub fn block_symbol_of_omega_phi(
    phi: f64,
    point: CirclePoint,
) -> Result<TwoByTwoSymbol, ModelError> {
    let angle = point.angle();
    let half = CirclePoint::new(angle / 2.0);
    let half_opposite = CirclePoint::new(angle / 2.0 + std::f64::consts::PI);
    let omega = ModelPreset::OmegaPhi { phi };
    let at = model_symbol(omega, EvalPoint::Circle(half))?;
    let at_op = model_symbol(omega, EvalPoint::Circle(half_opposite))?;
    let even = 0.5 * (at + at_op);
    let odd = 0.5 * (at - at_op);
    let mu_inv = Complex64::new(angle.cos(), -angle.sin());
    let z_inv = Complex64::new((angle / 2.0).cos(), -(angle / 2.0).sin());
    let mixed = z_inv * odd;
    Ok(TwoByTwoSymbol {
        entries: [[even, mixed], [mixed, mu_inv * even]],
    })
}
