//! Weighted resolvent probe on finite sections.
//!
//! The weight is a product of capped reciprocal-log factors tied to the
//! symbol's jump locations: for a location `e^{i a}` the factor is
//!
//! ```text
//! q_a(mu) = |ln |mu - e^{i a}||^{-1}   when |mu - e^{i a}| <= 1/e,
//! q_a(mu) = 1                          otherwise,
//! ```
//!
//! and the full weight is `q(mu) = prod_k q_{a_k}(mu)^{beta_k}` with every
//! exponent `beta_k > 1`.  Each factor is continuous, vanishes (slowly) at
//! its location, and never exceeds one, so `0 <= q <= 1` everywhere.
//!
//! The probe computes the operator norm of the sandwiched resolvent
//!
//! ```text
//! || Q_N (H_N - z)^{-1} Q_N ||
//! ```
//!
//! where `Q_N` is the `N x N` Toeplitz matrix of `q` (real symmetric by the
//! conjugate closure) and `H_N` the Hankel section.  With the trivial weight
//! (`q = 1`, `Q_N = I`) this is the plain resolvent norm
//! `1 / dist(z, spec H_N)`, which pins the probe against the eigenvalue
//! route; with the log weight the probe stays bounded as `z` approaches a
//! point inside a band where the unweighted norm blows up — the numerical
//! fingerprint of the smoothing role the weights play at the thresholds.
//! Because `||Q_N|| <= max q <= 1` the probe never exceeds the unweighted
//! resolvent norm, so far from the spectrum it is at most
//! `1 / dist(z, spec H_N)` with or without a weight.
//!
//! The norm is evaluated by a fixed 100-step power iteration on `M^* M`
//! (`M` the weighted resolvent), entirely deterministic: the starting vector
//! is `v_i = sin(i+1)` and no randomness is involved.

use num_complex::Complex64;

use super::{hankel_matrix, HankelCoefficients, SectionsError};

/// Number of uniform samples used for the weight's Fourier coefficients.
const WEIGHT_SAMPLES: usize = 1 << 16;
/// Pivot / distance threshold below which the shifted section is singular.
const SINGULAR_TOL: f64 = 1e-12;
/// Fixed power-iteration length.
const POWER_ITERATIONS: usize = 100;
/// Angular tolerance when matching conjugate weight locations.
const WEIGHT_ANGLE_TOL: f64 = 1e-9;

/// One factor `q_angle(mu)^beta` of the circle weight, where `q_angle` is
/// the reciprocal log-distance to `e^{i angle}` capped at one.
#[derive(Debug, Clone, Copy)]
pub struct WeightFactor {
    pub angle: f64,
    pub beta: f64,
}

/// Pointwise value of one weight factor at chord distance `d` from its
/// location: `|ln d|^{-beta}` in the short-distance regime (`d <= 1/e`,
/// where `|ln d| >= 1`), one otherwise.  Continuous across `d = 1/e` and
/// monotone in `d`, with `0 <= value <= 1`.
fn log_factor(d: f64, beta: f64) -> f64 {
    if d >= std::f64::consts::E.recip() {
        1.0
    } else if d == 0.0 {
        0.0
    } else {
        d.ln().abs().powf(-beta)
    }
}

/// A circle weight as a product of point factors; the empty product is the
/// trivial weight `q = 1`.
#[derive(Debug, Clone, Default)]
pub struct WeightSpec {
    pub factors: Vec<WeightFactor>,
}

impl WeightSpec {
    /// The trivial weight.
    pub fn identity() -> Self {
        WeightSpec { factors: Vec::new() }
    }

    pub fn new(factors: Vec<WeightFactor>) -> Self {
        WeightSpec { factors }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Validate the weight and close it under conjugation so that `q` is even in
/// the angle and its Toeplitz matrix real symmetric.
fn closed_factors(weights: &WeightSpec) -> Result<Vec<WeightFactor>, SectionsError> {
    let mut factors: Vec<WeightFactor> = Vec::new();
    for factor in &weights.factors {
        if !(factor.beta > 1.0) {
            return Err(SectionsError::InvalidWeight(format!(
                "exponent beta = {} must exceed 1",
                factor.beta
            )));
        }
        if !factor.angle.is_finite() {
            return Err(SectionsError::InvalidWeight("non-finite weight angle".into()));
        }
        factors.push(WeightFactor {
            angle: crate::symbols::normalize_angle(factor.angle),
            beta: factor.beta,
        });
    }
    for i in 0..factors.len() {
        for j in (i + 1)..factors.len() {
            let d = (factors[i].angle - factors[j].angle).abs();
            let d = d.min(std::f64::consts::TAU - d);
            if d < WEIGHT_ANGLE_TOL {
                return Err(SectionsError::InvalidWeight(format!(
                    "duplicate weight location at angle {}",
                    factors[i].angle
                )));
            }
        }
    }
    // Conjugate closure: every non-real location needs its mirror with the
    // same exponent; missing mirrors are added automatically.
    let mut additions = Vec::new();
    for factor in &factors {
        let on_axis = factor.angle < WEIGHT_ANGLE_TOL
            || (std::f64::consts::TAU - factor.angle) < WEIGHT_ANGLE_TOL
            || (factor.angle - std::f64::consts::PI).abs() < WEIGHT_ANGLE_TOL;
        if on_axis {
            continue;
        }
        let mirror = std::f64::consts::TAU - factor.angle;
        let partner = factors
            .iter()
            .find(|f| (f.angle - mirror).abs() < WEIGHT_ANGLE_TOL);
        match partner {
            Some(p) if (p.beta - factor.beta).abs() > 1e-12 => {
                return Err(SectionsError::InvalidWeight(format!(
                    "conjugate locations {} and {} carry different exponents",
                    factor.angle, p.angle
                )));
            }
            Some(_) => {}
            None => additions.push(WeightFactor { angle: mirror, beta: factor.beta }),
        }
    }
    factors.extend(additions);
    Ok(factors)
}

/// Fourier coefficients `q_hat_0, ..., q_hat_{count-1}` of the weight,
/// computed by the trapezoid rule over 2^16 uniform samples.  The weight's
/// logarithmic cusps limit the rule to roughly 1e-7 absolute accuracy here,
/// which is ample for the probe; more importantly, trapezoid coefficients
/// are exactly the moments of the nonnegative discrete measure carried by
/// the sample points, so the resulting Toeplitz matrix is positive
/// semidefinite and bounded by `max q <= 1` in operator norm (exactly, not
/// just up to quadrature error) whenever `count <= 2^16`.  Coefficients are
/// exactly real by the conjugate closure.
pub(crate) fn weight_fourier(
    weights: &WeightSpec,
    count: usize,
) -> Result<Vec<f64>, SectionsError> {
    let factors = closed_factors(weights)?;
    let s_total = WEIGHT_SAMPLES;
    let mut coefficients = vec![0.0_f64; count];
    for s in 0..s_total {
        let theta = std::f64::consts::TAU * s as f64 / s_total as f64;
        let mut q = 1.0_f64;
        for factor in &factors {
            let chord = 2.0 * ((theta - factor.angle) / 2.0).sin().abs();
            q *= log_factor(chord, factor.beta);
        }
        // Chebyshev-style recurrence for cos(m theta).
        let c1 = theta.cos();
        let mut c_prev = 1.0; // cos(0)
        let mut c_curr = c1; // cos(theta)
        coefficients[0] += q;
        if count > 1 {
            coefficients[1] += q * c_curr;
        }
        for coefficient in coefficients.iter_mut().skip(2) {
            let c_next = 2.0 * c1 * c_curr - c_prev;
            *coefficient += q * c_next;
            c_prev = c_curr;
            c_curr = c_next;
        }
    }
    for c in coefficients.iter_mut() {
        *c /= s_total as f64;
    }
    Ok(coefficients)
}

/// The `N x N` Toeplitz matrix of the weight, or `None` for the trivial
/// weight (the probe then skips the multiplications entirely).
fn weight_toeplitz(
    weights: &WeightSpec,
    n: usize,
) -> Result<Option<Vec<Vec<f64>>>, SectionsError> {
    if weights.is_identity() {
        return Ok(None);
    }
    let fourier = weight_fourier(weights, n)?;
    let mut q = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            q[i][j] = fourier[i.abs_diff(j)];
        }
    }
    Ok(Some(q))
}

/// LU factorization with partial pivoting of a complex matrix.
struct ComplexLu {
    lu: Vec<Vec<Complex64>>,
    perm: Vec<usize>,
}

impl ComplexLu {
    /// Returns `None` when a pivot falls below the singularity threshold.
    fn factor(mut m: Vec<Vec<Complex64>>) -> Option<ComplexLu> {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let (pivot_row, pivot_mag) = (col..n)
                .map(|r| (r, m[r][col].norm()))
                .fold((col, -1.0), |best, cand| if cand.1 > best.1 { cand } else { best });
            if pivot_mag < SINGULAR_TOL {
                return None;
            }
            if pivot_row != col {
                m.swap(pivot_row, col);
                perm.swap(pivot_row, col);
            }
            let pivot = m[col][col];
            for row in (col + 1)..n {
                let factor = m[row][col] / pivot;
                m[row][col] = factor;
                for k in (col + 1)..n {
                    let upper = m[col][k];
                    m[row][k] -= factor * upper;
                }
            }
        }
        Some(ComplexLu { lu: m, perm })
    }

    fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = b.len();
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let l = self.lu[i][j];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let u = self.lu[i][j];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= self.lu[i][i];
        }
        x
    }

    /// Solve with the conjugate-transposed matrix (the factored matrix here
    /// is `H - z` with real `H`, so the adjoint system is the conjugate).
    fn solve_adjoint(&self, b: &[Complex64]) -> Vec<Complex64> {
        let conj_b: Vec<Complex64> = b.iter().map(|v| v.conj()).collect();
        self.solve(&conj_b).iter().map(|v| v.conj()).collect()
    }
}

fn apply_real(matrix: &[Vec<f64>], v: &[Complex64]) -> Vec<Complex64> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(v.iter())
                .fold(Complex64::new(0.0, 0.0), |acc, (m, x)| acc + m * x)
        })
        .collect()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Evaluate the weighted resolvent norm at each shift in `z_list` on the
/// `N x N` section.  Needs `2N - 1` coefficients; shifts within `1e-12` of
/// the section spectrum raise [`SectionsError::SingularShift`].
pub fn weighted_resolvent_probe(
    coeffs: &HankelCoefficients,
    weights: &WeightSpec,
    z_list: &[Complex64],
    n: usize,
) -> Result<Vec<f64>, SectionsError> {
    let h = hankel_matrix(coeffs, n)?;
    let toeplitz = weight_toeplitz(weights, n)?;

    let mut out = Vec::with_capacity(z_list.len());
    for &z in z_list {
        let shifted: Vec<Vec<Complex64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let diag = if i == j { z } else { Complex64::new(0.0, 0.0) };
                        Complex64::new(h[i][j], 0.0) - diag
                    })
                    .collect()
            })
            .collect();
        let lu = ComplexLu::factor(shifted).ok_or(SectionsError::SingularShift { z })?;

        // M u = Q (H - z)^{-1} Q u  (Q omitted when trivial).
        let apply_m = |u: &[Complex64]| -> Vec<Complex64> {
            let w = match &toeplitz {
                Some(q) => apply_real(q, u),
                None => u.to_vec(),
            };
            let x = lu.solve(&w);
            match &toeplitz {
                Some(q) => apply_real(q, &x),
                None => x,
            }
        };
        let apply_m_adjoint = |u: &[Complex64]| -> Vec<Complex64> {
            let w = match &toeplitz {
                Some(q) => apply_real(q, u),
                None => u.to_vec(),
            };
            let x = lu.solve_adjoint(&w);
            match &toeplitz {
                Some(q) => apply_real(q, &x),
                None => x,
            }
        };

        // Deterministic start vector; generic with respect to the symmetry
        // classes of these matrices.
        let mut u: Vec<Complex64> =
            (0..n).map(|i| Complex64::new(((i + 1) as f64).sin(), 0.0)).collect();
        let u_norm = norm(&u);
        for x in u.iter_mut() {
            *x /= u_norm;
        }
        for _ in 0..POWER_ITERATIONS {
            let mu = apply_m(&u);
            let mut next = apply_m_adjoint(&mu);
            let next_norm = norm(&next);
            if next_norm == 0.0 {
                break;
            }
            for x in next.iter_mut() {
                *x /= next_norm;
            }
            u = next;
        }
        out.push(norm(&apply_m(&u)));
    }
    Ok(out)
}
