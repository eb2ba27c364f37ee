//! Dense symmetric eigensolver: Householder reduction to tridiagonal form
//! followed by the QL iteration with implicit shifts.
//!
//! The rotation budget is 30 iterations per eigenvalue; exceeding it raises
//! [`SectionsError::EigenNonConvergence`] instead of returning garbage.  An
//! independent cyclic-Jacobi solver lives in [`super::jacobi`] and serves as
//! the cross-check oracle for this one.

use super::SectionsError;

/// Relative asymmetry tolerated in the input matrix.
const SYMMETRY_TOL: f64 = 1e-12;
/// QL iteration budget per eigenvalue.
const QL_BUDGET: usize = 30;

fn check_square_symmetric(matrix: &[Vec<f64>]) {
    let n = matrix.len();
    assert!(n >= 1, "matrix must be non-empty");
    let mut scale = 0.0_f64;
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
        for &v in row {
            scale = scale.max(v.abs());
        }
    }
    let tol = SYMMETRY_TOL * scale.max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            assert!(
                (matrix[i][j] - matrix[j][i]).abs() <= tol,
                "matrix is not symmetric at ({i}, {j})"
            );
        }
    }
}

/// Householder reduction of a symmetric matrix (consumed in place) to
/// tridiagonal form with diagonal `d` and subdiagonal `e[1..]`; when
/// `with_vectors` is set, `a` is overwritten by the accumulated orthogonal
/// transform.
fn householder_tridiagonal(a: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64], with_vectors: bool) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a[i][k].abs();
            }
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    if with_vectors {
                        a[j][i] = a[i][j] / h;
                    }
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += a[k][j] * a[i][k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if with_vectors {
            // Accumulate the product of the Householder reflectors.
            if d[i] != 0.0 {
                for j in 0..i {
                    let mut g = 0.0;
                    for k in 0..i {
                        g += a[i][k] * a[k][j];
                    }
                    for k in 0..i {
                        a[k][j] -= g * a[k][i];
                    }
                }
            }
            d[i] = a[i][i];
            a[i][i] = 1.0;
            for j in 0..i {
                a[j][i] = 0.0;
                a[i][j] = 0.0;
            }
        } else {
            d[i] = a[i][i];
        }
    }
}

/// QL iteration with implicit shifts on a tridiagonal matrix.  On entry `e`
/// holds the subdiagonal in positions `1..n` (position 0 arbitrary); on exit
/// `d` holds the unsorted eigenvalues.  When `z` is provided its columns are
/// rotated along, turning the tridiagonalizing transform into the full
/// eigenvector matrix.
fn ql_implicit_shift(
    d: &mut [f64],
    e: &mut [f64],
    mut z: Option<&mut [Vec<f64>]>,
) -> Result<(), SectionsError> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    // Renumber the subdiagonal: e[i] couples d[i] and d[i+1].
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    // Full-scale deflation threshold.  Couplings negligible against the
    // tridiagonal norm are deflated even where the neighbouring diagonals
    // have decayed to noise: rank-deficient smooth-kernel discretizations
    // produce blocks whose d and e are both ~1e-21 on a norm-1e-2 matrix,
    // and a purely relative test never converges there (it drags full-span
    // sweeps past the iteration budget).  The cost is absolute rather than
    // relative accuracy for eigenvalues below eps * norm, matching what
    // normwise backward-stable solvers deliver anyway.
    let tst1 = d
        .iter()
        .zip(e.iter())
        .map(|(di, ei)| di.abs() + ei.abs())
        .fold(0.0_f64, f64::max);
    for l in 0..n {
        let mut iter = 0;
        loop {
            // Split point: smallest m >= l with a negligible coupling.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m].abs() <= f64::EPSILON * tst1 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_BUDGET {
                return Err(SectionsError::EigenNonConvergence { size: n });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Recover from underflow: deflate and restart.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    for row in z.iter_mut() {
                        f = row[i + 1];
                        row[i + 1] = s * row[i] + c * f;
                        row[i] = c * row[i] - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a symmetric matrix, sorted ascending.
pub fn eigenvalues_symmetric(matrix: &[Vec<f64>]) -> Result<Vec<f64>, SectionsError> {
    check_square_symmetric(matrix);
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder_tridiagonal(&mut a, &mut d, &mut e, false);
    ql_implicit_shift(&mut d, &mut e, None)?;
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric
/// matrix; `vectors[k]` is the unit eigenvector belonging to `values[k]`.
pub fn symmetric_eigen(
    matrix: &[Vec<f64>],
) -> Result<(Vec<f64>, Vec<Vec<f64>>), SectionsError> {
    check_square_symmetric(matrix);
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder_tridiagonal(&mut a, &mut d, &mut e, true);
    ql_implicit_shift(&mut d, &mut e, Some(&mut a))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| d[x].partial_cmp(&d[y]).unwrap());
    let values: Vec<f64> = order.iter().map(|&k| d[k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| a[i][k]).collect())
        .collect();
    Ok((values, vectors))
}
