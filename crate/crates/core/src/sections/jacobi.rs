//! Cyclic Jacobi eigensolver.
//!
//! Slower than the QL route but algorithmically independent of it, which is
//! the point: the two solvers cross-check each other.  Intended for matrices
//! up to a few hundred rows.

use super::SectionsError;

/// Sweep limit before giving up.
const MAX_SWEEPS: usize = 50;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending.  Converges when the off-diagonal Frobenius norm falls below
/// `1e-14` times the scale of the matrix.
pub fn eigenvalues_jacobi(matrix: &[Vec<f64>]) -> Result<Vec<f64>, SectionsError> {
    let n = matrix.len();
    assert!(n >= 1, "matrix must be non-empty");
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let mut a: Vec<Vec<f64>> = matrix.to_vec();

    let frobenius: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt();
    let target = 1e-14 * frobenius.max(1.0);

    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    s += a[p][q] * a[p][q];
                }
            }
            (2.0 * s).sqrt()
        };
        if off <= target {
            let mut d: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            d.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(d);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                // Rotation angle from the classic two-by-two reduction.
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = {
                    let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
                    if theta >= 0.0 {
                        t
                    } else {
                        -t
                    }
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(SectionsError::JacobiNonConvergence { size: n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_is_returned_sorted() {
        let m = vec![
            vec![2.0, 0.0, 0.0],
            vec![0.0, -3.0, 0.0],
            vec![0.0, 0.0, 0.5],
        ];
        assert_eq!(eigenvalues_jacobi(&m).unwrap(), vec![-3.0, 0.5, 2.0]);
    }

    #[test]
    fn two_by_two_in_closed_form() {
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let ev = eigenvalues_jacobi(&m).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-14);
        assert!((ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn trace_and_frobenius_are_preserved() {
        let m = vec![
            vec![1.0, 0.4, -0.2, 0.1],
            vec![0.4, -0.5, 0.3, 0.0],
            vec![-0.2, 0.3, 2.0, -0.7],
            vec![0.1, 0.0, -0.7, 0.25],
        ];
        let ev = eigenvalues_jacobi(&m).unwrap();
        let trace: f64 = (0..4).map(|i| m[i][i]).sum();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-12);
        let frob2: f64 = m.iter().flat_map(|r| r.iter()).map(|v| v * v).sum();
        let ev2: f64 = ev.iter().map(|v| v * v).sum();
        assert!((frob2 - ev2).abs() < 1e-11);
    }
}
