//! Truncated Hankel matrices and their structural checks.

use super::{eigenvalues_symmetric, HankelCoefficients, SectionsError};

/// The `N x N` truncated Hankel matrix `A[i][j] = h_{i+j}`.
///
/// Needs `2N - 1` coefficients.
pub fn hankel_matrix(
    coeffs: &HankelCoefficients,
    n: usize,
) -> Result<Vec<Vec<f64>>, SectionsError> {
    assert!(n >= 1, "section size must be at least 1");
    coeffs.require(2 * n - 1)?;
    let values = coeffs.values();
    let mut matrix = vec![vec![0.0; n]; n];
    for (i, row) in matrix.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = values[i + j];
        }
    }
    Ok(matrix)
}

/// Structural identity of even/odd interleaving: reordering the rows and
/// columns of `H_N` (`N` even) so that even indices come first produces the
/// two-by-two block matrix
///
/// ```text
/// [ A  B ]          A[k][j] = h_{2(k+j)}
/// [ B  C ]          B[k][j] = h_{2(k+j)+1}
///                   C[k][j] = h_{2(k+j)+2}
/// ```
///
/// of half-size Hankel matrices built from the even-, odd-, and shifted
/// even-indexed coefficients.  Returns the maximum absolute deviation
/// between the two constructions; it is exactly zero, so any nonzero value
/// flags an indexing bug.  Needs `N` even and `2N` coefficients.
pub fn block_hankel_interleave_check(
    coeffs: &HankelCoefficients,
    n: usize,
) -> Result<f64, SectionsError> {
    assert!(n >= 2 && n % 2 == 0, "interleave check needs an even section size, got {n}");
    coeffs.require(2 * n)?;
    let values = coeffs.values();
    let full = hankel_matrix(coeffs, n)?;
    let k = n / 2;

    // Permutation sending (even indices, odd indices) to (0..k, k..n).
    let mut perm = Vec::with_capacity(n);
    for idx in 0..k {
        perm.push(2 * idx);
    }
    for idx in 0..k {
        perm.push(2 * idx + 1);
    }

    let mut worst = 0.0_f64;
    for r in 0..n {
        for c in 0..n {
            let permuted = full[perm[r]][perm[c]];
            let blocked = if r < k && c < k {
                values[2 * (r + c)]
            } else if r < k {
                values[2 * (r + c - k) + 1]
            } else if c < k {
                values[2 * (r - k + c) + 1]
            } else {
                values[2 * (r - k + c - k) + 2]
            };
            worst = worst.max((permuted - blocked).abs());
        }
    }
    Ok(worst)
}

/// Cauchy interlacing of consecutive sections: with eigenvalues sorted
/// ascending, every `lambda_k(H_{N+1}) <= lambda_k(H_N) <= lambda_{k+1}
/// (H_{N+1})` up to a slack of `1e-10`.  Needs `2N + 1` coefficients.
pub fn interlacing_check(coeffs: &HankelCoefficients, n: usize) -> Result<bool, SectionsError> {
    const SLACK: f64 = 1e-10;
    assert!(n >= 1, "section size must be at least 1");
    coeffs.require(2 * n + 1)?;
    let small = eigenvalues_symmetric(&hankel_matrix(coeffs, n)?)?;
    let large = eigenvalues_symmetric(&hankel_matrix(coeffs, n + 1)?)?;
    for k in 0..n {
        if large[k] > small[k] + SLACK {
            return Ok(false);
        }
        if small[k] > large[k + 1] + SLACK {
            return Ok(false);
        }
    }
    Ok(true)
}
