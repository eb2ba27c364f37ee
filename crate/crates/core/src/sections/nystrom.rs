//! Nystrom discretization of integral Hankel operators on the half-line.
//!
//! The operator `(H f)(t) = int_0^inf h(t + s) f(s) ds` is discretized on an
//! exponentially graded grid: the substitution `t = e^u` maps `u in [-L, L]`
//! onto `[e^{-L}, e^{L}]`, capturing the `1/t`-type behaviour of the model
//! kernels at both ends.  With Gauss–Legendre nodes `u_i` and weights `v_i`
//! per panel, the symmetrized Nystrom matrix
//!
//! ```text
//! A[i][j] = sqrt(w_i w_j) h(t_i + t_j),    w_i = v_i e^{u_i},  t_i = e^{u_i}
//! ```
//!
//! is real symmetric and shares its nonzero spectrum with the discretized
//! operator, so its eigenvalues approximate the spectrum of `H`.

use super::{eigenvalues_symmetric, SectionSpectrum, SectionsError, SpectrumSource};
use crate::models::{integral_model_kernel, ModelPreset, PresetKind};
use crate::quad::gauss_legendre;

/// Quadrature grid in the substituted variable: `nodes[i] = t_i = e^{u_i}`
/// with combined weights `weights[i] = v_i e^{u_i}` approximating
/// `int_0^inf f(t) dt ~ sum_i weights[i] f(nodes[i])`.
#[derive(Debug, Clone)]
pub struct NystromGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub half_width: f64,
}

impl NystromGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Build the exponentially graded grid: `panels` Gauss–Legendre panels of the
/// given `order` spanning `u in [-l, l]`, mapped through `t = e^u`.
pub fn nystrom_grid(l: f64, panels: usize, order: usize) -> NystromGrid {
    assert!(l > 0.0, "grid half-width must be positive, got {l}");
    assert!(panels >= 1 && order >= 1, "grid needs at least one panel and node");
    let (gl_nodes, gl_weights) = gauss_legendre(order);
    let width = 2.0 * l / panels as f64;
    let mut nodes = Vec::with_capacity(panels * order);
    let mut weights = Vec::with_capacity(panels * order);
    for p in 0..panels {
        let lo = -l + width * p as f64;
        let c = lo + 0.5 * width;
        let h = 0.5 * width;
        for (x, w) in gl_nodes.iter().zip(gl_weights.iter()) {
            let u = c + h * x;
            let t = u.exp();
            nodes.push(t);
            weights.push(w * h * t);
        }
    }
    NystromGrid { nodes, weights, half_width: l }
}

/// Symmetrized Nystrom matrix of an integral-kernel preset on a grid.
pub fn nystrom_matrix(
    preset: ModelPreset,
    grid: &NystromGrid,
) -> Result<Vec<Vec<f64>>, SectionsError> {
    if preset.kind() != PresetKind::Kernel {
        return Err(SectionsError::UnsupportedPreset {
            preset: format!("{preset:?}"),
            needed: "an integral-kernel preset",
        });
    }
    let n = grid.len();
    let root_weights: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
    let mut matrix = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let value = integral_model_kernel(preset, grid.nodes[i] + grid.nodes[j])?
                * root_weights[i]
                * root_weights[j];
            matrix[i][j] = value;
            matrix[j][i] = value;
        }
    }
    Ok(matrix)
}

/// Eigenvalues of the Nystrom discretization of a kernel preset.
pub fn nystrom_spectrum(
    preset: ModelPreset,
    l: f64,
    panels: usize,
    order: usize,
) -> Result<SectionSpectrum, SectionsError> {
    let start = std::time::Instant::now();
    let grid = nystrom_grid(l, panels, order);
    let matrix = nystrom_matrix(preset, &grid)?;
    let eigenvalues = eigenvalues_symmetric(&matrix)?;
    Ok(SectionSpectrum {
        n: grid.len(),
        eigenvalues,
        source: SpectrumSource::Nystrom,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}
