//! Band-filling metrics: how well the eigenvalues of a finite section cover
//! the predicted spectral bands, and which eigenvalues leak outside them.
//!
//! For each band the *fill distance* is the largest gap seen from a fixed
//! probe grid — 200 points spread over the central 90% of the band — to the
//! nearest eigenvalue; it tends to zero as the section grows exactly when
//! the band really fills up.  (With no eigenvalues at all the sentinel value
//! is infinite.)  Eigenvalues farther than the leak tolerance from *every*
//! band are collected as leaks; genuine predictions keep the leak count
//! small and the leaked values stable as the section grows, whereas a wrong
//! band chart produces either a fill distance bounded away from zero or a
//! growing swarm of leaks.

use super::SectionSpectrum;
use crate::predict::Band;

/// Number of probe points per band.
const PROBES_PER_BAND: usize = 200;
/// Fraction of the band covered by the probe grid (centered).
const PROBE_SPAN: f64 = 0.9;

/// Fill distance of one band.
#[derive(Debug, Clone, Copy)]
pub struct BandFill {
    /// Index into the band list the metrics were computed against.
    pub band_index: usize,
    /// Largest probe-to-spectrum distance over the probe grid.
    pub fill_distance: f64,
}

/// Fill distances per band plus the leaked eigenvalues.
#[derive(Debug, Clone)]
pub struct FillReport {
    pub per_band: Vec<BandFill>,
    /// Eigenvalues farther than `tolerance` from every band, ascending.
    pub leaked: Vec<f64>,
    /// Leak tolerance the report was computed with.
    pub tolerance: f64,
}

impl FillReport {
    pub fn leak_count(&self) -> usize {
        self.leaked.len()
    }

    pub fn fill_distance(&self, band_index: usize) -> Option<f64> {
        self.per_band
            .iter()
            .find(|b| b.band_index == band_index)
            .map(|b| b.fill_distance)
    }
}

/// Distance from a point to a closed interval.
fn distance_to_band(x: f64, band: &Band) -> f64 {
    if x < band.lo {
        band.lo - x
    } else if x > band.hi {
        x - band.hi
    } else {
        0.0
    }
}

/// Compute fill distances and leaks of a section spectrum against a band
/// chart.  `tolerance` is the leak tolerance (0.02 in the standard checks).
pub fn band_fill_metrics(
    spectrum: &SectionSpectrum,
    bands: &[Band],
    tolerance: f64,
) -> FillReport {
    let mut per_band = Vec::with_capacity(bands.len());
    for (band_index, band) in bands.iter().enumerate() {
        let width = band.width();
        let start = band.lo + 0.5 * (1.0 - PROBE_SPAN) * width;
        let step = if PROBES_PER_BAND > 1 {
            PROBE_SPAN * width / (PROBES_PER_BAND - 1) as f64
        } else {
            0.0
        };
        let mut fill_distance = 0.0_f64;
        for k in 0..PROBES_PER_BAND {
            let probe = start + step * k as f64;
            fill_distance = fill_distance.max(spectrum.distance_to(probe));
        }
        per_band.push(BandFill { band_index, fill_distance });
    }

    let mut leaked: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .copied()
        .filter(|&ev| {
            bands
                .iter()
                .map(|band| distance_to_band(ev, band))
                .fold(f64::INFINITY, f64::min)
                > tolerance
        })
        .collect();
    leaked.sort_by(|a, b| a.partial_cmp(b).unwrap());

    FillReport { per_band, leaked, tolerance }
}
