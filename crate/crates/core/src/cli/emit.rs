//! Artifact emission: CSV files and the human-readable report.
//!
//! All floating-point fields use one fixed format, scientific notation with
//! 17 significant digits, so doubles round-trip exactly and identical runs
//! produce byte-identical files.  Rows are written in a deterministic order
//! by a single emitter; no timestamps or machine-dependent fields appear in
//! CSV output.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::predict::{Band, SpectralPrediction};
use crate::sections::{FillReport, SectionSpectrum};
use crate::symbols::{JumpDatum, JumpLocation, LinePoint};

use super::CliError;

/// Fixed float formatting: 17 significant digits, round-trip exact.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn create(dir: &Path, name: &str) -> Result<(PathBuf, std::io::BufWriter<std::fs::File>), CliError> {
    let path = dir.join(name);
    let file = std::fs::File::create(&path)
        .map_err(|e| CliError::Validation(format!("cannot create {}: {e}", path.display())))?;
    Ok((path, std::io::BufWriter::new(file)))
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Validation(format!("cannot write {}: {e}", path.display()))
}

/// `bands.csv`: one row per predicted band, a.c. bands first, then modulus
/// bands, both in their natural (sorted) order.
pub fn write_bands_csv(dir: &Path, prediction: &SpectralPrediction) -> Result<PathBuf, CliError> {
    let (path, mut out) = create(dir, "bands.csv")?;
    let mut go = || -> std::io::Result<()> {
        writeln!(out, "band_id,kind,lo,hi,multiplicity")?;
        let all = prediction.ac_bands.iter().chain(prediction.modulus_bands.iter());
        for (id, band) in all.enumerate() {
            writeln!(
                out,
                "{},{},{},{},{}",
                id,
                band.kind.label(),
                fmt_f64(band.lo),
                fmt_f64(band.hi),
                band.multiplicity
            )?;
        }
        out.flush()
    };
    go().map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// `eigenvalues.csv`: ascending eigenvalues of every computed spectrum.
pub fn write_eigenvalues_csv(
    dir: &Path,
    source_id: &str,
    spectra: &[SectionSpectrum],
) -> Result<PathBuf, CliError> {
    let (path, mut out) = create(dir, "eigenvalues.csv")?;
    let mut go = || -> std::io::Result<()> {
        writeln!(out, "source_id,n,index,eigenvalue")?;
        for spectrum in spectra {
            for (index, ev) in spectrum.eigenvalues.iter().enumerate() {
                writeln!(out, "{},{},{},{}", source_id, spectrum.n, index, fmt_f64(*ev))?;
            }
        }
        out.flush()
    };
    go().map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// `fill.csv`: per-band fill distances and the leak count of each spectrum.
pub fn write_fill_csv(
    dir: &Path,
    source_id: &str,
    rows: &[(usize, FillReport)],
) -> Result<PathBuf, CliError> {
    let (path, mut out) = create(dir, "fill.csv")?;
    let mut go = || -> std::io::Result<()> {
        writeln!(out, "source_id,n,band_id,fill_distance,leak_count")?;
        for (n, report) in rows {
            for band in &report.per_band {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    source_id,
                    n,
                    band.band_index,
                    fmt_f64(band.fill_distance),
                    report.leak_count()
                )?;
            }
        }
        out.flush()
    };
    go().map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// `jumps.csv`: a jump table (the convert-mode output).  Finite locations are
/// numbers; the point at infinity is the string `inf`.
pub fn write_jumps_csv(dir: &Path, jumps: &[JumpDatum]) -> Result<PathBuf, CliError> {
    let (path, mut out) = create(dir, "jumps.csv")?;
    let mut go = || -> std::io::Result<()> {
        writeln!(out, "location,value_re,value_im")?;
        for jump in jumps {
            let location = match jump.location {
                JumpLocation::Circle(p) => fmt_f64(p.angle()),
                JumpLocation::Line(LinePoint::Finite(nu)) => fmt_f64(nu),
                JumpLocation::Line(LinePoint::Infinity) => "inf".to_string(),
            };
            writeln!(out, "{},{},{}", location, fmt_f64(jump.value.re), fmt_f64(jump.value.im))?;
        }
        out.flush()
    };
    go().map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// `probe.csv`: weighted resolvent norms per shift.
pub fn write_probe_csv(
    dir: &Path,
    shifts: &[crate::Complex64],
    values: &[f64],
) -> Result<PathBuf, CliError> {
    let (path, mut out) = create(dir, "probe.csv")?;
    let mut go = || -> std::io::Result<()> {
        writeln!(out, "z_re,z_im,probe")?;
        for (z, v) in shifts.iter().zip(values) {
            writeln!(out, "{},{},{}", fmt_f64(z.re), fmt_f64(z.im), fmt_f64(*v))?;
        }
        out.flush()
    };
    go().map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// `report.txt`: the summary lines, one per line, exactly as printed.
pub fn write_report(dir: &Path, lines: &[String]) -> Result<PathBuf, CliError> {
    let (path, mut out) = create(dir, "report.txt")?;
    let mut go = || -> std::io::Result<()> {
        for line in lines {
            writeln!(out, "{line}")?;
        }
        out.flush()
    };
    go().map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// Render one band as `[lo, hi] x multiplicity` for report lines.
pub fn band_brief(band: &Band) -> String {
    format!(
        "{} [{:.6}, {:.6}] multiplicity {}",
        band.kind.label(),
        band.lo,
        band.hi,
        band.multiplicity
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for &x in &[0.1, 1.0 / 3.0, 2.0_f64.sqrt(), 1e-300, -7.25e17, 0.0] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }

    #[test]
    fn float_format_is_fixed_width_science() {
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(0.5), "5.0000000000000000e-1");
    }
}
