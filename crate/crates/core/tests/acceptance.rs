//! Acceptance gate: twelve end-to-end criteria covering the exact algebraic
//! identities, the closed-form quadrature cross-checks, the finite-section
//! band regressions, and the CLI determinism guarantee.  Each criterion is
//! one test printing a single `criterion NN (...): PASS` line; frozen
//! numeric thresholds are recorded from independent oracle runs (LAPACK
//! eigensolvers / exact singular-value decompositions / 30-digit
//! arbitrary-precision quadrature) noted next to each constant.

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hankel_spectra::cli::{load_config, run, RunMode};
use hankel_spectra::models::{
    block_symbol_of_omega_phi, mehler_fock_transform, mehler_identity_residual, psi0_quadrature,
    sigma_decomposition, zeta, zeta_direct, ModelPreset,
};
use hankel_spectra::predict::{predict_from_coefficient_model, CoefficientModel, OscillatoryTerm};
use hankel_spectra::sections::{
    band_fill_metrics, block_hankel_interleave_check, eigenvalues_jacobi, eigenvalues_symmetric,
    interlacing_check, nystrom_spectrum, section_spectrum, weighted_resolvent_probe,
    HankelCoefficients, WeightFactor, WeightSpec,
};
use hankel_spectra::symbols::{fourier_coefficients_panel, SymbolSpec};
use hankel_spectra::Complex64;

/// Leak tolerance used by every band-membership check.
const LEAK_TOL: f64 = 0.02;

fn pass(number: u32, name: &str) {
    println!("criterion {number:02} ({name}): PASS");
}

/// Deterministic uniform values in `[-1, 1)`.
fn random_values(count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

fn random_symmetric(n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let v = rng.gen_range(-1.0..1.0);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

/// Coefficients `h_n = (k+ + (-1)^n k- + sum 2 kappa sin(n theta - phi)) / (pi (n+1))`
/// of the additive multi-band model.
fn model_coefficients(model: &CoefficientModel, count: usize) -> HankelCoefficients {
    let values = (0..count)
        .map(|n| {
            let mut acc = model.kappa_plus + if n % 2 == 0 { model.kappa_minus } else { -model.kappa_minus };
            for term in &model.oscillatory {
                acc += 2.0 * term.kappa * (n as f64 * term.theta - term.phi).sin();
            }
            acc / (PI * (n as f64 + 1.0))
        })
        .collect();
    HankelCoefficients::from_values(values)
}

// ---------------------------------------------------------------------------
// 1. Coefficient identity of the argument-linear symbol.
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_coefficient_identity() {
    let start = Instant::now();
    let spec = SymbolSpec::from_preset(ModelPreset::OmegaPlus);
    let coeffs = fourier_coefficients_panel(&spec, 65).unwrap();
    for (n, &got) in coeffs.iter().enumerate() {
        let want = 1.0 / (PI * (n as f64 + 1.0));
        assert!(
            (got - want).abs() < 1e-10,
            "coefficient {n}: {got} vs {want} (delta {:e})",
            (got - want).abs()
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "coefficient identity took {elapsed:.2} s (budget 5 s)");
    pass(1, "coefficient identity");
}

// ---------------------------------------------------------------------------
// 2. Eigenfunction identity of the explicitly diagonalizable integral model.
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_mehler_formula() {
    let start = Instant::now();
    for tau in [0.5, 1.0, 2.0] {
        for t in [0.0, 1.0, 5.0] {
            let residual = mehler_identity_residual(tau, t).unwrap();
            assert!(residual < 1e-6, "tau={tau} t={t}: relative residual {residual:e}");
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "identity grid took {elapsed:.2} s (budget 60 s)");
    pass(2, "integral-model eigenfunction identity");
}

// ---------------------------------------------------------------------------
// 3. The odd spectral-parameter function: one-sided limits, oddness, and the
//    closed form against its direct-quadrature route.
// ---------------------------------------------------------------------------

#[test]
fn criterion_03_zeta_limits_and_routes() {
    assert!((zeta(1e-4) - 0.5).abs() < 1e-2, "zeta(+0) limit: {}", zeta(1e-4));
    assert!((zeta(-1e-4) + 0.5).abs() < 1e-2, "zeta(-0) limit: {}", zeta(-1e-4));
    for nu in [1e-3, 0.37, 2.0, 7.7, 41.5] {
        let odd = (zeta(nu) + zeta(-nu)).abs();
        assert!(odd < 1e-13, "oddness at nu={nu}: {odd:e}");
    }
    for nu in [0.1, 0.35, 0.9, 2.0, 4.0, 11.0, 26.0, 50.0] {
        let direct = zeta_direct(nu).unwrap();
        let delta = (direct - zeta(nu)).abs();
        assert!(delta < 1e-8, "route disagreement at nu={nu}: {delta:e}");
    }
    pass(3, "zeta limits, oddness, two routes");
}

// ---------------------------------------------------------------------------
// 4. Arctangent closed form of the principal-value line symbol.
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_psi0_closed_form() {
    for nu in [0.5_f64, 2.0, 10.0] {
        let closed = Complex64::new(0.0, (2.0 / PI) * nu.atan());
        let by_quad = psi0_quadrature(nu).unwrap();
        let delta = (by_quad - closed).norm();
        assert!(delta < 1e-8, "nu={nu}: quadrature vs closed form {delta:e}");
    }
    pass(4, "principal-value symbol closed form");
}

// ---------------------------------------------------------------------------
// 5. Exact algebraic identities: the interleave permutation and the
//    two-by-two mixing-matrix factorization.
// ---------------------------------------------------------------------------

#[test]
fn criterion_05_algebraic_identities() {
    let n = 16;
    let coeffs = HankelCoefficients::from_values(random_values(2 * n, 0x1D2C3B4A));
    let deviation = block_hankel_interleave_check(&coeffs, n).unwrap();
    assert!(deviation < 1e-15, "interleave deviation {deviation:e}");

    for phi in [0.0, 0.4, 1.2] {
        let d = sigma_decomposition(phi);
        let ortho = d.mixing.orthogonality_defect();
        assert!(ortho < 1e-12, "phi={phi}: orthogonality defect {ortho:e}");

        let m = d.mixing.conjugated_sign_matrix();
        for i in 0..2 {
            for j in 0..2 {
                let delta = (m[i][j] - d.principal_factor[i][j]).abs();
                assert!(delta < 1e-12, "phi={phi}: factor entry ({i},{j}) off by {delta:e}");
            }
        }
        for angle in [0.3, 1.7, 2.5, 4.0, 5.9] {
            let p = hankel_spectra::symbols::CirclePoint::new(angle);
            let direct = block_symbol_of_omega_phi(phi, p).unwrap();
            let recon = d.total(p).unwrap();
            let delta = direct.max_abs_diff(&recon);
            assert!(delta < 1e-12, "phi={phi} angle={angle}: reconstruction off by {delta:e}");
        }
    }
    pass(5, "interleave and factorization identities");
}

// ---------------------------------------------------------------------------
// 6. Eigensolver against the cyclic-Jacobi oracle, and Cauchy interlacing.
// ---------------------------------------------------------------------------

#[test]
fn criterion_06_eigensolver_correctness() {
    for (n, seed) in [(2, 31_u64), (5, 32), (11, 33), (24, 34), (48, 35), (64, 36)] {
        let m = random_symmetric(n, seed);
        let ql = eigenvalues_symmetric(&m).unwrap();
        let jacobi = eigenvalues_jacobi(&m).unwrap();
        let worst = ql
            .iter()
            .zip(jacobi.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        assert!(worst < 1e-9, "n={n}: max deviation from Jacobi {worst:e}");
    }

    for seed in 100..120_u64 {
        let coeffs = HankelCoefficients::from_values(random_values(64, seed));
        assert!(
            interlacing_check(&coeffs, 24).unwrap(),
            "interlacing failed for seed {seed}"
        );
    }
    pass(6, "eigensolver vs Jacobi, interlacing");
}

// ---------------------------------------------------------------------------
// 7. Band structure of the reciprocal-integer coefficient matrix.
// ---------------------------------------------------------------------------

#[test]
fn criterion_07_hilbert_band_structure() {
    let start = Instant::now();
    let sizes = [256_usize, 1024, 2048];
    let coeffs = HankelCoefficients::from_preset(ModelPreset::HilbertCoeffs, 4095).unwrap();
    let band = hankel_spectra::predict::Band::new(
        0.0,
        1.0,
        1,
        hankel_spectra::predict::BandKind::AbsolutelyContinuous,
    );

    let mut lambda_max = Vec::new();
    let mut fills = Vec::new();
    for &n in &sizes {
        let spectrum = section_spectrum(&coeffs, n).unwrap();
        for &ev in &spectrum.eigenvalues {
            assert!(
                (-1e-10..=1.0 + 1e-10).contains(&ev),
                "N={n}: eigenvalue {ev} outside [0,1] envelope"
            );
        }
        lambda_max.push(spectrum.lambda_max());
        fills.push(band_fill_metrics(&spectrum, std::slice::from_ref(&band), LEAK_TOL).per_band[0]
            .fill_distance);
    }

    assert!(
        lambda_max[0] < lambda_max[1] && lambda_max[1] < lambda_max[2],
        "largest eigenvalue not strictly increasing: {lambda_max:?}"
    );
    assert!(
        fills[0] >= fills[1] && fills[1] >= fills[2],
        "fill distance not non-increasing: {fills:?}"
    );
    // Frozen from an independent LAPACK run: lambda_max(2048) = 0.7967924661886556
    // and fill(2048) = 0.181465833; the local solver agrees to ~1e-15.
    assert!(
        lambda_max[2] >= 0.796792,
        "lambda_max(2048) = {} below its recorded bound",
        lambda_max[2]
    );
    assert!(fills[2] <= 0.1815, "fill(2048) = {} above its recorded bound", fills[2]);

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 300.0, "band-structure run took {elapsed:.1} s (budget 300 s)");
    pass(7, "reciprocal-integer matrix bands");
}

// ---------------------------------------------------------------------------
// 8. Band structure of the single-frequency oscillatory model.
// ---------------------------------------------------------------------------

#[test]
fn criterion_08_oscillatory_band_structure() {
    let theta = PI / 3.0;
    let phi = 0.4;

    let model = CoefficientModel {
        kappa_plus: 0.0,
        kappa_minus: 0.0,
        oscillatory: vec![OscillatoryTerm { kappa: 1.0, theta, phi }],
        alpha0: 1.0,
    };
    let prediction = predict_from_coefficient_model(&model).unwrap();
    assert_eq!(prediction.ac_bands.len(), 1);
    let band = prediction.ac_bands[0];
    assert!(
        (band.lo + 1.0).abs() < 1e-12 && (band.hi - 1.0).abs() < 1e-12,
        "predicted band [{}, {}] is not [-1, 1]",
        band.lo,
        band.hi
    );

    let coeffs =
        HankelCoefficients::from_preset(ModelPreset::OscillatoryCoeffs { theta, phi }, 4095)
            .unwrap();
    let mut fills = Vec::new();
    let mut leaks: Vec<Vec<f64>> = Vec::new();
    for n in [256_usize, 1024, 2048] {
        let spectrum = section_spectrum(&coeffs, n).unwrap();
        let report = band_fill_metrics(&spectrum, std::slice::from_ref(&band), LEAK_TOL);
        fills.push(report.per_band[0].fill_distance);
        if n > 256 {
            leaks.push(report.leaked);
        }
    }

    assert!(
        fills[0] >= fills[1] && fills[1] >= fills[2],
        "fill distance not non-increasing: {fills:?}"
    );
    // Frozen from an independent LAPACK run: fill(2048) = 0.193605430.
    assert!(fills[2] < 0.194, "fill(2048) = {} above its recorded bound", fills[2]);

    // Eigenvalues escaping the widened band must be few and must persist
    // (within 1e-3) when the section doubles — the signature of genuinely
    // discrete spectrum rather than numerical error.  The oracle run finds
    // no leaks at all at these sizes.
    let (at_1024, at_2048) = (&leaks[0], &leaks[1]);
    assert!(at_2048.len() < 10, "{} leaked eigenvalues at N=2048", at_2048.len());
    for &leak in at_2048 {
        let nearest = at_1024
            .iter()
            .map(|&p| (p - leak).abs())
            .fold(f64::INFINITY, f64::min);
        assert!(
            nearest < 1e-3,
            "leak at {leak} (N=2048) has no stable partner at N=1024 (nearest {nearest:e})"
        );
    }
    pass(8, "oscillatory model bands");
}

// ---------------------------------------------------------------------------
// 9. The three-term multi-band model: exact band chart and filling.
// ---------------------------------------------------------------------------

#[test]
fn criterion_09_multiband_model() {
    let model = CoefficientModel {
        kappa_plus: 1.0,
        kappa_minus: 0.5,
        oscillatory: vec![OscillatoryTerm { kappa: 0.25, theta: PI / 3.0, phi: 0.0 }],
        alpha0: 1.0,
    };
    let prediction = predict_from_coefficient_model(&model).unwrap();
    let expected = [(0.0, 1.0), (0.0, 0.5), (-0.25, 0.25)];
    assert_eq!(prediction.ac_bands.len(), expected.len());
    for (band, (lo, hi)) in prediction.ac_bands.iter().zip(expected.iter()) {
        assert!(
            (band.lo - lo).abs() < 1e-12 && (band.hi - hi).abs() < 1e-12,
            "band [{}, {}] vs expected [{lo}, {hi}]",
            band.lo,
            band.hi
        );
    }

    let coeffs = model_coefficients(&model, 4095);
    let mut fills: Vec<[f64; 3]> = Vec::new();
    for n in [256_usize, 1024, 2048] {
        let spectrum = section_spectrum(&coeffs, n).unwrap();
        let report = band_fill_metrics(&spectrum, &prediction.ac_bands, LEAK_TOL);
        fills.push([
            report.per_band[0].fill_distance,
            report.per_band[1].fill_distance,
            report.per_band[2].fill_distance,
        ]);
    }

    // The probe-grid fill metric wiggles at the 1e-3 scale while the trend
    // decreases (oracle runs show a +7.5e-4 step on the middle band between
    // the last two sizes), so consecutive sizes are compared with a 2e-3
    // slack and the first-to-last decrease is required strictly.
    const FILL_MONOTONE_SLACK: f64 = 2e-3;
    for band_id in 0..3 {
        let series: Vec<f64> = fills.iter().map(|f| f[band_id]).collect();
        for pair in series.windows(2) {
            assert!(
                pair[1] <= pair[0] + FILL_MONOTONE_SLACK,
                "band {band_id}: fill rose {} -> {} beyond slack",
                pair[0],
                pair[1]
            );
        }
        assert!(
            series[2] < series[0],
            "band {band_id}: fill did not decrease end to end: {series:?}"
        );
    }
    pass(9, "three-term model band chart and filling");
}

// ---------------------------------------------------------------------------
// 10. Quadrature discretization of the integral model: spectrum envelope and
//     the unitarity (Parseval) spot-check of its diagonalizing transform.
// ---------------------------------------------------------------------------

#[test]
fn criterion_10_nystrom_integral_model() {
    // 40 panels x 10 nodes = 400 quadrature points on the log grid [-8, 8].
    let spectrum = nystrom_spectrum(ModelPreset::MehlerKernel, 8.0, 40, 10).unwrap();
    for &ev in &spectrum.eigenvalues {
        assert!(
            (-1e-10..=1.0 + 1e-8).contains(&ev),
            "eigenvalue {ev} outside the [0,1] envelope"
        );
    }
    // The truncation to the log window [-8, 8] caps the largest eigenvalue at
    // 0.7321398502 (quadrature-converged; cross-checked against an
    // independent LAPACK run, which agrees to 1e-13).  Widening the window,
    // not refining the rule, is what moves it toward 1.
    assert!(
        spectrum.lambda_max() >= 0.732,
        "lambda_max = {} below its recorded bound",
        spectrum.lambda_max()
    );

    // Unitarity spot-check of the diagonalizing transform on f(t) = e^{-t}:
    // the squared transform must integrate to ||f||^2 = 1/2.  Spot values
    // frozen from a 30-digit arbitrary-precision run of the closed form
    // sqrt(2/pi) e K_{i tau}(1) sqrt(tau tanh(pi tau)).
    let f = |t: f64| (-t).exp();
    let spots = mehler_fock_transform(&f, (0.0, 40.0), &[0.5, 1.5, 3.0]).unwrap();
    let oracle = [0.56405331563369279_f64, 0.46670972049233543, -0.0033289049268179615];
    for ((tau, got), want) in spots.tau_grid.iter().zip(&spots.values).zip(&oracle) {
        assert!(
            (got - want).abs() < 1e-12,
            "transform at tau={tau}: {got} vs recorded {want}"
        );
    }

    let step = 0.05;
    let grid: Vec<f64> = (0..=120).map(|k| step * k as f64).collect();
    let transform = mehler_fock_transform(&f, (0.0, 40.0), &grid).unwrap();
    let mut integral = 0.0;
    for (k, v) in transform.values.iter().enumerate() {
        let w = if k == 0 || k + 1 == transform.values.len() { 0.5 } else { 1.0 };
        integral += w * v * v * step;
    }
    // Trapezoid on [0, 6]; the tail beyond tau = 6 is 3.1e-8.
    assert!(
        (integral - 0.5).abs() < 0.005,
        "Parseval integral {integral} differs from 1/2 beyond 1%"
    );
    pass(10, "integral-model discretization and transform unitarity");
}

// ---------------------------------------------------------------------------
// 11. The weighted resolvent probe: identity weights against the eigenvalue
//     route, boundedness toward the band interior, and the far-field bound.
// ---------------------------------------------------------------------------

#[test]
fn criterion_11_resolvent_probe() {
    let coeffs = HankelCoefficients::from_preset(ModelPreset::HilbertCoeffs, 4095).unwrap();

    // Identity weights: the probe must reproduce 1 / dist(z, spectrum).  The
    // shifts are chosen with a unique nearest eigenvalue (the power iteration
    // needs a singular-value gap to converge below 1e-8).
    let n = 64;
    let small = HankelCoefficients::from_values(coeffs.values()[..2 * n - 1].to_vec());
    let eigenvalues = section_spectrum(&small, n).unwrap();
    let shifts = [
        Complex64::new(0.68, 0.05),
        Complex64::new(0.6, 0.03),
        Complex64::new(1.3, 0.4),
    ];
    let probes = weighted_resolvent_probe(&small, &WeightSpec::identity(), &shifts, n).unwrap();
    for (&z, &probe) in shifts.iter().zip(&probes) {
        let dist = eigenvalues
            .eigenvalues
            .iter()
            .map(|&ev| (Complex64::new(ev, 0.0) - z).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(
            (probe - 1.0 / dist).abs() < 1e-8,
            "z={z}: probe {probe} vs 1/dist {}",
            1.0 / dist
        );
    }

    // Weighted probe toward the interior point 1/2 of the band: bounded by
    // the recorded ceiling and non-exploding as the shift approaches the
    // axis.  Ceiling frozen from an independent exact-SVD run at N=1024
    // (values 2.9640, 3.5012, 3.5818; the power iteration matches to 1e-13).
    let n = 1024;
    let weights = WeightSpec::new(vec![WeightFactor { angle: 0.0, beta: 2.0 }]);
    let shifts: Vec<Complex64> =
        [1e-1, 3e-2, 1e-2].iter().map(|&eta| Complex64::new(0.5, eta)).collect();
    let probes = weighted_resolvent_probe(&coeffs, &weights, &shifts, n).unwrap();
    for (&z, &probe) in shifts.iter().zip(&probes) {
        assert!(probe < 3.8, "z={z}: weighted probe {probe} above recorded ceiling");
    }
    for pair in probes.windows(2) {
        let ratio = pair[1] / pair[0];
        assert!(ratio < 2.0, "probe ratio {ratio} between successive shifts reached 2");
    }

    // Far from the spectrum the weight can only help: the probe is capped by
    // the unweighted resolvent bound 1 / dist(z, [0, 1]).
    let z = Complex64::new(5.0, 0.1);
    let far = weighted_resolvent_probe(&coeffs, &weights, &[z], n).unwrap()[0];
    let dist = (4.0_f64 * 4.0 + 0.1 * 0.1).sqrt();
    assert!(
        far <= 1.0 / dist + 1e-6,
        "far-field probe {far} exceeds resolvent bound {}",
        1.0 / dist
    );
    pass(11, "weighted resolvent probe");
}

// ---------------------------------------------------------------------------
// 12. Determinism: two identical spectrum runs emit byte-identical CSVs.
// ---------------------------------------------------------------------------

#[test]
fn criterion_12_deterministic_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("run.toml");
    std::fs::write(
        &config_path,
        r#"
[run]
mode = "spectrum"
sizes = [64, 128]

[model]
kind = "preset"
preset = "hilbert"
"#,
    )
    .unwrap();

    let mut artifacts: Vec<Vec<Vec<u8>>> = Vec::new();
    for sub in ["first", "second"] {
        let out = dir.path().join(sub);
        let config = load_config(
            &config_path,
            Some(RunMode::Spectrum),
            Some(out.clone()),
            None,
        )
        .unwrap();
        let bundle = run(&config).unwrap();
        assert!(bundle.passed);
        artifacts.push(
            ["bands.csv", "eigenvalues.csv", "fill.csv"]
                .iter()
                .map(|name| std::fs::read(out.join(name)).unwrap())
                .collect(),
        );
    }
    for (first, second) in artifacts[0].iter().zip(&artifacts[1]) {
        assert_eq!(first, second, "artifact bytes differ between identical runs");
    }
    pass(12, "byte-identical artifacts");
}
