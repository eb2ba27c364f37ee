//! Quadrature primitives shared across the crate.
//!
//! Two routes are provided on purpose: an adaptive Gauss–Kronrod integrator
//! (7-point Gauss / 15-point Kronrod pairs with bisection of the worst
//! interval), and fixed composite Gauss–Legendre panels.  The adaptive route is
//! the workhorse; the panel route serves both as the Nystrom grid generator and
//! as an independent cross-check path in the verification suites.

use thiserror::Error;

/// Abscissae of the 15-point Kronrod rule on `[-1, 1]` (non-negative half).
///
/// Odd-indexed entries are also the 7-point Gauss abscissae.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];

/// Kronrod weights matching [`XGK`].
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];

/// Weights of the embedded 7-point Gauss rule (at `XGK[1], XGK[3], XGK[5], XGK[7]`).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// Failure of the adaptive integrator to reach the requested tolerance.
#[derive(Debug, Error)]
#[error("quadrature did not converge: error estimate {error:.3e} exceeds tolerance {tolerance:.3e} after {intervals} intervals")]
pub struct NonConvergence {
    pub error: f64,
    pub tolerance: f64,
    pub intervals: usize,
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    /// Approximate value of the integral.
    pub value: f64,
    /// Accumulated error estimate (sum of per-interval Kronrod estimates).
    pub error: f64,
    /// Number of subintervals in the final partition.
    pub intervals: usize,
}

/// One evaluated subinterval of the adaptive scheme.
#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// QUADPACK-style conservative rescaling of the raw `|K15 - G7|` difference.
fn rescale_error(err: f64, result_abs: f64, result_asc: f64) -> f64 {
    let mut err = err.abs();
    if result_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / result_asc).powf(1.5);
        err = if scale < 1.0 { result_asc * scale } else { result_asc };
    }
    let uflow = f64::MIN_POSITIVE;
    if result_abs > uflow / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * result_abs);
    }
    err
}

/// 15-point Kronrod rule with embedded 7-point Gauss estimate on `[a, b]`.
///
/// Returns the Kronrod value and a rescaled error estimate.  Endpoints are
/// never evaluated, so integrands with (integrable) endpoint singularities or
/// one-sided limits at the endpoints are acceptable.
pub fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut resg = WG[3] * fc;
    let mut resk = WGK[7] * fc;
    let mut resabs = resk.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        let sum = f1 + f2;
        resk += WGK[j] * sum;
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * sum;
        }
    }

    let mean = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let value = resk * half;
    let err = rescale_error((resk - resg) * half, resabs * half.abs(), resasc * half.abs());
    (value, err)
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]` to absolute
/// tolerance `abs_tol`, bisecting the interval with the largest error estimate
/// until the accumulated estimate is below tolerance.
pub fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> Result<QuadResult, NonConvergence> {
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0, intervals: 0 });
    }
    let (sign, lo, hi) = if a < b { (1.0, a, b) } else { (-1.0, b, a) };

    let (value, error) = kronrod15(f, lo, hi);
    let mut parts = vec![Interval { a: lo, b: hi, value, error }];

    loop {
        let total_err: f64 = parts.iter().map(|p| p.error).sum();
        if total_err <= abs_tol {
            let total: f64 = parts.iter().map(|p| p.value).sum();
            return Ok(QuadResult { value: sign * total, error: total_err, intervals: parts.len() });
        }
        if parts.len() >= max_intervals {
            return Err(NonConvergence {
                error: total_err,
                tolerance: abs_tol,
                intervals: parts.len(),
            });
        }

        // Split the worst interval, unless it is already at rounding width.
        let mut worst = 0;
        for (i, p) in parts.iter().enumerate() {
            if p.error > parts[worst].error {
                worst = i;
            }
        }
        let Interval { a: wa, b: wb, .. } = parts[worst];
        let mid = 0.5 * (wa + wb);
        if mid <= wa || mid >= wb {
            // Can no longer be refined in f64; accept the current estimate if it
            // is within a generous factor of the tolerance, otherwise fail.
            let total_err: f64 = parts.iter().map(|p| p.error).sum();
            return Err(NonConvergence {
                error: total_err,
                tolerance: abs_tol,
                intervals: parts.len(),
            });
        }
        let (v1, e1) = kronrod15(f, wa, mid);
        let (v2, e2) = kronrod15(f, mid, wb);
        parts[worst] = Interval { a: wa, b: mid, value: v1, error: e1 };
        parts.push(Interval { a: mid, b: wb, value: v2, error: e2 });
    }
}

/// Adaptive integration of a complex-valued integrand (real and imaginary parts
/// are integrated independently; the reported error is the sum of both).
pub fn adaptive_complex<F: Fn(f64) -> num_complex::Complex64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> Result<(num_complex::Complex64, f64), NonConvergence> {
    let re = adaptive(&|x| f(x).re, a, b, abs_tol, max_intervals)?;
    let im = adaptive(&|x| f(x).im, a, b, abs_tol, max_intervals)?;
    Ok((num_complex::Complex64::new(re.value, im.value), re.error + im.error))
}

/// Gauss–Legendre nodes and weights of order `n` on `[-1, 1]`.
///
/// Computed by Newton iteration on the Legendre polynomial with the usual
/// cosine initial guesses; accurate to machine precision for the orders used
/// here (`n <= 128`).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Initial guess for the i-th root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and its derivative by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Composite Gauss–Legendre integration: `panels` equal panels on `[a, b]`,
/// each integrated with an `order`-point Gauss rule.
///
/// This fixed, non-adaptive route is kept deliberately independent of
/// [`adaptive`] so the two can cross-check each other.
pub fn panel_gauss_legendre<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + width * p as f64;
        let c = lo + 0.5 * width;
        let h = 0.5 * width;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            acc += w * f(c + h * x);
        }
        total += acc * h;
    }
    total
}
