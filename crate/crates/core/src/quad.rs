//! Adaptive quadrature on a nested Gauss–Kronrod 7/15 pair.
//!
//! Panels are bisected until the Kronrod-minus-Gauss error estimate meets
//! the requested absolute tolerance; the tolerance budget is split evenly
//! between halves on each subdivision.

/// Kronrod abscissae on [-1, 1] (positive half; the rule is symmetric).
/// Odd indices are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// 7-point Gauss weights for nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    /// Accumulated per-panel error estimates.
    pub abs_error: f64,
    /// False when the subdivision depth limit was reached before all
    /// panels met their local tolerance.
    pub converged: bool,
}

const MAX_DEPTH: u32 = 48;

/// One Kronrod-15 evaluation over [a, b]; returns (integral, error estimate).
fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);

    let fc = f(center);
    let mut result_gauss = WG[3] * fc;
    let mut result_kronrod = WGK[7] * fc;

    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(center - dx) + f(center + dx);
        result_kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * fsum;
        }
    }

    result_gauss *= half;
    result_kronrod *= half;
    (result_kronrod, (result_kronrod - result_gauss).abs())
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    out: &mut QuadResult,
) {
    let (value, err) = kronrod15(f, a, b);
    if !value.is_finite() {
        out.value = f64::NAN;
        out.converged = false;
        return;
    }
    if err <= tol || depth >= MAX_DEPTH {
        out.value += value;
        out.abs_error += err;
        if err > tol {
            out.converged = false;
        }
        return;
    }
    let mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, out);
    adapt(f, mid, b, 0.5 * tol, depth + 1, out);
}

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> QuadResult {
    integrate_with_breaks(f, &[a, b], abs_tol)
}

/// Integrate over consecutive panels `[breaks[0], breaks[1]], ...`.
///
/// Callers that know where an integrand peaks pass interior breakpoints so
/// the initial sampling cannot step over a narrow feature undetected.
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(f: F, breaks: &[f64], abs_tol: f64) -> QuadResult {
    assert!(breaks.len() >= 2, "need at least two breakpoints");
    let mut out = QuadResult {
        value: 0.0,
        abs_error: 0.0,
        converged: true,
    };
    let n = breaks.len() - 1;
    let tol_per_segment = abs_tol / n as f64;
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        debug_assert!(a < b, "breakpoints must be strictly increasing");
        adapt(&f, a, b, tol_per_segment, 0, &mut out);
        if out.value.is_nan() {
            return out;
        }
    }
    out
}

/// Deduplicate and clamp candidate breakpoints into `[a, b]`, keeping the
/// endpoints; convenience for building breakpoint lists around known peaks.
pub fn clamp_breaks(a: f64, b: f64, interior: &[f64]) -> Vec<f64> {
    let mut pts = vec![a];
    let mut sorted: Vec<f64> = interior
        .iter()
        .copied()
        .filter(|x| x.is_finite() && *x > a && *x < b)
        .collect();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    for x in sorted {
        if x - pts.last().unwrap() > 1e-12 * (b - a) {
            pts.push(x);
        }
    }
    pts.push(b);
    pts
}
