//! Adaptive Gauss–Kronrod (G7–K15) quadrature.
//!
//! Used in production only by the Backlund density bracket (where the
//! quadrature error estimate is folded into the bracket slack) and by the
//! lemma self-checks / test oracles. The error budgets themselves are exact
//! closed-form evaluations and never integrate anything.

use crate::error::{Error, Result};

/// Result of an adaptive integration: the value and a rigorous-in-practice
/// error estimate (sum of per-panel Kronrod−Gauss discrepancies).
#[derive(Clone, Copy, Debug)]
pub struct Quad {
    /// Integral approximation.
    pub value: f64,
    /// Accumulated error estimate.
    pub error: f64,
}

// 15-point Kronrod abscissae on [0, 1] side (symmetric), QUADPACK dqk15.
const XGK: [f64; 8] = [
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
];
// Kronrod weights matching XGK.
const WGK: [f64; 8] = [
    0.02293532201052922,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.16900472663926790,
    0.19035057806478541,
    0.20443294007529889,
    0.20948214108472783,
];
// 7-point Gauss weights, matching the odd-index abscissae of XGK.
const WG: [f64; 4] = [
    0.12948496616886969,
    0.27970539148927667,
    0.38183005050511894,
    0.41795918367346939,
];

/// One G7–K15 panel on [a, b]: returns (kronrod, |kronrod − gauss|).
fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(mid - dx) + f(mid + dx);
        kron += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    kron *= half;
    gauss *= half;
    (kron, (kron - gauss).abs())
}

/// Adaptively integrate `f` over the finite interval [a, b] to relative
/// tolerance `rel_tol` (with a tiny absolute floor for near-zero integrals).
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> Result<Quad> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(Error::Precondition(format!(
            "integration interval [{a}, {b}] must be finite and ordered"
        )));
    }
    // Worklist of panels, largest error first is unnecessary: simple
    // stack-based bisection with a global budget is robust for the smooth
    // integrands used here.
    let mut stack = vec![(a, b)];
    let mut value = 0.0;
    let mut error = 0.0;
    let mut done: Vec<(f64, f64)> = Vec::new();
    let mut splits = 0usize;
    const MAX_SPLITS: usize = 4000;

    while let Some((lo, hi)) = stack.pop() {
        let (v, e) = panel(f, lo, hi);
        // Panel acceptance: error small relative to the panel value or
        // absolutely negligible at the target tolerance.
        let scale = v.abs().max(1e-300);
        if e <= rel_tol * scale || e <= 1e-305 || (hi - lo) < 1e-14 * (b - a) {
            done.push((v, e));
        } else {
            splits += 1;
            if splits > MAX_SPLITS {
                return Err(Error::Quadrature(format!(
                    "exceeded {MAX_SPLITS} panel splits on [{a}, {b}]"
                )));
            }
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }
    // Combine with compensation; panels arrive in arbitrary order but the
    // totals here are only error-checked, not bit-reproducibility-critical.
    let mut acc = crate::sum::Neumaier::new();
    let mut err_acc = crate::sum::Neumaier::new();
    for (v, e) in done {
        acc.add(v);
        err_acc.add(e);
    }
    value += acc.total();
    error += err_acc.total();
    if error > rel_tol.max(1e-15) * value.abs().max(1e-300) * 10.0 && error > 1e-290 {
        // The per-panel criterion already passed; this only triggers when
        // the requested tolerance was unattainably small for the integrand.
        return Err(Error::Quadrature(format!(
            "accumulated error {error:.3e} exceeds tolerance for value {value:.6e}"
        )));
    }
    Ok(Quad { value, error })
}

/// Integrate `f` over [a, ∞) via the substitution x = a + t/(1−t).
pub fn integrate_to_inf<F: Fn(f64) -> f64>(f: &F, a: f64, rel_tol: f64) -> Result<Quad> {
    let g = |t: f64| {
        let one_minus = 1.0 - t;
        let x = a + t / one_minus;
        let jac = 1.0 / (one_minus * one_minus);
        let v = f(x) * jac;
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    // Stop just short of t = 1; the integrands used here decay at least as
    // fast as a Gaussian or x⁻³, so the discarded sliver is far below any
    // requested tolerance.
    integrate(&g, 0.0, 1.0 - 1e-12, rel_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // K15 integrates degree ≤ 22 exactly; a quartic is child's play.
        let q = integrate(&|x: f64| 3.0 * x * x * x * x, 0.0, 2.0, 1e-12).unwrap();
        assert!((q.value - 19.2).abs() < 1e-12);
    }

    #[test]
    fn standard_normal_mass() {
        let q = integrate(
            &|x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt(),
            -10.0,
            10.0,
            1e-12,
        )
        .unwrap();
        assert!((q.value - 1.0).abs() < 1e-11, "mass = {}", q.value);
    }

    #[test]
    fn oscillatory_integrand_converges() {
        // ∫₀^1 cos(25x) dx = sin(25)/25 (nonzero, so the relative target
        // is meaningful; a cancellation-to-zero integral has no relative
        // scale and is rejected rather than silently mis-certified).
        let q = integrate(&|x: f64| (25.0 * x).cos(), 0.0, 1.0, 1e-11).unwrap();
        assert!((q.value - 25.0f64.sin() / 25.0).abs() < 1e-12, "{}", q.value);
    }

    #[test]
    fn semi_infinite_exponential() {
        // ∫₂^∞ e^{−x} dx = e^{−2}.
        let q = integrate_to_inf(&|x: f64| (-x).exp(), 2.0, 1e-11).unwrap();
        assert!((q.value - (-2.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(integrate(&|x: f64| x, 1.0, 1.0, 1e-9).is_err());
        assert!(integrate(&|x: f64| x, f64::NEG_INFINITY, 0.0, 1e-9).is_err());
    }

    #[test]
    fn error_estimate_brackets_truth() {
        let q = integrate(&|x: f64| x.ln(), 1.0, 5.0, 1e-10).unwrap();
        let truth = 5.0f64 * 5.0f64.ln() - 5.0 - (1.0f64.ln() - 1.0);
        assert!((q.value - truth).abs() <= q.error.max(1e-12));
    }
}
