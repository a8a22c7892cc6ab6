//! Closed-form Gaussian-kernel identities and tail bounds.
//!
//! The kernel `K(x) = √(α/2π)·e^{−αx²/2}` drives the integrated explicit
//! formula; everything the error budgets need about it reduces to five
//! classical facts (Fourier transform, first moment, weighted tail bound,
//! oscillatory tail bound, truncated Fourier identity). Production code uses
//! only the closed forms below — numerical integration appears solely in the
//! self-check suites that validate them.

use crate::error::Result;
use crate::quad;

/// The Gaussian kernel `K(x) = √(α/2π)·e^{−αx²/2}`.
pub fn gaussian_kernel(alpha: f64, x: f64) -> f64 {
    assert!(alpha > 0.0, "alpha must be positive");
    (alpha / (2.0 * std::f64::consts::PI)).sqrt() * (-0.5 * alpha * x * x).exp()
}

/// Fourier transform of the kernel: `∫ K(x)·e^{icx} dx = e^{−c²/(2α)}`.
pub fn kernel_fourier(alpha: f64, c: f64) -> f64 {
    assert!(alpha > 0.0, "alpha must be positive");
    (-c * c / (2.0 * alpha)).exp()
}

/// First moment over [0, η]: `∫₀^η x·K(x) dx = (1/√(2πα))·(1 − e^{−αη²/2})`.
pub fn kernel_first_moment(alpha: f64, eta: f64) -> f64 {
    assert!(alpha > 0.0 && eta > 0.0, "alpha and eta must be positive");
    (1.0 - (-0.5 * alpha * eta * eta).exp()) / (2.0 * std::f64::consts::PI * alpha).sqrt()
}

/// Tail bound for a monotone-decreasing positive weight `h`:
/// `∫_c^∞ h(x)·e^{−x²/(2α)} dx ≤ (α/c)·h(c)·e^{−c²/(2α)}`.
pub fn gaussian_tail_with_weight(alpha: f64, c: f64, h_at_c: f64) -> f64 {
    assert!(
        alpha > 0.0 && c > 0.0 && h_at_c > 0.0,
        "alpha, c, h(c) must be positive"
    );
    (alpha / c) * h_at_c * (-c * c / (2.0 * alpha)).exp()
}

/// Oscillatory tail bound: `|∫_η^∞ K(x)·e^{icx} dx| ≤ K(η)·min{2/c, 1/(αη)}`.
pub fn oscillatory_tail_bound(alpha: f64, eta: f64, c: f64) -> f64 {
    assert!(
        alpha > 0.0 && eta > 0.0 && c > 0.0,
        "alpha, eta, c must be positive"
    );
    gaussian_kernel(alpha, eta) * (2.0 / c).min(1.0 / (alpha * eta))
}

/// Truncated Fourier identity:
/// `∫_{−η}^{η} K(x)·e^{icx} dx = e^{−c²/(2α)} − 2·∫_η^∞ K(x)·cos(cx) dx`,
/// with the tail integral evaluated by adaptive quadrature. Self-check /
/// oracle use only.
pub fn truncated_fourier(alpha: f64, eta: f64, c: f64) -> Result<f64> {
    assert!(
        alpha > 0.0 && eta > 0.0 && c > 0.0,
        "alpha, eta, c must be positive"
    );
    // The tail is negligible past η + 12 standard deviations of the kernel.
    let sigma = alpha.sqrt().recip();
    let cut = eta + 12.0 * sigma;
    let tail = quad::integrate(
        &|x: f64| gaussian_kernel(alpha, x) * (c * x).cos(),
        eta,
        cut,
        1e-12,
    )?;
    Ok(kernel_fourier(alpha, c) - 2.0 * tail.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, integrate_to_inf};

    #[test]
    fn kernel_normalizations() {
        // α = 2π puts the peak exactly at 1.
        assert!((gaussian_kernel(2.0 * std::f64::consts::PI, 0.0) - 1.0).abs() < 1e-15);
        // α = 1 is the standard normal density.
        assert!((gaussian_kernel(1.0, 0.0) - 0.3989422804014327).abs() < 1e-15);
        // Unit mass for a few sharpness values.
        for &alpha in &[0.5f64, 1.0, 100.0] {
            let sigma = alpha.sqrt().recip();
            let q = integrate(
                &|x: f64| gaussian_kernel(alpha, x),
                -14.0 * sigma,
                14.0 * sigma,
                1e-12,
            )
            .unwrap();
            assert!((q.value - 1.0).abs() < 1e-10, "alpha={alpha}: {}", q.value);
        }
    }

    #[test]
    fn fourier_against_quadrature() {
        // ∫ K(x) cos(cx) dx = e^{−c²/2α}; the sine part cancels by symmetry.
        let alpha = 1.0e4f64;
        let c = 50.0;
        let sigma = alpha.sqrt().recip();
        let q = integrate(
            &|x: f64| gaussian_kernel(alpha, x) * (c * x).cos(),
            -14.0 * sigma,
            14.0 * sigma,
            1e-12,
        )
        .unwrap();
        assert!((q.value - kernel_fourier(alpha, c)).abs() < 1e-10);
        assert_eq!(kernel_fourier(123.0, 0.0), 1.0);
        assert!((kernel_fourier(2.0, 2.0) - (-1.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn first_moment_limits_and_quadrature() {
        let alpha = 1.0e6;
        // η → ∞ limit is 1/√(2πα).
        let limit = (2.0 * std::f64::consts::PI * alpha).sqrt().recip();
        assert!((kernel_first_moment(alpha, 10.0) - limit).abs() < 1e-18);
        // Small η matches quadrature tightly.
        let eta = 1.0e-3;
        let q = integrate(&|x: f64| x * gaussian_kernel(alpha, x), 0.0, eta, 1e-13).unwrap();
        assert!((q.value - kernel_first_moment(alpha, eta)).abs() < 1e-12);
    }

    #[test]
    fn weighted_tail_bound_dominates() {
        // h ≡ 1: bound (α/c)·e^{−c²/2α} vs the true tail.
        for &(alpha, c) in &[(1.0, 1.0), (1.0, 3.0), (25.0, 10.0)] {
            let bound = gaussian_tail_with_weight(alpha, c, 1.0);
            let truth = integrate_to_inf(&|x: f64| (-x * x / (2.0 * alpha)).exp(), c, 1e-11)
                .unwrap()
                .value;
            assert!(truth <= bound * (1.0 + 1e-9), "α={alpha} c={c}: {truth} > {bound}");
        }
        // Linearity in the weight value.
        let b1 = gaussian_tail_with_weight(2.0, 1.5, 1.0);
        let b2 = gaussian_tail_with_weight(2.0, 1.5, 2.0);
        assert!((b2 - 2.0 * b1).abs() < 1e-16);
    }

    #[test]
    fn oscillatory_bound_dominates_quadrature() {
        let (alpha, eta, c) = (100.0, 0.5, 30.0);
        let bound = oscillatory_tail_bound(alpha, eta, c);
        let sigma = alpha.sqrt().recip();
        let re = integrate(
            &|x: f64| gaussian_kernel(alpha, x) * (c * x).cos(),
            eta,
            eta + 14.0 * sigma,
            1e-12,
        )
        .unwrap()
        .value;
        let im = integrate(
            &|x: f64| gaussian_kernel(alpha, x) * (c * x).sin(),
            eta,
            eta + 14.0 * sigma,
            1e-12,
        )
        .unwrap()
        .value;
        assert!(re.hypot(im) <= bound);
        // At c = 2αη both branches of the min agree.
        let alpha = 7.0f64;
        let eta = 0.3;
        let c_star = 2.0 * alpha * eta;
        assert!((2.0 / c_star - 1.0 / (alpha * eta)).abs() < 1e-16);
    }

    #[test]
    fn truncated_fourier_identity() {
        let (alpha, eta, c) = (50.0, 0.2, 6.0);
        let lhs = integrate(
            &|x: f64| gaussian_kernel(alpha, x) * (c * x).cos(),
            -eta,
            eta,
            1e-12,
        )
        .unwrap()
        .value;
        let rhs = truncated_fourier(alpha, eta, c).unwrap();
        assert!((lhs - rhs).abs() < 1e-10, "lhs={lhs} rhs={rhs}");
        // c = 0 gives the erf-type mass on [−η, η], strictly below 1.
        let mass = truncated_fourier(1.0, 0.5, 1e-30).unwrap();
        assert!(mass > 0.0 && mass < 1.0);
    }
}
