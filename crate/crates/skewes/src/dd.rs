//! Double-word (two-float) arithmetic for accurate phase reduction.
//!
//! The damped zero sums need cos(ωγ) and sin(ωγ) for products ωγ as large as
//! ~10¹². A naive binary64 product carries an absolute error near
//! ulp(ωγ) ≈ 10⁻⁴ at that magnitude — fatal, since the sum terms oscillate on
//! scale 1. Representing the product and the modulus 2π as unevaluated
//! double-word sums keeps the reduced phase accurate to well below 10⁻¹²
//! absolute, after which the standard library `sin_cos` contributes < 1 ulp.
//!
//! The building blocks are the classical error-free transformations
//! (Dekker/Knuth two-sum, FMA-based two-product).

/// An unevaluated sum `hi + lo` with `|lo| ≤ ½ ulp(hi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    /// Leading component.
    pub hi: f64,
    /// Trailing compensation term.
    pub lo: f64,
}

/// 2π to double-word precision: `TWO_PI.hi + TWO_PI.lo` carries ~32 decimal
/// digits of 6.28318530717958647692528676655900577…
pub const TWO_PI: Dd = Dd {
    hi: 6.283185307179586,
    lo: 2.4492935982947064e-16,
};

/// Error-free sum of two floats (Knuth): returns `(s, e)` with `s = fl(a+b)`
/// and `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| ≥ |b|` (Dekker). One branch-free operation
/// cheaper than [`two_sum`].
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add: returns `(p, e)` with
/// `p = fl(a·b)` and `a·b = p + e` exactly.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    /// Exact double-word product of two single floats.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    /// Collapse to a single float (correctly rounded sum of the two words).
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Reduce the product ω·γ modulo 2π into (−π, π], treating ω·γ as the exact
/// real product of its binary64 arguments.
///
/// For ωγ ≤ 10¹² the absolute error of the returned phase is below 10⁻¹³:
/// the product and `n·2π` are formed with error-free transformations, the
/// leading cancellation `p.hi − fl(n·2π.hi)` is exact by Sterbenz's lemma,
/// and only the O(10⁻²⁰) rounding of `n·2π.lo` plus the final double-word
/// collapse survive.
#[inline]
pub fn reduce_two_pi(omega: f64, gamma: f64) -> f64 {
    let p = Dd::from_prod(omega, gamma);
    // Nearest multiple of 2π. For ωγ ≤ 10¹² we get n ≤ 1.6·10¹¹ < 2⁵³, so n
    // is exact, and the quotient rounding shifts the result by at most one
    // period, which the final fold-in handles.
    let n = (p.hi / TWO_PI.hi).round();
    if n == 0.0 {
        return p.to_f64();
    }
    let (q1, q2) = two_prod(n, TWO_PI.hi);
    let q3 = n * TWO_PI.lo;
    // p.hi and q1 agree to within ~π, so the subtraction is exact.
    let d = p.hi - q1;
    // Accumulate the small corrections in descending order of magnitude.
    let (s1, e1) = two_sum(d, -q2);
    let (s2, e2) = two_sum(s1, p.lo);
    let r = s2 + (e1 + e2 - q3);
    // One guard fold keeps the result in (−π, π] even when the quotient
    // rounding landed on a neighbouring multiple.
    if r > std::f64::consts::PI {
        r - TWO_PI.hi - TWO_PI.lo
    } else if r <= -std::f64::consts::PI {
        r + TWO_PI.hi + TWO_PI.lo
    } else {
        r
    }
}

/// `(sin ωγ, cos ωγ)` with the phase reduced in double-word precision.
#[inline]
pub fn sin_cos_prod(omega: f64, gamma: f64) -> (f64, f64) {
    reduce_two_pi(omega, gamma).sin_cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sum_is_exact() {
        let (s, e) = two_sum(1.0, 1e-17);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-17);
        let (s, e) = two_sum(0.1, 0.2);
        // s is the rounded sum; s + e must reconstruct more accurately.
        assert_eq!(s, 0.1 + 0.2);
        assert!(e.abs() < f64::EPSILON);
    }

    #[test]
    fn two_prod_captures_rounding() {
        let a = 1.0 + f64::EPSILON;
        let b = 1.0 + f64::EPSILON;
        let (p, e) = two_prod(a, b);
        // a·b = 1 + 2ε + ε²; the ε² survives only in e.
        assert_eq!(p, 1.0 + 2.0 * f64::EPSILON);
        assert_eq!(e, f64::EPSILON * f64::EPSILON);
    }

    #[test]
    fn two_pi_words_are_consistent() {
        // hi must be the nearest double to 2π and lo the correction.
        assert_eq!(TWO_PI.hi, 2.0 * std::f64::consts::PI);
        assert!(TWO_PI.lo.abs() < f64::EPSILON * TWO_PI.hi);
    }

    #[test]
    fn small_products_pass_through() {
        let r = reduce_two_pi(1.0, 1.5);
        assert_eq!(r, 1.5);
        let r = reduce_two_pi(0.0, 123.456);
        assert_eq!(r, 0.0);
    }

    #[test]
    fn reduction_matches_direct_for_moderate_args() {
        // For ωγ small enough that binary64 is already exact, the reduced
        // phase must agree with the textbook computation.
        for k in 1..200 {
            let omega = 0.37 * k as f64;
            let gamma = 14.134725;
            let x = omega * gamma;
            let direct = x - (x / (2.0 * std::f64::consts::PI)).round() * 2.0 * std::f64::consts::PI;
            let reduced = reduce_two_pi(omega, gamma);
            // Direct computation has error ~ulp(x); allow that much slack.
            assert!(
                (direct - reduced).abs() < 1e-10,
                "k={k}: direct={direct}, reduced={reduced}"
            );
        }
    }

    #[test]
    fn reduction_lands_in_principal_range() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..10_000 {
            let omega = 728.0 * next();
            let gamma = 14.0 + 1.2e6 * next();
            let r = reduce_two_pi(omega, gamma);
            assert!(r > -std::f64::consts::PI - 1e-12 && r <= std::f64::consts::PI + 1e-12);
        }
    }

    #[test]
    fn sin_cos_prod_respects_pythagoras() {
        let (s, c) = sin_cos_prod(727.952018, 74920.827498994);
        assert!((s * s + c * c - 1.0).abs() < 1e-15);
    }
}
