//! Desk-scale ground truth: an Eratosthenes prime table, the real and
//! complex logarithmic integral, the π₀/Π₀ step-function combinatorics,
//! the truncated Riemann–von Mangoldt right-hand side, and the Dusart /
//! classic Chebyshev-type upper bounds for π(x).
//!
//! Everything here is test-oriented: it checks the certification machinery
//! against directly computable quantities at small heights. None of it is
//! (or needs to be) fast enough to say anything about x near 10³¹⁶.

use crate::catalog::ZeroCatalog;
use crate::error::{Error, Result};
use crate::quad;
use num_complex::Complex64;

/// Euler–Mascheroni constant γ.
const EULER_GAMMA: f64 = 0.5772156649015329;

/// Hard cap on the sieve size (≈ 6 MB of bitset + 4 MB of block counts).
pub const SIEVE_LIMIT_MAX: u64 = 100_000_000;

// ---------------------------------------------------------------------------
// Prime table
// ---------------------------------------------------------------------------

/// Bitset sieve over the odd numbers with per-word prefix counts, so that
/// π(x) is a popcount away. Immutable after construction; queries are
/// reentrant.
pub struct PrimeTable {
    limit: u64,
    /// Bit `i` of the flattened set ↔ the odd number `2i+1` is prime.
    words: Vec<u64>,
    /// `prefix[w]` = number of set bits in `words[..w]`.
    prefix: Vec<u32>,
}

impl PrimeTable {
    /// Sieve the interval [2, limit]. `2 ≤ limit ≤ 10⁸`.
    pub fn new(limit: u64) -> Result<Self> {
        if !(2..=SIEVE_LIMIT_MAX).contains(&limit) {
            return Err(Error::Domain(format!(
                "sieve limit {limit} outside [2, {SIEVE_LIMIT_MAX}]"
            )));
        }
        let n_odd = ((limit + 1) / 2) as usize; // odds 1, 3, …, ≤ limit
        let n_words = n_odd.div_ceil(64);
        let mut words = vec![u64::MAX; n_words];
        // Trim bits beyond the last odd ≤ limit, and unmark 1.
        let excess = n_words * 64 - n_odd;
        if excess > 0 {
            words[n_words - 1] >>= excess;
        }
        words[0] &= !1u64;
        let mut i = 1usize; // the odd number 3
        loop {
            let p = 2 * i as u64 + 1;
            if p * p > limit {
                break;
            }
            if words[i / 64] >> (i % 64) & 1 == 1 {
                // Clear p², p²+2p, … — odd multiples of p from p² on.
                let mut j = ((p * p) / 2) as usize;
                while j < n_odd {
                    words[j / 64] &= !(1u64 << (j % 64));
                    j += p as usize;
                }
            }
            i += 1;
        }
        let mut prefix = Vec::with_capacity(n_words);
        let mut acc = 0u32;
        for w in &words {
            prefix.push(acc);
            acc += w.count_ones();
        }
        Ok(PrimeTable {
            limit,
            words,
            prefix,
        })
    }

    /// Largest argument the table can answer for.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primality of `n ≤ limit` (false for n < 2 or n beyond the table).
    pub fn is_prime(&self, n: u64) -> bool {
        if n > self.limit || n < 2 {
            return false;
        }
        if n % 2 == 0 {
            return n == 2;
        }
        let i = ((n - 1) / 2) as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Exact π(x) for integer 2 ≤ x ≤ limit.
    pub fn sieve_pi(&self, x: u64) -> Result<u64> {
        if x < 2 || x > self.limit {
            return Err(Error::Domain(format!(
                "sieve_pi({x}) outside [2, {}]",
                self.limit
            )));
        }
        Ok(self.pi_unchecked(x))
    }

    /// π(⌊x⌋) with π = 0 below 2; still bounded by the table limit.
    fn pi_real(&self, x: f64) -> Result<u64> {
        if x < 2.0 {
            return Ok(0);
        }
        if x > self.limit as f64 {
            return Err(Error::Domain(format!(
                "pi({x}) beyond sieve limit {}",
                self.limit
            )));
        }
        Ok(self.pi_unchecked(x as u64))
    }

    fn pi_unchecked(&self, x: u64) -> u64 {
        // 1 accounts for the prime 2; then set bits among odds ≤ x.
        let i_max = ((x - 1) / 2) as usize;
        let (w, b) = (i_max / 64, i_max % 64);
        let partial = (self.words[w] & (u64::MAX >> (63 - b))).count_ones();
        1 + self.prefix[w] as u64 + partial as u64
    }

    /// The jump-midpoint prime count: π₀(x) = π(x) − 1/2 at primes, π(x)
    /// elsewhere. `x ≥ 2`.
    pub fn pi0(&self, x: f64) -> Result<f64> {
        if x < 2.0 {
            return Err(Error::Domain(format!("pi0({x}) needs x >= 2")));
        }
        let n = self.pi_real(x)? as f64;
        let m = x as u64;
        if x == m as f64 && self.is_prime(m) {
            Ok(n - 0.5)
        } else {
            Ok(n)
        }
    }

    /// Π₀(x) = Σ_{k ≤ log₂ x} (1/k) π₀(x^{1/k}) — the finite sum form.
    ///
    /// Each real k-th root is resolved to its exact integer part, so that
    /// the half-jump at x = pᵏ lands exactly on the prime p.
    pub fn big_pi0(&self, x: f64) -> Result<f64> {
        if x < 2.0 {
            return Err(Error::Domain(format!("Pi0({x}) needs x >= 2")));
        }
        let mut total = 0.0;
        let mut k = 1u32;
        loop {
            let Some(m) = integer_root_floor(x, k) else {
                break; // x^{1/k} < 2: every later term vanishes
            };
            // π₀ at the real point x^{1/k}: the count is π(m); the half
            // correction applies only if the root is exactly the prime m.
            let mut term = self.pi_real(m as f64)? as f64;
            if pow_u64(m, k) == Some(x) && self.is_prime(m) {
                term -= 0.5;
            }
            total += term / k as f64;
            k += 1;
        }
        Ok(total)
    }
}

/// ⌊x^{1/k}⌋ as an exact integer, or None when x^{1/k} < 2.
fn integer_root_floor(x: f64, k: u32) -> Option<u64> {
    let mut m = x.powf(1.0 / k as f64).round() as u64;
    // powf is inexact near integer powers; settle the floor by comparison.
    while pow_u64(m, k).is_none_or(|p| p > x) {
        m -= 1;
    }
    while pow_u64(m + 1, k).is_some_and(|p| p <= x) {
        m += 1;
    }
    (m >= 2).then_some(m)
}

/// mᵏ as f64 when it stays exactly representable, else None.
fn pow_u64(m: u64, k: u32) -> Option<f64> {
    let mut acc = 1u64;
    for _ in 0..k {
        acc = acc.checked_mul(m)?;
    }
    (acc < (1u64 << 53)).then_some(acc as f64)
}

// ---------------------------------------------------------------------------
// Logarithmic integral, real argument
// ---------------------------------------------------------------------------

/// Principal-value logarithmic integral li(x) = Ei(ln x) for x > 1.
///
/// Convergent exponential-integral series for ln x < 40, asymptotic series
/// with stop-at-smallest-term beyond; relative accuracy ~10⁻¹² throughout.
/// Arguments below 1 + 10⁻¹² are rejected (logarithmic singularity at 1).
pub fn li_real(x: f64) -> Result<f64> {
    if !(x >= 1.0 + 1e-12) {
        return Err(Error::Domain(format!(
            "li({x}) is only evaluated for x >= 1 + 1e-12"
        )));
    }
    let t = x.ln();
    if t < 40.0 {
        // Ei(t) = γ + ln t + Σ_{k≥1} tᵏ/(k·k!), all terms positive.
        let mut sum = EULER_GAMMA + t.ln();
        let mut power = 1.0; // tᵏ/k!
        for k in 1..500 {
            power *= t / k as f64;
            let term = power / k as f64;
            sum += term;
            if term < 1e-17 * sum.abs() {
                break;
            }
        }
        Ok(sum)
    } else {
        // Ei(t) = e^t/t · Σ k!/tᵏ, truncated at the smallest term; for
        // t ≥ 40 that term is below 10⁻¹⁶ relative.
        let mut sum = 1.0;
        let mut term = 1.0;
        for k in 1..200 {
            let next = term * k as f64 / t;
            if next >= term {
                break;
            }
            term = next;
            sum += term;
            if term < 1e-17 * sum {
                break;
            }
        }
        Ok(t.exp() / t * sum)
    }
}

// ---------------------------------------------------------------------------
// Logarithmic integral, complex argument
// ---------------------------------------------------------------------------

/// Truncated asymptotic evaluation of li(e^z) for Im z ≠ 0:
///
/// ```text
/// li(e^z) = e^z·(Σ_{k=1}^{n} (k−1)!/z^k  +  n!·∫₀^∞ e^{−t}/(z−t)^{n+1} dt),
/// ```
///
/// returning the partial sum and the rigorous remainder magnitude bound
/// `n!·(2/|z|)^{n+1}·|e^z|`. The bound rests on |z − t| ≥ |z|/2 for all
/// t ≥ 0, which holds when |Im z| ≥ |z|/2 (the sin π/6 sector); arguments
/// outside that sector are rejected, as are n_terms past the point where
/// the bound stops decreasing (2n ≥ |z|).
pub fn li_complex(z: Complex64, n_terms: usize) -> Result<(Complex64, f64)> {
    let r = z.norm();
    if z.im == 0.0 || !r.is_finite() {
        return Err(Error::Domain(format!(
            "li(e^z) asymptotic needs finite z with Im z != 0, got {z}"
        )));
    }
    if z.im.abs() < 0.5 * r {
        return Err(Error::Domain(format!(
            "remainder bound needs |Im z| >= |z|/2, got z = {z}"
        )));
    }
    if n_terms < 1 || 2.0 * n_terms as f64 >= r {
        return Err(Error::Domain(format!(
            "remainder bound non-decreasing at n_terms = {n_terms} (|z| = {r:.3})"
        )));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut u = Complex64::new(1.0, 0.0) / z; // (k−1)!/z^k at k = 1
    let mut log_factorial = 0.0;
    for k in 1..=n_terms {
        sum += u;
        u = u * (k as f64) / z;
        log_factorial += (k as f64).ln();
    }
    let value = z.exp() * sum;
    let bound = (z.re + log_factorial + (n_terms + 1) as f64 * (2.0f64.ln() - r.ln())).exp();
    Ok((value, bound))
}

/// Independent reference for li(e^z): direct adaptive quadrature of the
/// defining integral `li(e^z) = e^z·∫₀^∞ e^{−t}/(z−t) dt` (real and
/// imaginary parts separately).
pub fn li_complex_quadrature(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return Err(Error::Domain(
            "quadrature oracle needs Im z != 0 (pole on the path)".into(),
        ));
    }
    // 1/(z − t) = ((z.re − t) − i·z.im)/|z − t|²: the imaginary part carries
    // the opposite sign of Im z.
    let denom = move |t: f64| (z.re - t) * (z.re - t) + z.im * z.im;
    let re = quad::integrate_to_inf(&|t: f64| (-t).exp() * (z.re - t) / denom(t), 0.0, 1e-12)?;
    let im = quad::integrate_to_inf(&|t: f64| (-t).exp() * -z.im / denom(t), 0.0, 1e-12)?;
    Ok(z.exp() * Complex64::new(re.value, im.value))
}

// ---------------------------------------------------------------------------
// Riemann–von Mangoldt right-hand side
// ---------------------------------------------------------------------------

/// Trial-division primality for the prime-power precondition check.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn is_prime_power(x: f64) -> bool {
    if x.fract() != 0.0 || x < 2.0 || x > 9.0e15 {
        return false;
    }
    let mut k = 1u32;
    loop {
        let Some(m) = integer_root_floor(x, k) else {
            return false;
        };
        if pow_u64(m, k) == Some(x) && is_prime_u64(m) {
            return true;
        }
        k += 1;
    }
}

/// Truncated right-hand side of the Riemann–von Mangoldt formula
///
/// ```text
/// Π₀(x) = li(x) − Σ_ρ li(x^ρ) + ∫_x^∞ du/((u²−1)·u·ln u) − ln 2,
/// ```
///
/// with the zero sum over the first `k_pairs` conjugate pairs from the
/// catalog, each pair contributing 2·Re li(x^ρ). Returns the value and an
/// error estimate: the sum of the li remainder bounds plus the quadrature
/// error. `x` must exceed 1 and not be a prime power (the left side jumps
/// there, which the truncated series straddles untestably).
pub fn mangoldt_rhs(x: f64, k_pairs: usize, catalog: &ZeroCatalog) -> Result<(f64, f64)> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("mangoldt_rhs needs x > 1, got {x}")));
    }
    if is_prime_power(x) {
        return Err(Error::Domain(format!(
            "mangoldt_rhs({x}) sits on a jump of the step function; pick a non-prime-power"
        )));
    }
    if k_pairs > catalog.len() {
        return Err(Error::Catalog(format!(
            "requested {k_pairs} zero pairs, catalog holds {}",
            catalog.len()
        )));
    }
    let log_x = x.ln();
    let mut zero_sum = 0.0;
    let mut bound_sum = 0.0;
    for &gamma in &catalog.ordinates()[..k_pairs] {
        let z = Complex64::new(0.5 * log_x, gamma * log_x);
        // Deepest truncation the remainder bound still decreases at,
        // capped at 30 (more buys nothing at these magnitudes).
        let n = ((z.norm() / 2.0 - 1.0) as usize).clamp(1, 30);
        let (v, b) = li_complex(z, n)?;
        zero_sum += 2.0 * v.re;
        bound_sum += 2.0 * b;
    }
    let tail = quad::integrate_to_inf(&|u: f64| 1.0 / ((u * u - 1.0) * u * u.ln()), x, 1e-10)?;
    let li = li_real(x)?;
    let value = li - zero_sum + tail.value - std::f64::consts::LN_2;
    let err = bound_sum + tail.error + 1e-12 * li.abs();
    Ok((value, err))
}

// ---------------------------------------------------------------------------
// Upper bounds for π(x)
// ---------------------------------------------------------------------------

/// Dusart-type upper bound for π(x), x ≥ 4·10⁹, in both circulating forms:
/// `(printed, corrected)` where the printed form carries the linear term
/// `2/ln x` and the corrected form the quadratic `2/ln²x`. The printed
/// form is the larger of the two, so either is a valid upper bound wherever
/// the corrected one is.
pub fn dusart_upper(x: f64) -> Result<(f64, f64)> {
    if !(x >= 4.0e9) {
        return Err(Error::Domain(format!(
            "dusart_upper({x}) needs x >= 4e9"
        )));
    }
    let l = x.ln();
    let lead = x / l;
    let printed = lead * (1.0 + 1.0 / l + 2.0 / l + 7.32 / (l * l * l));
    let corrected = lead * (1.0 + 1.0 / l + 2.0 / (l * l) + 7.32 / (l * l * l));
    Ok((printed, corrected))
}

/// The classic Chebyshev-type bound π(x) ≤ 2x/ln x for x > 1.
pub fn classic_upper(x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("classic_upper({x}) needs x > 1")));
    }
    Ok(2.0 * x / x.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> PrimeTable {
        PrimeTable::new(100_000).unwrap()
    }

    #[test]
    fn sieve_matches_known_counts() {
        let t = table();
        for (x, pi) in [
            (2u64, 1u64),
            (3, 2),
            (10, 4),
            (100, 25),
            (1000, 168),
            (10_000, 1229),
            (100_000, 9592),
        ] {
            assert_eq!(t.sieve_pi(x).unwrap(), pi, "pi({x})");
        }
        assert!(t.sieve_pi(1).is_err());
        assert!(t.sieve_pi(100_001).is_err());
        // Monotone non-decreasing on a stretch.
        let mut prev = 0;
        for x in 2..2000 {
            let v = t.sieve_pi(x).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn primality_bits() {
        let t = table();
        for p in [2u64, 3, 5, 7, 97, 99989, 99991] {
            assert!(t.is_prime(p), "{p} is prime");
        }
        for c in [0u64, 1, 4, 91, 99987] {
            assert!(!t.is_prime(c), "{c} is not prime");
        }
    }

    #[test]
    fn half_jump_combinatorics() {
        let t = table();
        assert_eq!(t.pi0(7.0).unwrap(), 3.5);
        assert_eq!(t.pi0(8.0).unwrap(), 4.0);
        assert_eq!(t.pi0(2.0).unwrap(), 0.5);
        assert_eq!(t.pi0(7.5).unwrap(), 4.0);
        assert!(t.pi0(1.5).is_err());
        // Π₀(4) = π₀(4) + (1/2)π₀(2) = 2 + 0.25: the only prime powers up
        // to 4 are 2, 3 and 2², the last contributing half its 1/2 weight.
        assert_eq!(t.big_pi0(4.0).unwrap(), 2.25);
        // Π₀(10) = π₀(10) + ½π₀(√10) + ⅓π₀(10^⅓) = 4 + 1 + 1/3.
        let v = t.big_pi0(10.0).unwrap();
        assert!((v - (4.0 + 1.0 + 1.0 / 3.0)).abs() < 1e-14);
    }

    /// Directly accumulate Π₀(x) from the jump structure: every prime power
    /// pᵏ < x adds 1/k, and pᵏ = x adds 1/(2k).
    fn big_pi0_direct(t: &PrimeTable, x: f64) -> f64 {
        let mut total = 0.0;
        let mut p = 2u64;
        while (p as f64) <= x {
            if t.is_prime(p) {
                let mut k = 1u32;
                while let Some(q) = pow_u64(p, k) {
                    if q > x {
                        break;
                    }
                    total += if q == x { 0.5 } else { 1.0 } / k as f64;
                    k += 1;
                }
            }
            p += 1;
        }
        total
    }

    #[test]
    fn big_pi0_decomposition_identity_at_prime_powers() {
        let t = table();
        // Every prime power ≤ 10⁴: the finite-sum form must equal the
        // direct midpoint evaluation, exactly (both are small dyadic sums
        // of the same rationals — tolerance only for the 1/3, 1/6 … parts).
        let mut checked = 0;
        for p in 2u64..=100 {
            if !t.is_prime(p) {
                continue;
            }
            let mut k = 1u32;
            while let Some(q) = pow_u64(p, k) {
                if q > 10_000.0 {
                    break;
                }
                let a = t.big_pi0(q).unwrap();
                let b = big_pi0_direct(&t, q);
                assert!((a - b).abs() < 1e-11, "Pi0({q}): {a} vs {b}");
                checked += 1;
                k += 1;
            }
        }
        assert!(checked > 40, "only {checked} prime powers checked");
    }

    #[test]
    fn tail_domination_inequality() {
        // Σ_{k≥3} (1/k)π₀(x^{1/k}) ≤ (1/3)π₀(x^{1/3})·⌈log₂ x⌉ on a sweep.
        let t = table();
        for i in 1..60 {
            let x = 8.0 + (i as f64) * 16800.0; // up to ~10⁶ cube-rooted fits
            let x = x.min(999_983.0);
            let mut tail = 0.0;
            let mut k = 3u32;
            while let Some(m) = integer_root_floor(x, k) {
                let mut term = t.pi_real(m as f64).unwrap() as f64;
                if pow_u64(m, k) == Some(x) && t.is_prime(m) {
                    term -= 0.5;
                }
                tail += term / k as f64;
                k += 1;
            }
            let lead = t.pi0(x.powf(1.0 / 3.0).max(2.0)).unwrap() / 3.0;
            let budget = lead * (x.log2().ceil());
            assert!(tail <= budget + 1e-12, "x = {x}: {tail} > {budget}");
        }
    }

    #[test]
    fn li_real_reference_points() {
        assert!((li_real(2.0).unwrap() - 1.045163780117493).abs() < 1e-12);
        assert!(
            (li_real(std::f64::consts::E).unwrap() - 1.895117816355937).abs() < 1e-12
        );
        assert!((li_real(1000.0).unwrap() - 177.60965799015223).abs() < 1e-9);
        assert!(li_real(1.0).is_err());
        assert!(li_real(0.5).is_err());
        assert!(li_real(1.0 + 1e-13).is_err());
        // Just above the cutoff the value is a large negative number.
        assert!(li_real(1.0 + 1.1e-12).unwrap() < -20.0);
    }

    #[test]
    fn li_real_switchover_consistent_with_quadrature() {
        // Series side (ln x = 39.9) and asymptotic side (ln x = 40.1) must
        // differ by exactly the integral of 1/ln t across the gap.
        let a = 39.9f64.exp();
        let b = 40.1f64.exp();
        let bridge = quad::integrate(&|t: f64| 1.0 / t.ln(), a, b, 1e-12).unwrap();
        let diff = li_real(b).unwrap() - li_real(a).unwrap();
        assert!(
            (diff - bridge.value).abs() < 1e-9 * bridge.value,
            "diff {diff:e} vs bridge {:e}",
            bridge.value
        );
    }

    #[test]
    fn li_complex_leading_term_and_conjugation() {
        let z = Complex64::new(0.1, 5000.0);
        let (v, b) = li_complex(z, 1).unwrap();
        // n = 1: the partial sum is e^z/z up to rounding.
        let lead = z.exp() / z;
        assert!((v - lead).norm() < 1e-14 * v.norm());
        assert!(b < 1e-2 * v.norm());
        // Schwarz reflection.
        let (vc, bc) = li_complex(z.conj(), 5).unwrap();
        let (v5, b5) = li_complex(z, 5).unwrap();
        assert!((vc - v5.conj()).norm() < 1e-13 * v5.norm());
        assert!((bc - b5).abs() < 1e-15 * b5);
    }

    #[test]
    fn li_complex_domain_errors() {
        // Real argument.
        assert!(li_complex(Complex64::new(3.0, 0.0), 2).is_err());
        // Outside the sin π/6 sector.
        assert!(li_complex(Complex64::new(10.0, 0.5), 2).is_err());
        // Bound no longer decreasing: |z| ≈ 3 admits only n = 1.
        let z = Complex64::new(0.1, 3.0);
        assert!(li_complex(z, 1).is_ok());
        assert!(matches!(li_complex(z, 2), Err(Error::Domain(_))));
        assert!(li_complex(z, 0).is_err());
    }

    #[test]
    fn li_complex_within_bound_of_quadrature_oracle() {
        // The flagship example: z = (1/2 + iγ₁)·ln 1000.
        let log_x = 1000.0f64.ln();
        let z = Complex64::new(0.5 * log_x, 14.134725142 * log_x);
        let reference = li_complex_quadrature(z).unwrap();
        for n in [1usize, 3, 8, 20, 40] {
            let (v, b) = li_complex(z, n).unwrap();
            let diff = (v - reference).norm();
            // Allowance for the reference's own quadrature accuracy.
            assert!(
                diff <= b + 5e-12 * reference.norm(),
                "n = {n}: diff {diff:e} exceeds bound {b:e}"
            );
        }
    }

    #[test]
    fn mangoldt_rhs_zero_pairs_is_li_minus_log2() {
        let cat = ZeroCatalog::new(vec![14.134725142], 1e-9, "toy").unwrap();
        let (v, e) = mangoldt_rhs(1000.0, 0, &cat).unwrap();
        let li = li_real(1000.0).unwrap();
        // Tail integral at x = 1000 is ~1.6e-7 and positive.
        let tail = v - (li - std::f64::consts::LN_2);
        assert!(tail > 0.0 && tail < 1e-6, "tail = {tail:e}");
        assert!(e < 1e-9);
        // One pair moves the value and grows the error estimate.
        let (v1, e1) = mangoldt_rhs(1000.0, 1, &cat).unwrap();
        assert_ne!(v, v1);
        assert!(e1 > e);
    }

    #[test]
    fn mangoldt_rhs_preconditions() {
        let cat = ZeroCatalog::new(vec![14.134725142], 1e-9, "toy").unwrap();
        assert!(mangoldt_rhs(1.0, 0, &cat).is_err());
        for pp in [2.0, 9.0, 32.0, 125.0] {
            assert!(
                matches!(mangoldt_rhs(pp, 0, &cat), Err(Error::Domain(_))),
                "{pp} is a prime power"
            );
        }
        assert!(mangoldt_rhs(1000.0, 2, &cat).is_err()); // catalog too small
        assert!(mangoldt_rhs(1000.0, 1, &cat).is_ok());
    }

    #[test]
    fn upper_bounds() {
        let t = table();
        let c = classic_upper(100.0).unwrap();
        assert!((c - 200.0 / 100.0f64.ln()).abs() < 1e-12);
        assert!(c >= t.sieve_pi(100).unwrap() as f64);
        // Sweep: the classic bound dominates the sieve everywhere sampled.
        for x in (2u64..=100_000).step_by(997) {
            assert!(classic_upper(x as f64).unwrap() >= t.sieve_pi(x).unwrap() as f64);
        }
        assert!(classic_upper(1.0).is_err());

        let (printed, corrected) = dusart_upper(4.0e9).unwrap();
        assert!(printed > corrected, "printed form carries 2/ln x > 2/ln²x");
        // Documented reference count at 4·10⁹: both forms must sit above it.
        const PI_4E9: f64 = 189_961_812.0;
        assert!(corrected > PI_4E9);
        assert!(printed > PI_4E9);
        assert!(dusart_upper(1.0e9).is_err());
    }

    #[test]
    fn integer_roots_are_exact_at_powers() {
        assert_eq!(integer_root_floor(64.0, 2), Some(8));
        assert_eq!(integer_root_floor(64.0, 3), Some(4));
        assert_eq!(integer_root_floor(64.0, 6), Some(2));
        assert_eq!(integer_root_floor(63.9999, 3), Some(3));
        assert_eq!(integer_root_floor(64.0, 7), None);
        // 3^20 = 3486784401: powf alone would wobble here.
        assert_eq!(integer_root_floor(3486784401.0, 20), Some(3));
        assert_eq!(integer_root_floor(3486784400.0, 20), Some(2));
    }
}
