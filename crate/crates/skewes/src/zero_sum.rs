//! High-accuracy evaluation of the damped zero sums S₁*(α,ω,T), S₂*(α,ω,T)
//! and the zero-accuracy propagation bounds ΔS₁, ΔS₂.
//!
//! With ρ = 1/2 + iγ the two summands are
//!
//! ```text
//! s(α,ω,γ) = (cos ωγ + 2γ·sin ωγ) / (1/4 + γ²) · e^{−γ²/2α}
//!          = 2·Re(e^{iωγ}/ρ)·e^{−γ²/2α},
//! t(α,ω,γ) = ((1/2 − 2γ²)·cos ωγ + 2γ·sin ωγ) / (ω·(1/4 + γ²)²) · e^{−γ²/2α}
//!          = 2·Re(e^{iωγ}/ρ²)·e^{−γ²/2α} / ω,
//! ```
//!
//! summed over the catalog ordinates ≤ T. The phase ωγ is reduced modulo 2π
//! in double-word precision (absolute phase error < 10⁻¹² for ωγ ≤ 10¹²);
//! sums are compensated and chunk-deterministic, so parallel and sequential
//! evaluation agree bit-for-bit.
//!
//! Finite zero accuracy |γ* − γ| ≤ ε propagates into the sums through the
//! mean-value bounds (te Riele's error analysis)
//!
//! ```text
//! |∂s/∂x| ≤ (1/x)·(2ω + ω/x + 2x/α + 2/x² + 4/x),
//! |∂t/∂x| ≤ (1/x²)·(2/x + 2x/(αω) + 1/(2x²) + 2 + 8/(ωx) + 8/(ωx²)),
//! ```
//!
//! giving ΔS₁ ≤ ε·C·κ·Σ1/γ and ΔS₂ ≤ ε·C₂·κ²·Σ1/γ².

use crate::budget::CertParams;
use crate::catalog::ZeroCatalog;
use crate::dd::sin_cos_prod;
use crate::error::{Error, Result};
use crate::sum;

/// Sentinel for "no damping" (the detection sums of the region scanner):
/// with α = ∞ the damping factor e^{−γ²/2α} is exactly 1.
pub const ALPHA_UNDAMPED: f64 = f64::INFINITY;

/// Damping factor e^{−γ²/(2α)}; exactly 1 for the undamped sentinel.
#[inline]
fn damping(alpha: f64, gamma: f64) -> f64 {
    (-gamma * gamma / (2.0 * alpha)).exp()
}

/// One term of the S₁ sum: `s(α,ω,γ)` as displayed above.
#[inline]
pub fn s_term(alpha: f64, omega: f64, gamma: f64) -> f64 {
    debug_assert!(gamma > 0.0);
    let (sin, cos) = sin_cos_prod(omega, gamma);
    (cos + 2.0 * gamma * sin) / (0.25 + gamma * gamma) * damping(alpha, gamma)
}

/// One term of the S₂ sum: `t(α,ω,γ)` as displayed above.
#[inline]
pub fn t_term(alpha: f64, omega: f64, gamma: f64) -> f64 {
    debug_assert!(gamma > 0.0);
    let (sin, cos) = sin_cos_prod(omega, gamma);
    let denom = 0.25 + gamma * gamma;
    ((0.5 - 2.0 * gamma * gamma) * cos + 2.0 * gamma * sin) / (omega * denom * denom)
        * damping(alpha, gamma)
}

fn preflight(catalog: &ZeroCatalog, t_height: f64) -> Result<usize> {
    if t_height > catalog.last() {
        return Err(Error::CatalogExhausted {
            requested: t_height,
            last: catalog.last(),
        });
    }
    Ok(catalog.count_below(t_height))
}

/// `S₁*(α,ω,T) = Σ_{0<γ≤T} s(α,ω,γ)` — deterministic chunked compensated sum.
pub fn sum_s(catalog: &ZeroCatalog, alpha: f64, omega: f64, t_height: f64) -> Result<f64> {
    let n = preflight(catalog, t_height)?;
    let g = catalog.ordinates();
    Ok(sum::chunked_sum(n, |i| s_term(alpha, omega, g[i])))
}

/// `S₂*(α,ω,T) = Σ_{0<γ≤T} t(α,ω,γ)` — deterministic chunked compensated sum.
pub fn sum_t(catalog: &ZeroCatalog, alpha: f64, omega: f64, t_height: f64) -> Result<f64> {
    let n = preflight(catalog, t_height)?;
    let g = catalog.ordinates();
    Ok(sum::chunked_sum(n, |i| t_term(alpha, omega, g[i])))
}

/// Explicit-chunk-size variants used by the determinism property tests.
pub fn sum_s_chunked(
    catalog: &ZeroCatalog,
    alpha: f64,
    omega: f64,
    t_height: f64,
    chunk: usize,
    parallel: bool,
) -> Result<f64> {
    let n = preflight(catalog, t_height)?;
    let g = catalog.ordinates();
    let f = |i: usize| s_term(alpha, omega, g[i]);
    Ok(if parallel {
        sum::chunked_sum_par(n, chunk, f)
    } else {
        sum::chunked_sum_seq(n, chunk, f)
    })
}

/// See [`sum_s_chunked`].
pub fn sum_t_chunked(
    catalog: &ZeroCatalog,
    alpha: f64,
    omega: f64,
    t_height: f64,
    chunk: usize,
    parallel: bool,
) -> Result<f64> {
    let n = preflight(catalog, t_height)?;
    let g = catalog.ordinates();
    let f = |i: usize| t_term(alpha, omega, g[i]);
    Ok(if parallel {
        sum::chunked_sum_par(n, chunk, f)
    } else {
        sum::chunked_sum_seq(n, chunk, f)
    })
}

/// How the ΔS bounds instantiate their free constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DeltaMode {
    /// Tightest valid instantiation: γ_min from the actual γ₁, γ_max = T+ε,
    /// the catalog's own partial sums, and inflation κ = γ₁/(γ₁−ε).
    #[default]
    Tight,
    /// Reproduce the published desk arithmetic: γ_min = 14, γ_max = ⌈T⌉,
    /// ω rounded up to the next integer, κ = 1.0001, the Backlund upper
    /// bracket for Σ1/γ and the closed constant 2.31050·10⁻² for Σ1/γ².
    Compat,
}

/// Everything the Σ1/γⁿ constants can come from.
fn reciprocal_sums(
    catalog: Option<&ZeroCatalog>,
    t_height: f64,
    mode: DeltaMode,
) -> Result<(f64, f64)> {
    /// Closed upper bound for the full sum Σ 1/γ² over all zeros.
    const SUM_INV_SQ: f64 = 2.31050e-2;
    match mode {
        DeltaMode::Compat => {
            let (_, upper) = ZeroCatalog::reciprocal_sum_bracket(t_height)?;
            Ok((upper, SUM_INV_SQ))
        }
        DeltaMode::Tight => match catalog {
            Some(cat) if t_height <= cat.last() => Ok((
                cat.inverse_power_sum(1, t_height)?,
                cat.inverse_power_sum(2, t_height)?,
            )),
            _ => {
                let (_, upper) = ZeroCatalog::reciprocal_sum_bracket(t_height)?;
                Ok((upper, SUM_INV_SQ))
            }
        },
    }
}

struct DeltaGeometry {
    gamma_min: f64,
    gamma_max: f64,
    omega_eff: f64,
    kappa: f64,
}

fn delta_geometry(
    catalog: Option<&ZeroCatalog>,
    p: &CertParams,
    epsilon: f64,
    mode: DeltaMode,
) -> DeltaGeometry {
    match mode {
        DeltaMode::Compat => DeltaGeometry {
            gamma_min: 14.0,
            gamma_max: p.t_height.ceil(),
            omega_eff: p.omega.ceil(),
            kappa: 1.0001,
        },
        DeltaMode::Tight => {
            let gamma1 = catalog.map_or(14.0, |c| c.first());
            DeltaGeometry {
                gamma_min: (gamma1 - epsilon).max(14.0),
                gamma_max: p.t_height + epsilon,
                omega_eff: p.omega,
                kappa: gamma1 / (gamma1 - epsilon),
            }
        }
    }
}

/// Propagated zero-accuracy bound for S₁*:
/// `ΔS₁ ≤ ε · C · κ · Σ_{0<γ≤T} 1/γ` with
/// `C = 2ω + ω/γ_min + 2γ_max/α + 2/γ_min² + 4/γ_min`.
pub fn delta_s1_bound(
    catalog: Option<&ZeroCatalog>,
    p: &CertParams,
    epsilon: f64,
    mode: DeltaMode,
) -> Result<f64> {
    assert!(epsilon >= 0.0, "zero accuracy must be non-negative");
    let g = delta_geometry(catalog, p, epsilon, mode);
    let c = 2.0 * g.omega_eff
        + g.omega_eff / g.gamma_min
        + 2.0 * g.gamma_max / p.alpha
        + 2.0 / (g.gamma_min * g.gamma_min)
        + 4.0 / g.gamma_min;
    let (sum_inv, _) = reciprocal_sums(catalog, p.t_height, mode)?;
    Ok(epsilon * c * g.kappa * sum_inv)
}

/// Propagated zero-accuracy bound for S₂*:
/// `ΔS₂ ≤ ε · C₂ · κ² · Σ 1/γ²` with
/// `C₂ = 2/γ_min + 2γ_max/(αω) + 1/(2γ_min²) + 2 + 8/(ωγ_min) + 8/(ωγ_min²)`.
pub fn delta_s2_bound(
    catalog: Option<&ZeroCatalog>,
    p: &CertParams,
    epsilon: f64,
    mode: DeltaMode,
) -> Result<f64> {
    assert!(epsilon >= 0.0, "zero accuracy must be non-negative");
    let g = delta_geometry(catalog, p, epsilon, mode);
    let gm = g.gamma_min;
    let c2 = 2.0 / gm
        + 2.0 * g.gamma_max / (p.alpha * g.omega_eff)
        + 0.5 / (gm * gm)
        + 2.0
        + 8.0 / (g.omega_eff * gm)
        + 8.0 / (g.omega_eff * gm * gm);
    let (_, sum_inv_sq) = reciprocal_sums(catalog, p.t_height, mode)?;
    Ok(epsilon * c2 * g.kappa * g.kappa * sum_inv_sq)
}

/// The assembled numerical-sum block of a certificate.
#[derive(Clone, Copy, Debug)]
pub struct SumResult {
    /// S₁*(α,ω,T).
    pub s1: f64,
    /// S₂*(α,ω,T).
    pub s2: f64,
    /// S* = S₁* + S₂*.
    pub s_star: f64,
    /// Propagated accuracy bound for S₁*.
    pub delta_s1: f64,
    /// Propagated accuracy bound for S₂*.
    pub delta_s2: f64,
    /// Number of ordinates entering the sums.
    pub zeros_used: usize,
    /// Largest ordinate actually summed (0 for an empty range).
    pub t_effective: f64,
}

/// Evaluate both sums and both Δ bounds for one parameter set, using the
/// catalog's effective accuracy (file ε plus binary64 representation error).
pub fn compute_sums(catalog: &ZeroCatalog, p: &CertParams, mode: DeltaMode) -> Result<SumResult> {
    let s1 = sum_s(catalog, p.alpha, p.omega, p.t_height)?;
    let s2 = sum_t(catalog, p.alpha, p.omega, p.t_height)?;
    let epsilon = catalog.effective_accuracy();
    let delta_s1 = delta_s1_bound(Some(catalog), p, epsilon, mode)?;
    let delta_s2 = delta_s2_bound(Some(catalog), p, epsilon, mode)?;
    let used = catalog.count_below(p.t_height);
    Ok(SumResult {
        s1,
        s2,
        s_star: s1 + s2,
        delta_s1,
        delta_s2,
        zeros_used: used,
        t_effective: if used == 0 {
            0.0
        } else {
            catalog.ordinates()[used - 1]
        },
    })
}
