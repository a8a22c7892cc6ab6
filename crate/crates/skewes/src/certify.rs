//! Certificate assembly: combine the damped zero sums, the zero-accuracy
//! propagation bounds and the analytic error budget into a one-sided lower
//! estimate for the integrated difference
//!
//! ```text
//! I(α,ω,η) ≥ −1 − S* − ΔS₁ − ΔS₂ − R_total,
//! ```
//!
//! where S* = S₁* + S₂* is the computed (or externally supplied) zero sum.
//! A certificate is *positive* exactly when the lower bound is strictly
//! greater than zero; there is no tolerance in the verdict. A positive
//! certificate at (ω, η) guarantees a point with π(x) > li(x) in
//! [e^{ω−η}, e^{ω+η}], and a run of sign-constant values of length at least
//! `lower_bound · e^{(ω−η)/2}` (reported in log₁₀).

use crate::budget::{terms_for, validate_conditions, CertParams, ErrorBudget};
use crate::catalog::{ZeroCatalog, DEFAULT_ACCURACY};
use crate::error::{Error, Result};
use crate::sum::sum_compensated;
use crate::zero_sum::{compute_sums, delta_s1_bound, delta_s2_bound, DeltaMode, SumResult};

/// Outcome of a certification attempt.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The lower bound is strictly positive: a crossover region is certified.
    Positive,
    /// The lower bound is not positive. Nothing is certified either way.
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Positive => "positive",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A fully assembled certificate for one parameter set.
#[derive(Clone, Debug)]
pub struct Certificate {
    /// The parameters the certificate refers to.
    pub params: CertParams,
    /// The numerical sum block (S₁*, S₂*, ΔS₁, ΔS₂).
    pub sum: SumResult,
    /// The analytic error budget for the chosen variant.
    pub budget: ErrorBudget,
    /// −1 − S* − ΔS₁ − ΔS₂ − R_total, compensated, fixed order.
    pub lower_bound: f64,
    /// log₁₀ of the certified run length; 0 when the verdict is not positive.
    pub run_length_log10: f64,
    /// Positive iff `lower_bound > 0`.
    pub verdict: Verdict,
}

/// log₁₀ of the certified run length `δ · e^{(ω−η)/2}` for a margin δ > 0.
pub fn run_length_log10(delta: f64, omega: f64, eta: f64) -> f64 {
    assert!(delta > 0.0, "run length needs a positive margin");
    delta.log10() + (omega - eta) / (2.0 * std::f64::consts::LN_10)
}

/// Render a log₁₀ magnitude as `d.dddd×10^k`.
pub fn render_magnitude(log10_value: f64) -> String {
    let k = log10_value.floor();
    let mantissa = 10f64.powf(log10_value - k);
    // Guard the mantissa rounding up to 10.0000 at the formatting step.
    if mantissa >= 9.99995 {
        format!("1.0000×10^{}", k + 1.0)
    } else {
        format!("{mantissa:.4}×10^{k}")
    }
}

fn assemble(p: &CertParams, sum: SumResult, budget: ErrorBudget) -> Certificate {
    let lower_bound = sum_compensated([
        -1.0,
        -sum.s_star,
        -sum.delta_s1,
        -sum.delta_s2,
        -budget.total,
    ]);
    let (verdict, run) = if lower_bound > 0.0 {
        (
            Verdict::Positive,
            run_length_log10(lower_bound, p.omega, p.eta),
        )
    } else {
        (Verdict::Inconclusive, 0.0)
    };
    Certificate {
        params: p.clone(),
        sum,
        budget,
        lower_bound,
        run_length_log10: run,
        verdict,
    }
}

/// Certify with a catalog, tight Δ bounds.
pub fn certify(catalog: &ZeroCatalog, p: &CertParams) -> Result<Certificate> {
    certify_with(Some(catalog), p, None, DeltaMode::Tight)
}

/// Full-control certification.
///
/// * With `s_star_override`, the zero sum is taken as given (S₂* folded in,
///   reported as S₁* with S₂* = 0 and no zeros used); the Δ bounds then use
///   the catalog's effective accuracy if a catalog is present, otherwise the
///   default table accuracy 10⁻⁹.
/// * Without an override a catalog is required.
pub fn certify_with(
    catalog: Option<&ZeroCatalog>,
    p: &CertParams,
    s_star_override: Option<f64>,
    mode: DeltaMode,
) -> Result<Certificate> {
    let violations = validate_conditions(p);
    if !violations.is_empty() {
        let msg = violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::Conditions(msg));
    }
    let sum = match s_star_override {
        Some(s_star) => {
            let epsilon = catalog.map_or(DEFAULT_ACCURACY, |c| c.effective_accuracy());
            SumResult {
                s1: s_star,
                s2: 0.0,
                s_star,
                delta_s1: delta_s1_bound(catalog, p, epsilon, mode)?,
                delta_s2: delta_s2_bound(catalog, p, epsilon, mode)?,
                zeros_used: 0,
                t_effective: 0.0,
            }
        }
        None => {
            let catalog = catalog.ok_or_else(|| {
                Error::Usage("either a zero catalog or an S* override is required".into())
            })?;
            compute_sums(catalog, p, mode)?
        }
    };
    let budget: ErrorBudget = terms_for(p)?;
    Ok(assemble(p, sum, budget))
}

/// One row of an η resize scan.
#[derive(Clone, Copy, Debug)]
pub struct EtaRow {
    pub eta: f64,
    pub budget_total: f64,
    pub lower_bound: f64,
    pub verdict: Verdict,
}

/// Result of scanning the error budget over a grid of window half-widths.
#[derive(Clone, Debug)]
pub struct EtaScan {
    /// One row per requested η, in the order given.
    pub rows: Vec<EtaRow>,
    /// Smallest η with a positive verdict, if any.
    pub best_eta: Option<f64>,
    /// Bisection-refined critical η (4 significant digits), when requested
    /// and when the grid brackets a sign change of the lower bound.
    pub refined_eta: Option<f64>,
}

/// Rerun the budget over a grid of η values with the zero-sum block fixed.
///
/// The sums S*, ΔS₁, ΔS₂ do not depend on η, so they are computed once and
/// the analytic budget is re-evaluated per row — this is the cheap "shrink
/// the localization window until the budget eats the margin" experiment.
/// With `refine`, a bracketing adjacent pair (positive at the larger η,
/// non-positive at the smaller) is bisected to locate the critical η to
/// four significant digits.
pub fn resize_eta(
    catalog: Option<&ZeroCatalog>,
    base: &CertParams,
    etas: &[f64],
    s_star_override: Option<f64>,
    mode: DeltaMode,
    refine: bool,
) -> Result<EtaScan> {
    if etas.is_empty() {
        return Err(Error::Usage("resize-eta needs at least one eta".into()));
    }
    let row_for = |eta: f64| -> Result<EtaRow> {
        let p = CertParams {
            eta,
            ..base.clone()
        };
        let cert = certify_with(catalog, &p, s_star_override, mode)?;
        Ok(EtaRow {
            eta,
            budget_total: cert.budget.total,
            lower_bound: cert.lower_bound,
            verdict: cert.verdict,
        })
    };
    let rows = etas.iter().map(|&e| row_for(e)).collect::<Result<Vec<_>>>()?;

    let best_eta = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Positive)
        .map(|r| r.eta)
        .fold(None, |acc: Option<f64>, e| {
            Some(acc.map_or(e, |a: f64| a.min(e)))
        });

    let mut refined_eta = None;
    if refine {
        // Scan adjacent pairs for a bracket: positive lower bound at one η,
        // non-positive at a smaller η.
        let mut sorted: Vec<&EtaRow> = rows.iter().collect();
        sorted.sort_by(|a, b| b.eta.partial_cmp(&a.eta).unwrap());
        for w in sorted.windows(2) {
            let (hi, lo) = (w[0], w[1]);
            if hi.lower_bound > 0.0 && lo.lower_bound <= 0.0 {
                let (mut a, mut b) = (lo.eta, hi.eta); // lower(a) ≤ 0 < lower(b)
                while (b - a) / b > 5e-5 {
                    let mid = 0.5 * (a + b);
                    if row_for(mid)?.lower_bound > 0.0 {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
                refined_eta = Some(b);
                break;
            }
        }
    }
    Ok(EtaScan {
        rows,
        best_eta,
        refined_eta,
    })
}

/// Render a certificate as stable `key = value` lines plus a final verdict.
pub fn render_certificate(cert: &Certificate) -> String {
    use std::fmt::Write as _;
    let p = &cert.params;
    let mut out = String::new();
    let _ = writeln!(out, "variant = {}", p.variant);
    let _ = writeln!(out, "alpha = {:e}", p.alpha);
    let _ = writeln!(out, "omega = {}", p.omega);
    let _ = writeln!(out, "eta = {:e}", p.eta);
    let _ = writeln!(out, "A = {:e}", p.a_height);
    let _ = writeln!(out, "T = {}", p.t_height);
    let _ = writeln!(out, "rh_mode = {}", p.rh_mode);
    let _ = writeln!(out, "zeros_used = {}", cert.sum.zeros_used);
    let _ = writeln!(out, "t_effective = {}", cert.sum.t_effective);
    let _ = writeln!(out, "S1_star = {:.15e}", cert.sum.s1);
    let _ = writeln!(out, "S2_star = {:.15e}", cert.sum.s2);
    let _ = writeln!(out, "S_star = {:.15e}", cert.sum.s_star);
    let _ = writeln!(out, "delta_S1 = {:.6e}", cert.sum.delta_s1);
    let _ = writeln!(out, "delta_S2 = {:.6e}", cert.sum.delta_s2);
    for (name, value) in &cert.budget.terms {
        let _ = writeln!(out, "{name} = {value:.6e}");
    }
    let _ = writeln!(out, "R_total = {:.6e}", cert.budget.total);
    let _ = writeln!(out, "lower_bound = {:.15e}", cert.lower_bound);
    match cert.verdict {
        Verdict::Positive => {
            let l = cert.run_length_log10;
            let _ = writeln!(out, "run_length_log10 = {l:.6}");
            let _ = writeln!(out, "run_length = {}", render_magnitude(l));
        }
        Verdict::Inconclusive => {
            let _ = writeln!(out, "run_length_log10 = none");
            let _ = writeln!(out, "run_length = none");
        }
    }
    let _ = writeln!(out, "VERDICT: {}", cert.verdict);
    out
}
