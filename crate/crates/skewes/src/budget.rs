//! Theorem side conditions and the four published error-term families.
//!
//! Four variants are implemented, selected by [`Variant`]:
//!
//! - `lehman1966` — Lehman's original S₁…S₆ bounds;
//! - `saouter_demichel2010` — Saouter–Demichel's sharpened leading term S₁′
//!   (the remaining terms coincide with Lehman's);
//! - `revers` — the sharpened R₁…R₆ bounds obtained through the double
//!   summation 1/ρ + 1/(ωρ²);
//! - `std2015` — the Saouter–Trudgian–Demichel weighted-kernel variant with
//!   its five R terms.
//!
//! Every term is a non-negative closed form; totals are compensated sums in
//! a fixed term order so they reproduce bit-for-bit. Terms carrying the
//! factor e^{(ω+η)/2} are evaluated in log-space: with ω ≈ 728 the factor
//! alone overflows binary64, while the combined exponents (e.g.
//! −αη²/4 + (ω+η)/2) are tame for any certifiable parameter set. If a
//! combined exponent still overflows, the term becomes +∞ and the
//! certificate fails safely rather than silently.

use crate::catalog::TWO_PI_E;
use crate::error::{Error, Result};
use crate::kernel::gaussian_kernel;
use crate::sum::sum_compensated;

/// Theorem-variant selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Lehman's 1966 bounds (S₁…S₆).
    Lehman1966,
    /// Saouter–Demichel 2010 (S₁′ plus Lehman's S₂…S₆).
    SaouterDemichel2010,
    /// The sharpened R₁…R₆ bounds via double summation.
    Revers,
    /// Saouter–Trudgian–Demichel 2015 weighted-kernel variant (R₁…R₅).
    Std2015,
}

impl Variant {
    /// Stable identifier used by the CLI and reports.
    pub fn name(self) -> &'static str {
        match self {
            Variant::Lehman1966 => "lehman1966",
            Variant::SaouterDemichel2010 => "saouter_demichel2010",
            Variant::Revers => "revers",
            Variant::Std2015 => "std2015",
        }
    }

    /// Parse the stable identifier.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lehman1966" => Ok(Variant::Lehman1966),
            "saouter_demichel2010" => Ok(Variant::SaouterDemichel2010),
            "revers" => Ok(Variant::Revers),
            "std2015" => Ok(Variant::Std2015),
            other => Err(Error::Usage(format!(
                "unknown variant {other:?}; expected one of lehman1966, \
                 saouter_demichel2010, revers, std2015"
            ))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Free parameters of the integrated explicit formula.
#[derive(Clone, Copy, Debug)]
pub struct CertParams {
    /// Gaussian sharpness α.
    pub alpha: f64,
    /// Log-scale center ω (the certificate covers e^{ω±η}).
    pub omega: f64,
    /// Interval half-width η.
    pub eta: f64,
    /// Height up to which the Riemann hypothesis is verified.
    pub a_height: f64,
    /// Zero-sum truncation height T ≤ A.
    pub t_height: f64,
    /// Error-budget family.
    pub variant: Variant,
    /// Assume the Riemann hypothesis globally: drops the unverified-zero
    /// term (R₆/S₆, or the e^{(ω+η)/2} factor for `std2015`) and the α/η
    /// side conditions.
    pub rh_mode: bool,
}

impl CertParams {
    /// The flagship parameter set for the reworked Bays–Hudson region
    /// (Chao–Plymen 2010): α = 1.34·10¹¹, ω = 727.952018, η = 1.6·10⁻⁴,
    /// A = 1.022·10⁷, T = 1131944.4718.
    pub fn bays_hudson_reworked() -> Self {
        CertParams {
            alpha: 1.34e11,
            omega: 727.952018,
            eta: 1.6e-4,
            a_height: 1.022e7,
            t_height: 1131944.4718,
            variant: Variant::Revers,
            rh_mode: false,
        }
    }

    /// The Saouter–Demichel 2010 region: α = 6·10¹², ω = 727.95134,
    /// η = 2.28333·10⁻⁵, A = 6.85·10⁷, T = 10379599.7274.
    pub fn saouter_demichel_region() -> Self {
        CertParams {
            alpha: 6.0e12,
            omega: 727.95134,
            eta: 2.28333e-5,
            a_height: 6.85e7,
            t_height: 10379599.7274,
            variant: Variant::Revers,
            rh_mode: false,
        }
    }
}

/// One violated side condition, with both sides evaluated.
#[derive(Clone, Debug)]
pub struct Violation {
    /// Human-readable statement of the condition, e.g. `"omega - eta >= 44.22"`.
    pub condition: String,
    /// Evaluated left-hand side.
    pub lhs: f64,
    /// Evaluated right-hand side.
    pub rhs: f64,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} violated (lhs = {:.6e}, rhs = {:.6e})",
            self.condition, self.lhs, self.rhs
        )
    }
}

/// Itemized error budget: named non-negative terms in a fixed order plus
/// their compensated total.
#[derive(Clone, Debug)]
pub struct ErrorBudget {
    /// `(name, value)` pairs in the theorem's term order.
    pub terms: Vec<(String, f64)>,
    /// Compensated sum of the values.
    pub total: f64,
}

impl ErrorBudget {
    fn from_terms(named: Vec<(&'static str, f64)>) -> Self {
        let total = sum_compensated(named.iter().map(|&(_, v)| v));
        ErrorBudget {
            terms: named.into_iter().map(|(n, v)| (n.to_string(), v)).collect(),
            total,
        }
    }

    /// Look up a term by name.
    pub fn term(&self, name: &str) -> Option<f64> {
        self.terms.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

fn check(violations: &mut Vec<Violation>, ok: bool, condition: &str, lhs: f64, rhs: f64) {
    if !ok {
        violations.push(Violation {
            condition: condition.to_string(),
            lhs,
            rhs,
        });
    }
}

/// Evaluate every side condition of the selected variant; an empty list
/// means the parameters are admissible. In `rh_mode` the α- and η-conditions
/// are skipped (they, together with the unverified-zero term, may be omitted
/// under the Riemann hypothesis); the ω-domain and truncation conditions
/// always apply.
pub fn validate_conditions(p: &CertParams) -> Vec<Violation> {
    let mut v = Vec::new();
    let CertParams {
        alpha,
        omega,
        eta,
        a_height: a,
        t_height: t,
        ..
    } = *p;

    // Baseline domain: positive parameters and the truncation window.
    check(&mut v, alpha > 0.0, "alpha > 0", alpha, 0.0);
    check(&mut v, omega > 0.0, "omega > 0", omega, 0.0);
    check(&mut v, eta > 0.0, "eta > 0", eta, 0.0);
    check(&mut v, a > 0.0, "A > 0", a, 0.0);
    check(&mut v, t > TWO_PI_E, "T > 2*pi*e", t, TWO_PI_E);
    check(&mut v, t <= a, "T <= A", t, a);

    // Variant ω-domain conditions (never skipped).
    match p.variant {
        Variant::Lehman1966 => {
            check(&mut v, omega - eta > 1.0, "omega - eta > 1", omega - eta, 1.0);
        }
        Variant::SaouterDemichel2010 => {
            check(
                &mut v,
                omega - eta > 25.57,
                "omega - eta > 25.57",
                omega - eta,
                25.57,
            );
        }
        Variant::Revers => {
            check(
                &mut v,
                omega - eta >= 44.22,
                "omega - eta >= 44.22",
                omega - eta,
                44.22,
            );
        }
        Variant::Std2015 => {
            check(&mut v, omega > 73.69, "omega > 73.69", omega, 73.69);
        }
    }

    // Variant α/η conditions (skipped under rh_mode).
    if !p.rh_mode {
        match p.variant {
            Variant::Lehman1966 | Variant::SaouterDemichel2010 => {
                check(
                    &mut v,
                    4.0 * a / omega <= alpha,
                    "4A/omega <= alpha",
                    4.0 * a / omega,
                    alpha,
                );
                check(&mut v, alpha <= a * a, "alpha <= A^2", alpha, a * a);
                check(
                    &mut v,
                    2.0 * a / alpha <= eta,
                    "2A/alpha <= eta",
                    2.0 * a / alpha,
                    eta,
                );
                check(&mut v, eta < omega / 2.0, "eta < omega/2", eta, omega / 2.0);
            }
            Variant::Revers | Variant::Std2015 => {
                check(
                    &mut v,
                    5.0 * a / (4.0 * omega) <= alpha,
                    "5A/(4*omega) <= alpha",
                    5.0 * a / (4.0 * omega),
                    alpha,
                );
                check(&mut v, alpha <= a * a, "alpha <= A^2", alpha, a * a);
                check(
                    &mut v,
                    eta < omega / 100.0,
                    "eta < omega/100",
                    eta,
                    omega / 100.0,
                );
            }
        }
    }
    v
}

fn require_valid(p: &CertParams) -> Result<()> {
    let v = validate_conditions(p);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Conditions(
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
        ))
    }
}

/// `exp` with underflow replaced by the smallest positive normal value.
/// Every budget term is added, so flushing a tiny factor to exact zero would
/// discard a (provably negligible but nonzero) contribution; the floor keeps
/// the total conservative without affecting any printed digit.
fn conservative_exp(x: f64) -> f64 {
    let v = x.exp();
    if v == 0.0 {
        f64::MIN_POSITIVE
    } else {
        v
    }
}

/// Truncation-at-T term shared verbatim by the `revers` and `std2015`
/// families: `e^{−T²/2α}·((α/πT²)·log(T/2π) + 8·logT/T + 4α/T³)·(1 + 1/(ωT))`.
fn r4_term(alpha: f64, omega: f64, t: f64) -> f64 {
    let damp = conservative_exp(-t * t / (2.0 * alpha));
    let core = (alpha / (std::f64::consts::PI * t * t)) * (t / (2.0 * std::f64::consts::PI)).ln()
        + 8.0 * t.ln() / t
        + 4.0 * alpha / (t * t * t);
    damp * core * (1.0 + 1.0 / (omega * t))
}

/// Lehman's S₄: the same core as [`r4_term`] without the (1 + 1/(ωT)) factor.
fn s4_term(alpha: f64, t: f64) -> f64 {
    let damp = conservative_exp(-t * t / (2.0 * alpha));
    let core = (alpha / (std::f64::consts::PI * t * t)) * (t / (2.0 * std::f64::consts::PI)).ln()
        + 8.0 * t.ln() / t
        + 4.0 * alpha / (t * t * t);
    damp * core
}

/// The sharpened R₁…R₆ budget. In `rh_mode` the unverified-zero term R₆ is
/// zero and the α/η side conditions are waived.
pub fn revers_terms(p: &CertParams) -> Result<ErrorBudget> {
    require_valid(p)?;
    let CertParams {
        alpha,
        omega,
        eta,
        a_height: a,
        t_height: t,
        ..
    } = *p;
    let d = omega - eta; // ω − η
    let s = omega + eta; // ω + η
    let exp_half = conservative_exp(-d / 2.0);
    let exp_sixth = conservative_exp(-d / 6.0);
    let exp_eta = conservative_exp(-0.5 * alpha * eta * eta);

    let r1 = 2.0 / d
        + 8.0 / (d * d)
        + 58.56 / (d * d * d)
        + std::f64::consts::LN_2 * s * exp_half
        + (2.0 / std::f64::consts::LN_2) * s * exp_sixth;

    let r2 = (0.037 / (omega * alpha.sqrt()))
        * ((0.082 * alpha).min(1.0 / eta) * exp_eta + (1.0 - exp_eta) / d);

    let r3 = 0.074 * alpha.sqrt() * exp_eta;

    let r4 = r4_term(alpha, omega, t);

    let r5 = 0.003 / (d * d);

    let r6 = if p.rh_mode {
        0.0
    } else {
        // Log-space: the bare factor e^{(ω+η)/2} overflows for ω ≈ 728.
        let e1 = -0.25 * alpha * eta * eta + s / 2.0;
        let e2 = -a * a / (2.0 * alpha) + s / 2.0;
        (1.0 + 22.0 / (a * omega))
            * a
            * a.ln()
            * ((8.283 / a) * conservative_exp(e1) + 7.152 * eta * conservative_exp(e2))
    };

    Ok(ErrorBudget::from_terms(vec![
        ("R1", r1),
        ("R2", r2),
        ("R3", r3),
        ("R4", r4),
        ("R5", r5),
        ("R6", r6),
    ]))
}

/// Lehman's original S₁…S₆ budget. In `rh_mode` S₆ is zero.
pub fn lehman_terms(p: &CertParams) -> Result<ErrorBudget> {
    require_valid(p)?;
    let CertParams {
        alpha,
        omega,
        eta,
        a_height: a,
        t_height: t,
        ..
    } = *p;
    let d = omega - eta;
    let s = omega + eta;
    let exp_eta = conservative_exp(-0.5 * alpha * eta * eta);

    let s1 = 3.0 / d + 4.0 * s * conservative_exp(-d / 6.0);
    let s2 = 2.0 * exp_eta / (eta * (2.0 * std::f64::consts::PI * alpha).sqrt());
    let s3 = 0.08 * alpha.sqrt() * exp_eta;
    let s4 = s4_term(alpha, t);
    let s5 = 0.05 / d;
    let s6 = if p.rh_mode {
        0.0
    } else {
        let e = -a * a / (2.0 * alpha) + s / 2.0;
        a * a.ln() * conservative_exp(e) * (4.0 / alpha.sqrt() + 15.0 * eta)
    };

    Ok(ErrorBudget::from_terms(vec![
        ("S1", s1),
        ("S2", s2),
        ("S3", s3),
        ("S4", s4),
        ("S5", s5),
        ("S6", s6),
    ]))
}

/// Saouter–Demichel's sharpened leading term
/// `S₁′ = 2/(ω−η) + 10.04/(ω−η)² + log2·(ω+η)·e^{−(ω−η)/2} + (2/log2)·(ω+η)·e^{−(ω−η)/6}`.
pub fn saouter_demichel_s1(p: &CertParams) -> Result<f64> {
    let d = p.omega - p.eta;
    if !(d > 25.57) {
        return Err(Error::Conditions(format!(
            "omega - eta > 25.57 violated (lhs = {d:.6e})"
        )));
    }
    let s = p.omega + p.eta;
    Ok(2.0 / d
        + 10.04 / (d * d)
        + std::f64::consts::LN_2 * s * conservative_exp(-d / 2.0)
        + (2.0 / std::f64::consts::LN_2) * s * conservative_exp(-d / 6.0))
}

/// Full Saouter–Demichel budget: S₁′ plus Lehman's S₂…S₆ unchanged.
pub fn saouter_demichel_terms(p: &CertParams) -> Result<ErrorBudget> {
    require_valid(p)?;
    let s1p = saouter_demichel_s1(p)?;
    let lehman = lehman_terms(&CertParams {
        variant: Variant::Lehman1966,
        ..*p
    })?;
    let mut named: Vec<(&'static str, f64)> = vec![("S1'", s1p)];
    for (i, name) in ["S2", "S3", "S4", "S5", "S6"].iter().enumerate() {
        named.push((name, lehman.terms[i + 1].1));
    }
    Ok(ErrorBudget::from_terms(named))
}

/// The Saouter–Trudgian–Demichel weighted-kernel budget R₁…R₅. In `rh_mode`
/// the factor e^{(ω+η)/2} in R₅ is replaced by 1.
pub fn std_terms(p: &CertParams) -> Result<ErrorBudget> {
    require_valid(p)?;
    let CertParams {
        alpha,
        omega,
        eta,
        a_height: a,
        t_height: t,
        ..
    } = *p;
    let d = omega - eta;
    let s = omega + eta;
    let k_eta = gaussian_kernel(alpha, eta).max(f64::MIN_POSITIVE);

    let r1 = (2.0 / alpha.sqrt()) * k_eta;

    let r2 = s
        * (std::f64::consts::LN_2 * conservative_exp(-d / 2.0)
            + 3.0 * conservative_exp(-d / 6.0));

    let r3 = 0.19 * k_eta
        + (0.35 / (omega * omega * alpha.sqrt()))
            * ((a / (2.0 * std::f64::consts::PI)).ln().powi(2) + 11.81)
        + 0.00292 / (d * d);

    let r4 = r4_term(alpha, omega, t);

    let r5 = {
        // Log-space accumulation of the e^{(ω+η)/2} factor (1 under RH).
        let lift = if p.rh_mode { 0.0 } else { s / 2.0 };
        let e1 = -0.25 * alpha * eta * eta + lift;
        let e2 = -a * a / (2.0 * alpha) + lift;
        (1.0 + 22.0 / (a * omega))
            * a
            * a.ln()
            * ((13.840 / a) * conservative_exp(e1) + 11.951 * eta * conservative_exp(e2))
    };

    Ok(ErrorBudget::from_terms(vec![
        ("R1", r1),
        ("R2", r2),
        ("R3", r3),
        ("R4", r4),
        ("R5", r5),
    ]))
}

/// Dispatch to the budget family selected by `params.variant`.
pub fn terms_for(p: &CertParams) -> Result<ErrorBudget> {
    match p.variant {
        Variant::Lehman1966 => lehman_terms(p),
        Variant::SaouterDemichel2010 => saouter_demichel_terms(p),
        Variant::Revers => revers_terms(p),
        Variant::Std2015 => std_terms(p),
    }
}
