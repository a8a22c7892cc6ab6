//! Numerical certification toolkit for sign changes ("crossovers") of
//! π(x) − li(x) using Lehman-type integrated explicit formulas.
//!
//! The difference π(x) − li(x) is negative for every x where it has ever been
//! computed directly, yet Littlewood proved it changes sign infinitely often.
//! Lehman (1966) turned the explicit formula for a Gaussian-weighted integral
//!
//! ```text
//! I(ω,η) = ∫_{ω−η}^{ω+η} K(u−ω) · u e^{−u/2} (π(eᵘ) − li(eᵘ)) du,
//! K(x)   = √(α/2π) · e^{−αx²/2},
//! ```
//!
//! into a finite, checkable criterion: a damped sum over zeta-zero ordinates
//! plus a closed-form error budget. If the certified lower bound for I(ω,η)
//! is positive, a crossover must occur with exp(ω−η) ≤ x ≤ exp(ω+η).
//!
//! This crate evaluates the damped zero sums in compensated, deterministic
//! arithmetic, computes four published error-budget families — Lehman (1966),
//! Saouter–Demichel (2010), the sharpened R₁…R₆ bounds of Revers, and the
//! Saouter–Trudgian–Demichel (2015) weighted-kernel variant — assembles
//! certificates, resizes the interval half-width η, and scans exponent ranges
//! for candidate crossover regions.
//!
//! # Layout
//!
//! - [`catalog`] — zero-ordinate tables, persistence, and the summation
//!   lemmas (Backlund density bracket, inverse-power tail bounds).
//! - [`kernel`] — closed-form Gaussian-kernel identities and tail bounds.
//! - [`budget`] — theorem side conditions and the four error-term families.
//! - [`zero_sum`] — damped sums s/t over zeros with double-word phase
//!   reduction, plus the ΔS₁/ΔS₂ accuracy-propagation bounds.
//! - [`certify`] — certificate assembly, η-resizing, run lengths.
//! - [`scan`] — undamped detection sums f_T/F_T, grid scans, CSV/SVG output.
//! - [`oracle`] — sieve π(x), real/complex logarithmic integral, and the
//!   Riemann–von Mangoldt cross-checks used as ground truth.
//! - [`checks`] — the self-verification suites behind `verify-lemmas` and
//!   `oracle-check`.
//! - [`cli`] — command-line front end wiring the modules together.
//!
//! Start with the `examples/` directory: each major capability has one
//! runnable example (`certify_region`, `resize_eta`, `scan_crossovers`,
//! `verify_lemmas`, `oracle_check`, `zeros_roundtrip`).

pub mod budget;
pub mod catalog;
pub mod certify;
pub mod checks;
pub mod cli;
pub mod dd;
pub mod error;
pub mod kernel;
pub mod oracle;
pub mod quad;
pub mod scan;
pub mod sum;
pub mod zero_sum;

pub use budget::{CertParams, ErrorBudget, Variant, Violation};
pub use catalog::ZeroCatalog;
pub use certify::{Certificate, Verdict};
pub use error::{Error, Result};
pub use zero_sum::SumResult;
