//! Certify the reworked Bays–Hudson region under all four theorem variants.
//!
//! The zero-sum block is supplied as a published machine value via an
//! override, so this example runs without any zero table. The same region
//! and the same S* are fed to each error-budget family; only the analytic
//! budget changes. Lehman's 1966 constants are too lossy to certify the
//! region, the Saouter–Demichel and sharpened budgets both certify it, and
//! the 2015 weighted-kernel variant leaves the widest margin.
//!
//! Run with: cargo run --example certify_region

use skewes::budget::Variant;
use skewes::certify::{certify_with, render_certificate};
use skewes::zero_sum::DeltaMode;
use skewes::CertParams;

// Machine value for S*(α, ω, T) at the parameters below, summed over the
// first two million zero ordinates (T = 1131944.4718).
const S_STAR: f64 = -1.006553478788955;

fn main() -> skewes::Result<()> {
    let base = CertParams::bays_hudson_reworked();

    println!("region: omega = {}, eta = {:e}", base.omega, base.eta);
    println!("        alpha = {:e}, A = {:e}, T = {}", base.alpha, base.a_height, base.t_height);
    println!("        S* override = {S_STAR} (2e6-zero machine value)\n");

    println!(
        "{:>22} {:>14} {:>22} {:>14}",
        "variant", "budget_total", "lower_bound", "verdict"
    );
    for variant in [
        Variant::Lehman1966,
        Variant::SaouterDemichel2010,
        Variant::Revers,
        Variant::Std2015,
    ] {
        let p = CertParams { variant, ..base.clone() };
        let cert = certify_with(None, &p, Some(S_STAR), DeltaMode::Compat)?;
        println!(
            "{:>22} {:>14.6e} {:>22.15e} {:>14}",
            variant.name(),
            cert.budget.total,
            cert.lower_bound,
            cert.verdict
        );
    }

    // Full certificate for the sharpened budget, including the run of
    // successive integers x with pi(x) > li(x) that positivity implies.
    let cert = certify_with(None, &base, Some(S_STAR), DeltaMode::Compat)?;
    println!("\n{}", render_certificate(&cert));
    Ok(())
}
