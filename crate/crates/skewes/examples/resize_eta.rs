//! Shrink the localization half-width η until the error budget collapses.
//!
//! The certified crossover interval is [exp(ω−η), exp(ω+η)], so smaller η
//! means a sharper localization — but the budget terms R₂, R₃, R₆ blow up
//! once αη² stops dominating, and the lower bound goes negative. The scan
//! re-evaluates only the analytic budget per row (the zero sums do not
//! depend on η) and bisects the collapse point to four significant digits.
//!
//! Both published resize experiments are reproduced here from machine S*
//! values, so no zero table is needed.
//!
//! Run with: cargo run --example resize_eta

use skewes::certify::{resize_eta, EtaScan};
use skewes::zero_sum::DeltaMode;
use skewes::CertParams;

fn print_scan(scan: &EtaScan) {
    println!(
        "{:>14} {:>14} {:>16} {:>12}",
        "eta", "budget_total", "lower_bound", "verdict"
    );
    for row in &scan.rows {
        println!(
            "{:>14.6e} {:>14.6e} {:>16.6e} {:>12}",
            row.eta, row.budget_total, row.lower_bound, row.verdict
        );
    }
    match scan.best_eta {
        Some(e) => println!("smallest certified eta = {e:e}"),
        None => println!("no row certifies"),
    }
    if let Some(e) = scan.refined_eta {
        println!("bisected collapse point = {e:.4e}");
    }
}

fn main() -> skewes::Result<()> {
    // Reworked Bays-Hudson region (alpha = 1.34e11). The budget holds its
    // plateau down to eta near 1.061e-4 and collapses at 1.060e-4.
    let bh = CertParams::bays_hudson_reworked();
    let grid = [1.6e-4, 1.4e-4, 1.2e-4, 1.063e-4, 1.061e-4, 1.060e-4, 1.050e-4];
    println!("reworked Bays-Hudson region (omega = {}):", bh.omega);
    let scan = resize_eta(
        None,
        &bh,
        &grid,
        Some(-1.006553478788955),
        DeltaMode::Compat,
        true,
    )?;
    print_scan(&scan);

    // Saouter-Demichel region (alpha = 6e12): a deeper table with a much
    // sharper collapse; eta = 1.55e-5 overshoots the budget by three orders
    // of magnitude.
    let sd = CertParams::saouter_demichel_region();
    let grid = [2.28333e-5, 2.0e-5, 1.8e-5, 1.6e-5, 1.59e-5, 1.58e-5, 1.56e-5, 1.55e-5];
    println!("\nSaouter-Demichel region (omega = {}):", sd.omega);
    let scan = resize_eta(
        None,
        &sd,
        &grid,
        Some(-1.002922947193156),
        DeltaMode::Compat,
        true,
    )?;
    print_scan(&scan);
    Ok(())
}
