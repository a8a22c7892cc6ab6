//! Two-stage crossover hunt with the undamped detection sum F_T.
//!
//! F_T(u) = −1 − Σ_{0<γ≤T} 2·Re(e^{i u ln10 γ}/ρ) tracks the sign of
//! π(x) − li(x) near x = 10^u once enough zeros are summed. Positive values
//! flag candidate crossover regions; they prove nothing by themselves (the
//! analytic error terms are dropped) but they tell the certifier where to
//! aim.
//!
//! The hunt needs two stages because near-crossing humps are far narrower
//! than any affordable grid. Stage 1 sweeps a wide window coarsely; stage 2
//! zooms iteratively on promising sub-windows. With the first 10^5 zeros the
//! positive basin inside the classical Bays–Hudson region is only ~2×10⁻⁵
//! wide on the log₁₀ axis — a coarse sweep of [300, 320] reads −0.35 there
//! and the zoom still finds the peak.
//!
//! Run with: cargo run --release --example scan_crossovers

use skewes::scan::{find_candidates, refine_maximum, scan};
use skewes::ZeroCatalog;

fn main() -> skewes::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros_100k.txt");
    let catalog = ZeroCatalog::load_text(path)?;
    let t = catalog.last();
    println!("catalog: {} zeros, T = {t}\n", catalog.len());

    // Stage 1: coarse sweep of the region around the classical crossover.
    // The grid max sits on a broad shoulder near u = 313.3, nowhere near
    // positive; the true peak hides between grid points.
    let series = scan(&catalog, 300.0, 320.0, 500, t, true)?;
    let (mut max_v, mut max_at) = (f64::NEG_INFINITY, 0.0);
    for (&u, &v) in series.omegas.iter().zip(&series.values) {
        if v > max_v {
            max_v = v;
            max_at = u;
        }
    }
    println!("stage 1: [300, 320] x 500, spacing {:.4}", series.grid_spacing);
    println!("  grid max F = {max_v:.6} at u = {max_at:.6}");

    // Stage 2: iterated zoom on the hot sub-window. Three rounds of
    // 500-point scans contract the window by ~125x per round and land on
    // the positive peak.
    let peak = refine_maximum(&catalog, 316.05, 316.25, 500, t, true, 3)?;
    println!("stage 2: zoom on [316.05, 316.25]");
    println!(
        "  refined peak F = {:+.6} at u = {:.8}  ({})",
        peak.value,
        peak.omega,
        if peak.positive() { "positive: candidate crossover" } else { "still negative" }
    );
    println!("  crossover candidate near x = 10^{:.4}\n", peak.omega);

    // The first candidate region cannot sit below u ~ 41: sweep [20, 40]
    // and confirm the surface stays negative everywhere.
    let low = scan(&catalog, 20.0, 40.0, 500, t, true)?;
    let low_max = low.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    println!("sweep [20, 40]: max F = {low_max:.6} (everywhere negative)");

    // The classical near-miss at u ~ 41.65: negative even at the peak, but
    // close enough to zero that deeper tables keep probing it.
    let near = refine_maximum(&catalog, 40.0, 44.0, 500, t, true, 3)?;
    println!(
        "near-miss at u = {:.6}: refined peak F = {:+.6} (negative, no crossover)\n",
        near.omega, near.value
    );

    // Candidate extraction on a fine sub-grid: strict interior maxima above
    // a threshold, reported at grid resolution.
    let fine = scan(&catalog, 175.9, 176.0, 500, t, true)?;
    let cands = find_candidates(&fine, -0.16);
    println!("fine scan [175.9, 176.0], threshold -0.16:");
    for c in &cands {
        println!("  candidate at u = {:.6}, F = {:+.6}", c.omega, c.value);
    }
    Ok(())
}
