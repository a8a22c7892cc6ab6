//! Run the ground-truth oracle battery: sieve, li, and explicit formula.
//!
//! The oracles are the slow, independent routes the fast code is checked
//! against: a sieve for π(x), quadrature for li, and the Riemann–von
//! Mangoldt explicit formula for Π₀. One battery check is expected to fail
//! with this catalog and is left failing on purpose: the truncated explicit
//! formula at x = 1000 does not approach Π₀(1000) monotonically in the
//! truncation depth K. The partial sums oscillate — the K = 100 deviation
//! (0.392) is five times the K = 10 one (0.075), and K = 1000 lands at
//! 0.0506. The battery reports what the formula actually does.
//!
//! Run with: cargo run --release --example oracle_check

use skewes::checks::{oracle_check, render_report, OracleConfig};
use skewes::ZeroCatalog;

fn main() -> skewes::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros_100k.txt");
    let catalog = ZeroCatalog::load_text(path)?;

    let cfg = OracleConfig::default();
    println!(
        "sieve limit {}, {} li samples, seed {}\n",
        cfg.max_x, cfg.samples, cfg.seed
    );
    let results = oracle_check(Some(&catalog), &cfg)?;
    print!("{}", render_report(&results));
    println!(
        "\n{} checks, {} failed",
        results.len(),
        results.iter().filter(|r| !r.passed).count()
    );
    Ok(())
}
