//! Run the kernel-lemma and catalog-fact battery against quadrature.
//!
//! Every closed-form identity and tail bound the error budget relies on is
//! re-checked numerically: Gaussian-kernel Fourier and moment identities
//! against adaptive quadrature on random parameter draws, dominance of the
//! printed tail bounds over the true integrals, and the zero-density
//! bracket against direct sums over the catalog.
//!
//! Run with: cargo run --example verify_lemmas

use skewes::checks::{all_passed, render_report, verify_lemmas};
use skewes::ZeroCatalog;

fn main() -> skewes::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros_100k.txt");
    let catalog = ZeroCatalog::load_text(path)?;

    let results = verify_lemmas(&catalog, 100);
    print!("{}", render_report(&results));
    println!(
        "\n{} checks, {} failed",
        results.len(),
        results.iter().filter(|r| !r.passed).count()
    );
    std::process::exit(if all_passed(&results) { 0 } else { 1 });
}
