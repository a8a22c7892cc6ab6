//! Load a zero table, persist it both ways, and read the summation lemmas.
//!
//! The text format is one ordinate per line with `#` comments and an
//! optional `# accuracy:` header; the binary format is a little-endian
//! blob with a magic tag, used for fast reloads. Round-tripping must
//! preserve every ordinate bit for bit. The catalog also exposes the
//! partial-sum facts the error analysis consumes: inverse-power sums,
//! the Backlund bracket for Σ 1/γ, and tail bounds past the table end.
//!
//! Run with: cargo run --example zeros_roundtrip

use skewes::ZeroCatalog;

fn main() -> skewes::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros_100k.txt");
    let catalog = ZeroCatalog::load_text(path)?;
    println!(
        "loaded {} ordinates: gamma_1 = {}, gamma_last = {}",
        catalog.len(),
        catalog.ordinates()[0],
        catalog.last()
    );
    println!(
        "stated accuracy {:e}, effective accuracy {:e}",
        catalog.accuracy(),
        catalog.effective_accuracy()
    );

    let dir = std::env::temp_dir();
    let text_path = dir.join("zeros_roundtrip.txt");
    let bin_path = dir.join("zeros_roundtrip.bin");
    catalog.save_text(&text_path)?;
    catalog.save_binary(&bin_path)?;
    let from_text = ZeroCatalog::load_auto(&text_path)?;
    let from_bin = ZeroCatalog::load_auto(&bin_path)?;
    let identical = |a: &ZeroCatalog| {
        a.ordinates()
            .iter()
            .zip(catalog.ordinates())
            .all(|(x, y)| x.to_bits() == y.to_bits())
    };
    println!(
        "text round trip bit-identical: {}, binary: {}",
        identical(&from_text),
        identical(&from_bin)
    );
    let text_bytes = std::fs::metadata(&text_path)?.len();
    let bin_bytes = std::fs::metadata(&bin_path)?.len();
    println!("text {text_bytes} bytes, binary {bin_bytes} bytes\n");

    // Summation facts the budget and Delta-bounds consume.
    let t = catalog.last();
    println!(
        "sum 1/gamma^2 over table = {:.8e}",
        catalog.inverse_power_sum(2, t)?
    );
    println!(
        "sum 1/gamma^3 over table = {:.8e}",
        catalog.inverse_power_sum(3, t)?
    );
    let (lo, hi) = ZeroCatalog::reciprocal_sum_bracket(t)?;
    println!("Backlund bracket for sum 1/gamma at T = {t}: [{lo:.6}, {hi:.6}]");
    println!(
        "tail bound for sum 1/gamma^2 past the table: {:.6e}",
        ZeroCatalog::tail_power_bound(2, t)?
    );
    Ok(())
}
