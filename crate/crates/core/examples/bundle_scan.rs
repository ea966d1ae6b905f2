//! Decides every determinant-one matrix with small entries.
//!
//! ```text
//! cargo run --release --example bundle_scan -- 8
//! ```

use moebius::bundle::scan_matrices;

fn main() -> moebius::Result<()> {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let report = scan_matrices(bound)?;
    println!("entries <= {bound}: {} matrices", report.total);
    println!("  with a disc      {}", report.exists_count);
    println!("  without          {}", report.not_exists_count);
    println!("  parity criterion {}", report.criterion_count);
    println!("  disagreements    {:?}", report.disagreements);
    Ok(())
}
