//! Builds a brute-force box of the tree and checks it against descent.
//!
//! ```text
//! cargo run --release --example verify_box -- 30 61
//! ```

use moebius::oracle::{build_box_graph, verify_invariants};

fn main() -> moebius::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>());
    let p = args.next().and_then(Result::ok).unwrap_or(30);
    let q = args.next().and_then(Result::ok).unwrap_or(61);
    let tree_box = build_box_graph(p, q)?;
    let report = verify_invariants(&tree_box);
    println!("box({p},{q}): {} vertices, {} edges", report.vertex_count, report.edge_count);
    println!("  tree                 {:?}", report.tree);
    println!("  descent mismatches   {}", report.descent_mismatches.len());
    println!("  non-monotone paths   {}", report.monotonicity_violations.len());
    println!("  misclassified        {}", report.classification_mismatches.len());
    println!("  edge slope failures  {}", report.edge_slope_violations.len());
    println!("{}", if report.all_pass() { "ok" } else { "FAILED" });
    Ok(())
}
