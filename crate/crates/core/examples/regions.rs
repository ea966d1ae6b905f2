//! Region decomposition of torus x I between two Z/2-compatible curves.
//!
//! ```text
//! cargo run --example regions
//! ```

use moebius::collar::region_decomposition;
use moebius::slope::{apply_matrix, Curve, UnimodularMatrix};

fn show(inner: &Curve, outer: &Curve) -> moebius::Result<()> {
    let r = region_decomposition(inner, outer)?;
    let slopes: Vec<String> = r.slopes.iter().map(ToString::to_string).collect();
    let bands: Vec<String> = r.bands.iter().map(ToString::to_string).collect();
    println!("inner {inner}, outer {outer}");
    println!("  normalizer {}", r.normalizer);
    println!("  slopes     {}", slopes.join(" "));
    println!("  bands      {}", bands.join(" "));
    println!("  genus      {}", r.genus);
    Ok(())
}

fn main() -> moebius::Result<()> {
    let inner = Curve::new(0, 1)?;
    let outer = Curve::new(10, 3)?;
    show(&inner, &outer)?;

    // Same pair in other coordinates: the normalized data does not change.
    let m = UnimodularMatrix::new(2, 3, 3, 5)?;
    show(&apply_matrix(&m, &inner), &apply_matrix(&m, &outer))?;

    // Odd intersection: no one-sided surface joins them.
    if let Err(e) = region_decomposition(&inner, &Curve::new(3, 2)?) {
        println!("(0,1) and (3,2): {e}");
    }
    Ok(())
}
