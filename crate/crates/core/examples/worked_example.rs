//! The slope (10,3): its surface, bands and one compression.
//!
//! ```text
//! cargo run --example worked_example
//! ```

use moebius::collar::{band_decomposition, compress};
use moebius::slope::{vertex_of_slope, BoundarySlope};
use moebius::tree::{genus, path_to_root};

fn main() -> moebius::Result<()> {
    let s = BoundarySlope::new(10, 3)?;
    let v = vertex_of_slope(&s);
    println!("slope {s} is the vertex {v}");
    println!("root path  {}", path_to_root(&v));
    println!("genus      {}", genus(&s));

    let bands: Vec<String> = band_decomposition(&s).iter().map(ToString::to_string).collect();
    println!("bands      {}", bands.join(" "));

    // Removing the outermost band lands on the parent.
    let mut t = s;
    while let Ok(next) = compress(&t) {
        println!("compress   {t} -> {next}");
        t = next;
    }
    Ok(())
}
