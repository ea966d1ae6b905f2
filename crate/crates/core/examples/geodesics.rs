//! Geodesics, neighbours and branch classes in the tree.
//!
//! ```text
//! cargo run --example geodesics
//! ```

use moebius::tree::{classify, distance, neighbors, path_between};
use moebius::slope::TreeVertex;

fn main() -> moebius::Result<()> {
    let u = TreeVertex::new(5, 3)?;
    let w = TreeVertex::new(-7, 5)?;
    println!("{u} to {w}: {} ({} edges)", path_between(&u, &w), distance(&u, &w));

    let near: Vec<String> = neighbors(&u, 12).iter().map(ToString::to_string).collect();
    println!("neighbours of {u} up to 12: {}", near.join(" "));

    for (p, q) in [(0, 1), (1, 3), (1, 1), (4, 5), (5, 3), (9, 1), (-11, 7)] {
        let v = TreeVertex::new(p, q)?;
        let class = classify(&v);
        println!("{v:>6}  {:<12} anchor {}", class.label.to_string(), class.anchor);
    }
    Ok(())
}
