//! Writes a box of the tree as DOT, JSON and SVG into a directory
//! (default `target/tree-export`).
//!
//! ```text
//! cargo run --example tree_export -- out/
//! ```

use std::fs;
use std::path::PathBuf;

use moebius::cli::export::{export_tree, ExportFormat, RenderSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("target/tree-export"), PathBuf::from);
    fs::create_dir_all(&dir)?;
    for (format, ext) in [(ExportFormat::Dot, "dot"), (ExportFormat::Json, "json"), (ExportFormat::Svg, "svg")] {
        let spec = RenderSpec {
            p_bound: 8,
            q_bound: 15,
            depth: Some(4),
            format,
        };
        let path = dir.join(format!("tree.{ext}"));
        fs::write(&path, export_tree(&spec)?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
