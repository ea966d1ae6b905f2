//! Genus by accelerated parent descent, on slopes far beyond any box.
//!
//! ```text
//! cargo run --example descent -- 123456789012345678901234567890/98765432109876543210987654321
//! ```

use std::time::Instant;

use moebius::cli::parse::parse_slope;
use moebius::slope::vertex_of_slope;
use moebius::tree::{descent_runs, genus};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2584/4181".to_string());
    let s = match parse_slope(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let v = vertex_of_slope(&s);
    let start = Instant::now();
    let runs = descent_runs(&v);
    let g = genus(&s);
    let elapsed = start.elapsed();

    println!("slope {s}, vertex {v}");
    for run in runs.iter().take(12) {
        println!("  {} steps of {} from {}", run.len, run.step, run.start);
    }
    if runs.len() > 12 {
        println!("  ... {} runs in total", runs.len());
    }
    println!("genus {g} ({elapsed:?})");
}
