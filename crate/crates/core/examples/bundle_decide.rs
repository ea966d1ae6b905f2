//! Quadrilateral discs in punctured torus bundles, with a brute-force check.
//!
//! ```text
//! cargo run --example bundle_decide -- 5,2;2,1
//! ```

use moebius::bundle::{brute_search, decide, form_of, Monodromy, DiscVerdict};
use moebius::cli::parse::parse_matrix;

fn report(m: &Monodromy) -> moebius::Result<()> {
    let form = form_of(m);
    let verdict = decide(m)?;
    print!("{m:>10}  trace {:>3}  form {form}  ", m.trace());
    match &verdict {
        DiscVerdict::Exists { witness, method } => {
            print!("Exists ({method}) at ({},{}) value {}", witness.x, witness.y, witness.value)
        }
        DiscVerdict::NotExists { method } => print!("NotExists ({method})"),
        DiscVerdict::Unknown { height } => print!("Unknown up to {height}"),
    }
    let brute = brute_search(m, 200)?;
    println!("  brute {}", if brute.is_some() { "found" } else { "none" });
    Ok(())
}

fn main() -> moebius::Result<()> {
    if let Some(text) = std::env::args().nth(1) {
        match parse_matrix(&text) {
            Ok(m) => return report(&m),
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(2);
            }
        }
    }
    for (a, b, c, d) in [(2, 1, 1, 1), (3, 2, 4, 3), (-1, 0, 0, -1), (0, -1, 1, 0), (1, 1, -1, 0), (5, 2, 2, 1), (4, 3, 5, 4)] {
        report(&Monodromy::new(a, b, c, d)?)?;
    }
    Ok(())
}
