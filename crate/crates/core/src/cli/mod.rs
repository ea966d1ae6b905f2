//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but names
//! invalid data (an odd slope, a non-unimodular matrix, a failed check), 2 on
//! usage errors. Machine-readable output is a single JSON document on stdout;
//! diagnostics go to stderr.

pub mod export;
pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bundle::{self, DiscVerdict, Monodromy};
use crate::collar::{add_band, band_decomposition, compress, region_decomposition};
use crate::error::Error;
use crate::oracle::{build_box_graph, verify_invariants};
use crate::slope::{BoundarySlope, TreeVertex};
use crate::tree::{classify, genus, neighbors, path_between};

pub use export::{export_tree, ExportFormat, RenderSpec};
use export::json_int;
pub use parse::{
    format_slope, format_vertex, parse_curve, parse_matrix, parse_slope, parse_vertex, InputError,
    ParseError,
};

/// Default height for the brute-force cross-check of `bundle-decide`.
pub const DEFAULT_CHECK_HEIGHT: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "moebius", version, about = "Moebius band tree and punctured torus bundle discs")]
pub struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus of the one-sided surface bounded by a slope `u/v`.
    Genus {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Geodesic between two vertices `p:q`.
    Path {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
    },
    /// Slope after compressing one Moebius band.
    Compress {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Band decomposition of a slope, meridian side first.
    Bands {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Region decomposition between an inner and an outer curve.
    Regions {
        #[arg(allow_hyphen_values = true)]
        inner: String,
        #[arg(allow_hyphen_values = true)]
        outer: String,
    },
    /// Branch class of a vertex.
    Classify {
        #[arg(allow_hyphen_values = true)]
        vertex: String,
    },
    /// Neighbours of a vertex with coordinates bounded by `--bound`.
    Neighbors {
        #[arg(allow_hyphen_values = true)]
        vertex: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Slopes obtained by attaching one band.
    AddBand {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Export a box of the tree as DOT, JSON or SVG.
    TreeExport {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        p_bound: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        q_bound: u32,
        #[arg(long)]
        depth: Option<u64>,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
    },
    /// Decide whether a monodromy `a,b;c,d` admits a quadrilateral disc.
    BundleDecide {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        /// Cross-check against brute force up to this height.
        #[arg(long, num_args = 0..=1, default_missing_value = "1000")]
        check_height: Option<u64>,
        /// Use brute force only; the verdict may be Unknown.
        #[arg(long)]
        search_only: bool,
    },
    /// Decide every determinant-one matrix with bounded entries.
    BundleScan {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        entry_bound: u32,
    },
    /// Check the tree and branch invariants over a box.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p_bound: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q_bound: u32,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Parse(p) => Failure::Usage(p.to_string()),
            InputError::Domain(d) => Failure::Domain(d.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidBounds(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("write failed: {e}"))
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, format: OutputFormat, text: String, doc: Value) -> Result<(), Failure> {
    match format {
        OutputFormat::Text => writeln!(out, "{text}")?,
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?,
    }
    Ok(())
}

fn vertex_json(v: &TreeVertex) -> Value {
    json!({"p": json_int(v.p()), "q": json_int(v.q())})
}

fn slope_json(s: &BoundarySlope) -> Value {
    json!([json_int(s.u()), json_int(s.v())])
}

fn pair_json(a: &BigInt, b: &BigInt) -> Value {
    json!([json_int(a), json_int(b)])
}

fn verdict_text(v: &DiscVerdict) -> String {
    match v {
        DiscVerdict::Exists { witness, method } => format!(
            "Exists ({method}) witness ({},{}) value {}",
            witness.x, witness.y, witness.value
        ),
        DiscVerdict::NotExists { method } => format!("NotExists ({method})"),
        DiscVerdict::Unknown { height } => format!("Unknown (searched to height {height})"),
    }
}

fn verdict_json(v: &DiscVerdict) -> Value {
    match v {
        DiscVerdict::Exists { witness, method } => json!({
            "kind": "Exists",
            "method": method.to_string(),
            "witness": pair_json(&witness.x, &witness.y),
            "value": witness.value,
        }),
        DiscVerdict::NotExists { method } => json!({"kind": "NotExists", "method": method.to_string()}),
        DiscVerdict::Unknown { height } => json!({"kind": "Unknown", "search_height": height}),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let fmt = cli.output;
    match &cli.command {
        Command::Genus { slope } => {
            let s = parse_slope(slope)?;
            let g = genus(&s);
            emit(
                out,
                fmt,
                g.to_string(),
                json!({"slope": slope_json(&s), "genus": json_int(&g)}),
            )
        }
        Command::Path { from, to } => {
            let (u, v) = (parse_vertex(from)?, parse_vertex(to)?);
            let path = path_between(&u, &v);
            let text = path.vertices().iter().map(format_vertex).collect::<Vec<_>>().join(" ");
            let doc = json!({
                "vertices": path.vertices().iter().map(vertex_json).collect::<Vec<_>>(),
                "length": path.length(),
            });
            emit(out, fmt, text, doc)
        }
        Command::Compress { slope } => {
            let s = compress(&parse_slope(slope)?)?;
            emit(out, fmt, format_slope(&s), json!({"slope": slope_json(&s)}))
        }
        Command::Bands { slope } => {
            let bands = band_decomposition(&parse_slope(slope)?);
            let text = bands.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
            let doc = json!({"bands": bands.iter().map(|b| pair_json(&b.a, &b.b)).collect::<Vec<_>>()});
            emit(out, fmt, text, doc)
        }
        Command::Regions { inner, outer } => {
            let r = region_decomposition(&parse_curve(inner)?, &parse_curve(outer)?)?;
            let [a, b, c, d] = r.normalizer.entries();
            let slopes = r.slopes.iter().map(format_slope).collect::<Vec<_>>().join(" ");
            let bands = r.bands.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
            let text = format!(
                "normalizer {a},{b};{c},{d}\nslopes {slopes}\nbands {bands}\ngenus {}",
                r.genus
            );
            let doc = json!({
                "normalizer": [[json_int(a), json_int(b)], [json_int(c), json_int(d)]],
                "slopes": r.slopes.iter().map(slope_json).collect::<Vec<_>>(),
                "bands": r.bands.iter().map(|b| pair_json(&b.a, &b.b)).collect::<Vec<_>>(),
                "genus": r.genus,
            });
            emit(out, fmt, text, doc)
        }
        Command::Classify { vertex } => {
            let c = classify(&parse_vertex(vertex)?);
            let text = format!("{} {}", c.label, format_vertex(&c.anchor));
            let doc = json!({"label": c.label.to_string(), "anchor": vertex_json(&c.anchor)});
            emit(out, fmt, text, doc)
        }
        Command::Neighbors { vertex, bound } => {
            let ns = neighbors(&parse_vertex(vertex)?, *bound);
            let text = ns.iter().map(format_vertex).collect::<Vec<_>>().join(" ");
            let doc = json!({"neighbors": ns.iter().map(vertex_json).collect::<Vec<_>>()});
            emit(out, fmt, text, doc)
        }
        Command::AddBand { slope, bound } => {
            let slopes = add_band(&parse_slope(slope)?, *bound);
            let text = slopes.iter().map(format_slope).collect::<Vec<_>>().join(" ");
            let doc = json!({"slopes": slopes.iter().map(slope_json).collect::<Vec<_>>()});
            emit(out, fmt, text, doc)
        }
        Command::TreeExport {
            p_bound,
            q_bound,
            depth,
            format,
        } => {
            let doc = export_tree(&RenderSpec {
                p_bound: *p_bound,
                q_bound: *q_bound,
                depth: *depth,
                format: *format,
            })?;
            out.write_all(doc.as_bytes())?;
            Ok(())
        }
        Command::BundleDecide {
            matrix,
            check_height,
            search_only,
        } => {
            let m = parse_matrix(matrix)?;
            let form = bundle::form_of(&m);
            if *search_only {
                let height = check_height.unwrap_or(DEFAULT_CHECK_HEIGHT);
                let verdict = bundle::decide_by_search(&m, height)?;
                return emit(out, fmt, verdict_text(&verdict), verdict_json(&verdict));
            }
            let verdict = bundle::decide(&m)?;
            let mut text = verdict_text(&verdict);
            let mut doc = verdict_json(&verdict);
            doc["matrix"] = json!(m.entries());
            doc["form"] = json!([json_int(&form.x2), json_int(&form.xy), json_int(&form.y2)]);
            doc["discriminant"] = json_int(&form.disc);
            doc["criterion"] = json!(bundle::no_disc_criterion(&m));
            let mut agrees = true;
            if let Some(height) = check_height {
                let found = bundle::brute_search(&m, *height)?;
                // A witness beyond the search height is not a contradiction.
                agrees = !(found.is_some() && verdict.witness().is_none());
                let check = match &found {
                    Some(w) => format!("check: brute force found ({},{}) value {}", w.x, w.y, w.value),
                    None => format!("check: brute force found nothing up to height {height}"),
                };
                text.push('\n');
                text.push_str(&check);
                doc["check"] = json!({
                    "height": height,
                    "found": found.as_ref().map(|w| pair_json(&w.x, &w.y)),
                    "agrees": agrees,
                });
            }
            emit(out, fmt, text, doc)?;
            if agrees {
                Ok(())
            } else {
                Err(Failure::Domain("brute force contradicts the exact verdict".into()))
            }
        }
        Command::BundleScan { entry_bound } => {
            let r = bundle::scan_matrices(*entry_bound)?;
            let text = format!(
                "total {}\nexists {}\nnot_exists {}\ncriterion {}\ndisagreements {}",
                r.total,
                r.exists_count,
                r.not_exists_count,
                r.criterion_count,
                r.disagreements.len()
            );
            let doc = json!({
                "entry_bound": entry_bound,
                "total": r.total,
                "exists_count": r.exists_count,
                "not_exists_count": r.not_exists_count,
                "criterion_count": r.criterion_count,
                "disagreements": r.disagreements.iter().map(Monodromy::entries).collect::<Vec<_>>(),
            });
            emit(out, fmt, text, doc)?;
            if r.disagreements.is_empty() {
                Ok(())
            } else {
                Err(Failure::Domain("criterion and verdict disagree".into()))
            }
        }
        Command::Verify { p_bound, q_bound } => {
            let tree_box = build_box_graph(*p_bound, *q_bound)?;
            let r = verify_invariants(&tree_box);
            let text = format!(
                "vertices {}\nedges {}\nconnected {}\nacyclic {}\nodd_parent_unique {}\ndescent_mismatches {}\nmonotonicity_violations {}\nclassification_mismatches {}\nedge_slope_violations {}",
                r.vertex_count,
                r.edge_count,
                r.tree.connected,
                r.tree.acyclic,
                r.tree.odd_parent_unique,
                r.descent_mismatches.len(),
                r.monotonicity_violations.len(),
                r.classification_mismatches.len(),
                r.edge_slope_violations.len()
            );
            let doc = json!({
                "vertices": r.vertex_count,
                "edges": r.edge_count,
                "connected": r.tree.connected,
                "acyclic": r.tree.acyclic,
                "odd_parent_unique": r.tree.odd_parent_unique,
                "descent_mismatches": r.descent_mismatches.iter().map(vertex_json).collect::<Vec<_>>(),
                "monotonicity_violations": r.monotonicity_violations.iter().map(vertex_json).collect::<Vec<_>>(),
                "classification_mismatches": r.classification_mismatches.iter().map(vertex_json).collect::<Vec<_>>(),
                "edge_slope_violations": r.edge_slope_violations.len(),
                "pass": r.all_pass(),
            });
            emit(out, fmt, text, doc)?;
            if r.all_pass() {
                Ok(())
            } else {
                Err(Failure::Domain("invariant check failed".into()))
            }
        }
    }
}
