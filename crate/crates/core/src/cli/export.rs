//! DOT, JSON and SVG renderings of a finite part of the tree.
//!
//! The SVG uses the disc model of the Farey tessellation: the vertex `p/q`
//! sits on the unit circle at angle `2 atan(p/q)` and each edge is drawn as
//! the hyperbolic geodesic joining its ends. Floating point is used for the
//! layout only.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Number, Value};

use crate::error::Result;
use crate::oracle::build_box_graph;
use crate::slope::TreeVertex;
use crate::tree::depth;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub p_bound: u32,
    pub q_bound: u32,
    /// Keep only vertices within this distance of the root.
    pub depth: Option<u64>,
    pub format: ExportFormat,
}

/// A parent-closed piece of the tree with edges by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWindow {
    pub vertices: Vec<TreeVertex>,
    pub genus: Vec<BigInt>,
    pub edges: Vec<(usize, usize)>,
}

pub fn tree_window(spec: &RenderSpec) -> Result<TreeWindow> {
    let tree_box = build_box_graph(spec.p_bound, spec.q_bound)?;
    let depths: Vec<BigInt> = tree_box.vertices().iter().map(depth).collect();
    let keep: Vec<bool> = depths
        .iter()
        .map(|d| spec.depth.is_none_or(|limit| *d <= BigInt::from(limit)))
        .collect();
    let mut new_index = vec![usize::MAX; keep.len()];
    let mut vertices = Vec::new();
    let mut genus = Vec::new();
    for (i, v) in tree_box.vertices().iter().enumerate() {
        if keep[i] {
            new_index[i] = vertices.len();
            vertices.push(v.clone());
            genus.push(depths[i].clone());
        }
    }
    let edges = tree_box
        .edges()
        .iter()
        .filter(|&&(i, j)| keep[i] && keep[j])
        .map(|&(i, j)| (new_index[i], new_index[j]))
        .collect();
    Ok(TreeWindow {
        vertices,
        genus,
        edges,
    })
}

pub fn export_tree(spec: &RenderSpec) -> Result<String> {
    let window = tree_window(spec)?;
    Ok(match spec.format {
        ExportFormat::Dot => to_dot(&window),
        ExportFormat::Json => to_json(&window),
        ExportFormat::Svg => to_svg(&window),
    })
}

/// An exact JSON integer.
pub fn json_int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn to_dot(window: &TreeWindow) -> String {
    let mut out = String::from("graph moebius_tree {\n");
    for (i, v) in window.vertices.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}/{}\"];", v.p(), v.q());
    }
    for (i, j) in &window.edges {
        let _ = writeln!(out, "  n{i} -- n{j};");
    }
    out.push_str("}\n");
    out
}

pub fn to_json(window: &TreeWindow) -> String {
    let vertices: Vec<Value> = window
        .vertices
        .iter()
        .zip(&window.genus)
        .map(|(v, g)| json!({"p": json_int(v.p()), "q": json_int(v.q()), "genus": json_int(g)}))
        .collect();
    let edges: Vec<Value> = window.edges.iter().map(|&(i, j)| json!([i, j])).collect();
    let doc = json!({"vertices": vertices, "edges": edges});
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

const SIZE: f64 = 640.0;
const RADIUS: f64 = 300.0;

fn angle(v: &TreeVertex) -> f64 {
    if v.q().is_zero() {
        return PI;
    }
    let x = v.p().to_f64().unwrap_or(0.0) / v.q().to_f64().unwrap_or(1.0);
    2.0 * x.atan()
}

fn point(theta: f64) -> (f64, f64) {
    let c = SIZE / 2.0;
    (c + RADIUS * theta.cos(), c - RADIUS * theta.sin())
}

/// Rounds to three decimals and clears negative zero, for stable output.
fn fmt3(x: f64) -> String {
    let r = (x * 1000.0).round() / 1000.0;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.3}")
}

fn geodesic(theta1: f64, theta2: f64) -> String {
    let (x1, y1) = point(theta1);
    let (x2, y2) = point(theta2);
    let mut delta = (theta2 - theta1).rem_euclid(2.0 * PI);
    if delta > PI {
        delta = 2.0 * PI - delta;
    }
    if (PI - delta).abs() < 1e-9 {
        return format!("M {} {} L {} {}", fmt3(x1), fmt3(y1), fmt3(x2), fmt3(y2));
    }
    let r = RADIUS * (delta / 2.0).tan();
    // Bend toward the centre: sweep when the centre lies left of the chord.
    let c = SIZE / 2.0;
    let cross = (x2 - x1) * (c - y1) - (y2 - y1) * (c - x1);
    let sweep = u8::from(cross < 0.0);
    format!(
        "M {} {} A {} {} 0 0 {} {} {}",
        fmt3(x1),
        fmt3(y1),
        fmt3(r),
        fmt3(r),
        sweep,
        fmt3(x2),
        fmt3(y2)
    )
}

pub fn to_svg(window: &TreeWindow) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let c = SIZE / 2.0;
    let _ = writeln!(
        out,
        "  <circle cx=\"{c}\" cy=\"{c}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>"
    );
    let angles: Vec<f64> = window.vertices.iter().map(angle).collect();
    out.push_str("  <g fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.2\">\n");
    for &(i, j) in &window.edges {
        let _ = writeln!(out, "    <path d=\"{}\"/>", geodesic(angles[i], angles[j]));
    }
    out.push_str("  </g>\n");
    out.push_str("  <g font-family=\"sans-serif\" font-size=\"10\">\n");
    for (v, &theta) in window.vertices.iter().zip(&angles) {
        let (x, y) = point(theta);
        let (lx, ly) = (c + (RADIUS + 14.0) * theta.cos(), c - (RADIUS + 14.0) * theta.sin());
        let _ = writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#c0392b\"/><text x=\"{}\" y=\"{}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}/{}</text>",
            fmt3(x),
            fmt3(y),
            fmt3(lx),
            fmt3(ly),
            v.p(),
            v.q()
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
