//! The Moebius band tree: parent descent, genus, geodesics, neighbours and
//! branch classification.
//!
//! Every vertex `p/q` other than the root `0/1` lies in a unique largest ideal
//! triangle of the Farey tessellation; of its two far corners exactly one has
//! odd denominator, and that corner is its parent. Iterating the parent map
//! strictly decreases `|p|` and ends at the root, so the root path of a vertex
//! is its geodesic to `0/1` and its length is the nonorientable genus of the
//! corresponding one-sided surface.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::slope::{det, farey_parents, vertex_of_slope, BoundarySlope, FareyVertex, TreeVertex};

/// A simple path in the tree. Simple paths in a tree are its geodesics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicPath {
    vertices: Vec<TreeVertex>,
}

impl GeodesicPath {
    /// Validates adjacency of consecutive vertices and absence of repeats.
    pub fn new(vertices: Vec<TreeVertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotAPath("empty vertex list".into()));
        }
        for pair in vertices.windows(2) {
            if !det(&pair[0], &pair[1]).abs().is_one() {
                return Err(Error::NotAPath(format!("{} and {} are not adjacent", pair[0], pair[1])));
            }
        }
        let mut seen: Vec<&TreeVertex> = vertices.iter().collect();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAPath("vertex repeats".into()));
        }
        Ok(GeodesicPath { vertices })
    }

    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<TreeVertex> {
        self.vertices
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn start(&self) -> &TreeVertex {
        &self.vertices[0]
    }

    pub fn end(&self) -> &TreeVertex {
        self.vertices.last().expect("paths are nonempty")
    }

    pub fn reversed(&self) -> GeodesicPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        GeodesicPath { vertices }
    }

    pub fn contains(&self, v: &TreeVertex) -> bool {
        self.vertices.contains(v)
    }
}

impl fmt::Display for GeodesicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchLabel {
    Meridional,
    Central,
    Longitudinal,
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BranchLabel::Meridional => "Meridional",
            BranchLabel::Central => "Central",
            BranchLabel::Longitudinal => "Longitudinal",
        };
        f.write_str(s)
    }
}

/// Which of `0/1`, `±1/1`, `±2/1` a vertex is nearest to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchClass {
    pub anchor: TreeVertex,
    pub label: BranchLabel,
}

/// The odd-denominator Farey parent of `v`.
pub fn parent(v: &TreeVertex) -> Result<TreeVertex> {
    if v.is_root() {
        return Err(Error::RootHasNoParent);
    }
    let (left, right) = farey_parents(&v.farey())?;
    let odd = if left.q().is_odd() { left } else { right };
    odd.to_tree_vertex()
}

/// `[v, parent(v), ..., 0/1]`, one step at a time.
pub fn path_to_root(v: &TreeVertex) -> GeodesicPath {
    let mut vertices = vec![v.clone()];
    let mut current = v.clone();
    while !current.is_root() {
        current = parent(&current).expect("non-root vertices have parents");
        vertices.push(current.clone());
    }
    GeodesicPath { vertices }
}

/// A maximal stretch of the root path along which the even-denominator
/// Farey parent stays fixed: the vertices `start - k*step` for
/// `k = 0..len`, after which the descent continues at `start - len*step`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentRun {
    pub start: TreeVertex,
    pub step: FareyVertex,
    pub len: BigInt,
}

/// The root path compressed into runs; `O(log q)` runs in total.
///
/// If `E` is the even parent of `v` and `P = v - E` its odd parent, then `E`
/// remains the even parent of `P` as long as the denominator of `P` exceeds
/// that of `E`. A run therefore has `floor(q / e)` steps (or `|p|` steps when
/// `E = 1/0`), and the denominator at least halves from one run to the next.
pub fn descent_runs(v: &TreeVertex) -> Vec<DescentRun> {
    let mut runs = Vec::new();
    let mut current = v.clone();
    while !current.is_root() {
        let (left, right) = farey_parents(&current.farey()).expect("non-root vertex");
        let even = if left.q().is_even() { left } else { right };
        let len = if even.q().is_zero() {
            current.p().abs()
        } else {
            current.q() / even.q()
        };
        // Step vector points the same way as `current`; for 1/0 take the sign of p.
        let (sx, sy) = if even.q().is_zero() && current.p().is_negative() {
            (-even.p(), -even.q())
        } else {
            (even.p().clone(), even.q().clone())
        };
        let next = TreeVertex::new(current.p() - &len * &sx, current.q() - &len * &sy)
            .expect("run ends at a tree vertex");
        runs.push(DescentRun {
            start: current,
            step: even,
            len,
        });
        current = next;
    }
    runs
}

/// Distance from `v` to the root, via [`descent_runs`].
pub fn depth(v: &TreeVertex) -> BigInt {
    descent_runs(v).into_iter().map(|r| r.len).sum()
}

/// Nonorientable genus of the one-sided surface in the solid torus with
/// boundary slope `s`.
pub fn genus(s: &BoundarySlope) -> BigInt {
    depth(&vertex_of_slope(s))
}

/// The unique minimal path from `u` to `v`, spliced from the two root paths
/// at their deepest common vertex.
pub fn path_between(u: &TreeVertex, v: &TreeVertex) -> GeodesicPath {
    let pu = path_to_root(u).vertices;
    let pv = path_to_root(v).vertices;
    let mut common = 0;
    while common < pu.len().min(pv.len())
        && pu[pu.len() - 1 - common] == pv[pv.len() - 1 - common]
    {
        common += 1;
    }
    // Root is always shared, so common >= 1.
    let iu = pu.len() - common;
    let iv = pv.len() - common;
    let mut vertices: Vec<TreeVertex> = pu[..=iu].to_vec();
    vertices.extend(pv[..iv].iter().rev().cloned());
    GeodesicPath { vertices }
}

pub fn distance(u: &TreeVertex, v: &TreeVertex) -> usize {
    path_between(u, v).length()
}

/// All tree vertices adjacent to `v` with `max(|p|, q) <= bound`, in
/// canonical `(q, p)` order.
///
/// Solutions of `det(v, w) = 1` form the family `w0 + t*v`; the negated
/// family covers `det = -1` and names the same vertices after sign
/// normalization, so one family suffices.
pub fn neighbors(v: &TreeVertex, bound: u64) -> Vec<TreeVertex> {
    let bound = BigInt::from(bound);
    let (p, q) = (v.p(), v.q());
    // p*w2 - w1*q = 1
    let e = p.extended_gcd(q);
    let (w1_0, w2_0) = if e.gcd.is_negative() {
        (e.y, -e.x)
    } else {
        (-e.y, e.x)
    };
    // |w2_0 + t*q| <= bound with q >= 1.
    let t_lo = (-&bound - &w2_0).div_ceil(q);
    let t_hi = (&bound - &w2_0).div_floor(q);
    let mut out = Vec::new();
    let mut t = t_lo;
    while t <= t_hi {
        let w1 = &w1_0 + &t * p;
        let w2 = &w2_0 + &t * q;
        t += 1;
        if w2.is_even() || w1.abs() > bound {
            continue;
        }
        out.push(TreeVertex::new(w1, w2).expect("solutions of det = 1 are primitive"));
    }
    out.sort();
    out.dedup();
    out
}

/// Branch of the tree by the size of `|p/q|` against the cut points 1/2 and 3/2.
pub fn classify(v: &TreeVertex) -> BranchClass {
    let p = v.p().abs();
    let q = v.q();
    // Exact comparisons: |p|/q < 1/2 <=> 2|p| < q; |p|/q > 3/2 <=> 2|p| > 3q.
    let two_p = &p * 2;
    let (label, anchor_p) = if two_p < *q {
        (BranchLabel::Meridional, 0)
    } else if two_p > q * 3 {
        (BranchLabel::Longitudinal, 2)
    } else {
        (BranchLabel::Central, 1)
    };
    let anchor_p = if v.p().is_negative() { -anchor_p } else { anchor_p };
    BranchClass {
        anchor: TreeVertex::new(anchor_p, 1).expect("anchors are tree vertices"),
        label,
    }
}

/// The anchor vertices on the side of `v`: `0/1`, `±1/1`, `±2/1`.
pub fn anchors_for(v: &TreeVertex) -> [TreeVertex; 3] {
    let s: i64 = if v.p().is_negative() { -1 } else { 1 };
    [
        TreeVertex::root(),
        TreeVertex::new(s, 1).expect("anchor"),
        TreeVertex::new(2 * s, 1).expect("anchor"),
    ]
}

impl DescentRun {
    /// Last vertex of the run before it hands over to the next one.
    pub fn end(&self) -> TreeVertex {
        let k = &self.len - 1;
        let sign = if self.step.q().is_zero() && self.start.p().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let sx = self.step.p() * &sign;
        let sy = self.step.q() * &sign;
        TreeVertex::new(self.start.p() - &k * sx, self.start.q() - &k * sy)
            .expect("run vertices are tree vertices")
    }
}
