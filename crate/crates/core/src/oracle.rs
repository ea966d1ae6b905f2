//! Finite windows of the tree built by brute force, used to check the descent
//! algorithms against an independent graph search.
//!
//! A box holds every tree vertex with `|p| <= p_bound` and `q <= q_bound`. It
//! is closed under the parent map (parents have smaller `|p|` and smaller
//! `q`), so its induced subgraph is a subtree containing the root.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::slope::{intersection_number, slope_of_vertex, TreeVertex};
use crate::tree::{anchors_for, classify, depth, distance, path_to_root, BranchLabel};

/// Default ceiling on the number of vertices in a box; edges are found by
/// checking all pairs.
pub const DEFAULT_VERTEX_CAP: u64 = 20_000;

#[derive(Clone, Debug)]
pub struct TreeBox {
    p_bound: u32,
    q_bound: u32,
    vertices: Vec<TreeVertex>,
    index: HashMap<TreeVertex, usize>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    root_distance: Vec<Option<u64>>,
}

impl TreeBox {
    pub fn p_bound(&self) -> u32 {
        self.p_bound
    }

    pub fn q_bound(&self) -> u32 {
        self.q_bound
    }

    /// Vertices in canonical `(q, p)` order.
    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, v: &TreeVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neighbors_of(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// BFS distance from the root inside the box; `None` if unreachable.
    pub fn root_distance(&self, v: &TreeVertex) -> Option<u64> {
        self.index_of(v).and_then(|i| self.root_distance[i])
    }

    /// BFS distances from an arbitrary vertex of the box.
    pub fn bfs_from(&self, start: usize) -> Vec<Option<u64>> {
        bfs(&self.adjacency, start)
    }
}

fn bfs(adjacency: &[Vec<usize>], start: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; adjacency.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        let d = dist[i].expect("queued vertices are labelled");
        for &j in &adjacency[i] {
            if dist[j].is_none() {
                dist[j] = Some(d + 1);
                queue.push_back(j);
            }
        }
    }
    dist
}

pub fn build_box_graph(p_bound: u32, q_bound: u32) -> Result<TreeBox> {
    build_box_graph_capped(p_bound, q_bound, DEFAULT_VERTEX_CAP)
}

/// Enumerates the box, joins every pair with `|det| = 1` and labels root
/// distances by breadth-first search.
pub fn build_box_graph_capped(p_bound: u32, q_bound: u32, cap: u64) -> Result<TreeBox> {
    if p_bound == 0 {
        return Err(Error::InvalidBounds("p bound must be at least 1".into()));
    }
    if q_bound == 0 || q_bound.is_multiple_of(2) {
        return Err(Error::InvalidBounds("q bound must be a positive odd integer".into()));
    }
    let mut coords: Vec<(i64, i64)> = Vec::new();
    for q in (1..=q_bound as i64).step_by(2) {
        for p in -(p_bound as i64)..=p_bound as i64 {
            if p.gcd(&q) == 1 {
                coords.push((p, q));
            }
        }
    }
    if coords.len() as u64 > cap {
        return Err(Error::BoundsTooLarge {
            requested: coords.len() as u64,
            cap,
        });
    }
    // Already in (q, p) order.
    let vertices: Vec<TreeVertex> = coords
        .iter()
        .map(|&(p, q)| TreeVertex::new(p, q).expect("coprime with odd q"))
        .collect();
    let index: HashMap<TreeVertex, usize> =
        vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();

    let n = coords.len();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        let (pi, qi) = coords[i];
        for j in (i + 1)..n {
            let (pj, qj) = coords[j];
            let d = pi * qj - pj * qi;
            if d == 1 || d == -1 {
                edges.push((i, j));
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    let root = index[&TreeVertex::root()];
    let root_distance = bfs(&adjacency, root);
    Ok(TreeBox {
        p_bound,
        q_bound,
        vertices,
        index,
        edges,
        adjacency,
        root_distance,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeReport {
    pub connected: bool,
    pub acyclic: bool,
    pub odd_parent_unique: bool,
}

impl TreeReport {
    pub fn all(&self) -> bool {
        self.connected && self.acyclic && self.odd_parent_unique
    }
}

/// Checks the box is a tree and that every non-root vertex has exactly one
/// neighbour with smaller `|p|`.
pub fn verify_tree(tree_box: &TreeBox) -> TreeReport {
    let connected = tree_box.root_distance.iter().all(Option::is_some);
    let acyclic = connected && tree_box.edges.len() + 1 == tree_box.vertices.len();
    let odd_parent_unique = tree_box.vertices.iter().enumerate().all(|(i, v)| {
        if v.is_root() {
            return true;
        }
        let smaller = tree_box.adjacency[i]
            .iter()
            .filter(|&&j| {
                let w = &tree_box.vertices[j];
                w.p().magnitude() < v.p().magnitude() && w.q().is_odd()
            })
            .count();
        smaller == 1
    });
    TreeReport {
        connected,
        acyclic,
        odd_parent_unique,
    }
}

/// Outcome of the full invariant suite over one box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub tree: TreeReport,
    /// Vertices whose descent depth or stepwise root path disagrees with BFS.
    pub descent_mismatches: Vec<TreeVertex>,
    /// Vertices whose root path does not strictly decrease `|p|`.
    pub monotonicity_violations: Vec<TreeVertex>,
    /// Vertices where the threshold class is not the unique nearest anchor.
    pub classification_mismatches: Vec<TreeVertex>,
    /// Edges whose boundary slopes do not meet exactly twice.
    pub edge_slope_violations: Vec<(TreeVertex, TreeVertex)>,
}

impl InvariantReport {
    pub fn all_pass(&self) -> bool {
        self.tree.all()
            && self.descent_mismatches.is_empty()
            && self.monotonicity_violations.is_empty()
            && self.classification_mismatches.is_empty()
            && self.edge_slope_violations.is_empty()
    }
}

/// Nearest anchor among `0/1`, `±1/1`, `±2/1` (sign of `p`) by tree
/// distance; `None` on a tie.
pub fn nearest_anchor_by_distance(v: &TreeVertex) -> Option<(TreeVertex, BranchLabel)> {
    let labels = [BranchLabel::Meridional, BranchLabel::Central, BranchLabel::Longitudinal];
    let ds: Vec<usize> = anchors_for(v).iter().map(|a| distance(v, a)).collect();
    let best = *ds.iter().min().expect("three anchors");
    let winners: Vec<usize> = (0..3).filter(|&i| ds[i] == best).collect();
    match winners.as_slice() {
        [i] => Some((anchors_for(v)[*i].clone(), labels[*i])),
        _ => None,
    }
}

pub fn verify_invariants(tree_box: &TreeBox) -> InvariantReport {
    let mut descent_mismatches = Vec::new();
    let mut monotonicity_violations = Vec::new();
    let mut classification_mismatches = Vec::new();
    for v in &tree_box.vertices {
        let bfs = tree_box.root_distance(v).map(BigInt::from);
        let path = path_to_root(v);
        let stepwise = BigInt::from(path.length());
        if bfs.as_ref() != Some(&depth(v)) || bfs.as_ref() != Some(&stepwise) {
            descent_mismatches.push(v.clone());
        }
        let increasing = path
            .vertices()
            .windows(2)
            .all(|w| w[0].p().magnitude() > w[1].p().magnitude());
        if !increasing {
            monotonicity_violations.push(v.clone());
        }
        let class = classify(v);
        match nearest_anchor_by_distance(v) {
            Some((anchor, label)) if anchor == class.anchor && label == class.label => {}
            _ => classification_mismatches.push(v.clone()),
        }
    }
    let edge_slope_violations = tree_box
        .edges
        .iter()
        .filter_map(|&(i, j)| {
            let (u, w) = (&tree_box.vertices[i], &tree_box.vertices[j]);
            let n = intersection_number(&slope_of_vertex(u), &slope_of_vertex(w));
            (n.to_u8() != Some(2)).then(|| (u.clone(), w.clone()))
        })
        .collect();
    InvariantReport {
        vertex_count: tree_box.vertices.len(),
        edge_count: tree_box.edges.len(),
        tree: verify_tree(tree_box),
        descent_mismatches,
        monotonicity_violations,
        classification_mismatches,
        edge_slope_violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(p: i64, q: i64) -> TreeVertex {
        TreeVertex::new(p, q).unwrap()
    }

    #[test]
    fn smallest_box_is_a_star() {
        let b = build_box_graph(1, 1).unwrap();
        assert_eq!(b.vertices(), &[tv(-1, 1), tv(0, 1), tv(1, 1)]);
        let named: Vec<_> = b
            .edges()
            .iter()
            .map(|&(i, j)| (b.vertices()[i].clone(), b.vertices()[j].clone()))
            .collect();
        assert_eq!(named, vec![(tv(-1, 1), tv(0, 1)), (tv(0, 1), tv(1, 1))]);
        assert!(verify_tree(&b).all());
    }

    #[test]
    fn box_root_distances() {
        let b = build_box_graph(2, 3).unwrap();
        assert_eq!(b.root_distance(&tv(1, 3)), Some(1));
        assert_eq!(b.root_distance(&tv(2, 3)), Some(2));
        assert_eq!(b.root_distance(&tv(-2, 1)), Some(2));
    }

    #[test]
    fn invalid_boxes() {
        assert!(matches!(build_box_graph(0, 1), Err(Error::InvalidBounds(_))));
        assert!(matches!(build_box_graph(3, 4), Err(Error::InvalidBounds(_))));
        assert!(matches!(
            build_box_graph_capped(10, 9, 5),
            Err(Error::BoundsTooLarge { cap: 5, .. })
        ));
    }

    #[test]
    fn medium_box_is_a_tree() {
        let b = build_box_graph(10, 9).unwrap();
        assert!(verify_tree(&b).all());
        assert!(verify_invariants(&b).all_pass());
    }

    #[test]
    fn nearest_anchor_examples() {
        assert_eq!(
            nearest_anchor_by_distance(&tv(4, 5)),
            Some((tv(1, 1), BranchLabel::Central))
        );
        assert_eq!(
            nearest_anchor_by_distance(&tv(-7, 3)),
            Some((tv(-2, 1), BranchLabel::Longitudinal))
        );
    }
}
