//! Named graph families.

use super::Graph;
use crate::{Error, Result};

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn build(labels: Vec<String>, edges: &[(usize, usize)]) -> Graph {
    Graph::from_indices(labels, edges).expect("generator produces a valid graph")
}

/// The five-vertex example graph with edges v1v2, v1v3, v1v4, v2v5.
pub fn figure_one() -> Graph {
    let labels = (1..=5).map(|i| format!("v{i}")).collect();
    build(labels, &[(0, 1), (0, 2), (0, 3), (1, 4)])
}

/// Path `1 - 2 - .. - n`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(numbered(n), &edges)
}

/// Cycle on `1..n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "cycle length",
            min: 3,
            got: n,
        });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(numbered(n), &edges))
}

/// Complete graph on `1..n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    build(numbered(n), &edges)
}

/// Star with centre `0` and leaves `1..k`.
pub fn star(k: usize) -> Graph {
    let labels = (0..=k).map(|i| i.to_string()).collect();
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(labels, &edges)
}

/// Spine length and per-spine-vertex leaf counts of a caterpillar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarSpec {
    leaf_counts: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(leaf_counts: Vec<usize>) -> Result<Self> {
        if leaf_counts.is_empty() {
            return Err(Error::TooSmall {
                what: "spine length",
                min: 1,
                got: 0,
            });
        }
        Ok(CaterpillarSpec { leaf_counts })
    }

    pub fn spine_length(&self) -> usize {
        self.leaf_counts.len()
    }

    pub fn leaf_counts(&self) -> &[usize] {
        &self.leaf_counts
    }

    pub fn order(&self) -> usize {
        self.spine_length() + self.leaf_counts.iter().sum::<usize>()
    }
}

/// Caterpillar with spine `a1 - .. - al` and leaves `bi_j` hanging off `ai`.
/// Labels are listed spine vertex first, followed by its leaves.
pub fn caterpillar(spec: &CaterpillarSpec) -> Graph {
    let mut labels = Vec::with_capacity(spec.order());
    let mut edges = Vec::new();
    let mut prev_spine = None;
    for (i, &m) in spec.leaf_counts.iter().enumerate() {
        let spine = labels.len();
        labels.push(format!("a{}", i + 1));
        if let Some(p) = prev_spine {
            edges.push((p, spine));
        }
        for j in 1..=m {
            edges.push((spine, labels.len()));
            labels.push(format!("b{}_{}", i + 1, j));
        }
        prev_spine = Some(spine);
    }
    build(labels, &edges)
}

/// `H_r`: a clique on `v1..v2r`, with `x1` joined to `v1..vr` and `x2`
/// joined to `v(r+1)..v2r`.
pub fn h_graph(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::TooSmall {
            what: "r",
            min: 2,
            got: r,
        });
    }
    let mut labels: Vec<String> = (1..=2 * r).map(|i| format!("v{i}")).collect();
    labels.push("x1".into());
    labels.push("x2".into());
    let (x1, x2) = (2 * r, 2 * r + 1);
    let mut edges = Vec::new();
    for a in 0..2 * r {
        for b in a + 1..2 * r {
            edges.push((a, b));
        }
    }
    edges.extend((0..r).map(|v| (x1, v)));
    edges.extend((r..2 * r).map(|v| (x2, v)));
    Graph::from_indices(labels, &edges)
}

/// `G_r`: paths `1 - .. - r` and `r+1 - .. - 2r` bridged by the clique
/// `{a, b}`, where both `r` and `r+1` are adjacent to `a` and `b`.
pub fn g_graph(r: usize) -> Result<Graph> {
    g_graph_with_clique(r, 2)
}

/// Variant of [`g_graph`] whose bridge is a clique on `clique` vertices
/// labelled `a`, `b`, `c`, ... (at most 26).
pub fn g_graph_with_clique(r: usize, clique: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::TooSmall {
            what: "r",
            min: 2,
            got: r,
        });
    }
    if clique < 2 {
        return Err(Error::TooSmall {
            what: "bridge clique size",
            min: 2,
            got: clique,
        });
    }
    if clique > 26 {
        return Err(Error::OutOfRange(format!(
            "bridge clique size {clique} exceeds 26"
        )));
    }
    // layout: 1..r, clique letters, r+1..2r
    let mut labels: Vec<String> = (1..=r).map(|i| i.to_string()).collect();
    labels.extend((0..clique).map(|k| char::from(b'a' + k as u8).to_string()));
    labels.extend((r + 1..=2 * r).map(|i| i.to_string()));
    let left_end = r - 1;
    let bridge: Vec<usize> = (r..r + clique).collect();
    let right_start = r + clique;
    let mut edges: Vec<(usize, usize)> = (1..r).map(|i| (i - 1, i)).collect();
    for (k, &u) in bridge.iter().enumerate() {
        edges.push((left_end, u));
        edges.push((u, right_start));
        for &w in &bridge[k + 1..] {
            edges.push((u, w));
        }
    }
    edges.extend((right_start + 1..right_start + r).map(|i| (i - 1, i)));
    Graph::from_indices(labels, &edges)
}
