//! Finite simple graphs with opaque string labels.
//!
//! Vertices are addressed by their position in the label list; every set
//! operation works on [`VertexSet`] masks over those positions.

mod generators;
mod io;
mod trees;

use std::collections::HashMap;

pub use generators::{
    caterpillar, complete, cycle, figure_one, g_graph, g_graph_with_clique, h_graph, path, star,
    CaterpillarSpec,
};
pub use io::{GraphJson, Named};
pub use trees::{canonical_tree_code, enumerate_trees, MAX_TREE_ORDER};

use crate::{Error, Labels, Result, VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Labels,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from labels and label pairs. Repeated edges collapse;
    /// loops, unknown endpoints and duplicate labels are errors.
    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownVertex(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownVertex(b.as_ref().to_string()))?;
            pairs.push((ia, ib));
        }
        Self::from_indices(labels, &pairs)
    }

    /// Builds a graph from labels and index pairs.
    pub fn from_indices(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut seen = std::collections::HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::OutOfRange(format!(
                    "edge ({a}, {b}) on a graph with {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::Loop(labels[a].clone()));
            }
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        Ok(Graph {
            labels: labels.into(),
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Resolves labels into a vertex set.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().try_fold(VertexSet::EMPTY, |acc, l| {
            self.index_of(l.as_ref())
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
        })
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges as index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.order() {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// `G[s]`, keeping the relative order of the surviving labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&i| i < self.order()).collect();
        let mut pos = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&old| {
                self.adj[old]
                    .intersection(s)
                    .iter()
                    .map(|j| pos[j])
                    .collect()
            })
            .collect();
        Graph {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            adj,
        }
    }

    /// `G[s]` for a subset given by labels.
    pub fn induced_subgraph_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        Ok(self.induced_subgraph(self.subset(labels)?))
    }

    /// `G - s`.
    pub fn remove_vertices(&self, s: VertexSet) -> Graph {
        self.induced_subgraph(self.vertex_set().difference(s))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertex_set())
    }

    /// Every component of `G[s]` has at most `r` vertices.
    pub fn is_r_independent(&self, s: VertexSet, r: usize) -> bool {
        let mut rest = s;
        while let Some(v) = rest.first() {
            let c = self.component_of(v, s);
            if c.len() > r {
                return false;
            }
            rest = rest.difference(c);
        }
        true
    }

    /// Perfect-elimination test by repeatedly removing simplicial vertices.
    pub fn is_chordal(&self) -> bool {
        let mut alive = self.vertex_set();
        'outer: while !alive.is_empty() {
            for v in alive.iter() {
                let nb = self.adj[v].intersection(alive);
                if nb.iter().all(|u| nb.without(u).is_subset(self.adj[u])) {
                    alive = alive.without(v);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// A tree whose non-leaf vertices induce a path (possibly empty).
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let spine: VertexSet = (0..self.order()).filter(|&v| self.degree(v) >= 2).collect();
        // The spine of a tree is connected; it is a path iff no spine vertex
        // has three spine neighbours.
        spine
            .iter()
            .all(|v| self.adj[v].intersection(spine).len() <= 2)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}
