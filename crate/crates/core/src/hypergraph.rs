//! Simple hypergraphs, `Con_r(G)`, minors, simplicial vertices, chordality
//! and minimal vertex covers.
//!
//! A hypergraph keeps the label table of the graph it came from; minors only
//! shrink the vertex mask, so labels stay stable across the minor search.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::vset::minimal_sets;
use crate::{Error, Graph, Labels, Outcome, Result, VertexSet, MAX_VERTICES};

/// Default number of distinct minors the chordality search may visit.
pub const DEFAULT_MINOR_BUDGET: usize = 2_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Labels,
    vertices: VertexSet,
    edges: Vec<VertexSet>,
}

/// Which edge pairs the simplicial-vertex condition ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairRule {
    /// Pairs of distinct edges; on graphs this is ordinary simpliciality.
    #[default]
    Distinct,
    /// All pairs including `e1 = e2`.
    Inclusive,
}

impl Hypergraph {
    /// Builds the simple hypergraph underlying `edges`.
    pub fn new(labels: Labels, vertices: VertexSet, edges: Vec<VertexSet>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        if !vertices.is_subset(VertexSet::full(labels.len())) {
            return Err(Error::OutOfRange("vertex mask exceeds label table".into()));
        }
        if let Some(e) = edges.iter().find(|e| !e.is_subset(vertices)) {
            return Err(Error::UnknownVertex(format!(
                "{:?}",
                e.difference(vertices).labels(&labels)
            )));
        }
        Ok(Hypergraph {
            labels,
            vertices,
            edges: minimal_sets(edges),
        })
    }

    /// Builds a hypergraph from label lists.
    pub fn from_labels<V, S>(vertices: V, edges: &[Vec<S>]) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownVertex(l.to_string()))
        };
        let masks = edges
            .iter()
            .map(|e| e.iter().map(|l| find(l.as_ref())).collect::<Result<VertexSet>>())
            .collect::<Result<Vec<_>>>()?;
        let n = labels.len();
        Hypergraph::new(labels.into(), VertexSet::full(n), masks)
    }

    /// The graph itself viewed as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .map(|(a, b)| VertexSet::from_indices([a, b]))
            .collect();
        Hypergraph::new(g.labels().clone(), g.vertex_set(), edges).expect("graph edges are valid")
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .filter(|&i| self.vertices.contains(i))
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.labels.len() && self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(
                self.labels.get(v).cloned().unwrap_or_else(|| format!("#{v}")),
            ))
        }
    }

    /// `H \ v`: drops `v` and every edge through it.
    pub fn delete(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        Ok(self.deleted(v))
    }

    fn deleted(&self, v: usize) -> Hypergraph {
        Hypergraph {
            labels: self.labels.clone(),
            vertices: self.vertices.without(v),
            edges: self.edges.iter().copied().filter(|e| !e.contains(v)).collect(),
        }
    }

    /// `H / v`: removes `v` from every edge, then keeps the minimal edges.
    /// An emptied edge survives as the unique edge `∅`.
    pub fn contract(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        Ok(self.contracted(v))
    }

    fn contracted(&self, v: usize) -> Hypergraph {
        Hypergraph {
            labels: self.labels.clone(),
            vertices: self.vertices.without(v),
            edges: minimal_sets(self.edges.iter().map(|e| e.without(v)).collect()),
        }
    }

    pub fn delete_vertex(&self, label: &str) -> Result<Hypergraph> {
        self.delete(self.index_of(label)?)
    }

    pub fn contract_vertex(&self, label: &str) -> Result<Hypergraph> {
        self.contract(self.index_of(label)?)
    }

    /// Every two edges through `v` contain a third edge inside their union
    /// minus `v`.
    pub fn is_simplicial(&self, v: usize, rule: PairRule) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.simplicial(v, rule))
    }

    pub fn is_simplicial_vertex(&self, label: &str, rule: PairRule) -> Result<bool> {
        self.is_simplicial(self.index_of(label)?, rule)
    }

    fn simplicial(&self, v: usize, rule: PairRule) -> bool {
        let through: Vec<VertexSet> = self.edges.iter().copied().filter(|e| e.contains(v)).collect();
        for (i, &e1) in through.iter().enumerate() {
            let start = match rule {
                PairRule::Distinct => i + 1,
                PairRule::Inclusive => i,
            };
            for &e2 in &through[start..] {
                let room = e1.union(e2).without(v);
                if !self.edges.iter().any(|e3| e3.is_subset(room)) {
                    return false;
                }
            }
        }
        true
    }

    /// Some vertex of the hypergraph is simplicial.
    pub fn has_simplicial_vertex(&self, rule: PairRule) -> bool {
        self.vertices.iter().any(|v| self.simplicial(v, rule))
    }

    /// Breadth-first search over all minors, deduplicated by (vertex set,
    /// edge set). Fails with the first minor found that has vertices but no
    /// simplicial vertex. `budget` bounds the number of distinct minors.
    pub fn is_chordal(&self, budget: usize, rule: PairRule) -> Outcome<(), Hypergraph> {
        let mut seen: HashSet<(VertexSet, Vec<VertexSet>)> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert((self.vertices, self.edges.clone()));
        queue.push_back(self.clone());
        while let Some(m) = queue.pop_front() {
            if !m.vertices.is_empty() && !m.has_simplicial_vertex(rule) {
                return Outcome::Fails(m);
            }
            for v in m.vertices.iter() {
                for child in [m.deleted(v), m.contracted(v)] {
                    if seen.insert((child.vertices, child.edges.clone())) {
                        if seen.len() > budget {
                            return Outcome::BudgetExceeded {
                                explored: seen.len() - 1,
                            };
                        }
                        queue.push_back(child);
                    }
                }
            }
        }
        Outcome::Holds(())
    }

    /// Inclusion-minimal vertex covers. No edges gives `{∅}`; an empty edge
    /// gives no covers at all.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        minimal_transversals(&self.edges)
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson {
            vertices: self.vertices.labels(&self.labels),
            edges: self.edges.iter().map(|e| e.labels(&self.labels)).collect(),
        }
    }

    pub fn from_json(j: &HypergraphJson) -> Result<Hypergraph> {
        Hypergraph::from_labels(j.vertices.iter().cloned(), &j.edges)
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let j = self.to_json();
        f.debug_struct("Hypergraph")
            .field("vertices", &j.vertices)
            .field("edges", &j.edges)
            .finish()
    }
}

/// `{"vertices": [...], "edges": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

/// `Con_r(G)`: edges are the `(r+1)`-subsets inducing connected subgraphs.
pub fn con_r(g: &Graph, r: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(Error::TooSmall {
            what: "r",
            min: 1,
            got: 0,
        });
    }
    let mut edges = Vec::new();
    let n = g.order();
    let k = r + 1;
    if k <= n {
        // grow connected sets from their smallest vertex
        for root in 0..n {
            let allowed = VertexSet::full(n).difference(VertexSet::full(root + 1));
            grow_connected(g, VertexSet::singleton(root), VertexSet::EMPTY, allowed, k, &mut edges);
        }
    }
    Ok(Hypergraph {
        labels: g.labels().clone(),
        vertices: g.vertex_set(),
        edges: {
            edges.sort_unstable();
            edges
        },
    })
}

/// Enumerates connected supersets of `set` of size `k`, each exactly once,
/// by the standard extension-set recursion.
fn grow_connected(
    g: &Graph,
    set: VertexSet,
    excluded: VertexSet,
    allowed: VertexSet,
    k: usize,
    out: &mut Vec<VertexSet>,
) {
    if set.len() == k {
        out.push(set);
        return;
    }
    let mut frontier = VertexSet::EMPTY;
    for v in set.iter() {
        frontier = frontier.union(g.neighbors(v));
    }
    let mut candidates = frontier.intersection(allowed).difference(set).difference(excluded);
    let mut banned = excluded;
    while let Some(u) = candidates.first() {
        candidates = candidates.without(u);
        grow_connected(g, set.with(u), banned, allowed, k, out);
        banned = banned.with(u);
    }
}

/// Inclusion-minimal transversals of a set family (Berge's algorithm).
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut order: Vec<VertexSet> = edges.to_vec();
    order.sort_unstable_by_key(|e| e.len());
    let mut covers = vec![VertexSet::EMPTY];
    for e in order {
        if e.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(covers.len() * 2);
        for c in covers {
            if c.intersects(e) {
                next.push(c);
            } else {
                next.extend(e.iter().map(|x| c.with(x)));
            }
        }
        covers = minimal_sets(next);
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, figure_one, path};

    fn h(vs: &[&str], es: &[&[&str]]) -> Hypergraph {
        let edges: Vec<Vec<&str>> = es.iter().map(|e| e.to_vec()).collect();
        Hypergraph::from_labels(vs.iter().copied(), &edges).unwrap()
    }

    fn edge_labels(h: &Hypergraph) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = h.to_json().edges;
        v.sort();
        v
    }

    #[test]
    fn con_1_is_the_edge_set() {
        for g in [figure_one(), path(5), cycle(6).unwrap()] {
            assert_eq!(con_r(&g, 1).unwrap(), Hypergraph::from_graph(&g));
        }
    }

    #[test]
    fn con_2_of_figure_one() {
        let c = con_r(&figure_one(), 2).unwrap();
        let expected: Vec<Vec<String>> = [
            ["v1", "v2", "v3"],
            ["v1", "v2", "v4"],
            ["v1", "v2", "v5"],
            ["v1", "v3", "v4"],
        ]
        .iter()
        .map(|e| e.iter().map(|s| s.to_string()).collect())
        .collect();
        assert_eq!(edge_labels(&c), expected);
        assert!(con_r(&figure_one(), 0).is_err());
        assert!(con_r(&figure_one(), 5).unwrap().edges().is_empty());
    }

    #[test]
    fn deletion() {
        let t = h(&["a", "b", "c"], &[&["a", "b", "c"]]);
        let d = t.delete_vertex("a").unwrap();
        assert_eq!(d.vertices().labels(d.labels()), vec!["b", "c"]);
        assert!(d.edges().is_empty());

        let c4 = Hypergraph::from_graph(&cycle(4).unwrap());
        let d = c4.delete_vertex("1").unwrap();
        assert_eq!(
            edge_labels(&d),
            vec![vec!["2".to_string(), "3".into()], vec!["3".into(), "4".into()]]
        );

        let p4 = con_r(&path(4), 2).unwrap();
        let d = p4.delete_vertex("4").unwrap();
        assert_eq!(edge_labels(&d), vec![vec!["1".to_string(), "2".into(), "3".into()]]);
        assert!(p4.delete_vertex("9").is_err());
        assert!(d.delete_vertex("4").is_err());
    }

    #[test]
    fn contraction() {
        let t = h(&["a", "b", "c"], &[&["a", "b", "c"]]);
        assert_eq!(
            edge_labels(&t.contract_vertex("a").unwrap()),
            vec![vec!["b".to_string(), "c".into()]]
        );
        let p = h(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
        assert_eq!(
            edge_labels(&p.contract_vertex("b").unwrap()),
            vec![vec!["a".to_string()], vec!["c".to_string()]]
        );
        let s = h(&["a", "b"], &[&["a"]]);
        let c = s.contract_vertex("a").unwrap();
        assert_eq!(c.edges(), &[VertexSet::EMPTY]);
        assert_eq!(c.vertices().labels(c.labels()), vec!["b"]);
    }

    #[test]
    fn simplicial_vertices() {
        let lonely = h(&["a", "b", "c"], &[&["b", "c"]]);
        assert!(lonely.is_simplicial_vertex("a", PairRule::Distinct).unwrap());
        assert!(lonely.is_simplicial_vertex("a", PairRule::Inclusive).unwrap());

        let c4 = Hypergraph::from_graph(&cycle(4).unwrap());
        for v in ["1", "2", "3", "4"] {
            assert!(!c4.is_simplicial_vertex(v, PairRule::Distinct).unwrap());
        }

        // a leaf lies in one edge: vacuous for distinct pairs, fails for the
        // inclusive reading since no edge fits inside a single neighbour
        let p3 = Hypergraph::from_graph(&path(3));
        assert!(p3.is_simplicial_vertex("1", PairRule::Distinct).unwrap());
        assert!(!p3.is_simplicial_vertex("1", PairRule::Inclusive).unwrap());
        assert!(!p3.is_simplicial_vertex("2", PairRule::Distinct).unwrap());
    }

    #[test]
    fn chordality() {
        let c4 = Hypergraph::from_graph(&cycle(4).unwrap());
        match c4.is_chordal(DEFAULT_MINOR_BUDGET, PairRule::Distinct) {
            Outcome::Fails(w) => assert_eq!(w, c4),
            other => panic!("C4 reported {other:?}"),
        }
        let p4 = con_r(&path(4), 2).unwrap();
        assert!(p4.is_chordal(DEFAULT_MINOR_BUDGET, PairRule::Distinct).holds());
        let edgeless = h(&["a", "b", "c"], &[]);
        assert!(edgeless.is_chordal(10, PairRule::Distinct).holds());
        assert!(edgeless.is_chordal(10, PairRule::Inclusive).holds());
        assert!(c4.is_chordal(3, PairRule::Distinct).is_budget_exceeded()
            || c4.is_chordal(3, PairRule::Distinct).fails());
        let big = con_r(&path(7), 2).unwrap();
        assert!(big.is_chordal(5, PairRule::Distinct).is_budget_exceeded());
    }

    #[test]
    fn covers() {
        let single = h(&["a3", "a4", "b3", "b4"], &[&["a3", "a4", "b3", "b4"]]);
        let covers = single.minimal_vertex_covers();
        assert_eq!(covers.len(), 4);
        assert!(covers.iter().all(|c| c.len() == 1));

        assert_eq!(h(&["a"], &[]).minimal_vertex_covers(), vec![VertexSet::EMPTY]);

        let abc = h(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
        let mut got: Vec<Vec<String>> = abc
            .minimal_vertex_covers()
            .iter()
            .map(|c| c.labels(abc.labels()))
            .collect();
        got.sort();
        assert_eq!(got, vec![vec!["a".to_string(), "c".into()], vec!["b".to_string()]]);

        assert!(minimal_transversals(&[VertexSet::EMPTY]).is_empty());
    }
}
