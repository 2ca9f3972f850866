#![allow(dead_code)]

use std::collections::BTreeSet;

use indcx::{Graph, SimplicialComplex, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Erdős–Rényi style graph on `n` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_indices(labels(n), &edges).unwrap()
}

/// A complex on `n` vertices generated by `m` random faces.
pub fn random_complex(rng: &mut ChaCha8Rng, n: usize, m: usize) -> SimplicialComplex {
    let faces: Vec<VertexSet> = (0..m)
        .map(|_| VertexSet(rng.gen_range(1..1u64 << n)))
        .collect();
    SimplicialComplex::new(labels(n).into(), VertexSet::full(n), faces).unwrap()
}

pub type Family = BTreeSet<BTreeSet<String>>;

pub fn family<I: IntoIterator<Item = VertexSet>>(sets: I, table: &[String]) -> Family {
    sets.into_iter()
        .map(|s| s.labels(table).into_iter().collect())
        .collect()
}

pub fn facets(k: &SimplicialComplex) -> Family {
    family(k.facets().iter().copied(), k.labels())
}

/// Maximal members of a family given by a membership predicate over all
/// subsets of `n` vertices.
pub fn maximal_by_predicate(n: usize, member: impl Fn(u64) -> bool) -> Vec<u64> {
    let members: Vec<u64> = (0..1u64 << n).filter(|&s| member(s)).collect();
    members
        .iter()
        .copied()
        .filter(|&s| !members.iter().any(|&t| t != s && t & s == s))
        .collect()
}

pub fn minimal_by_predicate(n: usize, member: impl Fn(u64) -> bool) -> Vec<u64> {
    let members: Vec<u64> = (0..1u64 << n).filter(|&s| member(s)).collect();
    members
        .iter()
        .copied()
        .filter(|&s| !members.iter().any(|&t| t != s && t & s == t))
        .collect()
}
