//! Free trees up to isomorphism.
//!
//! Trees on `n` vertices are grown from trees on `n - 1` vertices by
//! attaching a leaf in every possible position and deduplicating by a
//! centre-rooted canonical code.

use std::collections::BTreeSet;

use super::Graph;
use crate::{Error, Result};

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 16;

/// Canonical code of a free tree, or `None` if `g` is not a tree.
///
/// The code is the parenthesis encoding of the tree rooted at a centre with
/// children sorted; bicentral trees take the smaller of the two encodings.
/// Two trees share a code iff they are isomorphic.
pub fn canonical_tree_code(g: &Graph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    Some(
        centres(g)
            .into_iter()
            .map(|c| rooted_code(g, c, usize::MAX))
            .min()
            .expect("a tree has a centre"),
    )
}

fn centres(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for u in g.neighbors(leaf).iter() {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(g, u, v))
        .collect();
    kids.sort_unstable();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// Rebuilds the tree described by a parenthesis code, labelling vertices
/// `0, 1, ..` in preorder.
fn tree_from_code(code: &str) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    let mut n = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, n));
                }
                stack.push(n);
                n += 1;
            }
            _ => {
                stack.pop();
            }
        }
    }
    Graph::from_indices((0..n).map(|i| i.to_string()).collect(), &edges)
        .expect("well-formed tree code")
}

/// Every tree on `n` vertices exactly once, in canonical-code order, each
/// labelled in preorder of its canonical rooting.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "tree order",
            min: 1,
            got: 0,
        });
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::OutOfRange(format!(
            "tree order {n} exceeds the limit of {MAX_TREE_ORDER}"
        )));
    }
    let mut level: BTreeSet<String> = BTreeSet::from(["()".to_string()]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = tree_from_code(code);
            let mut edges = t.edges();
            for v in 0..k {
                edges.push((v, k));
                let grown = Graph::from_indices((0..=k).map(|i| i.to_string()).collect(), &edges)
                    .expect("valid tree");
                next.insert(canonical_tree_code(&grown).expect("leaf extension keeps a tree"));
                edges.pop();
            }
        }
        level = next;
    }
    Ok(level.iter().map(|c| tree_from_code(c)).collect())
}
