//! Simplicial complexes in facet representation.
//!
//! A complex carries a ground set that may contain vertices lying in no
//! facet; Alexander duality and Stanley–Reisner ideals are taken relative to
//! it. The *void* complex has no faces at all, the *empty* complex has the
//! single face `∅`.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::hypergraph::minimal_transversals;
use crate::vset::{lex_cmp, maximal_sets};
use crate::{Error, Graph, Hypergraph, Labels, Result, VertexSet, MAX_VERTICES};

/// Largest number of faces any full face enumeration may produce.
pub const FACE_GUARD: usize = 1 << 20;

#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Labels,
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces` on `ground`; non-maximal faces are
    /// dropped.
    pub fn new(labels: Labels, ground: VertexSet, faces: Vec<VertexSet>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        if !ground.is_subset(VertexSet::full(labels.len())) {
            return Err(Error::OutOfRange("ground set exceeds label table".into()));
        }
        if let Some(f) = faces.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::UnknownVertex(format!(
                "{:?}",
                f.difference(ground).labels(&labels)
            )));
        }
        Ok(Self::from_parts(labels, ground, maximal_sets(faces)))
    }

    pub(crate) fn from_parts(labels: Labels, ground: VertexSet, facets: Vec<VertexSet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex {
            labels,
            ground,
            facets,
        }
    }

    /// Builds a complex from a ground-set label list and facet label lists.
    pub fn from_labels<V, S>(ground: V, facets: &[Vec<S>]) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = ground.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let masks = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| {
                        labels
                            .iter()
                            .position(|x| x == l.as_ref())
                            .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
                    })
                    .collect::<Result<VertexSet>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = labels.len();
        Self::new(labels.into(), VertexSet::full(n), masks)
    }

    /// The complex with no faces.
    pub fn void(labels: Labels, ground: VertexSet) -> Self {
        Self::from_parts(labels, ground, Vec::new())
    }

    /// The complex whose only face is `∅`.
    pub fn empty(labels: Labels, ground: VertexSet) -> Self {
        Self::from_parts(labels, ground, vec![VertexSet::EMPTY])
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Facets in internal (mask) order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Facets ordered lexicographically by sorted index vectors.
    pub fn sorted_facets(&self) -> Vec<VertexSet> {
        let mut f = self.facets.clone();
        f.sort_by(lex_cmp);
        f
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Dimension, or `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Vertices lying in some facet.
    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .filter(|&i| self.ground.contains(i))
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Resolves labels of the ground set into a vertex set.
    pub fn face<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<VertexSet>>()
    }

    pub fn face_labels(&self, f: VertexSet) -> Vec<String> {
        f.labels(&self.labels)
    }

    /// `lk(f) = {g : g ∩ f = ∅, g ∪ f ∈ K}` on the ground set minus `f`.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(self.face_labels(f).join(", ")));
        }
        Ok(self.link_unchecked(f))
    }

    pub(crate) fn link_unchecked(&self, f: VertexSet) -> Self {
        let mut facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|g| f.is_subset(**g))
            .map(|g| g.difference(f))
            .collect();
        // distinct facets containing f stay incomparable after removing f
        facets.sort_unstable();
        Self::from_parts(self.labels.clone(), self.ground.difference(f), facets)
    }

    /// `del(f) = {g ∈ K : f ⊄ g}`. Deleting a single vertex also removes it
    /// from the ground set.
    pub fn delete(&self, f: VertexSet) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyFaceDeletion);
        }
        if !f.is_subset(self.ground) {
            return Err(Error::UnknownVertex(
                self.face_labels(f.difference(self.ground)).join(", "),
            ));
        }
        Ok(self.delete_unchecked(f))
    }

    pub(crate) fn delete_unchecked(&self, f: VertexSet) -> Self {
        let mut faces = Vec::with_capacity(self.facets.len());
        let mut touched = false;
        for &g in &self.facets {
            if f.is_subset(g) {
                touched = true;
                faces.extend(f.iter().map(|x| g.without(x)));
            } else {
                faces.push(g);
            }
        }
        let ground = if f.len() == 1 {
            self.ground.difference(f)
        } else {
            self.ground
        };
        let facets = if touched { maximal_sets(faces) } else { faces };
        Self::from_parts(self.labels.clone(), ground, facets)
    }

    /// The subcomplex generated by all `m`-dimensional faces.
    pub fn pure_skeleton(&self, m: usize) -> Result<Self> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        if m as isize > dim {
            return Err(Error::OutOfRange(format!(
                "skeleton dimension {m} exceeds complex dimension {dim}"
            )));
        }
        let mut out: HashSet<VertexSet> = HashSet::new();
        for &g in self.facets.iter().filter(|g| g.len() > m) {
            if g.len() > 20 {
                return Err(Error::FaceGuard { limit: FACE_GUARD });
            }
            out.extend(g.subsets().filter(|s| s.len() == m + 1));
            if out.len() > FACE_GUARD {
                return Err(Error::FaceGuard { limit: FACE_GUARD });
            }
        }
        let mut facets: Vec<VertexSet> = out.into_iter().collect();
        facets.sort_unstable();
        Ok(Self::from_parts(self.labels.clone(), self.ground, facets))
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let complements: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|g| self.ground.difference(*g))
            .collect();
        minimal_transversals(&complements)
    }

    /// `K^∨ = {V \ F : F ∉ K}` over the same ground set.
    pub fn alexander_dual(&self) -> Self {
        let faces = self
            .minimal_non_faces()
            .into_iter()
            .map(|n| self.ground.difference(n))
            .collect();
        Self::from_parts(self.labels.clone(), self.ground, maximal_sets(faces))
    }

    /// All faces (including `∅`), ordered by size and then lexicographically.
    pub fn faces(&self) -> Result<Vec<VertexSet>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &g in &self.facets {
            if g.len() > 20 {
                return Err(Error::FaceGuard { limit: FACE_GUARD });
            }
            seen.extend(g.subsets());
            if seen.len() > FACE_GUARD {
                return Err(Error::FaceGuard { limit: FACE_GUARD });
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| lex_cmp(a, b)));
        Ok(faces)
    }

    /// Face counts `f_{-1}, f_0, .., f_dim`; empty for the void complex.
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        let Some(dim) = self.dim() else {
            return Ok(Vec::new());
        };
        let mut counts = vec![0usize; (dim + 2) as usize];
        for f in self.faces()? {
            counts[f.len()] += 1;
        }
        Ok(counts)
    }

    fn canonical(&self) -> (BTreeSet<String>, BTreeSet<BTreeSet<String>>) {
        (
            self.ground.labels(&self.labels).into_iter().collect(),
            self.facets
                .iter()
                .map(|f| f.labels(&self.labels).into_iter().collect())
                .collect(),
        )
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            ground_set: self.face_labels(self.ground),
            facets: self
                .sorted_facets()
                .into_iter()
                .map(|f| self.face_labels(f))
                .collect(),
        }
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self> {
        Self::from_labels(j.ground_set.iter().cloned(), &j.facets)
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.labels, &other.labels) {
            self.ground == other.ground && self.facets == other.facets
        } else {
            self.canonical() == other.canonical()
        }
    }
}

impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let j = self.to_json();
        f.debug_struct("SimplicialComplex")
            .field("ground_set", &j.ground_set)
            .field("facets", &j.facets)
            .finish()
    }
}

/// `{"ground_set": [...], "facets": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub ground_set: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

/// `Ind_r(G)`: maximal vertex subsets whose induced components all have at
/// most `r` vertices.
pub fn ind_r(g: &Graph, r: usize) -> Result<SimplicialComplex> {
    if r == 0 {
        return Err(Error::TooSmall {
            what: "r",
            min: 1,
            got: 0,
        });
    }
    let n = g.order();
    let fits = |s: VertexSet, v: usize| g.component_of(v, s.with(v)).len() <= r;
    let mut facets = Vec::new();
    let mut stack = vec![(0usize, VertexSet::EMPTY)];
    while let Some((v, cur)) = stack.pop() {
        if v == n {
            if (0..n).all(|u| cur.contains(u) || !fits(cur, u)) {
                facets.push(cur);
            }
            continue;
        }
        stack.push((v + 1, cur));
        if fits(cur, v) {
            stack.push((v + 1, cur.with(v)));
        }
    }
    facets.sort_unstable();
    Ok(SimplicialComplex::from_parts(
        g.labels().clone(),
        g.vertex_set(),
        facets,
    ))
}

/// `Ind(H)`: maximal vertex subsets containing no edge of `h`.
pub fn ind_hypergraph(h: &Hypergraph) -> SimplicialComplex {
    let labels = h.labels().clone();
    if h.edges().iter().any(|e| e.is_empty()) {
        return SimplicialComplex::void(labels, h.vertices());
    }
    let order: Vec<usize> = h.vertices().iter().collect();
    let through: Vec<Vec<VertexSet>> = (0..labels.len())
        .map(|v| h.edges().iter().copied().filter(|e| e.contains(v)).collect())
        .collect();
    let fits = |s: VertexSet, v: usize| {
        let t = s.with(v);
        !through[v].iter().any(|e| e.is_subset(t))
    };
    let mut facets = Vec::new();
    let mut stack = vec![(0usize, VertexSet::EMPTY)];
    while let Some((k, cur)) = stack.pop() {
        if k == order.len() {
            if order.iter().all(|&u| cur.contains(u) || !fits(cur, u)) {
                facets.push(cur);
            }
            continue;
        }
        let v = order[k];
        stack.push((k + 1, cur));
        if fits(cur, v) {
            stack.push((k + 1, cur.with(v)));
        }
    }
    facets.sort_unstable();
    SimplicialComplex::from_parts(labels, h.vertices(), facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, figure_one, g_graph, h_graph, path};
    use crate::hypergraph::con_r;

    fn facet_labels(k: &SimplicialComplex) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = k
            .facets()
            .iter()
            .map(|f| {
                let mut l = k.face_labels(*f);
                l.sort();
                l
            })
            .collect();
        v.sort();
        v
    }

    fn sets(xs: &[&[&str]]) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = xs
            .iter()
            .map(|f| {
                let mut l: Vec<String> = f.iter().map(|s| s.to_string()).collect();
                l.sort();
                l
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn figure_one_complexes() {
        let g = figure_one();
        assert_eq!(
            facet_labels(&ind_r(&g, 1).unwrap()),
            sets(&[&["v2", "v3", "v4"], &["v3", "v4", "v5"], &["v1", "v5"]])
        );
        assert_eq!(
            facet_labels(&ind_r(&g, 2).unwrap()),
            sets(&[
                &["v1", "v2"],
                &["v1", "v3", "v5"],
                &["v1", "v4", "v5"],
                &["v2", "v3", "v4", "v5"]
            ])
        );
        assert!(ind_r(&g, 0).is_err());
        let f = ind_r(&g, 2).unwrap().f_vector().unwrap();
        assert_eq!(f[1], 5);
    }

    #[test]
    fn r_plus_one_vertices_give_a_simplex_boundary() {
        for (g, r) in [(path(3), 2), (complete(4), 3), (figure_one(), 4)] {
            let k = ind_r(&g, r).unwrap();
            assert_eq!(k.facets().len(), r + 1);
            assert!(k.facets().iter().all(|f| f.len() == r));
        }
    }

    #[test]
    fn hypergraph_independence() {
        let full = Hypergraph::from_labels(["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        assert_eq!(
            facet_labels(&ind_hypergraph(&full)),
            sets(&[&["a", "b"], &["a", "c"], &["b", "c"]])
        );
        let g = figure_one();
        assert_eq!(
            ind_hypergraph(&con_r(&g, 2).unwrap()),
            ind_r(&g, 2).unwrap()
        );
        let with_empty = full.contract_vertex("a").unwrap().contract_vertex("b").unwrap()
            .contract_vertex("c").unwrap();
        assert!(ind_hypergraph(&with_empty).is_void());
    }

    #[test]
    fn links() {
        let k = ind_r(&figure_one(), 1).unwrap();
        assert_eq!(k.link(VertexSet::EMPTY).unwrap(), k);
        assert!(k.link(k.face(&["v1", "v2"]).unwrap()).is_err());

        let g2 = g_graph(2).unwrap();
        let k = ind_r(&g2, 2).unwrap();
        let lk = k.link(k.face(&["3"]).unwrap()).unwrap();
        let apex = lk.index_of("1").unwrap();
        assert!(!lk.is_void());
        assert!(lk.facets().iter().all(|f| f.contains(apex)));

        let h2 = h_graph(2).unwrap();
        let sk = ind_r(&h2, 3).unwrap().pure_skeleton(3).unwrap();
        let lk = sk.link(sk.face(&["x1", "x2"]).unwrap()).unwrap();
        assert_eq!(facet_labels(&lk), sets(&[&["v1", "v2"], &["v3", "v4"]]));
    }

    #[test]
    fn deletions() {
        let tri = SimplicialComplex::from_labels(
            ["a", "b", "c", "d"],
            &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
        )
        .unwrap();
        let d = tri.delete(tri.face(&["d"]).unwrap()).unwrap();
        assert_eq!(facet_labels(&d), facet_labels(&tri));
        assert_eq!(d.ground().len(), 3);
        let d = tri.delete(tri.face(&["a"]).unwrap()).unwrap();
        assert_eq!(facet_labels(&d), sets(&[&["b", "c"]]));
        assert_eq!(tri.delete(VertexSet::EMPTY), Err(Error::EmptyFaceDeletion));

        // del_{Ind_2(G_2)}(3) is Ind_2(G_2[{1,2,a,b}]) joined with the vertex 4
        let g2 = g_graph(2).unwrap();
        let k = ind_r(&g2, 2).unwrap();
        let d = k.delete(k.face(&["3"]).unwrap()).unwrap();
        let left = ind_r(&g2.induced_subgraph_by_labels(&["1", "2", "a", "b"]).unwrap(), 2).unwrap();
        let joined: Vec<Vec<String>> = {
            let mut v: Vec<Vec<String>> = left
                .facets()
                .iter()
                .map(|f| {
                    let mut l = left.face_labels(*f);
                    l.push("4".into());
                    l.sort();
                    l
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(facet_labels(&d), joined);
    }

    #[test]
    fn skeletons() {
        let h2 = h_graph(2).unwrap();
        let k = ind_r(&h2, 3).unwrap();
        assert_eq!(k.dim(), Some(3));
        assert_eq!(
            facet_labels(&k.pure_skeleton(3).unwrap()),
            sets(&[&["v1", "v2", "x1", "x2"], &["v3", "v4", "x1", "x2"]])
        );
        let two = k.pure_skeleton(2).unwrap();
        assert_eq!(two.facets().len(), 20);
        assert!(k.pure_skeleton(4).is_err());
        let tri = ind_r(&complete(3), 2).unwrap();
        assert_eq!(tri.pure_skeleton(1).unwrap(), tri);
    }

    #[test]
    fn dual_conventions() {
        let bd = ind_r(&complete(4), 3).unwrap();
        let dual = bd.alexander_dual();
        assert_eq!(dual.facets(), &[VertexSet::EMPTY]);
        assert_eq!(dual.alexander_dual(), bd);

        let labels: Labels = vec!["a".to_string(), "b".into()].into();
        let void = SimplicialComplex::void(labels.clone(), VertexSet::full(2));
        let full = SimplicialComplex::new(labels, VertexSet::full(2), vec![VertexSet::full(2)]).unwrap();
        assert_eq!(void.alexander_dual(), full);
        assert_eq!(full.alexander_dual(), void);
    }

    #[test]
    fn f_vectors() {
        let tri = SimplicialComplex::from_labels(
            ["a", "b", "c"],
            &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
        )
        .unwrap();
        assert_eq!(tri.f_vector().unwrap(), vec![1, 3, 3]);
        let void = SimplicialComplex::void(tri.labels().clone(), tri.ground());
        assert_eq!(void.f_vector().unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn complete_graphs_give_skeleta() {
        for n in 2..=6 {
            for r in 1..n {
                let k = ind_r(&complete(n), r).unwrap();
                assert_eq!(k.facets().len(), num_integer::binomial(n, r));
                assert!(k.facets().iter().all(|f| f.len() == r));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let k = ind_r(&figure_one(), 2).unwrap();
        let j = k.to_json();
        assert_eq!(j.facets[0], vec!["v1", "v2"]);
        assert_eq!(SimplicialComplex::from_json(&j).unwrap(), k);
    }
}
