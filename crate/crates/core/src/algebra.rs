//! Square-free monomial ideals, encoded by the supports of their minimal
//! generators.
//!
//! The zero ideal has no generators; the unit ideal has the single
//! generator `∅`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{ind_r, SimplicialComplex};
use crate::hypergraph::{con_r, minimal_transversals, Hypergraph};
use crate::vset::{lex_cmp, maximal_sets, minimal_sets};
use crate::{Error, Graph, Labels, Outcome, Result, VertexSet, MAX_VERTICES};

pub const DEFAULT_SPLIT_BUDGET: usize = 500_000;

#[derive(Clone)]
pub struct MonomialIdeal {
    labels: Labels,
    variables: VertexSet,
    generators: Vec<VertexSet>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens` in the polynomial ring on `variables`.
    /// Non-minimal generators are dropped.
    pub fn new(labels: Labels, variables: VertexSet, gens: Vec<VertexSet>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        if !variables.is_subset(VertexSet::full(labels.len())) {
            return Err(Error::OutOfRange("variables exceed label table".into()));
        }
        if let Some(g) = gens.iter().find(|g| !g.is_subset(variables)) {
            return Err(Error::UnknownVertex(
                g.difference(variables).labels(&labels).join(", "),
            ));
        }
        Ok(Self::from_parts(labels, variables, minimal_sets(gens)))
    }

    pub(crate) fn from_parts(labels: Labels, variables: VertexSet, generators: Vec<VertexSet>) -> Self {
        MonomialIdeal {
            labels,
            variables,
            generators,
        }
    }

    pub fn from_labels<V, S>(variables: V, gens: &[Vec<S>]) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = variables.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        if let Some(d) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::DuplicateVertex(d.clone()));
        }
        let masks = gens
            .iter()
            .map(|g| {
                g.iter()
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

    /// The ideal generated by the edges of `h`.
    pub fn edge_ideal(h: &Hypergraph) -> Self {
        Self::from_parts(h.labels().clone(), h.vertices(), h.edges().to_vec())
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn variables(&self) -> VertexSet {
        self.variables
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    /// Generators ordered by degree, then lexicographically.
    pub fn sorted_generators(&self) -> Vec<VertexSet> {
        let mut g = self.generators.clone();
        g.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| lex_cmp(a, b)));
        g
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&VertexSet::EMPTY)
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    /// Whether the square-free monomial with support `m` lies in the ideal.
    pub fn contains(&self, m: VertexSet) -> bool {
        self.generators.iter().any(|g| g.is_subset(m))
    }

    /// Whether `m` is one of the minimal generators.
    pub fn is_minimal_generator(&self, m: VertexSet) -> bool {
        self.generators.binary_search(&m).is_ok()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .filter(|&i| self.variables.contains(i))
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Resolves a monomial given by variable labels.
    pub fn monomial<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn monomial_labels(&self, m: VertexSet) -> Vec<String> {
        m.labels(&self.labels)
    }

    fn canonical(&self) -> (BTreeSet<String>, BTreeSet<BTreeSet<String>>) {
        (
            self.variables.labels(&self.labels).into_iter().collect(),
            self.generators
                .iter()
                .map(|g| g.labels(&self.labels).into_iter().collect())
                .collect(),
        )
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            variables: self.monomial_labels(self.variables),
            generators: self
                .sorted_generators()
                .into_iter()
                .map(|g| self.monomial_labels(g))
                .collect(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Self> {
        Self::from_labels(j.variables.iter().cloned(), &j.generators)
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.labels, &other.labels) {
            self.variables == other.variables && self.generators == other.generators
        } else {
            self.canonical() == other.canonical()
        }
    }
}

impl Eq for MonomialIdeal {}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let j = self.to_json();
        f.debug_struct("MonomialIdeal")
            .field("variables", &j.variables)
            .field("generators", &j.generators)
            .finish()
    }
}

/// `{"variables": [...], "generators": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<String>>,
}

/// Generated by the minimal non-faces of `k`.
pub fn stanley_reisner(k: &SimplicialComplex) -> Result<MonomialIdeal> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(MonomialIdeal::from_parts(
        k.labels().clone(),
        k.ground(),
        k.minimal_non_faces(),
    ))
}

/// Generated by the minimal vertex covers of the generator hypergraph.
pub fn alexander_dual_ideal(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    if i.is_zero() {
        return Err(Error::DualOfZero);
    }
    if i.is_unit() {
        return Err(Error::DualOfUnit);
    }
    Ok(MonomialIdeal::from_parts(
        i.labels.clone(),
        i.variables,
        minimal_transversals(&i.generators),
    ))
}

/// `SR(k)^∨`, generated by the complements of the facets of `k`. A full
/// simplex gives the unit ideal.
pub fn facet_complement_ideal(k: &SimplicialComplex) -> Result<MonomialIdeal> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let gens = k.facets().iter().map(|f| k.ground().difference(*f)).collect();
    Ok(MonomialIdeal::from_parts(
        k.labels().clone(),
        k.ground(),
        minimal_sets(gens),
    ))
}

/// `SR(k)^∨` computed by dualising the Stanley–Reisner ideal. When that
/// ideal is zero (`k` is a full simplex) the result is the unit ideal.
pub fn sr_dual(k: &SimplicialComplex) -> Result<MonomialIdeal> {
    let sr = stanley_reisner(k)?;
    if sr.is_zero() {
        return facet_complement_ideal(k);
    }
    alexander_dual_ideal(&sr)
}

/// The Alexander dual of the edge ideal of `Con_r(g)`, which is also
/// `SR(Ind_r(g))^∨`. Both are computed and compared, together with the
/// facet-complement description; any disagreement is an
/// [`Error::CrossCheck`].
pub fn dual_of_ind(g: &Graph, r: usize) -> Result<MonomialIdeal> {
    let h = con_r(g, r)?;
    let k = ind_r(g, r)?;
    let via_covers = if h.edges().is_empty() {
        facet_complement_ideal(&k)?
    } else {
        alexander_dual_ideal(&MonomialIdeal::edge_ideal(&h))?
    };
    let via_sr = sr_dual(&k)?;
    if via_covers != via_sr {
        return Err(Error::CrossCheck(format!(
            "dual of Ind_{r}: cover path {:?} differs from Stanley-Reisner path {:?}",
            via_covers.to_json().generators,
            via_sr.to_json().generators
        )));
    }
    let direct = facet_complement_ideal(&k)?;
    if direct != via_sr {
        return Err(Error::CrossCheck(format!(
            "dual of Ind_{r} differs from the facet complements {:?}",
            direct.to_json().generators
        )));
    }
    Ok(via_sr)
}

/// Pivot decision tree for a vertex-splittable ideal. Leaves are zero,
/// unit or principal ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCertificate {
    pub generators: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot: Option<String>,
    /// `I_1`: the quotients by the pivot.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i1: Option<Box<SplitCertificate>>,
    /// `I_2`: the generators avoiding the pivot.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i2: Option<Box<SplitCertificate>>,
}

#[derive(Clone, Copy)]
enum Memo {
    Leaf,
    Split(usize),
    No,
}

struct SplitSearch {
    budget: usize,
    memo: HashMap<Vec<VertexSet>, Memo>,
}

struct OutOfBudget;

fn split_parts(gens: &[VertexSet], x: usize) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let mut i1: Vec<VertexSet> = gens
        .iter()
        .filter(|g| g.contains(x))
        .map(|g| g.without(x))
        .collect();
    i1.sort_unstable();
    let i2: Vec<VertexSet> = gens.iter().copied().filter(|g| !g.contains(x)).collect();
    (i1, i2)
}

impl SplitSearch {
    fn decide(&mut self, gens: Vec<VertexSet>) -> std::result::Result<bool, OutOfBudget> {
        if let Some(m) = self.memo.get(&gens) {
            return Ok(!matches!(m, Memo::No));
        }
        if self.memo.len() >= self.budget {
            return Err(OutOfBudget);
        }
        if gens.len() <= 1 {
            self.memo.insert(gens, Memo::Leaf);
            return Ok(true);
        }
        let support = gens.iter().fold(VertexSet::EMPTY, |a, g| a.union(*g));
        let mut found = Memo::No;
        for x in support.iter() {
            let (i1, i2) = split_parts(&gens, x);
            if !i2.iter().all(|m| i1.iter().any(|q| q.is_subset(*m))) {
                continue;
            }
            if self.decide(i1)? && self.decide(i2)? {
                found = Memo::Split(x);
                break;
            }
        }
        let ok = !matches!(found, Memo::No);
        self.memo.insert(gens, found);
        Ok(ok)
    }

    fn certificate(&self, i: &MonomialIdeal, gens: Vec<VertexSet>) -> SplitCertificate {
        let mut sorted = gens.clone();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| lex_cmp(a, b)));
        let generators = sorted.iter().map(|g| i.monomial_labels(*g)).collect();
        match self.memo[&gens] {
            Memo::Split(x) => {
                let (i1, i2) = split_parts(&gens, x);
                SplitCertificate {
                    generators,
                    pivot: Some(i.labels[x].clone()),
                    i1: Some(Box::new(self.certificate(i, i1))),
                    i2: Some(Box::new(self.certificate(i, i2))),
                }
            }
            _ => SplitCertificate {
                generators,
                pivot: None,
                i1: None,
                i2: None,
            },
        }
    }
}

/// Decides vertex splittability; `budget` bounds the number of memoised
/// sub-ideals.
pub fn is_vertex_splittable(i: &MonomialIdeal, budget: usize) -> Outcome<SplitCertificate> {
    let mut s = SplitSearch {
        budget,
        memo: HashMap::new(),
    };
    match s.decide(i.generators.clone()) {
        Err(OutOfBudget) => Outcome::BudgetExceeded {
            explored: s.memo.len(),
        },
        Ok(false) => Outcome::Fails(()),
        Ok(true) => Outcome::Holds(s.certificate(i, i.generators.clone())),
    }
}

type Mono = BTreeSet<String>;

fn antichain(gens: &[Vec<String>]) -> Result<BTreeSet<Mono>> {
    let mut out = BTreeSet::new();
    for g in gens {
        let m: Mono = g.iter().cloned().collect();
        if m.len() != g.len() {
            return Err(Error::MalformedCertificate(format!("repeated variable in {g:?}")));
        }
        if !out.insert(m) {
            return Err(Error::MalformedCertificate(format!("repeated generator {g:?}")));
        }
    }
    Ok(out)
}

fn is_antichain(s: &BTreeSet<Mono>) -> bool {
    s.iter().all(|a| s.iter().all(|b| a == b || !a.is_subset(b)))
}

/// Replays a split tree against `i`, checking at every node that the
/// minimal generators are the disjoint union of `x·G(I_1)` and `G(I_2)`,
/// that neither part involves `x`, and that `I_2 ⊆ I_1`.
pub fn verify_split_certificate(i: &MonomialIdeal, cert: &SplitCertificate) -> Result<bool> {
    let expected: BTreeSet<Mono> = i
        .generators
        .iter()
        .map(|g| i.monomial_labels(*g).into_iter().collect())
        .collect();
    verify_split_node(&expected, cert)
}

fn verify_split_node(expected: &BTreeSet<Mono>, cert: &SplitCertificate) -> Result<bool> {
    let gens = antichain(&cert.generators)?;
    if gens != *expected || !is_antichain(&gens) {
        return Ok(false);
    }
    let Some(x) = &cert.pivot else {
        if cert.i1.is_some() || cert.i2.is_some() {
            return Err(Error::MalformedCertificate("leaf with children".into()));
        }
        return Ok(gens.len() <= 1);
    };
    let (Some(c1), Some(c2)) = (&cert.i1, &cert.i2) else {
        return Err(Error::MalformedCertificate(format!(
            "pivot `{x}` without both children"
        )));
    };
    let g1 = antichain(&c1.generators)?;
    let g2 = antichain(&c2.generators)?;
    if g1.iter().chain(&g2).any(|m| m.contains(x)) || g1.is_empty() {
        return Ok(false);
    }
    let lifted: BTreeSet<Mono> = g1
        .iter()
        .map(|m| {
            let mut m = m.clone();
            m.insert(x.clone());
            m
        })
        .collect();
    if !lifted.is_disjoint(&g2) || lifted.union(&g2).cloned().collect::<BTreeSet<_>>() != gens {
        return Ok(false);
    }
    if !g2.iter().all(|m| g1.iter().any(|q| q.is_subset(m))) {
        return Ok(false);
    }
    Ok(verify_split_node(&g1, c1)? && verify_split_node(&g2, c2)?)
}

/// The complex whose Stanley–Reisner dual is `i`: facets are the
/// complements of the generators. The zero ideal has no such complex.
pub fn complex_of_dual(i: &MonomialIdeal) -> Result<SimplicialComplex> {
    if i.is_zero() {
        return Err(Error::DualOfZero);
    }
    let faces = i.generators.iter().map(|g| i.variables.difference(*g)).collect();
    Ok(SimplicialComplex::from_parts(
        i.labels.clone(),
        i.variables,
        maximal_sets(faces),
    ))
}
