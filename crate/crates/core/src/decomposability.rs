//! Vertex decomposability and (non-pure) shellability, each with a
//! certificate that can be replayed independently of the search.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::homology::{is_scm, Coefficients};
use crate::vset::{lex_cmp, maximal_sets};
use crate::{Error, Exec, Outcome, Result, SimplicialComplex, VertexSet};

pub const DEFAULT_VD_BUDGET: usize = 500_000;
pub const DEFAULT_SHELL_BUDGET: usize = 2_000_000;

/// Order in which candidate shedding vertices are tried.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VertexOrder {
    #[default]
    Ground,
    Reversed,
}

fn vertices_of(facets: &[VertexSet]) -> VertexSet {
    facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
}

fn link_facets(facets: &[VertexSet], v: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = facets
        .iter()
        .filter(|f| f.contains(v))
        .map(|f| f.without(v))
        .collect();
    out.sort_unstable();
    out
}

fn deletion_facets(facets: &[VertexSet], v: usize) -> Vec<VertexSet> {
    maximal_sets(facets.iter().map(|f| f.without(v)).collect())
}

// every F \ v with v ∈ F lies in a facet avoiding v
fn sheds(facets: &[VertexSet], v: usize) -> bool {
    let avoiding: Vec<VertexSet> = facets.iter().copied().filter(|f| !f.contains(v)).collect();
    facets
        .iter()
        .filter(|f| f.contains(v))
        .all(|f| avoiding.iter().any(|g| f.without(v).is_subset(*g)))
}

/// Whether every facet of `del_k(v)` is a facet of `k`.
pub fn is_shedding_vertex(k: &SimplicialComplex, v: usize) -> Result<bool> {
    if !k.vertices().contains(v) {
        return Err(Error::NotAFace(
            k.labels().get(v).cloned().unwrap_or_else(|| format!("#{v}")),
        ));
    }
    Ok(sheds(k.facets(), v))
}

/// Shedding decision tree. Leaves (no vertex) are simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheddingCertificate {
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<Box<SheddingCertificate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub del: Option<Box<SheddingCertificate>>,
}

impl SheddingCertificate {
    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.link.as_ref().map_or(0, |c| c.size()) + self.del.as_ref().map_or(0, |c| c.size())
    }
}

#[derive(Clone, Copy)]
enum Memo {
    Simplex,
    Shed(usize),
    No,
}

struct VdSearch {
    order: VertexOrder,
    budget: usize,
    memo: HashMap<Vec<VertexSet>, Memo>,
}

struct OutOfBudget;

impl VdSearch {
    fn decide(&mut self, facets: Vec<VertexSet>) -> std::result::Result<bool, OutOfBudget> {
        if let Some(m) = self.memo.get(&facets) {
            return Ok(!matches!(m, Memo::No));
        }
        if self.memo.len() >= self.budget {
            return Err(OutOfBudget);
        }
        if facets.len() == 1 {
            self.memo.insert(facets, Memo::Simplex);
            return Ok(true);
        }
        let mut candidates = vertices_of(&facets).indices();
        if self.order == VertexOrder::Reversed {
            candidates.reverse();
        }
        let mut found = Memo::No;
        for v in candidates {
            if sheds(&facets, v)
                && self.decide(link_facets(&facets, v))?
                && self.decide(deletion_facets(&facets, v))?
            {
                found = Memo::Shed(v);
                break;
            }
        }
        let ok = !matches!(found, Memo::No);
        self.memo.insert(facets, found);
        Ok(ok)
    }

    fn certificate(&self, k: &SimplicialComplex, facets: Vec<VertexSet>) -> SheddingCertificate {
        let mut sorted = facets.clone();
        sorted.sort_by(lex_cmp);
        let labels = sorted.iter().map(|f| k.face_labels(*f)).collect();
        match self.memo[&facets] {
            Memo::Shed(v) => SheddingCertificate {
                facets: labels,
                vertex: Some(k.labels()[v].clone()),
                link: Some(Box::new(self.certificate(k, link_facets(&facets, v)))),
                del: Some(Box::new(self.certificate(k, deletion_facets(&facets, v)))),
            },
            _ => SheddingCertificate {
                facets: labels,
                vertex: None,
                link: None,
                del: None,
            },
        }
    }
}

/// Decides vertex decomposability with the default vertex order.
pub fn is_vertex_decomposable(
    k: &SimplicialComplex,
    budget: usize,
) -> Result<Outcome<SheddingCertificate>> {
    is_vertex_decomposable_with(k, budget, VertexOrder::Ground)
}

/// Decides vertex decomposability; `budget` bounds the number of memoised
/// subcomplexes.
pub fn is_vertex_decomposable_with(
    k: &SimplicialComplex,
    budget: usize,
    order: VertexOrder,
) -> Result<Outcome<SheddingCertificate>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut s = VdSearch {
        order,
        budget,
        memo: HashMap::new(),
    };
    let facets = k.facets().to_vec();
    match s.decide(facets.clone()) {
        Err(OutOfBudget) => Ok(Outcome::BudgetExceeded {
            explored: s.memo.len(),
        }),
        Ok(false) => Ok(Outcome::Fails(())),
        Ok(true) => Ok(Outcome::Holds(s.certificate(k, facets))),
    }
}

/// Facets in shelling order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShellingCertificate(pub Vec<Vec<String>>);

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
}

struct ShellSearch<'a> {
    facets: &'a [VertexSet],
    budget: usize,
    dead: HashSet<Vec<u64>>,
    visited: usize,
}

impl ShellSearch<'_> {
    // F_k may follow `order` iff every F_j in it misses some x ∈ F_k for which
    // F_k \ F_l = {x} for an l in it
    fn admissible(&self, order: &[usize], k: usize) -> bool {
        let fk = self.facets[k];
        let x = order.iter().fold(VertexSet::EMPTY, |acc, &l| {
            let d = fk.difference(self.facets[l]);
            if d.len() == 1 {
                acc.union(d)
            } else {
                acc
            }
        });
        order
            .iter()
            .all(|&j| fk.difference(self.facets[j]).intersects(x))
    }

    fn extend(
        &mut self,
        used: &mut Bits,
        order: &mut Vec<usize>,
    ) -> std::result::Result<bool, OutOfBudget> {
        if order.len() == self.facets.len() {
            return Ok(true);
        }
        if self.dead.contains(&used.0) {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(OutOfBudget);
        }
        // some shelling lists facets by non-increasing dimension, so only
        // those orders are searched
        let cap = order.last().map_or(usize::MAX, |&l| self.facets[l].len());
        for k in 0..self.facets.len() {
            if used.get(k) || self.facets[k].len() > cap || !self.admissible(order, k) {
                continue;
            }
            used.flip(k);
            order.push(k);
            if self.extend(used, order)? {
                return Ok(true);
            }
            order.pop();
            used.flip(k);
        }
        self.dead.insert(used.0.clone());
        Ok(false)
    }
}

/// Decides non-pure shellability; `budget` bounds the number of visited
/// prefix sets.
pub fn is_shellable(k: &SimplicialComplex, budget: usize) -> Result<Outcome<ShellingCertificate>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut facets = k.facets().to_vec();
    facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| lex_cmp(a, b)));
    let mut s = ShellSearch {
        facets: &facets,
        budget,
        dead: HashSet::new(),
        visited: 0,
    };
    let mut used = Bits::new(facets.len());
    let mut order = Vec::with_capacity(facets.len());
    match s.extend(&mut used, &mut order) {
        Err(OutOfBudget) => Ok(Outcome::BudgetExceeded { explored: s.visited }),
        Ok(false) => Ok(Outcome::Fails(())),
        Ok(true) => Ok(Outcome::Holds(ShellingCertificate(
            order.iter().map(|&i| k.face_labels(facets[i])).collect(),
        ))),
    }
}

type LabelSet = BTreeSet<String>;
type Family = BTreeSet<LabelSet>;

fn family_of(k: &SimplicialComplex) -> Family {
    k.facets()
        .iter()
        .map(|f| k.face_labels(*f).into_iter().collect())
        .collect()
}

fn to_family(facets: &[Vec<String>]) -> Result<Family> {
    let mut fam = Family::new();
    for f in facets {
        let set: LabelSet = f.iter().cloned().collect();
        if set.len() != f.len() {
            return Err(Error::MalformedCertificate(format!("repeated vertex in {f:?}")));
        }
        if !fam.insert(set) {
            return Err(Error::MalformedCertificate(format!("repeated facet {f:?}")));
        }
    }
    Ok(fam)
}

fn maximal_family(sets: impl IntoIterator<Item = LabelSet>) -> Family {
    let all: Vec<LabelSet> = sets.into_iter().collect();
    all.iter()
        .filter(|s| !all.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect()
}

/// Replays a shedding tree against `k`: every node must list the facets of
/// the expected subcomplex, every branching vertex must be shedding, and
/// every leaf must be a simplex.
pub fn verify_shedding_certificate(
    k: &SimplicialComplex,
    cert: &SheddingCertificate,
) -> Result<bool> {
    verify_shedding_node(&family_of(k), cert)
}

fn verify_shedding_node(expected: &Family, cert: &SheddingCertificate) -> Result<bool> {
    if to_family(&cert.facets)? != *expected {
        return Ok(false);
    }
    let Some(v) = &cert.vertex else {
        if cert.link.is_some() || cert.del.is_some() {
            return Err(Error::MalformedCertificate("leaf with children".into()));
        }
        return Ok(expected.len() == 1);
    };
    let (Some(link), Some(del)) = (&cert.link, &cert.del) else {
        return Err(Error::MalformedCertificate(format!(
            "vertex `{v}` without both children"
        )));
    };
    if !expected.iter().any(|f| f.contains(v)) {
        return Ok(false);
    }
    let lk: Family = maximal_family(expected.iter().filter(|f| f.contains(v)).map(|f| {
        let mut g = f.clone();
        g.remove(v);
        g
    }));
    let dl: Family = maximal_family(expected.iter().map(|f| {
        let mut g = f.clone();
        g.remove(v);
        g
    }));
    if !dl.is_subset(expected) {
        return Ok(false);
    }
    Ok(verify_shedding_node(&lk, link)? && verify_shedding_node(&dl, del)?)
}

/// Checks a shelling order against the definition: it lists every facet of
/// `k` once, and each facet meets the union of its predecessors in a pure
/// complex of codimension one.
pub fn verify_shelling_certificate(
    k: &SimplicialComplex,
    cert: &ShellingCertificate,
) -> Result<bool> {
    if to_family(&cert.0)? != family_of(k) {
        return Ok(false);
    }
    let order: Vec<LabelSet> = cert.0.iter().map(|f| f.iter().cloned().collect()).collect();
    for (i, fk) in order.iter().enumerate().skip(1) {
        let meets = maximal_family(
            order[..i]
                .iter()
                .map(|fj| fj.intersection(fk).cloned().collect::<LabelSet>()),
        );
        if meets.iter().any(|m| m.len() + 1 != fk.len()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdicts of the chain vertex decomposable ⇒ shellable ⇒ sequentially
/// Cohen–Macaulay on one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub vertex_decomposable: Option<bool>,
    pub shellable: Option<bool>,
    pub scm: bool,
}

/// Runs all three checks and fails with [`Error::CrossCheck`] if a decided
/// verdict breaks an implication. Undecided searches are reported as `None`.
pub fn implication_chain(
    k: &SimplicialComplex,
    field: Coefficients,
    vd_budget: usize,
    shell_budget: usize,
    exec: Exec,
) -> Result<ChainReport> {
    let vd = is_vertex_decomposable(k, vd_budget)?;
    let sh = is_shellable(k, shell_budget)?;
    let scm = is_scm(k, field, exec)?.is_scm();
    if let Some(c) = vd.certificate() {
        if !verify_shedding_certificate(k, c)? {
            return Err(Error::CrossCheck("emitted shedding certificate does not verify".into()));
        }
    }
    if let Some(c) = sh.certificate() {
        if !verify_shelling_certificate(k, c)? {
            return Err(Error::CrossCheck("emitted shelling order does not verify".into()));
        }
    }
    let report = ChainReport {
        vertex_decomposable: vd.decided(),
        shellable: sh.decided(),
        scm,
    };
    if report.vertex_decomposable == Some(true) && report.shellable == Some(false) {
        return Err(Error::CrossCheck("vertex decomposable but not shellable".into()));
    }
    if report.shellable == Some(true) && !scm {
        return Err(Error::CrossCheck(format!(
            "shellable but not sequentially Cohen-Macaulay over {field}"
        )));
    }
    Ok(report)
}
