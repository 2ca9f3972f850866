//! Corpus sweeps: every tree (or caterpillar) up to a given order, checked
//! for a set of properties at several values of `r`.
//!
//! Items are independent; with [`Exec::Parallel`] they are evaluated
//! concurrently while each individual check runs sequentially. Results are
//! always delivered in corpus order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{is_vertex_splittable, sr_dual, verify_split_certificate, DEFAULT_SPLIT_BUDGET};
use crate::complex::ind_r;
use crate::decomposability::{
    is_shellable, is_vertex_decomposable, verify_shedding_certificate,
    verify_shelling_certificate, DEFAULT_SHELL_BUDGET, DEFAULT_VD_BUDGET,
};
use crate::graph::{canonical_tree_code, enumerate_trees, GraphJson, MAX_TREE_ORDER};
use crate::homology::{is_cohen_macaulay, is_scm, reduced_homology, Coefficients};
use crate::hypergraph::{con_r, PairRule, DEFAULT_MINOR_BUDGET};
use crate::outcome::Verdict;
use crate::{Error, Exec, Graph, Result};

/// A checkable property of `Ind_r(G)` (or of `Con_r(G)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Vd,
    Shellable,
    Cm,
    Scm,
    Homology,
    Splittable,
    ChordalHypergraph,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Vd,
        Property::Shellable,
        Property::Cm,
        Property::Scm,
        Property::Homology,
        Property::Splittable,
        Property::ChordalHypergraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Vd => "vd",
            Property::Shellable => "shellable",
            Property::Cm => "cm",
            Property::Scm => "scm",
            Property::Homology => "homology",
            Property::Splittable => "splittable",
            Property::ChordalHypergraph => "chordal-hypergraph",
        }
    }

    /// Parses a comma-separated list; duplicates collapse, order is fixed.
    pub fn parse_list(s: &str) -> Result<Vec<Property>> {
        let mut out: Vec<Property> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown property `{s}`")))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Search limits shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub vd: usize,
    pub shell: usize,
    pub minor: usize,
    pub split: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            vd: DEFAULT_VD_BUDGET,
            shell: DEFAULT_SHELL_BUDGET,
            minor: DEFAULT_MINOR_BUDGET,
            split: DEFAULT_SPLIT_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Trees,
    Caterpillars,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(Family::Trees),
            "caterpillars" => Ok(Family::Caterpillars),
            _ => Err(Error::OutOfRange(format!(
                "unknown family `{s}`; use trees or caterpillars"
            ))),
        }
    }
}

/// The graphs of `family` on `1..=n_max` vertices, by order and then by
/// canonical code.
pub fn corpus(family: Family, n_max: usize) -> Result<Vec<Graph>> {
    if n_max > MAX_TREE_ORDER {
        return Err(Error::OutOfRange(format!(
            "trees are enumerated up to {MAX_TREE_ORDER} vertices"
        )));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(
            enumerate_trees(n)?
                .into_iter()
                .filter(|t| family == Family::Trees || t.is_caterpillar()),
        );
    }
    Ok(out)
}

/// Result of checking one `(graph, r)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanItem {
    pub n: usize,
    pub r: usize,
    pub code: String,
    pub graph: GraphJson,
    pub verdicts: BTreeMap<Property, Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_betti: Option<Vec<usize>>,
}

/// Checks `props` on `Ind_r(g)`. Every emitted certificate is replayed; a
/// certificate that fails to verify is reported as [`Error::CrossCheck`].
/// Verdicts per property, plus the reduced Betti numbers when computed.
pub type Evaluation = (BTreeMap<Property, Verdict>, Option<Vec<usize>>);

pub fn evaluate(
    g: &Graph,
    r: usize,
    props: &[Property],
    field: Coefficients,
    budgets: &Budgets,
    exec: Exec,
) -> Result<Evaluation> {
    let k = ind_r(g, r)?;
    let mut verdicts = BTreeMap::new();
    let mut betti = None;
    for &p in props {
        let v = match p {
            Property::Vd => {
                let o = is_vertex_decomposable(&k, budgets.vd)?;
                if let Some(c) = o.certificate() {
                    if !verify_shedding_certificate(&k, c)? {
                        return Err(Error::CrossCheck("shedding certificate rejected".into()));
                    }
                }
                o.verdict()
            }
            Property::Shellable => {
                let o = is_shellable(&k, budgets.shell)?;
                if let Some(c) = o.certificate() {
                    if !verify_shelling_certificate(&k, c)? {
                        return Err(Error::CrossCheck("shelling order rejected".into()));
                    }
                }
                o.verdict()
            }
            Property::Cm => is_cohen_macaulay(&k, field, exec)?.verdict(),
            Property::Scm => Verdict::from(is_scm(&k, field, exec)?.is_scm()),
            Property::Homology => {
                let h = reduced_homology(&k, field)?;
                let acyclic = h.is_acyclic();
                betti = Some(h.reduced_betti);
                Verdict::from(acyclic)
            }
            Property::Splittable => {
                let i = sr_dual(&k)?;
                let o = is_vertex_splittable(&i, budgets.split);
                if let Some(c) = o.certificate() {
                    if !verify_split_certificate(&i, c)? {
                        return Err(Error::CrossCheck("split certificate rejected".into()));
                    }
                }
                o.verdict()
            }
            Property::ChordalHypergraph => con_r(g, r)?
                .is_chordal(budgets.minor, PairRule::Distinct)
                .verdict(),
        };
        verdicts.insert(p, v);
    }
    Ok((verdicts, betti))
}

/// Parameters of a sweep.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub family: Family,
    pub n_max: usize,
    pub rs: Vec<usize>,
    pub props: Vec<Property>,
    pub field: Coefficients,
    pub budgets: Budgets,
    pub exec: Exec,
}

/// A property that came out false on some item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub code: String,
    pub r: usize,
    pub property: Property,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    #[serde(rename = "true")]
    pub holds: usize,
    #[serde(rename = "false")]
    pub fails: usize,
    #[serde(rename = "budget-exceeded")]
    pub budget_exceeded: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub items: usize,
    pub counts: BTreeMap<Property, Tally>,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanSummary {
    fn record(&mut self, item: &ScanItem) {
        self.items += 1;
        for (&p, &v) in &item.verdicts {
            let t = self.counts.entry(p).or_default();
            match v {
                Verdict::True => t.holds += 1,
                Verdict::False => t.fails += 1,
                Verdict::BudgetExceeded => t.budget_exceeded += 1,
            }
            // acyclicity is reported, not expected
            if v == Verdict::False && p != Property::Homology {
                self.counterexamples.push(Counterexample {
                    code: item.code.clone(),
                    r: item.r,
                    property: p,
                });
            }
        }
    }
}

/// Runs a sweep, handing each item to `emit` in corpus order (graph, then
/// `r`), and returns the summary.
pub fn scan<F>(cfg: &ScanConfig, mut emit: F) -> Result<ScanSummary>
where
    F: FnMut(&ScanItem) -> Result<()>,
{
    const CHUNK: usize = 256;
    let graphs = corpus(cfg.family, cfg.n_max)?;
    let work: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| cfg.rs.iter().map(move |&r| (g, r)))
        .collect();
    let mut summary = ScanSummary::default();
    for chunk in work.chunks(CHUNK) {
        let results = cfg.exec.map(chunk, |&(g, r)| {
            let (verdicts, reduced_betti) =
                evaluate(g, r, &cfg.props, cfg.field, &cfg.budgets, Exec::Sequential)?;
            Ok::<_, Error>(ScanItem {
                n: g.order(),
                r,
                code: canonical_tree_code(g).unwrap_or_default(),
                graph: g.to_json(),
                verdicts,
                reduced_betti,
            })
        });
        for item in results {
            let item: ScanItem = item?;
            summary.record(&item);
            emit(&item)?;
        }
    }
    Ok(summary)
}
