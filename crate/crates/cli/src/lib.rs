//! Command-line front end: `build`, `check`, `scan` and `verify`.
//!
//! Exit codes: 0 success (whatever the verdicts), 1 invalid certificate or
//! other failure, 2 parse or usage error, 3 a search ran out of budget,
//! 4 internal cross-check mismatch.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use indcx::algebra::{
    dual_of_ind, is_vertex_splittable, sr_dual, verify_split_certificate, SplitCertificate,
};
use indcx::complex::{ind_r, ComplexJson};
use indcx::decomposability::{
    is_shellable, is_vertex_decomposable, verify_shedding_certificate,
    verify_shelling_certificate, SheddingCertificate, ShellingCertificate,
};
use indcx::graph::{GraphJson, Named};
use indcx::homology::{is_cohen_macaulay, is_scm, reduced_homology};
use indcx::hypergraph::{con_r, PairRule};
use indcx::outcome::Verdict;
use indcx::scan::{scan, Budgets, Family, Property, ScanConfig};
use indcx::{Coefficients, Exec, Graph, SimplicialComplex};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_CROSS_CHECK: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "indcx", version, about = "Higher independence complexes of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, env = "INDCX_JOBS")]
    pub jobs: Option<usize>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the facets of Ind_r(G) as JSON.
    Build(BuildArgs),
    /// Check properties of Ind_r(G) or of a given complex.
    Check(CheckArgs),
    /// Sweep trees or caterpillars, one JSON line per (graph, r).
    Scan(ScanArgs),
    /// Replay a certificate against a complex.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct GraphSource {
    /// Named graph: fig1, path:n, cycle:n, complete:n, star:n,
    /// caterpillar:m1,..,ml, H:r, G:r.
    #[arg(long = "gen", value_name = "NAME", group = "source")]
    pub generator: Option<String>,

    /// Graph file: edge list, or JSON {"vertices", "edges"}.
    #[arg(long, value_name = "FILE", group = "source")]
    pub graph: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub source: GraphSource,

    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    #[arg(long, env = "INDCX_BUDGET_VD", default_value_t = Budgets::default().vd)]
    pub budget_vd: usize,
    #[arg(long, env = "INDCX_BUDGET_SHELL", default_value_t = Budgets::default().shell)]
    pub budget_shell: usize,
    #[arg(long, env = "INDCX_BUDGET_MINOR", default_value_t = Budgets::default().minor)]
    pub budget_minor: usize,
    #[arg(long, env = "INDCX_BUDGET_SPLIT", default_value_t = Budgets::default().split)]
    pub budget_split: usize,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            vd: self.budget_vd,
            shell: self.budget_shell,
            minor: self.budget_minor,
            split: self.budget_split,
        }
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Complex file: JSON {"ground_set", "facets"}.
    #[arg(long, value_name = "FILE", group = "source")]
    pub complex: Option<PathBuf>,

    /// Required with a graph source.
    #[arg(long)]
    pub r: Option<usize>,

    /// Comma-separated: vd, shellable, cm, scm, homology, splittable,
    /// chordal-hypergraph.
    #[arg(long, default_value = "vd,shellable,scm,homology")]
    pub props: String,

    /// Coefficient field: q or gf:p.
    #[arg(long, env = "INDCX_FIELD", default_value = "q")]
    pub field: String,

    #[command(flatten)]
    pub budgets: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// trees or caterpillars.
    #[arg(long)]
    pub family: String,

    /// Largest number of vertices; every order from 1 up is swept.
    #[arg(long = "n")]
    pub n_max: usize,

    /// Values of r: `2`, `1..3` or `1,3`.
    #[arg(long, default_value = "1..3")]
    pub r: String,

    #[arg(long, default_value = "vd")]
    pub props: String,

    #[arg(long, env = "INDCX_FIELD", default_value = "q")]
    pub field: String,

    #[command(flatten)]
    pub budgets: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Complex file: JSON {"ground_set", "facets"}.
    #[arg(long, value_name = "FILE")]
    pub complex: PathBuf,

    /// Shedding tree, shelling order, or split tree of the dual ideal.
    #[arg(long, value_name = "FILE")]
    pub certificate: PathBuf,
}

/// An error carrying its exit code.
#[derive(Debug)]
pub struct Exit {
    pub code: u8,
    pub message: String,
}

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Exit {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Exit {
        code: EXIT_USAGE,
        message: msg.into(),
    }
    .into()
}

/// Maps an error to the process exit code.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(x) = cause.downcast_ref::<Exit>() {
            return x.code;
        }
        if let Some(x) = cause.downcast_ref::<indcx::Error>() {
            return match x {
                indcx::Error::CrossCheck(_) => EXIT_CROSS_CHECK,
                indcx::Error::MalformedCertificate(_) => EXIT_INVALID,
                indcx::Error::Parse { .. }
                | indcx::Error::Json(_)
                | indcx::Error::UnknownVertex(_)
                | indcx::Error::DuplicateVertex(_)
                | indcx::Error::Loop(_)
                | indcx::Error::TooSmall { .. }
                | indcx::Error::OutOfRange(_)
                | indcx::Error::NotPrime(_)
                | indcx::Error::TooManyVertices(_) => EXIT_USAGE,
                _ => EXIT_INVALID,
            };
        }
        if cause.downcast_ref::<serde_json::Error>().is_some() {
            return EXIT_USAGE;
        }
    }
    EXIT_INVALID
}

fn exec_for(jobs: Option<usize>) -> Exec {
    match jobs {
        Some(1) => Exec::Sequential,
        Some(n) => {
            // read once, when the pool is first used
            std::env::set_var("RAYON_NUM_THREADS", n.to_string());
            Exec::Parallel
        }
        None => Exec::Parallel,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))
}

fn load_graph(src: &GraphSource) -> Result<(Graph, String)> {
    if let Some(name) = &src.generator {
        let named: Named = name.parse()?;
        return Ok((named.build()?, name.clone()));
    }
    if let Some(path) = &src.graph {
        let text = read(path)?;
        let g = if text.trim_start().starts_with('{') {
            Graph::from_json(&serde_json::from_str::<GraphJson>(&text)?)?
        } else {
            Graph::parse_edge_list(&text)
                .with_context(|| format!("parsing {}", path.display()))?
        };
        return Ok((g, path.display().to_string()));
    }
    Err(usage("give a graph with --gen or --graph"))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    let j: ComplexJson = serde_json::from_str(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(SimplicialComplex::from_json(&j)?)
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

/// Runs a parsed command line and returns the exit code for a run that
/// completed (0, or 3 when some search ran out of budget).
pub fn run(cli: Cli) -> Result<u8> {
    let exec = exec_for(cli.jobs);
    let mut out = sink(&cli.out)?;
    let code = match &cli.command {
        Command::Build(a) => {
            let (g, _) = load_graph(&a.source)?;
            let k = ind_r(&g, a.r)?;
            serde_json::to_writer_pretty(&mut out, &k.to_json())?;
            writeln!(out)?;
            0
        }
        Command::Check(a) => {
            let report = check(a, exec)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            if report.verdicts.values().any(|v| *v == Verdict::BudgetExceeded) {
                EXIT_BUDGET
            } else {
                0
            }
        }
        Command::Scan(a) => run_scan(a, exec, &mut out)?,
        Command::Verify(a) => {
            let (valid, kind) = verify(a)?;
            writeln!(out, "{}", json!({ "certificate": kind, "valid": valid }))?;
            if !valid {
                out.flush()?;
                return Err(Exit {
                    code: EXIT_INVALID,
                    message: format!("{kind} certificate does not verify"),
                }
                .into());
            }
            0
        }
    };
    out.flush()?;
    Ok(code)
}

/// Everything `check` reports.
#[derive(Debug, Serialize)]
pub struct PropertyReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub input: Value,
    pub field: Coefficients,
    pub verdicts: BTreeMap<Property, Verdict>,
    pub certificates: BTreeMap<Property, Value>,
    pub witnesses: BTreeMap<Property, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<indcx::homology::BettiProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scm_skeletons: Option<Vec<indcx::homology::SkeletonReport>>,
    pub timings_ms: BTreeMap<Property, f64>,
}

pub fn check(a: &CheckArgs, exec: Exec) -> Result<PropertyReport> {
    let field: Coefficients = a.field.parse()?;
    let props = Property::parse_list(&a.props)?;
    let budgets = a.budgets.budgets();
    let (k, graph, input) = if let Some(path) = &a.complex {
        if a.r.is_some() {
            return Err(usage("--r applies to graph input only"));
        }
        let k = load_complex(path)?;
        let input = json!({
            "kind": "complex",
            "source": path.display().to_string(),
            "ground_set_size": k.ground().len(),
            "facets": k.facets().len(),
        });
        (k, None, input)
    } else {
        let (g, source) = load_graph(&a.source)?;
        let r = a.r.ok_or_else(|| usage("--r is required with a graph"))?;
        let k = ind_r(&g, r)?;
        let input = json!({
            "kind": "graph",
            "source": source,
            "r": r,
            "vertices": g.order(),
            "edges": g.edge_count(),
            "facets": k.facets().len(),
        });
        (k, Some((g, r)), input)
    };
    if k.is_void() {
        bail!(usage("the complex is void"));
    }

    let mut report = PropertyReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        input,
        field,
        verdicts: BTreeMap::new(),
        certificates: BTreeMap::new(),
        witnesses: BTreeMap::new(),
        betti: None,
        scm_skeletons: None,
        timings_ms: BTreeMap::new(),
    };
    for p in props {
        let start = Instant::now();
        let verdict = match p {
            Property::Vd => {
                let o = is_vertex_decomposable(&k, budgets.vd)?;
                if let Some(c) = o.certificate() {
                    if !verify_shedding_certificate(&k, c)? {
                        return Err(indcx::Error::CrossCheck("shedding certificate rejected".into()).into());
                    }
                    report.certificates.insert(p, serde_json::to_value(c)?);
                }
                o.verdict()
            }
            Property::Shellable => {
                let o = is_shellable(&k, budgets.shell)?;
                if let Some(c) = o.certificate() {
                    if !verify_shelling_certificate(&k, c)? {
                        return Err(indcx::Error::CrossCheck("shelling order rejected".into()).into());
                    }
                    report.certificates.insert(p, serde_json::to_value(c)?);
                }
                o.verdict()
            }
            Property::Cm => {
                let o = is_cohen_macaulay(&k, field, exec)?;
                if let Some(w) = o.witness() {
                    report.witnesses.insert(p, serde_json::to_value(w)?);
                }
                o.verdict()
            }
            Property::Scm => {
                let rep = is_scm(&k, field, exec)?;
                if let Some(f) = rep.first_failure() {
                    report.witnesses.insert(p, serde_json::to_value(f)?);
                }
                let v = Verdict::from(rep.is_scm());
                report.scm_skeletons = Some(rep.skeletons);
                v
            }
            Property::Homology => {
                let h = reduced_homology(&k, field)?;
                let v = Verdict::from(h.is_acyclic());
                report.betti = Some(h);
                v
            }
            Property::Splittable => {
                let ideal = match &graph {
                    Some((g, r)) => dual_of_ind(g, *r)?,
                    None => sr_dual(&k)?,
                };
                let o = is_vertex_splittable(&ideal, budgets.split);
                if let Some(c) = o.certificate() {
                    if !verify_split_certificate(&ideal, c)? {
                        return Err(indcx::Error::CrossCheck("split certificate rejected".into()).into());
                    }
                    report.certificates.insert(p, serde_json::to_value(c)?);
                }
                o.verdict()
            }
            Property::ChordalHypergraph => {
                let Some((g, r)) = &graph else {
                    return Err(usage("chordal-hypergraph needs a graph input"));
                };
                let o = con_r(g, *r)?.is_chordal(budgets.minor, PairRule::Distinct);
                if let Some(w) = o.witness() {
                    report.witnesses.insert(p, serde_json::to_value(w.to_json())?);
                }
                o.verdict()
            }
        };
        report.verdicts.insert(p, verdict);
        report
            .timings_ms
            .insert(p, start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(report)
}

/// Parses `2`, `1..3` (inclusive) or `1,3`.
pub fn parse_r_range(s: &str) -> Result<Vec<usize>> {
    let bad = || usage(format!("bad r range `{s}`; use 2, 1..3 or 1,3"));
    let mut rs: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        (a..=b).collect()
    } else {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    rs.sort_unstable();
    rs.dedup();
    if rs.is_empty() || rs[0] == 0 {
        return Err(bad());
    }
    Ok(rs)
}

fn run_scan(a: &ScanArgs, exec: Exec, out: &mut dyn Write) -> Result<u8> {
    let cfg = ScanConfig {
        family: a.family.parse::<Family>()?,
        n_max: a.n_max,
        rs: parse_r_range(&a.r)?,
        props: Property::parse_list(&a.props)?,
        field: a.field.parse()?,
        budgets: a.budgets.budgets(),
        exec,
    };
    let summary = scan(&cfg, |item| {
        serde_json::to_writer(&mut *out, item).map_err(indcx::Error::from)?;
        writeln!(out).map_err(|e| indcx::Error::Json(e.to_string()))?;
        Ok(())
    })?;
    serde_json::to_writer(&mut *out, &json!({ "summary": summary }))?;
    writeln!(out)?;
    let exhausted = summary.counts.values().any(|t| t.budget_exceeded > 0);
    Ok(if exhausted { EXIT_BUDGET } else { 0 })
}

/// Replays a certificate; the kind is recognised from its shape.
pub fn verify(a: &VerifyArgs) -> Result<(bool, &'static str)> {
    let k = load_complex(&a.complex)?;
    let value: Value = serde_json::from_str(&read(&a.certificate)?)
        .with_context(|| format!("parsing {}", a.certificate.display()))?;
    let unknown = |sets: &[Vec<String>]| sets.iter().flatten().any(|l| k.index_of(l).is_err());
    if value.is_array() {
        let c: ShellingCertificate = serde_json::from_value(value)?;
        if unknown(&c.0) {
            return Ok((false, "shelling"));
        }
        return Ok((verify_shelling_certificate(&k, &c)?, "shelling"));
    }
    if value.get("generators").is_some() {
        let c: SplitCertificate = serde_json::from_value(value)?;
        if unknown(&c.generators) {
            return Ok((false, "split"));
        }
        return Ok((verify_split_certificate(&sr_dual(&k)?, &c)?, "split"));
    }
    if value.get("facets").is_some() {
        let c: SheddingCertificate = serde_json::from_value(value)?;
        if unknown(&c.facets) {
            return Ok((false, "shedding"));
        }
        return Ok((verify_shedding_certificate(&k, &c)?, "shedding"));
    }
    Err(usage("unrecognised certificate: expected an array, or an object with `facets` or `generators`"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_ranges() {
        assert_eq!(parse_r_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_r_range("2").unwrap(), vec![2]);
        assert_eq!(parse_r_range("3,1").unwrap(), vec![1, 3]);
        assert!(parse_r_range("0..2").is_err());
        assert!(parse_r_range("x").is_err());
    }

    #[test]
    fn exit_codes() {
        let e: anyhow::Error = indcx::Error::CrossCheck("x".into()).into();
        assert_eq!(exit_code(&e), EXIT_CROSS_CHECK);
        let e: anyhow::Error = indcx::Error::Parse { line: 3, msg: "x".into() }.into();
        assert_eq!(exit_code(&e.context("reading")), EXIT_USAGE);
        assert_eq!(exit_code(&usage("x")), EXIT_USAGE);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
