//! Edge-list and JSON graph formats, and named generator specs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    caterpillar, complete, cycle, figure_one, g_graph, g_graph_with_clique, h_graph, path, star,
    CaterpillarSpec, Graph,
};
use crate::{Error, Result};

impl Graph {
    /// Parses the edge-list format: one `u v` pair per line, `vertex u`
    /// declares a vertex, `#` starts a comment line. Vertex order is order of
    /// first appearance.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut edges = Vec::new();
        let mut intern = |l: &str, labels: &mut Vec<String>| -> usize {
            *index.entry(l.to_string()).or_insert_with(|| {
                labels.push(l.to_string());
                labels.len() - 1
            })
        };
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: String| Error::Parse { line: no + 1, msg };
            match tokens.as_slice() {
                ["vertex", v] => {
                    intern(v, &mut labels);
                }
                ["vertex", ..] => return Err(err("`vertex` takes exactly one label".into())),
                [u, v] => {
                    if u == v {
                        return Err(err(format!("loop at `{u}`")));
                    }
                    let a = intern(u, &mut labels);
                    let b = intern(v, &mut labels);
                    edges.push((a, b));
                }
                _ => {
                    return Err(err(format!(
                        "expected `u v` or `vertex u`, found `{line}`"
                    )))
                }
            }
        }
        Graph::from_indices(labels, &edges).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }

    /// Writes the edge-list format, declaring every vertex first so that
    /// order and isolated vertices survive a round trip.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for l in self.labels().iter() {
            writeln!(s, "vertex {l}").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(s, "{} {}", self.label(a), self.label(b)).unwrap();
        }
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels().to_vec(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| [self.label(a).to_string(), self.label(b).to_string()])
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        Graph::new(
            j.vertices.iter().cloned(),
            j.edges.iter().map(|[a, b]| (a, b)),
        )
    }
}

/// `{"vertices": [...], "edges": [[u, v], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// A named generator such as `path:7`, `caterpillar:1,2,1,1` or `H:2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named {
    FigureOne,
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Caterpillar(Vec<usize>),
    H(usize),
    G { r: usize, clique: usize },
}

impl Named {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Named::FigureOne => Ok(figure_one()),
            Named::Path(n) => Ok(path(*n)),
            Named::Cycle(n) => cycle(*n),
            Named::Complete(n) => Ok(complete(*n)),
            Named::Star(k) => Ok(star(*k)),
            Named::Caterpillar(m) => Ok(caterpillar(&CaterpillarSpec::new(m.clone())?)),
            Named::H(r) => h_graph(*r),
            Named::G { r, clique: 2 } => g_graph(*r),
            Named::G { r, clique } => g_graph_with_clique(*r, *clique),
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let num = |t: &str| -> Result<usize> {
            t.trim()
                .parse()
                .map_err(|_| bad(format!("`{t}` is not a non-negative integer in `{s}`")))
        };
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let need = || arg.ok_or_else(|| bad(format!("`{name}` needs an argument")));
        Ok(match name {
            "fig1" => Named::FigureOne,
            "path" => Named::Path(num(need()?)?),
            "cycle" => Named::Cycle(num(need()?)?),
            "complete" => Named::Complete(num(need()?)?),
            "star" => Named::Star(num(need()?)?),
            "caterpillar" => Named::Caterpillar(
                need()?
                    .split(',')
                    .map(num)
                    .collect::<Result<Vec<_>>>()?,
            ),
            "H" => Named::H(num(need()?)?),
            "G" => {
                let a = need()?;
                match a.split_once(',') {
                    Some((r, k)) => Named::G {
                        r: num(r)?,
                        clique: num(k)?,
                    },
                    None => Named::G {
                        r: num(a)?,
                        clique: 2,
                    },
                }
            }
            other => return Err(bad(format!("unknown generator `{other}`"))),
        })
    }
}
