use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{duplicate_vertex, Graph, VertexLabel, VertexTag};
use crate::error::{Error, Result};

/// Clique sizes of a complete bridge graph, normalized so that `m ≥ n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BridgeParams {
    m: usize,
    n: usize,
}

impl BridgeParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n < 1 || m < n {
            return Err(Error::InvalidParameters(format!(
                "bridge graph needs m >= n >= 1, got m={m}, n={n}"
            )));
        }
        Ok(BridgeParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.m + self.n
    }

    /// Parameter sets for which `B(m, n)` is a minimally connected prime graph.
    pub fn admissible(&self) -> bool {
        self.n > 1 || (self.m, self.n) == (2, 1) || (self.m, self.n) == (1, 1)
    }
}

/// `K_k`.
pub fn complete_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameters("complete graph needs k >= 1".into()));
    }
    let edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    Graph::from_edges(k, &edges)
}

/// `B(m, n)`: `K_m` on `0..m`, `K_n` on `m..m+n`, bridge edge `(m−1, m)`.
///
/// With this ordering the lone off-diagonal-block 1 of the adjacency matrix
/// sits in the last row of the upper-right block, first column.
pub fn bridge_graph(p: BridgeParams) -> Result<Graph> {
    let BridgeParams { m, n } = p;
    let mut edges = Vec::new();
    for u in 0..m {
        edges.extend((u + 1..m).map(|v| (u, v)));
    }
    for u in m..m + n {
        edges.extend((u + 1..m + n).map(|v| (u, v)));
    }
    edges.push((m - 1, m));
    Graph::from_edges(m + n, &edges)
}

/// `S(m, n)`: `B(m, n)` plus an apex `m + n` joined to every vertex except
/// the two bridge vertices.
pub fn suspension_graph(p: BridgeParams) -> Result<Graph> {
    if p.order() < 3 {
        return Err(Error::InvalidParameters(format!(
            "suspension of B({}, {}) would have an isolated apex",
            p.m, p.n
        )));
    }
    let b = bridge_graph(p)?;
    let apex = p.order();
    let mut edges = b.edges();
    edges.extend((0..apex).filter(|&v| v != p.m - 1 && v != p.m).map(|v| (v, apex)));
    Graph::from_edges(apex + 1, &edges)
}

/// The 5-cycle `0-1-2-3-4-0`.
pub fn cycle5() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).expect("valid cycle")
}

/// `R̃_n`: `C_5` with vertex 0 duplicated `n` times (vertices `5..n+5` are
/// the copies).
pub fn reseminant_tilde(n: usize) -> Graph {
    (0..n).fold(cycle5(), |g, _| duplicate_vertex(&g, 0).expect("vertex 0 exists"))
}

/// A named member of one of the constructed families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete { k: usize },
    Bridge(BridgeParams),
    /// `B(m, m − 1)`.
    BridgeMinusOne { m: usize },
    Suspension(BridgeParams),
    Cycle5,
    Reseminant { n: usize },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete { k } => complete_graph(k),
            Family::Bridge(p) => bridge_graph(p),
            Family::BridgeMinusOne { m } => bridge_graph(Self::mm1(m)?),
            Family::Suspension(p) => suspension_graph(p),
            Family::Cycle5 => Ok(cycle5()),
            Family::Reseminant { n } => Ok(reseminant_tilde(n)),
        }
    }

    fn mm1(m: usize) -> Result<BridgeParams> {
        BridgeParams::new(m, m.saturating_sub(1))
    }

    pub fn labels(&self) -> Result<Vec<VertexLabel>> {
        let tags: Vec<VertexTag> = match *self {
            Family::Complete { k } => vec![VertexTag::CliqueMember; k],
            Family::Bridge(p) | Family::Suspension(p) => {
                let mut t: Vec<_> = (0..p.order())
                    .map(|v| {
                        if v == p.m - 1 || v == p.m {
                            VertexTag::BridgeVertex
                        } else {
                            VertexTag::CliqueMember
                        }
                    })
                    .collect();
                if matches!(self, Family::Suspension(_)) {
                    t.push(VertexTag::Apex);
                }
                t
            }
            Family::BridgeMinusOne { m } => return Family::Bridge(Self::mm1(m)?).labels(),
            Family::Cycle5 => vec![VertexTag::CycleVertex; 5],
            Family::Reseminant { n } => {
                let mut t = vec![VertexTag::CycleVertex; 5];
                t.extend(std::iter::repeat_n(VertexTag::DuplicateOf(0), n));
                t
            }
        };
        Ok(tags.into_iter().enumerate().map(|(index, tag)| VertexLabel { index, tag }).collect())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { k } => write!(f, "complete:k={k}"),
            Family::Bridge(p) => write!(f, "bridge:m={},n={}", p.m, p.n),
            Family::BridgeMinusOne { m } => write!(f, "bridge-mm1:m={m}"),
            Family::Suspension(p) => write!(f, "suspension:m={},n={}", p.m, p.n),
            Family::Cycle5 => write!(f, "c5"),
            Family::Reseminant { n } => write!(f, "reseminant:n={n}"),
        }
    }
}

impl Family {
    /// Builds a family from its name and the `m`/`n`/`k` parameters.
    pub fn from_parts(
        name: &str,
        m: Option<usize>,
        n: Option<usize>,
        k: Option<usize>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, key: &str| {
            v.ok_or_else(|| Error::InvalidParameters(format!("family `{name}` needs {key}")))
        };
        Ok(match name {
            "complete" => Family::Complete { k: need(k, "k")? },
            "bridge" => Family::Bridge(BridgeParams::new(need(m, "m")?, need(n, "n")?)?),
            "bridge-mm1" => {
                let m = need(m, "m")?;
                Self::mm1(m)?;
                Family::BridgeMinusOne { m }
            }
            "suspension" => Family::Suspension(BridgeParams::new(need(m, "m")?, need(n, "n")?)?),
            "c5" => Family::Cycle5,
            "reseminant" => Family::Reseminant { n: need(n, "n")? },
            other => return Err(Error::InvalidParameters(format!("unknown family `{other}`"))),
        })
    }
}

/// Parses `name` or `name:key=value,key=value`, e.g. `bridge:m=4,n=3`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let (mut m, mut n, mut k) = (None, None, None);
        for kv in params.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = kv
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameters(format!("expected key=value, got `{kv}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("bad value in `{kv}`")))?;
            match key.trim() {
                "m" => m = Some(value),
                "n" => n = Some(value),
                "k" => k = Some(value),
                other => {
                    return Err(Error::InvalidParameters(format!("unknown parameter `{other}`")))
                }
            }
        }
        Family::from_parts(name.trim(), m, n, k)
    }
}
