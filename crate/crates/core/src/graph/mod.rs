//! Simple undirected graphs and the families built from them.
//!
//! Graphs are immutable values: every operation returns a fresh graph.
//! Vertices are `0..n`; adjacency rows are bitsets.

mod families;
mod io;
mod iso;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::{BigInt, IntMatrix};

pub use families::{
    bridge_graph, complete_graph, cycle5, reseminant_tilde, suspension_graph, BridgeParams, Family,
};
pub use io::{from_json, to_dot, to_json, GraphJson};
pub use iso::{find_isomorphism, is_isomorphic, Isomorphism};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Validates that the edge list describes a simple graph.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n() })
        }
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices are reached");
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn induced_edge_count(&self, vertices: &FixedBitSet) -> usize {
        vertices
            .ones()
            .map(|v| self.adj[v].intersection(vertices).count())
            .sum::<usize>()
            / 2
    }
}

/// Role of a vertex in one of the constructed families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexTag {
    BridgeVertex,
    CliqueMember,
    Apex,
    CycleVertex,
    DuplicateOf(usize),
}

impl std::fmt::Display for VertexTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexTag::BridgeVertex => write!(f, "bridge-vertex"),
            VertexTag::CliqueMember => write!(f, "clique-member"),
            VertexTag::Apex => write!(f, "apex"),
            VertexTag::CycleVertex => write!(f, "cycle-vertex"),
            VertexTag::DuplicateOf(k) => write!(f, "duplicate-of({k})"),
        }
    }
}

impl Serialize for VertexTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLabel {
    pub index: usize,
    pub tag: VertexTag,
}

/// 0/1 adjacency matrix, rows in vertex order.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.n(), g.n(), |i, j| BigInt::from(u8::from(g.has_edge(i, j))))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(n);
    for u in 0..n {
        let mut row = g.adj[u].clone();
        row.toggle_range(..);
        row.set(u, false);
        out.adj[u] = row;
    }
    out
}

/// Adds a vertex `u = n` adjacent to `v` and to every neighbour of `v`.
pub fn duplicate_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let n = g.n();
    let mut adj: Vec<FixedBitSet> = g
        .adj
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.grow(n + 1);
            r
        })
        .collect();
    adj.push(FixedBitSet::with_capacity(n + 1));
    let mut out = Graph { adj };
    let targets: Vec<usize> = g.neighbors(v).chain(std::iter::once(v)).collect();
    for x in targets {
        out.link(n, x);
    }
    Ok(out)
}
