//! JSON exchange format and DOT output.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexLabel};
use crate::error::{Error, Result};

/// `{"n": 5, "edges": [[0, 1], ...]}`, 0-based, each edge written once with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        // [1,0] after [0,1] is the same edge listed twice; from_edges rejects it
        Graph::from_edges(j.n, &edges)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text)?;
    Graph::try_from(j)
}

/// Undirected DOT. With labels, each vertex shows its index and tag.
pub fn to_dot(g: &Graph, labels: Option<&[VertexLabel]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels.and_then(|ls| ls.iter().find(|l| l.index == v)) {
            Some(l) => writeln!(out, "  {v} [label=\"{v}: {}\"];", l.tag),
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String cannot fail");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String cannot fail");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::random_graph;
    use crate::graph::{cycle5, Family};
    use proptest::prelude::*;

    #[test]
    fn c5_json() {
        assert_eq!(to_json(&cycle5()), r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(matches!(from_json(r#"{"n":3,"edges":[[1,1]]}"#), Err(Error::InvalidGraph(_))));
        assert!(matches!(
            from_json(r#"{"n":3,"edges":[[0,1],[1,0]]}"#),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            from_json(r#"{"n":3,"edges":[[0,3]]}"#),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(matches!(from_json(r#"{"n":3}"#), Err(Error::Json(_))));
    }

    #[test]
    fn dot_carries_tags() {
        let fam: Family = "suspension:m=2,n=2".parse().unwrap();
        let dot = to_dot(&fam.build().unwrap(), Some(&fam.labels().unwrap()));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("4 [label=\"4: apex\"]"));
        assert!(dot.contains("1 -- 2;"));
        assert_eq!(dot.matches(" -- ").count(), 5);
    }

    proptest! {
        #[test]
        fn json_round_trip(g in random_graph()) {
            prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        }
    }
}
