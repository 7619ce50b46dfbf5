//! Prime-graph recognition for solvable groups.
//!
//! A graph is the prime graph of some solvable group exactly when its
//! complement is triangle-free and 3-colourable. The minimal and
//! minimally-connected variants add per-edge conditions on top of that.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{complement, cycle5, is_isomorphic, Graph};

/// Some triangle of `g`, smallest vertices first.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for (u, v) in g.edges() {
        let mut common = g.neighborhood(u).clone();
        common.intersect_with(g.neighborhood(v));
        if let Some(w) = common.ones().find(|&w| w > v) {
            return Some([u, v, w]);
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// A proper colouring with colours `0..3`, if one exists.
///
/// Exact backtracking, DSATUR order (most-constrained vertex first, ties by
/// degree). Fine up to about 30 vertices.
pub fn three_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut colors = vec![None; g.n()];
    dsatur(g, &mut colors).then(|| colors.into_iter().map(|c| c.expect("all coloured")).collect())
}

pub fn is_three_colorable(g: &Graph) -> bool {
    three_coloring(g).is_some()
}

fn dsatur(g: &Graph, colors: &mut [Option<u8>]) -> bool {
    let blocked = |colors: &[Option<u8>], v: usize| {
        g.neighbors(v).filter_map(|w| colors[w]).fold(0u8, |acc, c| acc | (1 << c))
    };
    let next = (0..g.n())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| (blocked(colors, v).count_ones(), g.degree(v), std::cmp::Reverse(v)));
    let Some(v) = next else {
        return true;
    };
    let mask = blocked(colors, v);
    // a fresh colour is interchangeable with any other unused one
    let used = colors.iter().flatten().fold(0u8, |acc, &c| acc | (1 << c));
    let mut fresh_tried = false;
    for c in 0..3u8 {
        if mask & (1 << c) != 0 {
            continue;
        }
        if used & (1 << c) == 0 {
            if fresh_tried {
                continue;
            }
            fresh_tried = true;
        }
        colors[v] = Some(c);
        if dsatur(g, colors) {
            return true;
        }
    }
    colors[v] = None;
    false
}

/// The two complement conditions, each with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeGraphCheck {
    pub complement_triangle_free: bool,
    pub complement_triangle: Option<[usize; 3]>,
    pub complement_three_colorable: bool,
    pub complement_coloring: Option<Vec<u8>>,
    pub is_prime_graph: bool,
}

/// Raw complement properties; connectivity is not part of this predicate.
pub fn is_prime_graph(g: &Graph) -> PrimeGraphCheck {
    let c = complement(g);
    let triangle = find_triangle(&c);
    let coloring = three_coloring(&c);
    PrimeGraphCheck {
        complement_triangle_free: triangle.is_none(),
        complement_three_colorable: coloring.is_some(),
        is_prime_graph: triangle.is_none() && coloring.is_some(),
        complement_triangle: triangle,
        complement_coloring: coloring,
    }
}

fn prime(g: &Graph) -> bool {
    let c = complement(g);
    is_triangle_free(&c) && is_three_colorable(&c)
}

/// Outcome of a per-edge minimality predicate.
///
/// When `holds` is false and the graph itself qualified, `witness` is an
/// edge whose removal keeps the relevant property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeVerdict {
    pub holds: bool,
    pub witness: Option<[usize; 2]>,
}

impl EdgeVerdict {
    fn from_witness(witness: Option<(usize, usize)>) -> Self {
        EdgeVerdict { holds: witness.is_none(), witness: witness.map(|(u, v)| [u, v]) }
    }

    const UNQUALIFIED: EdgeVerdict = EdgeVerdict { holds: false, witness: None };
}

fn qualifies(g: &Graph) -> bool {
    g.n() > 1 && g.is_connected() && prime(g)
}

fn first_edge(g: &Graph, keeps: impl Fn(&Graph) -> bool + Sync) -> Option<(usize, usize)> {
    g.edges()
        .into_par_iter()
        .filter(|&(u, v)| keeps(&g.without_edge(u, v).expect("edge exists")))
        .min()
}

/// Every edge removal leaves a graph that is no longer a prime graph.
pub fn is_minimal_prime(g: &Graph) -> EdgeVerdict {
    if !qualifies(g) {
        return EdgeVerdict::UNQUALIFIED;
    }
    EdgeVerdict::from_witness(first_edge(g, prime))
}

/// Every edge removal disconnects the graph or leaves a non-prime graph.
pub fn is_minimally_connected_prime(g: &Graph) -> EdgeVerdict {
    if !qualifies(g) {
        return EdgeVerdict::UNQUALIFIED;
    }
    EdgeVerdict::from_witness(first_edge(g, |h| h.is_connected() && prime(h)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub edges: usize,
    pub connected: bool,
    pub complement_triangle_free: bool,
    pub complement_triangle: Option<[usize; 3]>,
    pub complement_three_colorable: bool,
    pub complement_coloring: Option<Vec<u8>>,
    pub is_prime_graph: bool,
    pub is_minimal_prime: bool,
    pub minimal_prime_witness: Option<[usize; 2]>,
    pub is_minimally_connected_prime: bool,
    pub minimally_connected_witness: Option<[usize; 2]>,
}

pub fn classify(g: &Graph) -> ClassificationReport {
    let p = is_prime_graph(g);
    let minimal = is_minimal_prime(g);
    let mc = is_minimally_connected_prime(g);
    ClassificationReport {
        order: g.n(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        complement_triangle_free: p.complement_triangle_free,
        complement_triangle: p.complement_triangle,
        complement_three_colorable: p.complement_three_colorable,
        complement_coloring: p.complement_coloring,
        is_prime_graph: p.is_prime_graph,
        is_minimal_prime: minimal.holds,
        minimal_prime_witness: minimal.witness,
        is_minimally_connected_prime: mc.holds,
        minimally_connected_witness: mc.witness,
    }
}

/// A maximal induced `K⁻`: a clique on `vertex_set` minus `missing_edge`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct KMinusWitness {
    pub vertex_set: Vec<usize>,
    pub missing_edge: [usize; 2],
}

/// All maximal induced `K⁻` subgraphs with at least `min_size` vertices.
///
/// For a non-adjacent pair `u, v`, the sets with missing edge `uv` are
/// `{u, v}` plus a clique in the common neighbourhood, and such a set is
/// maximal exactly when that clique is. Exponential in the worst case.
pub fn maximal_kminus_subgraphs(g: &Graph, min_size: usize) -> Vec<KMinusWitness> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut common = g.neighborhood(u).clone();
            common.intersect_with(g.neighborhood(v));
            if common.count_ones(..) + 2 < min_size {
                continue;
            }
            let mut cliques = Vec::new();
            bron_kerbosch(g, FixedBitSet::with_capacity(n), common, FixedBitSet::with_capacity(n), &mut cliques);
            for c in cliques {
                if c.count_ones(..) + 2 < min_size {
                    continue;
                }
                let mut set: Vec<usize> = c.ones().chain([u, v]).collect();
                set.sort_unstable();
                out.push(KMinusWitness { vertex_set: set, missing_edge: [u, v] });
            }
        }
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: FixedBitSet,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<FixedBitSet>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(&x).max_by_key(|&w| g.neighborhood(w).intersection(&p).count()).expect("p nonempty");
    let candidates: Vec<usize> = p.difference(g.neighborhood(pivot)).collect();
    for w in candidates {
        let mut r2 = r.clone();
        r2.insert(w);
        let mut p2 = p.clone();
        p2.intersect_with(g.neighborhood(w));
        let mut x2 = x.clone();
        x2.intersect_with(g.neighborhood(w));
        bron_kerbosch(g, r2, p2, x2, out);
        p.set(w, false);
        x.insert(w);
    }
}

/// Pairs of adjacent degree-2 vertices.
pub fn adjacent_degree_two_pairs(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().into_iter().filter(|&(u, v)| g.degree(u) == 2 && g.degree(v) == 2).map(|(u, v)| [u, v]).collect()
}

/// Structural test for membership in `R̃` (one cycle vertex duplicated
/// repeatedly). Only meaningful when `g` is already known to be reseminant.
pub fn is_in_r_tilde(g: &Graph) -> bool {
    if g.n() < 5 {
        return false;
    }
    if g.n() == 5 && is_isomorphic(g, &cycle5()) {
        return true;
    }
    !adjacent_degree_two_pairs(g).is_empty() && maximal_kminus_subgraphs(g, 4).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        bridge_graph, complete_graph, duplicate_vertex, reseminant_tilde, BridgeParams,
    };

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    fn bridge(m: usize, n: usize) -> Graph {
        bridge_graph(BridgeParams::new(m, n).unwrap()).unwrap()
    }

    fn duplicated(vs: &[usize]) -> Graph {
        vs.iter().fold(cycle5(), |g, &v| duplicate_vertex(&g, v).unwrap())
    }

    fn proper(g: &Graph, col: &[u8]) -> bool {
        g.edges().iter().all(|&(u, v)| col[u] != col[v]) && col.iter().all(|&c| c < 3)
    }

    #[test]
    fn triangles() {
        assert!(is_triangle_free(&cycle5()));
        assert_eq!(find_triangle(&complete_graph(3).unwrap()), Some([0, 1, 2]));
        assert!(is_triangle_free(&complement(&bridge(4, 3))));
    }

    #[test]
    fn colorings() {
        let c = three_coloring(&cycle5()).unwrap();
        assert!(proper(&cycle5(), &c));
        assert!(!is_three_colorable(&complete_graph(4).unwrap()));
        let r3c = complement(&reseminant_tilde(3));
        assert!(proper(&r3c, &three_coloring(&r3c).unwrap()));
        assert!(is_three_colorable(&petersen()));
        assert!(is_three_colorable(&Graph::empty(0)));
    }

    #[test]
    fn prime_graph_flags() {
        assert!(is_prime_graph(&bridge(4, 3)).is_prime_graph);
        let k3 = is_prime_graph(&complete_graph(3).unwrap());
        assert!(k3.is_prime_graph && k3.complement_coloring.is_some());
        let pet = is_prime_graph(&petersen());
        assert!(!pet.complement_triangle_free);
        assert!(!pet.is_prime_graph);
        let [a, b, c] = pet.complement_triangle.unwrap();
        assert!(!petersen().has_edge(a, b) && !petersen().has_edge(b, c) && !petersen().has_edge(a, c));
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_prime(&reseminant_tilde(2)).holds);
        assert!(is_minimal_prime(&cycle5()).holds);
        let b43 = is_minimal_prime(&bridge(4, 3));
        assert!(!b43.holds);
        let [u, v] = b43.witness.unwrap();
        assert!(prime(&bridge(4, 3).without_edge(u, v).unwrap()));
        assert!(is_minimally_connected_prime(&bridge(4, 3)).holds);
        assert!(is_minimally_connected_prime(&reseminant_tilde(1)).holds);
    }

    #[test]
    fn c4_is_not_minimally_connected() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let verdict = is_minimally_connected_prime(&c4);
        assert_eq!(verdict, EdgeVerdict { holds: false, witness: Some([0, 1]) });
    }

    #[test]
    fn k4_with_pendant_path_is_minimally_connected() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
            .unwrap();
        assert!(is_prime_graph(&g).is_prime_graph);
        assert!(is_minimally_connected_prime(&g).holds);
        assert!(!is_minimal_prime(&g).holds);
    }

    #[test]
    fn unqualified_inputs() {
        assert_eq!(is_minimal_prime(&Graph::empty(1)), EdgeVerdict::UNQUALIFIED);
        assert_eq!(is_minimal_prime(&Graph::empty(3)), EdgeVerdict::UNQUALIFIED);
        assert_eq!(is_minimally_connected_prime(&petersen()), EdgeVerdict::UNQUALIFIED);
    }

    #[test]
    fn kminus_examples() {
        let w = maximal_kminus_subgraphs(&reseminant_tilde(2), 4);
        assert_eq!(w, vec![KMinusWitness { vertex_set: vec![0, 1, 4, 5, 6], missing_edge: [1, 4] }]);
        assert!(maximal_kminus_subgraphs(&cycle5(), 4).is_empty());
        // adjacent duplicated vertices: {0,1,4,5} {0,1,2,6} {1,2,5,6} {0,4,5,6}
        assert_eq!(maximal_kminus_subgraphs(&duplicated(&[0, 1]), 4).len(), 4);
        assert!(maximal_kminus_subgraphs(&duplicated(&[0, 2]), 4).len() >= 2);
        // every witness really is a K⁻
        for w in maximal_kminus_subgraphs(&duplicated(&[0, 0, 1, 3]), 4) {
            let mut set = FixedBitSet::with_capacity(9);
            w.vertex_set.iter().for_each(|&v| set.insert(v));
            let k = w.vertex_set.len();
            assert_eq!(duplicated(&[0, 0, 1, 3]).induced_edge_count(&set), k * (k - 1) / 2 - 1);
        }
    }

    #[test]
    fn r_tilde_membership() {
        assert!(is_in_r_tilde(&cycle5()));
        assert!(is_in_r_tilde(&reseminant_tilde(4)));
        assert!(!is_in_r_tilde(&duplicated(&[0, 1])));
        assert!(!is_in_r_tilde(&duplicated(&[0, 2])));
        assert!(!is_in_r_tilde(&complete_graph(4).unwrap()));
    }

    #[test]
    fn report_json_field_names() {
        let json = serde_json::to_value(classify(&bridge(4, 3))).unwrap();
        assert_eq!(json["is_minimally_connected_prime"], true);
        assert_eq!(json["is_minimal_prime"], false);
        assert!(json["minimal_prime_witness"].is_array());
        assert!(json["minimally_connected_witness"].is_null());
    }
}
