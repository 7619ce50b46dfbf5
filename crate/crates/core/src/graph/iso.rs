//! Isomorphism by colour refinement followed by backtracking.
//!
//! Aimed at graphs of up to roughly 25 vertices. Highly regular
//! non-isomorphic pairs can make the search exponential.

use std::collections::BTreeMap;

use serde::Serialize;

use super::Graph;

/// `mapping[v]` is the image in `h` of vertex `v` of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub mapping: Vec<usize>,
}

impl Isomorphism {
    /// Checks that the mapping is a bijection preserving adjacency both ways.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.n();
        if h.n() != n || self.mapping.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &w in &self.mapping {
            if w >= n || std::mem::replace(&mut seen[w], true) {
                return false;
            }
        }
        (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == h.has_edge(self.mapping[u], self.mapping[v])))
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Isomorphism> {
    let n = g.n();
    if h.n() != n || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine_colors(g, h);
    let mut hist_g = BTreeMap::new();
    let mut hist_h = BTreeMap::new();
    for (&a, &b) in cg.iter().zip(&ch) {
        *hist_g.entry(a).or_insert(0usize) += 1;
        *hist_h.entry(b).or_insert(0usize) += 1;
    }
    if hist_g != hist_h {
        return None;
    }
    let order = search_order(g, &cg, &hist_g);
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let search = Search { g, h, cg: &cg, ch: &ch, order: &order };
    search.extend(0, &mut mapping, &mut used).then_some(Isomorphism { mapping })
}

/// Joint 1-WL refinement of `g` and `h`, so colours are comparable.
fn refine_colors(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg = g.degrees();
    let mut ch = h.degrees();
    let mut classes = usize::MAX;
    loop {
        let sig = |graph: &Graph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbors(v).map(|w| col[w]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let mut palette = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| palette[s]).collect();
        ch = sh.iter().map(|s| palette[s]).collect();
        if palette.len() == classes {
            return (cg, ch);
        }
        classes = palette.len();
    }
}

/// Rare colours first, then stay adjacent to already-placed vertices so the
/// adjacency constraints bite early.
fn search_order(g: &Graph, colors: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let links = g.neighbors(v).filter(|&w| placed[w]).count();
                (usize::MAX - links, hist[&colors[v]], v)
            })
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
}

impl Search<'_> {
    fn extend(&self, depth: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in 0..self.h.n() {
            if used[w] || self.cg[v] != self.ch[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(mapping[u], w));
            if !consistent {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if self.extend(depth + 1, mapping, used) {
                return true;
            }
            used[w] = false;
            mapping[v] = usize::MAX;
        }
        false
    }
}
