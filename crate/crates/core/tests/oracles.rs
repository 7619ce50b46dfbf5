//! Independent brute-force oracles checked against the library.

use num_traits::{One, Zero};
use proptest::prelude::*;

use prime_spectra::graph::{
    adjacency_matrix, bridge_graph, complement, cycle5, duplicate_vertex, find_isomorphism,
    reseminant_tilde, suspension_graph, BridgeParams, Graph,
};
use prime_spectra::linalg::{char_poly, det_bareiss, inverse_exact, rank};
use prime_spectra::recognition::{is_minimal_prime, is_minimally_connected_prime, is_prime_graph};
use prime_spectra::{BigInt, BigRational, IntMatrix};

fn bp(m: usize, n: usize) -> BridgeParams {
    BridgeParams::new(m, n).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

/// Sum over all permutations.
fn leibniz(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    permutations(n)
        .iter()
        .map(|p| {
            let term: i64 = (0..n).map(|i| a[i][p[i]]).product();
            if inversions(p) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn dense(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.n()).map(|i| (0..g.n()).map(|j| g.has_edge(i, j) as i64).collect()).collect()
}

/// Plain rational Gaussian elimination with partial pivoting on the first
/// nonzero entry.
fn gauss_det(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

/// `det(tI - A)` at `t = 0..=n`, then Lagrange interpolation.
fn interpolated_charpoly(g: &Graph) -> Vec<BigRational> {
    let n = g.n();
    let a = dense(g);
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|&t| {
            let m: Vec<Vec<BigRational>> = (0..n)
                .map(|i| (0..n).map(|j| q(if i == j { t } else { 0 } - a[i][j])).collect())
                .collect();
            gauss_det(&m)
        })
        .collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (i, yi) in ys.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c.clone();
                next[d] -= c * q(xj);
            }
            basis = next;
            denom *= q(xs[i] - xj);
        }
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * yi / &denom;
        }
    }
    coeffs
}

fn has_triangle(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

/// Tries all `3^n` colourings.
fn brute_three_colorable(g: &Graph) -> bool {
    let n = g.n();
    let edges = g.edges();
    let total = 3usize.pow(n as u32);
    (0..total).any(|mut code| {
        let mut c = vec![0usize; n];
        for slot in c.iter_mut() {
            *slot = code % 3;
            code /= 3;
        }
        edges.iter().all(|&(u, v)| c[u] != c[v])
    })
}

fn brute_prime(g: &Graph) -> bool {
    let c = complement(g);
    !has_triangle(&c) && brute_three_colorable(&c)
}

fn brute_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..g.n() {
            if g.has_edge(u, v) && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn brute_minimal(g: &Graph) -> bool {
    g.n() > 1
        && brute_connected(g)
        && brute_prime(g)
        && g.edges().iter().all(|&(u, v)| !brute_prime(&g.without_edge(u, v).unwrap()))
}

fn brute_minimally_connected(g: &Graph) -> bool {
    g.n() > 1
        && brute_connected(g)
        && brute_prime(g)
        && g.edges().iter().all(|&(u, v)| {
            let h = g.without_edge(u, v).unwrap();
            !(brute_connected(&h) && brute_prime(&h))
        })
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && permutations(g.n()).iter().any(|p| g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
}

fn small_instances() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for m in 1..=5 {
        for n in 1..=m {
            out.push((format!("B({m},{n})"), bridge_graph(bp(m, n)).unwrap()));
            if m + n >= 3 {
                out.push((format!("S({m},{n})"), suspension_graph(bp(m, n)).unwrap()));
            }
        }
    }
    for n in 0..=3 {
        out.push((format!("R~_{n}"), reseminant_tilde(n)));
    }
    out.retain(|(_, g)| g.n() <= 8);
    out
}

#[test]
fn leibniz_matches_bareiss_on_families() {
    for (name, g) in small_instances() {
        let want = BigInt::from(leibniz(&dense(&g)));
        assert_eq!(det_bareiss(&adjacency_matrix(&g)).unwrap(), want, "{name}");
    }
    assert_eq!(leibniz(&dense(&cycle5())), 2);
}

#[test]
fn interpolation_matches_charpoly_on_families() {
    for (name, g) in small_instances() {
        let got: Vec<BigRational> = char_poly(&adjacency_matrix(&g))
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        assert_eq!(got, interpolated_charpoly(&g), "{name}");
    }
}

#[test]
fn inverse_times_matrix_is_identity() {
    for (name, g) in small_instances() {
        let a = adjacency_matrix(&g);
        let d = det_bareiss(&a).unwrap();
        match inverse_exact(&a) {
            Ok(inv) => {
                assert!(!d.is_zero(), "{name}");
                let prod = &a.to_rational() * &inv;
                assert_eq!(prod, prime_spectra::RatMatrix::identity(g.n()), "{name}");
                assert_eq!(rank(&a), g.n());
            }
            Err(_) => assert!(d.is_zero(), "{name}"),
        }
    }
}

#[test]
fn recognition_matches_brute_force_on_families() {
    for (name, g) in small_instances() {
        assert_eq!(is_prime_graph(&g).is_prime_graph, brute_prime(&g), "{name}");
        assert_eq!(is_minimal_prime(&g).holds, brute_minimal(&g), "{name}");
        assert_eq!(is_minimally_connected_prime(&g).holds, brute_minimally_connected(&g), "{name}");
    }
}

#[test]
fn reseminant_is_suspension_by_brute_force() {
    for n in 0..=3 {
        let r = reseminant_tilde(n);
        let s = suspension_graph(bp(n + 2, 2)).unwrap();
        assert!(brute_isomorphic(&r, &s), "n = {n}");
        assert!(find_isomorphism(&r, &s).is_some());
    }
}

#[test]
fn fig2_graph_is_minimal_prime_by_brute_force() {
    let g = duplicate_vertex(&duplicate_vertex(&cycle5(), 0).unwrap(), 1).unwrap();
    assert!(brute_minimal(&g));
    assert!(is_minimal_prime(&g).holds);
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn int_matrix_strategy(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-4i64..=4, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_equals_leibniz(rows in int_matrix_strategy(6)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_i64_rows(&refs).unwrap();
        prop_assert_eq!(det_bareiss(&m).unwrap(), BigInt::from(leibniz(&rows)));
    }

    #[test]
    fn charpoly_equals_interpolation(g in graph_strategy(7)) {
        let got: Vec<BigRational> = char_poly(&adjacency_matrix(&g))
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        prop_assert_eq!(got, interpolated_charpoly(&g));
    }

    #[test]
    fn prime_predicate_equals_brute_force(g in graph_strategy(8)) {
        prop_assert_eq!(is_prime_graph(&g).is_prime_graph, brute_prime(&g));
    }

    #[test]
    fn minimality_equals_brute_force(g in graph_strategy(6)) {
        prop_assert_eq!(is_minimal_prime(&g).holds, brute_minimal(&g));
        prop_assert_eq!(is_minimally_connected_prime(&g).holds, brute_minimally_connected(&g));
    }

    #[test]
    fn isomorphism_equals_brute_force(g in graph_strategy(6), h in graph_strategy(6)) {
        prop_assert_eq!(find_isomorphism(&g, &h).is_some(), brute_isomorphic(&g, &h));
    }

    #[test]
    fn relabelled_graph_is_isomorphic(g in graph_strategy(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        let iso = find_isomorphism(&g, &h);
        prop_assert!(iso.is_some_and(|i| i.verify(&g, &h)));
    }
}
