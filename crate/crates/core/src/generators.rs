//! Small graph generators for tests, benches and controls.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::SignedGraph;

pub fn cycle(n: usize) -> SignedGraph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n), 1)).collect();
    SignedGraph::from_edge_list(n, &edges).expect("simple cycle")
}

/// The Petersen graph, all edges positive.
pub fn petersen() -> SignedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5, 1));
        edges.push((i, i + 5, 1));
        edges.push((5 + i, 5 + (i + 2) % 5, 1));
    }
    SignedGraph::from_edge_list(10, &edges).expect("simple graph")
}

/// Same ground with every sign drawn uniformly.
pub fn random_signing<R: Rng + ?Sized>(g: &SignedGraph, rng: &mut R) -> SignedGraph {
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v, _)| (u, v, if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    SignedGraph::from_edge_list(g.order(), &edges).expect("same ground")
}

/// `G(n, p)` with uniform random signs.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, if rng.gen_bool(0.5) { 1 } else { -1 }));
            }
        }
    }
    SignedGraph::from_edge_list(n, &edges).expect("simple graph")
}

/// A uniformly signed `k`-regular graph on `n` vertices from the pairing
/// model, retrying until the pairing is simple. `None` if `nk` is odd,
/// `k ≥ n`, or 1000 attempts fail.
pub fn random_regular<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Option<SignedGraph> {
    if !(n * k).is_multiple_of(2) || (k >= n && k > 0) {
        return None;
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..1000 {
        points.shuffle(rng);
        let mut adj = vec![false; n * n];
        let mut edges = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || adj[u * n + v] {
                continue 'attempt;
            }
            adj[u * n + v] = true;
            edges.push((u, v, if rng.gen_bool(0.5) { 1 } else { -1 }));
        }
        return SignedGraph::from_edge_list(n, &edges).ok();
    }
    None
}

/// Random vertex subset, each vertex with probability 1/2.
pub fn random_subset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        assert_eq!(cycle(5).regularity(), Some(2));
        let p = petersen();
        assert_eq!((p.edge_count(), p.regularity()), (15, Some(3)));
    }

    #[test]
    fn regular_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, k) in [(6, 3), (10, 4), (12, 5), (8, 0)] {
            let g = random_regular(n, k, &mut rng).unwrap();
            assert_eq!(g.regularity(), Some(k));
        }
        assert!(random_regular(5, 3, &mut rng).is_none());
    }
}
