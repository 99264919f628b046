//! Signed graphs: a simple ground graph plus a `±1` signature, stored as a
//! dense symmetric adjacency matrix with zero diagonal.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    adj: IntMatrix,
}

/// Connected components of the ground graph and whether each is balanced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundPartitionInfo {
    pub components: Vec<Vec<usize>>,
    pub balanced: Vec<bool>,
}

impl GroundPartitionInfo {
    /// `b(Σ)`: the number of balanced components.
    pub fn balanced_count(&self) -> usize {
        self.balanced.iter().filter(|&&b| b).count()
    }
}

impl SignedGraph {
    /// Build from an edge list `(u, v, sign)` on vertices `0..n`.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let mut adj = IntMatrix::zeros(n, n);
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, s) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if s != 1 && s != -1 {
                return Err(Error::InvalidSign { u, v, sign: s });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj.set(u, v, s);
            adj.set(v, u, s);
        }
        Ok(SignedGraph { adj })
    }

    /// Wrap an adjacency matrix after checking squareness, entry domain,
    /// symmetry and the zero diagonal.
    pub fn from_adjacency(adj: IntMatrix) -> Result<Self> {
        if !adj.is_square() {
            return Err(Error::NotSquare {
                rows: adj.rows(),
                cols: adj.cols(),
            });
        }
        let n = adj.rows();
        for i in 0..n {
            for j in 0..n {
                let v = adj.get(i, j);
                if !(-1..=1).contains(&v) {
                    return Err(Error::InvalidEntry { row: i, col: j, value: v });
                }
            }
            if adj.get(i, i) != 0 {
                return Err(Error::NonZeroDiagonal { vertex: i });
            }
        }
        if let Some((row, col)) = adj.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        Ok(SignedGraph { adj })
    }

    /// `K_n^+`.
    ///
    /// Panics if `n == 0`.
    pub fn complete_positive(n: usize) -> Self {
        assert!(n >= 1, "complete graph needs at least one vertex");
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    adj.set(i, j, 1);
                }
            }
        }
        SignedGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adj
    }

    pub fn sign(&self, u: usize, v: usize) -> i64 {
        self.adj.get(u, v)
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v) != 0
    }

    /// Edges `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let s = self.adj.get(u, v);
                if s != 0 {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.as_slice().iter().filter(|&&s| s != 0).count() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.adj
            .row(v)
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(u, &s)| (u, s))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row(v).iter().filter(|&&s| s != 0).count()
    }

    /// `Some(k)` iff every vertex has degree `k` in the ground graph.
    pub fn regularity(&self) -> Option<usize> {
        let n = self.order();
        if n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// `-Σ`: every sign flipped.
    pub fn negate(&self) -> SignedGraph {
        SignedGraph {
            adj: self.adj.scale(-1),
        }
    }

    /// Flip the signs of all edges with exactly one endpoint in `set`.
    pub fn switch(&self, set: &[usize]) -> Result<SignedGraph> {
        let n = self.order();
        let mut inside = vec![false; n];
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            inside[v] = true;
        }
        let mut adj = self.adj.clone();
        for i in 0..n {
            for j in 0..n {
                if inside[i] != inside[j] {
                    adj.set(i, j, -adj.get(i, j));
                }
            }
        }
        Ok(SignedGraph { adj })
    }

    /// Relabel vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SignedGraph> {
        let n = self.order();
        let mut hit = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut hit[p], true)) {
            return Err(Error::InvalidArgument(format!("not a permutation of 0..{n}")));
        }
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                adj.set(perm[i], perm[j], self.adj.get(i, j));
            }
        }
        Ok(SignedGraph { adj })
    }

    /// Induced signed subgraph on `vertices`, in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Result<SignedGraph> {
        let n = self.order();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        SignedGraph::from_adjacency(self.adj.submatrix(vertices, vertices))
    }

    /// Ground components via BFS, each with a balance flag. A component is
    /// balanced iff a potential `p: V -> {±1}` with `σ(uv) = p(u)p(v)` exists.
    pub fn balanced_components(&self) -> GroundPartitionInfo {
        let n = self.order();
        let mut potential = vec![0i64; n];
        let mut components = Vec::new();
        let mut balanced = Vec::new();
        for root in 0..n {
            if potential[root] != 0 {
                continue;
            }
            potential[root] = 1;
            let mut comp = vec![root];
            let mut ok = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for (v, s) in self.neighbors(u) {
                    let want = potential[u] * s;
                    if potential[v] == 0 {
                        potential[v] = want;
                        comp.push(v);
                        queue.push_back(v);
                    } else if potential[v] != want {
                        ok = false;
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
            balanced.push(ok);
        }
        GroundPartitionInfo { components, balanced }
    }

    pub fn is_connected(&self) -> bool {
        self.balanced_components().components.len() <= 1
    }

    /// Two-colouring test on the ground graph.
    pub fn is_bipartite_ground(&self) -> bool {
        // A bipartite ground is exactly one where the all-negative signing
        // is balanced.
        self.ground().negate().balanced_components().balanced.iter().all(|&b| b)
    }

    /// `|Σ|` as the all-positive signed graph.
    pub fn ground(&self) -> SignedGraph {
        SignedGraph {
            adj: IntMatrix::from_vec(
                self.order(),
                self.order(),
                self.adj.as_slice().iter().map(|s| s.abs()).collect(),
            )
            .expect("same shape"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k2_from_edges() {
        let g = SignedGraph::from_edge_list(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(g.adjacency(), &IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert_eq!(g.regularity(), Some(1));
        assert!(g.is_bipartite_ground());
    }

    #[test]
    fn edge_list_errors_name_the_pair() {
        assert_eq!(
            SignedGraph::from_edge_list(3, &[(0, 0, 1)]).unwrap_err(),
            Error::SelfLoop { vertex: 0 }
        );
        assert_eq!(
            SignedGraph::from_edge_list(3, &[(0, 1, 1), (1, 0, -1)]).unwrap_err(),
            Error::DuplicateEdge { u: 1, v: 0 }
        );
        assert_eq!(
            SignedGraph::from_edge_list(3, &[(0, 3, 1)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert!(matches!(
            SignedGraph::from_edge_list(3, &[(0, 1, 2)]),
            Err(Error::InvalidSign { .. })
        ));
    }

    #[test]
    fn from_adjacency_validates() {
        let asym = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(SignedGraph::from_adjacency(asym), Err(Error::NotSymmetric { .. })));
        let diag = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(
            SignedGraph::from_adjacency(diag).unwrap_err(),
            Error::NonZeroDiagonal { vertex: 0 }
        );
    }

    #[test]
    fn regularity_of_path_is_absent() {
        let p3 = SignedGraph::from_edge_list(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(p3.regularity(), None);
        assert_eq!(fixtures::pentagon().regularity(), Some(5));
    }

    #[test]
    fn negate_is_an_involution() {
        let g = fixtures::pentagon();
        assert_eq!(g.negate().negate(), g);
        let kn = SignedGraph::complete_positive(4);
        assert!(kn.negate().edges().iter().all(|&(_, _, s)| s == -1));
    }

    #[test]
    fn trivial_switchings() {
        let g = fixtures::pentagon();
        assert_eq!(g.switch(&[]).unwrap(), g);
        let all: Vec<usize> = (0..g.order()).collect();
        assert_eq!(g.switch(&all).unwrap(), g);
        assert_ne!(g.switch(&[0]).unwrap(), g);
    }

    #[test]
    fn balance() {
        let k5 = SignedGraph::complete_positive(5);
        let info = k5.balanced_components();
        assert_eq!(info.components.len(), 1);
        assert_eq!(info.balanced_count(), 1);

        let neg_triangle = SignedGraph::from_edge_list(3, &[(0, 1, -1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(neg_triangle.balanced_components().balanced_count(), 0);

        // Switching preserves balance.
        assert_eq!(k5.switch(&[1, 3]).unwrap().balanced_components().balanced_count(), 1);

        let two = SignedGraph::from_edge_list(4, &[(0, 1, -1), (2, 3, 1)]).unwrap();
        let info = two.balanced_components();
        assert_eq!(info.components, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(info.balanced_count(), 2);
    }

    #[test]
    fn bipartite_ground() {
        assert!(!fixtures::pentagon().is_bipartite_ground());
        let c4 = SignedGraph::from_edge_list(4, &[(0, 1, 1), (1, 2, -1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert!(c4.is_bipartite_ground());
        let c5 = SignedGraph::from_edge_list(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, -1)]).unwrap();
        assert!(!c5.is_bipartite_ground());
    }

    #[test]
    fn complete_positive_small() {
        let k2 = SignedGraph::complete_positive(2);
        assert_eq!(k2.edges(), vec![(0, 1, 1)]);
        assert_eq!(SignedGraph::complete_positive(6).regularity(), Some(5));
    }

    #[test]
    fn permute_and_induce() {
        let g = SignedGraph::from_edge_list(3, &[(0, 1, -1), (1, 2, 1)]).unwrap();
        let p = g.permute(&[2, 0, 1]).unwrap();
        assert_eq!(p.sign(2, 0), -1);
        assert_eq!(p.sign(0, 1), 1);
        assert!(g.permute(&[0, 0, 1]).is_err());
        let h = g.induced(&[1, 2]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1, 1)]);
    }
}
