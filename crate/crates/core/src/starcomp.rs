//! Star sets and star complements, checked exactly over `ℚ(√d)`.
//!
//! `X` is a star set for `μ` iff `μ` is not an eigenvalue of the complement
//! `C = A_{V∖X}` and `μI − A_X = B(μI − C)⁻¹Bᵗ`. Inverses are never formed:
//! `(μI − C)Z = Bᵗ` is solved and `BZ` compared entrywise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::SignedGraph;
use crate::matrix::IntMatrix;
use crate::qext::{QExt, QMatrix};

fn complement(n: usize, x: &[usize]) -> Result<Vec<usize>> {
    let mut seen = vec![false; n];
    for &v in x {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if seen[v] {
            return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
        }
        seen[v] = true;
    }
    if x.is_empty() || x.len() == n {
        return Err(Error::InvalidPartition(format!(
            "X must be a nonempty proper subset, got {} of {n} vertices",
            x.len()
        )));
    }
    Ok((0..n).filter(|&v| !seen[v]).collect())
}

/// `A_Σ = [[A_X, B], [Bᵗ, A_Y]]` for a split `X ⊔ Y = V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub a_x: IntMatrix,
    pub a_y: IntMatrix,
    pub b: IntMatrix,
}

impl StarPartition {
    /// `Y` is the complement of `X`; both keep the order given.
    pub fn new(g: &SignedGraph, x: &[usize]) -> Result<Self> {
        let y = complement(g.order(), x)?;
        Ok(Self::from_parts(g, x.to_vec(), y))
    }

    /// Checks that `X` and `Y` partition the vertex set.
    pub fn with_sets(g: &SignedGraph, x: &[usize], y: &[usize]) -> Result<Self> {
        let mut expected = complement(g.order(), x)?;
        let mut got = y.to_vec();
        expected.sort_unstable();
        got.sort_unstable();
        if expected != got {
            return Err(Error::InvalidPartition("X and Y must partition the vertex set".into()));
        }
        Ok(Self::from_parts(g, x.to_vec(), y.to_vec()))
    }

    fn from_parts(g: &SignedGraph, x: Vec<usize>, y: Vec<usize>) -> Self {
        let a = g.adjacency();
        StarPartition {
            a_x: a.submatrix(&x, &x),
            a_y: a.submatrix(&y, &y),
            b: a.submatrix(&x, &y),
            x,
            y,
        }
    }

    /// `μI − A_X = B(μI − A_Y)⁻¹Bᵗ`, i.e. `X` is a star set for `μ`.
    pub fn x_is_star_set(&self, mu: &QExt) -> Result<bool> {
        reconstruction(&self.a_x, &self.a_y, &self.b, mu, "A_Y")
    }

    /// `μI − A_Y = Bᵗ(μI − A_X)⁻¹B`, i.e. `Y` is a star set for `μ`.
    pub fn y_is_star_set(&self, mu: &QExt) -> Result<bool> {
        reconstruction(&self.a_y, &self.a_x, &self.b.transpose(), mu, "A_X")
    }

    /// `X` is a star set for `λ1` and `Y` one for `λ2`.
    pub fn verify(&self, lambda1: &QExt, lambda2: &QExt) -> Result<bool> {
        Ok(self.x_is_star_set(lambda1)? && self.y_is_star_set(lambda2)?)
    }
}

fn reconstruction(a_x: &IntMatrix, c: &IntMatrix, b: &IntMatrix, mu: &QExt, name: &str) -> Result<bool> {
    let lhs = QMatrix::shifted(mu, a_x);
    let b_q = QMatrix::from_int(b);
    let z = QMatrix::shifted(mu, c)
        .solve(&b_q.transpose())
        .ok_or_else(|| Error::SingularBlock(format!("{mu} is an eigenvalue of {name}, so this is not a star set")))?;
    Ok(b_q.mul(&z).first_difference(&lhs).is_none())
}

/// Exact star-set test for `X` and `μ`. A singular `μI − C` is an error.
pub fn is_star_set(g: &SignedGraph, x: &[usize], mu: &QExt) -> Result<bool> {
    StarPartition::new(g, x)?.x_is_star_set(mu)
}

/// Both identities for the split `X, Y` with `X` paired with `λ1`.
pub fn verify_partition(g: &SignedGraph, x: &[usize], y: &[usize], lambda1: &QExt, lambda2: &QExt) -> Result<bool> {
    StarPartition::with_sets(g, x, y)?.verify(lambda1, lambda2)
}

/// A star set of size `m` for `μ`, or `None` if `μ` does not have
/// multiplicity `m`.
///
/// The columns of `μI − A` are scanned from last to first keeping a maximal
/// independent set `J`; the principal submatrix on `J` of a symmetric matrix
/// is then nonsingular, so `V∖J` is a star set.
pub fn find_star_set(g: &SignedGraph, mu: &QExt, m: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let shifted = QMatrix::shifted(mu, g.adjacency());
    let j = shifted.independent_columns(true);
    if n - j.len() != m || m == 0 || m == n {
        return None;
    }
    let x = complement(n, &j).ok()?;
    // X = V∖J; complement(J) is exactly that
    matches!(is_star_set(g, &x, mu), Ok(true)).then_some(x)
}

/// Lexicographically first `X` of size `m` such that `X, V∖X` verifies for
/// `(λ1, λ2)`. Splits are tried in batches through `exec`.
pub fn find_partition(
    g: &SignedGraph,
    lambda1: &QExt,
    lambda2: &QExt,
    m: usize,
    limit: usize,
    exec: Execution,
) -> Option<StarPartition> {
    let n = g.order();
    let mut combos = Combinations::new(n, m);
    let mut tried = 0;
    while tried < limit {
        let batch: Vec<Vec<usize>> = combos.by_ref().take(256.min(limit - tried)).collect();
        if batch.is_empty() {
            return None;
        }
        tried += batch.len();
        let hits = exec.map(&batch, |x| {
            let p = StarPartition::new(g, x).ok()?;
            matches!(p.verify(lambda1, lambda2), Ok(true)).then_some(p)
        });
        if let Some(p) = hits.into_iter().flatten().next() {
            return Some(p);
        }
    }
    None
}

/// `m`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, m: usize) -> Self {
        Combinations {
            n,
            current: (m <= n).then(|| (0..m).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let m = out.len();
        let mut next = out.clone();
        if let Some(i) = (0..m).rev().find(|&i| next[i] < self.n - m + i) {
            next[i] += 1;
            for j in i + 1..m {
                next[j] = next[j - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Outcome of a star-set or partition check, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub lambda1: String,
    pub lambda2: Option<String>,
    pub pass: bool,
    pub error: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k2_hand_case() {
        let g = SignedGraph::complete_positive(2);
        assert_eq!(is_star_set(&g, &[0], &QExt::one()), Ok(true));
        assert_eq!(find_star_set(&g, &QExt::one(), 1), Some(vec![0]));
        assert_eq!(verify_partition(&g, &[0], &[1], &QExt::one(), &QExt::from_int(-1)), Ok(true));
        assert!(matches!(is_star_set(&g, &[0, 1], &QExt::one()), Err(Error::InvalidPartition(_))));
        assert!(matches!(is_star_set(&g, &[], &QExt::one()), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn singular_complement() {
        // μ = 0 is an eigenvalue of the single-vertex complement
        let g = SignedGraph::complete_positive(2);
        assert!(matches!(is_star_set(&g, &[0], &QExt::zero()), Err(Error::SingularBlock(_))));
    }

    #[test]
    fn combinations_order() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(6, 3).count(), 20);
    }

    #[test]
    fn pentagon_over_sqrt5() {
        let g = fixtures::pentagon();
        let (l1, l2) = (QExt::sqrt(5), -QExt::sqrt(5));
        let x = find_star_set(&g, &l1, 3).unwrap();
        assert_eq!(is_star_set(&g, &x, &l1), Ok(true));
        let p = find_partition(&g, &l1, &l2, 3, 20, Execution::Sequential).unwrap();
        assert_eq!(p.verify(&l1, &l2), Ok(true));
        let par = find_partition(&g, &l1, &l2, 3, 20, Execution::Parallel).unwrap();
        assert_eq!(p, par);
        assert_eq!(find_star_set(&g, &l1, 2), None);
    }

    #[test]
    fn permutation_invariance() {
        let g = fixtures::pentagon();
        let mu = QExt::sqrt(5);
        let x = find_star_set(&g, &mu, 3).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.permute(&perm).unwrap();
        let hx: Vec<usize> = x.iter().map(|&v| perm[v]).collect();
        assert_eq!(is_star_set(&h, &hx, &mu), Ok(true));
    }
}
