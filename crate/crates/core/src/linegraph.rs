//! Incidence matrices and signed line graphs.
//!
//! For an edge `uv` with `u < v` the column has `+1` at `u` and `−σ(uv)` at
//! `v`, so `HHᵗ = D − A` and `A_Λ = 2I − HᵗH`. With this choice `Λ(K₅⁺)`
//! has spectrum `[(−3)^4, 2^6]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matrix::{IntMatrix, SignedMatrix};
use crate::spectra::eigen::{JacobiSolver, Tolerances};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub matrix: SignedMatrix,
    /// Column order: edges `(u, v, σ)` with `u < v`, lexicographic.
    pub edges: Vec<(usize, usize, i64)>,
}

impl IncidenceMatrix {
    /// Negate the listed columns; any incidence matrix of the same graph is
    /// obtained this way.
    pub fn negate_columns(&self, cols: &[usize]) -> IncidenceMatrix {
        let mut h = self.matrix.as_int().clone();
        for &c in cols {
            for r in 0..h.rows() {
                h.set(r, c, -h.get(r, c));
            }
        }
        IncidenceMatrix {
            matrix: SignedMatrix::new(h).expect("negation keeps signs"),
            edges: self.edges.clone(),
        }
    }
}

pub fn incidence(g: &SignedGraph) -> IncidenceMatrix {
    let edges = g.edges();
    let mut h = IntMatrix::zeros(g.order(), edges.len());
    for (c, &(u, v, s)) in edges.iter().enumerate() {
        h.set(u, c, 1);
        h.set(v, c, -s);
    }
    IncidenceMatrix {
        matrix: SignedMatrix::new(h).expect("entries are signs"),
        edges,
    }
}

/// `Λ(Σ)` on the edges of `Σ`, in the order of [`SignedGraph::edges`].
pub fn line_graph(g: &SignedGraph) -> Result<SignedGraph> {
    line_graph_from_incidence(&incidence(g))
}

pub fn line_graph_from_incidence(h: &IncidenceMatrix) -> Result<SignedGraph> {
    let m = h.matrix.cols();
    let adj = IntMatrix::scalar(m, 2).sub(&h.matrix.as_int().gram_cols())?;
    for i in 0..m {
        for j in 0..m {
            let v = adj.get(i, j);
            if !(-1..=1).contains(&v) {
                return Err(Error::InvalidEntry { row: i, col: j, value: v });
            }
        }
    }
    SignedGraph::from_adjacency(adj)
}

/// Predicted against computed spectrum of `Λ(Σ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineSpectrumReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    /// `b(Σ)`: balanced components, equal to the multiplicity of `k`.
    pub balanced: usize,
    pub expected: Vec<f64>,
    pub actual: Vec<f64>,
    pub max_error: f64,
    pub pass: bool,
}

/// Check that `Λ(Σ)` has eigenvalues `λᵢ − k + 2` for every eigenvalue
/// `λᵢ ≠ k` of `Σ`, plus `2` with multiplicity `m − n + b(Σ)`.
pub fn verify_line_spectrum(g: &SignedGraph, solver: &JacobiSolver) -> Result<LineSpectrumReport> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    let n = g.order();
    let m = g.edge_count();
    let balanced = g.balanced_components().balanced_count();
    let values = solver.eigenvalues(g.adjacency())?;
    // λ = k occurs exactly b(Σ) times; drop the largest b(Σ) values
    let mut expected: Vec<f64> = values[..n - balanced].iter().map(|l| l - k as f64 + 2.0).collect();
    expected.extend(std::iter::repeat_n(2.0, m + balanced - n));
    expected.sort_by(f64::total_cmp);
    let actual = if m == 0 {
        vec![]
    } else {
        solver.eigenvalues(line_graph(g)?.adjacency())?
    };
    let max_error = expected
        .iter()
        .zip(&actual)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let dropped_ok = values[n - balanced..].iter().all(|l| (l - k as f64).abs() < Tolerances::default().cluster);
    let pass = expected.len() == actual.len() && max_error < 1e-6 && dropped_ok;
    Ok(LineSpectrumReport {
        k,
        n,
        m,
        balanced,
        expected,
        actual,
        max_error,
        pass,
    })
}

/// `−Λ(Kₙ⁺)`: `2(n−2)`-regular on `C(n,2)` vertices with spectrum
/// `[(n−2)^{n−1}, (−2)^{C(n,2)−n+1}]`.
pub fn neg_line_complete(n: usize) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    Ok(line_graph(&SignedGraph::complete_positive(n))?.negate())
}

/// Expected `(t, k, m1, m2)` for [`neg_line_complete`].
pub fn neg_line_complete_parameters(n: usize) -> (i64, i64, usize, usize) {
    let edges = n * (n - 1) / 2;
    (n as i64 - 4, 2 * (n as i64 - 2), n - 1, edges - n + 1)
}
