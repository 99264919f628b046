//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Rotations are scheduled in round-robin order: each round annihilates
//! `n/2` disjoint off-diagonal pairs at once, so the row and column updates
//! of a round are independent and can run on the rayon pool. The schedule is
//! fixed, hence the output does not depend on the execution mode.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::matrix::IntMatrix;

/// Numerical tolerances shared by the float checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Jacobi stops once every off-diagonal magnitude is below this.
    pub offdiag: f64,
    /// Comparison of eigenvalue lists and residuals.
    pub compare: f64,
    /// Two sorted eigenvalues closer than this belong to one cluster.
    pub cluster: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            offdiag: 1e-12,
            compare: 1e-8,
            cluster: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct JacobiSolver {
    pub tol: f64,
    pub max_sweeps: usize,
    pub exec: Execution,
}

impl Default for JacobiSolver {
    fn default() -> Self {
        JacobiSolver {
            tol: Tolerances::default().offdiag,
            max_sweeps: 100,
            exec: Execution::default(),
        }
    }
}

/// Eigenvalues in ascending order; `vectors` is row-major `n x n` with the
/// eigenvector of `values[j]` in column `j` (empty when not requested).
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub n: usize,
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

#[derive(Clone, Copy)]
struct Rotation {
    partner: usize,
    c: f64,
    s: f64,
    /// `true` for the lower index of the pair.
    first: bool,
}

/// Round-robin tournament on `n` players (plus a bye when `n` is odd):
/// `n'-1` rounds, each a perfect matching.
fn round_robin(n: usize) -> Vec<Vec<(usize, usize)>> {
    let players = n + n % 2;
    if players < 2 {
        return vec![];
    }
    let mut ring: Vec<usize> = (0..players).collect();
    let mut rounds = Vec::with_capacity(players - 1);
    for _ in 0..players - 1 {
        let mut pairs = Vec::with_capacity(players / 2);
        for i in 0..players / 2 {
            let (a, b) = (ring[i], ring[players - 1 - i]);
            if a < n && b < n {
                pairs.push((a.min(b), a.max(b)));
            }
        }
        rounds.push(pairs);
        ring[1..].rotate_right(1);
    }
    rounds
}

fn max_offdiag(n: usize, a: &[f64]) -> f64 {
    let mut m = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m = m.max(a[i * n + j].abs());
            }
        }
    }
    m
}

fn rotation_for(app: f64, aqq: f64, apq: f64) -> (f64, f64) {
    if apq == 0.0 {
        return (1.0, 0.0);
    }
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    (c, t * c)
}

fn apply_columns(row: &mut [f64], active: &[(usize, usize, f64, f64)]) {
    for &(p, q, c, s) in active {
        let (bp, bq) = (row[p], row[q]);
        row[p] = c * bp - s * bq;
        row[q] = s * bp + c * bq;
    }
}

fn rotate_row(src: &[f64], n: usize, i: usize, out: &mut [f64], rot: &[Option<Rotation>]) {
    let own = &src[i * n..(i + 1) * n];
    match rot[i] {
        None => out.copy_from_slice(own),
        Some(r) => {
            let other = &src[r.partner * n..(r.partner + 1) * n];
            if r.first {
                for ((o, &x), &y) in out.iter_mut().zip(own).zip(other) {
                    *o = r.c * x - r.s * y;
                }
            } else {
                for ((o, &x), &y) in out.iter_mut().zip(own).zip(other) {
                    *o = r.s * y + r.c * x;
                }
            }
        }
    }
}

impl JacobiSolver {
    pub fn with_execution(exec: Execution) -> Self {
        JacobiSolver {
            exec,
            ..Default::default()
        }
    }

    /// Decompose the symmetric row-major matrix `a` of order `n`.
    pub fn decompose(&self, n: usize, a: &[f64], want_vectors: bool) -> Result<SymmetricEigen> {
        if a.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} entries for order {n}", a.len())));
        }
        for i in 0..n {
            for j in i + 1..n {
                if a[i * n + j] != a[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        let mut cur = a.to_vec();
        let mut next = vec![0.0; n * n];
        let mut vecs = if want_vectors {
            let mut v = vec![0.0; n * n];
            for i in 0..n {
                v[i * n + i] = 1.0;
            }
            v
        } else {
            Vec::new()
        };
        let rounds = round_robin(n);
        let mut sweeps = 0;
        while max_offdiag(n, &cur) >= self.tol {
            if sweeps == self.max_sweeps {
                return Err(Error::NoConvergence { sweeps });
            }
            sweeps += 1;
            for pairs in &rounds {
                let mut rot: Vec<Option<Rotation>> = vec![None; n];
                for &(p, q) in pairs {
                    let apq = cur[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let (c, s) = rotation_for(cur[p * n + p], cur[q * n + q], apq);
                    rot[p] = Some(Rotation { partner: q, c, s, first: true });
                    rot[q] = Some(Rotation { partner: p, c, s, first: false });
                }
                if rot.iter().all(Option::is_none) {
                    continue;
                }
                let active: Vec<(usize, usize, f64, f64)> = pairs
                    .iter()
                    .filter_map(|&(p, q)| rot[p].map(|r| (p, q, r.c, r.s)))
                    .collect();
                // rows: next = Jᵗ cur, then columns: next = next J
                self.exec.for_each_row(&mut next, n, |i, out| rotate_row(&cur, n, i, out, &rot));
                self.exec.for_each_row(&mut next, n, |_, row| apply_columns(row, &active));
                for &(p, q) in pairs {
                    if rot[p].is_some() {
                        next[p * n + q] = 0.0;
                        next[q * n + p] = 0.0;
                    }
                }
                if want_vectors {
                    self.exec.for_each_row(&mut vecs, n, |_, row| apply_columns(row, &active));
                }
                std::mem::swap(&mut cur, &mut next);
            }
        }
        let diag: Vec<f64> = (0..n).map(|i| cur[i * n + i]).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]).then(i.cmp(&j)));
        let values = order.iter().map(|&i| diag[i]).collect();
        let vectors = if want_vectors {
            let mut sorted = vec![0.0; n * n];
            for r in 0..n {
                for (newc, &oldc) in order.iter().enumerate() {
                    sorted[r * n + newc] = vecs[r * n + oldc];
                }
            }
            sorted
        } else {
            Vec::new()
        };
        Ok(SymmetricEigen { n, values, vectors, sweeps })
    }

    pub fn eigenvalues(&self, m: &IntMatrix) -> Result<Vec<f64>> {
        Ok(self.decompose_int(m, false)?.values)
    }

    pub fn decompose_int(&self, m: &IntMatrix, want_vectors: bool) -> Result<SymmetricEigen> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if let Some((row, col)) = m.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        self.decompose(m.rows(), &m.to_f64(), want_vectors)
    }
}

/// Sorted eigenvalues of a symmetric integer matrix with default settings.
pub fn eigenvalues_float(m: &IntMatrix) -> Result<Vec<f64>> {
    JacobiSolver::default().eigenvalues(m)
}

/// `max |Q^t M Q - diag(λ)|` for a decomposition with eigenvectors.
pub fn reconstruction_residual(n: usize, m: &[f64], eig: &SymmetricEigen) -> f64 {
    assert_eq!(eig.vectors.len(), n * n, "decomposition lacks eigenvectors");
    let q = &eig.vectors;
    // mq = M Q
    let mut mq = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let a = m[i * n + k];
            if a == 0.0 {
                continue;
            }
            for j in 0..n {
                mq[i * n + j] += a * q[k * n + j];
            }
        }
    }
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += q[k * n + i] * mq[k * n + j];
            }
            let want = if i == j { eig.values[i] } else { 0.0 };
            worst = worst.max((s - want).abs());
        }
    }
    worst
}

/// Group sorted eigenvalues into clusters of `(mean, multiplicity)`.
pub fn cluster(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &v in values {
        match out.last_mut() {
            Some((sum, count, last)) if (v - *last).abs() < tol => {
                *sum += v;
                *count += 1;
                *last = v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    out.into_iter().map(|(s, c, _)| (s / c as f64, c)).collect()
}
