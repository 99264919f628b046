//! Exact two-eigenvalue verification through the integer identity
//! `A² − tA − kI = 0`.

use std::fmt;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matrix::{IntMatrix, SignedMatrix};
use crate::qext::QExt;

/// `Some(s)` with `s² = x` when `x` is a perfect square.
pub fn exact_sqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let s = x.sqrt();
    (s * s == x).then_some(s)
}

/// One root `(t ± √b)/2` of `x² − tx − k`, kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticRoot {
    pub t: i64,
    pub b: i64,
    /// `+1` for the larger root, `-1` for the smaller.
    pub sign: i64,
}

impl QuadraticRoot {
    pub fn new(t: i64, k: i64, sign: i64) -> Self {
        QuadraticRoot { t, b: t * t + 4 * k, sign }
    }

    /// Integer value when `b` is a perfect square.
    pub fn as_integer(&self) -> Option<i64> {
        exact_sqrt(self.b).map(|s| (self.t + self.sign * s) / 2)
    }

    pub fn to_qext(&self) -> QExt {
        QExt::half_surd(self.t, self.sign, self.b as u64)
    }

    pub fn to_f64(&self) -> f64 {
        (self.t as f64 + self.sign as f64 * (self.b as f64).sqrt()) / 2.0
    }
}

impl fmt::Display for QuadraticRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let minus = if self.sign < 0 { "-" } else { "" };
        if self.t == 0 && self.b % 4 == 0 {
            write!(f, "{minus}√{}", self.b / 4)
        } else {
            let op = if self.sign < 0 { "-" } else { "+" };
            write!(f, "({} {op} √{})/2", self.t, self.b)
        }
    }
}

/// Spectrum `[λ1^m1, λ2^m2]` of a two-eigenvalue signed graph, with
/// `λ1,2 = (t ± √b)/2` and `b = t² + 4k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactSpectrum {
    pub t: i64,
    pub k: i64,
    pub n: usize,
    pub m1: usize,
    pub m2: usize,
}

impl ExactSpectrum {
    pub fn b(&self) -> i64 {
        self.t * self.t + 4 * self.k
    }

    /// True iff both eigenvalues are integers.
    pub fn is_rational(&self) -> bool {
        exact_sqrt(self.b()).is_some()
    }

    pub fn lambda1(&self) -> QuadraticRoot {
        QuadraticRoot::new(self.t, self.k, 1)
    }

    pub fn lambda2(&self) -> QuadraticRoot {
        QuadraticRoot::new(self.t, self.k, -1)
    }

    /// Check `m1 + m2 = n`, `m1·λ1 + m2·λ2 = 0`, `λ1·λ2 = −k` and
    /// `λ1 + λ2 = t` in exact arithmetic.
    pub fn check_identities(&self) -> bool {
        let l1 = self.lambda1().to_qext();
        let l2 = self.lambda2().to_qext();
        let m1 = QExt::from_int(self.m1 as i64);
        let m2 = QExt::from_int(self.m2 as i64);
        self.m1 + self.m2 == self.n
            && (&(&m1 * &l1) + &(&m2 * &l2)).is_zero()
            && &l1 * &l2 == QExt::from_int(-self.k)
            && &l1 + &l2 == QExt::from_int(self.t)
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}^{}, {}^{}]", self.lambda1(), self.m1, self.lambda2(), self.m2)
    }
}

/// Multiplicities `(m1, m2)` of `λ1,2 = (t ± √b)/2` forced by a zero trace
/// on `n` vertices.
pub fn exact_multiplicities(t: i64, k: i64, n: usize) -> Result<(usize, usize)> {
    let fail = Error::NoSuchSte { t, k, n };
    if k < 1 {
        return Err(fail);
    }
    let b = t * t + 4 * k;
    let (num, den) = match exact_sqrt(b) {
        // m1 = n·(−λ2)/(λ1 − λ2) = n(s − t)/(2s)
        Some(s) => (n as i64 * (s - t), 2 * s),
        // conjugate roots share a multiplicity, so the trace vanishes only for t = 0
        None if t == 0 => (n as i64, 2),
        None => return Err(fail),
    };
    if num % den != 0 {
        return Err(fail);
    }
    let m1 = (num / den) as usize;
    if m1 == 0 || m1 >= n {
        return Err(fail);
    }
    Ok((m1, n - m1))
}

/// `Some(spectrum)` iff `Σ` has exactly two distinct eigenvalues.
///
/// `k` comes from the diagonal of `A²`, `t` from the first edge, and the
/// identity `A² − tA − kI = 0` is then checked on every entry.
pub fn verify_ste_exact(g: &SignedGraph) -> Option<ExactSpectrum> {
    let k = g.regularity()? as i64;
    if k == 0 {
        return None;
    }
    let a = g.adjacency();
    let a2 = a.mul(a).ok()?;
    let (u, v, s) = g.edges()[0];
    let t = a2.get(u, v) * s;
    let rhs = a.scale(t).add(&IntMatrix::scalar(g.order(), k)).ok()?;
    if a2 != rhs {
        return None;
    }
    let (m1, m2) = exact_multiplicities(t, k, g.order()).ok()?;
    Some(ExactSpectrum { t, k, n: g.order(), m1, m2 })
}

/// Parameters of `A² − tA − kI = ρ·Ā`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FsrsgParams {
    pub k: usize,
    /// Absent when there are no edges.
    pub t: Option<i64>,
    /// Absent never in a returned value; `Some(0)` by convention when the
    /// ground is complete (see `complete_ground`).
    pub rho: Option<i64>,
    /// The ground has no non-adjacent pairs, so `ρ` is vacuous.
    pub complete_ground: bool,
}

impl FsrsgParams {
    /// `ρ = 0` with a defined `t`: the two-eigenvalue case.
    pub fn is_ste(&self) -> bool {
        self.t.is_some() && self.rho == Some(0)
    }
}

/// Recover `(t, ρ)` if the signed 2-path counts are constant over edges
/// and over non-adjacent pairs.
pub fn fsrsg_parameters(g: &SignedGraph) -> Option<FsrsgParams> {
    let k = g.regularity()?;
    let a = g.adjacency();
    let a2 = a.mul(a).ok()?;
    let n = g.order();
    let mut t = None;
    let mut rho = None;
    for u in 0..n {
        for v in u + 1..n {
            let s = a.get(u, v);
            let (slot, value) = if s != 0 {
                (&mut t, a2.get(u, v) * s)
            } else {
                (&mut rho, a2.get(u, v))
            };
            match *slot {
                None => *slot = Some(value),
                Some(prev) if prev != value => return None,
                _ => {}
            }
        }
    }
    let complete_ground = rho.is_none();
    Some(FsrsgParams {
        k,
        t,
        rho: Some(rho.unwrap_or(0)),
        complete_ground,
    })
}

/// True iff `M` is square and `MMᵗ = MᵗM = αI`.
pub fn is_weighing(m: &SignedMatrix, alpha: i64) -> bool {
    m.rows() == m.cols() && m.as_int().gram_rows().is_scalar(alpha) && m.as_int().gram_cols().is_scalar(alpha)
}

/// The weight `α` if `M` is a weighing matrix.
pub fn weighing_weight(m: &SignedMatrix) -> Option<i64> {
    if m.rows() != m.cols() || m.rows() == 0 {
        return None;
    }
    let alpha = m.row_weight(0) as i64;
    (alpha > 0 && is_weighing(m, alpha)).then_some(alpha)
}
