//! Weight-4 semi-orthogonal weighing matrices and the `3m`-vertex 8-regular
//! signed graphs with spectrum `[4^m, −2^{2m}]` built from them.
//!
//! A pair `W1, W2` of order `m` comes from two circulant 0/1 patterns of
//! order `m/2` with two ones per row and column. Each pattern column is
//! expanded to a column pair (`F`), then each row of `F` is copied with its
//! last two nonzeros negated (`R`); `W = [F; R]`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::SignedGraph;
use crate::matrix::{IntMatrix, SignedMatrix};
use crate::spectra::exact::{is_weighing, weighing_weight};

/// Which residues define the first pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum XConvention {
    /// `j − i ≡ 0, −1 (mod m/2)`: reproduces the displayed order-14 matrices
    /// and never shares a one with the second pattern.
    #[default]
    Displayed,
    /// `j − i ≡ 0, 1 (mod m/2)`: collides with the second pattern's residue 1.
    Stated,
}

/// Square 0/1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatrix {
    entries: IntMatrix,
}

impl PatternMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        let n = entries.rows();
        for i in 0..n {
            for j in 0..n {
                let v = entries.get(i, j);
                if v != 0 && v != 1 {
                    return Err(Error::InvalidEntry { row: i, col: j, value: v });
                }
            }
        }
        Ok(PatternMatrix { entries })
    }

    /// `m/2`.
    pub fn half(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    /// Exactly two ones in every row and column.
    pub fn is_two_regular(&self) -> bool {
        let n = self.half();
        (0..n).all(|i| self.entries.row(i).iter().sum::<i64>() == 2)
            && (0..n).all(|j| (0..n).map(|i| self.entries.get(i, j)).sum::<i64>() == 2)
    }

    /// True iff the two patterns share no one-entry.
    pub fn disjoint_from(&self, other: &PatternMatrix) -> bool {
        self.entries
            .as_slice()
            .iter()
            .zip(other.entries.as_slice())
            .all(|(&a, &b)| a * b == 0)
    }
}

fn check_order(m: usize) -> Result<usize> {
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidOrder {
            m,
            reason: "order must be even".into(),
        });
    }
    if m < 8 {
        return Err(Error::InvalidOrder {
            m,
            reason: "pattern construction needs m >= 8 (for m = 6 the second pattern has one 1 per row)".into(),
        });
    }
    Ok(m / 2)
}

fn circulant(h: usize, residues: [i64; 2]) -> PatternMatrix {
    let mut entries = IntMatrix::zeros(h, h);
    let h_i = h as i64;
    for i in 0..h {
        for j in 0..h {
            let diff = (j as i64 - i as i64).rem_euclid(h_i);
            if residues.iter().any(|r| r.rem_euclid(h_i) == diff) {
                entries.set(i, j, 1);
            }
        }
    }
    PatternMatrix { entries }
}

pub fn pattern_x(m: usize) -> Result<PatternMatrix> {
    pattern_x_with(m, XConvention::Displayed)
}

pub fn pattern_x_with(m: usize, convention: XConvention) -> Result<PatternMatrix> {
    let h = check_order(m)?;
    Ok(match convention {
        XConvention::Displayed => circulant(h, [0, -1]),
        XConvention::Stated => circulant(h, [0, 1]),
    })
}

/// Second pattern: `j − i ≡ 1, m/2 − 2 (mod m/2)`.
pub fn pattern_y(m: usize) -> Result<PatternMatrix> {
    let h = check_order(m)?;
    Ok(circulant(h, [1, h as i64 - 2]))
}

/// Expand pattern column `j` into columns `2j, 2j+1`: the upper one becomes
/// `[1, 1]`, the lower one `[1, −1]`.
pub fn expand_f(p: &PatternMatrix) -> Result<SignedMatrix> {
    let h = p.half();
    let mut f = IntMatrix::zeros(h, 2 * h);
    for j in 0..h {
        let ones: Vec<usize> = (0..h).filter(|&i| p.entries.get(i, j) == 1).collect();
        let [upper, lower] = ones[..] else {
            return Err(Error::PatternColumn {
                column: j,
                count: ones.len(),
            });
        };
        f.set(upper, 2 * j, 1);
        f.set(upper, 2 * j + 1, 1);
        f.set(lower, 2 * j, 1);
        f.set(lower, 2 * j + 1, -1);
    }
    SignedMatrix::new(f)
}

/// Copy each row keeping its two leftmost nonzeros and negating the two
/// rightmost (columns compared as plain indices).
pub fn expand_r(f: &SignedMatrix) -> Result<SignedMatrix> {
    let mut r = f.as_int().clone();
    for i in 0..f.rows() {
        let nz: Vec<usize> = (0..f.cols()).filter(|&j| f.get(i, j) != 0).collect();
        if nz.len() != 4 {
            return Err(Error::ExpandRow { row: i, count: nz.len() });
        }
        for &j in &nz[2..] {
            r.set(i, j, -f.get(i, j));
        }
    }
    SignedMatrix::new(r)
}

/// `W = [F; R]` for the pattern.
pub fn build_w(p: &PatternMatrix) -> Result<SignedMatrix> {
    let f = expand_f(p)?;
    let r = expand_r(&f)?;
    SignedMatrix::vstack(&f, &r)
}

/// `½·W1ᵗW2` if every entry of `W1ᵗW2` is `0` or `±2`.
pub fn semi_orthogonal(w1: &SignedMatrix, w2: &SignedMatrix) -> Result<Option<IntMatrix>> {
    if w1.rows() != w2.rows() || w1.cols() != w2.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            w1.rows(),
            w1.cols(),
            w2.rows(),
            w2.cols()
        )));
    }
    let p = w1.as_int().transpose().mul(w2.as_int())?;
    if p.as_slice().iter().all(|v| matches!(v, -2 | 0 | 2)) {
        Ok(p.div_exact(2))
    } else {
        Ok(None)
    }
}

/// Two weight-4 weighing matrices of equal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeighPair {
    pub w1: SignedMatrix,
    pub w2: SignedMatrix,
}

impl WeighPair {
    /// Checks that both matrices have weight 4.
    pub fn new(w1: SignedMatrix, w2: SignedMatrix) -> Result<Self> {
        if w1.rows() != w2.rows() {
            return Err(Error::DimensionMismatch(format!("orders {} and {}", w1.rows(), w2.rows())));
        }
        if !is_weighing(&w1, 4) || !is_weighing(&w2, 4) {
            return Err(Error::NotWeighing);
        }
        Ok(WeighPair { w1, w2 })
    }

    /// The pattern pair for even `m ≥ 8`.
    pub fn generated(m: usize) -> Result<Self> {
        Self::generated_with(m, XConvention::Displayed)
    }

    pub fn generated_with(m: usize, convention: XConvention) -> Result<Self> {
        let w1 = build_w(&pattern_x_with(m, convention)?)?;
        let w2 = build_w(&pattern_y(m)?)?;
        WeighPair::new(w1, w2)
    }

    pub fn order(&self) -> usize {
        self.w1.rows()
    }

    /// `W1ᵗW2`.
    pub fn product(&self) -> IntMatrix {
        self.w1.as_int().transpose().mul(self.w2.as_int()).expect("equal orders")
    }

    pub fn assemble(&self) -> Result<SignedGraph> {
        assemble_block(&self.w1, &self.w2)
    }
}

/// The block adjacency matrix
/// `[[O, W1, W2], [W1ᵗ, O, ½W1ᵗW2], [W2ᵗ, ½W2ᵗW1, O]]`.
pub fn assemble_block(w1: &SignedMatrix, w2: &SignedMatrix) -> Result<SignedGraph> {
    let m = w1.rows();
    if w1.cols() != m || w2.rows() != m || w2.cols() != m {
        return Err(Error::DimensionMismatch("W1 and W2 must be square of equal order".into()));
    }
    let p = w1.as_int().transpose().mul(w2.as_int())?;
    for i in 0..m {
        for j in 0..m {
            let v = p.get(i, j);
            if !matches!(v, -2 | 0 | 2) {
                return Err(Error::BlockEntry { row: i, col: j, value: v });
            }
        }
    }
    let half = p.div_exact(2).expect("entries are even");
    let half_t = half.transpose();
    let z = IntMatrix::zeros(m, m);
    let (a, b) = (w1.as_int(), w2.as_int());
    let (at, bt) = (a.transpose(), b.transpose());
    let adj = IntMatrix::block(&[vec![&z, a, b], vec![&at, &z, &half], vec![&bt, &half_t, &z]])?;
    SignedGraph::from_adjacency(adj)
}

/// Outcome of checking one order of the generated family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub m: usize,
    pub weighing: bool,
    pub semi_orthogonal: bool,
    /// `A² = 2A + 8I` on the assembled graph.
    pub identity: bool,
    pub multiplicities: Option<(usize, usize)>,
}

/// Build and check the generated family for each order in `orders`.
pub fn check_block_family(orders: &[usize], exec: Execution) -> Vec<Result<BlockCheck>> {
    exec.map(orders, |&m| {
        let pair = WeighPair::generated(m)?;
        let semi = semi_orthogonal(&pair.w1, &pair.w2)?.is_some();
        let g = pair.assemble()?;
        let a = g.adjacency();
        let a2 = a.mul_with(a, Execution::Sequential)?;
        let rhs = a.scale(2).add(&IntMatrix::scalar(3 * m, 8))?;
        let spectrum = crate::spectra::verify_ste_exact(&g);
        Ok(BlockCheck {
            m,
            weighing: is_weighing(&pair.w1, 4) && is_weighing(&pair.w2, 4),
            semi_orthogonal: semi,
            identity: a2 == rhs,
            multiplicities: spectrum.map(|s| (s.m1, s.m2)),
        })
    })
}

fn sign_vectors(order: usize, weight: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 3usize.pow(order as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..order)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        if v.iter().filter(|&&x| x != 0).count() == weight {
            out.push(v);
        }
    }
    out.sort();
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All weighing matrices of the given order and weight whose first row is
/// `first`, built row by row with every new row orthogonal to the earlier
/// ones. With `ascending` the rows after the first must increase
/// lexicographically. Results are in lexicographic order.
pub fn enumerate_weighing(order: usize, weight: usize, first: &[i64], ascending: bool) -> Vec<SignedMatrix> {
    fn extend(
        rows: &mut Vec<Vec<i64>>,
        candidates: &[Vec<i64>],
        order: usize,
        weight: i64,
        ascending: bool,
        out: &mut Vec<SignedMatrix>,
    ) {
        if rows.len() == order {
            let m = SignedMatrix::from_rows(rows).expect("sign entries");
            if is_weighing(&m, weight) {
                out.push(m);
            }
            return;
        }
        for cand in candidates {
            if ascending && rows.len() > 1 && cand <= rows.last().unwrap() {
                continue;
            }
            if rows.iter().all(|r| dot(r, cand) == 0) {
                rows.push(cand.clone());
                extend(rows, candidates, order, weight, ascending, out);
                rows.pop();
            }
        }
    }
    let candidates = sign_vectors(order, weight);
    let mut out = Vec::new();
    let mut rows = vec![first.to_vec()];
    extend(&mut rows, &candidates, order, weight as i64, ascending, &mut out);
    out
}

fn cmp_pairs(a: &WeighPair, b: &WeighPair) -> Ordering {
    a.w1
        .as_int()
        .as_slice()
        .cmp(b.w1.as_int().as_slice())
        .then_with(|| a.w2.as_int().as_slice().cmp(b.w2.as_int().as_slice()))
}

/// Search order-4 weight-4 pairs whose assembled graph is an 8-regular STE.
///
/// `W1` is normalized (first row and column all `+1`, later rows ascending);
/// `W2` has first row all `+1`. Each candidate pair costs one unit of
/// `budget`; `None` means unlimited. Output is sorted, so it does not depend
/// on `exec`.
pub fn search_m4_pairs(budget: Option<usize>) -> Vec<WeighPair> {
    search_m4_pairs_with(budget, Execution::default())
}

pub fn search_m4_pairs_with(budget: Option<usize>, exec: Execution) -> Vec<WeighPair> {
    let ones = vec![1i64; 4];
    let firsts: Vec<SignedMatrix> = enumerate_weighing(4, 4, &ones, true)
        .into_iter()
        .filter(|w| (0..4).all(|i| w.get(i, 0) >= 0))
        .collect();
    let seconds = enumerate_weighing(4, 4, &ones, false);
    let total = firsts.len() * seconds.len();
    let attempts = budget.map_or(total, |b| b.min(total));
    let mut found: Vec<WeighPair> = exec
        .map_range(attempts, |idx| {
            let (w1, w2) = (&firsts[idx / seconds.len()], &seconds[idx % seconds.len()]);
            let semi = semi_orthogonal(w1, w2).ok().flatten()?;
            // order 4 needs a full ±1 half product for the 8-regular ground
            if semi.as_slice().contains(&0) {
                return None;
            }
            Some(WeighPair {
                w1: w1.clone(),
                w2: w2.clone(),
            })
        })
        .into_iter()
        .flatten()
        .collect();
    found.sort_by(cmp_pairs);
    found
}

/// Kronecker product of two weighing matrices; weight multiplies.
pub fn kronecker(a: &SignedMatrix, b: &SignedMatrix) -> Result<(SignedMatrix, i64)> {
    let alpha = weighing_weight(a).ok_or(Error::NotWeighing)?;
    let beta = weighing_weight(b).ok_or(Error::NotWeighing)?;
    Ok((a.kronecker(b), alpha * beta))
}
