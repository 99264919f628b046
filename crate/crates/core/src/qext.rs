//! Exact arithmetic in real quadratic fields `Q(√d)` and dense linear
//! algebra over them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::IntMatrix;

/// `a + b√d` with rational `a`, `b` and square-free `d ≥ 2`.
///
/// Purely rational values carry `b = 0`, `d = 1`. Values over different
/// fields may only be combined when one of them is rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QExt {
    a: BigRational,
    b: BigRational,
    d: u64,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Split `n > 0` as `s^2 * d` with `d` square-free.
pub fn square_free_part(mut n: u64) -> (u64, u64) {
    assert!(n > 0);
    let mut s = 1u64;
    let mut d = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += 1;
    }
    (s, d * n)
}

impl QExt {
    pub fn zero() -> Self {
        QExt::from_int(0)
    }

    pub fn one() -> Self {
        QExt::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        QExt::from_rational(rat(n))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QExt {
            a,
            b: BigRational::zero(),
            d: 1,
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        QExt::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `a + b√d` from components; `d` is reduced to its square-free part.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return QExt::from_rational(a);
        }
        let (s, d) = square_free_part(d);
        let b = b * BigRational::from_integer(BigInt::from(s));
        if d == 1 {
            return QExt::from_rational(a + b);
        }
        QExt { a, b, d }
    }

    /// `√n` for `n ≥ 0`.
    pub fn sqrt(n: u64) -> Self {
        QExt::new(BigRational::zero(), BigRational::one(), n)
    }

    /// `(t + sign·√b) / 2`, the encoding used for two-eigenvalue spectra.
    pub fn half_surd(t: i64, sign: i64, b: u64) -> Self {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        QExt::new(rat(t) * &half, rat(sign) * half, b)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Integer value, if this is an integer.
    pub fn to_integer(&self) -> Option<i64> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer().to_i64())?
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    fn field_with(&self, other: &QExt) -> u64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(self.d, other.d, "mixing Q(√{}) and Q(√{})", self.d, other.d);
                self.d
            }
        }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.d as i64)
    }

    pub fn conjugate(&self) -> QExt {
        QExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<QExt> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QExt::normalized(&self.a / &n, -(&self.b / &n), self.d))
    }

    pub fn checked_div(&self, other: &QExt) -> Option<QExt> {
        Some(self * &other.inv()?)
    }

    fn normalized(a: BigRational, b: BigRational, d: u64) -> QExt {
        if b.is_zero() {
            QExt::from_rational(a)
        } else {
            QExt { a, b, d }
        }
    }
}

impl Add for &QExt {
    type Output = QExt;
    fn add(self, rhs: &QExt) -> QExt {
        let d = self.field_with(rhs);
        QExt::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub for &QExt {
    type Output = QExt;
    fn sub(self, rhs: &QExt) -> QExt {
        let d = self.field_with(rhs);
        QExt::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul for &QExt {
    type Output = QExt;
    fn mul(self, rhs: &QExt) -> QExt {
        let d = self.field_with(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * rat(d as i64);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QExt::normalized(a, b, d)
    }
}

impl Neg for &QExt {
    type Output = QExt;
    fn neg(self) -> QExt {
        QExt::normalized(-self.a.clone(), -self.b.clone(), self.d)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QExt {
            type Output = QExt;
            fn $m(self, rhs: QExt) -> QExt { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QExt {
    type Output = QExt;
    fn neg(self) -> QExt {
        -&self
    }
}

impl fmt::Display for QExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b.is_one() {
            format!("√{}", self.d)
        } else if (-&self.b).is_one() {
            format!("-√{}", self.d)
        } else {
            format!("{}√{}", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if self.b.is_negative() {
            write!(f, "{} - {}", self.a, surd.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", self.a, surd)
        }
    }
}

/// Dense row-major matrix over `Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QExt>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![QExt::zero(); rows * cols],
        }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        QMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m.as_slice().iter().map(|&v| QExt::from_int(v)).collect(),
        }
    }

    /// `mu * I - m` for square `m`.
    pub fn shifted(mu: &QExt, m: &IntMatrix) -> Self {
        assert!(m.is_square());
        let mut out = QMatrix::from_int(&m.scale(-1));
        for i in 0..m.rows() {
            let idx = i * out.cols + i;
            out.data[idx] = &out.data[idx] + mu;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QExt {
        &self.data[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut QExt {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cell = out.get_mut(i, j);
                    *cell = &*cell + &prod;
                }
            }
        }
        out
    }

    /// Solve `self · Z = rhs` by Gauss-Jordan elimination. `None` if `self`
    /// is singular.
    pub fn solve(&self, rhs: &QMatrix) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let w = n + rhs.cols;
        let mut aug = QMatrix::zeros(n, w);
        for i in 0..n {
            for j in 0..n {
                *aug.get_mut(i, j) = self.get(i, j).clone();
            }
            for j in 0..rhs.cols {
                *aug.get_mut(i, n + j) = rhs.get(i, j).clone();
            }
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..w {
                    aug.data.swap(pivot * w + j, col * w + j);
                }
            }
            let inv = aug.get(col, col).inv()?;
            for j in col..w {
                let v = aug.get(col, j) * &inv;
                *aug.get_mut(col, j) = v;
            }
            for r in 0..n {
                if r == col || aug.get(r, col).is_zero() {
                    continue;
                }
                let factor = aug.get(r, col).clone();
                for j in col..w {
                    let delta = &factor * aug.get(col, j);
                    let v = aug.get(r, j) - &delta;
                    *aug.get_mut(r, j) = v;
                }
            }
        }
        let mut out = QMatrix::zeros(n, rhs.cols);
        for i in 0..n {
            for j in 0..rhs.cols {
                *out.get_mut(i, j) = aug.get(i, n + j).clone();
            }
        }
        Some(out)
    }

    pub fn is_singular(&self) -> bool {
        self.independent_columns(false).len() < self.rows.min(self.cols)
    }

    /// Greedy maximal set of linearly independent columns. With `reverse`
    /// the scan runs from the last column to the first. Returned sorted.
    pub fn independent_columns(&self, reverse: bool) -> Vec<usize> {
        // Row-reduce column by column in the chosen order.
        let mut work = self.clone();
        let order: Vec<usize> = if reverse {
            (0..self.cols).rev().collect()
        } else {
            (0..self.cols).collect()
        };
        let mut pivot_row = 0;
        let mut chosen = Vec::new();
        for &col in &order {
            if pivot_row == self.rows {
                break;
            }
            let Some(p) = (pivot_row..self.rows).find(|&r| !work.get(r, col).is_zero()) else {
                continue;
            };
            if p != pivot_row {
                for j in 0..self.cols {
                    work.data.swap(p * self.cols + j, pivot_row * self.cols + j);
                }
            }
            let inv = work.get(pivot_row, col).inv().expect("nonzero pivot");
            for r in pivot_row + 1..self.rows {
                if work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col) * &inv;
                for &j in &order {
                    let delta = &factor * work.get(pivot_row, j);
                    let v = work.get(r, j) - &delta;
                    *work.get_mut(r, j) = v;
                }
            }
            chosen.push(col);
            pivot_row += 1;
        }
        chosen.sort_unstable();
        chosen
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &QMatrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.cols, idx % self.cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn square_free() {
        assert_eq!(square_free_part(20), (2, 5));
        assert_eq!(square_free_part(36), (6, 1));
        assert_eq!(square_free_part(7), (1, 7));
        assert_eq!(square_free_part(1), (1, 1));
    }

    #[test]
    fn sqrt_of_square_is_rational() {
        assert_eq!(QExt::sqrt(36), QExt::from_int(6));
        assert_eq!(QExt::sqrt(8), QExt::new(rat(0), rat(2), 2));
        assert_eq!(QExt::half_surd(2, 1, 36), QExt::from_int(4));
        assert_eq!(QExt::half_surd(0, -1, 20), -QExt::sqrt(5));
    }

    #[test]
    fn conjugate_product_is_norm() {
        let x = &QExt::from_int(3) + &QExt::sqrt(5);
        let y = x.conjugate();
        assert_eq!(&x * &y, QExt::from_int(4));
        assert_eq!(x.norm(), rat(4));
        assert_eq!(&x * &x.inv().unwrap(), QExt::one());
        assert!(QExt::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(QExt::sqrt(5).to_string(), "√5");
        assert_eq!((-QExt::sqrt(5)).to_string(), "-√5");
        assert_eq!(QExt::half_surd(1, -1, 5).to_string(), "1/2 - 1/2√5");
        assert_eq!(QExt::from_int(-2).to_string(), "-2");
    }

    #[test]
    fn solve_two_by_two() {
        // [[√5, 1], [1, √5]] z = [1, 0]
        let s5 = QExt::sqrt(5);
        let m = QMatrix {
            rows: 2,
            cols: 2,
            data: vec![s5.clone(), QExt::one(), QExt::one(), s5.clone()],
        };
        let rhs = QMatrix {
            rows: 2,
            cols: 1,
            data: vec![QExt::one(), QExt::zero()],
        };
        let z = m.solve(&rhs).unwrap();
        assert_eq!(m.mul(&z), rhs);
        assert_eq!(z.get(0, 0), &QExt::new(rat(0), BigRational::new(1.into(), 4.into()), 5));
    }

    #[test]
    fn singular_detection() {
        let m = QMatrix::from_int(&IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap());
        assert!(m.is_singular());
        assert!(m.solve(&QMatrix::zeros(2, 1)).is_none());
        assert_eq!(m.independent_columns(false), vec![0]);
        assert_eq!(m.independent_columns(true), vec![1]);
    }

    fn qext_strategy() -> impl Strategy<Value = QExt> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6)
            .prop_map(|(an, ad, bn, bd)| QExt::new(
                BigRational::new(an.into(), ad.into()),
                BigRational::new(bn.into(), bd.into()),
                5,
            ))
    }

    proptest! {
        #[test]
        fn field_axioms(x in qext_strategy(), y in qext_strategy(), z in qext_strategy()) {
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x - &y) + &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&x.checked_div(&y).unwrap() * &y, x.clone());
            }
            prop_assert_eq!(&x * &x.conjugate(), QExt::from_rational(x.norm()));
        }

        #[test]
        fn solve_residual_is_exactly_zero(entries in proptest::collection::vec(-3i64..4, 9), r in proptest::collection::vec(-3i64..4, 3)) {
            let m = IntMatrix::from_vec(3, 3, entries).unwrap();
            let shifted = QMatrix::shifted(&QExt::sqrt(2), &m);
            let rhs = QMatrix::from_int(&IntMatrix::from_vec(3, 1, r).unwrap());
            // singular draws are skipped
            if let Some(z) = shifted.solve(&rhs) {
                prop_assert_eq!(shifted.mul(&z), rhs);
            }
        }
    }
}
