//! Admissible parameter triples `(t, λ1, λ2)` for two-eigenvalue signed
//! `k`-regular graphs.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::spectra::exact::{exact_multiplicities, exact_sqrt, QuadraticRoot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TripleType {
    /// `(n−2, n−1, −1)` or its negation `(2−n, 1, 1−n)`.
    Type1,
    /// `(k/2−2, k/2, −2)` or its negation `(2−k/2, 2, −k/2)`.
    Type2,
    /// `(0, √k, −√k)`.
    Type3,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibleTriple {
    pub k: i64,
    pub t: i64,
    pub lambda1: QuadraticRoot,
    pub lambda2: QuadraticRoot,
    pub kind: TripleType,
}

impl AdmissibleTriple {
    /// The triple for `(k, t)` if `t = 0` or `t² + 4k` is a perfect square.
    pub fn new(k: i64, t: i64) -> Option<Self> {
        let b = t * t + 4 * k;
        if k < 1 || (t != 0 && exact_sqrt(b).is_none()) {
            return None;
        }
        let mut triple = AdmissibleTriple {
            k,
            t,
            lambda1: QuadraticRoot::new(t, k, 1),
            lambda2: QuadraticRoot::new(t, k, -1),
            kind: TripleType::Other,
        };
        triple.kind = classify(&triple);
        Some(triple)
    }

    pub fn b(&self) -> i64 {
        self.t * self.t + 4 * self.k
    }

    /// `(−t, −λ2, −λ1)`, the parameters of `−Σ`.
    pub fn negated(&self) -> AdmissibleTriple {
        AdmissibleTriple::new(self.k, -self.t).expect("negation stays admissible")
    }
}

impl fmt::Display for AdmissibleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.lambda1, self.lambda2)
    }
}

/// Classify into the three families; `t = 0` is reported as Type 3 even
/// where it also fits another shape (`k = 1`, `k = 4`).
pub fn classify(triple: &AdmissibleTriple) -> TripleType {
    if triple.t == 0 {
        return TripleType::Type3;
    }
    let (l1, l2) = match (triple.lambda1.as_integer(), triple.lambda2.as_integer()) {
        (Some(a), Some(b)) => (a, b),
        _ => return TripleType::Other,
    };
    let k = triple.k;
    if l2 == -1 || l1 == 1 {
        TripleType::Type1
    } else if k % 2 == 0 && ((l2 == -2 && l1 == k / 2) || (l1 == 2 && l2 == -k / 2)) {
        TripleType::Type2
    } else {
        TripleType::Other
    }
}

/// All admissible triples for valency `k`, `t` from `k−1` down to `1−k`.
pub fn admissible_triples(k: i64) -> Vec<AdmissibleTriple> {
    if k < 1 {
        return vec![];
    }
    (1 - k..=k - 1).rev().filter_map(|t| AdmissibleTriple::new(k, t)).collect()
}

/// Orders `n ≤ n_max` for which the trace condition gives positive integral
/// multiplicities. No existence claim is implied.
pub fn feasible_orders(triple: &AdmissibleTriple, n_max: usize) -> Vec<usize> {
    (1..=n_max)
        .filter(|&n| exact_multiplicities(triple.t, triple.k, n).is_ok())
        .collect()
}

/// One entry of the published table: eigenvalues are integers, or `±√k`
/// written as `Surd(±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Published {
    Int(i64),
    Surd(i64),
}

/// The published table, rows `k = 5..10`, transcribed verbatim including the
/// `(−2, −4, 2)` entry of row 8 whose eigenvalues are out of order.
pub const PUBLISHED_TABLE: &[(i64, &[(i64, Published, Published)])] = {
    use Published::{Int, Surd};
    &[
        (5, &[(4, Int(5), Int(-1)), (0, Surd(1), Surd(-1)), (-4, Int(1), Int(-5))]),
        (
            6,
            &[
                (5, Int(6), Int(-1)),
                (1, Int(3), Int(-2)),
                (0, Surd(1), Surd(-1)),
                (-1, Int(2), Int(-3)),
                (-5, Int(1), Int(-6)),
            ],
        ),
        (7, &[(6, Int(7), Int(-1)), (0, Surd(1), Surd(-1)), (-6, Int(1), Int(-7))]),
        (
            8,
            &[
                (7, Int(8), Int(-1)),
                (2, Int(4), Int(-2)),
                (0, Surd(1), Surd(-1)),
                (-2, Int(-4), Int(2)),
                (-7, Int(1), Int(-8)),
            ],
        ),
        (9, &[(8, Int(9), Int(-1)), (0, Int(3), Int(-3)), (-8, Int(1), Int(-9))]),
        (
            10,
            &[
                (9, Int(10), Int(-1)),
                (3, Int(5), Int(-2)),
                (0, Surd(1), Surd(-1)),
                (-3, Int(2), Int(-5)),
                (-9, Int(1), Int(-10)),
            ],
        ),
    ]
};

fn published_root(k: i64, p: Published) -> (i64, i64) {
    // compare as (value², sign) so that √k and integers share one shape
    match p {
        Published::Int(v) => (v * v, v.signum()),
        Published::Surd(s) => (k, s),
    }
}

/// Entries of the published table that had to be reordered to keep
/// `λ1 > λ2`, as `(k, t)`.
pub fn table1_normalizations() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for &(k, row) in PUBLISHED_TABLE {
        for &(t, l1, l2) in row {
            let (a, sa) = published_root(k, l1);
            let (b, sb) = published_root(k, l2);
            let v1 = sa as f64 * (a as f64).sqrt();
            let v2 = sb as f64 * (b as f64).sqrt();
            if v1 < v2 {
                out.push((k, t));
            }
        }
    }
    out
}

/// The published table as admissible triples, after normalizing eigenvalue
/// order. Each published entry must be consistent with `λ1 + λ2 = t` and
/// `λ1·λ2 = −k`; an inconsistent entry panics.
pub fn table1() -> BTreeMap<i64, Vec<AdmissibleTriple>> {
    let mut out = BTreeMap::new();
    for &(k, row) in PUBLISHED_TABLE {
        let triples = row
            .iter()
            .map(|&(t, l1, l2)| {
                let triple = AdmissibleTriple::new(k, t).expect("published triple is admissible");
                let mut published = [published_root(k, l1), published_root(k, l2)];
                published.sort_by_key(|&(sq, sign)| std::cmp::Reverse((sign, sign * sq)));
                let ours = [
                    root_shape(&triple.lambda1, k),
                    root_shape(&triple.lambda2, k),
                ];
                assert_eq!(published, ours, "table entry ({t}, ..) for k={k} disagrees");
                triple
            })
            .collect();
        out.insert(k, triples);
    }
    out
}

fn root_shape(r: &QuadraticRoot, k: i64) -> (i64, i64) {
    match r.as_integer() {
        Some(v) => (v * v, v.signum()),
        None => (k, r.sign),
    }
}
