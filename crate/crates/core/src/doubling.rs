//! `Ac(Σ) = [[A, I], [I, −A]]` and the chains it generates.
//!
//! If `A² = kI` then `Ac² = (k+1)I`, so each step raises the valency by one
//! and doubles the order. From `K₂` (valency 1, order 2) the valency-`k`
//! level has `2^k` vertices; from the signed `K₆` seed (valency 5) it has
//! `3·2^{k−4}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::SignedGraph;
use crate::matrix::IntMatrix;

/// Check `A² = kI` and return `k`.
pub fn weighing_valency(g: &SignedGraph) -> Result<usize> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    let a = g.adjacency();
    let a2 = a.mul(a)?;
    match a2.first_scalar_violation(k as i64) {
        None => Ok(k),
        Some((row, col, value)) => Err(Error::NotWeighingGraph { k, row, col, value }),
    }
}

pub fn ac(g: &SignedGraph) -> Result<SignedGraph> {
    weighing_valency(g)?;
    Ok(ac_unchecked(g))
}

fn ac_unchecked(g: &SignedGraph) -> SignedGraph {
    let a = g.adjacency();
    let i = IntMatrix::identity(g.order());
    let neg = a.scale(-1);
    let adj = IntMatrix::block(&[vec![a, &i], vec![&i, &neg]]).expect("square blocks");
    SignedGraph::from_adjacency(adj).expect("valid signed adjacency")
}

/// The signed `K₆` of the pentagon figure; `A² = 5I`.
pub fn pentagon_seed() -> SignedGraph {
    let g = fixtures::pentagon();
    assert_eq!(weighing_valency(&g), Ok(5), "pentagon fixture must satisfy A^2 = 5I");
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainSeed {
    K2,
    Pentagon,
    Custom(SignedGraph),
}

impl ChainSeed {
    pub fn graph(&self) -> SignedGraph {
        match self {
            ChainSeed::K2 => SignedGraph::complete_positive(2),
            ChainSeed::Pentagon => pentagon_seed(),
            ChainSeed::Custom(g) => g.clone(),
        }
    }

    /// Valency of the seed, after checking `A² = kI`.
    pub fn valency(&self) -> Result<usize> {
        match self {
            ChainSeed::K2 => Ok(1),
            ChainSeed::Pentagon => Ok(5),
            ChainSeed::Custom(g) => weighing_valency(g),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            ChainSeed::K2 => 2,
            ChainSeed::Pentagon => 6,
            ChainSeed::Custom(g) => g.order(),
        }
    }
}

impl fmt::Display for ChainSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainSeed::K2 => f.write_str("k2"),
            ChainSeed::Pentagon => f.write_str("pentagon"),
            ChainSeed::Custom(g) => write!(f, "custom({} vertices)", g.order()),
        }
    }
}

impl FromStr for ChainSeed {
    type Err = Error;

    /// `k2` or `pentagon`; custom seeds are built from a parsed graph.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k2" => Ok(ChainSeed::K2),
            "pentagon" => Ok(ChainSeed::Pentagon),
            other => Err(Error::InvalidArgument(format!("unknown seed '{other}'"))),
        }
    }
}

/// A seed and a target valency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub seed: ChainSeed,
    pub k: usize,
}

impl ChainSpec {
    pub fn new(seed: ChainSeed, k: usize) -> Result<Self> {
        let k0 = seed.valency()?;
        if k < k0 {
            return Err(Error::InvalidArgument(format!(
                "target valency {k} is below the seed valency {k0}"
            )));
        }
        Ok(ChainSpec { seed, k })
    }

    /// Order of the result: `n₀·2^{k−k₀}`.
    pub fn order(&self) -> usize {
        let k0 = self.seed.valency().expect("checked in new");
        self.seed.order() << (self.k - k0)
    }
}

/// Apply `ac` until the valency reaches `k`.
pub fn chain(seed: &ChainSeed, k: usize) -> Result<SignedGraph> {
    Ok(chain_levels(seed, k)?.pop().expect("at least the seed"))
}

/// Every level from the seed up to valency `k`, seed first.
pub fn chain_levels(seed: &ChainSeed, k: usize) -> Result<Vec<SignedGraph>> {
    let spec = ChainSpec::new(seed.clone(), k)?;
    let k0 = spec.seed.valency()?;
    let mut levels = vec![spec.seed.graph()];
    for _ in k0..k {
        let next = ac_unchecked(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}
