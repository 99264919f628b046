use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::spectra::eigen::JacobiSolver;

/// Slack added to the bound when comparing floats.
pub const RAMANUJAN_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RamanujanReport {
    pub k: usize,
    pub lambda_max: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Compare the largest adjacency eigenvalue with `2√(k−1)`.
pub fn ramanujan_check(g: &SignedGraph) -> Result<RamanujanReport> {
    ramanujan_check_with(g, &JacobiSolver::default())
}

pub fn ramanujan_check_with(g: &SignedGraph, solver: &JacobiSolver) -> Result<RamanujanReport> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k < 2 {
        return Err(Error::ValencyTooSmall { k, min: 2 });
    }
    let values = solver.eigenvalues(g.adjacency())?;
    let lambda_max = values.last().copied().unwrap_or(0.0);
    let bound = 2.0 * ((k - 1) as f64).sqrt();
    Ok(RamanujanReport {
        k,
        lambda_max,
        bound,
        pass: lambda_max <= bound + RAMANUJAN_SLACK,
    })
}
