//! Structured verification report shared by the library and the CLI.

use serde::Serialize;

use crate::exec::Execution;
use crate::graph::SignedGraph;
use crate::spectra::eigen::JacobiSolver;
use crate::spectra::exact::{fsrsg_parameters, verify_ste_exact, ExactSpectrum};
use crate::spectra::ramanujan::{ramanujan_check_with, RamanujanReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteReport {
    pub t: i64,
    pub k: i64,
    pub b: i64,
    pub lambda1: String,
    pub lambda2: String,
    pub m1: usize,
    pub m2: usize,
}

impl From<&ExactSpectrum> for SteReport {
    fn from(s: &ExactSpectrum) -> Self {
        SteReport {
            t: s.t,
            k: s.k,
            b: s.b(),
            lambda1: s.lambda1().to_string(),
            lambda2: s.lambda2().to_string(),
            m1: s.m1,
            m2: s.m2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub regular: Option<usize>,
    pub ste: Option<SteReport>,
    pub rho: Option<i64>,
    pub ramanujan: Option<RamanujanReport>,
}

impl VerificationReport {
    pub fn is_ste(&self) -> bool {
        self.ste.is_some()
    }
}

/// Run every applicable check on `g`: regularity, the exact two-eigenvalue
/// identity, `ρ` recovery and, for `k ≥ 2`, the Ramanujan bound.
pub fn verify_graph(g: &SignedGraph, solver: &JacobiSolver) -> VerificationReport {
    let regular = g.regularity();
    let ste = verify_ste_exact(g).as_ref().map(SteReport::from);
    let rho = fsrsg_parameters(g).and_then(|p| p.rho);
    let ramanujan = match regular {
        Some(k) if k >= 2 => ramanujan_check_with(g, solver).ok(),
        _ => None,
    };
    VerificationReport {
        regular,
        ste,
        rho,
        ramanujan,
    }
}

/// Verify a batch of graphs; each graph is checked independently.
pub fn verify_many(graphs: &[SignedGraph], exec: Execution) -> Vec<VerificationReport> {
    // The per-graph eigensolver stays sequential when the batch fans out.
    let inner = JacobiSolver::with_execution(if exec.is_parallel() {
        Execution::Sequential
    } else {
        exec
    });
    exec.map(graphs, |g| verify_graph(g, &inner))
}

/// Render with 12 significant digits, trailing zeros trimmed.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}
