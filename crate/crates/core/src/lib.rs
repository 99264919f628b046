//! Signed regular graphs with exactly two distinct eigenvalues.
//!
//! Constructions (line graphs of complete graphs, weight-4 weighing-matrix
//! blocks, `Ac` doubling chains) are always paired with an exact check of
//! `A² − tA − kI = 0`. Floating-point eigenvalues come from a cyclic Jacobi
//! solver and serve as an independent oracle. With the `parallel` feature
//! the solver, integer products and batch checks run on rayon; results are
//! identical either way.

pub mod doubling;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod linegraph;
pub mod matrix;
pub mod params;
pub mod qext;
pub mod spectra;
pub mod starcomp;
pub mod weighing;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::SignedGraph;
pub use matrix::{IntMatrix, SignedMatrix};
pub use qext::{QExt, QMatrix};
