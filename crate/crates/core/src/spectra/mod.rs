//! Exact and numerical spectral verification.

pub mod eigen;
pub mod exact;
pub mod ramanujan;
pub mod report;

pub use eigen::{cluster, eigenvalues_float, reconstruction_residual, JacobiSolver, SymmetricEigen, Tolerances};
pub use exact::{
    exact_multiplicities, exact_sqrt, fsrsg_parameters, is_weighing, verify_ste_exact, weighing_weight, ExactSpectrum,
    FsrsgParams, QuadraticRoot,
};
pub use ramanujan::{ramanujan_check, ramanujan_check_with, RamanujanReport};
pub use report::{verify_graph, SteReport, VerificationReport};
