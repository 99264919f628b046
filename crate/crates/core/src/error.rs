use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{u}, {v}}} has sign {sign}, expected -1 or 1")]
    InvalidSign { u: usize, v: usize, sign: i64 },
    #[error("entry ({row}, {col}) = {value} is outside {{-1, 0, 1}}")]
    InvalidEntry { row: usize, col: usize, value: i64 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("nonzero diagonal entry at vertex {vertex}")]
    NonZeroDiagonal { vertex: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("signed graph is not regular")]
    NotRegular,
    #[error("valency {k} too small, need k >= {min}")]
    ValencyTooSmall { k: usize, min: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("no STE of this order exists with these parameters (t={t}, k={k}, n={n})")]
    NoSuchSte { t: i64, k: i64, n: usize },
    #[error("invalid order m={m}: {reason}")]
    InvalidOrder { m: usize, reason: String },
    #[error("pattern column {column} has {count} ones, expected 2")]
    PatternColumn { column: usize, count: usize },
    #[error("row {row} has {count} nonzero entries, expected 4")]
    ExpandRow { row: usize, count: usize },
    #[error("matrix is not a weighing matrix")]
    NotWeighing,
    #[error("entry ({row}, {col}) of W1^t W2 is {value}, so W1^t W2 / 2 leaves {{-1, 0, 1}}")]
    BlockEntry { row: usize, col: usize, value: i64 },
    #[error("A^2 != {k}I: entry ({row}, {col}) is {value}")]
    NotWeighingGraph { k: usize, row: usize, col: usize, value: i64 },
    #[error("{0}")]
    SingularBlock(String),
    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown format '{0}'")]
    UnknownFormat(String),
    #[error("order {order} exceeds the size guard of {limit} vertices")]
    SizeGuard { order: usize, limit: usize },
}
