use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),

    #[error("edge ({0}, {0}) would be a loop; loops belong in the loop set")]
    LoopEdge(usize),

    #[error("edge ({0}, {1}) listed more than once")]
    DuplicateEdge(usize, usize),

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("line graph of a graph without edges or loops is empty")]
    EmptyLineGraph,

    #[error("graph has no edges")]
    NoEdges,

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("partition block is empty")]
    DegeneratePartition,

    #[error("partition is not equitable: block ({0}, {1}) has non-constant row sums")]
    NonEquitablePartition(usize, usize),

    #[error("symmetric eigensolver did not converge for order {order} after {iterations} iterations")]
    NoConvergence { order: usize, iterations: usize },

    #[error("eigenpair residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },

    #[error("numeric integrity check `{check}` failed: got {got}, expected {expected}")]
    NumericIntegrity {
        check: &'static str,
        got: f64,
        expected: f64,
    },

    #[error("clearing degree {clear} is below polynomial degree {degree}")]
    ClearDegree { clear: usize, degree: usize },

    #[error("unknown bound id `{0}`")]
    UnknownBound(String),

    #[error("family `{family}` is not an equality family of bound {bound}")]
    FamilyMismatch { bound: String, family: String },

    #[error("{0}")]
    Domain(&'static str),
}
