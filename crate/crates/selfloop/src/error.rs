use thiserror::Error;

pub type Result<T, E = ShellError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum ShellError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("loop line: {0}")]
    LoopLine(String),
    #[error(transparent)]
    Core(#[from] selfloop_core::Error),
    #[error("hard gate `{gate}` failed on `{witness}`: {detail}")]
    HardGate {
        gate: &'static str,
        witness: String,
        detail: String,
    },
    #[error("oracle mismatch at n={n}, sigma={sigma}: {detail}")]
    Oracle { n: usize, sigma: usize, detail: String },
    #[error("exhaustive enumeration is limited to n <= {max}, got {requested}")]
    Budget { requested: usize, max: usize },
    #[error("invalid campaign configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl ShellError {
    /// Parse and usage errors exit with 2, everything else with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            ShellError::Graph6(_)
            | ShellError::LoopLine(_)
            | ShellError::Config(_)
            | ShellError::Budget { .. } => 2,
            ShellError::Core(e) if is_input_error(e) => 2,
            _ => 1,
        }
    }
}

fn is_input_error(e: &selfloop_core::Error) -> bool {
    use selfloop_core::Error::*;
    matches!(
        e,
        VertexOutOfRange { .. }
            | DuplicateVertex(_)
            | LoopEdge(_)
            | DuplicateEdge(..)
            | UnknownFamily(_)
            | InvalidFamilyParams(_)
            | UnknownBound(_)
    )
}
