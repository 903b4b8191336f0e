use thiserror::Error;

pub type Result<T> = std::result::Result<T, EccError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EccError {
    /// Malformed graph data: loops, out-of-range vertices, empty vertex sets.
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exact routine was asked to run above its size cap.
    #[error("capacity error: {what} supports n <= {cap}, got n = {n}")]
    Capacity { what: &'static str, n: usize, cap: usize },

    /// A construction was invoked on a graph that does not meet its hypotheses.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search budget of {budget} nodes exhausted in {what}")]
    Budget { what: &'static str, budget: u64 },

    /// The set `C_z` built from uncovered dominating edges at `z` is not a clique.
    #[error("hypothesis violation: C_{z} contains non-adjacent pair ({a}, {b})")]
    HypothesisViolation { z: usize, a: usize, b: usize },

    /// Uncovered dominating edges remain but no favourable vertex exists.
    #[error("elimination stalled with {remaining} uncovered dominating edges and no favourable vertex")]
    SupercyclePresent { remaining: usize },

    #[error("counterexample: cover of size {size} exceeds bound {bound} ({context})")]
    Counterexample { size: usize, bound: usize, context: String },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("generation failed after {attempts} attempts: {reason}")]
    Generation { attempts: usize, reason: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for EccError {
    fn from(e: std::io::Error) -> Self {
        EccError::Io(e.to_string())
    }
}
