use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {context} expects {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("invalid structure constants: {0}")]
    InvalidConstants(String),

    #[error("inconsistent twisted structure constants at ({i}, {j}, {k}): {forward} vs {backward}")]
    InconsistentTwist {
        i: usize,
        j: usize,
        k: usize,
        forward: f64,
        backward: f64,
    },

    #[error("algebra is not 2-step nilpotent: [[e{}, e{}], e{}] has norm {residual:e}", .witness.0 + 1, .witness.1 + 1, .witness.2 + 1)]
    NotTwoStepNilpotent {
        witness: (usize, usize, usize),
        residual: f64,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("product order {order} exceeds the brute-force cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("twist condition violated at (g = {g}, h = {h}); inverse is not two-sided")]
    ConditionViolated { g: usize, h: usize },

    #[error("finite differences did not converge: residual {residual:e} exceeds {tolerance:e}")]
    NonConvergence { residual: f64, tolerance: f64 },

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("{0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}
