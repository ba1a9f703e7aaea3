use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed input: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("line {line}: vertex id {id} outside [1, {n}]")]
    VertexRange { line: usize, id: u64, n: usize },

    #[error("line {line}: negative arc weight {weight}")]
    NegativeWeight { line: usize, weight: i64 },

    #[error("arc structure mismatch at sorted arc #{index}: {msg}")]
    Consistency { index: usize, msg: String },

    #[error("vertex {id} does not exist (graph has {n} vertices)")]
    InvalidVertex { id: usize, n: usize },

    #[error(
        "invalid approximation factor ({eps1}, {eps2}): both components must be finite and >= 0"
    )]
    InvalidApprox { eps1: f64, eps2: f64 },

    #[error("heuristic table was computed for goal {table_goal}, query asks for goal {goal}")]
    GoalMismatch { table_goal: usize, goal: usize },

    #[error("label budget of {budget} exceeded")]
    LabelBudget { budget: usize },

    #[error("instance generation failed: {0}")]
    Generation(String),

    #[error("heuristic cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
