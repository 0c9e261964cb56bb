use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed caller data, such as a loop edge or a point outside `1..=n`.
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation was called without its precondition holding.
    #[error("precondition violated: {0}")]
    Contract(String),

    /// An exponential routine refused to run past its size guard.
    #[error("refusing to run: {what} is {value}, above the guard of {guard}")]
    Guard {
        what: &'static str,
        value: usize,
        guard: usize,
    },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
