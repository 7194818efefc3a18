use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Syntax error in a text input. `line` is 1-based, 0 when unknown.
    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("T must be a unit in the quotient ring")]
    NotUnit,

    #[error("{0}")]
    InvalidArgument(String),

    /// The operation requires a stronger structure than the table has.
    #[error("{0}")]
    Structure(String),

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("non-planar diagram: {0}")]
    NonPlanar(String),

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    #[error("size budget exceeded: {needed} basis elements requested, budget is {budget}")]
    Budget { needed: usize, budget: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::MalformedTable(_)
            | Error::InvalidGroup(_)
            | Error::Diagram(_)
            | Error::NonPlanar(_) => 2,
            Error::Budget { .. } => 3,
            _ => 1,
        }
    }
}
