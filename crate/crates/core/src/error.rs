use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed rule expression; `position` is a byte offset into the rule text.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    /// Error located on a line of a rule file (1-based).
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("missing value for variable `{0}`")]
    MissingVariable(String),

    #[error("duplicate node `{0}`")]
    DuplicateNode(String),

    #[error("rule of `{node}` depends on undeclared node `{dependency}`")]
    UndeclaredDependency { node: String, dependency: String },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("invalid update schedule: {0}")]
    InvalidSchedule(String),

    #[error("labeling is not an update digraph")]
    InvalidLabeling,

    #[error("state space of width {width} exceeds the configured maximum of {max}")]
    WidthGuard { width: usize, max: usize },

    #[error("{items} {what} exceed the configured maximum of {max}")]
    Guard {
        what: &'static str,
        items: u128,
        max: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid state `{0}`")]
    InvalidState(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::Line {
            line,
            source: Box::new(self),
        }
    }

    /// True for errors raised by one of the tractability guards.
    pub fn is_guard(&self) -> bool {
        match self {
            Error::WidthGuard { .. } | Error::Guard { .. } => true,
            Error::Line { source, .. } => source.is_guard(),
            _ => false,
        }
    }
}
