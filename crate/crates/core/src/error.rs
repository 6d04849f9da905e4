use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter set or bound vector that can never produce a valid run.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An operation was called outside its contract (empty population,
    /// mismatched dimensions, iteration past the budget, ...).
    #[error("usage error: {0}")]
    Usage(String),

    #[error("unknown problem `{name}`{}", suggestion_suffix(.suggestion))]
    UnknownProblem {
        name: String,
        suggestion: Option<String>,
    },

    #[error("unknown algorithm `{name}`{}", suggestion_suffix(.suggestion))]
    UnknownAlgorithm {
        name: String,
        suggestion: Option<String>,
    },

    #[error("statistics: {0}")]
    Stats(String),

    #[error("config parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

fn suggestion_suffix(s: &Option<String>) -> String {
    match s {
        Some(name) => format!(" (did you mean `{name}`?)"),
        None => String::new(),
    }
}

impl Error {
    /// Short machine-readable tag used by the CLI error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Config(_) => "config",
            Error::Usage(_) => "usage",
            Error::UnknownProblem { .. } => "unknown-problem",
            Error::UnknownAlgorithm { .. } => "unknown-algorithm",
            Error::Stats(_) => "stats",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
