use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} exceeds cap ({value} > {cap}){hint}")]
    CapExceeded {
        what: String,
        value: usize,
        cap: usize,
        hint: String,
    },

    /// An upward Ramsey scan reached its order cap without arrowing.
    #[error("no arrowing found up to order {cap}: the Ramsey number exceeds {cap}, lower bound {lower_bound}\n{log}")]
    SearchIncomplete {
        cap: usize,
        lower_bound: usize,
        log: String,
    },

    /// A proven guarantee failed on a premise-validated instance. This
    /// indicates a bug in the implementation, never in the mathematics.
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }

    pub(crate) fn cap(what: impl Into<String>, value: usize, cap: usize, hint: &str) -> Self {
        Error::CapExceeded {
            what: what.into(),
            value,
            cap,
            hint: if hint.is_empty() {
                String::new()
            } else {
                format!("; {hint}")
            },
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
