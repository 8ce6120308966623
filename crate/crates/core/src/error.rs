use thiserror::Error;

/// Errors raised by the numerical and constant-evaluation routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite value encountered at {at}")]
    NonFinite { at: f64 },
    #[error(
        "subdivision budget of {max} exhausted (estimated error {estimate:e}, target {target:e})"
    )]
    BudgetExceeded {
        max: usize,
        estimate: f64,
        target: f64,
    },
    #[error("exponentially weighted tail does not decay before u = {reached}")]
    TailNotConvergent { reached: f64 },
    #[error("argument {re} + {im}i is a pole of the gamma function")]
    PoleInput { re: f64, im: f64 },
    #[error("requested size {requested} exceeds the ceiling {ceiling}")]
    LimitExceeded { requested: u64, ceiling: u64 },
    #[error("tail beyond cutoff {cutoff} is {tail:e}, too large relative to {value:e}")]
    CutoffTooSmall { cutoff: u64, tail: f64, value: f64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("condition violated: {0}")]
    ConditionsViolated(String),
    #[error("starting point is infeasible")]
    InfeasibleStart,
    #[error("no feasible point among {samples} samples")]
    NoFeasiblePoint { samples: usize },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for a domain error with a formatted message.
pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
