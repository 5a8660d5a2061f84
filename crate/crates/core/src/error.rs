use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("interval straddles an integer; re-evaluate at higher precision")]
    IntervalStraddlesInteger,
    #[error("interval straddles a half-integer; re-evaluate at higher precision")]
    IntervalStraddlesHalfInteger,
    #[error("parse error in {input:?}: {message}")]
    Parse { input: String, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("horizon exceeded: {required} is beyond the horizon {horizon}")]
    HorizonExceeded { required: String, horizon: String },
    #[error("insufficient convergents: need q_t > {m}, largest available is {largest}")]
    InsufficientConvergents { m: String, largest: String },
    #[error("bad rational approximation: {0}")]
    BadRationalApproximation(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("golden file: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: &str, message: impl Into<String>) -> Error {
        Error::Parse { input: input.to_string(), message: message.into() }
    }

    /// True for errors that a retry at higher precision may resolve.
    pub fn is_precision_related(&self) -> bool {
        matches!(
            self,
            Error::PrecisionExhausted(_)
                | Error::IntervalStraddlesInteger
                | Error::IntervalStraddlesHalfInteger
        )
    }
}
