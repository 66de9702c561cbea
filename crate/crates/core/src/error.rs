use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group is not transitive")]
    NotTransitive,
    #[error("dessin is not connected")]
    NotConnected,
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("images do not generate the target group")]
    NotSurjective,
    #[error("expected {expected} images, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("bad degree {0}: need n >= 3")]
    BadDegree(usize),
    #[error("type ({0},{1},{2}) is not hyperbolic")]
    NotHyperbolic(u64, u64, u64),
    #[error("type has an infinite period")]
    NotCocompact,
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("PSL(2,{prime}) has no element of order {order}")]
    OrderNotPresent { order: u64, prime: u64 },
    #[error("no generating pair found (seed {seed}, budget {budget})")]
    NoPairFound { seed: u64, budget: u64 },
    #[error("stabilizer abelianization has torsion {0:?}")]
    TorsionDetected(Vec<i128>),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("window radius {got} is below the minimum {min}")]
    WindowTooSmall { min: i64, got: i64 },
    #[error("modulus {0} is below 2")]
    BadModulus(i64),
    #[error("invalid map parameters: {0}")]
    BadMap(String),
    #[error("diagram violates {0}")]
    NotSymmetric(&'static str),
    #[error("invalid handle ({0}, {1})")]
    InvalidHandle(usize, usize),
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),
    #[error("integer overflow in Smith normal form")]
    Overflow,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
