use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors from the polynomial text parser. `offset` is a byte offset into
/// the input string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("invalid literal `{text}` at byte {offset}: {reason}")]
    Literal { offset: usize, text: String, reason: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownVariable { offset, .. }
            | ParseError::Literal { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("polynomials are over different variable lists")]
    VariableMismatch,
    #[error("variable index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("iteration cap of {cap} reduction steps exceeded")]
    IterationCap { cap: usize },
    #[error("quotient is infinite-dimensional ({context})")]
    InfiniteDimension { context: String },
    #[error("element is not in the ideal")]
    NotMember,
    #[error("curve is not invariant: df_{row}(v) is not in <f> in the local ring", row = .row + 1)]
    NotInvariant { row: usize },
    #[error(
        "Lê–Greuel chain failed at step {step} (generator order {order:?}): \
         the truncated germ is not an isolated complete intersection"
    )]
    MilnorChain { step: usize, order: Vec<usize> },
    #[error("chart {chart} is not a standard chart of P^{m}")]
    InvalidChart { chart: usize, m: usize },
    #[error("{what} is not homogeneous of degree {expected}")]
    DegreeMismatch { what: String, expected: u32 },
    #[error("point {index} duplicates point {previous}")]
    DuplicatePoint { index: usize, previous: usize },
    #[error("point {index} does not lie on the curve")]
    PointNotOnCurve { index: usize },
    #[error("{0}")]
    Invalid(String),
}
