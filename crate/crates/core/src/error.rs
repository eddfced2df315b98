use std::fmt;

/// Error type shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by zero in an exact field.
    DivisionByZero,
    /// A field operation mixed elements of incompatible fields.
    FieldMismatch(String),
    /// Requested an operation whose precondition does not hold.
    Precondition(String),
    /// Matrix shape mismatch.
    Shape(String),
    /// Malformed textual or JSON input.
    Parse(String),
    /// A representation failed validation; carries the offending relation.
    InvalidRepresentation(String),
    /// No generic frame found within the retry budget.
    FrameSearchExhausted,
    /// A frame no longer satisfies the genericity assumptions.
    StaleFrame(String),
    /// A closed-form determinant factor vanished (zero epsilon on a loop).
    VanishingFactor(String),
    /// A bounded search finished without a certificate.
    SearchExhausted(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch(s) => write!(f, "field mismatch: {s}"),
            Error::Precondition(s) => write!(f, "precondition failed: {s}"),
            Error::Shape(s) => write!(f, "shape error: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::InvalidRepresentation(s) => write!(f, "invalid representation: {s}"),
            Error::FrameSearchExhausted => {
                write!(f, "no generic frame found within 1000 shear candidates")
            }
            Error::StaleFrame(s) => write!(f, "stale frame: {s}"),
            Error::VanishingFactor(s) => write!(f, "vanishing determinant factor: {s}"),
            Error::SearchExhausted(s) => write!(f, "search exhausted: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
