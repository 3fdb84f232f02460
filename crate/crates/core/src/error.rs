//! Error type shared by the whole crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A composition part was zero, or both compositions were empty.
    InvalidComposition(String),
    /// A vertex outside {0} ∪ [n] was passed to a graph operation.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An unstable configuration where a stable one is required.
    UnstableInput,
    /// A negative configuration where a non-negative one is required.
    NegativeInput,
    /// A configuration that is not monotone along each component.
    NotSorted,
    /// The toppling algorithm stalled: the input is not recurrent.
    NotRecurrent,
    /// An enumeration or oracle query exceeded its size bound.
    BoundExceeded { n: usize, max: usize },
    /// Column data that does not describe a parking function.
    NotAParkingFunction(String),
    /// A reading word outside the shuffle set of the given compositions.
    NotInShuffle,
    /// Two symmetric functions of different degrees were paired.
    DegreeMismatch { left: usize, right: usize },
    /// An internal invariant of the symbolic oracle was breached.
    OracleInvariant(String),
    ParseError(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Error::InvalidComposition(s) => write!(f, "invalid composition: {s}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph with {n} non-sink vertices")
            }
            Error::UnstableInput => write!(f, "configuration is unstable"),
            Error::NegativeInput => write!(f, "configuration has a negative vertex"),
            Error::NotSorted => write!(f, "configuration is not sorted"),
            Error::NotRecurrent => write!(f, "configuration is not recurrent"),
            Error::BoundExceeded { n, max } => {
                write!(f, "size {n} exceeds the configured bound {max}")
            }
            Error::NotAParkingFunction(s) => write!(f, "not a parking function: {s}"),
            Error::NotInShuffle => write!(f, "reading word is not in the shuffle set"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::OracleInvariant(s) => write!(f, "oracle invariant breached: {s}"),
            Error::ParseError(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
