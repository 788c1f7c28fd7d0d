use core::fmt;

use crate::cost::GarbagePolicy;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Line count outside the range an operation supports.
    LineCount { lines: u32, min: u32, max: u32 },
    LineMismatch { expected: u32, found: u32 },
    /// Truth vector length is not a power of two of at least 2.
    Length(usize),
    ValueOutOfRange { value: u32, bound: u32 },
    Duplicate { value: u32 },
    RankOutOfRange,
    /// Lehmer rank does not fit the rank type for this many lines.
    RankOverflow { lines: u32 },
    InvalidGate(&'static str),
    GateSize { size: u32, min: u32 },
    Policy { size: u32, policy: GarbagePolicy },
    NegativeCount { negatives: u32, lines: u32 },
    LineBudget { lines: u32, max: u32 },
    GraphTooLarge { lines: u32, vertices: u128 },
    QuantumGate(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LineCount { lines, min, max } => {
                write!(f, "line count {lines} outside supported range {min}..={max}")
            }
            Error::LineMismatch { expected, found } => {
                write!(f, "line count mismatch: expected {expected}, found {found}")
            }
            Error::Length(len) => {
                write!(f, "truth vector length {len} is not a power of two >= 2")
            }
            Error::ValueOutOfRange { value, bound } => {
                write!(f, "value {value} out of range 0..{bound}")
            }
            Error::Duplicate { value } => {
                write!(f, "not a bijection: value {value} occurs more than once")
            }
            Error::RankOutOfRange => write!(f, "rank out of range"),
            Error::RankOverflow { lines } => {
                write!(f, "permutation rank for {lines} lines does not fit in 128 bits")
            }
            Error::InvalidGate(msg) => write!(f, "invalid gate: {msg}"),
            Error::GateSize { size, min } => {
                write!(f, "gate size {size} too small, need at least {min}")
            }
            Error::Policy { size, policy } => {
                write!(f, "garbage policy {policy} is not defined for gate size {size}")
            }
            Error::NegativeCount { negatives, lines } => {
                write!(f, "{negatives} negative controls impossible for a {lines}-line gate")
            }
            Error::LineBudget { lines, max } => {
                write!(f, "{lines} lines exceed the budget of {max}")
            }
            Error::GraphTooLarge { lines, vertices } => write!(
                f,
                "exhaustive search over {lines} lines is out of reach ({vertices} vertices)"
            ),
            Error::QuantumGate(msg) => write!(f, "unsupported quantum gate: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
