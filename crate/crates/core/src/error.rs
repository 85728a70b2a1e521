use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A triple component was zero or negative.
    NonPositive(i64),
    NotPairwiseCoprime(u64, u64),
    /// A triple with a component equal to 1 (the three-sphere) was passed
    /// where exceptional fibers are required.
    DegenerateTriple,
    UnknownFamily(String),
    InadmissibleN { family: &'static str, n: i64 },
    InvalidFraction { numerator: i64, denominator: i64 },
    InvalidSeifertData(String),
    NotStarShaped,
    NotATree,
    VertexOutOfRange(usize),
    NotSymmetric,
    DimensionMismatch { expected: usize, found: usize },
    SingularMatrix,
    EvenDeterminant,
    NotUnimodular(BigInt),
    NotNegativeDefinite,
    NotDivisibleBy8(i64),
    IllegalBlowdown { component: String, framing: i64 },
    SameComponent(String),
    DuplicateLabel(String),
    UnknownLabel(String),
    Overflow,
    UnsupportedFamily(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive(v) => write!(f, "triple component {v} is not positive"),
            Error::NotPairwiseCoprime(a, b) => {
                write!(f, "components {a} and {b} are not coprime")
            }
            Error::DegenerateTriple => write!(f, "triple has a unit component (S^3)"),
            Error::UnknownFamily(id) => write!(f, "unknown family `{id}`"),
            Error::InadmissibleN { family, n } => {
                write!(f, "n = {n} is not admissible for family {family}")
            }
            Error::InvalidFraction { numerator, denominator } => {
                write!(f, "{numerator}/{denominator} is not a reduced fraction > 1")
            }
            Error::InvalidSeifertData(msg) => write!(f, "invalid Seifert data: {msg}"),
            Error::NotStarShaped => write!(f, "graph is not a three-legged star"),
            Error::NotATree => write!(f, "edge set does not form a tree"),
            Error::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Error::NotSymmetric => write!(f, "matrix is not symmetric"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::EvenDeterminant => write!(f, "determinant is even"),
            Error::NotUnimodular(d) => write!(f, "determinant {d} is not ±1"),
            Error::NotNegativeDefinite => write!(f, "form is not negative definite"),
            Error::NotDivisibleBy8(v) => write!(f, "{v} is not divisible by 8"),
            Error::IllegalBlowdown { component, framing } => {
                write!(f, "cannot blow down `{component}` with framing {framing}")
            }
            Error::SameComponent(c) => write!(f, "cannot slide `{c}` over itself"),
            Error::DuplicateLabel(c) => write!(f, "label `{c}` already in use"),
            Error::UnknownLabel(c) => write!(f, "no component labelled `{c}`"),
            Error::Overflow => write!(f, "integer overflow"),
            Error::UnsupportedFamily(id) => write!(f, "no move script for family {id}"),
        }
    }
}

impl core::error::Error for Error {}
