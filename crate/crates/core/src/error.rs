use thiserror::Error;

use crate::algebra::Element;
use crate::pentagon::Condition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at ({row},{col}) is outside 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("map of length {found} on a carrier of size {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("carrier sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("operation is not associative at ({}, {}, {})", .0[0], .0[1], .0[2])]
    NotAssociative([Element; 3]),
    #[error("operation has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(Element),

    #[error("subset {0:?} is not a subgroup")]
    NotSubgroup(Vec<Element>),
    #[error("subgroup {0:?} is not normal")]
    NotNormal(Vec<Element>),
    #[error("{0:?} is not a system of representatives of the right cosets")]
    NotRepresentativeSystem(Vec<Element>),
    #[error("representative system {0:?} does not contain the identity")]
    MissingIdentity(Vec<Element>),
    #[error("subgroups do not form an exact factorization: {0}")]
    NotExactFactorization(String),

    #[error("map is not idempotent at {0}")]
    NotIdempotent(Element),
    #[error("map is not an endomorphism at ({0}, {1})")]
    NotEndomorphism(Element, Element),
    #[error("maps do not commute at {0}")]
    NotCommuting(Element),
    #[error("element {0} is not idempotent")]
    NotIdempotentElement(Element),

    #[error("map is not invertible")]
    NotInvertible,
    #[error("dot table differs from the group operation at ({0}, {1})")]
    DotMismatch(Element, Element),
    #[error("not a solution: {condition} fails at ({}, {}, {})", .at[0], .at[1], .at[2])]
    NotSolution {
        condition: Condition,
        at: [Element; 3],
    },

    #[error("{what}: {required} candidates exceed the scan budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        budget: u128,
    },
    #[error("{what} is only defined for sizes in {min}..={max}, got {n}")]
    SizeOutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
