use thiserror::Error;

use crate::carrier::SetError;
use crate::group::TableError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("{0} is not a subgroup")]
    InvalidSubgroup(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not normal in {1}")]
    NotNormal(&'static str, &'static str),
    #[error("action of element {0} is not a bijection of the point set")]
    NotBijective(usize),
    #[error("action of the unit moves point {0}")]
    UnitNotIdentity(usize),
    #[error("action is not a morphism: to({0}*{1}, {2}) != to({0}, to({1}, {2}))")]
    NotMorphism(usize, usize, usize),
    #[error(
        "action sends point {point} under element {element} to {image}, outside {size} points"
    )]
    PointOutOfRange {
        element: usize,
        point: usize,
        image: usize,
        size: usize,
    },
    #[error("conjugating family member {1} by element {0} leaves the family")]
    FamilyNotClosed(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("acting subgroup has order {card}, not a power of {p}")]
    NotPPower { card: usize, p: usize },
    #[error("{p} does not divide {card}")]
    DoesNotDivide { p: usize, card: usize },
    #[error("divisor logarithm base must be at least 2, got {0}")]
    BadBase(usize),
    #[error("divisor logarithm of 0 is undefined")]
    BadArg,
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),
    #[error("constructed quotient table is not a group: {0}")]
    QuotientTable(TableError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
