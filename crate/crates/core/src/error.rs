use std::fmt;

use thiserror::Error;

use crate::finspace::PointSet;

/// The topology axiom a candidate family failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    ContainsEmpty,
    ContainsGround,
    /// Union of the two opens is missing from the family.
    UnionClosed(PointSet, PointSet),
    /// Intersection of the two opens is missing from the family.
    IntersectionClosed(PointSet, PointSet),
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::ContainsEmpty => write!(f, "the empty set is not open"),
            Axiom::ContainsGround => write!(f, "the ground set is not open"),
            Axiom::UnionClosed(a, b) => write!(f, "union of {a} and {b} is not open"),
            Axiom::IntersectionClosed(a, b) => {
                write!(f, "intersection of {a} and {b} is not open")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axiom violation: {0}")]
    AxiomViolation(Axiom),

    #[error("set with mask {mask:#x} is not contained in the {points}-point ground set")]
    GroundMismatch { mask: u64, points: usize },

    #[error("{0} points requested; ground sets are limited to {max}", max = PointSet::MAX_POINTS)]
    TooManyPoints(usize),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("not open: {0}")]
    NotOpen(String),

    #[error("{0} is not an element of the carrier")]
    NotInCarrier(PointSet),

    #[error("an eventually periodic sequence needs a non-empty cycle")]
    EmptyCycle,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
