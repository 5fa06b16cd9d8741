use std::fmt;

use thiserror::Error;

use crate::ideals::{Escape, IdealKind};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid system: {0}")]
    InvalidModel(String),

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("subset is over {found} states but the system has {expected}")]
    SubsetSizeMismatch { expected: usize, found: usize },

    #[error("kind {kind} is not valid here, expected {expected}")]
    WrongKind {
        kind: IdealKind,
        expected: &'static str,
    },

    #[error("not a chemical ideal: {0} escapes")]
    NotChemicalIdeal(Escape),

    #[error("not a two-sided gamma-ideal: {0} escapes")]
    NotTwoSidedIdeal(Escape),

    #[error("{what} has size {size}, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("systems do not share the same mediator list")]
    MediatorMismatch,

    #[error("search budget of {budget} nodes exhausted after {found} results")]
    BudgetExhausted { budget: u64, found: u64 },

    #[error("unknown {kind} name `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Parse failure with the 1-based line it was detected on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    BadVersion(String),
    BadHeader {
        expected: &'static str,
        found: String,
    },
    EmptyDeclaration(&'static str),
    DuplicateName {
        kind: &'static str,
        name: String,
    },
    BadName(String),
    MalformedLine(String),
    UnknownName {
        kind: &'static str,
        token: String,
    },
    DuplicateTuple {
        tuple: String,
        first_line: usize,
    },
    MissingTuple(String),
    DuplicateMapping {
        name: String,
        first_line: usize,
    },
    MissingMapping(String),
    UnexpectedEnd(&'static str),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::BadVersion(found) => {
                write!(f, "bad version line `{found}`, expected `tgs v1`")
            }
            ParseErrorKind::BadHeader { expected, found } => {
                write!(f, "expected `{expected}` header, found `{found}`")
            }
            ParseErrorKind::EmptyDeclaration(what) => write!(f, "no {what} declared"),
            ParseErrorKind::DuplicateName { kind, name } => {
                write!(f, "{kind} name `{name}` declared twice")
            }
            ParseErrorKind::BadName(name) => write!(f, "`{name}` is not a valid name"),
            ParseErrorKind::MalformedLine(line) => write!(
                f,
                "malformed line `{line}`, expected `A alpha B beta C -> D`"
            ),
            ParseErrorKind::UnknownName { kind, token } => {
                write!(f, "unknown {kind} name `{token}`")
            }
            ParseErrorKind::DuplicateTuple { tuple, first_line } => {
                write!(
                    f,
                    "duplicate tuple {tuple} (first defined on line {first_line})"
                )
            }
            ParseErrorKind::MissingTuple(tuple) => write!(f, "missing tuple {tuple}"),
            ParseErrorKind::DuplicateMapping { name, first_line } => {
                write!(
                    f,
                    "state `{name}` mapped twice (first on line {first_line})"
                )
            }
            ParseErrorKind::MissingMapping(name) => write!(f, "no image given for state `{name}`"),
            ParseErrorKind::UnexpectedEnd(what) => {
                write!(f, "unexpected end of input, expected {what}")
            }
        }
    }
}
