use std::fmt;

use crate::inequality::InequalityId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Where a parse error was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Position {
    /// Byte offset into compact `d=..;t<r>=..` text.
    Offset(usize),
    /// Line/column reported by the JSON reader (1-based).
    LineColumn(usize, usize),
    /// A JSON member, e.g. `t."5"`.
    Member(String),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Offset(o) => write!(f, "byte {o}"),
            Position::LineColumn(l, c) => write!(f, "line {l}, column {c}"),
            Position::Member(m) => write!(f, "member {m}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: Position, msg: String },

    #[error("invalid t-vector: {0}")]
    InvalidTVector(String),

    #[error("t-vector with d = {0} records no intersection points")]
    NoIntersectionPoints(u32),

    #[error("construction needs at least {min} lines, got d = {d}")]
    TooFewLines { d: u32, min: u32 },

    #[error(
        "all {d} lines pass through one point (t_{d} = {count}); the construction does not apply"
    )]
    PencilPoint { d: u32, count: u64 },

    #[error("cover order n must be at least 2, got {0}")]
    InvalidOrder(u32),

    #[error("invalid search range d in [{d_min}, {d_max}]: {reason}")]
    InvalidRange {
        d_min: u32,
        d_max: u32,
        reason: String,
    },

    #[error("enumeration refused: {estimate} candidates exceed the ceiling of {ceiling}")]
    CeilingExceeded { estimate: u128, ceiling: u128 },

    #[error("{0} is not a Hirzebruch-family inequality")]
    NotHirzebruchFamily(InequalityId),

    #[error("no Hirzebruch-family inequality applies to the {0} class")]
    NoCompanion(String),

    #[error("no Hirzebruch-family inequality yields a certificate for n = {0}")]
    NoCertificate(u32),

    #[error("invalid (n_k) query n = {n}, k = {k}: {reason}")]
    InvalidNk { n: u64, k: u64, reason: String },

    #[error("unknown catalog entry {name:?}; available: {}", available.join(", "))]
    UnknownEntry {
        name: String,
        available: Vec<String>,
    },

    #[error("catalog: {0}")]
    Catalog(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
